#pragma once

#include "dualcoh/rational.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dualcoh {

struct Generator {
    std::string name;
    int degree = 0;

    bool odd() const { return degree % 2 != 0; }
    friend bool operator==(const Generator&, const Generator&) = default;
};

// Exponent vector indexed by generator position. Odd generators have
// exponent 0 or 1.
using Exponents = std::vector<int>;

int monomial_degree(const Exponents& e, std::span<const Generator> gens);

// "e3^1*e7^1" with generators in declared order, "1" for the unit.
std::string monomial_string(const Exponents& e, std::span<const Generator> gens);

// a*b in the free graded-commutative ring. Returns the sign (+1, -1, or 0
// when an odd generator would be squared) and writes the product to out.
int monomial_product(const Exponents& a, const Exponents& b, std::span<const Generator> gens,
                     Exponents& out);

// Sign of x_g * m relative to the sorted monomial m + e_g (0 if it vanishes).
int left_multiply_sign(int g, const Exponents& m, std::span<const Generator> gens);

// Graded-lex order within one degree: lexicographic on exponents, first
// declared generator most significant. Larger monomials are leading terms.
inline bool lex_greater(const Exponents& a, const Exponents& b) { return b < a; }

// Element of the free graded-commutative ring on a fixed generator list.
struct Polynomial {
    std::map<Exponents, Rational> terms;

    bool is_zero() const { return terms.empty(); }
    void add_term(const Exponents& m, const Rational& c);
};

// Arithmetic in the free graded-commutative ring. Holds the generator list
// so that monomial products carry the right Koszul sign.
class FreeAlgebra {
public:
    explicit FreeAlgebra(std::vector<Generator> gens);

    const std::vector<Generator>& generators() const { return gens_; }
    std::size_t size() const { return gens_.size(); }

    Polynomial one() const;
    Polynomial constant(const Rational& c) const;
    Polynomial gen(std::size_t i) const;
    Polynomial gen(const std::string& name) const;
    std::optional<std::size_t> index_of(const std::string& name) const;

    Polynomial add(const Polynomial& a, const Polynomial& b) const;
    Polynomial sub(const Polynomial& a, const Polynomial& b) const;
    Polynomial scale(const Polynomial& a, const Rational& c) const;
    Polynomial mul(const Polynomial& a, const Polynomial& b) const;
    Polynomial pow(const Polynomial& a, int k) const;

    // Homogeneous component of the given degree.
    Polynomial component(const Polynomial& a, int degree) const;
    // Degree if a is nonzero and homogeneous.
    std::optional<int> homogeneous_degree(const Polynomial& a) const;

    std::string to_string(const Polynomial& a) const;

private:
    std::vector<Generator> gens_;
};

}  // namespace dualcoh
