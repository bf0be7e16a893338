#pragma once

#include "dualcoh/linalg.hpp"
#include "dualcoh/polynomial.hpp"
#include "dualcoh/rational.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dualcoh {

enum class AlgebraKind { exterior, polynomial_quotient, tensor_product };

std::string to_string(AlgebraKind kind);

struct BuildOptions {
    // Largest admissible number of ambient monomials in a single degree.
    std::size_t monomial_cap = 200000;
    linalg::Kernel kernel = linalg::Kernel::parallel;
};

class GradedAlgebra;
using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

/*
 * A class in a GradedAlgebra, stored in the owner's standard-monomial basis.
 *
 * Basis elements are addressed by a global index: degrees are laid out in
 * increasing order, and within a degree the standard monomials appear in
 * descending graded-lex order. The unit is index 0, the canonical top
 * monomial is the last index.
 */
class Element {
public:
    Element() = default;
    explicit Element(AlgebraPtr owner) : owner_(std::move(owner)) {}
    Element(AlgebraPtr owner, std::map<int, Rational> terms);

    const AlgebraPtr& owner() const { return owner_; }
    const std::map<int, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(int index) const;

    bool is_homogeneous() const;
    // Degree of a nonzero homogeneous element.
    std::optional<int> degree() const;
    Element component(int degree) const;

    Element operator-() const;
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element& operator*=(const Rational& c);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const Rational& c, Element a) { return a *= c; }
    friend Element operator*(Element a, const Rational& c) { return a *= c; }
    friend bool operator==(const Element& a, const Element& b);

    // "(1/1)*e3^1*e5^1 + (-2/1)*e7^1 ..."; "0" for zero.
    std::string to_string() const;

private:
    void check_same_owner(const Element& o) const;
    AlgebraPtr owner_;
    std::map<int, Rational> terms_;
};

// Graded ring product in normal form. Throws UsageMismatch on owner mismatch.
Element multiply(const Element& a, const Element& b);
inline Element operator*(const Element& a, const Element& b) { return multiply(a, b); }

/*
 * Finite-dimensional graded-commutative algebra: the free graded-commutative
 * algebra on the generators modulo the ideal of the relations.
 *
 * The construction runs degree by degree. The degree-d piece is spanned by
 * products x*s of a generator with a standard monomial of degree d - |x|;
 * the relations among these candidates are spanned by the commutation rows
 * x(yt) - (-1)^{|x||y|} y(xt) together with the degree-d relations, and the
 * row-reduced form of that span (columns in descending graded-lex order)
 * marks the leading monomials. The non-pivot columns are the standard
 * monomials of the degree, exactly those of the full ideal.
 */
class GradedAlgebra {
public:
    AlgebraKind kind() const { return kind_; }
    const std::vector<Generator>& generators() const { return gens_; }
    const std::vector<Polynomial>& relations() const { return relations_; }
    const FreeAlgebra& free() const { return free_; }
    std::optional<std::size_t> generator_index(const std::string& name) const;

    int top_degree() const { return top_; }
    std::size_t dim(int degree) const;
    std::size_t total_dimension() const { return monomials_.size(); }
    // Betti numbers, index = degree, 0..top.
    std::vector<std::size_t> poincare_polynomial() const;

    // Standard monomials of a degree, descending graded-lex order.
    std::vector<Exponents> basis(int degree) const;
    int offset(int degree) const;
    int degree_of(int index) const { return degree_of_[static_cast<std::size_t>(index)]; }
    const Exponents& monomial(int index) const { return monomials_[static_cast<std::size_t>(index)]; }
    std::optional<int> index_of(const Exponents& m) const;
    int top_index() const { return static_cast<int>(monomials_.size()) - 1; }

    // The candidate monomials and their row-reduced relation matrix for a
    // degree (columns in the same order as candidates(degree)).
    const std::vector<Exponents>& candidates(int degree) const;
    const linalg::Rref& reduction(int degree) const;

    // x_g * (basis element index), as sparse global coordinates.
    const linalg::SparseVec& left_multiplication(std::size_t g, int index) const;

    // Normal form of a monomial of the free algebra.
    linalg::SparseVec normal_form(const Exponents& m) const;

    std::string describe() const;

    friend class AlgebraBuilder;

private:
    GradedAlgebra() = default;

    AlgebraKind kind_ = AlgebraKind::exterior;
    std::vector<Generator> gens_;
    FreeAlgebra free_{{}};
    std::vector<Polynomial> relations_;
    int top_ = 0;
    std::vector<int> offsets_;  // size top+2
    std::vector<Exponents> monomials_;
    std::vector<int> degree_of_;
    std::map<Exponents, int> index_;
    std::vector<std::vector<Exponents>> candidates_;
    std::vector<linalg::Rref> reductions_;
    std::vector<std::vector<linalg::SparseVec>> left_;  // [generator][index]
};

// Constructors -------------------------------------------------------------

// Λ(e_{d1}, ..., e_{dk}); generators named "e<degree>".
AlgebraPtr exterior_algebra(const std::vector<int>& generator_degrees,
                            const BuildOptions& opts = {});

// Polynomial ring on even-degree generators modulo homogeneous relations.
// expected_top_degree bounds the construction and is cross-checked.
AlgebraPtr polynomial_quotient_algebra(const std::vector<Generator>& generators,
                                       const std::vector<Polynomial>& relations,
                                       int expected_top_degree, const BuildOptions& opts = {});

// A ⊗ B with the Koszul sign rule. Generator names of B that collide with
// names of A get a "'" suffix.
AlgebraPtr tensor_product(const AlgebraPtr& a, const AlgebraPtr& b, const BuildOptions& opts = {});

// Element constructors -----------------------------------------------------

Element zero(const AlgebraPtr& a);
Element unit(const AlgebraPtr& a);
Element basis_element(const AlgebraPtr& a, int index);
Element generator_element(const AlgebraPtr& a, std::size_t g);
Element generator_element(const AlgebraPtr& a, const std::string& name);
// Image of a polynomial of the free algebra on a's generators.
Element from_polynomial(const AlgebraPtr& a, const Polynomial& p);
Element top_class(const AlgebraPtr& a);
Element power(const Element& x, int k);

// Operations ---------------------------------------------------------------

std::vector<std::size_t> poincare_polynomial(const GradedAlgebra& a);

// Coefficient of the canonical top monomial in a*b. Requires homogeneous
// arguments with deg a + deg b = top (zero arguments pair to zero).
Rational pairing(const Element& a, const Element& b);

// w with g*w = v, if one exists. Free coordinates of w are set to zero.
std::optional<Element> is_divisible(const Element& v, const Element& g);
std::optional<Element> is_divisible(const Element& v, std::size_t generator);

// Reduced echelon basis of the degree-d piece of the ideal generated by gens.
std::vector<Element> ideal_basis_in_degree(const std::vector<Element>& gens, int degree);
bool ideal_contains(const std::vector<Element>& gens, const Element& v);

// u in the ideal with pairing(v, u) != 0, if any.
std::optional<Element> pairs_nontrivially_with_ideal(const Element& v,
                                                     const std::vector<Element>& ideal_gens);

// Coordinates of a homogeneous element in the local basis of its degree.
std::vector<Rational> local_coordinates(const Element& v, int degree);
Element from_local(const AlgebraPtr& a, int degree, const std::vector<Rational>& coords);

}  // namespace dualcoh
