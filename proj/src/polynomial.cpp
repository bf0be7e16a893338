#include "dualcoh/polynomial.hpp"

#include <stdexcept>

namespace dualcoh {

int monomial_degree(const Exponents& e, std::span<const Generator> gens)
{
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
        d += e[i] * gens[i].degree;
    return d;
}

std::string monomial_string(const Exponents& e, std::span<const Generator> gens)
{
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += gens[i].name + "^" + std::to_string(e[i]);
    }
    return out.empty() ? "1" : out;
}

int monomial_product(const Exponents& a, const Exponents& b, std::span<const Generator> gens,
                     Exponents& out)
{
    out.assign(gens.size(), 0);
    int swaps = 0;
    int odd_in_a_after = 0;  // odd generators of a with index > current
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (gens[i].odd() && a[i] != 0)
            ++odd_in_a_after;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].odd()) {
            if (a[i] != 0 && b[i] != 0)
                return 0;
            if (a[i] != 0)
                --odd_in_a_after;
            if (b[i] != 0)
                swaps += odd_in_a_after;
        }
        out[i] = a[i] + b[i];
    }
    return swaps % 2 == 0 ? 1 : -1;
}

int left_multiply_sign(int g, const Exponents& m, std::span<const Generator> gens)
{
    const auto gi = static_cast<std::size_t>(g);
    if (!gens[gi].odd())
        return 1;
    if (m[gi] != 0)
        return 0;
    int passed = 0;
    for (std::size_t i = 0; i < gi; ++i)
        if (gens[i].odd() && m[i] != 0)
            ++passed;
    return passed % 2 == 0 ? 1 : -1;
}

void Polynomial::add_term(const Exponents& m, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms.erase(it);
    }
}

FreeAlgebra::FreeAlgebra(std::vector<Generator> gens) : gens_(std::move(gens)) {}

Polynomial FreeAlgebra::one() const { return constant(1); }

Polynomial FreeAlgebra::constant(const Rational& c) const
{
    Polynomial p;
    p.add_term(Exponents(gens_.size(), 0), c);
    return p;
}

Polynomial FreeAlgebra::gen(std::size_t i) const
{
    if (i >= gens_.size())
        throw std::out_of_range("generator index out of range");
    Exponents e(gens_.size(), 0);
    e[i] = 1;
    Polynomial p;
    p.add_term(e, 1);
    return p;
}

Polynomial FreeAlgebra::gen(const std::string& name) const
{
    auto idx = index_of(name);
    if (!idx)
        throw std::invalid_argument("unknown generator '" + name + "'");
    return gen(*idx);
}

std::optional<std::size_t> FreeAlgebra::index_of(const std::string& name) const
{
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name)
            return i;
    return std::nullopt;
}

Polynomial FreeAlgebra::add(const Polynomial& a, const Polynomial& b) const
{
    Polynomial out = a;
    for (const auto& [m, c] : b.terms)
        out.add_term(m, c);
    return out;
}

Polynomial FreeAlgebra::sub(const Polynomial& a, const Polynomial& b) const
{
    Polynomial out = a;
    for (const auto& [m, c] : b.terms)
        out.add_term(m, -c);
    return out;
}

Polynomial FreeAlgebra::scale(const Polynomial& a, const Rational& c) const
{
    Polynomial out;
    if (c == 0)
        return out;
    for (const auto& [m, v] : a.terms)
        out.terms.emplace(m, v * c);
    return out;
}

Polynomial FreeAlgebra::mul(const Polynomial& a, const Polynomial& b) const
{
    Polynomial out;
    Exponents prod;
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) {
            const int s = monomial_product(ma, mb, gens_, prod);
            if (s != 0)
                out.add_term(prod, s > 0 ? Rational(ca * cb) : Rational(-ca * cb));
        }
    return out;
}

Polynomial FreeAlgebra::pow(const Polynomial& a, int k) const
{
    if (k < 0)
        throw std::invalid_argument("negative power");
    Polynomial out = one();
    for (int i = 0; i < k; ++i)
        out = mul(out, a);
    return out;
}

Polynomial FreeAlgebra::component(const Polynomial& a, int degree) const
{
    Polynomial out;
    for (const auto& [m, c] : a.terms)
        if (monomial_degree(m, gens_) == degree)
            out.terms.emplace(m, c);
    return out;
}

std::optional<int> FreeAlgebra::homogeneous_degree(const Polynomial& a) const
{
    std::optional<int> d;
    for (const auto& [m, c] : a.terms) {
        const int md = monomial_degree(m, gens_);
        if (d && *d != md)
            return std::nullopt;
        d = md;
    }
    return d;
}

std::string FreeAlgebra::to_string(const Polynomial& a) const
{
    if (a.is_zero())
        return "0";
    std::string out;
    for (auto it = a.terms.rbegin(); it != a.terms.rend(); ++it) {
        if (!out.empty())
            out += " + ";
        out += "(" + dualcoh::to_string(it->second) + ")*" + monomial_string(it->first, gens_);
    }
    return out;
}

}  // namespace dualcoh
