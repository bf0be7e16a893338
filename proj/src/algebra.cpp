#include "dualcoh/algebra.hpp"

#include "dualcoh/errors.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>

namespace dualcoh {

using linalg::SparseVec;

std::string to_string(AlgebraKind kind)
{
    switch (kind) {
    case AlgebraKind::exterior:
        return "exterior";
    case AlgebraKind::polynomial_quotient:
        return "polynomial-quotient";
    case AlgebraKind::tensor_product:
        return "tensor-product";
    }
    return "unknown";
}

// ---------------------------------------------------------------------------
// Construction

class AlgebraBuilder {
public:
    static AlgebraPtr build(AlgebraKind kind, std::vector<Generator> gens,
                            std::vector<Polynomial> relations, int expected_top,
                            const BuildOptions& opts);

private:
    static void validate(const std::vector<Generator>& gens, const std::vector<Polynomial>& rels,
                         const FreeAlgebra& free, int expected_top);
    static void check_cap(const std::vector<Generator>& gens, int bound, std::size_t cap);
};

namespace {

using DescendingMonomials = std::map<Exponents, int, std::greater<Exponents>>;

void accumulate(std::map<int, Rational>& acc, int col, const Rational& v)
{
    auto [it, inserted] = acc.try_emplace(col, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0)
            acc.erase(it);
    }
}

SparseVec to_sparse(const std::map<int, Rational>& acc)
{
    SparseVec out;
    out.reserve(acc.size());
    for (const auto& [c, v] : acc)
        out.push_back({c, v});
    return out;
}

}  // namespace

void AlgebraBuilder::validate(const std::vector<Generator>& gens, const std::vector<Polynomial>& rels,
                              const FreeAlgebra& free, int expected_top)
{
    if (gens.empty())
        throw InvalidPresentation("algebra needs at least one generator");
    std::set<std::string> names;
    for (const auto& g : gens) {
        if (g.degree <= 0)
            throw InvalidPresentation("generator '" + g.name + "' must have positive degree");
        if (g.name.empty() || !names.insert(g.name).second)
            throw InvalidPresentation("generator names must be nonempty and distinct ('" + g.name + "')");
    }
    if (expected_top < 0)
        throw InvalidPresentation("expected top degree must be nonnegative");
    for (const auto& r : rels) {
        for (const auto& [m, c] : r.terms) {
            if (m.size() != gens.size())
                throw InvalidPresentation("relation monomial has wrong number of exponents");
            for (std::size_t i = 0; i < m.size(); ++i)
                if (m[i] < 0 || (gens[i].odd() && m[i] > 1))
                    throw InvalidPresentation("relation monomial is not a monomial of the free algebra");
        }
        if (r.is_zero())
            continue;
        const auto d = free.homogeneous_degree(r);
        if (!d)
            throw InvalidPresentation("relation is not homogeneous: " + free.to_string(r));
        if (*d == 0)
            throw InvalidPresentation("relation of degree 0: " + free.to_string(r));
    }
}

void AlgebraBuilder::check_cap(const std::vector<Generator>& gens, int bound, std::size_t cap)
{
    // Ambient monomial count per degree, saturating at cap + 1.
    const std::size_t sat = cap + 1;
    std::vector<std::size_t> count(static_cast<std::size_t>(bound) + 1, 0);
    count[0] = 1;
    for (const auto& g : gens) {
        const auto step = static_cast<std::size_t>(g.degree);
        if (g.odd()) {
            for (std::size_t d = count.size(); d-- > step;)
                count[d] = std::min(sat, count[d] + count[d - step]);
        } else {
            for (std::size_t d = step; d < count.size(); ++d)
                count[d] = std::min(sat, count[d] + count[d - step]);
        }
    }
    for (std::size_t d = 0; d < count.size(); ++d)
        if (count[d] > cap)
            throw ResourceError("degree " + std::to_string(d) + " has more than " + std::to_string(cap) +
                                " ambient monomials (cap exceeded)");
}

AlgebraPtr AlgebraBuilder::build(AlgebraKind kind, std::vector<Generator> gens,
                                 std::vector<Polynomial> relations, int expected_top,
                                 const BuildOptions& opts)
{
    FreeAlgebra free(gens);
    validate(gens, relations, free, expected_top);
    std::erase_if(relations, [](const Polynomial& r) { return r.is_zero(); });

    int max_gen = 0;
    for (const auto& g : gens)
        max_gen = std::max(max_gen, g.degree);
    const int bound = expected_top + max_gen;
    check_cap(gens, bound, opts.monomial_cap);

    std::shared_ptr<GradedAlgebra> alg(new GradedAlgebra());
    GradedAlgebra& A = *alg;
    A.kind_ = kind;
    A.gens_ = gens;
    A.free_ = free;
    A.relations_ = relations;
    A.top_ = expected_top;
    A.left_.assign(gens.size(), {});

    std::vector<std::vector<const Polynomial*>> rel_by_degree(static_cast<std::size_t>(bound) + 1);
    for (const auto& r : relations) {
        const int d = *free.homogeneous_degree(r);
        if (d <= bound)
            rel_by_degree[static_cast<std::size_t>(d)].push_back(&r);
    }

    // Global index ranges of each processed degree; degrees above the
    // expected top must come out empty.
    std::vector<int> begin(static_cast<std::size_t>(bound) + 2, 0);
    auto range = [&](int d) -> std::pair<int, int> {
        if (d < 0 || d > expected_top)
            return {0, 0};
        return {begin[static_cast<std::size_t>(d)], begin[static_cast<std::size_t>(d) + 1]};
    };

    // Degree 0.
    A.monomials_.push_back(Exponents(gens.size(), 0));
    A.degree_of_.push_back(0);
    begin[0] = 0;
    begin[1] = 1;
    A.candidates_.push_back({Exponents(gens.size(), 0)});
    A.reductions_.push_back(linalg::Rref{1, {}, {}});
    for (auto& t : A.left_)
        t.resize(1);

    for (int d = 1; d <= bound; ++d) {
        // Candidate monomials x*s, s standard in degree d - |x|.
        DescendingMonomials cand;
        for (std::size_t g = 0; g < gens.size(); ++g) {
            const auto [lo, hi] = range(d - gens[g].degree);
            for (int s = lo; s < hi; ++s) {
                if (left_multiply_sign(static_cast<int>(g), A.monomials_[static_cast<std::size_t>(s)], gens) == 0)
                    continue;
                Exponents mu = A.monomials_[static_cast<std::size_t>(s)];
                ++mu[g];
                cand.emplace(std::move(mu), 0);
            }
        }
        int ncols = 0;
        for (auto& [m, col] : cand)
            col = ncols++;

        auto add_product = [&](std::map<int, Rational>& acc, std::size_t g, const SparseVec& v,
                               const Rational& coef) {
            for (const auto& e : v) {
                const Exponents& s = A.monomials_[static_cast<std::size_t>(e.col)];
                const int sign = left_multiply_sign(static_cast<int>(g), s, gens);
                if (sign == 0)
                    continue;
                Exponents mu = s;
                ++mu[g];
                const int col = cand.at(mu);
                accumulate(acc, col, sign > 0 ? Rational(coef * e.value) : Rational(-coef * e.value));
            }
        };

        std::vector<SparseVec> rows;
        // Degree-d relations, lifted through their first generator.
        for (const Polynomial* r : rel_by_degree[static_cast<std::size_t>(d)]) {
            std::map<int, Rational> acc;
            for (const auto& [m, c] : r->terms) {
                std::size_t first = 0;
                while (m[first] == 0)
                    ++first;
                Exponents rest = m;
                --rest[first];
                add_product(acc, first, A.normal_form(rest), c);
            }
            if (!acc.empty())
                rows.push_back(to_sparse(acc));
        }
        // Commutation rows x(yt) - (-1)^{|x||y|} y(xt).
        for (std::size_t x = 0; x < gens.size(); ++x) {
            for (std::size_t y = x; y < gens.size(); ++y) {
                if (x == y && !gens[x].odd())
                    continue;
                const int e = d - gens[x].degree - gens[y].degree;
                if (e < 0)
                    continue;
                const Rational eps = (gens[x].odd() && gens[y].odd()) ? Rational(-1) : Rational(1);
                const auto [lo, hi] = range(e);
                for (int t = lo; t < hi; ++t) {
                    std::map<int, Rational> acc;
                    add_product(acc, x, A.left_[y][static_cast<std::size_t>(t)], 1);
                    add_product(acc, y, A.left_[x][static_cast<std::size_t>(t)], -eps);
                    if (!acc.empty())
                        rows.push_back(to_sparse(acc));
                }
            }
        }

        linalg::Rref red = linalg::rref(rows, ncols, opts.kernel);
        const std::vector<int> free_cols = red.free_columns();

        if (d > expected_top) {
            if (!free_cols.empty())
                throw InconsistentPresentation("nonzero classes in degree " + std::to_string(d) +
                                               " above the expected top degree " +
                                               std::to_string(expected_top));
            continue;
        }

        // Register the standard monomials of degree d.
        std::vector<const Exponents*> by_col(static_cast<std::size_t>(ncols));
        for (const auto& [m, col] : cand)
            by_col[static_cast<std::size_t>(col)] = &m;
        const int base = static_cast<int>(A.monomials_.size());
        std::vector<int> global_of_col(static_cast<std::size_t>(ncols), -1);
        for (std::size_t k = 0; k < free_cols.size(); ++k) {
            const auto col = static_cast<std::size_t>(free_cols[k]);
            global_of_col[col] = base + static_cast<int>(k);
            A.monomials_.push_back(*by_col[col]);
            A.degree_of_.push_back(d);
        }
        begin[static_cast<std::size_t>(d) + 1] = static_cast<int>(A.monomials_.size());

        // Normal form of each candidate column.
        std::vector<SparseVec> nf(static_cast<std::size_t>(ncols));
        for (int col : free_cols)
            nf[static_cast<std::size_t>(col)] = {{global_of_col[static_cast<std::size_t>(col)], Rational(1)}};
        for (std::size_t i = 0; i < red.rows.size(); ++i) {
            SparseVec v;
            for (std::size_t k = 1; k < red.rows[i].size(); ++k) {
                const auto& e = red.rows[i][k];
                v.push_back({global_of_col[static_cast<std::size_t>(e.col)], -e.value});
            }
            nf[static_cast<std::size_t>(red.pivots[i])] = std::move(v);
        }

        for (auto& t : A.left_)
            t.resize(A.monomials_.size());
        for (std::size_t g = 0; g < gens.size(); ++g) {
            const auto [lo, hi] = range(d - gens[g].degree);
            for (int s = lo; s < hi; ++s) {
                const Exponents& sm = A.monomials_[static_cast<std::size_t>(s)];
                const int sign = left_multiply_sign(static_cast<int>(g), sm, gens);
                if (sign == 0)
                    continue;
                Exponents mu = sm;
                ++mu[g];
                const SparseVec& v = nf[static_cast<std::size_t>(cand.at(mu))];
                A.left_[g][static_cast<std::size_t>(s)] = sign > 0 ? v : linalg::scaled(v, -1);
            }
        }

        std::vector<Exponents> cand_list(static_cast<std::size_t>(ncols));
        for (auto& [m, col] : cand)
            cand_list[static_cast<std::size_t>(col)] = m;
        A.candidates_.push_back(std::move(cand_list));
        A.reductions_.push_back(std::move(red));
    }

    A.offsets_.assign(begin.begin(), begin.begin() + expected_top + 2);
    for (std::size_t i = 0; i < A.monomials_.size(); ++i)
        A.index_.emplace(A.monomials_[i], static_cast<int>(i));

    if (A.dim(expected_top) != 1)
        throw InconsistentPresentation("top degree " + std::to_string(expected_top) + " has dimension " +
                                       std::to_string(A.dim(expected_top)) + ", expected 1");
    return alg;
}

// ---------------------------------------------------------------------------
// GradedAlgebra

std::optional<std::size_t> GradedAlgebra::generator_index(const std::string& name) const
{
    return free_.index_of(name);
}

std::size_t GradedAlgebra::dim(int degree) const
{
    if (degree < 0 || degree > top_)
        return 0;
    const auto d = static_cast<std::size_t>(degree);
    return static_cast<std::size_t>(offsets_[d + 1] - offsets_[d]);
}

std::vector<std::size_t> GradedAlgebra::poincare_polynomial() const
{
    std::vector<std::size_t> out;
    for (int d = 0; d <= top_; ++d)
        out.push_back(dim(d));
    return out;
}

std::vector<Exponents> GradedAlgebra::basis(int degree) const
{
    std::vector<Exponents> out;
    if (degree < 0 || degree > top_)
        return out;
    for (int i = offset(degree); i < offset(degree + 1); ++i)
        out.push_back(monomials_[static_cast<std::size_t>(i)]);
    return out;
}

int GradedAlgebra::offset(int degree) const
{
    if (degree <= 0)
        return 0;
    if (degree > top_)
        return static_cast<int>(monomials_.size());
    return offsets_[static_cast<std::size_t>(degree)];
}

std::optional<int> GradedAlgebra::index_of(const Exponents& m) const
{
    auto it = index_.find(m);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

const std::vector<Exponents>& GradedAlgebra::candidates(int degree) const
{
    return candidates_.at(static_cast<std::size_t>(degree));
}

const linalg::Rref& GradedAlgebra::reduction(int degree) const
{
    return reductions_.at(static_cast<std::size_t>(degree));
}

const linalg::SparseVec& GradedAlgebra::left_multiplication(std::size_t g, int index) const
{
    return left_.at(g).at(static_cast<std::size_t>(index));
}

namespace {

SparseVec left_apply(const GradedAlgebra& A, std::size_t g, const SparseVec& v)
{
    std::map<int, Rational> acc;
    for (const auto& e : v)
        for (const auto& t : A.left_multiplication(g, e.col))
            accumulate(acc, t.col, e.value * t.value);
    return to_sparse(acc);
}

SparseVec right_apply(const GradedAlgebra& A, std::size_t g, const SparseVec& v)
{
    const bool godd = A.generators()[g].odd();
    std::map<int, Rational> acc;
    for (const auto& e : v) {
        const bool flip = godd && (A.degree_of(e.col) % 2 != 0);
        for (const auto& t : A.left_multiplication(g, e.col))
            accumulate(acc, t.col, flip ? Rational(-e.value * t.value) : Rational(e.value * t.value));
    }
    return to_sparse(acc);
}

}  // namespace

SparseVec GradedAlgebra::normal_form(const Exponents& m) const
{
    if (m.size() != gens_.size())
        throw UsageMismatch("monomial has wrong number of exponents");
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] < 0)
            throw UsageMismatch("negative exponent");
        else if (gens_[i].odd() && m[i] > 1)
            return {};
    if (monomial_degree(m, gens_) > top_)
        return {};
    // m = x_{i1} (x_{i2} (... (x_{ik} 1))) with i1 <= ... <= ik.
    SparseVec v{{0, Rational(1)}};
    for (std::size_t g = gens_.size(); g-- > 0;)
        for (int k = 0; k < m[g]; ++k) {
            v = left_apply(*this, g, v);
            if (v.empty())
                return v;
        }
    return v;
}

std::string GradedAlgebra::describe() const
{
    std::string gens;
    for (const auto& g : gens_) {
        if (!gens.empty())
            gens += ", ";
        gens += g.name + ":" + std::to_string(g.degree);
    }
    return to_string(kind_) + " algebra on (" + gens + "), top degree " + std::to_string(top_) +
           ", total dimension " + std::to_string(total_dimension());
}

// ---------------------------------------------------------------------------
// Element

Element::Element(AlgebraPtr owner, std::map<int, Rational> terms)
    : owner_(std::move(owner)), terms_(std::move(terms))
{
    std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

Rational Element::coefficient(int index) const
{
    auto it = terms_.find(index);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool Element::is_homogeneous() const
{
    if (terms_.empty())
        return true;
    return owner_->degree_of(terms_.begin()->first) == owner_->degree_of(terms_.rbegin()->first);
}

std::optional<int> Element::degree() const
{
    if (terms_.empty() || !is_homogeneous())
        return std::nullopt;
    return owner_->degree_of(terms_.begin()->first);
}

Element Element::component(int degree) const
{
    std::map<int, Rational> out;
    for (const auto& [i, c] : terms_)
        if (owner_->degree_of(i) == degree)
            out.emplace(i, c);
    return Element(owner_, std::move(out));
}

void Element::check_same_owner(const Element& o) const
{
    if (owner_ != o.owner_)
        throw UsageMismatch("elements belong to different algebras");
}

Element Element::operator-() const
{
    Element out = *this;
    for (auto& [i, c] : out.terms_)
        c = -c;
    return out;
}

Element& Element::operator+=(const Element& o)
{
    check_same_owner(o);
    for (const auto& [i, c] : o.terms_)
        accumulate(terms_, i, c);
    return *this;
}

Element& Element::operator-=(const Element& o)
{
    check_same_owner(o);
    for (const auto& [i, c] : o.terms_)
        accumulate(terms_, i, -c);
    return *this;
}

Element& Element::operator*=(const Rational& c)
{
    if (c == 0)
        terms_.clear();
    for (auto& [i, v] : terms_)
        v *= c;
    return *this;
}

bool operator==(const Element& a, const Element& b)
{
    if (a.owner_ != b.owner_)
        return false;
    return a.terms_ == b.terms_;
}

std::string Element::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& [i, c] : terms_) {
        if (!out.empty())
            out += " + ";
        out += "(" + dualcoh::to_string(c) + ")*" + monomial_string(owner_->monomial(i), owner_->generators());
    }
    return out;
}

Element multiply(const Element& a, const Element& b)
{
    if (a.owner() != b.owner() || !a.owner())
        throw UsageMismatch("multiply: elements belong to different algebras");
    const GradedAlgebra& A = *a.owner();
    SparseVec av;
    for (const auto& [i, c] : a.terms())
        av.push_back({i, c});
    std::map<int, Rational> acc;
    for (const auto& [j, cb] : b.terms()) {
        const Exponents& m = A.monomial(j);
        SparseVec v = av;
        for (std::size_t g = 0; g < m.size() && !v.empty(); ++g)
            for (int k = 0; k < m[g] && !v.empty(); ++k)
                v = right_apply(A, g, v);
        for (const auto& e : v)
            accumulate(acc, e.col, cb * e.value);
    }
    return Element(a.owner(), std::move(acc));
}

// ---------------------------------------------------------------------------
// Constructors

AlgebraPtr exterior_algebra(const std::vector<int>& generator_degrees, const BuildOptions& opts)
{
    if (generator_degrees.empty())
        throw InvalidPresentation("exterior algebra needs at least one generator");
    std::vector<Generator> gens;
    int top = 0;
    for (std::size_t i = 0; i < generator_degrees.size(); ++i) {
        const int d = generator_degrees[i];
        if (d <= 0 || d % 2 == 0)
            throw InvalidPresentation("exterior generator degree " + std::to_string(d) + " is not odd positive");
        if (i > 0 && d <= generator_degrees[i - 1])
            throw InvalidPresentation("exterior generator degrees must be strictly increasing");
        gens.push_back({"e" + std::to_string(d), d});
        top += d;
    }
    return AlgebraBuilder::build(AlgebraKind::exterior, std::move(gens), {}, top, opts);
}

AlgebraPtr polynomial_quotient_algebra(const std::vector<Generator>& generators,
                                       const std::vector<Polynomial>& relations, int expected_top_degree,
                                       const BuildOptions& opts)
{
    for (const auto& g : generators)
        if (g.degree <= 0 || g.odd())
            throw InvalidPresentation("polynomial generator '" + g.name + "' must have even positive degree");
    return AlgebraBuilder::build(AlgebraKind::polynomial_quotient, generators, relations, expected_top_degree,
                                 opts);
}

AlgebraPtr tensor_product(const AlgebraPtr& a, const AlgebraPtr& b, const BuildOptions& opts)
{
    std::vector<Generator> gens = a->generators();
    std::set<std::string> names;
    for (const auto& g : gens)
        names.insert(g.name);
    for (Generator g : b->generators()) {
        while (names.count(g.name))
            g.name += "'";
        names.insert(g.name);
        gens.push_back(std::move(g));
    }
    const std::size_t na = a->generators().size();
    const std::size_t n = gens.size();
    std::vector<Polynomial> rels;
    for (const auto& r : a->relations()) {
        Polynomial p;
        for (const auto& [m, c] : r.terms) {
            Exponents e(n, 0);
            std::copy(m.begin(), m.end(), e.begin());
            p.add_term(e, c);
        }
        rels.push_back(std::move(p));
    }
    for (const auto& r : b->relations()) {
        Polynomial p;
        for (const auto& [m, c] : r.terms) {
            Exponents e(n, 0);
            std::copy(m.begin(), m.end(), e.begin() + static_cast<long>(na));
            p.add_term(e, c);
        }
        rels.push_back(std::move(p));
    }
    return AlgebraBuilder::build(AlgebraKind::tensor_product, std::move(gens), std::move(rels),
                                 a->top_degree() + b->top_degree(), opts);
}

Element zero(const AlgebraPtr& a) { return Element(a); }

Element unit(const AlgebraPtr& a) { return basis_element(a, 0); }

Element basis_element(const AlgebraPtr& a, int index)
{
    if (index < 0 || index >= static_cast<int>(a->total_dimension()))
        throw std::out_of_range("basis index out of range");
    return Element(a, {{index, Rational(1)}});
}

Element generator_element(const AlgebraPtr& a, std::size_t g)
{
    if (g >= a->generators().size())
        throw std::out_of_range("generator index out of range");
    Exponents e(a->generators().size(), 0);
    e[g] = 1;
    std::map<int, Rational> t;
    for (const auto& x : a->normal_form(e))
        t.emplace(x.col, x.value);
    return Element(a, std::move(t));
}

Element generator_element(const AlgebraPtr& a, const std::string& name)
{
    auto g = a->generator_index(name);
    if (!g)
        throw UsageMismatch("unknown generator '" + name + "'");
    return generator_element(a, *g);
}

Element from_polynomial(const AlgebraPtr& a, const Polynomial& p)
{
    std::map<int, Rational> acc;
    for (const auto& [m, c] : p.terms)
        for (const auto& x : a->normal_form(m))
            accumulate(acc, x.col, c * x.value);
    return Element(a, std::move(acc));
}

Element top_class(const AlgebraPtr& a) { return basis_element(a, a->top_index()); }

Element power(const Element& x, int k)
{
    if (k < 0)
        throw std::invalid_argument("negative power");
    Element out = unit(x.owner());
    for (int i = 0; i < k; ++i)
        out = multiply(out, x);
    return out;
}

// ---------------------------------------------------------------------------
// Operations

std::vector<std::size_t> poincare_polynomial(const GradedAlgebra& a) { return a.poincare_polynomial(); }

Rational pairing(const Element& a, const Element& b)
{
    if (a.owner() != b.owner())
        throw UsageMismatch("pairing: elements belong to different algebras");
    if (!a.is_homogeneous() || !b.is_homogeneous())
        throw UsageMismatch("pairing: arguments must be homogeneous");
    if (a.is_zero() || b.is_zero())
        return 0;
    const int top = a.owner()->top_degree();
    if (*a.degree() + *b.degree() != top)
        throw UsageMismatch("pairing: degrees " + std::to_string(*a.degree()) + " + " +
                            std::to_string(*b.degree()) + " do not add up to top degree " +
                            std::to_string(top));
    return multiply(a, b).coefficient(a.owner()->top_index());
}

std::vector<Rational> local_coordinates(const Element& v, int degree)
{
    const GradedAlgebra& A = *v.owner();
    const int lo = A.offset(degree);
    std::vector<Rational> out(A.dim(degree), Rational(0));
    for (const auto& [i, c] : v.terms()) {
        if (A.degree_of(i) != degree)
            throw UsageMismatch("element has a component outside degree " + std::to_string(degree));
        out[static_cast<std::size_t>(i - lo)] = c;
    }
    return out;
}

Element from_local(const AlgebraPtr& a, int degree, const std::vector<Rational>& coords)
{
    std::map<int, Rational> t;
    const int lo = a->offset(degree);
    for (std::size_t k = 0; k < coords.size(); ++k)
        if (coords[k] != 0)
            t.emplace(lo + static_cast<int>(k), coords[k]);
    return Element(a, std::move(t));
}

std::optional<Element> is_divisible(const Element& v, const Element& g)
{
    if (v.owner() != g.owner())
        throw UsageMismatch("is_divisible: elements belong to different algebras");
    if (!v.is_homogeneous() || !g.is_homogeneous())
        throw UsageMismatch("is_divisible: arguments must be homogeneous");
    const AlgebraPtr& A = v.owner();
    if (v.is_zero())
        return zero(A);
    if (g.is_zero())
        return std::nullopt;
    const int dv = *v.degree();
    const int dw = dv - *g.degree();
    if (dw < 0)
        return std::nullopt;
    const auto n = A->dim(dw);
    const auto rows = A->dim(dv);
    // Column i of the system is g * b_i in degree dv coordinates.
    std::vector<linalg::SparseVec> eqs(rows);
    const int lo = A->offset(dv);
    for (std::size_t i = 0; i < n; ++i) {
        const Element prod = multiply(g, basis_element(A, A->offset(dw) + static_cast<int>(i)));
        for (const auto& [k, c] : prod.terms())
            eqs[static_cast<std::size_t>(k - lo)].push_back({static_cast<int>(i), c});
    }
    const auto rhs = local_coordinates(v, dv);
    auto sol = linalg::solve(eqs, rhs, static_cast<int>(n));
    if (!sol)
        return std::nullopt;
    return from_local(A, dw, *sol);
}

std::optional<Element> is_divisible(const Element& v, std::size_t generator)
{
    return is_divisible(v, generator_element(v.owner(), generator));
}

std::vector<Element> ideal_basis_in_degree(const std::vector<Element>& gens, int degree)
{
    std::vector<Element> out;
    if (gens.empty())
        return out;
    const AlgebraPtr& A = gens.front().owner();
    if (degree < 0 || degree > A->top_degree())
        return out;
    const int lo = A->offset(degree);
    std::vector<linalg::SparseVec> rows;
    for (const auto& f : gens) {
        if (f.owner() != A)
            throw UsageMismatch("ideal generators belong to different algebras");
        if (!f.is_homogeneous())
            throw UsageMismatch("ideal generators must be homogeneous");
        if (f.is_zero())
            continue;
        const int e = degree - *f.degree();
        if (e < 0)
            continue;
        for (int s = A->offset(e); s < A->offset(e + 1); ++s) {
            const Element p = multiply(basis_element(A, s), f);
            linalg::SparseVec row;
            for (const auto& [k, c] : p.terms())
                row.push_back({k - lo, c});
            if (!row.empty())
                rows.push_back(std::move(row));
        }
    }
    const auto red = linalg::rref(rows, static_cast<int>(A->dim(degree)), linalg::Kernel::serial);
    for (const auto& r : red.rows) {
        std::map<int, Rational> t;
        for (const auto& e : r)
            t.emplace(lo + e.col, e.value);
        out.emplace_back(A, std::move(t));
    }
    return out;
}

bool ideal_contains(const std::vector<Element>& gens, const Element& v)
{
    if (!v.is_homogeneous())
        throw UsageMismatch("ideal_contains: element must be homogeneous");
    if (v.is_zero())
        return true;
    const int d = *v.degree();
    const auto basis = ideal_basis_in_degree(gens, d);
    linalg::Rref red;
    red.ncols = static_cast<int>(v.owner()->dim(d));
    const int lo = v.owner()->offset(d);
    for (const auto& b : basis) {
        linalg::SparseVec row;
        for (const auto& [k, c] : b.terms())
            row.push_back({k - lo, c});
        red.pivots.push_back(row.front().col);
        red.rows.push_back(std::move(row));
    }
    linalg::SparseVec target;
    for (const auto& [k, c] : v.terms())
        target.push_back({k - lo, c});
    return red.reduce(target).empty();
}

std::optional<Element> pairs_nontrivially_with_ideal(const Element& v, const std::vector<Element>& ideal_gens)
{
    if (!v.is_homogeneous())
        throw UsageMismatch("pairs_nontrivially_with_ideal: element must be homogeneous");
    if (v.is_zero())
        return std::nullopt;
    const int c = v.owner()->top_degree() - *v.degree();
    for (const auto& u : ideal_basis_in_degree(ideal_gens, c))
        if (pairing(v, u) != 0)
            return u;
    return std::nullopt;
}

}  // namespace dualcoh
