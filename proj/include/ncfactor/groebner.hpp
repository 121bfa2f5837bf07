#pragma once

// Polynomial systems in the extension symbols: multivariate division,
// Buchberger's algorithm and reduced lex Groebner bases, plus the two
// solving back ends (exhaustive enumeration over F_p, rational points of
// zero-dimensional systems over Q).

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cpoly.hpp"
#include "univariate.hpp"

namespace ncf {

// Values for symbols 0..s-1, in symbol order.
template <class Field>
using Assignment = std::vector<typename Field::element_type>;

template <CoefficientField Field>
class ConstraintSystem {
public:
    using Poly = CPoly<Field>;

    explicit ConstraintSystem(Field f = Field{}) : field_(std::move(f)) {}
    ConstraintSystem(Field f, std::vector<std::string> symbols, std::vector<Poly> equations)
        : field_(std::move(f)), symbols_(std::move(symbols))
    {
        for (auto &e : equations) {
            add_equation(std::move(e));
        }
    }

    const Field &field() const noexcept { return field_; }
    const std::vector<std::string> &symbols() const noexcept { return symbols_; }
    const std::vector<Poly> &equations() const noexcept { return equations_; }
    bool empty() const noexcept { return equations_.empty(); }

    std::size_t add_symbol(std::string name)
    {
        symbols_.push_back(std::move(name));
        return symbols_.size() - 1;
    }

    // Each equation reads `e = 0`; zero equations are dropped.
    void add_equation(Poly e)
    {
        if (e.symbol_span() > symbols_.size()) {
            throw ContextMismatch("equation uses an undeclared symbol");
        }
        if (!(e.field() == field_)) {
            throw ContextMismatch("equation over a different field");
        }
        if (!e.is_zero()) {
            equations_.push_back(std::move(e));
        }
    }

    // True when some equation is a nonzero constant.
    bool trivially_inconsistent() const
    {
        return std::any_of(equations_.begin(), equations_.end(), [](const Poly &e) { return e.is_constant(); });
    }

private:
    Field field_;
    std::vector<std::string> symbols_;
    std::vector<Poly> equations_;
};

namespace detail {

template <class Field>
CPoly<Field> mul_term(const CPoly<Field> &p, const CMonomial &m, const typename Field::element_type &c)
{
    CPoly<Field> r(p.field());
    for (const auto &[pm, pc] : p.terms()) {
        r.add_term(pm * m, pc * c);
    }
    return r;
}

} // namespace detail

// Full multivariate division remainder of f by `basis` under lex order.
template <class Field>
CPoly<Field> normal_form(const CPoly<Field> &f, const std::vector<CPoly<Field>> &basis)
{
    for (const auto &g : basis) {
        if (g.is_zero()) {
            throw PreconditionError("normal form against a zero basis element");
        }
        if (!(g.field() == f.field())) {
            throw ContextMismatch("normal form across fields");
        }
    }
    CPoly<Field> rem(f.field());
    CPoly<Field> p = f;
    while (!p.is_zero()) {
        const CMonomial m = p.leading_monomial();
        const auto c = p.leading_coefficient();
        bool reduced = false;
        for (const auto &g : basis) {
            if (g.leading_monomial().divides(m)) {
                p -= detail::mul_term(g, m / g.leading_monomial(), c / g.leading_coefficient());
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.add_term(m, c);
            p -= CPoly<Field>::monomial(p.field(), m, c);
        }
    }
    return rem;
}

template <class Field>
CPoly<Field> s_polynomial(const CPoly<Field> &f, const CPoly<Field> &g)
{
    const CMonomial l = lcm(f.leading_monomial(), g.leading_monomial());
    return detail::mul_term(f, l / f.leading_monomial(), f.leading_coefficient().inverse()) -
           detail::mul_term(g, l / g.leading_monomial(), g.leading_coefficient().inverse());
}

// Buchberger's algorithm with the coprime-leading-monomial criterion.
template <class Field>
std::vector<CPoly<Field>> buchberger(const std::vector<CPoly<Field>> &gens)
{
    std::vector<CPoly<Field>> basis;
    for (const auto &g : gens) {
        if (!g.is_zero()) {
            basis.push_back(g);
        }
    }
    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t j = 0; j < basis.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            pairs.emplace_back(i, j);
        }
    }
    while (!pairs.empty()) {
        const auto [i, j] = pairs.front();
        pairs.pop_front();
        if (coprime(basis[i].leading_monomial(), basis[j].leading_monomial())) {
            continue;
        }
        auto r = normal_form(s_polynomial(basis[i], basis[j]), basis);
        if (r.is_zero()) {
            continue;
        }
        basis.push_back(std::move(r));
        for (std::size_t k = 0; k + 1 < basis.size(); ++k) {
            pairs.emplace_back(k, basis.size() - 1);
        }
    }
    return basis;
}

template <class Field>
bool is_groebner_basis(const std::vector<CPoly<Field>> &basis)
{
    for (std::size_t j = 0; j < basis.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (!normal_form(s_polynomial(basis[i], basis[j]), basis).is_zero()) {
                return false;
            }
        }
    }
    return true;
}

// The unique reduced lex Groebner basis, sorted by descending leading
// monomial. Throws NotGroebnerBasis when the input is not a Groebner basis.
template <class Field>
std::vector<CPoly<Field>> reduce_gb(const std::vector<CPoly<Field>> &input)
{
    std::vector<CPoly<Field>> basis;
    for (const auto &g : input) {
        if (!g.is_zero()) {
            basis.push_back(g);
        }
    }
    if (!is_groebner_basis(basis)) {
        throw NotGroebnerBasis("input to reduce_gb is not a Groebner basis");
    }
    std::sort(basis.begin(), basis.end(),
              [](const auto &a, const auto &b) { return a.leading_monomial() < b.leading_monomial(); });
    std::vector<CPoly<Field>> minimal;
    for (const auto &g : basis) {
        const bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const auto &h) {
            return h.leading_monomial().divides(g.leading_monomial());
        });
        if (!redundant) {
            minimal.push_back(g.monic());
        }
    }
    std::vector<CPoly<Field>> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<CPoly<Field>> others;
        for (std::size_t j = 0; j < minimal.size(); ++j) {
            if (j != i) {
                others.push_back(minimal[j]);
            }
        }
        const auto &g = minimal[i];
        auto lead = CPoly<Field>::monomial(g.field(), g.leading_monomial(), g.leading_coefficient());
        reduced.push_back(lead + normal_form(g - lead, others));
    }
    std::sort(reduced.begin(), reduced.end(),
              [](const auto &a, const auto &b) { return a.leading_monomial() > b.leading_monomial(); });
    return reduced;
}

template <class Field>
std::vector<CPoly<Field>> reduced_groebner_basis(const std::vector<CPoly<Field>> &gens)
{
    return reduce_gb(buchberger(gens));
}

// Every point of F_p^s (s = number of symbols) where all equations vanish,
// in lex order over assignment tuples (symbol 0 most significant).
template <class Field>
std::vector<Assignment<Field>> enumerate_solutions(const ConstraintSystem<Field> &sys,
                                                   unsigned long long cap = 1'000'000)
{
    if constexpr (!Field::is_finite) {
        throw UnsupportedField("solution enumeration needs a finite field; use the reduced basis over Q");
    } else {
        const auto &F = sys.field();
        const std::size_t s = sys.symbols().size();
        unsigned long long space = 1;
        for (std::size_t i = 0; i < s; ++i) {
            if (space > cap / F.size()) {
                throw SearchSpaceTooLarge("enumerating " + std::to_string(F.size()) + "^" + std::to_string(s) +
                                              " points exceeds the cap of " + std::to_string(cap),
                                          cap);
            }
            space *= F.size();
        }
        // Equations grouped by the last symbol they need, so partial
        // assignments are pruned as early as possible.
        std::vector<std::vector<const CPoly<Field> *>> ready(s + 1);
        for (const auto &e : sys.equations()) {
            ready[e.symbol_span()].push_back(&e);
        }
        std::vector<Assignment<Field>> out;
        Assignment<Field> point(s, F.zero());
        auto holds = [&](std::size_t depth) {
            return std::all_of(ready[depth].begin(), ready[depth].end(),
                               [&](const CPoly<Field> *e) { return e->evaluate(point).is_zero(); });
        };
        auto recurse = [&](auto &self, std::size_t depth) -> void {
            if (!holds(depth)) {
                return;
            }
            if (depth == s) {
                out.push_back(point);
                return;
            }
            for (std::uint64_t v = 0; v < F.size(); ++v) {
                point[depth] = F.element(v);
                self(self, depth + 1);
            }
        };
        recurse(recurse, 0);
        return out;
    }
}

namespace detail {

inline std::vector<BigInt> positive_divisors(BigInt n, const BigInt &limit)
{
    if (n < 0) {
        n = -n;
    }
    if (n > limit) {
        throw SearchSpaceTooLarge("integer too large for rational root search", limit.convert_to<unsigned long long>());
    }
    std::vector<BigInt> small, large;
    for (BigInt d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) {
                large.push_back(n / d);
            }
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// Rational roots (without multiplicity, ascending) of a nonzero polynomial.
inline std::vector<Rational> rational_roots(const UPoly<RationalField> &f)
{
    std::vector<Rational> roots;
    if (f.degree() <= 0) {
        return roots;
    }
    // Strip the root at zero, then clear denominators.
    std::size_t low = 0;
    while (f.coefficient(low).is_zero()) {
        ++low;
    }
    if (low > 0) {
        roots.emplace_back(std::int64_t(0));
    }
    BigInt den = 1;
    for (const auto &c : f.coefficients()) {
        den = boost::multiprecision::lcm(den, c.denominator());
    }
    const BigInt a0 = boost::multiprecision::numerator(BigRational(f.coefficient(low).value() * den));
    const BigInt an = boost::multiprecision::numerator(BigRational(f.leading().value() * den));
    if (f.degree() > long(low)) {
        const BigInt limit = BigInt(1) << 40;
        for (const auto &p : positive_divisors(a0, limit)) {
            for (const auto &q : positive_divisors(an, limit)) {
                for (int sign : {1, -1}) {
                    Rational r(BigRational(p * sign) / BigRational(q));
                    if (f.evaluate(r).is_zero() && std::find(roots.begin(), roots.end(), r) == roots.end()) {
                        roots.push_back(r);
                    }
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace detail

// Rational points of a system over Q, found by back substitution through the
// reduced lex basis. Returns nullopt when some coordinate is left
// unconstrained (the system is then only described by its basis).
inline std::optional<std::vector<Assignment<RationalField>>>
rational_points(const ConstraintSystem<RationalField> &sys)
{
    using Poly = CPoly<RationalField>;
    const RationalField Q;
    const std::size_t s = sys.symbols().size();
    const auto gb = sys.empty() ? std::vector<Poly>{} : reduced_groebner_basis(sys.equations());
    if (gb.size() == 1 && gb.front().is_constant()) {
        return std::vector<Assignment<RationalField>>{};
    }
    auto lowest_symbol = [](const Poly &p) {
        for (std::size_t i = 0; i < p.symbol_span(); ++i) {
            if (p.uses_symbol(i)) {
                return i;
            }
        }
        return std::numeric_limits<std::size_t>::max();
    };

    std::vector<Assignment<RationalField>> partial{Assignment<RationalField>(s, Q.zero())};
    for (std::size_t level = s; level-- > 0;) {
        std::vector<const Poly *> relevant;
        for (const auto &g : gb) {
            if (lowest_symbol(g) >= level) {
                relevant.push_back(&g);
            }
        }
        std::vector<Assignment<RationalField>> next;
        for (const auto &pt : partial) {
            UPoly<RationalField> common(Q);
            for (const Poly *g : relevant) {
                Poly sub = *g;
                for (std::size_t i = level + 1; i < s; ++i) {
                    sub = sub.substitute(i, pt[i]);
                }
                std::vector<Rational> coeffs(sub.is_zero() ? 0 : sub.symbol_span() ? sub.total_degree() + 1 : 1,
                                             Q.zero());
                for (const auto &[m, c] : sub.terms()) {
                    coeffs[m.exponent(level)] = c;
                }
                common = gcd(common, UPoly<RationalField>(Q, std::move(coeffs)));
            }
            if (common.is_zero()) {
                return std::nullopt;
            }
            std::vector<Rational> roots;
            try {
                roots = detail::rational_roots(common);
            } catch (const SearchSpaceTooLarge &) {
                return std::nullopt;
            }
            for (const auto &r : roots) {
                auto extended = pt;
                extended[level] = r;
                next.push_back(std::move(extended));
            }
        }
        partial = std::move(next);
    }
    std::sort(partial.begin(), partial.end());
    return partial;
}

} // namespace ncf
