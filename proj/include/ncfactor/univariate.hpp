#pragma once

// Dense univariate polynomials over a coefficient field.

#include <cstdint>
#include <utility>
#include <vector>

#include "field.hpp"

namespace ncf {

template <CoefficientField Field>
class UPoly {
public:
    using K = typename Field::element_type;

    explicit UPoly(Field f = Field{}) : field_(std::move(f)) {}
    UPoly(Field f, std::vector<K> coeffs) : field_(std::move(f)), c_(std::move(coeffs)) { trim(); }

    static UPoly x(const Field &f) { return UPoly(f, {f.zero(), f.one()}); }
    static UPoly constant(const Field &f, const K &c) { return UPoly(f, {c}); }

    const Field &field() const noexcept { return field_; }
    bool is_zero() const noexcept { return c_.empty(); }
    // -1 for the zero polynomial.
    long degree() const noexcept { return long(c_.size()) - 1; }
    const std::vector<K> &coefficients() const noexcept { return c_; }
    K coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
    const K &leading() const { return c_.back(); }

    UPoly monic() const
    {
        if (is_zero()) {
            return *this;
        }
        const K inv = leading().inverse();
        UPoly r(*this);
        for (auto &x : r.c_) {
            x *= inv;
        }
        return r;
    }

    K evaluate(const K &x) const
    {
        K acc = field_.zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc = acc * x + *it;
        }
        return acc;
    }

    friend UPoly operator+(const UPoly &a, const UPoly &b)
    {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()), a.field_.zero());
        for (std::size_t i = 0; i < r.size(); ++i) {
            r[i] = a.coefficient(i) + b.coefficient(i);
        }
        return UPoly(a.field_, std::move(r));
    }
    friend UPoly operator-(const UPoly &a, const UPoly &b)
    {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()), a.field_.zero());
        for (std::size_t i = 0; i < r.size(); ++i) {
            r[i] = a.coefficient(i) - b.coefficient(i);
        }
        return UPoly(a.field_, std::move(r));
    }
    friend UPoly operator*(const UPoly &a, const UPoly &b)
    {
        if (a.is_zero() || b.is_zero()) {
            return UPoly(a.field_);
        }
        std::vector<K> r(a.c_.size() + b.c_.size() - 1, a.field_.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                r[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return UPoly(a.field_, std::move(r));
    }

    // Euclidean division: returns (quotient, remainder).
    friend std::pair<UPoly, UPoly> divmod(const UPoly &a, const UPoly &b)
    {
        if (b.is_zero()) {
            throw DivisionByZero();
        }
        std::vector<K> rem = a.c_;
        std::vector<K> quo(a.c_.size() >= b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 0, a.field_.zero());
        const K inv = b.leading().inverse();
        for (std::size_t i = quo.size(); i-- > 0;) {
            const K q = rem[i + b.c_.size() - 1] * inv;
            quo[i] = q;
            if (q.is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                rem[i + j] -= q * b.c_[j];
            }
        }
        return {UPoly(a.field_, std::move(quo)), UPoly(a.field_, std::move(rem))};
    }
    friend UPoly operator%(const UPoly &a, const UPoly &b) { return divmod(a, b).second; }
    friend UPoly operator/(const UPoly &a, const UPoly &b) { return divmod(a, b).first; }

    friend bool operator==(const UPoly &a, const UPoly &b) { return a.c_ == b.c_; }

private:
    void trim()
    {
        while (!c_.empty() && c_.back().is_zero()) {
            c_.pop_back();
        }
    }

    Field field_;
    std::vector<K> c_;
};

// Monic gcd (zero when both inputs are zero).
template <class Field>
UPoly<Field> gcd(UPoly<Field> a, UPoly<Field> b)
{
    while (!b.is_zero()) {
        a = a % b;
        std::swap(a, b);
    }
    return a.monic();
}

template <class Field, class Exponent>
UPoly<Field> powmod(UPoly<Field> base, Exponent e, const UPoly<Field> &mod)
{
    UPoly<Field> result = UPoly<Field>::constant(mod.field(), mod.field().one()) % mod;
    base = base % mod;
    while (e > 0) {
        if ((e & 1) != 0) {
            result = (result * base) % mod;
        }
        base = (base * base) % mod;
        e >>= 1;
    }
    return result;
}

// Degrees of the irreducible factors (with multiplicity) of a nonzero
// polynomial over F_p, via distinct-degree splitting with x^(p^d) - x.
inline std::vector<long> irreducible_factor_degrees(UPoly<PrimeField> f)
{
    if (f.is_zero()) {
        throw PreconditionError("factor degrees of the zero polynomial");
    }
    const PrimeField &F = f.field();
    const auto x = UPoly<PrimeField>::x(F);
    std::vector<long> degrees;
    f = f.monic();
    for (long d = 1; f.degree() > 0; ++d) {
        if (2 * d > f.degree()) {
            degrees.push_back(f.degree());
            break;
        }
        // x^(p^d) mod f, computed by d successive p-th powers.
        bool split_found = true;
        while (split_found && f.degree() > 0) {
            UPoly<PrimeField> xp = x % f;
            for (long i = 0; i < d; ++i) {
                xp = powmod(xp, std::uint64_t(F.characteristic()), f);
            }
            const auto g = gcd(xp - x, f);
            split_found = g.degree() > 0;
            if (split_found) {
                for (long i = 0; i < g.degree() / d; ++i) {
                    degrees.push_back(d);
                }
                f = f / g;
            }
        }
    }
    return degrees;
}

} // namespace ncf
