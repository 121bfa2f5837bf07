#pragma once

// Sparse commutative polynomials over F_p or Q.
//
// Used for two things: the coefficients of free-algebra polynomials (which
// may involve extension symbols introduced while factoring), and commutative
// images of free-algebra polynomials.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "field.hpp"

namespace ncf {

// Exponent vector. Trailing zero exponents are never stored, so a monomial
// is valid in any ambient symbol list at least as long as size(); this lets
// fresh symbols be appended without rewriting existing coefficients.
class CMonomial {
public:
    CMonomial() = default;
    CMonomial(std::initializer_list<std::uint32_t> e) : exps_(e) { trim(); }
    explicit CMonomial(std::vector<std::uint32_t> e) : exps_(std::move(e)) { trim(); }

    static CMonomial variable(std::size_t index, std::uint32_t power = 1)
    {
        std::vector<std::uint32_t> e(index + 1, 0);
        e[index] = power;
        return CMonomial(std::move(e));
    }

    std::uint32_t exponent(std::size_t i) const noexcept { return i < exps_.size() ? exps_[i] : 0; }
    // One past the largest index with a nonzero exponent.
    std::size_t size() const noexcept { return exps_.size(); }
    bool is_one() const noexcept { return exps_.empty(); }
    const std::vector<std::uint32_t> &exponents() const noexcept { return exps_; }

    std::uint64_t degree() const
    {
        std::uint64_t d = 0;
        for (auto e : exps_) {
            d += e;
        }
        return d;
    }

    bool divides(const CMonomial &m) const
    {
        if (exps_.size() > m.exps_.size()) {
            return false;
        }
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            if (exps_[i] > m.exps_[i]) {
                return false;
            }
        }
        return true;
    }

    friend CMonomial operator*(const CMonomial &a, const CMonomial &b)
    {
        std::vector<std::uint32_t> e(std::max(a.size(), b.size()), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            e[i] = a.exponent(i) + b.exponent(i);
        }
        return CMonomial(std::move(e));
    }

    // Requires b.divides(a).
    friend CMonomial operator/(const CMonomial &a, const CMonomial &b)
    {
        if (!b.divides(a)) {
            throw PreconditionError("monomial quotient is not exact");
        }
        std::vector<std::uint32_t> e(a.exps_);
        for (std::size_t i = 0; i < b.size(); ++i) {
            e[i] -= b.exps_[i];
        }
        return CMonomial(std::move(e));
    }

    friend CMonomial lcm(const CMonomial &a, const CMonomial &b)
    {
        std::vector<std::uint32_t> e(std::max(a.size(), b.size()), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            e[i] = std::max(a.exponent(i), b.exponent(i));
        }
        return CMonomial(std::move(e));
    }

    friend bool coprime(const CMonomial &a, const CMonomial &b)
    {
        for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
            if (a.exps_[i] != 0 && b.exps_[i] != 0) {
                return false;
            }
        }
        return true;
    }

    // Pure lex with symbol 0 the most significant. Comparing trimmed vectors
    // lexicographically agrees with comparing their zero-padded versions.
    friend bool operator==(const CMonomial &, const CMonomial &) = default;
    friend auto operator<=>(const CMonomial &a, const CMonomial &b) { return a.exps_ <=> b.exps_; }

private:
    void trim()
    {
        while (!exps_.empty() && exps_.back() == 0) {
            exps_.pop_back();
        }
    }

    std::vector<std::uint32_t> exps_;
};

template <CoefficientField Field>
class CPoly {
public:
    using field_type = Field;
    using K = typename Field::element_type;
    // Descending lex, so the leading term comes first.
    using Terms = std::map<CMonomial, K, std::greater<>>;

    explicit CPoly(Field f = Field{}) : field_(std::move(f)) {}

    static CPoly constant(const Field &f, const K &c)
    {
        CPoly r(f);
        r.add_term(CMonomial{}, c);
        return r;
    }
    static CPoly constant(const Field &f, std::int64_t c) { return constant(f, f.from_int(c)); }
    static CPoly variable(const Field &f, std::size_t index, std::uint32_t power = 1)
    {
        return monomial(f, CMonomial::variable(index, power), f.one());
    }
    static CPoly monomial(const Field &f, const CMonomial &m, const K &c)
    {
        CPoly r(f);
        r.add_term(m, c);
        return r;
    }

    const Field &field() const noexcept { return field_; }
    const Terms &terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

    // Value of a constant polynomial (zero for the zero polynomial).
    K constant_value() const
    {
        if (!is_constant()) {
            throw PreconditionError("polynomial is not constant");
        }
        return terms_.empty() ? field_.zero() : terms_.begin()->second;
    }

    K coefficient(const CMonomial &m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? field_.zero() : it->second;
    }

    const CMonomial &leading_monomial() const
    {
        require_nonzero();
        return terms_.begin()->first;
    }
    const K &leading_coefficient() const
    {
        require_nonzero();
        return terms_.begin()->second;
    }

    std::uint64_t total_degree() const
    {
        require_nonzero();
        std::uint64_t d = 0;
        for (const auto &[m, c] : terms_) {
            d = std::max(d, m.degree());
        }
        return d;
    }

    // One past the largest symbol index occurring in the polynomial.
    std::size_t symbol_span() const
    {
        std::size_t s = 0;
        for (const auto &[m, c] : terms_) {
            s = std::max(s, m.size());
        }
        return s;
    }

    bool uses_symbol(std::size_t i) const
    {
        for (const auto &[m, c] : terms_) {
            if (m.exponent(i) != 0) {
                return true;
            }
        }
        return false;
    }

    void add_term(const CMonomial &m, const K &c)
    {
        check_element(c);
        if (c.is_zero()) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }

    CPoly monic() const
    {
        if (is_zero()) {
            return *this;
        }
        return *this * leading_coefficient().inverse();
    }

    K evaluate(std::span<const K> values) const
    {
        K acc = field_.zero();
        for (const auto &[m, c] : terms_) {
            K t = c;
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (m.exponent(i) == 0) {
                    continue;
                }
                if (i >= values.size()) {
                    throw PreconditionError("evaluation point misses a symbol");
                }
                for (std::uint32_t e = 0; e < m.exponent(i); ++e) {
                    t *= values[i];
                }
            }
            acc += t;
        }
        return acc;
    }

    // Replace symbol `index` by the constant `value`.
    CPoly substitute(std::size_t index, const K &value) const
    {
        CPoly r(field_);
        for (const auto &[m, c] : terms_) {
            const std::uint32_t e = m.exponent(index);
            if (e == 0) {
                r.add_term(m, c);
                continue;
            }
            K t = c;
            for (std::uint32_t i = 0; i < e; ++i) {
                t *= value;
            }
            std::vector<std::uint32_t> ex = m.exponents();
            ex[index] = 0;
            r.add_term(CMonomial(std::move(ex)), t);
        }
        return r;
    }

    CPoly operator-() const
    {
        CPoly r(field_);
        for (const auto &[m, c] : terms_) {
            r.terms_.emplace_hint(r.terms_.end(), m, -c);
        }
        return r;
    }

    CPoly &operator+=(const CPoly &o)
    {
        check_context(o);
        for (const auto &[m, c] : o.terms_) {
            add_term(m, c);
        }
        return *this;
    }
    CPoly &operator-=(const CPoly &o)
    {
        check_context(o);
        for (const auto &[m, c] : o.terms_) {
            add_term(m, -c);
        }
        return *this;
    }
    friend CPoly operator+(CPoly a, const CPoly &b) { return a += b; }
    friend CPoly operator-(CPoly a, const CPoly &b) { return a -= b; }

    friend CPoly operator*(const CPoly &a, const CPoly &b)
    {
        a.check_context(b);
        CPoly r(a.field_);
        for (const auto &[ma, ca] : a.terms_) {
            for (const auto &[mb, cb] : b.terms_) {
                r.add_term(ma * mb, ca * cb);
            }
        }
        return r;
    }
    CPoly &operator*=(const CPoly &o) { return *this = *this * o; }

    friend CPoly operator*(const CPoly &a, const K &s)
    {
        a.check_element(s);
        CPoly r(a.field_);
        if (s.is_zero()) {
            return r;
        }
        for (const auto &[m, c] : a.terms_) {
            r.terms_.emplace_hint(r.terms_.end(), m, c * s);
        }
        return r;
    }
    friend CPoly operator*(const K &s, const CPoly &a) { return a * s; }

    friend bool operator==(const CPoly &a, const CPoly &b) { return a.terms_ == b.terms_; }
    friend bool operator<(const CPoly &a, const CPoly &b) { return a.terms_ < b.terms_; }

private:
    void require_nonzero() const
    {
        if (terms_.empty()) {
            throw PreconditionError("operation undefined for the zero polynomial");
        }
    }
    void check_context(const CPoly &o) const
    {
        if (!(field_ == o.field_)) {
            throw ContextMismatch("polynomials over different fields");
        }
    }
    void check_element(const K &c) const
    {
        if (!field_.contains(c)) {
            throw ContextMismatch("coefficient outside the polynomial's field");
        }
    }

    Field field_;
    Terms terms_;
};

// cAdd / cMul / cScale in free-function form.
template <class Field>
CPoly<Field> c_add(const CPoly<Field> &a, const CPoly<Field> &b) { return a + b; }
template <class Field>
CPoly<Field> c_mul(const CPoly<Field> &a, const CPoly<Field> &b) { return a * b; }
template <class Field>
CPoly<Field> c_scale(const CPoly<Field> &a, const typename Field::element_type &s) { return a * s; }

// Default symbol names a1, a2, ...
inline std::string default_symbol_name(std::size_t i) { return "a" + std::to_string(i + 1); }

namespace detail {

inline bool starts_with_minus(const std::string &s) { return !s.empty() && s[0] == '-'; }

} // namespace detail

// Renders e.g. "a1^2 - 1" or "2*x*y^3 - y". Names beyond `names` fall back
// to the a1, a2, ... convention.
template <class Field>
std::string to_string(const CPoly<Field> &p, std::span<const std::string> names = {})
{
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto &[m, c] : p.terms()) {
        std::string coeff = c.to_string();
        const bool negative = detail::starts_with_minus(coeff);
        if (negative) {
            coeff.erase(0, 1);
        }
        if (first) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;

        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
            const auto e = m.exponent(i);
            if (e == 0) {
                continue;
            }
            if (!mono.empty()) {
                mono += "*";
            }
            mono += i < names.size() ? names[i] : default_symbol_name(i);
            if (e > 1) {
                mono += "^" + std::to_string(e);
            }
        }
        if (mono.empty()) {
            out += coeff;
        } else if (coeff == "1") {
            out += mono;
        } else {
            out += coeff + "*" + mono;
        }
    }
    return out;
}

} // namespace ncf
