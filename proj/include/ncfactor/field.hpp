#pragma once

// Exact coefficient fields: prime fields F_p (p < 2^31) and the rationals.
//
// Elements are self-contained values (an F_p element knows its modulus), so
// generic code can use ordinary operators. A field object is a small
// context used to manufacture constants.

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace ncf {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline bool is_prime(std::uint64_t n)
{
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

class Fp {
public:
    Fp() = default;
    Fp(std::uint64_t value, std::uint32_t modulus)
        : value_(modulus ? static_cast<std::uint32_t>(value % modulus) : 0), modulus_(modulus) {}

    std::uint32_t value() const noexcept { return value_; }
    std::uint32_t modulus() const noexcept { return modulus_; }
    bool is_zero() const noexcept { return value_ == 0; }
    bool is_one() const noexcept { return value_ == 1; }

    // Representative in (-p/2, p/2], used for display.
    std::int64_t signed_value() const noexcept
    {
        return value_ > modulus_ / 2 ? std::int64_t(value_) - modulus_ : std::int64_t(value_);
    }

    Fp inverse() const
    {
        if (value_ == 0) {
            throw DivisionByZero();
        }
        std::int64_t a = value_, m = modulus_, x0 = 1, x1 = 0;
        while (m != 0) {
            const std::int64_t q = a / m;
            std::int64_t t = a - q * m;
            a = m;
            m = t;
            t = x0 - q * x1;
            x0 = x1;
            x1 = t;
        }
        x0 %= std::int64_t(modulus_);
        if (x0 < 0) {
            x0 += modulus_;
        }
        return Fp(std::uint64_t(x0), modulus_);
    }

    Fp operator-() const { return Fp(value_ ? modulus_ - value_ : 0, modulus_); }

    friend Fp operator+(Fp a, Fp b)
    {
        check(a, b);
        return Fp(std::uint64_t(a.value_) + b.value_, a.modulus_);
    }
    friend Fp operator-(Fp a, Fp b)
    {
        check(a, b);
        return Fp(std::uint64_t(a.value_) + a.modulus_ - b.value_, a.modulus_);
    }
    friend Fp operator*(Fp a, Fp b)
    {
        check(a, b);
        return Fp(std::uint64_t(a.value_) * b.value_, a.modulus_);
    }
    friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
    Fp &operator+=(Fp o) { return *this = *this + o; }
    Fp &operator-=(Fp o) { return *this = *this - o; }
    Fp &operator*=(Fp o) { return *this = *this * o; }
    Fp &operator/=(Fp o) { return *this = *this / o; }

    friend bool operator==(const Fp &, const Fp &) = default;
    friend auto operator<=>(const Fp &, const Fp &) = default;

    std::string to_string() const { return std::to_string(signed_value()); }

private:
    static void check(const Fp &a, const Fp &b)
    {
        if (a.modulus_ != b.modulus_) {
            throw ContextMismatch("F_p elements with different moduli");
        }
    }

    std::uint32_t value_ = 0;
    std::uint32_t modulus_ = 0;
};

class Rational {
public:
    Rational() = default;
    explicit Rational(BigRational v) : value_(std::move(v)) {}
    explicit Rational(const BigInt &n) : value_(n) {}
    explicit Rational(std::int64_t n) : value_(n) {}

    const BigRational &value() const noexcept { return value_; }
    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }
    bool is_zero() const { return value_ == 0; }
    bool is_one() const { return value_ == 1; }

    Rational inverse() const
    {
        if (is_zero()) {
            throw DivisionByZero();
        }
        return Rational(BigRational(1) / value_);
    }

    Rational operator-() const { return Rational(-value_); }
    friend Rational operator+(const Rational &a, const Rational &b) { return Rational(a.value_ + b.value_); }
    friend Rational operator-(const Rational &a, const Rational &b) { return Rational(a.value_ - b.value_); }
    friend Rational operator*(const Rational &a, const Rational &b) { return Rational(a.value_ * b.value_); }
    friend Rational operator/(const Rational &a, const Rational &b)
    {
        if (b.is_zero()) {
            throw DivisionByZero();
        }
        return Rational(a.value_ / b.value_);
    }
    Rational &operator+=(const Rational &o) { return *this = *this + o; }
    Rational &operator-=(const Rational &o) { return *this = *this - o; }
    Rational &operator*=(const Rational &o) { return *this = *this * o; }
    Rational &operator/=(const Rational &o) { return *this = *this / o; }

    friend bool operator==(const Rational &a, const Rational &b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        if (a.value_ < b.value_) {
            return std::strong_ordering::less;
        }
        return a.value_ == b.value_ ? std::strong_ordering::equal : std::strong_ordering::greater;
    }

    std::string to_string() const { return value_.str(); }

private:
    BigRational value_;
};

inline std::ostream &operator<<(std::ostream &os, const Fp &x) { return os << x.to_string(); }
inline std::ostream &operator<<(std::ostream &os, const Rational &x) { return os << x.to_string(); }

class PrimeField {
public:
    using element_type = Fp;
    static constexpr bool is_finite = true;

    PrimeField() = default;
    explicit PrimeField(std::uint32_t p) : p_(p)
    {
        if (p >= (1u << 31) || !is_prime(p)) {
            throw PreconditionError("modulus " + std::to_string(p) + " is not a prime below 2^31");
        }
    }

    std::uint32_t characteristic() const noexcept { return p_; }
    Fp zero() const { return Fp(0, p_); }
    Fp one() const { return Fp(1, p_); }
    Fp from_int(std::int64_t n) const
    {
        std::int64_t r = n % std::int64_t(p_);
        return Fp(std::uint64_t(r < 0 ? r + p_ : r), p_);
    }
    Fp from_integer(const BigInt &n) const
    {
        BigInt r = n % p_;
        if (r < 0) {
            r += p_;
        }
        return Fp(r.convert_to<std::uint64_t>(), p_);
    }
    // Throws DivisionByZero when the denominator vanishes modulo p.
    Fp from_fraction(const BigInt &num, const BigInt &den) const
    {
        return from_integer(num) / from_integer(den);
    }
    // The i-th element in the fixed enumeration order 0, 1, ..., p-1.
    Fp element(std::uint64_t i) const { return Fp(i, p_); }
    std::uint64_t size() const noexcept { return p_; }

    std::string name() const { return "GF(" + std::to_string(p_) + ")"; }
    bool contains(const Fp &x) const noexcept { return x.modulus() == p_; }

    friend bool operator==(const PrimeField &, const PrimeField &) = default;

private:
    std::uint32_t p_ = 2;
};

class RationalField {
public:
    using element_type = Rational;
    static constexpr bool is_finite = false;

    Rational zero() const { return Rational(std::int64_t(0)); }
    Rational one() const { return Rational(std::int64_t(1)); }
    Rational from_int(std::int64_t n) const { return Rational(n); }
    Rational from_integer(const BigInt &n) const { return Rational(n); }
    Rational from_fraction(const BigInt &num, const BigInt &den) const
    {
        if (den == 0) {
            throw DivisionByZero();
        }
        return Rational(BigRational(num) / BigRational(den));
    }
    std::string name() const { return "QQ"; }
    bool contains(const Rational &) const noexcept { return true; }

    friend bool operator==(const RationalField &, const RationalField &) = default;
};

template <class F>
concept CoefficientField = requires(const F &f, const typename F::element_type &a, std::int64_t n) {
    typename F::element_type;
    { F::is_finite } -> std::convertible_to<bool>;
    { f.zero() } -> std::same_as<typename F::element_type>;
    { f.one() } -> std::same_as<typename F::element_type>;
    { f.from_int(n) } -> std::same_as<typename F::element_type>;
    { f.name() } -> std::convertible_to<std::string>;
    { a + a } -> std::same_as<typename F::element_type>;
    { a * a } -> std::same_as<typename F::element_type>;
    { a / a } -> std::same_as<typename F::element_type>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.to_string() } -> std::convertible_to<std::string>;
};

static_assert(CoefficientField<PrimeField>);
static_assert(CoefficientField<RationalField>);

} // namespace ncf
