#pragma once

// Degree filter from commutative images.
//
// If F = G*H in the free algebra and the commutative image of F keeps the
// total degree n, the images of G and H keep theirs, so deg G must be the
// degree of a divisor of the image, i.e. a subset sum of its irreducible
// factor degrees. Divisor degrees are over-approximated by restricting the
// image to lines t -> d*t + e (with the top form nonzero at d, so degrees
// survive) and intersecting the subset sums of the univariate factor
// degrees. The result is a necessary condition only.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "cpoly.hpp"
#include "univariate.hpp"

namespace ncf {

// sums[s] is true when s is a sum of a sub-multiset of `parts`, 0 <= s <= total.
inline std::vector<bool> subset_sums(std::span<const long> parts, std::size_t total)
{
    std::vector<bool> sums(total + 1, false);
    sums[0] = true;
    for (long a : parts) {
        for (std::size_t s = total + 1; s-- > 0;) {
            if (sums[s] && s + std::size_t(a) <= total) {
                sums[s + std::size_t(a)] = true;
            }
        }
    }
    return sums;
}

namespace detail {

inline UPoly<PrimeField> restrict_to_line(const CPoly<PrimeField> &c, std::span<const Fp> dir, std::span<const Fp> off)
{
    const PrimeField &F = c.field();
    UPoly<PrimeField> r(F);
    for (const auto &[m, coeff] : c.terms()) {
        UPoly<PrimeField> t = UPoly<PrimeField>::constant(F, coeff);
        for (std::size_t i = 0; i < m.size(); ++i) {
            const UPoly<PrimeField> lin(F, {off[i], dir[i]});
            for (std::uint32_t e = 0; e < m.exponent(i); ++e) {
                t = t * lin;
            }
        }
        r = r + t;
    }
    return r;
}

inline CPoly<PrimeField> top_form(const CPoly<PrimeField> &c)
{
    const auto n = c.total_degree();
    CPoly<PrimeField> top(c.field());
    for (const auto &[m, coeff] : c.terms()) {
        if (m.degree() == n) {
            top.add_term(m, coeff);
        }
    }
    return top;
}

// Mixed-radix decoding of `index` into a point of F_p^m.
inline std::vector<Fp> decode_point(std::uint64_t index, std::size_t m, const PrimeField &F)
{
    std::vector<Fp> pt(m, F.zero());
    for (std::size_t i = 0; i < m; ++i) {
        pt[i] = F.element(index % F.size());
        index /= F.size();
    }
    return pt;
}

} // namespace detail

// Over-approximation of the set of degrees of divisors of `c` over F_p, as a
// mask over [0, deg c]. nullopt when no degree-preserving line exists.
inline std::optional<std::vector<bool>> divisor_degrees(const CPoly<PrimeField> &c, std::size_t line_samples = 64)
{
    if (c.is_zero()) {
        return std::nullopt;
    }
    const std::size_t n = c.total_degree();
    if (n == 0) {
        return std::vector<bool>{true};
    }
    const PrimeField &F = c.field();
    const std::size_t m = std::max<std::size_t>(1, c.symbol_span());
    const auto top = detail::top_form(c);

    // Exhaustive over small spaces, seeded sampling otherwise.
    std::uint64_t points = 1;
    bool exhaustive = true;
    for (std::size_t i = 0; i < 2 * m; ++i) {
        if (points > 4096 / F.size()) {
            exhaustive = false;
            break;
        }
        points *= F.size();
    }
    std::uint64_t half = 1; // p^m
    for (std::size_t i = 0; exhaustive && i < m; ++i) {
        half *= F.size();
    }
    std::mt19937_64 rng(0x6b6e617073616b00ULL);
    std::vector<bool> mask;
    const std::uint64_t trials = exhaustive ? points : line_samples * 8;
    std::size_t used = 0;
    for (std::uint64_t t = 0; t < trials && (exhaustive || used < line_samples); ++t) {
        std::vector<Fp> dir, off;
        if (exhaustive) {
            dir = detail::decode_point(t, m, F);
            off = detail::decode_point(t / half, m, F);
        } else {
            for (std::size_t i = 0; i < m; ++i) {
                dir.push_back(F.element(rng() % F.size()));
                off.push_back(F.element(rng() % F.size()));
            }
        }
        if (top.evaluate(dir).is_zero()) {
            continue;
        }
        ++used;
        const auto r = detail::restrict_to_line(c, dir, off);
        const auto degs = irreducible_factor_degrees(r);
        const auto sums = subset_sums(degs, n);
        if (mask.empty()) {
            mask = sums;
        } else {
            for (std::size_t s = 0; s <= n; ++s) {
                mask[s] = mask[s] && sums[s];
            }
        }
        if (std::count(mask.begin(), mask.end(), true) == 2) {
            break; // only 0 and n remain
        }
    }
    if (mask.empty()) {
        return std::nullopt;
    }
    return mask;
}

// Over Q: reduce modulo a prime that keeps the denominators invertible and
// the top form nonzero (Gauss's lemma makes divisor degrees survive).
inline std::optional<std::vector<bool>> divisor_degrees(const CPoly<RationalField> &c, std::size_t line_samples = 64)
{
    if (c.is_zero()) {
        return std::nullopt;
    }
    const auto n = c.total_degree();
    for (std::uint32_t p : {1000003u, 1000033u, 1000037u, 1000039u, 1000081u}) {
        const PrimeField F(p);
        CPoly<PrimeField> r(F);
        bool bad = false;
        for (const auto &[m, coeff] : c.terms()) {
            if (coeff.denominator() % p == 0) {
                bad = true;
                break;
            }
            r.add_term(m, F.from_fraction(coeff.numerator(), coeff.denominator()));
        }
        if (bad || r.is_zero() || r.total_degree() != n) {
            continue;
        }
        return divisor_degrees(r, line_samples);
    }
    return std::nullopt;
}

} // namespace ncf
