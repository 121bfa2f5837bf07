#pragma once

// Factorization of homogeneous free-algebra polynomials at a prescribed
// degree split, and the common refinement of two such factorizations.
//
// A homogeneous F of degree h+k factors as G*H (deg G = h) iff its
// coefficient table indexed by (first h letters, last k letters) is an outer
// product, so one pivot word u*v of F determines both factors:
//   G ~ sum over words w*v of F of F(w*v) w,
//   H ~ sum over words u*w of F of F(u*w) w.

#include <optional>
#include <utility>

#include "ncpoly.hpp"

namespace ncf {

struct Pivot {
    Word left;                // prefix of length h, candidate word of G
    Word right;               // suffix of length k, candidate word of H
    std::size_t overlaps = 0; // overlap_lengths(left, right).size()
};

namespace detail {

template <class Field>
void require_homogeneous_split(const NCPoly<Field> &f, std::size_t h, std::size_t k)
{
    if (h == 0 || k == 0) {
        throw PreconditionError("degree split needs h >= 1 and k >= 1");
    }
    if (f.is_zero()) {
        throw PreconditionError("cannot factor the zero polynomial");
    }
    if (!f.is_homogeneous() || f.degree() != h + k) {
        throw PreconditionError("polynomial is not homogeneous of degree h + k");
    }
}

} // namespace detail

// Splits a word of f at position h, preferring the split with the fewest
// self-overlaps (each overlap costs an extension symbol when the split is
// reused as the pivot of the general algorithm). Ties go to the smallest
// word in deglex order.
template <class Field>
Pivot select_pivot(const NCPoly<Field> &f, std::size_t h, std::size_t k)
{
    detail::require_homogeneous_split(f, h, k);
    std::optional<Pivot> best;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const Word &w = it->first;
        Pivot p{w.prefix(h), w.drop(h), 0};
        p.overlaps = overlap_lengths(p.left, p.right).size();
        if (!best || p.overlaps < best->overlaps) {
            best = std::move(p);
        }
    }
    return *best;
}

// Returns (G, H) with G*H = f, deg G = h, G monic in its leading word; nullopt
// when f has no factorization at this split.
template <class Field>
std::optional<std::pair<NCPoly<Field>, NCPoly<Field>>> factor_homogeneous(const NCPoly<Field> &f, std::size_t h,
                                                                            std::size_t k)
{
    detail::require_homogeneous_split(f, h, k);
    if (!f.has_constant_coefficients()) {
        throw PreconditionError("homogeneous factorization needs constant coefficients");
    }
    const Pivot pivot = select_pivot(f, h, k);
    const auto c = f.constant_coefficient(pivot.left * pivot.right);

    NCPoly<Field> g = f.zero();
    NCPoly<Field> hh = f.zero();
    for (const auto &[w, coeff] : f.terms()) {
        if (auto r = left_quotient(w, pivot.left)) {
            hh.add_term(*r, coeff);
        }
        if (auto l = right_quotient(w, pivot.right)) {
            g.add_term(*l, coeff);
        }
    }
    // g = H(right)*G and hh = G(left)*H, so g*hh = c*f.
    const auto lc = g.leading_coefficient().constant_value();
    g = g * lc.inverse();
    hh = hh * (lc / c);
    if (!(g * hh == f)) {
        return std::nullopt;
    }
    return std::make_pair(std::move(g), std::move(hh));
}

// Given f = g1*h1 = g2*h2 (homogeneous, deg g1 < deg g2), the common
// refinement j with g2 = g1*j and h1 = j*h2. Built from the terms of g2
// left-divisible by the leading word of g1.
template <class Field>
NCPoly<Field> refine(const NCPoly<Field> &g1, const NCPoly<Field> &h1, const NCPoly<Field> &g2,
                     const NCPoly<Field> &h2)
{
    for (const auto *p : {&g1, &h1, &g2, &h2}) {
        if (p->is_zero() || !p->is_homogeneous() || !p->has_constant_coefficients()) {
            throw PreconditionError("refine needs nonzero homogeneous constant-coefficient factors");
        }
    }
    if (g1.degree() >= g2.degree()) {
        throw PreconditionError("refine needs deg g1 < deg g2");
    }
    if (!(g1 * h1 == g2 * h2)) {
        throw PreconditionError("refine needs g1*h1 = g2*h2");
    }
    const auto c1 = g1.leading_coefficient().constant_value();
    const auto c2 = g2.leading_coefficient().constant_value();
    const auto g1n = g1 * c1.inverse();
    const auto g2n = g2 * c2.inverse();
    const Word &lead = g1n.leading_word();

    NCPoly<Field> j = g1.zero();
    for (const auto &[w, c] : g2n.terms()) {
        if (auto q = left_quotient(w, lead)) {
            j.add_term(*q, c);
        }
    }
    j = j * (c2 / c1);
    if (j.is_zero() || !(g1 * j == g2) || !(j * h2 == h1)) {
        throw PreconditionError("factorizations have no common refinement through the leading word");
    }
    return j;
}

} // namespace ncf
