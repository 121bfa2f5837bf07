#pragma once

// Two-factor factorization of general (inhomogeneous) free-algebra
// polynomials.
//
// With F = G*H, deg G = h, deg H = k, n = h + k, the homogeneous parts obey
//
//   F_n     = G_h H_k
//   F_{n-j} - sum_{i=1}^{j-1} G_{h-i} H_{k-j+i} = G_h H_{k-j} + G_{h-j} H_k.
//
// The top line is a homogeneous factorization (unique up to scalars). Each
// later line is linear in the unknown pair (X, Y) = (G_{h-j}, H_{k-j}) with
// constant coefficients G_h, H_k. Fix pivot words u of G_h and v of H_k. The
// coefficient of u*w in the right-hand side only involves Y(w) and the single
// value a = X(u[0, h-j)); the coefficient of w*v only involves X(w) and
// b = Y(v[j, k)). So X and Y are affine in (a, b), and (a, b) solve a 2x2
// system with determinant
//   D = G_h(u) H_k(v) - G_h(u[0,h-j) v[0,j)) H_k(u[h-j,h) v[j,k)).
// When the last j letters of u equal the first j letters of v the two rows
// coincide, D = 0 and the coefficient is ambiguous: b becomes a fresh
// extension symbol. D may also vanish without such an overlap; that case is
// handled the same way. Whatever the pivot scan leaves unverified is
// captured by matching every coefficient of G*H against F, which yields the
// polynomial system on the symbols.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "groebner.hpp"
#include "homogeneous.hpp"
#include "knapsack.hpp"
#include "ncpoly.hpp"

namespace ncf {

struct DegreeSplit {
    std::size_t h = 0;
    std::size_t k = 0;
    friend auto operator<=>(const DegreeSplit &, const DegreeSplit &) = default;
};

template <class Field>
struct Factorization {
    NCPoly<Field> left;
    NCPoly<Field> right;
    friend bool operator==(const Factorization &a, const Factorization &b)
    {
        return a.left == b.left && a.right == b.right;
    }
    friend bool operator<(const Factorization &a, const Factorization &b)
    {
        if (a.left == b.left) {
            return a.right < b.right;
        }
        return a.left < b.left;
    }
};

template <class Field>
struct SymbolicFactorization {
    NCPoly<Field> g;                 // left factor, coefficients in the symbols
    NCPoly<Field> h;                 // right factor, coefficients in the symbols
    ConstraintSystem<Field> system;  // G*H = F, one equation per word
    Pivot pivot;
    std::size_t overlap_symbols = 0;    // symbols created at pivot overlaps
    std::size_t degenerate_symbols = 0; // symbols created where D = 0 without an overlap
    std::optional<std::vector<CPoly<Field>>> reduced_basis;
    // Symbol values realised by `concrete` (exactly one when it is set).
    std::optional<std::vector<Assignment<Field>>> solutions;
    std::optional<Factorization<Field>> concrete;
};

struct FactorOptions {
    bool groebner = false;                        // attach the reduced lex basis
    unsigned long long enumeration_cap = 1'000'000; // max points of F_p^s visited
    bool knapsack = true;                         // filter splits in factor_all
};

namespace detail {

template <class Field>
void require_factorable_input(const NCPoly<Field> &f)
{
    if (f.is_zero()) {
        throw PreconditionError("cannot factor the zero polynomial");
    }
    if (!f.has_constant_coefficients()) {
        throw PreconditionError("input polynomial must have constant coefficients");
    }
}

} // namespace detail

// Coefficients of G*H - F as equations, each scaled monic. Symbols are named
// a1, a2, ... unless `symbols` is given.
template <class Field>
ConstraintSystem<Field> assemble_constraints(const NCPoly<Field> &f, const NCPoly<Field> &g, const NCPoly<Field> &h,
                                             std::vector<std::string> symbols = {})
{
    if (!f.same_context(g) || !f.same_context(h)) {
        throw ContextMismatch("assemble_constraints across contexts");
    }
    if (!f.has_constant_coefficients()) {
        throw PreconditionError("assemble_constraints needs a constant-coefficient target");
    }
    const std::size_t span = std::max(g.symbol_span(), h.symbol_span());
    for (std::size_t i = symbols.size(); i < span; ++i) {
        symbols.push_back(default_symbol_name(i));
    }
    ConstraintSystem<Field> sys(f.field(), std::move(symbols), {});
    const auto diff = g * h - f;
    for (const auto &[w, c] : diff.terms()) {
        sys.add_equation(c.monic());
    }
    return sys;
}

// The symbolic candidate of the general algorithm at one split: G and H with
// extension symbols and the system they must satisfy. nullopt when the top
// homogeneous part does not factor at this split.
template <class Field>
std::optional<SymbolicFactorization<Field>> symbolic_factor(const NCPoly<Field> &f, DegreeSplit split)
{
    using Poly = NCPoly<Field>;
    using Coeff = CPoly<Field>;
    detail::require_factorable_input(f);
    const auto [h, k] = split;
    if (h == 0 || k == 0) {
        throw PreconditionError("degree split needs h >= 1 and k >= 1");
    }
    const std::size_t n = f.degree();
    if (n != h + k) {
        throw PreconditionError("split (" + std::to_string(h) + "," + std::to_string(k) +
                                ") does not add up to the degree " + std::to_string(n));
    }
    const Field &field = f.field();
    const Poly top = f.homogeneous_part(n);
    auto head = factor_homogeneous(top, h, k);
    if (!head) {
        return std::nullopt;
    }
    const Pivot pivot = select_pivot(top, h, k);
    const Poly &gh = head->first;
    const Poly &hk = head->second;
    const auto g0 = gh.constant_coefficient(pivot.left);
    const auto h0 = hk.constant_coefficient(pivot.right);
    const auto overlaps = overlap_lengths(pivot.left, pivot.right);

    std::vector<Poly> gp(h + 1, f.zero());
    std::vector<Poly> hp(k + 1, f.zero());
    gp[h] = gh;
    hp[k] = hk;
    std::vector<std::string> symbols;
    std::size_t overlap_symbols = 0;
    std::size_t degenerate_symbols = 0;

    for (std::size_t j = 1; j <= std::max(h, k); ++j) {
        Poly rhs = f.homogeneous_part(n - j);
        for (std::size_t i = 1; i < j; ++i) {
            if (i <= h && j - i <= k) {
                rhs -= gp[h - i] * hp[k - j + i];
            }
        }
        const bool has_x = j <= h;
        const bool has_y = j <= k;
        Coeff a(field); // X(u[0, h-j))
        Coeff b(field); // Y(v[j, k))
        if (has_x && has_y) {
            const Word x_word = pivot.left.prefix(h - j);
            const Word y_word = pivot.right.drop(j);
            const auto p = gh.coefficient(x_word * pivot.right.prefix(j)).constant_value();
            const auto q = hk.coefficient(pivot.left.drop(h - j) * y_word).constant_value();
            const Coeff f1 = rhs.coefficient(x_word * pivot.right);
            const Coeff f2 = rhs.coefficient(pivot.left * y_word);
            const auto det = h0 * g0 - p * q;
            if (!det.is_zero()) {
                a = (f1 * g0 - f2 * p) * det.inverse();
                b = (f2 * h0 - f1 * q) * det.inverse();
            } else {
                const std::size_t s = symbols.size();
                symbols.push_back(default_symbol_name(s));
                if (std::find(overlaps.begin(), overlaps.end(), j) != overlaps.end()) {
                    ++overlap_symbols;
                } else {
                    ++degenerate_symbols;
                }
                b = Coeff::variable(field, s);
                a = (f1 - b * p) * h0.inverse();
            }
        }
        if (has_y) {
            // Y(w) = (rhs(u*w) - a * H_k(u[h-j,h) * w)) / G_h(u)
            std::set<Word> support;
            for (const auto &[w, c] : rhs.terms()) {
                if (auto r = left_quotient(w, pivot.left)) {
                    support.insert(*r);
                }
            }
            if (has_x && !a.is_zero()) {
                const Word tail = pivot.left.drop(h - j);
                for (const auto &[w, c] : hk.terms()) {
                    if (auto r = left_quotient(w, tail)) {
                        support.insert(*r);
                    }
                }
            }
            Poly y = f.zero();
            const auto inv = g0.inverse();
            for (const auto &w : support) {
                Coeff c = rhs.coefficient(pivot.left * w);
                if (has_x) {
                    c -= a * hk.coefficient(pivot.left.drop(h - j) * w);
                }
                y.add_term(w, c * inv);
            }
            hp[k - j] = std::move(y);
        }
        if (has_x) {
            // X(w) = (rhs(w*v) - b * G_h(w * v[0,j))) / H_k(v)
            std::set<Word> support;
            for (const auto &[w, c] : rhs.terms()) {
                if (auto l = right_quotient(w, pivot.right)) {
                    support.insert(*l);
                }
            }
            if (has_y && !b.is_zero()) {
                const Word head_part = pivot.right.prefix(j);
                for (const auto &[w, c] : gh.terms()) {
                    if (auto l = right_quotient(w, head_part)) {
                        support.insert(*l);
                    }
                }
            }
            Poly x = f.zero();
            const auto inv = h0.inverse();
            for (const auto &w : support) {
                Coeff c = rhs.coefficient(w * pivot.right);
                if (has_y) {
                    c -= b * gh.coefficient(w * pivot.right.prefix(j));
                }
                x.add_term(w, c * inv);
            }
            gp[h - j] = std::move(x);
        }
    }

    Poly g = f.zero();
    Poly hh = f.zero();
    for (const auto &part : gp) {
        g += part;
    }
    for (const auto &part : hp) {
        hh += part;
    }
    auto system = assemble_constraints(f, g, hh, symbols);
    return SymbolicFactorization<Field>{std::move(g), std::move(hh), std::move(system), pivot, overlap_symbols,
                                        degenerate_symbols, std::nullopt, std::nullopt, std::nullopt};
}

namespace detail {

template <class Field>
SymbolicFactorization<Field> realise(const NCPoly<Field> &f, const SymbolicFactorization<Field> &sym,
                                     const Assignment<Field> &point)
{
    auto out = sym;
    auto g = sym.g.substitute(point);
    auto h = sym.h.substitute(point);
    if (!(g * h == f)) {
        throw std::logic_error("solved factorization does not multiply back to the input");
    }
    out.solutions = std::vector<Assignment<Field>>{point};
    out.concrete = Factorization<Field>{std::move(g), std::move(h)};
    return out;
}

} // namespace detail

// All factorizations F = G*H with deg G = h, deg H = k, G monic in its
// leading word. Over F_p every solution of the symbol system is substituted;
// over Q the rational points are substituted when the system has finitely
// many, otherwise a single symbolic entry carries the reduced basis.
template <class Field>
std::vector<SymbolicFactorization<Field>> factor_bidegree(const NCPoly<Field> &f, DegreeSplit split,
                                                          const FactorOptions &opts = {})
{
    auto sym = symbolic_factor(f, split);
    if (!sym || sym->system.trivially_inconsistent()) {
        return {};
    }
    const bool want_basis = opts.groebner || !Field::is_finite;
    if (want_basis) {
        sym->reduced_basis = sym->system.empty() ? std::vector<CPoly<Field>>{}
                                                 : reduced_groebner_basis(sym->system.equations());
        const auto &gb = *sym->reduced_basis;
        if (gb.size() == 1 && gb.front().is_constant()) {
            return {};
        }
    }

    std::vector<SymbolicFactorization<Field>> out;
    if constexpr (Field::is_finite) {
        for (const auto &point : enumerate_solutions(sym->system, opts.enumeration_cap)) {
            out.push_back(detail::realise(f, *sym, point));
        }
    } else {
        auto points = rational_points(sym->system);
        if (!points) {
            out.push_back(std::move(*sym));
            return out;
        }
        for (const auto &point : *points) {
            out.push_back(detail::realise(f, *sym, point));
        }
    }
    std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) { return *a.concrete < *b.concrete; });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const auto &a, const auto &b) { return *a.concrete == *b.concrete; }),
              out.end());
    return out;
}

template <class Field>
std::vector<DegreeSplit> all_splits(const NCPoly<Field> &f)
{
    detail::require_factorable_input(f);
    std::vector<DegreeSplit> out;
    const std::size_t n = f.degree();
    for (std::size_t h = 1; h < n; ++h) {
        out.push_back({h, n - h});
    }
    return out;
}

// Splits (b, n-b) where b can be the degree of a divisor of the commutative
// image. Falls back to every split when the image loses degree.
template <class Field>
std::vector<DegreeSplit> knapsack_splits(const NCPoly<Field> &f)
{
    auto splits = all_splits(f);
    const std::size_t n = f.degree();
    const auto image = commutative_image(f);
    if (image.is_zero() || image.total_degree() != n) {
        return splits;
    }
    const auto mask = divisor_degrees(image);
    if (!mask) {
        return splits;
    }
    std::erase_if(splits, [&](const DegreeSplit &s) { return !(*mask)[s.h]; });
    return splits;
}

template <class Field>
using SplitMap = std::map<DegreeSplit, std::vector<SymbolicFactorization<Field>>>;

// Factorizations at every admissible split; only nonempty splits appear.
template <class Field>
SplitMap<Field> factor_all(const NCPoly<Field> &f, const FactorOptions &opts = {})
{
    detail::require_factorable_input(f);
    if (f.degree() < 2) {
        throw PreconditionError("factor_all needs degree at least 2");
    }
    SplitMap<Field> out;
    for (const auto &split : opts.knapsack ? knapsack_splits(f) : all_splits(f)) {
        auto found = factor_bidegree(f, split, opts);
        if (!found.empty()) {
            out.emplace(split, std::move(found));
        }
    }
    return out;
}

template <class Field>
struct FactorChain {
    std::vector<NCPoly<Field>> factors;
    bool truncated = false; // recursion stopped at the depth cap
    friend bool operator==(const FactorChain &a, const FactorChain &b) { return a.factors == b.factors; }
    friend bool operator<(const FactorChain &a, const FactorChain &b) { return a.factors < b.factors; }
};

namespace detail {

template <class Field>
using ChainMemo = std::map<std::pair<NCPoly<Field>, std::size_t>, std::vector<FactorChain<Field>>>;

template <class Field>
std::vector<FactorChain<Field>> chains(const NCPoly<Field> &f, std::size_t depth, const FactorOptions &opts,
                                       ChainMemo<Field> &memo)
{
    const auto key = std::make_pair(f, depth);
    if (auto it = memo.find(key); it != memo.end()) {
        return it->second;
    }
    std::vector<FactorChain<Field>> out;
    std::vector<Factorization<Field>> pairs;
    if (f.degree() >= 2) {
        for (const auto &[split, list] : factor_all(f, opts)) {
            for (const auto &sf : list) {
                if (sf.concrete) {
                    pairs.push_back(*sf.concrete);
                }
            }
        }
    }
    if (pairs.empty()) {
        out.push_back({{f}, false});
    } else if (depth == 0) {
        out.push_back({{f}, true});
    } else {
        std::set<FactorChain<Field>> unique;
        for (const auto &pr : pairs) {
            const auto left = chains(pr.left, depth - 1, opts, memo);
            const auto right = chains(pr.right, depth - 1, opts, memo);
            for (const auto &l : left) {
                for (const auto &r : right) {
                    FactorChain<Field> c{l.factors, l.truncated || r.truncated};
                    c.factors.insert(c.factors.end(), r.factors.begin(), r.factors.end());
                    // Equal factor lists may differ in truncation; keep the complete one.
                    auto [it, inserted] = unique.insert(c);
                    if (!inserted && it->truncated && !c.truncated) {
                        unique.erase(it);
                        unique.insert(c);
                    }
                }
            }
        }
        out.assign(unique.begin(), unique.end());
    }
    memo.emplace(key, out);
    return out;
}

} // namespace detail

// Maximal chains F = F_1 * ... * F_m of irreducible factors, all monic except
// the last. Recursion is bounded by `depth_cap` splittings per branch;
// branches cut off by the cap are flagged as truncated.
template <class Field>
std::vector<FactorChain<Field>> factor_completely(const NCPoly<Field> &f, std::size_t depth_cap,
                                                  const FactorOptions &opts = {})
{
    detail::require_factorable_input(f);
    if (depth_cap == 0) {
        throw PreconditionError("depth cap must be at least 1");
    }
    detail::ChainMemo<Field> memo;
    return detail::chains(f, depth_cap, opts, memo);
}

} // namespace ncf
