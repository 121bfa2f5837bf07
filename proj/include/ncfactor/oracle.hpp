#pragma once

// Reference implementations for testing: exhaustive factorization over small
// prime fields, the Y*f(XY) family with its known factor chains, and seeded
// random products.
//
// Nothing here shares code with the factorization algorithms beyond the
// polynomial arithmetic itself.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "factor.hpp"
#include "ncpoly.hpp"

namespace ncf {

enum class SupportMode {
    // G ranges over prefixes of words of F, H over suffixes (capped).
    divisors,
    // G and H range over all words of degree <= h and <= k.
    all_words,
};

struct OracleOptions {
    SupportMode mode = SupportMode::divisors;
    std::size_t support_cap = 12;            // words per factor, divisors mode
    unsigned long long budget = 20'000'000;  // candidate assignments enumerated
};

namespace detail {

template <class Field>
std::vector<NCPoly<Field>> enumerate_polys(const NCPoly<Field> &ctx, const std::vector<Word> &support,
                                           std::size_t degree, bool monic)
{
    const auto &F = ctx.field();
    std::vector<NCPoly<Field>> out;
    std::vector<std::uint64_t> digits(support.size(), 0);
    while (true) {
        NCPoly<Field> p = ctx.zero();
        for (std::size_t i = 0; i < support.size(); ++i) {
            p.add_term(support[i], F.element(digits[i]));
        }
        if (!p.is_zero() && p.degree() == degree && (!monic || p.leading_coefficient().constant_value().is_one())) {
            out.push_back(std::move(p));
        }
        std::size_t i = 0;
        while (i < digits.size() && ++digits[i] == F.size()) {
            digits[i++] = 0;
        }
        if (i == digits.size()) {
            break;
        }
    }
    return out;
}

inline unsigned long long checked_power(std::uint64_t base, std::size_t exp, unsigned long long budget)
{
    unsigned long long r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (r > budget / base) {
            throw BudgetExceeded("oracle enumeration exceeds budget " + std::to_string(budget), budget);
        }
        r *= base;
    }
    return r;
}

inline std::vector<Word> words_up_to(std::size_t alphabet_size, std::size_t degree)
{
    std::vector<Word> out;
    for (std::size_t d = degree + 1; d-- > 0;) {
        auto ws = words_of_length(alphabet_size, d);
        out.insert(out.end(), ws.rbegin(), ws.rend());
    }
    return out;
}

// Solves f = fixed*X (unknown_on_right) or f = X*fixed for X supported on
// `unknowns`, by Gaussian elimination. nullopt when inconsistent.
template <class Field>
std::optional<NCPoly<Field>> solve_linear_factor(const NCPoly<Field> &f, const NCPoly<Field> &fixed,
                                                 const std::vector<Word> &unknowns, bool unknown_on_right)
{
    using K = typename Field::element_type;
    const auto &F = f.field();
    std::map<Word, std::size_t> row_of;
    auto row = [&](const Word &w) {
        auto [it, inserted] = row_of.try_emplace(w, row_of.size());
        return it->second;
    };
    for (const auto &[w, c] : f.terms()) {
        row(w);
    }
    for (const auto &[w, c] : fixed.terms()) {
        for (const auto &u : unknowns) {
            row(unknown_on_right ? w * u : u * w);
        }
    }
    const std::size_t cols = unknowns.size();
    std::vector<std::vector<K>> m(row_of.size(), std::vector<K>(cols + 1, F.zero()));
    for (const auto &[w, c] : fixed.terms()) {
        for (std::size_t j = 0; j < cols; ++j) {
            m[row_of.at(unknown_on_right ? w * unknowns[j] : unknowns[j] * w)][j] += c.constant_value();
        }
    }
    for (const auto &[w, c] : f.terms()) {
        m[row_of.at(w)][cols] = c.constant_value();
    }
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t sel = r;
        while (sel < m.size() && m[sel][c].is_zero()) {
            ++sel;
        }
        if (sel == m.size()) {
            continue;
        }
        std::swap(m[sel], m[r]);
        const K inv = m[r][c].inverse();
        for (auto &x : m[r]) {
            x *= inv;
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i != r && !m[i][c].is_zero()) {
                const K factor = m[i][c];
                for (std::size_t j = c; j <= cols; ++j) {
                    m[i][j] -= factor * m[r][j];
                }
            }
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < m.size(); ++i) {
        if (!m[i][cols].is_zero()) {
            return std::nullopt;
        }
    }
    if (pivot_col.size() != cols) {
        // Multiplication by a nonzero element is injective in a free algebra.
        throw std::logic_error("underdetermined factor equation");
    }
    NCPoly<Field> x = f.zero();
    for (std::size_t i = 0; i < r; ++i) {
        x.add_term(unknowns[pivot_col[i]], m[i][cols]);
    }
    return x;
}

} // namespace detail

// Every factorization F = G*H at `split` (G monic in its leading word) whose
// factors lie in the declared candidate space.
template <class Field>
std::set<Factorization<Field>> brute_force_factor(const NCPoly<Field> &f, DegreeSplit split,
                                                  const OracleOptions &opts = {})
{
    static_assert(Field::is_finite, "the brute-force oracle enumerates a finite field");
    if (f.is_zero() || !f.has_constant_coefficients() || f.degree() != split.h + split.k || split.h == 0 ||
        split.k == 0) {
        throw PreconditionError("oracle needs a nonzero constant polynomial of degree h + k");
    }
    const auto &F = f.field();
    std::set<Factorization<Field>> out;

    if (opts.mode == SupportMode::divisors) {
        std::set<Word, std::greater<>> left, right;
        for (const auto &[w, c] : f.terms()) {
            for (std::size_t len = 0; len <= std::min(split.h, w.size()); ++len) {
                left.insert(w.prefix(len));
            }
            for (std::size_t len = 0; len <= std::min(split.k, w.size()); ++len) {
                right.insert(w.suffix(len));
            }
        }
        std::vector<Word> ls(left.begin(), left.end()), rs(right.begin(), right.end());
        ls.resize(std::min(ls.size(), opts.support_cap));
        rs.resize(std::min(rs.size(), opts.support_cap));
        detail::checked_power(F.size(), ls.size() + rs.size(), opts.budget);
        const auto gs = detail::enumerate_polys(f, ls, split.h, true);
        const auto hs = detail::enumerate_polys(f, rs, split.k, false);
        for (const auto &g : gs) {
            for (const auto &h : hs) {
                if (g * h == f) {
                    out.insert({g, h});
                }
            }
        }
        return out;
    }

    // All words: enumerate the factor with fewer candidate words and solve
    // the resulting linear system for the other one.
    const auto gw = detail::words_up_to(f.alphabet().size(), split.h);
    const auto hw = detail::words_up_to(f.alphabet().size(), split.k);
    const bool enumerate_left = gw.size() <= hw.size();
    detail::checked_power(F.size(), enumerate_left ? gw.size() : hw.size(), opts.budget);
    if (enumerate_left) {
        for (const auto &g : detail::enumerate_polys(f, gw, split.h, true)) {
            auto h = detail::solve_linear_factor(f, g, hw, true);
            if (h && !h->is_zero() && h->degree() == split.k && g * *h == f) {
                out.insert({g, *h});
            }
        }
    } else {
        for (const auto &h : detail::enumerate_polys(f, hw, split.k, true)) {
            auto g = detail::solve_linear_factor(f, h, gw, false);
            if (g && !g->is_zero() && g->degree() == split.h && *g * h == f) {
                const auto lc = g->leading_coefficient().constant_value();
                out.insert({*g * lc.inverse(), h * lc});
            }
        }
    }
    return out;
}

template <class Field>
struct MoraFamily {
    NCPoly<Field> f;
    // Chains f_1(yx)...f_i(yx) * y * f_{i+1}(xy)...f_k(xy), i = 0..k.
    std::vector<std::vector<NCPoly<Field>>> chains;
};

// y*f(xy) for f(t) = prod (t - r_i) over the alphabet {x, y}.
template <class Field>
MoraFamily<Field> mora_family(const Field &field, const std::vector<typename Field::element_type> &roots)
{
    for (std::size_t i = 0; i < roots.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (roots[i] == roots[j]) {
                throw PreconditionError("roots must be distinct");
            }
        }
    }
    auto alphabet = make_alphabet({"x", "y"});
    const auto x = NCPoly<Field>::variable(field, alphabet, 0);
    const auto y = NCPoly<Field>::variable(field, alphabet, 1);
    auto factor_xy = [&](const auto &r) { return x * y - NCPoly<Field>::constant(field, alphabet, r); };
    auto factor_yx = [&](const auto &r) { return y * x - NCPoly<Field>::constant(field, alphabet, r); };

    NCPoly<Field> f = y;
    for (const auto &r : roots) {
        f *= factor_xy(r);
    }
    MoraFamily<Field> out{f, {}};
    for (std::size_t i = 0; i <= roots.size(); ++i) {
        std::vector<NCPoly<Field>> chain;
        for (std::size_t t = 0; t < i; ++t) {
            chain.push_back(factor_yx(roots[t]));
        }
        chain.push_back(y);
        for (std::size_t t = i; t < roots.size(); ++t) {
            chain.push_back(factor_xy(roots[t]));
        }
        NCPoly<Field> prod = NCPoly<Field>::constant(field, alphabet, field.one());
        for (const auto &c : chain) {
            prod *= c;
        }
        if (!(prod == f)) {
            throw std::logic_error("predicted chain does not multiply back to y*f(xy)");
        }
        out.chains.push_back(std::move(chain));
    }
    return out;
}

// Seeded random polynomial of degree exactly `degree` with at most
// `term_cap` terms (all of degree `degree` when homogeneous).
template <class Field>
NCPoly<Field> random_polynomial(std::mt19937_64 &rng, const Field &field, const AlphabetPtr &alphabet,
                                std::size_t degree, std::size_t term_cap, bool homogeneous = false)
{
    auto random_word = [&](std::size_t len) {
        std::vector<Word::Letter> l(len);
        for (auto &c : l) {
            c = Word::Letter(rng() % alphabet->size());
        }
        return Word(std::move(l));
    };
    auto nonzero = [&] {
        if constexpr (Field::is_finite) {
            return field.element(1 + rng() % (field.size() - 1));
        } else {
            std::int64_t v = std::int64_t(rng() % 7) - 3;
            return field.from_int(v == 0 ? 4 : v);
        }
    };
    NCPoly<Field> p(field, alphabet);
    const Word lead = random_word(degree);
    p.add_term(lead, nonzero());
    for (std::size_t t = 1; t < term_cap; ++t) {
        const std::size_t len = homogeneous ? degree : rng() % (degree + 1);
        const Word w = random_word(len);
        if (w != lead) {
            p.add_term(w, nonzero());
        }
    }
    return p;
}

template <class Field>
struct FactorableSample {
    NCPoly<Field> f, g, h;
};

template <class Field>
FactorableSample<Field> random_factorable(std::uint64_t seed, const Field &field, const AlphabetPtr &alphabet,
                                          std::size_t deg_g, std::size_t deg_h, std::size_t term_cap,
                                          bool homogeneous = false)
{
    if (deg_g == 0 || deg_h == 0 || term_cap == 0) {
        throw PreconditionError("random_factorable needs positive degrees and term cap");
    }
    std::mt19937_64 rng(seed);
    auto g = random_polynomial(rng, field, alphabet, deg_g, term_cap, homogeneous);
    auto h = random_polynomial(rng, field, alphabet, deg_h, term_cap, homogeneous);
    auto f = g * h;
    return {std::move(f), std::move(g), std::move(h)};
}

// G monic in its leading word with H absorbing the scalar.
template <class Field>
Factorization<Field> normalized(const NCPoly<Field> &g, const NCPoly<Field> &h)
{
    const auto lc = g.leading_coefficient().constant_value();
    return {g * lc.inverse(), h * lc};
}

} // namespace ncf
