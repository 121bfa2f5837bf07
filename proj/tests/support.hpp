#pragma once

// Seeded generators shared by the property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "ncfactor.hpp"

namespace ncf::testing {

inline Fp random_fp(std::mt19937_64 &rng, const PrimeField &F) { return F.element(rng() % F.size()); }

inline Rational random_rational(std::mt19937_64 &rng)
{
    const auto num = std::int64_t(rng() % 41) - 20;
    const auto den = std::int64_t(rng() % 9) + 1;
    return RationalField{}.from_fraction(num, den);
}

// Random polynomial in `symbols` symbols, exponents below `max_exp`.
template <class Field, class Gen>
CPoly<Field> random_cpoly(std::mt19937_64 &rng, const Field &F, Gen coeff, std::size_t symbols, std::size_t terms,
                          std::uint32_t max_exp)
{
    CPoly<Field> p(F);
    for (std::size_t t = 0; t < terms; ++t) {
        std::vector<std::uint32_t> e(symbols);
        for (auto &x : e) {
            x = std::uint32_t(rng() % max_exp);
        }
        p.add_term(CMonomial(std::move(e)), coeff());
    }
    return p;
}

inline CPoly<PrimeField> random_cpoly(std::mt19937_64 &rng, const PrimeField &F, std::size_t symbols,
                                      std::size_t terms, std::uint32_t max_exp = 3)
{
    return random_cpoly(rng, F, [&] { return random_fp(rng, F); }, symbols, terms, max_exp);
}

// Random free-algebra polynomial of degree at most `max_degree` (may be zero).
template <class Field, class Gen>
NCPoly<Field> random_ncpoly(std::mt19937_64 &rng, const Field &F, const AlphabetPtr &a, Gen coeff,
                            std::size_t max_degree, std::size_t terms)
{
    NCPoly<Field> p(F, a);
    for (std::size_t t = 0; t < terms; ++t) {
        std::vector<Word::Letter> l(rng() % (max_degree + 1));
        for (auto &c : l) {
            c = Word::Letter(rng() % a->size());
        }
        p.add_term(Word(std::move(l)), coeff());
    }
    return p;
}

inline NCPoly<PrimeField> random_ncpoly(std::mt19937_64 &rng, const PrimeField &F, const AlphabetPtr &a,
                                        std::size_t max_degree, std::size_t terms)
{
    return random_ncpoly(rng, F, a, [&] { return random_fp(rng, F); }, max_degree, terms);
}

inline CPoly<PrimeField> alpha(const PrimeField &F, std::size_t i = 0) { return CPoly<PrimeField>::variable(F, i); }

inline CPoly<PrimeField> cconst(const PrimeField &F, std::int64_t c) { return CPoly<PrimeField>::constant(F, c); }

} // namespace ncf::testing
