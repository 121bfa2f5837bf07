// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit when any
// criterion fails.
//
// usage: acceptance <path to ncfactor binary> <golden directory>

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "ncfactor.hpp"

using namespace ncf;

namespace {

using NP = NCPoly<PrimeField>;
using Pair = Factorization<PrimeField>;
using Clock = std::chrono::steady_clock;

const AlphabetPtr XY = make_alphabet({"x", "y"});

NP parse(std::string_view s, const PrimeField &F) { return parse_expression(s, F, XY); }

std::set<Pair> concrete(const std::vector<SymbolicFactorization<PrimeField>> &list)
{
    std::set<Pair> out;
    for (const auto &sf : list) {
        if (!sf.concrete) {
            throw std::logic_error("unsolved factorization over a finite field");
        }
        out.insert(*sf.concrete);
    }
    return out;
}

struct Verdict {
    bool pass;
    std::string detail;
};

// Criterion 1: the worked example, over GF(5) and GF(7).
Verdict running_example()
{
    for (std::uint32_t p : {5u, 7u}) {
        const PrimeField F(p);
        const auto f = parse("y*x*y*x*y - y", F);
        const auto list = factor_bidegree(f, {2, 3});
        const std::set<Pair> expect{{parse("y*x - 1", F), parse("y*x*y + y", F)},
                                    {parse("y*x + 1", F), parse("y*x*y - y", F)}};
        if (list.size() != 2 || concrete(list) != expect) {
            return {false, "wrong factorizations over GF(" + std::to_string(p) + ")"};
        }
        const auto a = CPoly<PrimeField>::variable(F, 0);
        const std::vector<CPoly<PrimeField>> basis{a * a - CPoly<PrimeField>::constant(F, 1)};
        for (const auto &sf : list) {
            if (reduced_groebner_basis(sf.system.equations()) != basis) {
                return {false, "system does not reduce to {a1^2 - 1} over GF(" + std::to_string(p) + ")"};
            }
        }
    }
    return {true, "2 factorizations over GF(5) and GF(7), system {a1^2 - 1}"};
}

// Criterion 2: Mora chains.
Verdict mora()
{
    std::size_t boundaries = 0;
    for (const auto &[p, roots] : std::vector<std::pair<std::uint32_t, std::vector<std::int64_t>>>{
             {5, {1, -1}}, {7, {1, 2, 3}}}) {
        const PrimeField F(p);
        std::vector<Fp> r;
        for (auto v : roots) {
            r.push_back(F.from_int(v));
        }
        const auto fam = mora_family(F, r);
        const auto all = factor_all(fam.f);
        for (const auto &chain : fam.chains) {
            NP prod = parse("1", F);
            for (const auto &c : chain) {
                prod *= c;
            }
            if (!(prod == fam.f)) {
                return {false, "chain does not multiply back over GF(" + std::to_string(p) + ")"};
            }
            for (std::size_t cut = 1; cut < chain.size(); ++cut) {
                NP g = parse("1", F), h = parse("1", F);
                for (std::size_t i = 0; i < chain.size(); ++i) {
                    (i < cut ? g : h) *= chain[i];
                }
                const DegreeSplit split{g.degree(), h.degree()};
                const auto it = all.find(split);
                if (it == all.end() || !concrete(it->second).count(normalized(g, h))) {
                    return {false, "boundary split (" + std::to_string(split.h) + "," + std::to_string(split.k) +
                                       ") missing over GF(" + std::to_string(p) + ")"};
                }
                ++boundaries;
            }
        }
    }
    return {true, std::to_string(boundaries) + " chain boundaries found"};
}

std::vector<FactorableSample<PrimeField>> homogeneous_corpus()
{
    const PrimeField F3(3);
    std::vector<FactorableSample<PrimeField>> out;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        std::mt19937_64 rng(seed);
        const std::size_t dg = 1 + rng() % 3, dh = 1 + rng() % 3;
        out.push_back(random_factorable(0x686f6d00 + seed, F3, XY, dg, dh, 1 + rng() % 4, true));
    }
    return out;
}

// Criterion 3: homogeneous algorithm.
Verdict homogeneous()
{
    std::size_t ok = 0;
    const auto corpus = homogeneous_corpus();
    for (const auto &s : corpus) {
        const auto r = factor_homogeneous(s.f, s.g.degree(), s.h.degree());
        const auto expect = normalized(s.g, s.h);
        ok += r && r->first == expect.left && r->second == expect.right;
    }
    const bool irreducible = !factor_homogeneous(parse("x*x - y*y", PrimeField(3)), 1, 1);
    return {ok == corpus.size() && irreducible, std::to_string(ok) + "/" + std::to_string(corpus.size()) +
                                                    " recovered; x*x - y*y " +
                                                    (irreducible ? "irreducible" : "factored") + " at (1,1)"};
}

// Criterion 4: common refinements.
Verdict refinement()
{
    auto corpus = homogeneous_corpus();
    corpus.push_back({parse("y*x*y*x*y", PrimeField(3)), parse("y*x", PrimeField(3)), parse("y*x*y", PrimeField(3))});
    std::size_t pairs = 0, instances = 0;
    for (const auto &s : corpus) {
        const std::size_t n = s.f.degree();
        std::vector<std::pair<NP, NP>> found;
        for (std::size_t h = 1; h < n; ++h) {
            if (auto r = factor_homogeneous(s.f, h, n - h)) {
                found.push_back(*r);
            }
        }
        instances += found.size() > 1;
        for (std::size_t a = 0; a < found.size(); ++a) {
            for (std::size_t b = a + 1; b < found.size(); ++b) {
                const auto &[g1, h1] = found[a];
                const auto &[g2, h2] = found[b];
                NP j = g1.zero();
                try {
                    j = refine(g1, h1, g2, h2);
                } catch (const Error &e) {
                    return {false, std::string("refine failed on ") + to_string(s.f) + ": " + e.what()};
                }
                if (!(g1 * j == g2) || !(j * h2 == h1)) {
                    return {false, "refinement identities fail on " + to_string(s.f)};
                }
                ++pairs;
            }
        }
    }
    return {pairs > 0, std::to_string(pairs) + " split pairs refined across " + std::to_string(instances) +
                           " multiply-factorable instances"};
}

std::vector<FactorableSample<PrimeField>> general_corpus()
{
    const PrimeField F2(2);
    std::vector<FactorableSample<PrimeField>> out;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        std::mt19937_64 rng(0x67656e00 + seed);
        const std::size_t dg = 1 + rng() % 2, dh = 1 + rng() % 2;
        out.push_back(random_factorable(rng(), F2, XY, dg, dh, 1 + rng() % 3));
    }
    return out;
}

// Criterion 5: factor_bidegree against the brute-force oracle.
Verdict oracle_equivalence()
{
    std::size_t ok = 0, divisor_ok = 0;
    const auto corpus = general_corpus();
    for (const auto &s : corpus) {
        const DegreeSplit split{s.g.degree(), s.h.degree()};
        const auto mine = concrete(factor_bidegree(s.f, split));
        ok += mine == brute_force_factor(s.f, split, {SupportMode::all_words});
        divisor_ok += mine == brute_force_factor(s.f, split, {SupportMode::divisors, 16});
    }
    return {ok == corpus.size() && divisor_ok == corpus.size(),
            std::to_string(ok) + "/" + std::to_string(corpus.size()) + " equal to the all-words oracle, " +
                std::to_string(divisor_ok) + "/" + std::to_string(corpus.size()) + " to the divisor-support oracle"};
}

// Criterion 6: knapsack filter soundness and reduction.
Verdict knapsack()
{
    const PrimeField F2(2);
    auto corpus = general_corpus();
    std::vector<NP> polys;
    for (const auto &s : corpus) {
        polys.push_back(s.f);
    }
    auto oracle_all = [&](const NP &f) {
        std::vector<std::pair<DegreeSplit, std::size_t>> out;
        if (f.is_zero() || f.degree() < 2) {
            return out;
        }
        for (const auto &split : all_splits(f)) {
            const auto found = brute_force_factor(f, split, {SupportMode::all_words});
            if (!found.empty()) {
                out.push_back({split, found.size()});
            }
        }
        return out;
    };
    // Unfactorable perturbations: add one random low-degree term, keep the
    // result when the oracle finds nothing at any split.
    std::mt19937_64 rng(0x6b6e6170);
    std::size_t added = 0;
    for (std::size_t i = 0; added < 50 && i < 5000; ++i) {
        NP f = corpus[i % corpus.size()].f;
        if (f.degree() < 2) {
            continue;
        }
        std::vector<Word::Letter> l(rng() % f.degree());
        for (auto &c : l) {
            c = Word::Letter(rng() % 2);
        }
        f.add_term(Word(std::move(l)), F2.one());
        if (!f.is_zero() && f.degree() >= 2 && oracle_all(f).empty()) {
            polys.push_back(f);
            ++added;
        }
    }
    if (added < 50) {
        return {false, "only " + std::to_string(added) + " unfactorable perturbations generated"};
    }
    std::size_t attempted_all = 0, attempted_filtered = 0, considered = 0;
    for (const auto &f : polys) {
        if (f.degree() < 2) {
            continue;
        }
        ++considered;
        const auto allowed = knapsack_splits(f);
        attempted_all += all_splits(f).size();
        attempted_filtered += allowed.size();
        for (const auto &[split, count] : oracle_all(f)) {
            if (std::find(allowed.begin(), allowed.end(), split) == allowed.end()) {
                return {false, "oracle factorization at (" + std::to_string(split.h) + "," + std::to_string(split.k) +
                                   ") filtered out for " + to_string(f)};
            }
        }
    }
    std::ostringstream msg;
    msg.precision(3);
    msg << "sound on " << considered << " polynomials; average splits " << double(attempted_all) / considered
        << " -> " << double(attempted_filtered) / considered << " (reduction factor "
        << (attempted_filtered ? double(attempted_all) / attempted_filtered : 0.0) << ")";
    return {true, msg.str()};
}

// Criterion 7: Groebner layer.
Verdict groebner()
{
    const PrimeField F5(5);
    using P = CPoly<PrimeField>;
    const P a = P::variable(F5, 0);
    const auto gb = reduced_groebner_basis<PrimeField>({a * a - P::constant(F5, 1)});
    if (gb != std::vector<P>{a * a + P::constant(F5, 4)}) {
        return {false, "reduced basis of {a1^2 - 1} is not {a1^2 + 4}"};
    }
    const auto sols = enumerate_solutions(ConstraintSystem<PrimeField>(F5, {"a1"}, gb));
    if (sols != std::vector<Assignment<PrimeField>>{{F5.from_int(1)}, {F5.from_int(4)}}) {
        return {false, "solutions of a1^2 + 4 are not {1, 4}"};
    }
    std::mt19937_64 rng(0x67726f62);
    std::size_t spairs = 0;
    for (int t = 0; t < 50; ++t) {
        const PrimeField F(t % 2 ? 5 : 3);
        std::vector<P> gens;
        const std::size_t symbols = 2 + t % 2;
        while (gens.size() < 3) {
            P g(F);
            for (std::size_t term = 0, terms = 1 + rng() % 3; term < terms; ++term) {
                std::vector<std::uint32_t> e(symbols);
                for (auto &x : e) {
                    x = std::uint32_t(rng() % 3);
                }
                g.add_term(CMonomial(std::move(e)), F.element(rng() % F.size()));
            }
            if (!g.is_zero()) {
                gens.push_back(g);
            }
        }
        const auto basis = buchberger(gens);
        for (std::size_t j = 0; j < basis.size(); ++j) {
            for (std::size_t i = 0; i < j; ++i) {
                if (!normal_form(s_polynomial(basis[i], basis[j]), basis).is_zero()) {
                    return {false, "S-polynomial does not reduce to zero in ideal " + std::to_string(t)};
                }
                ++spairs;
            }
        }
    }
    return {true, "{a1^2 + 4}, solutions {1, 4}; " + std::to_string(spairs) + " S-pairs reduce to 0 over 50 ideals"};
}

std::string capture(const std::string &cmd, int &status)
{
    FILE *pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        status = -1;
        return {};
    }
    std::string out;
    std::array<char, 4096> buf;
    for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), pipe)) > 0;) {
        out.append(buf.data(), n);
    }
    status = pclose(pipe);
    return out;
}

std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Criterion 8: CLI golden files.
Verdict cli(const std::string &binary, const std::string &golden)
{
    for (const auto &[flags, file] : std::vector<std::pair<std::string, std::string>>{
             {"--field 5", "example_gf5.txt"}, {"--field 5 --json", "example_gf5.json"}}) {
        const std::string cmd = binary + " " + flags + " 'y*x*y*x*y - y'";
        int s1 = 0, s2 = 0;
        const auto first = capture(cmd, s1);
        const auto second = capture(cmd, s2);
        if (s1 != 0 || s2 != 0) {
            return {false, "'" + flags + "' exited with an error"};
        }
        if (first != second) {
            return {false, "'" + flags + "' output differs between runs"};
        }
        if (first != read_file(golden + "/" + file)) {
            return {false, "'" + flags + "' output differs from " + file};
        }
    }
    return {true, "text and JSON match the golden files, byte-identical across runs"};
}

} // namespace

int main(int argc, char **argv)
{
    if (argc != 3) {
        std::cerr << "usage: acceptance <ncfactor binary> <golden dir>\n";
        return 2;
    }
    const std::string binary = argv[1], golden = argv[2];
    struct Criterion {
        int id;
        std::string name;
        double limit_seconds; // 0: no runtime bound
        std::function<Verdict()> check;
    };
    const std::vector<Criterion> criteria{
        {1, "running example", 1, running_example},
        {2, "Mora construction", 30, mora},
        {3, "homogeneous algorithm", 10, homogeneous},
        {4, "refinement", 0, refinement},
        {5, "oracle equivalence", 600, oracle_equivalence},
        {6, "knapsack filter", 0, knapsack},
        {7, "Groebner layer", 5, groebner},
        {8, "CLI golden files", 0, [&] { return cli(binary, golden); }},
    };
    int failures = 0;
    for (const auto &c : criteria) {
        const auto start = Clock::now();
        Verdict v{false, ""};
        try {
            v = c.check();
        } catch (const std::exception &e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
            v.pass = false;
            v.detail += "; over the time limit";
        }
        std::ostringstream t;
        t.precision(3);
        t << std::fixed << secs;
        std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << "): " << v.detail
                  << " [" << t.str() << " s]\n";
        failures += !v.pass;
    }
    return failures == 0 ? 0 : 1;
}
