#pragma once

// Command-line front end: a parsed request is factored and reported as text
// or JSON. Output is fully determined by the request.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "factor.hpp"
#include "parser.hpp"

namespace ncf {

struct Request {
    std::string expression;
    std::optional<std::uint32_t> prime; // unset means the rationals
    std::vector<std::string> vars;      // empty: inferred from the expression
    std::optional<DegreeSplit> split;
    bool groebner = false;
    bool knapsack = true;
    bool complete = false;
    bool json = false;
    std::optional<std::size_t> max_solutions; // per split, in the report
    unsigned long long budget = 1'000'000;     // points of F_p^s enumerated per split
};

enum ExitCode : int {
    exit_ok = 0,
    exit_parse_error = 1,
    exit_error = 2,
    exit_cap_exceeded = 3,
};

namespace detail {

using Json = nlohmann::ordered_json;

template <class Field>
std::string product_string(const NCPoly<Field> &g, const NCPoly<Field> &h, std::span<const std::string> symbols = {})
{
    return "(" + to_string(g, symbols) + ")*(" + to_string(h, symbols) + ")";
}

template <class Field>
std::string assignment_string(const std::vector<std::string> &symbols, const Assignment<Field> &point)
{
    std::string out;
    for (std::size_t i = 0; i < point.size(); ++i) {
        out += (i ? ", " : "") + symbols[i] + " = " + point[i].to_string();
    }
    return out;
}

template <class Field>
Json factorization_json(const SymbolicFactorization<Field> &sf)
{
    const auto &symbols = sf.system.symbols();
    Json j;
    if (sf.concrete) {
        j["G"] = to_string(sf.concrete->left);
        j["H"] = to_string(sf.concrete->right);
    } else {
        j["G"] = to_string(sf.g, symbols);
        j["H"] = to_string(sf.h, symbols);
    }
    j["symbols"] = symbols;
    j["system"] = Json::array();
    for (const auto &e : sf.system.equations()) {
        j["system"].push_back(to_string(e, symbols));
    }
    if (sf.reduced_basis) {
        j["reduced_basis"] = Json::array();
        for (const auto &e : *sf.reduced_basis) {
            j["reduced_basis"].push_back(to_string(e, symbols));
        }
    } else {
        j["reduced_basis"] = nullptr;
    }
    if (sf.solutions) {
        j["solutions"] = Json::array();
        for (const auto &pt : *sf.solutions) {
            Json a = Json::object();
            for (std::size_t i = 0; i < pt.size(); ++i) {
                a[symbols[i]] = pt[i].to_string();
            }
            j["solutions"].push_back(std::move(a));
        }
    } else {
        j["solutions"] = nullptr;
    }
    return j;
}

// Factorizations at one split share a symbolic form; print it once.
template <class Field>
void split_text(std::ostream &out, DegreeSplit split, const std::vector<SymbolicFactorization<Field>> &list,
                std::size_t shown)
{
    out << "split (" << split.h << "," << split.k << "): " << list.size()
        << (list.size() == 1 ? " factorization\n" : " factorizations\n");
    const auto &first = list.front();
    const auto &symbols = first.system.symbols();
    if (!symbols.empty()) {
        out << "  symbolic: " << product_string(first.g, first.h, symbols) << "\n";
        for (const auto &e : first.system.equations()) {
            out << "  system: " << to_string(e, symbols) << " = 0\n";
        }
    }
    if (first.reduced_basis && !symbols.empty()) {
        out << "  reduced basis: {";
        for (std::size_t i = 0; i < first.reduced_basis->size(); ++i) {
            out << (i ? ", " : "") << to_string((*first.reduced_basis)[i], symbols);
        }
        out << "}\n";
    }
    for (std::size_t i = 0; i < list.size() && i < shown; ++i) {
        const auto &sf = list[i];
        out << "  ";
        if (!sf.concrete) {
            out << "solutions not enumerated\n";
            continue;
        }
        if (!symbols.empty()) {
            out << assignment_string<Field>(symbols, sf.solutions->front()) << ": ";
        }
        out << product_string(sf.concrete->left, sf.concrete->right) << "\n";
    }
    if (shown < list.size()) {
        out << "  ... " << list.size() - shown << " more\n";
    }
}

template <class Field>
int run_in(const Request &req, const Field &field, std::ostream &out)
{
    auto vars = req.vars.empty() ? infer_variables(req.expression) : req.vars;
    if (vars.empty()) {
        vars.push_back("x");
    }
    const auto f = parse_expression(req.expression, field, make_alphabet(vars));
    if (f.is_zero()) {
        throw PreconditionError("cannot factor the zero polynomial");
    }
    FactorOptions opts;
    opts.groebner = req.groebner;
    opts.knapsack = req.knapsack;
    opts.enumeration_cap = req.budget;

    SplitMap<Field> found;
    if (req.split) {
        auto list = factor_bidegree(f, *req.split, opts);
        if (!list.empty()) {
            found.emplace(*req.split, std::move(list));
        }
    } else if (f.degree() >= 2) {
        found = factor_all(f, opts);
    }
    std::vector<FactorChain<Field>> chains;
    if (req.complete) {
        chains = factor_completely(f, std::max<std::size_t>(1, f.degree()), opts);
    }
    const std::size_t shown = req.max_solutions.value_or(SIZE_MAX);

    if (req.json) {
        Json j;
        j["input"] = to_string(f);
        j["field"] = field.name();
        j["splits"] = Json::array();
        for (const auto &[split, list] : found) {
            Json s;
            s["h"] = split.h;
            s["k"] = split.k;
            s["factorizations"] = Json::array();
            for (std::size_t i = 0; i < list.size() && i < shown; ++i) {
                s["factorizations"].push_back(factorization_json(list[i]));
            }
            j["splits"].push_back(std::move(s));
        }
        if (req.complete) {
            j["chains"] = Json::array();
            for (const auto &c : chains) {
                Json factors = Json::array();
                for (const auto &p : c.factors) {
                    factors.push_back(to_string(p));
                }
                j["chains"].push_back({{"factors", std::move(factors)}, {"truncated", c.truncated}});
            }
        }
        out << j.dump(2) << "\n";
        return exit_ok;
    }

    out << "input: " << to_string(f) << "\n";
    out << "field: " << field.name() << "\n";
    if (found.empty()) {
        if (req.split) {
            out << "irreducible at (" << req.split->h << "," << req.split->k << ")\n";
        } else {
            out << "irreducible\n";
        }
    }
    for (const auto &[split, list] : found) {
        split_text(out, split, list, shown);
    }
    if (req.complete) {
        out << "chains: " << chains.size() << "\n";
        for (const auto &c : chains) {
            out << " ";
            for (const auto &p : c.factors) {
                out << " (" << to_string(p) << ")";
            }
            out << (c.truncated ? "  [truncated]\n" : "\n");
        }
    }
    return exit_ok;
}

} // namespace detail

// Factors the request and writes the report to `out`; diagnostics go to
// `err`. Returns the process exit code.
inline int run(const Request &req, std::ostream &out, std::ostream &err)
{
    try {
        if (req.prime) {
            return detail::run_in(req, PrimeField(*req.prime), out);
        }
        return detail::run_in(req, RationalField{}, out);
    } catch (const ParseError &e) {
        err << "error: " << e.what() << "\n";
        return exit_parse_error;
    } catch (const SearchSpaceTooLarge &e) {
        err << "error: " << e.what() << " (cap " << e.cap() << ", raise it with --budget)\n";
        return exit_cap_exceeded;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return exit_error;
    }
}

} // namespace ncf
