#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ncfactor.hpp"

namespace {

std::vector<std::string> split_list(const std::string &text)
{
    std::vector<std::string> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Factor polynomials in non-commuting variables over GF(p) or QQ."};
    ncf::Request req;

    std::uint32_t prime = 0;
    bool rationals = false;
    std::string vars;
    std::string degrees;
    bool no_knapsack = false;
    std::size_t max_solutions = 0;
    std::string expression;

    auto *field_opt = app.add_option("--field", prime, "prime modulus p of the coefficient field GF(p)");
    auto *q_opt = app.add_flag("--rationals", rationals, "use the rational numbers as coefficient field");
    field_opt->excludes(q_opt);
    app.add_option("--vars", vars, "comma-separated variable names in alphabet order (default: sorted identifiers)");
    app.add_option("--degrees", degrees, "restrict to one degree split h,k");
    app.add_flag("--no-knapsack", no_knapsack, "try every degree split instead of filtering by commutative image");
    app.add_flag("--groebner", req.groebner, "report the reduced lex Groebner basis of each symbol system");
    app.add_flag("--complete", req.complete, "also list complete chains of irreducible factors");
    app.add_flag("--json", req.json, "emit JSON instead of text");
    app.add_option("--max-solutions", max_solutions, "report at most N factorizations per split");
    app.add_option("--budget", req.budget, "maximum number of symbol assignments enumerated per split")
        ->check(CLI::PositiveNumber);
    app.add_option("expression", expression, "polynomial, or - to read it from stdin")->required();

    CLI11_PARSE(app, argc, argv);

    if (field_opt->count() == 0 && !rationals) {
        std::cerr << "error: choose a coefficient field with --field <p> or --rationals\n";
        return ncf::exit_error;
    }
    if (field_opt->count() > 0) {
        req.prime = prime;
    }
    if (expression == "-") {
        expression.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    }
    req.expression = expression;
    req.vars = split_list(vars);
    req.knapsack = !no_knapsack;
    if (max_solutions > 0) {
        req.max_solutions = max_solutions;
    }
    if (!degrees.empty()) {
        const auto parts = split_list(degrees);
        std::size_t h = 0, k = 0;
        try {
            if (parts.size() != 2) {
                throw std::invalid_argument("two values");
            }
            h = std::stoul(parts[0]);
            k = std::stoul(parts[1]);
        } catch (const std::exception &) {
            std::cerr << "error: --degrees expects h,k with positive integers\n";
            return ncf::exit_error;
        }
        req.split = ncf::DegreeSplit{h, k};
    }
    return ncf::run(req, std::cout, std::cerr);
}
