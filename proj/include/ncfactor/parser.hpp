#pragma once

// Expression reader for free-algebra polynomials.
//
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | power
//   power  := atom ('^' integer)?
//   atom   := integer ('/' integer)? | identifier | '(' expr ')'
//
// `*` is non-commutative concatenation; whitespace is ignored. Identifiers
// are [A-Za-z_][A-Za-z0-9_]* and must belong to the alphabet.

#include <algorithm>
#include <cctype>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ncpoly.hpp"

namespace ncf {

namespace detail {

inline bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

template <class Field>
class ExprParser {
public:
    using Poly = NCPoly<Field>;

    ExprParser(std::string_view text, const Field &field, AlphabetPtr alphabet)
        : text_(text), field_(field), alphabet_(std::move(alphabet))
    {
    }

    Poly parse()
    {
        Poly p = expr();
        skip_space();
        if (pos_ != text_.size()) {
            throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_, "'+', '-', '*', '^' or end of input");
        }
        return p;
    }

private:
    static constexpr std::string_view operand = "integer, identifier, '(' or '-'";
    static constexpr std::size_t max_exponent = 4096;

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }
    bool accept(char c)
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly one() const { return Poly::constant(field_, alphabet_, field_.one()); }

    Poly expr()
    {
        Poly acc = term();
        while (true) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Poly term()
    {
        Poly acc = factor();
        while (accept('*')) {
            acc = acc * factor();
        }
        return acc;
    }

    Poly factor()
    {
        if (accept('-')) {
            return -factor();
        }
        return power();
    }

    Poly power()
    {
        Poly base = atom();
        if (!accept('^')) {
            return base;
        }
        skip_space();
        const std::size_t at = pos_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            throw ParseError("missing exponent", pos_, "non-negative integer");
        }
        const BigInt e = integer();
        if (e > max_exponent) {
            throw ParseError("exponent too large", at);
        }
        Poly r = one();
        for (auto i = e.convert_to<std::size_t>(); i > 0; --i) {
            r = r * base;
        }
        return r;
    }

    BigInt integer()
    {
        BigInt v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

    Poly atom()
    {
        skip_space();
        if (pos_ >= text_.size()) {
            throw ParseError("unexpected end of input", pos_, std::string(operand));
        }
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t at = pos_;
            const BigInt num = integer();
            BigInt den = 1;
            if (accept('/')) {
                skip_space();
                if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                    throw ParseError("missing denominator", pos_, "integer");
                }
                den = integer();
            }
            try {
                return Poly::constant(field_, alphabet_, field_.from_fraction(num, den));
            } catch (const DivisionByZero &) {
                throw ParseError("coefficient not defined in " + field_.name(), at);
            }
        }
        if (ident_start(c)) {
            const std::size_t at = pos_;
            while (pos_ < text_.size() && ident_char(text_[pos_])) {
                ++pos_;
            }
            const std::string name(text_.substr(at, pos_ - at));
            const auto idx = alphabet_->index_of(name);
            if (!idx) {
                throw ParseError("unknown identifier '" + name + "'", at, "a variable in the alphabet");
            }
            return Poly::variable(field_, alphabet_, *idx);
        }
        if (accept('(')) {
            Poly inner = expr();
            if (!accept(')')) {
                throw ParseError(pos_ < text_.size() ? "unexpected '" + std::string(1, text_[pos_]) + "'"
                                                     : "unexpected end of input",
                                 pos_, "')'");
            }
            return inner;
        }
        throw ParseError("unexpected '" + std::string(1, c) + "'", pos_, std::string(operand));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    Field field_;
    AlphabetPtr alphabet_;
};

} // namespace detail

template <class Field>
NCPoly<Field> parse_expression(std::string_view text, const Field &field, AlphabetPtr alphabet)
{
    return detail::ExprParser<Field>(text, field, std::move(alphabet)).parse();
}

// Sorted distinct identifiers of `text`, for when no variable list is given.
inline std::vector<std::string> infer_variables(std::string_view text)
{
    std::set<std::string> names;
    for (std::size_t i = 0; i < text.size();) {
        if (detail::ident_start(text[i])) {
            std::size_t j = i;
            while (j < text.size() && detail::ident_char(text[j])) {
                ++j;
            }
            names.emplace(text.substr(i, j - i));
            i = j;
        } else if (std::isdigit(static_cast<unsigned char>(text[i]))) {
            // A number glued to letters ("2x") is not an identifier; the parser rejects it.
            while (i < text.size() && detail::ident_char(text[i])) {
                ++i;
            }
        } else {
            ++i;
        }
    }
    return {names.begin(), names.end()};
}

} // namespace ncf
