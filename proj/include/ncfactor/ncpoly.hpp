#pragma once

// Sparse polynomials in the free algebra K<x_1, ..., x_m>.
//
// Coefficients are commutative polynomials in extension symbols; an ordinary
// polynomial has constant coefficients throughout. Terms are kept in
// descending deglex order, so the first term carries the leading word.

#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cpoly.hpp"
#include "word.hpp"

namespace ncf {

template <CoefficientField Field>
class NCPoly {
public:
    using field_type = Field;
    using K = typename Field::element_type;
    using Coeff = CPoly<Field>;
    using Terms = std::map<Word, Coeff, std::greater<>>;

    NCPoly(Field f, AlphabetPtr alphabet) : field_(std::move(f)), alphabet_(std::move(alphabet))
    {
        if (!alphabet_) {
            throw PreconditionError("null alphabet");
        }
    }

    static NCPoly monomial(const Field &f, AlphabetPtr a, const Word &w, const Coeff &c)
    {
        NCPoly r(f, std::move(a));
        r.add_term(w, c);
        return r;
    }
    static NCPoly monomial(const Field &f, AlphabetPtr a, const Word &w, const K &c)
    {
        return monomial(f, std::move(a), w, Coeff::constant(f, c));
    }
    static NCPoly constant(const Field &f, AlphabetPtr a, const K &c) { return monomial(f, std::move(a), Word{}, c); }
    static NCPoly variable(const Field &f, AlphabetPtr a, std::size_t letter)
    {
        return monomial(f, std::move(a), Word{Word::Letter(letter)}, f.one());
    }

    const Field &field() const noexcept { return field_; }
    const Alphabet &alphabet() const noexcept { return *alphabet_; }
    const AlphabetPtr &alphabet_ptr() const noexcept { return alphabet_; }
    const Terms &terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    // Same (empty) polynomial in this context.
    NCPoly zero() const { return NCPoly(field_, alphabet_); }

    void add_term(const Word &w, const Coeff &c)
    {
        if (!(c.field() == field_)) {
            throw ContextMismatch("coefficient over a different field");
        }
        for (auto l : w.letters()) {
            if (l >= alphabet_->size()) {
                throw ContextMismatch("word uses a letter outside the alphabet");
            }
        }
        if (c.is_zero()) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }
    void add_term(const Word &w, const K &c) { add_term(w, Coeff::constant(field_, c)); }

    Coeff coefficient(const Word &w) const
    {
        auto it = terms_.find(w);
        return it == terms_.end() ? Coeff(field_) : it->second;
    }
    // Coefficient of `w`, which must be a constant.
    K constant_coefficient(const Word &w) const { return coefficient(w).constant_value(); }

    std::size_t degree() const
    {
        require_nonzero();
        return terms_.begin()->first.size();
    }
    const Word &leading_word() const
    {
        require_nonzero();
        return terms_.begin()->first;
    }
    const Coeff &leading_coefficient() const
    {
        require_nonzero();
        return terms_.begin()->second;
    }

    bool is_homogeneous() const
    {
        return terms_.empty() || terms_.begin()->first.size() == terms_.rbegin()->first.size();
    }

    NCPoly homogeneous_part(std::size_t d) const
    {
        NCPoly r = zero();
        for (const auto &[w, c] : terms_) {
            if (w.size() == d) {
                r.terms_.emplace_hint(r.terms_.end(), w, c);
            }
        }
        return r;
    }

    bool has_constant_coefficients() const
    {
        for (const auto &[w, c] : terms_) {
            if (!c.is_constant()) {
                return false;
            }
        }
        return true;
    }

    // One past the largest extension symbol index used by any coefficient.
    std::size_t symbol_span() const
    {
        std::size_t s = 0;
        for (const auto &[w, c] : terms_) {
            s = std::max(s, c.symbol_span());
        }
        return s;
    }

    // Substitute values for the extension symbols 0..values.size()-1.
    NCPoly substitute(std::span<const K> values) const
    {
        NCPoly r = zero();
        for (const auto &[w, c] : terms_) {
            Coeff sub = c;
            for (std::size_t i = 0; i < values.size(); ++i) {
                sub = sub.substitute(i, values[i]);
            }
            r.add_term(w, sub);
        }
        return r;
    }

    // Scaled so the leading word has coefficient 1; needs a constant leading
    // coefficient.
    NCPoly monic() const
    {
        if (is_zero()) {
            return *this;
        }
        const auto lc = leading_coefficient();
        if (!lc.is_constant()) {
            throw PreconditionError("monic normalization needs a constant leading coefficient");
        }
        return *this * lc.constant_value().inverse();
    }

    NCPoly operator-() const
    {
        NCPoly r = zero();
        for (const auto &[w, c] : terms_) {
            r.terms_.emplace_hint(r.terms_.end(), w, -c);
        }
        return r;
    }
    NCPoly &operator+=(const NCPoly &o)
    {
        check_context(o);
        for (const auto &[w, c] : o.terms_) {
            add_term(w, c);
        }
        return *this;
    }
    NCPoly &operator-=(const NCPoly &o)
    {
        check_context(o);
        for (const auto &[w, c] : o.terms_) {
            add_term(w, -c);
        }
        return *this;
    }
    friend NCPoly operator+(NCPoly a, const NCPoly &b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly &b) { return a -= b; }

    friend NCPoly operator*(const NCPoly &a, const NCPoly &b)
    {
        a.check_context(b);
        NCPoly r = a.zero();
        for (const auto &[wa, ca] : a.terms_) {
            for (const auto &[wb, cb] : b.terms_) {
                r.add_term(wa * wb, ca * cb);
            }
        }
        return r;
    }
    NCPoly &operator*=(const NCPoly &o) { return *this = *this * o; }

    friend NCPoly operator*(const NCPoly &a, const Coeff &s)
    {
        NCPoly r = a.zero();
        if (s.is_zero()) {
            return r;
        }
        for (const auto &[w, c] : a.terms_) {
            r.add_term(w, c * s);
        }
        return r;
    }
    friend NCPoly operator*(const NCPoly &a, const K &s) { return a * Coeff::constant(a.field_, s); }
    friend NCPoly operator*(const K &s, const NCPoly &a) { return a * s; }

    friend bool operator==(const NCPoly &a, const NCPoly &b) { return a.terms_ == b.terms_; }
    friend bool operator<(const NCPoly &a, const NCPoly &b) { return a.terms_ < b.terms_; }

    bool same_context(const NCPoly &o) const
    {
        return field_ == o.field_ && (alphabet_ == o.alphabet_ || *alphabet_ == *o.alphabet_);
    }

private:
    void require_nonzero() const
    {
        if (terms_.empty()) {
            throw PreconditionError("degree of the zero polynomial is undefined");
        }
    }
    void check_context(const NCPoly &o) const
    {
        if (!same_context(o)) {
            throw ContextMismatch("free-algebra polynomials over different fields or alphabets");
        }
    }

    Field field_;
    AlphabetPtr alphabet_;
    Terms terms_;
};

template <class Field>
NCPoly<Field> nc_add(const NCPoly<Field> &a, const NCPoly<Field> &b) { return a + b; }
template <class Field>
NCPoly<Field> nc_mul(const NCPoly<Field> &a, const NCPoly<Field> &b) { return a * b; }
template <class Field>
NCPoly<Field> nc_scale(const NCPoly<Field> &a, const CPoly<Field> &c) { return a * c; }

// Image under the map letting all letters commute: letter i becomes
// commutative variable i.
template <class Field>
CPoly<Field> commutative_image(const NCPoly<Field> &f)
{
    CPoly<Field> r(f.field());
    for (const auto &[w, c] : f.terms()) {
        if (!c.is_constant()) {
            throw PreconditionError("commutative image needs constant coefficients");
        }
        std::vector<std::uint32_t> e(f.alphabet().size(), 0);
        for (auto l : w.letters()) {
            ++e[l];
        }
        r.add_term(CMonomial(std::move(e)), c.constant_value());
    }
    return r;
}

// Sum of c * w * z^(n - |w|) with n = deg f: homogeneous of degree n over the
// alphabet extended by z (right padding; other conventions exist).
template <class Field>
NCPoly<Field> homogenize(const NCPoly<Field> &f, const std::string &z)
{
    auto alphabet = std::make_shared<const Alphabet>(f.alphabet().extended(z));
    const auto zi = Word::Letter(alphabet->size() - 1);
    NCPoly<Field> r(f.field(), alphabet);
    if (f.is_zero()) {
        return r;
    }
    const std::size_t n = f.degree();
    for (const auto &[w, c] : f.terms()) {
        std::vector<Word::Letter> l = w.letters();
        l.resize(n, zi);
        r.add_term(Word(std::move(l)), c);
    }
    return r;
}

// Sets letter `z` to 1 and re-expresses the result over `target`, whose
// names must cover every remaining letter.
template <class Field>
NCPoly<Field> set_letter_to_one(const NCPoly<Field> &f, std::size_t z, AlphabetPtr target)
{
    std::vector<Word::Letter> map(f.alphabet().size(), 0);
    for (std::size_t i = 0; i < map.size(); ++i) {
        if (i == z) {
            continue;
        }
        auto idx = target->index_of(f.alphabet().name(i));
        if (!idx) {
            throw ContextMismatch("letter '" + f.alphabet().name(i) + "' missing from the target alphabet");
        }
        map[i] = Word::Letter(*idx);
    }
    NCPoly<Field> r(f.field(), std::move(target));
    for (const auto &[w, c] : f.terms()) {
        std::vector<Word::Letter> l;
        for (auto x : w.letters()) {
            if (x != z) {
                l.push_back(map[x]);
            }
        }
        r.add_term(Word(std::move(l)), c);
    }
    return r;
}

// Canonical text form: words spelled with `*`, explicit coefficients,
// descending deglex order, e.g. "y*x*y*x*y - y". Symbolic coefficients are
// parenthesised unless they are a single term.
template <class Field>
std::string to_string(const NCPoly<Field> &f, std::span<const std::string> symbols = {})
{
    if (f.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto &[w, c] : f.terms()) {
        std::string coeff = to_string(c, symbols);
        bool negative = false;
        if (c.size() == 1 && !coeff.empty() && coeff[0] == '-') {
            negative = true;
            coeff.erase(0, 1);
        }
        if (c.size() > 1) {
            coeff = "(" + coeff + ")";
        }
        out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
        first = false;
        if (w.empty()) {
            out += coeff;
        } else if (coeff == "1") {
            out += w.to_string(f.alphabet());
        } else {
            out += coeff + "*" + w.to_string(f.alphabet());
        }
    }
    return out;
}

} // namespace ncf
