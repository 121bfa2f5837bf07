#pragma once

// Free monoid on a finite alphabet.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace ncf {

class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names) : names_(std::move(names))
    {
        if (names_.size() > 255) {
            throw PreconditionError("alphabet limited to 255 letters");
        }
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (names_[i].empty()) {
                throw PreconditionError("empty variable name");
            }
            for (std::size_t j = 0; j < i; ++j) {
                if (names_[i] == names_[j]) {
                    throw PreconditionError("duplicate variable name '" + names_[i] + "'");
                }
            }
        }
    }
    Alphabet(std::initializer_list<std::string> names) : Alphabet(std::vector<std::string>(names)) {}

    std::size_t size() const noexcept { return names_.size(); }
    const std::string &name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string> &names() const noexcept { return names_; }

    std::optional<std::size_t> index_of(std::string_view name) const
    {
        auto it = std::find(names_.begin(), names_.end(), name);
        if (it == names_.end()) {
            return std::nullopt;
        }
        return std::size_t(it - names_.begin());
    }

    // A copy with one more letter appended (it sorts after all existing ones).
    Alphabet extended(const std::string &name) const
    {
        if (index_of(name)) {
            throw PreconditionError("variable '" + name + "' already in the alphabet");
        }
        auto n = names_;
        n.push_back(name);
        return Alphabet(std::move(n));
    }

    friend bool operator==(const Alphabet &, const Alphabet &) = default;

private:
    std::vector<std::string> names_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

inline AlphabetPtr make_alphabet(std::vector<std::string> names)
{
    return std::make_shared<const Alphabet>(std::move(names));
}

class Word {
public:
    using Letter = std::uint8_t;

    Word() = default;
    Word(std::initializer_list<Letter> letters) : letters_(letters) {}
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    // Word spelled with one-character letter names, e.g. parse("yxy", {x,y}).
    static Word spell(std::string_view text, const Alphabet &alphabet)
    {
        std::vector<Letter> l;
        for (char c : text) {
            auto idx = alphabet.index_of(std::string_view(&c, 1));
            if (!idx) {
                throw PreconditionError(std::string("unknown letter '") + c + "'");
            }
            l.push_back(Letter(*idx));
        }
        return Word(std::move(l));
    }

    std::size_t size() const noexcept { return letters_.size(); }
    std::size_t degree() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    const std::vector<Letter> &letters() const noexcept { return letters_; }

    Word prefix(std::size_t n) const { return Word(std::vector<Letter>(letters_.begin(), letters_.begin() + long(n))); }
    Word suffix(std::size_t n) const { return Word(std::vector<Letter>(letters_.end() - long(n), letters_.end())); }
    // Letters [from, size()).
    Word drop(std::size_t from) const { return Word(std::vector<Letter>(letters_.begin() + long(from), letters_.end())); }

    bool starts_with(const Word &p) const
    {
        return p.size() <= size() && std::equal(p.letters_.begin(), p.letters_.end(), letters_.begin());
    }
    bool ends_with(const Word &s) const
    {
        return s.size() <= size() && std::equal(s.letters_.begin(), s.letters_.end(), letters_.end() - long(s.size()));
    }

    friend Word operator*(const Word &u, const Word &v)
    {
        std::vector<Letter> l;
        l.reserve(u.size() + v.size());
        l.insert(l.end(), u.letters_.begin(), u.letters_.end());
        l.insert(l.end(), v.letters_.begin(), v.letters_.end());
        return Word(std::move(l));
    }

    // Degree first, then lexicographic in alphabet order.
    friend bool operator==(const Word &, const Word &) = default;
    friend std::strong_ordering operator<=>(const Word &a, const Word &b)
    {
        if (a.size() != b.size()) {
            return a.size() <=> b.size();
        }
        return a.letters_ <=> b.letters_;
    }

    std::string to_string(const Alphabet &alphabet, std::string_view sep = "*") const
    {
        std::string s;
        for (std::size_t i = 0; i < letters_.size(); ++i) {
            if (i) {
                s += sep;
            }
            s += alphabet.name(letters_[i]);
        }
        return s;
    }

private:
    std::vector<Letter> letters_;
};

inline Word word_concat(const Word &u, const Word &v) { return u * v; }

// w with m = g*w, when g is a prefix of m.
inline std::optional<Word> left_quotient(const Word &m, const Word &g)
{
    if (!m.starts_with(g)) {
        return std::nullopt;
    }
    return m.drop(g.size());
}

// w with m = w*h, when h is a suffix of m.
inline std::optional<Word> right_quotient(const Word &m, const Word &h)
{
    if (!m.ends_with(h)) {
        return std::nullopt;
    }
    return m.prefix(m.size() - h.size());
}

// Every j in [1, min(|g|,|h|)] where the length-j suffix of g equals the
// length-j prefix of h, ascending.
inline std::vector<std::size_t> overlap_lengths(const Word &g, const Word &h)
{
    std::vector<std::size_t> out;
    for (std::size_t j = 1; j <= std::min(g.size(), h.size()); ++j) {
        if (h.starts_with(g.suffix(j))) {
            out.push_back(j);
        }
    }
    return out;
}

// All words of length exactly `length`, ascending.
inline std::vector<Word> words_of_length(std::size_t alphabet_size, std::size_t length)
{
    std::vector<Word> out{Word{}};
    for (std::size_t i = 0; i < length; ++i) {
        std::vector<Word> next;
        next.reserve(out.size() * alphabet_size);
        for (const auto &w : out) {
            for (std::size_t a = 0; a < alphabet_size; ++a) {
                next.push_back(w * Word{Word::Letter(a)});
            }
        }
        out = std::move(next);
    }
    return out;
}

} // namespace ncf
