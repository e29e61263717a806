#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "freefusion/errors.hpp"

namespace freefusion {

/// The two generators of the free monoid N*N, written 'a' and 'b' in text.
enum class Letter : unsigned char { Alpha = 0, Beta = 1 };

constexpr Letter flipped(Letter l) {
    return l == Letter::Alpha ? Letter::Beta : Letter::Alpha;
}

constexpr char letter_char(Letter l) { return l == Letter::Alpha ? 'a' : 'b'; }

/// A word over {a,b}. The empty word e is the unit of the monoid.
/// Words compare in shortlex order (length first, then a < b), which is the
/// canonical order used everywhere in this library.
class Word {
  public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }

    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

    void push_back(Letter l) { letters_.push_back(l); }

    /// Contiguous subword of `len` letters starting at `pos`.
    Word subword(std::size_t pos, std::size_t len) const {
        return Word(std::vector<Letter>(letters_.begin() + pos,
                                        letters_.begin() + pos + len));
    }

    bool starts_with(const Word& prefix) const {
        return prefix.size() <= size() &&
               std::equal(prefix.begin(), prefix.end(), begin());
    }

    bool ends_with(const Word& suffix) const {
        return suffix.size() <= size() &&
               std::equal(suffix.begin(), suffix.end(), end() - suffix.size());
    }

    friend bool operator==(const Word&, const Word&) = default;

    // shortlex
    friend std::strong_ordering operator<=>(const Word& x, const Word& y) {
        if (x.size() != y.size()) return x.size() <=> y.size();
        return x.letters_ <=> y.letters_;
    }

  private:
    std::vector<Letter> letters_;
};

inline Word concat(const Word& x, const Word& y) {
    std::vector<Letter> ls;
    ls.reserve(x.size() + y.size());
    ls.insert(ls.end(), x.begin(), x.end());
    ls.insert(ls.end(), y.begin(), y.end());
    return Word(std::move(ls));
}

/// The antimultiplicative involution: reverse the word and swap a <-> b.
/// Fixed points include e and any word of the form a...b read symmetrically.
inline Word involute(const Word& x) {
    std::vector<Letter> ls;
    ls.reserve(x.size());
    for (std::size_t i = x.size(); i-- > 0;) ls.push_back(flipped(x[i]));
    return Word(std::move(ls));
}

/// All |x|+1 factorizations x = prefix * suffix, cut point left to right.
inline std::vector<std::pair<Word, Word>> splits(const Word& x) {
    std::vector<std::pair<Word, Word>> out;
    out.reserve(x.size() + 1);
    for (std::size_t cut = 0; cut <= x.size(); ++cut)
        out.emplace_back(x.subword(0, cut), x.subword(cut, x.size() - cut));
    return out;
}

/// Grammar: word := "e" | [ab]+ . The Greek letters α, β (UTF-8) are also
/// accepted on input; output is always 7-bit 'a'/'b'/"e".
inline Word parse_word(std::string_view text) {
    if (text == "e") return Word();
    if (text.empty()) throw parse_error("empty word literal; write \"e\"");
    std::vector<Letter> ls;
    for (std::size_t i = 0; i < text.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (c == 'a') {
            ls.push_back(Letter::Alpha);
        } else if (c == 'b') {
            ls.push_back(Letter::Beta);
        } else if (c == 0xCE && i + 1 < text.size()) {
            unsigned char d = static_cast<unsigned char>(text[++i]);
            if (d == 0xB1)
                ls.push_back(Letter::Alpha); // α
            else if (d == 0xB2)
                ls.push_back(Letter::Beta); // β
            else
                throw parse_error("bad character in word: " + std::string(text));
        } else {
            throw parse_error("bad character in word: " + std::string(text));
        }
    }
    return Word(std::move(ls));
}

inline std::string format_word(const Word& x) {
    if (x.empty()) return "e";
    std::string s;
    s.reserve(x.size());
    for (Letter l : x) s.push_back(letter_char(l));
    return s;
}

/// Number of occurrences of the letter l in x.
inline std::size_t letter_count(const Word& x, Letter l) {
    return static_cast<std::size_t>(std::count(x.begin(), x.end(), l));
}

/// All words of length <= max_len in shortlex order (2^{max_len+1}-1 words).
inline std::vector<Word> words_up_to(std::size_t max_len) {
    std::vector<Word> out;
    out.emplace_back();
    std::size_t level_begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::size_t level_end = out.size();
        for (std::size_t i = level_begin; i < level_end; ++i)
            for (Letter l : {Letter::Alpha, Letter::Beta}) {
                Word w = out[i];
                w.push_back(l);
                out.push_back(std::move(w));
            }
        level_begin = level_end;
    }
    return out;
}

} // namespace freefusion
