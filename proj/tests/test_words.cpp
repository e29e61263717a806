#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "freefusion/word.hpp"

using namespace freefusion;

TEST_CASE("involution on the named examples") {
    CHECK(involute(Word()) == Word());
    CHECK(involute(parse_word("a")) == parse_word("b"));
    CHECK(involute(parse_word("aba")) == parse_word("bab"));
}

TEST_CASE("involution is an involution and antimultiplicative") {
    // brute force over all words of length <= 4, pairs up to length 6 total
    for (const Word& x : words_up_to(4)) CHECK(involute(involute(x)) == x);
    for (const Word& x : words_up_to(6))
        for (const Word& y : words_up_to(6 - x.size()))
            CHECK(involute(concat(x, y)) == concat(involute(y), involute(x)));
}

TEST_CASE("splits enumerate every factorization") {
    CHECK(splits(Word()).size() == 1);
    auto s = splits(parse_word("ab"));
    REQUIRE(s.size() == 3);
    CHECK(s[0] == std::pair{parse_word("e"), parse_word("ab")});
    CHECK(s[1] == std::pair{parse_word("a"), parse_word("b")});
    CHECK(s[2] == std::pair{parse_word("ab"), parse_word("e")});
    for (const Word& x : words_up_to(5)) {
        auto sx = splits(x);
        CHECK(sx.size() == x.size() + 1);
        for (const auto& [a, g] : sx) CHECK(concat(a, g) == x);
    }
}

TEST_CASE("parse and format") {
    CHECK(parse_word("e") == Word());
    CHECK(format_word(Word()) == "e");
    CHECK(format_word(parse_word("baab")) == "baab");
    CHECK(parse_word("αβ") == parse_word("ab")); // Greek accepted on input
    CHECK_THROWS_AS(parse_word("ax"), parse_error);
    CHECK_THROWS_AS(parse_word(""), parse_error);
    CHECK_THROWS_AS(parse_word("A"), parse_error);

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> len(0, 12), bit(0, 1);
    for (int t = 0; t < 500; ++t) {
        Word w;
        int m = len(rng);
        for (int i = 0; i < m; ++i) w.push_back(bit(rng) ? Letter::Beta : Letter::Alpha);
        CHECK(parse_word(format_word(w)) == w);
    }
}

TEST_CASE("shortlex enumeration") {
    auto ws = words_up_to(3);
    CHECK(ws.size() == 15);
    CHECK(ws[0] == Word());
    CHECK(ws[1] == parse_word("a"));
    CHECK(ws[2] == parse_word("b"));
    CHECK(ws[3] == parse_word("aa"));
    CHECK(std::is_sorted(ws.begin(), ws.end()));
}
