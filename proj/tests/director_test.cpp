#include <gtest/gtest.h>

#include <algorithm>

#include "selfdesc/director.hpp"

using namespace selfdesc;

TEST(ParseDirector, TranscribesDigits) {
    EXPECT_EQ(parse_director("12").letters(), (Word{1, 2}));
    EXPECT_EQ(parse_director("1").letters(), (Word{1}));
    EXPECT_EQ(parse_director("1122").period(), 4u);
}

TEST(ParseDirector, RejectsBadAlphabetWithPosition) {
    try {
        parse_director("13");
        FAIL() << "expected ValidationError";
    } catch (const ValidationError& e) {
        EXPECT_EQ(e.position(), 1u);
    }
    try {
        parse_director("2a1");
        FAIL();
    } catch (const ValidationError& e) {
        EXPECT_EQ(e.position(), 1u);
    }
}

TEST(ParseDirector, RejectsEmpty) {
    EXPECT_THROW(parse_director(""), ValidationError);
    EXPECT_THROW(DirectorWord(Word{}), ValidationError);
    EXPECT_THROW(DirectorWord(Word{1, 0}), ValidationError);
}

TEST(Densities, Examples) {
    const DensityPair twelve_one = densities(parse_director("12"), parse_director("1"));
    EXPECT_EQ(twelve_one.p1, Rational(1, 2));
    EXPECT_EQ(twelve_one.q2, Rational(0));

    const DensityPair twos = densities(parse_director("2"), parse_director("2"));
    EXPECT_EQ(twos.p1, Rational(0));
    EXPECT_EQ(twos.q2, Rational(1));

    const DensityPair mixed = densities(parse_director("1122"), parse_director("12"));
    EXPECT_EQ(mixed.p1, Rational(1, 2));
    EXPECT_EQ(mixed.q2, Rational(1, 2));
    EXPECT_EQ(mixed.p1 + mixed.p2(), Rational(1));
    EXPECT_EQ(mixed.q1() + mixed.q2, Rational(1));
}

TEST(Densities, RotationAndRepetitionInvariant) {
    const auto words = all_words(6);
    ASSERT_EQ(words.size(), 126u);
    const DirectorWord one = parse_director("1");
    for (const DirectorWord& w : words) {
        const DensityPair base = densities(w, w);
        EXPECT_LE(Rational(0), base.p1);
        EXPECT_LE(base.p1, Rational(1));
        EXPECT_EQ(w.period() % static_cast<std::size_t>(base.p1.den()), 0u);
        Word rotated = w.letters();
        for (std::size_t r = 0; r < rotated.size(); ++r) {
            std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
            const DirectorWord rw(rotated);
            EXPECT_EQ(densities(rw, rw), base);
        }
        Word twice = w.letters();
        twice.insert(twice.end(), w.letters().begin(), w.letters().end());
        EXPECT_EQ(densities(DirectorWord(twice), one).p1, densities(w, one).p1);
    }
}

TEST(AllWords, OrderedByLengthThenLexicographic) {
    const auto words = all_words(2);
    std::vector<std::string> s;
    for (const auto& w : words) s.push_back(w.str());
    EXPECT_EQ(s, (std::vector<std::string>{"1", "2", "11", "12", "21", "22"}));
    EXPECT_EQ(all_words(3).size(), 14u);
}
