#include <gtest/gtest.h>

#include <random>

#include "revform/cyclic.hpp"

using namespace revform;

TEST(ExponentWord, ParseAndValidate) {
    auto w = ExponentWord::parse("2,1,2,2", 2);
    EXPECT_EQ(w.exponents(), (std::vector<int>{2, 1, 2, 2}));
    EXPECT_EQ(w.str(), "2,1,2,2");
    EXPECT_EQ(w.total(), 7);
    EXPECT_THROW(ExponentWord::parse("1,3", 2), std::invalid_argument);
    EXPECT_THROW(ExponentWord::parse("", 2), std::invalid_argument);
    EXPECT_THROW(ExponentWord::parse("1,,2", 2), std::invalid_argument);
    EXPECT_THROW(ExponentWord({0, 1}, 2), std::invalid_argument);
}

TEST(ExponentWord, FromDigits) {
    EXPECT_EQ(ExponentWord::from_digits(Word::from_string("1221"), 2).str(), "1,2,2,1");
}

TEST(Cyclic, Build) {
    EXPECT_EQ(build_cyclic(4, ExponentWord(std::vector<int>(7, 1), 2)).str(), "abcdabc");
    EXPECT_EQ(build_cyclic(3, ExponentWord({2, 1, 3, 1}, 3)).str(), "aabccca");
    EXPECT_EQ(build_cyclic(3, ExponentWord({1, 2}, 2), "012").str(), "011");
    EXPECT_EQ(default_cyclic_letters(5), "abcde");
}

TEST(Cyclic, RunLengthsRecoverExponents) {
    std::mt19937 rng(2);
    std::uniform_int_distribution<int> e(1, 3), len(1, 30);
    for (int t = 0; t < 200; ++t) {
        std::vector<int> v(static_cast<std::size_t>(len(rng)));
        for (auto& x : v) x = e(rng);
        for (int m : {2, 3, 5}) EXPECT_EQ(run_lengths(build_cyclic(m, ExponentWord(v, 3))), v);
    }
}

TEST(BadFactor, ConstantWord) {
    auto bf = find_bad_factor(ExponentWord(std::vector<int>(7, 1), 2), 1, 4);
    ASSERT_TRUE(bf.has_value());
    EXPECT_EQ(bf->start, 0u);
    EXPECT_EQ(bf->n, 3u);
    EXPECT_EQ(bf->j, 1u);
    EXPECT_EQ(bf->alphas, (std::vector<int>{1}));
}

TEST(BadFactor, Preconditions) {
    EXPECT_THROW(find_bad_factor(ExponentWord({3, 1}, 3), 1, 4), std::invalid_argument);
    EXPECT_THROW(find_bad_factor(ExponentWord({1, 1}, 2), 2, 3), std::invalid_argument);
}

TEST(BadFactor, OnlyJRestricts) {
    ExponentWord w(std::vector<int>(12, 1), 3);
    auto any = find_bad_factor(w, 2, 5);
    ASSERT_TRUE(any.has_value());
    BadFactorOptions o;
    o.only_j = 2;
    auto two = find_bad_factor(w, 2, 5, o);
    ASSERT_TRUE(two.has_value());
    EXPECT_EQ(two->j, 2u);
    EXPECT_EQ((two->n + two->j) % 5, 0u);
}

TEST(BadFactor, ShiftInvariance) {
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> e(1, 2);
    for (int t = 0; t < 300; ++t) {
        std::vector<int> v(14);
        for (auto& x : v) x = e(rng);
        auto base = find_bad_factor(ExponentWord(v, 2), 1, 4);
        std::vector<int> shifted = {e(rng), e(rng), e(rng)};
        shifted.insert(shifted.end(), v.begin(), v.end());
        auto moved = find_bad_factor(ExponentWord(shifted, 2), 1, 4);
        if (base) {
            ASSERT_TRUE(moved.has_value());
            EXPECT_LE(moved->start, base->start + 3);
        }
    }
}

TEST(LemmaReport, AgreesOnShortWords) {
    auto words = all_exponent_words(2, 8);
    auto r = lemma_equivalence_report(1, 4, words, 1);
    EXPECT_EQ(r.hard_failures, 0u);
    EXPECT_EQ(r.entries.size(), words.size());
    for (const auto& e : r.entries)
        if (e.status == LemmaStatus::agree_encounter) EXPECT_TRUE(e.bad_factor && e.encounter);
}

TEST(LemmaReport, JobsDoNotChangeResult) {
    auto words = all_exponent_words(3, 5);
    auto a = lemma_equivalence_report(2, 5, words, 1);
    auto b = lemma_equivalence_report(2, 5, words, 3);
    ASSERT_EQ(a.entries.size(), b.entries.size());
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        EXPECT_EQ(a.entries[i].status, b.entries[i].status);
        EXPECT_EQ(a.entries[i].bad_factor, b.entries[i].bad_factor);
    }
    EXPECT_EQ(a.inconclusive, b.inconclusive);
}

TEST(LemmaReport, AllExponentWordsCount) {
    auto w = all_exponent_words(2, 3);
    EXPECT_EQ(w.size(), 14u);
    EXPECT_EQ(w.front().str(), "1");
    EXPECT_EQ(w.back().str(), "2,2,2");
    EXPECT_EQ(all_exponent_words(3, 3, 3).size(), 27u);
}
