#include <gtest/gtest.h>

#include "revform/formula.hpp"

using namespace revform;

TEST(Formula, PhiText) {
    EXPECT_EQ(format_formula(make_phi(1)), "x y1 x . y1^R");
    EXPECT_EQ(format_formula(make_phi(2)), "x y1 y2 x . y1^R . y2^R");
    EXPECT_THROW(make_phi(0), std::invalid_argument);
}

TEST(Formula, PhiVariables) {
    Formula f = make_phi(3);
    EXPECT_EQ(f.variables(), (std::vector<std::string>{"x", "y1", "y2", "y3"}));
    EXPECT_EQ(f.reversed_variables(), (std::vector<std::string>{"y1", "y2", "y3"}));
    EXPECT_EQ(f.fragments().size(), 4u);
}

TEST(Formula, NaturalOrderOfNames) {
    Formula f = make_phi(11);
    const auto& frags = f.fragments();
    EXPECT_EQ(frags[1].str(), "y1^R");
    EXPECT_EQ(frags[2].str(), "y2^R");
    EXPECT_EQ(frags.back().str(), "y11^R");
}

TEST(Formula, ParseCanonicalizes) {
    Formula f = parse_formula("y^R . x y x");
    EXPECT_EQ(format_formula(f), "x y x . y^R");
    EXPECT_EQ(parse_formula("x x . x x"), parse_formula("x x"));
    EXPECT_EQ(parse_formula("  x   y1 x.y1^R "), make_phi(1));
}

TEST(Formula, ParseErrors) {
    EXPECT_THROW(parse_formula(""), ParseError);
    EXPECT_THROW(parse_formula("x . . y"), ParseError);
    EXPECT_THROW(parse_formula("x^Q"), ParseError);
    EXPECT_THROW(parse_formula("x $"), ParseError);
    try {
        parse_formula("x . ");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_GE(e.position(), 2u);
    }
}

TEST(Formula, ReversedOnlyVariableIsNotReversed) {
    Formula f = parse_formula("x y^R x");
    EXPECT_TRUE(f.reversed_variables().empty());
    EXPECT_EQ(f.variables(), (std::vector<std::string>{"x", "y"}));
}

TEST(FormulaProperty, FormatParseRoundTrip) {
    const char* texts[] = {"x x", "x y x . y^R", "a b c . c^R b . a^R", "z1 z10 z2 . z10^R", "u v^R u v"};
    for (const char* t : texts) {
        Formula f = parse_formula(t);
        EXPECT_EQ(parse_formula(format_formula(f)), f) << t;
        EXPECT_EQ(format_formula(parse_formula(format_formula(f))), format_formula(f));
    }
    for (int k = 1; k <= 12; ++k) EXPECT_EQ(parse_formula(format_formula(make_phi(k))), make_phi(k));
}
