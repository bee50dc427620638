#include <gtest/gtest.h>

#include "revform/constructions.hpp"
#include "revform/json_io.hpp"

using namespace revform;

TEST(Json, WitnessRoundTrip) {
    Word w = Word::from_string("0110");
    auto wit = *encounters(w, make_phi(1));
    Json j = to_json(wit);
    EXPECT_EQ(j.dump(), R"({"assignment":{"x":"0","y1":"11"},"placements":{"x y1 x":0,"y1^R":1}})");
    auto back = witness_from_json(j, w.alphabet_ptr());
    EXPECT_TRUE(validate_witness(back, w, make_phi(1)));
    EXPECT_EQ(to_json(back), j);
}

TEST(Json, VerdictRoundTrip) {
    auto v = prove_unavoidable(make_phi(1), 2, {50, 1000});
    Json j = to_json(v);
    EXPECT_EQ(j.at("kind"), "unavoidable");
    EXPECT_EQ(j.at("example"), "0011");
    auto back = verdict_from_json(j, 2);
    EXPECT_EQ(back.kind, v.kind);
    EXPECT_EQ(back.nodes_visited, v.nodes_visited);
    EXPECT_EQ(back.example, v.example);
}

TEST(Json, BadFactorRoundTrip) {
    BadFactorWitness b{4, 3, 1, {2}};
    Json j = to_json(b);
    EXPECT_EQ(j.dump(), R"({"alphas":[2],"j":1,"n":3,"start":4})");
    EXPECT_EQ(bad_factor_from_json(j), b);
}

TEST(Json, CensusAndConstruction) {
    EXPECT_EQ(to_json(CensusTable{{1, 2, 2}}).dump(), R"({"counts":[1,2,2]})");
    Json c = to_json(build_avoider(3, 4));
    EXPECT_EQ(c.at("k"), 3);
    EXPECT_EQ(c.at("alphabet_size"), 5);
    EXPECT_EQ(c.at("word").get<std::string>().size(), 24u);
    EXPECT_TRUE(c.at("provenance").contains("steps"));
}

TEST(Json, LemmaReportShape) {
    std::vector<ExponentWord> words = {ExponentWord(std::vector<int>(7, 1), 2), ExponentWord({2, 1}, 2)};
    Json r = to_json(lemma_equivalence_report(1, 4, words));
    ASSERT_TRUE(r.is_array());
    ASSERT_EQ(r.size(), 2u);
    EXPECT_EQ(r[0].at("word"), "1,1,1,1,1,1,1");
    EXPECT_EQ(r[0].at("status"), "agree_encounter");
    EXPECT_TRUE(r[1].at("bad_factor").is_null());
}
