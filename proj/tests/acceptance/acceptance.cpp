// Acceptance suite: one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cli.hpp"
#include "revform/constructions.hpp"
#include "revform/cyclic.hpp"
#include "revform/encounter.hpp"
#include "revform/oracle.hpp"
#include "revform/prover.hpp"

using namespace revform;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::vector<Word> all_words(const AlphabetPtr& a, std::size_t len) {
    std::vector<Word> out;
    std::vector<LetterId> v(len, 0);
    const auto k = static_cast<LetterId>(a->size());
    while (true) {
        out.emplace_back(a, v);
        std::size_t i = len;
        while (i > 0 && ++v[i - 1] == k) v[--i] = 0;
        if (i == 0) break;
    }
    return out;
}

Outcome oracle_equivalence() {
    const char* formulas[] = {"x y1 x . y1^R", "x y1 y2 x . y1^R . y2^R", "x x", "x y x . y^R"};
    std::size_t checked = 0;
    for (const char* text : formulas) {
        Formula f = parse_formula(text);
        for (auto [chars, max_len] : {std::pair{"01", 10}, std::pair{"012", 7}}) {
            auto a = Alphabet::make(chars);
            for (std::size_t len = 0; len <= static_cast<std::size_t>(max_len); ++len)
                for (const auto& w : all_words(a, len)) {
                    auto wit = encounters(w, f);
                    ++checked;
                    if (wit.has_value() != oracle_encounters(w, f) || (wit && !validate_witness(*wit, w, f)))
                        return {false, std::string("disagreement for ") + text + " on \"" + w.str() + "\""};
                }
        }
    }
    return {true, std::to_string(checked) + " word/formula pairs agree"};
}

Outcome lemma_reports() {
    auto r1 = lemma_equivalence_report(1, 4, all_exponent_words(2, 9), 1);
    auto r2 = lemma_equivalence_report(2, 5, all_exponent_words(3, 7), 1);
    BadFactorOptions narrow;
    narrow.interior = InteriorRange::through_n_minus_2;
    auto r3 = lemma_equivalence_report(2, 5, all_exponent_words(3, 7), 1, narrow);
    const bool ok = r1.hard_failures == 0 && r2.hard_failures == 0;
    return {ok, "k=1,m=4: " + std::to_string(r1.entries.size()) + " words, " + std::to_string(r1.hard_failures) +
                    " hard, " + std::to_string(r1.inconclusive) + " boundary; k=2,m=5: " +
                    std::to_string(r2.entries.size()) + " words, " + std::to_string(r2.hard_failures) + " hard, " +
                    std::to_string(r2.inconclusive) + " boundary; interior 2..n-2 gives " +
                    std::to_string(r3.hard_failures) + " hard"};
}

Outcome phi1_construction() {
    Word stream = square_free_stream(4000);
    std::set<std::string> seen;
    std::vector<Word> bases;
    for (std::size_t i = 0; i + 20 <= stream.size() && bases.size() < 60; ++i) {
        Word v = stream.slice(i, 20);
        if (seen.insert(v.str()).second) bases.push_back(v);
    }
    if (bases.size() < 50) return {false, "only " + std::to_string(bases.size()) + " distinct bases"};
    for (const auto& v : bases) {
        auto ew = ExponentWord::from_digits(f_phi1(v), 2);
        if (find_bad_factor(ew, 1, 4)) return {false, "bad factor in f(" + v.str() + ")"};
        if (!avoids(build_cyclic(4, ew), make_phi(1))) return {false, "C4[f(" + v.str() + ")] encounters Phi_1"};
    }
    return {true, std::to_string(bases.size()) + " square-free bases of length 20"};
}

Outcome phi2_construction() {
    ExponentWord rho9 = ExponentWord::from_digits(rho_prefix(9), 2);
    for (std::size_t j : {1u, 2u}) {
        BadFactorOptions o;
        o.only_j = j;
        if (auto bf = find_bad_factor(rho9, 2, 5, o))
            return {false, "bad factor with j=" + std::to_string(j) + " at " + std::to_string(bf->start)};
    }
    Word c5 = build_cyclic(5, ExponentWord::from_digits(rho_prefix(7), 2));
    if (!avoids(c5, make_phi(2))) return {false, "C5[rho^7(2)] encounters Phi_2"};
    return {true, "rho^9(2) has no bad factor for j=1,2; |C5[rho^7(2)]|=" + std::to_string(c5.size())};
}

Outcome mutations() {
    Word base = rho_prefix(8);
    MutationOptions o;
    o.cap = 32;
    auto variants = mutate_2to3(base, 64, o);
    if (variants.size() != 32) return {false, "got " + std::to_string(variants.size()) + " variants"};
    const std::string first = variants.front().str();
    std::map<char, long> counts;
    for (char c : first) ++counts[c];
    for (const auto& v : variants) {
        const std::string s = v.str();
        std::map<char, long> c2;
        for (char c : s) ++c2[c];
        if (s.size() != first.size() || c2 != counts) return {false, "letter counts differ"};
        if (find_bad_factor(ExponentWord::from_digits(v, 3), 2, 5)) return {false, "bad factor in " + s};
    }
    return {true, "32 variants of length 256 with 64 threes"};
}

Outcome constructions() {
    Word v = square_free_stream(16);
    struct Case {
        const char* name;
        Word word;
        int k;
    };
    const std::vector<Case> cases = {
        {"gdk(v,1)", gdk(v, 1), 3},
        {"gdk(v,2)", gdk(v, 2), 6},
        {"gdk(v,3)", gdk(v, 3), 9},
        {"insert_periodic(gdk(v,1),3)", insert_periodic(gdk(v, 1), 3, 'c'), 4},
        {"insert_periodic(gdk(v,2),6)", insert_periodic(gdk(v, 2), 6, 'c'), 7},
        {"insert_after_b(gdk(v,2),2)", insert_after_b(gdk(v, 2), 2, 'c'), 8},
        {"insert_after_b(gdk(v,3),3)", insert_after_b(gdk(v, 3), 3, 'c'), 11},
        {"g_prime_d2(v)", g_prime_d2(v), 5},
    };
    Outcome out;
    std::string failed;
    for (const auto& c : cases) {
        auto wit = encounters(c.word, make_phi(c.k));
        if (wit) {
            out.pass = false;
            failed += std::string(" ") + c.name + " encounters Phi_" + std::to_string(c.k) + " (x=" +
                      wit->assignment.images.at("x").str() + ")";
        }
    }
    out.detail = out.pass ? "all 8 constructions avoid their formula" : "failures:" + failed;
    if (avoids(g_prime_dk(v, 1), make_phi(5))) out.detail += "; g_prime_dk(v,1) avoids Phi_5";
    return out;
}

Outcome prover_goldens() {
    struct Golden {
        int k;
        std::size_t depth;
        std::uint64_t nodes;
    };
    for (auto g : {Golden{1, 2, 3}, Golden{2, 4, 13}, Golden{3, 14, 218}}) {
        auto v = prove_unavoidable(make_phi(1), g.k, {1000, 10'000'000});
        if (v.kind != VerdictKind::unavoidable || v.max_depth != g.depth || v.nodes_visited != g.nodes)
            return {false, "Phi_1 on A_" + std::to_string(g.k) + ": " + to_string(v.kind) + " depth " +
                               std::to_string(v.max_depth) + " nodes " + std::to_string(v.nodes_visited)};
    }
    std::string detail = "Phi_1 closes on A_1, A_2, A_3 (depth 2/4/14, nodes 3/13/218)";
#ifdef REVFORM_LONG_ACCEPTANCE
    SearchOptions o;
    o.incremental = true;
    for (auto g : {Golden{2, 45, 216672}, Golden{3, 34, 15891}}) {
        const int k = g.k;
        auto v = prove_unavoidable(make_phi(k), 4, {100000, 2'000'000'000ULL}, o);
        if (v.kind == VerdictKind::avoider_evidence)
            return {false, "Phi_" + std::to_string(k) + " on A_4 reached the depth budget"};
        if (v.kind == VerdictKind::unavoidable && (v.max_depth != g.depth || v.nodes_visited != g.nodes))
            return {false, "Phi_" + std::to_string(k) + " on A_4 differs from the recorded tree"};
        detail += "; Phi_" + std::to_string(k) + " on A_4: " + to_string(v.kind) + " depth " +
                  std::to_string(v.max_depth) + " nodes " + std::to_string(v.nodes_visited);
    }
#else
    detail += "; A_4 runs skipped (REVFORM_LONG_ACCEPTANCE off)";
#endif
    return {true, detail};
}

Outcome cyclic3() {
    std::mt19937 rng(20240);
    std::uniform_int_distribution<int> e(1, 3);
    for (int t = 0; t < 200; ++t) {
        std::vector<int> v(40);
        for (auto& x : v) x = e(rng);
        ExponentWord w(v, 3);
        for (int k = 1; k <= 8; ++k) {
            auto r = cyclic3_scan(k, w, 40);
            if (!r || !validate_witness(r->witness, r->word, make_phi(k)))
                return {false, "no occurrence of Phi_" + std::to_string(k) + " in C3[" + w.str() + "]"};
        }
    }
    const Cyclic3Shape expect[] = {Cyclic3Shape::general_search,   Cyclic3Shape::case_i,
                                   Cyclic3Shape::case_ii_constant, Cyclic3Shape::case_iii_constant,
                                   Cyclic3Shape::case_i,           Cyclic3Shape::case_ii_constant,
                                   Cyclic3Shape::case_iii_constant, Cyclic3Shape::case_i};
    ExponentWord ones(std::vector<int>(40, 1), 3);
    for (int k = 1; k <= 8; ++k) {
        auto r = cyclic3_scan(k, ones, 40);
        if (!r || r->shape != expect[k - 1] || !validate_witness(r->witness, r->word, make_phi(k)))
            return {false, "constant word, k=" + std::to_string(k)};
    }
    return {true, "200 random words x 8 formulas, plus constant-word shapes"};
}

Outcome census_growth() {
    auto c = census(make_phi(1), 4, 12).counts;
    std::string detail = "counts[9..12] =";
    for (std::size_t l = 9; l <= 12; ++l) detail += " " + std::to_string(c[l]);
    for (auto x : c)
        if (x == 0) return {false, "zero count"};
    for (std::size_t l = 9; l <= 11; ++l)
        if (static_cast<double>(c[l + 1]) < 1.05 * static_cast<double>(c[l])) return {false, detail};
    return {true, detail};
}

Outcome cli_determinism() {
    using Args = std::vector<std::string>;
    const std::vector<Args> docs = {
        {"phi", "--k", "2"},
        {"encounter", "--word", "0110", "--formula", "x y1 x . y1^R"},
        {"encounter", "--word", "012", "--formula", "x y1 x . y1^R"},
        {"prove", "--formula", "x y1 x . y1^R", "--alphabet", "3", "--depth", "100", "--nodes", "100000"},
        {"census", "--formula", "x y1 x . y1^R", "--alphabet", "4", "--max-len", "10"},
        {"construct", "--k", "4", "--base-len", "16"},
        {"cyclic", "--m", "4", "--exponents", "1,1,1,1,1,1,1", "--scan-k", "1"},
        {"lemma1", "--k", "1", "--m", "4", "--exponents", "1,1,1,1,1,1,1"},
        {"lemma1", "--k", "2", "--m", "5", "--all-up-to", "5"},
        {"squarefree", "--len", "30"},
    };
    std::size_t compared = 0;
    for (const auto& d : docs) {
        Args argv = {"revform"};
        argv.insert(argv.end(), d.begin(), d.end());
        auto a = cli::run_command(argv);
        auto b = cli::run_command(argv);
        if (a.out != b.out || a.exit_code != b.exit_code) return {false, "two runs differ: " + d[0]};
        ++compared;
        if (d[0] == "prove" || d[0] == "census" || (d[0] == "lemma1" && d[5] == "--all-up-to")) {
            Args j1 = argv, j4 = argv;
            j1.insert(j1.end(), {"--jobs", "1"});
            j4.insert(j4.end(), {"--jobs", "4"});
            if (cli::run_command(j1).out != cli::run_command(j4).out || cli::run_command(j1).out != a.out)
                return {false, "--jobs changes output: " + d[0]};
            ++compared;
        }
    }
    return {true, std::to_string(compared) + " invocations byte-identical"};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "oracle equivalence", oracle_equivalence},
        {2, "bad-factor test equivalence", lemma_reports},
        {3, "Phi_1 construction", phi1_construction},
        {4, "Phi_2 construction", phi2_construction},
        {5, "2-to-3 mutations", mutations},
        {6, "explicit constructions", constructions},
        {7, "backtracking goldens", prover_goldens},
        {8, "3-cyclic scan", cyclic3},
        {9, "census growth", census_growth},
        {10, "cli determinism", cli_determinism},
    };
    // g_prime_d2 contains (iabcd)^3 for every letter i; see README.
    const std::set<int> known_failures = {6};

    int unexpected = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool known = known_failures.count(c.id) > 0;
        std::printf("[%s] %2d %s: %s (%.1fs)%s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs,
                    !o.pass && known ? " [known]" : "");
        std::fflush(stdout);
        if (o.pass == known) ++unexpected;
    }
    return unexpected == 0 ? 0 : 1;
}
