#include "cli.hpp"

#include <climits>
#include <sstream>

#include "CLI11.hpp"
#include "revform/constructions.hpp"
#include "revform/cyclic.hpp"
#include "revform/encounter.hpp"
#include "revform/formula.hpp"
#include "revform/json_io.hpp"
#include "revform/prover.hpp"

namespace revform::cli {

namespace {

std::string dump(const Json& j) { return j.dump() + "\n"; }

struct Options {
    bool json = false;

    std::string word, formula, alphabet_chars, exponents, check;
    int alphabet = 0, k = 0, m = 0, jobs = 1, scan_k = 0;
    std::size_t depth = 0, max_len = 0, base_len = 0, len = 0, split_depth = 3, all_up_to = 0;
    std::uint64_t nodes = 0;
    bool incremental = false;
};

CommandResult run_encounter(const Options& o) {
    const Formula f = parse_formula(o.formula);
    auto alphabet = o.alphabet_chars.empty() ? Alphabet::infer(o.word) : Alphabet::make(o.alphabet_chars);
    const Word w = Word::parse(alphabet, o.word);
    auto witness = encounters(w, f);
    return {witness ? 0 : 1, dump(witness ? to_json(*witness) : Json(nullptr)), ""};
}

SearchOptions search_options(const Options& o) {
    SearchOptions s;
    s.jobs = o.jobs;
    s.split_depth = o.split_depth;
    s.incremental = o.incremental;
    return s;
}

CommandResult run_prove(const Options& o) {
    const Formula f = parse_formula(o.formula);
    const Verdict v = prove_unavoidable(f, o.alphabet, {o.depth, o.nodes}, search_options(o));
    Json j = to_json(v);
    j["formula"] = format_formula(f);
    j["k"] = o.alphabet;
    return {v.kind == VerdictKind::unavoidable ? 0 : 1, dump(j), ""};
}

CommandResult run_census(const Options& o) {
    const Formula f = parse_formula(o.formula);
    Json j = to_json(census(f, o.alphabet, o.max_len, search_options(o)));
    j["formula"] = format_formula(f);
    j["k"] = o.alphabet;
    return {0, dump(j), ""};
}

CommandResult run_construct(const Options& o) {
    try {
        return {0, dump(to_json(build_avoider(o.k, o.base_len))), ""};
    } catch (const InternalError& e) {
        return {1, dump(Json(nullptr)), std::string("construction failed verification: ") + e.what() + "\n"};
    }
}

CommandResult run_cyclic(const Options& o) {
    const ExponentWord e = ExponentWord::parse(o.exponents, INT_MAX);
    const Word c = build_cyclic(o.m, e);
    Json j{{"m", o.m}, {"exponents", e.str()}, {"word", c.str()}};
    int code = 0;
    if (o.scan_k > 0) {
        Json scan{{"k", o.scan_k}};
        if (o.m == 3) {
            auto r = cyclic3_scan(o.scan_k, e, e.size());
            scan["shape"] = r ? Json(to_string(r->shape)) : Json(nullptr);
            scan["witness"] = r ? to_json(r->witness) : Json(nullptr);
            code = r ? 0 : 1;
        } else {
            auto w = encounters(c, make_phi(o.scan_k));
            scan["witness"] = w ? to_json(*w) : Json(nullptr);
            code = w ? 0 : 1;
        }
        j["scan"] = scan;
    }
    return {code, dump(j), ""};
}

CommandResult run_lemma1(const Options& o) {
    if (o.all_up_to > 0) {
        const auto words = all_exponent_words(o.k + 1, o.all_up_to);
        const LemmaReport r = lemma_equivalence_report(o.k, o.m, words, o.jobs);
        return {r.hard_failures == 0 ? 0 : 1, dump(to_json(r)), ""};
    }
    const ExponentWord e = ExponentWord::parse(o.exponents, INT_MAX);
    auto bad = find_bad_factor(e, o.k, o.m);
    Json j{{"k", o.k}, {"m", o.m}, {"exponents", e.str()}, {"bad_factor", bad ? to_json(*bad) : Json(nullptr)}};
    return {bad ? 1 : 0, dump(j), ""};
}

CommandResult run_squarefree(const Options& o, bool checking) {
    if (checking) {
        const Word w = Word::from_string(o.check);
        const bool ok = is_square_free(w);
        return {ok ? 0 : 1, dump(Json{{"word", w.str()}, {"square_free", ok}}), ""};
    }
    if (o.len < 1) throw std::invalid_argument("--len must be >= 1");
    const Word w = square_free_stream(o.len);
    return {is_square_free(w) ? 0 : 1, dump(Json{{"word", w.str()}, {"square_free", is_square_free(w)}}), ""};
}

CommandResult run_phi(const Options& o) {
    const std::string text = format_formula(make_phi(o.k));
    if (o.json) return {0, dump(Json{{"k", o.k}, {"formula", text}}), ""};
    return {0, text + "\n", ""};
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& argv) {
    Options o;
    CLI::App app{"Pattern and formula avoidance with reversal", "revform"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", o.json, "JSON output (the default for every command except phi)");

    auto* enc = app.add_subcommand("encounter", "Find an occurrence of a formula in a word");
    enc->add_option("--word", o.word, "Host word")->required();
    enc->add_option("--formula", o.formula, "Formula, e.g. \"x y1 x . y1^R\"")->required();
    enc->add_option("--alphabet-chars", o.alphabet_chars, "Alphabet (default: letters of the word)");

    auto* prove = app.add_subcommand("prove", "Backtracking proof of k-unavoidability");
    prove->add_option("--formula", o.formula)->required();
    prove->add_option("--alphabet", o.alphabet, "Alphabet size k")->required()->check(CLI::Range(1, 36));
    prove->add_option("--depth", o.depth, "Depth budget")->required();
    prove->add_option("--nodes", o.nodes, "Node budget")->required();
    prove->add_option("--jobs", o.jobs)->check(CLI::Range(1, 256));
    prove->add_option("--split-depth", o.split_depth);
    prove->add_flag("--incremental", o.incremental, "Only test occurrences touching the new letter");

    auto* cen = app.add_subcommand("census", "Count avoiding words per length");
    cen->add_option("--formula", o.formula)->required();
    cen->add_option("--alphabet", o.alphabet)->required()->check(CLI::Range(1, 36));
    cen->add_option("--max-len", o.max_len)->required();
    cen->add_option("--jobs", o.jobs)->check(CLI::Range(1, 256));
    cen->add_option("--split-depth", o.split_depth);
    cen->add_flag("--incremental", o.incremental);

    auto* con = app.add_subcommand("construct", "Build a verified word avoiding Phi_k");
    con->add_option("--k", o.k)->required()->check(CLI::PositiveNumber);
    con->add_option("--base-len", o.base_len, "Length of the base word")->required();

    auto* cyc = app.add_subcommand("cyclic", "Build the m-cyclic word of an exponent word");
    cyc->add_option("--m", o.m)->required();
    cyc->add_option("--exponents", o.exponents, "Comma-separated positive integers")->required();
    cyc->add_option("--scan-k", o.scan_k, "Also search the word for Phi_K")->check(CLI::PositiveNumber);

    auto* lem = app.add_subcommand("lemma1", "Search an exponent word for a bad factor");
    lem->add_option("--k", o.k)->required()->check(CLI::PositiveNumber);
    lem->add_option("--m", o.m)->required();
    auto* lem_exp = lem->add_option("--exponents", o.exponents);
    auto* lem_all = lem->add_option("--all-up-to", o.all_up_to, "Equivalence report over all words up to this length");
    lem_exp->excludes(lem_all);
    lem->add_option("--jobs", o.jobs)->check(CLI::Range(1, 256));

    auto* sq = app.add_subcommand("squarefree", "Square-free ternary words");
    auto* sq_len = sq->add_option("--len", o.len, "Prefix length of the generator");
    auto* sq_check = sq->add_option("--check", o.check, "Word to test instead");
    sq_len->excludes(sq_check);

    auto* phi = app.add_subcommand("phi", "Print Phi_k");
    phi->add_option("--k", o.k)->required()->check(CLI::PositiveNumber);

    std::vector<const char*> args;
    for (const auto& a : argv) args.push_back(a.c_str());
    if (args.empty()) args.push_back("revform");

    try {
        app.parse(static_cast<int>(args.size()), args.data());
    } catch (const CLI::CallForHelp&) {
        return {0, app.help(), ""};
    } catch (const CLI::ParseError& e) {
        return {2, "", std::string(e.what()) + "\n" + app.help()};
    }

    try {
        if (*enc) return run_encounter(o);
        if (*prove) return run_prove(o);
        if (*cen) return run_census(o);
        if (*con) return run_construct(o);
        if (*cyc) return run_cyclic(o);
        if (*lem) {
            if (o.all_up_to == 0 && o.exponents.empty()) return {2, "", "lemma1 needs --exponents or --all-up-to\n"};
            return run_lemma1(o);
        }
        if (*sq) {
            if (sq_check->count() == 0 && sq_len->count() == 0) return {2, "", "squarefree needs --len or --check\n"};
            return run_squarefree(o, sq_check->count() > 0);
        }
        if (*phi) return run_phi(o);
    } catch (const ParseError& e) {
        return {2, "", std::string("formula error: ") + e.what() + "\n"};
    } catch (const std::invalid_argument& e) {
        return {2, "", std::string("input error: ") + e.what() + "\n"};
    } catch (const std::out_of_range& e) {
        return {2, "", std::string("input error: ") + e.what() + "\n"};
    }
    return {2, "", app.help()};
}

}  // namespace revform::cli
