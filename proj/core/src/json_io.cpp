#include "revform/json_io.hpp"

namespace revform {

Json to_json(const Witness& w) {
    Json assignment = Json::object();
    for (const auto& [var, image] : w.assignment.images) assignment[var] = image.str();
    Json placements = Json::object();
    for (const auto& [fragment, pos] : w.placements) placements[fragment] = pos;
    return Json{{"assignment", assignment}, {"placements", placements}};
}

Witness witness_from_json(const Json& j, const AlphabetPtr& alphabet) {
    Witness w;
    for (const auto& [var, image] : j.at("assignment").items()) {
        w.assignment.images.emplace(var, Word::parse(alphabet, image.get<std::string>()));
    }
    for (const auto& [fragment, pos] : j.at("placements").items()) w.placements[fragment] = pos.get<std::size_t>();
    return w;
}

Json to_json(const Verdict& v) {
    return Json{{"kind", to_string(v.kind)},
                {"max_depth", v.max_depth},
                {"nodes_visited", v.nodes_visited},
                {"example", v.example.str()}};
}

Verdict verdict_from_json(const Json& j, int k) {
    Verdict v;
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "unavoidable") {
        v.kind = VerdictKind::unavoidable;
    } else if (kind == "avoider_evidence") {
        v.kind = VerdictKind::avoider_evidence;
    } else if (kind == "budget_exhausted") {
        v.kind = VerdictKind::budget_exhausted;
    } else {
        throw std::invalid_argument("unknown verdict kind '" + kind + "'");
    }
    v.max_depth = j.at("max_depth").get<std::size_t>();
    v.nodes_visited = j.at("nodes_visited").get<std::uint64_t>();
    v.example = Word::parse(search_alphabet(k), j.at("example").get<std::string>());
    return v;
}

Json to_json(const CensusTable& t) { return Json{{"counts", t.counts}}; }

Json to_json(const ConstructionOutput& c) {
    Json steps = Json::array();
    for (const auto& s : c.provenance) steps.push_back({{"name", s.name}, {"detail", s.detail}});
    return Json{{"word", c.word.str()},
                {"k", c.k},
                {"formula", format_formula(c.target_formula)},
                {"alphabet_size", c.alphabet_size},
                {"provenance", {{"base", c.base}, {"steps", steps}}}};
}

Json to_json(const BadFactorWitness& b) {
    return Json{{"start", b.start}, {"n", b.n}, {"j", b.j}, {"alphas", b.alphas}};
}

BadFactorWitness bad_factor_from_json(const Json& j) {
    return BadFactorWitness{j.at("start").get<std::size_t>(), j.at("n").get<std::size_t>(),
                            j.at("j").get<std::size_t>(), j.at("alphas").get<std::vector<int>>()};
}

Json to_json(const LemmaReport& r) {
    Json out = Json::array();
    for (const auto& e : r.entries) {
        out.push_back({{"word", e.word.str()},
                       {"bad_factor", e.bad_factor ? to_json(*e.bad_factor) : Json(nullptr)},
                       {"encounter", e.encounter ? to_json(*e.encounter) : Json(nullptr)},
                       {"status", to_string(e.status)}});
    }
    return out;
}

Json to_json(const Cyclic3Result& r) {
    return Json{{"word", r.word.str()}, {"shape", to_string(r.shape)}, {"witness", to_json(r.witness)}};
}

}  // namespace revform
