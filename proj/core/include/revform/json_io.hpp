#pragma once

// JSON documents exchanged by the command-line tool. Words are display strings,
// exponent words comma-separated integers, indices 0-based.

#include <nlohmann/json.hpp>

#include "revform/constructions.hpp"
#include "revform/cyclic.hpp"
#include "revform/encounter.hpp"
#include "revform/prover.hpp"

namespace revform {

using Json = nlohmann::json;

// {"assignment": {var: word}, "placements": {fragment: start}}
Json to_json(const Witness& w);
// Words are re-read over `alphabet`.
Witness witness_from_json(const Json& j, const AlphabetPtr& alphabet);

// {"kind", "max_depth", "nodes_visited", "example"}
Json to_json(const Verdict& v);
Verdict verdict_from_json(const Json& j, int k);

// {"counts": [...]} indexed by length
Json to_json(const CensusTable& t);

// {"word", "k", "alphabet_size", "provenance": {"base", "steps": [{"name","detail"}]}}
Json to_json(const ConstructionOutput& c);

// {"start", "n", "j", "alphas"}
Json to_json(const BadFactorWitness& b);
BadFactorWitness bad_factor_from_json(const Json& j);

// [{"word", "bad_factor", "encounter", "status"}, ...]
Json to_json(const LemmaReport& r);

// {"word", "shape", "witness"}
Json to_json(const Cyclic3Result& r);

}  // namespace revform
