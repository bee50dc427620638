#pragma once

// Exhaustive backtracking over words on a k-letter alphabet: unavoidability
// certificates, per-length avoider counts, and the 3-cyclic encounter scan.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "revform/cyclic.hpp"
#include "revform/encounter.hpp"
#include "revform/formula.hpp"
#include "revform/word.hpp"

namespace revform {

// Display characters of A_k: "0123456789" then lowercase letters.
AlphabetPtr search_alphabet(int k);

enum class VerdictKind { unavoidable, avoider_evidence, budget_exhausted };
std::string to_string(VerdictKind kind);

struct Verdict {
    VerdictKind kind = VerdictKind::budget_exhausted;
    std::size_t max_depth = 0;        // length of the longest avoiding word seen
    std::uint64_t nodes_visited = 0;  // words tested, root excluded
    Word example;                     // a longest avoiding word seen
};

struct SearchOptions {
    int jobs = 1;
    // Subtrees rooted at this depth are the unit of parallel work. The result
    // does not depend on it or on `jobs`.
    std::size_t split_depth = 3;
    // Test each child only for occurrences touching its last letter.
    bool incremental = false;
    // Only words whose letters first appear in order 0, 1, 2, ...
    bool symmetry_reduction = true;
};

struct ProverBudget {
    std::size_t depth = 0;       // stop with evidence once an avoider this long exists
    std::uint64_t nodes = 0;     // give up after this many tested words
};

Verdict prove_unavoidable(const Formula& f, int k, ProverBudget budget, SearchOptions options = {});

struct CensusTable {
    // counts[len] = number of words of length len over A_k avoiding the formula
    std::vector<std::uint64_t> counts;
};

CensusTable census(const Formula& f, int k, std::size_t max_len, SearchOptions options = {});

enum class Cyclic3Shape {
    case_i,               // x -> 0, y_i -> whole blocks
    case_ii_constant,     // x -> 012, y_i -> single letters
    case_ii_long_block,   // a block longer than 1 split between y_1 and y_2
    case_iii_constant,    // x -> 01, y_i -> single letters
    case_iii_long_block,  // a block longer than 2 split among y_1, y_2, y_3
    case_iii_double_two,  // two adjacent blocks of length >= 2, each split in two
    case_iii_two_one,     // x -> 0^e 1 around blocks of length 2 then 1
    general_search,       // no displayed shape applies; engine search
};
std::string to_string(Cyclic3Shape shape);

struct Cyclic3Result {
    Word word;  // C_3 over the scanned prefix, letters "012"
    Witness witness;
    Cyclic3Shape shape = Cyclic3Shape::general_search;
};

// Searches C_3[w] (first `prefix_cap` exponents) for an occurrence of Phi_k,
// trying the block-aligned shapes for k mod 3 before a full search.
std::optional<Cyclic3Result> cyclic3_scan(int k, const ExponentWord& w, std::size_t prefix_cap);

}  // namespace revform
