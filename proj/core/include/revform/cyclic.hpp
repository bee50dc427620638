#pragma once

// m-cyclic words a_1^{w_1} a_2^{w_2} ... a_m^{w_m} a_1^{w_{m+1}} ... and the
// exponent-word test that decides whether such a word avoids Phi_k.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "revform/encounter.hpp"
#include "revform/word.hpp"

namespace revform {

class ExponentWord {
public:
    ExponentWord(std::vector<int> exponents, int bound);

    // "2,1,2,2" -> {2,1,2,2}
    static ExponentWord parse(std::string_view csv, int bound);
    // Reads each display character of `w` as a decimal digit.
    static ExponentWord from_digits(const Word& w, int bound);

    const std::vector<int>& exponents() const { return exponents_; }
    int bound() const { return bound_; }
    std::size_t size() const { return exponents_.size(); }
    int operator[](std::size_t i) const { return exponents_[i]; }
    long long total() const;
    std::string str() const;

    friend bool operator==(const ExponentWord&, const ExponentWord&) = default;

private:
    std::vector<int> exponents_;
    int bound_;
};

// First m letters of "abcdefghijklmnopqrstuvwxyz".
std::string default_cyclic_letters(int m);

Word build_cyclic(int m, const ExponentWord& w, std::string_view letters);
Word build_cyclic(int m, const ExponentWord& w);

// Block lengths of w; inverse of build_cyclic for any m >= 2.
std::vector<int> run_lengths(const Word& w);

struct BadFactorWitness {
    std::size_t start = 0;  // 0-based index of x'_1
    std::size_t n = 0;      // |x'| = |x''|
    std::size_t j = 0;      // number of middle exponents
    std::vector<int> alphas;

    friend bool operator==(const BadFactorWitness&, const BadFactorWitness&) = default;
};

// Which interior positions of x' and x'' must agree (1-based, both ends
// excluded): {2..n-1} is what the occurrence argument needs; {2..n-2} is kept
// for comparison only.
enum class InteriorRange { through_n_minus_1, through_n_minus_2 };

struct BadFactorOptions {
    InteriorRange interior = InteriorRange::through_n_minus_1;
    std::optional<std::size_t> only_j;  // restrict the scan to one middle length
};

// Scans windows x' a_1..a_j x'' with 1 <= j <= k, n = m - j (mod m), sum(a) >= k,
// x'_1 >= x''_1, x'_n <= x''_n and equal interiors. First hit in (start, n, j)
// order. Requires exponents <= k + 1 and m >= k + 2.
std::optional<BadFactorWitness> find_bad_factor(const ExponentWord& w, int k, int m, BadFactorOptions options = {});

enum class LemmaStatus { agree_avoid, agree_encounter, hard_failure, boundary_inconclusive };
std::string to_string(LemmaStatus s);

struct LemmaReportEntry {
    ExponentWord word;
    std::optional<BadFactorWitness> bad_factor;
    std::optional<Witness> encounter;
    LemmaStatus status = LemmaStatus::agree_avoid;
};

struct LemmaReport {
    int k = 0;
    int m = 0;
    std::vector<LemmaReportEntry> entries;
    std::size_t hard_failures = 0;
    std::size_t inconclusive = 0;
    // shortest, then lexicographically smallest
    std::optional<LemmaReportEntry> minimal_hard_failure;
    std::optional<LemmaReportEntry> minimal_inconclusive;
};

// Compares the exponent-word test against a direct encounter search on the
// built cyclic word, word by word.
LemmaReport lemma_equivalence_report(int k, int m, std::span<const ExponentWord> words, int jobs = 1,
                                     BadFactorOptions options = {});

// Every word over {1..bound} with min_len <= length <= max_len, shortest first.
std::vector<ExponentWord> all_exponent_words(int bound, std::size_t max_len, std::size_t min_len = 1);

}  // namespace revform
