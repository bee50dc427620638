#pragma once

// Explicit words avoiding Phi_k, built from square-free ternary words or from
// the fixed point of 1 -> 22, 2 -> 21.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "revform/cyclic.hpp"
#include "revform/formula.hpp"
#include "revform/word.hpp"

namespace revform {

// 8-uniform: 0 -> 11112122, 1 -> 12112222, 2 -> 21111222. `v` must be square-free.
Word f_phi1(const Word& v);
const std::vector<std::string>& f_phi1_code_words();

// rho^iterations(2) for rho(1) = 22, rho(2) = 21.
Word rho_prefix(unsigned iterations);
// Length-n prefix of rho^infinity(2).
Word rho_word_prefix(std::size_t n);

// g(d_k(w)) with d_k: i -> i^{k+1} and g: i -> iab, over alphabet "012ab".
Word gdk(const Word& w, int k);

// Inserts `c` after every `period` letters; a trailing partial block gets none.
Word insert_periodic(const Word& u, std::size_t period, char c);

// Inserts `c` after the t-th b whenever t mod k is 0 or 1.
Word insert_after_b(const Word& u, int k, char c);

// g'(d_2(w)) with g': i -> iabcd, over alphabet "012abcd".
Word g_prime_d2(const Word& w);
// i -> i^(k+1), then i -> iabcd.
Word g_prime_dk(const Word& w, int k);

struct MutationOptions {
    std::size_t cap = 64;
    std::uint64_t seed = 0x5eed;
};

// Words obtained from `u` (over {1,2}) by turning exactly `count` of its 2's into
// 3's. Exhaustive when there are at most `cap` such words, otherwise `cap`
// distinct uniform samples. Sorted.
std::vector<Word> mutate_2to3(const Word& u, std::size_t count, MutationOptions options = {});

struct ProvenanceStep {
    std::string name;
    std::string detail;
};

struct ConstructionOutput {
    Word word;
    int k = 0;
    Formula target_formula;
    int alphabet_size = 0;
    std::string base;  // the base word the chain starts from
    std::vector<ProvenanceStep> provenance;
};

// Alphabet size of the construction used for Phi_k.
int construction_alphabet_size(int k);

// Builds a word claimed to avoid Phi_k and checks the claim with the encounter
// engine before returning. Throws InternalError if the check fails.
ConstructionOutput build_avoider(int k, std::size_t base_len);

class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace revform
