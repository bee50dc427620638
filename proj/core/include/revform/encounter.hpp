#pragma once

// Deciding whether a formula with reversal occurs in a finite word.
//
// An occurrence is a non-erasing morphism h on the variables, extended to
// mirrored symbols by h(x^R) = h(x)^R, such that the image of every fragment
// is a factor of the host word.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "revform/formula.hpp"
#include "revform/word.hpp"

namespace revform {

// Images of the plain variables only; mirrored images are always derived.
struct Assignment {
    std::map<std::string, Word> images;

    // h(s): the image of `s.var`, reversed when `s` is mirrored.
    Word image_of(const FragmentSymbol& s) const;
};

struct Witness {
    Assignment assignment;
    // fragment text -> 0-based start of its image in the host word
    std::map<std::string, std::size_t> placements;
};

Word instantiate(const Pattern& p, const Assignment& a);

// First witness in the engine's deterministic search order, if any.
std::optional<Witness> encounters(const Word& w, const Formula& f);
inline bool avoids(const Word& w, const Formula& f) { return !encounters(w, f).has_value(); }

// Witnesses in which at least one fragment image is a suffix of `w`. When
// w minus its last letter avoids `f`, this is equivalent to `encounters`.
std::optional<Witness> encounters_at_end(const Word& w, const Formula& f);

// Re-instantiates every fragment and checks it at its recorded placement.
bool validate_witness(const Witness& witness, const Word& w, const Formula& f);

namespace detail {
struct CompiledFormula;
}

// Reusable search over raw letter sequences. Used by the prover, which asks
// the same question about many short words.
class EncounterEngine {
public:
    explicit EncounterEngine(const Formula& f);
    ~EncounterEngine();
    EncounterEngine(EncounterEngine&&) noexcept;
    EncounterEngine& operator=(EncounterEngine&&) noexcept;

    struct ImageSpan {
        std::size_t start = 0;  // start in w, or in reverse(w) when `mirrored`
        std::size_t len = 0;
        bool mirrored = false;
    };
    // One span per variable, in Formula::variables() order.
    using RawAssignment = std::vector<ImageSpan>;

    std::optional<RawAssignment> find(std::span<const LetterId> w) const;
    std::optional<RawAssignment> find_at_end(std::span<const LetterId> w) const;

    const Formula& formula() const;
    Witness to_witness(const RawAssignment& raw, const Word& w) const;

private:
    std::unique_ptr<detail::CompiledFormula> compiled_;
};

}  // namespace revform
