#include "revform/prover.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "revform/parallel.hpp"

namespace revform {

namespace {

using Letters = std::vector<LetterId>;

std::size_t letter_limit(const Letters& w, int k, bool symmetry) {
    if (!symmetry) return static_cast<std::size_t>(k);
    std::size_t used = w.empty() ? 0 : static_cast<std::size_t>(*std::max_element(w.begin(), w.end())) + 1;
    return std::min<std::size_t>(static_cast<std::size_t>(k), used + 1);
}

std::uint64_t falling_factorial(int k, std::size_t j) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < j; ++i) r *= static_cast<std::uint64_t>(k) - i;
    return r;
}

class Tester {
public:
    Tester(const Formula& f, bool incremental) : engine_(f), incremental_(incremental) {}

    // `w` minus its last letter is known to avoid the formula.
    bool child_avoids(const Letters& w) const {
        return incremental_ ? !engine_.find_at_end(w).has_value() : !engine_.find(w).has_value();
    }

private:
    EncounterEngine engine_;
    bool incremental_;
};

struct Event {
    Letters word;
    bool subtree = false;  // otherwise a single tested node
    bool avoids = false;
};

// Pre-order walk of the tree down to `split`; live nodes at depth `split`
// (when `descend_at_split`) become subtree events.
void collect_top(const Tester& tester, int k, bool symmetry, std::size_t split, bool descend_at_split, Letters& w,
                 std::vector<Event>& events) {
    const std::size_t limit = letter_limit(w, k, symmetry);
    for (std::size_t a = 0; a < limit; ++a) {
        w.push_back(static_cast<LetterId>(a));
        const bool avoids = tester.child_avoids(w);
        events.push_back({w, false, avoids});
        if (avoids) {
            if (w.size() < split) {
                collect_top(tester, k, symmetry, split, descend_at_split, w, events);
            } else if (descend_at_split) {
                events.push_back({w, true, true});
            }
        }
        w.pop_back();
    }
}

struct SubtreeOutcome {
    std::uint64_t nodes = 0;
    std::size_t max_depth = 0;
    Letters example;
    bool evidence = false;
    bool exhausted = false;
};

class SubtreeProver {
public:
    SubtreeProver(const Tester& tester, int k, bool symmetry, std::size_t depth_budget, std::uint64_t node_budget)
        : tester_(tester), k_(k), symmetry_(symmetry), depth_budget_(depth_budget), node_budget_(node_budget) {}

    SubtreeOutcome run(Letters root) {
        out_ = {};
        walk(root);
        return out_;
    }

private:
    // Returns false once the search must stop.
    bool walk(Letters& w) {
        const std::size_t limit = letter_limit(w, k_, symmetry_);
        for (std::size_t a = 0; a < limit; ++a) {
            if (out_.nodes == node_budget_) {
                out_.exhausted = true;
                return false;
            }
            ++out_.nodes;
            w.push_back(static_cast<LetterId>(a));
            if (tester_.child_avoids(w)) {
                if (w.size() > out_.max_depth) {
                    out_.max_depth = w.size();
                    out_.example = w;
                }
                if (w.size() == depth_budget_) {
                    out_.evidence = true;
                    return false;
                }
                if (!walk(w)) return false;
            }
            w.pop_back();
        }
        return true;
    }

    const Tester& tester_;
    int k_;
    bool symmetry_;
    std::size_t depth_budget_;
    std::uint64_t node_budget_;
    SubtreeOutcome out_;
};

Word to_word(const Letters& w, int k) { return Word(search_alphabet(k), w); }

}  // namespace

AlphabetPtr search_alphabet(int k) {
    static const std::string chars = "0123456789abcdefghijklmnopqrstuvwxyz";
    if (k < 1 || k > static_cast<int>(chars.size())) throw std::invalid_argument("alphabet size out of range");
    return Alphabet::make(chars.substr(0, static_cast<std::size_t>(k)));
}

std::string to_string(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::unavoidable: return "unavoidable";
        case VerdictKind::avoider_evidence: return "avoider_evidence";
        case VerdictKind::budget_exhausted: return "budget_exhausted";
    }
    return "unknown";
}

Verdict prove_unavoidable(const Formula& f, int k, ProverBudget budget, SearchOptions options) {
    if (k < 1) throw std::invalid_argument("alphabet size must be positive");
    if (budget.depth == 0 || budget.nodes == 0) throw std::invalid_argument("prover budgets must be positive");

    const Tester tester(f, options.incremental);
    const std::size_t split = std::max<std::size_t>(1, std::min(options.split_depth, budget.depth));
    std::vector<Event> events;
    Letters scratch;
    collect_top(tester, k, options.symmetry_reduction, split, split < budget.depth, scratch, events);

    std::vector<std::optional<SubtreeOutcome>> outcomes(events.size());
    auto solve_batch = [&](std::size_t from) {
        std::vector<std::size_t> batch;
        for (std::size_t i = from; i < events.size() && batch.size() < static_cast<std::size_t>(std::max(1, options.jobs));
             ++i) {
            if (events[i].subtree) batch.push_back(i);
        }
        parallel_for(batch.size(), options.jobs, [&](std::size_t b) {
            SubtreeProver prover(tester, k, options.symmetry_reduction, budget.depth, budget.nodes);
            outcomes[batch[b]] = prover.run(events[batch[b]].word);
        });
    };

    Verdict v;
    Letters longest;
    auto finish = [&](VerdictKind kind) {
        v.kind = kind;
        v.example = to_word(longest, k);
        return v;
    };

    for (std::size_t i = 0; i < events.size(); ++i) {
        const Event& e = events[i];
        if (!e.subtree) {
            if (v.nodes_visited == budget.nodes) return finish(VerdictKind::budget_exhausted);
            ++v.nodes_visited;
            if (!e.avoids) continue;
            if (e.word.size() > v.max_depth) {
                v.max_depth = e.word.size();
                longest = e.word;
            }
            if (e.word.size() == budget.depth) return finish(VerdictKind::avoider_evidence);
            continue;
        }
        if (!outcomes[i]) solve_batch(i);
        SubtreeOutcome r = *outcomes[i];
        const std::uint64_t remaining = budget.nodes - v.nodes_visited;
        if (r.exhausted || r.nodes > remaining) {
            // replay with the budget a single sequential walk would have left
            SubtreeProver prover(tester, k, options.symmetry_reduction, budget.depth, remaining);
            r = prover.run(e.word);
        }
        v.nodes_visited += r.nodes;
        if (r.max_depth > v.max_depth) {
            v.max_depth = r.max_depth;
            longest = r.example;
        }
        if (r.exhausted) return finish(VerdictKind::budget_exhausted);
        if (r.evidence) return finish(VerdictKind::avoider_evidence);
    }
    return finish(VerdictKind::unavoidable);
}

CensusTable census(const Formula& f, int k, std::size_t max_len, SearchOptions options) {
    if (k < 1) throw std::invalid_argument("alphabet size must be positive");
    CensusTable table;
    table.counts.assign(max_len + 1, 0);
    table.counts[0] = 1;
    if (max_len == 0) return table;

    const Tester tester(f, options.incremental);
    const bool symmetry = options.symmetry_reduction;
    auto weight = [&](const Letters& w) {
        if (!symmetry) return std::uint64_t{1};
        return falling_factorial(k, static_cast<std::size_t>(*std::max_element(w.begin(), w.end())) + 1);
    };

    const std::size_t split = std::max<std::size_t>(1, std::min(options.split_depth, max_len));
    std::vector<Event> events;
    Letters scratch;
    collect_top(tester, k, symmetry, split, split < max_len, scratch, events);

    std::vector<std::size_t> subtrees;
    for (std::size_t i = 0; i < events.size(); ++i) {
        if (events[i].subtree) {
            subtrees.push_back(i);
        } else if (events[i].avoids) {
            table.counts[events[i].word.size()] += weight(events[i].word);
        }
    }

    std::vector<std::vector<std::uint64_t>> partial(subtrees.size());
    parallel_for(subtrees.size(), options.jobs, [&](std::size_t s) {
        std::vector<std::uint64_t> counts(max_len + 1, 0);
        Letters w = events[subtrees[s]].word;
        std::function<void()> walk = [&] {
            const std::size_t limit = letter_limit(w, k, symmetry);
            for (std::size_t a = 0; a < limit; ++a) {
                w.push_back(static_cast<LetterId>(a));
                if (tester.child_avoids(w)) {
                    counts[w.size()] += weight(w);
                    if (w.size() < max_len) walk();
                }
                w.pop_back();
            }
        };
        walk();
        partial[s] = std::move(counts);
    });
    for (const auto& counts : partial) {
        for (std::size_t len = 0; len <= max_len; ++len) table.counts[len] += counts[len];
    }
    return table;
}

std::string to_string(Cyclic3Shape shape) {
    switch (shape) {
        case Cyclic3Shape::case_i: return "case_i";
        case Cyclic3Shape::case_ii_constant: return "case_ii_constant";
        case Cyclic3Shape::case_ii_long_block: return "case_ii_long_block";
        case Cyclic3Shape::case_iii_constant: return "case_iii_constant";
        case Cyclic3Shape::case_iii_long_block: return "case_iii_long_block";
        case Cyclic3Shape::case_iii_double_two: return "case_iii_double_two";
        case Cyclic3Shape::case_iii_two_one: return "case_iii_two_one";
        case Cyclic3Shape::general_search: return "general_search";
    }
    return "unknown";
}

namespace {

struct Piece {
    std::size_t start;
    std::size_t len;
};

class Cyclic3Shapes {
public:
    Cyclic3Shapes(int k, std::vector<int> e, const Word& c) : k_(k), e_(std::move(e)), c_(c), phi_(make_phi(k)) {
        offset_.push_back(0);
        for (int x : e_) offset_.push_back(offset_.back() + static_cast<std::size_t>(x));
    }

    std::optional<Cyclic3Result> find() const {
        const std::size_t B = e_.size();
        const int r = k_ % 3;
        const auto uk = static_cast<std::size_t>(k_);
        const bool all_ones = std::all_of(e_.begin(), e_.end(), [](int x) { return x == 1; });

        if (r == 2) {
            if (B >= uk + 2) {
                std::vector<Piece> ys;
                for (std::size_t t = 1; t <= uk; ++t) ys.push_back(block(t));
                if (auto res = make({tail(0, 1)}, ys, {head(uk + 1, 1)}, Cyclic3Shape::case_i)) return res;
            }
        } else if (r == 0) {
            if (all_ones && B >= uk + 6) {
                std::vector<Piece> ys;
                for (std::size_t t = 3; t < 3 + uk; ++t) ys.push_back(block(t));
                if (auto res = make({block(0), block(1), block(2)}, ys, {block(uk + 3), block(uk + 4), block(uk + 5)},
                                    Cyclic3Shape::case_ii_constant))
                    return res;
            }
            for (std::size_t i = 1; i + uk - 1 < B; ++i) {
                if (e_[i] <= 1) continue;
                std::vector<Piece> ys{head(i, 1), {offset_[i] + 1, static_cast<std::size_t>(e_[i]) - 1}};
                for (std::size_t t = i + 1; t <= i + uk - 2; ++t) ys.push_back(block(t));
                if (auto res = make({tail(i - 1, 1)}, ys, {head(i + uk - 1, 1)}, Cyclic3Shape::case_ii_long_block))
                    return res;
            }
        } else if (k_ >= 4) {
            if (all_ones && B >= uk + 4) {
                std::vector<Piece> ys;
                for (std::size_t t = 2; t < 2 + uk; ++t) ys.push_back(block(t));
                if (auto res = make({block(0), block(1)}, ys, {block(uk + 2), block(uk + 3)},
                                    Cyclic3Shape::case_iii_constant))
                    return res;
            }
            for (std::size_t i = 1; i + uk - 2 < B; ++i) {
                if (e_[i] <= 2) continue;
                std::vector<Piece> ys{head(i, 1), {offset_[i] + 1, 1}, {offset_[i] + 2, static_cast<std::size_t>(e_[i]) - 2}};
                for (std::size_t t = i + 1; t <= i + uk - 3; ++t) ys.push_back(block(t));
                if (auto res = make({tail(i - 1, 1)}, ys, {head(i + uk - 2, 1)}, Cyclic3Shape::case_iii_long_block))
                    return res;
            }
            for (std::size_t i = 1; i + uk - 2 < B; ++i) {
                if (e_[i] < 2 || e_[i + 1] < 2) continue;
                std::vector<Piece> ys{head(i, 1), {offset_[i] + 1, static_cast<std::size_t>(e_[i]) - 1}, head(i + 1, 1),
                                      {offset_[i + 1] + 1, static_cast<std::size_t>(e_[i + 1]) - 1}};
                for (std::size_t t = i + 2; t <= i + uk - 3; ++t) ys.push_back(block(t));
                if (auto res = make({tail(i - 1, 1)}, ys, {head(i + uk - 2, 1)}, Cyclic3Shape::case_iii_double_two))
                    return res;
            }
            for (std::size_t i = 0; i + uk + 3 < B; ++i) {
                const std::size_t far = i + uk + 2;
                if (e_[i + 1] != 1 || e_[i] < e_[far]) continue;
                std::vector<Piece> ys;
                for (std::size_t t = i + 2; t <= i + uk + 1; ++t) ys.push_back(block(t));
                const auto x_len = static_cast<std::size_t>(e_[far]);
                if (auto res = make({tail(i, x_len), block(i + 1)}, ys, {block(far), head(far + 1, 1)},
                                    Cyclic3Shape::case_iii_two_one))
                    return res;
            }
        }
        return std::nullopt;
    }

private:
    Piece block(std::size_t i) const { return {offset_[i], static_cast<std::size_t>(e_[i])}; }
    Piece head(std::size_t i, std::size_t len) const { return {offset_[i], len}; }
    Piece tail(std::size_t i, std::size_t len) const { return {offset_[i + 1] - len, len}; }

    Word concat(const std::vector<Piece>& pieces) const {
        std::size_t start = pieces.front().start, len = 0;
        for (const auto& p : pieces) len += p.len;
        return c_.slice(start, len);
    }

    // x is read off both copies; they must agree for the shape to apply.
    std::optional<Cyclic3Result> make(const std::vector<Piece>& x_left, const std::vector<Piece>& ys,
                                      const std::vector<Piece>& x_right, Cyclic3Shape shape) const {
        if (ys.size() != static_cast<std::size_t>(k_)) return std::nullopt;
        for (const auto& y : ys) {
            if (y.len == 0) return std::nullopt;
        }
        Word x = concat(x_left);
        if (!(x == concat(x_right))) return std::nullopt;
        Witness witness;
        witness.assignment.images.emplace("x", x);
        for (std::size_t t = 0; t < ys.size(); ++t) {
            witness.assignment.images.emplace("y" + std::to_string(t + 1), c_.slice(ys[t].start, ys[t].len));
        }
        for (const auto& p : phi_.fragments()) {
            auto pos = factor_positions(instantiate(p, witness.assignment), c_);
            if (pos.empty()) return std::nullopt;
            witness.placements[p.str()] = pos.front();
        }
        if (!validate_witness(witness, c_, phi_)) return std::nullopt;
        return Cyclic3Result{c_, std::move(witness), shape};
    }

    int k_;
    std::vector<int> e_;
    const Word& c_;
    Formula phi_;
    std::vector<std::size_t> offset_;
};

}  // namespace

std::optional<Cyclic3Result> cyclic3_scan(int k, const ExponentWord& w, std::size_t prefix_cap) {
    if (k < 1) throw std::invalid_argument("Phi_k is defined for k >= 1");
    const std::size_t len = std::min(prefix_cap, w.size());
    if (len == 0) return std::nullopt;
    std::vector<int> prefix(w.exponents().begin(), w.exponents().begin() + static_cast<std::ptrdiff_t>(len));
    const int bound = *std::max_element(prefix.begin(), prefix.end());
    const Word c = build_cyclic(3, ExponentWord(prefix, bound), "012");

    if (auto res = Cyclic3Shapes(k, prefix, c).find()) return res;
    if (auto witness = encounters(c, make_phi(k))) return Cyclic3Result{c, std::move(*witness), Cyclic3Shape::general_search};
    return std::nullopt;
}

}  // namespace revform
