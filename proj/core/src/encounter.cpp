#include "revform/encounter.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace revform {

namespace detail {

struct CompiledSymbol {
    int var = 0;
    bool mirrored = false;
};

struct CompiledFormula {
    explicit CompiledFormula(const Formula& f) : formula(f) {
        const auto& vars = f.variables();
        for (const auto& p : f.fragments()) {
            std::vector<CompiledSymbol> syms;
            for (const auto& s : p.symbols()) {
                auto it = std::find(vars.begin(), vars.end(), s.var);
                syms.push_back({static_cast<int>(it - vars.begin()), s.reversed()});
            }
            fragments.push_back(std::move(syms));
            texts.push_back(p.str());
        }
        occurrences.resize(vars.size());
        for (std::size_t fi = 0; fi < fragments.size(); ++fi) {
            for (std::size_t i = 0; i < fragments[fi].size(); ++i) {
                occurrences[fragments[fi][i].var].push_back({static_cast<int>(fi), static_cast<int>(i)});
            }
        }
        // Fragments are in canonical order, so the first one is the longest
        // and first-occurrence order over all fragments reads it first.
        for (std::size_t v = 0; v < vars.size(); ++v) default_order.push_back(static_cast<int>(v));
    }

    struct Slot {
        int fragment;
        int pos;
    };

    Formula formula;
    std::vector<std::vector<CompiledSymbol>> fragments;
    std::vector<std::string> texts;
    std::vector<std::vector<Slot>> occurrences;  // per variable
    std::vector<int> default_order;
};

}  // namespace detail

namespace {

using detail::CompiledFormula;
using detail::CompiledSymbol;
using ImageSpan = EncounterEngine::ImageSpan;

constexpr std::uint64_t kMod = (std::uint64_t{1} << 61) - 1;
constexpr std::uint64_t kBase = 1'000'003;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    std::uint64_t lo = static_cast<std::uint64_t>(p & kMod);
    std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
    std::uint64_t r = lo + hi;
    return r >= kMod ? r - kMod : r;
}

std::uint64_t addmod(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = a + b;
    return r >= kMod ? r - kMod : r;
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kMod - b; }

std::uint64_t factor_key(std::uint64_t h, std::size_t len) {
    return h + static_cast<std::uint64_t>(len) * 0x9E3779B97F4A7C15ull;
}

// Polynomial hashes of every factor of w and of reverse(w). Equal words hash
// equally, so a failed lookup is proof of absence; a successful lookup is
// confirmed by direct comparison before a witness is reported.
class HostIndex {
public:
    explicit HostIndex(std::span<const LetterId> w) : n_(w.size()), fwd_(w.begin(), w.end()), bwd_(w.rbegin(), w.rend()) {
        pow_.assign(n_ + 1, 1);
        pf_.assign(n_ + 1, 0);
        pb_.assign(n_ + 1, 0);
        for (std::size_t i = 0; i < n_; ++i) {
            pow_[i + 1] = mulmod(pow_[i], kBase);
            pf_[i + 1] = addmod(mulmod(pf_[i], kBase), fwd_[i] + 1u);
            pb_[i + 1] = addmod(mulmod(pb_[i], kBase), bwd_[i] + 1u);
        }
        keys_.reserve(n_ * (n_ + 1) / 2);
        for (std::size_t s = 0; s < n_; ++s) {
            std::uint64_t h = 0;
            for (std::size_t e = s; e < n_; ++e) {
                h = addmod(mulmod(h, kBase), fwd_[e] + 1u);
                keys_.insert(factor_key(h, e - s + 1));
            }
        }
    }

    std::size_t size() const { return n_; }
    const std::vector<LetterId>& fwd() const { return fwd_; }
    const std::vector<LetterId>& bwd() const { return bwd_; }

    std::uint64_t window(std::size_t start, std::size_t len, bool mirrored) const {
        const auto& p = mirrored ? pb_ : pf_;
        return submod(p[start + len], mulmod(p[start], pow_[len]));
    }
    std::uint64_t hash(const ImageSpan& s) const { return window(s.start, s.len, s.mirrored); }

    // Hash of the image of symbol `sym` bound to `s` (flipped when mirrored).
    std::uint64_t symbol_hash(const ImageSpan& s, bool mirrored_symbol) const {
        return mirrored_symbol ? hash(flip(s)) : hash(s);
    }

    ImageSpan flip(const ImageSpan& s) const { return {n_ - s.start - s.len, s.len, !s.mirrored}; }

    std::uint64_t append(std::uint64_t h, std::uint64_t tail, std::size_t tail_len) const {
        return addmod(mulmod(h, pow_[tail_len]), tail);
    }

    bool occurs(std::uint64_t h, std::size_t len) const {
        if (len == 0) return true;
        if (len > n_) return false;
        return keys_.count(factor_key(h, len)) != 0;
    }

    // Forward-text start positions whose window of length `len` hashes to `h`.
    template <typename F>
    void for_each_occurrence(std::uint64_t h, std::size_t len, F&& f) const {
        if (len == 0 || len > n_) return;
        for (std::size_t p = 0; p + len <= n_; ++p) {
            if (window(p, len, false) == h) f(p);
        }
    }

    LetterId at(const ImageSpan& s, std::size_t i) const {
        return s.mirrored ? bwd_[s.start + i] : fwd_[s.start + i];
    }

private:
    std::size_t n_;
    std::vector<LetterId> fwd_, bwd_;
    std::vector<std::uint64_t> pow_, pf_, pb_;
    std::unordered_set<std::uint64_t> keys_;
};

enum class Growth { right, left };

struct CheckResult {
    bool ok = true;
    bool monotone = false;  // every extension in the current growth direction fails too
};

class Search {
public:
    Search(const CompiledFormula& f, const HostIndex& host, std::optional<int> end_fragment)
        : f_(f), host_(host), end_fragment_(end_fragment), bind_(f.formula.variables().size()) {
        if (end_fragment_) {
            std::vector<char> seen(bind_.size(), 0);
            const auto& frag = f_.fragments[*end_fragment_];
            for (auto it = frag.rbegin(); it != frag.rend(); ++it) {
                if (!seen[it->var]) {
                    seen[it->var] = 1;
                    order_.push_back(it->var);
                }
            }
            for (int v : f_.default_order) {
                if (!seen[v]) order_.push_back(v);
            }
        } else {
            order_ = f_.default_order;
        }
    }

    std::optional<EncounterEngine::RawAssignment> run() {
        const std::size_t n = host_.size();
        for (const auto& frag : f_.fragments) {
            if (frag.size() > n) return std::nullopt;
        }
        if (dfs(0)) {
            EncounterEngine::RawAssignment out;
            for (const auto& b : bind_) out.push_back(*b);
            return out;
        }
        return std::nullopt;
    }

private:
    struct Candidate {
        ImageSpan span;
        std::size_t first_start;
    };

    bool bound(int var) const { return bind_[var].has_value(); }

    std::size_t symbol_len(const CompiledSymbol& s) const { return bound(s.var) ? bind_[s.var]->len : 1; }

    // Checks every constraint that involves `v`, assuming v was just bound and
    // its image grows in direction `growth` along the current candidate chain.
    CheckResult check(int v, Growth growth) const {
        const std::size_t n = host_.size();
        CheckResult result;
        for (const auto& slot : f_.occurrences[v]) {
            // Each fragment is inspected once, at its first slot holding v.
            if (&slot != &first_slot_in_fragment(v, slot.fragment)) continue;
            const auto& frag = f_.fragments[slot.fragment];

            std::size_t min_len = 0;
            for (const auto& s : frag) min_len += symbol_len(s);
            if (min_len > n) return {false, true};

            std::size_t i = 0;
            while (i < frag.size()) {
                if (!bound(frag[i].var)) {
                    ++i;
                    continue;
                }
                std::size_t j = i;
                std::uint64_t h = 0;
                std::size_t len = 0;
                int v_count = 0;
                bool v_first = false, v_last = false;
                while (j < frag.size() && bound(frag[j].var)) {
                    const auto& s = frag[j];
                    const auto& span = *bind_[s.var];
                    h = host_.append(h, host_.symbol_hash(span, s.mirrored), span.len);
                    len += span.len;
                    if (s.var == v) {
                        ++v_count;
                        if (j == i) v_first = true;
                        v_last = true;
                    } else {
                        v_last = false;
                    }
                    ++j;
                }
                if (v_count > 0) {
                    bool occurs = host_.occurs(h, len);
                    bool at_end = true;
                    if (occurs && end_fragment_ && *end_fragment_ == slot.fragment && j == frag.size()) {
                        at_end = host_.window(n - len, len, false) == h;
                    }
                    if (!occurs || !at_end) {
                        result.ok = false;
                        if (v_count == 1) {
                            // A run holding v once contains its previous image
                            // when it grows at the end where v sits; a suffix
                            // that was not at the end of w stays off it only
                            // when it grows leftwards.
                            auto grows_right = [&](const CompiledSymbol& s) {
                                return (growth == Growth::right) != s.mirrored;
                            };
                            const bool grows_at_right = v_last && grows_right(frag[j - 1]);
                            const bool grows_at_left = v_first && !grows_right(frag[i]);
                            if (grows_at_left || (!occurs && grows_at_right)) {
                                result.monotone = true;
                                return result;
                            }
                        }
                    }
                }
                i = j;
            }
        }
        return result;
    }

    const detail::CompiledFormula::Slot& first_slot_in_fragment(int v, int fragment) const {
        for (const auto& s : f_.occurrences[v]) {
            if (s.fragment == fragment) return s;
        }
        throw std::logic_error("variable missing from fragment");
    }

    // Image span of symbol occurrence -> span of the variable itself.
    ImageSpan var_span(const ImageSpan& symbol_image, bool mirrored_symbol) const {
        return mirrored_symbol ? host_.flip(symbol_image) : symbol_image;
    }

    struct Chain {
        std::size_t anchor;  // fixed endpoint in forward text
        bool grows_right;    // of the symbol image
        std::size_t max_len;
    };

    std::vector<Candidate> candidates(int v) {
        const std::size_t n = host_.size();
        std::vector<Chain> chains;
        bool mirrored_symbol = false;

        auto run_bounds_before = [&](const std::vector<CompiledSymbol>& frag, int pos) {
            int s = pos;
            while (s > 0 && bound(frag[s - 1].var)) --s;
            return s;
        };
        auto run_bounds_after = [&](const std::vector<CompiledSymbol>& frag, int pos) {
            int e = pos + 1;
            while (e < static_cast<int>(frag.size()) && bound(frag[e].var)) ++e;
            return e;
        };
        auto run_hash = [&](const std::vector<CompiledSymbol>& frag, int from, int to, std::size_t& len) {
            std::uint64_t h = 0;
            len = 0;
            for (int k = from; k < to; ++k) {
                const auto& span = *bind_[frag[k].var];
                h = host_.append(h, host_.symbol_hash(span, frag[k].mirrored), span.len);
                len += span.len;
            }
            return h;
        };

        bool found = false;
        // Suffix-anchored search: the anchor fragment is built right to left
        // against the end of w.
        if (end_fragment_) {
            const auto& frag = f_.fragments[*end_fragment_];
            const int last = static_cast<int>(frag.size()) - 1;
            for (int pos = last; pos >= 0 && !found; --pos) {
                if (frag[pos].var != v) continue;
                int e = run_bounds_after(frag, pos);
                if (e != static_cast<int>(frag.size())) continue;
                mirrored_symbol = frag[pos].mirrored;
                std::size_t len = 0;
                run_hash(frag, pos + 1, e, len);
                // checks already guarantee that the bound suffix sits at the end
                chains.push_back({n - len, false, n - len});
                found = true;
            }
        }
        if (!found) {
            for (const auto& slot : f_.occurrences[v]) {
                const auto& frag = f_.fragments[slot.fragment];
                if (slot.pos > 0 && bound(frag[slot.pos - 1].var)) {
                    int s = run_bounds_before(frag, slot.pos);
                    std::size_t len = 0;
                    std::uint64_t h = run_hash(frag, s, slot.pos, len);
                    mirrored_symbol = frag[slot.pos].mirrored;
                    host_.for_each_occurrence(h, len, [&](std::size_t p) {
                        chains.push_back({p + len, true, n - (p + len)});
                    });
                    found = true;
                    break;
                }
            }
        }
        if (!found) {
            for (const auto& slot : f_.occurrences[v]) {
                const auto& frag = f_.fragments[slot.fragment];
                if (slot.pos + 1 < static_cast<int>(frag.size()) && bound(frag[slot.pos + 1].var)) {
                    int e = run_bounds_after(frag, slot.pos);
                    std::size_t len = 0;
                    std::uint64_t h = run_hash(frag, slot.pos + 1, e, len);
                    mirrored_symbol = frag[slot.pos].mirrored;
                    host_.for_each_occurrence(h, len, [&](std::size_t q) { chains.push_back({q, false, q}); });
                    found = true;
                    break;
                }
            }
        }
        if (!found) {
            const auto& slot = f_.occurrences[v].front();
            mirrored_symbol = f_.fragments[slot.fragment][slot.pos].mirrored;
            for (std::size_t p = 0; p < n; ++p) chains.push_back({p, true, n - p});
        }

        const bool v_grows_right_on_right = !mirrored_symbol;
        struct Seen {
            bool ok;
            bool monotone;
            std::size_t index;  // into out when ok
        };
        std::unordered_map<std::uint64_t, Seen> seen;
        std::vector<Candidate> out;

        for (const auto& chain : chains) {
            for (std::size_t len = 1; len <= chain.max_len; ++len) {
                ImageSpan sym = chain.grows_right ? ImageSpan{chain.anchor, len, false}
                                                  : ImageSpan{chain.anchor - len, len, false};
                ImageSpan span = var_span(sym, mirrored_symbol);
                const std::uint64_t key = factor_key(host_.hash(span), len);
                auto it = seen.find(key);
                if (it != seen.end()) {
                    if (it->second.ok) {
                        auto& c = out[it->second.index];
                        c.first_start = std::min(c.first_start, sym.start);
                        continue;
                    }
                    if (it->second.monotone) break;
                    continue;
                }
                const Growth growth =
                    (chain.grows_right == v_grows_right_on_right) ? Growth::right : Growth::left;
                bind_[v] = span;
                CheckResult r = check(v, growth);
                bind_[v].reset();
                if (r.ok) {
                    seen.emplace(key, Seen{true, false, out.size()});
                    out.push_back({span, sym.start});
                } else {
                    seen.emplace(key, Seen{false, r.monotone, 0});
                    if (r.monotone) break;
                }
            }
        }
        std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
            if (a.span.len != b.span.len) return a.span.len < b.span.len;
            return a.first_start < b.first_start;
        });
        return out;
    }

    bool verify_exact() const {
        const auto& w = host_.fwd();
        std::vector<LetterId> image;
        for (std::size_t fi = 0; fi < f_.fragments.size(); ++fi) {
            image.clear();
            for (const auto& s : f_.fragments[fi]) {
                ImageSpan span = s.mirrored ? host_.flip(*bind_[s.var]) : *bind_[s.var];
                for (std::size_t i = 0; i < span.len; ++i) image.push_back(host_.at(span, i));
            }
            if (end_fragment_ && static_cast<int>(fi) == *end_fragment_) {
                if (!std::equal(image.begin(), image.end(), w.end() - static_cast<std::ptrdiff_t>(image.size())))
                    return false;
            } else if (std::search(w.begin(), w.end(), image.begin(), image.end()) == w.end()) {
                return false;
            }
        }
        return true;
    }

    bool dfs(std::size_t depth) {
        if (depth == order_.size()) return verify_exact();
        const int v = order_[depth];
        for (const auto& c : candidates(v)) {
            bind_[v] = c.span;
            if (dfs(depth + 1)) return true;
        }
        bind_[v].reset();
        return false;
    }

    const CompiledFormula& f_;
    const HostIndex& host_;
    std::optional<int> end_fragment_;
    std::vector<std::optional<ImageSpan>> bind_;
    std::vector<int> order_;
};

Word span_word(const ImageSpan& s, const Word& w) {
    std::vector<LetterId> letters;
    auto src = w.letters();
    for (std::size_t i = 0; i < s.len; ++i) {
        letters.push_back(s.mirrored ? src[src.size() - 1 - (s.start + i)] : src[s.start + i]);
    }
    return Word(w.alphabet_ptr(), std::move(letters));
}

}  // namespace

Word Assignment::image_of(const FragmentSymbol& s) const {
    auto it = images.find(s.var);
    if (it == images.end()) throw std::invalid_argument("assignment has no image for variable '" + s.var + "'");
    return s.reversed() ? reverse(it->second) : it->second;
}

Word instantiate(const Pattern& p, const Assignment& a) {
    Word out;
    for (const auto& s : p.symbols()) out = out.concat(a.image_of(s));
    return out;
}

EncounterEngine::EncounterEngine(const Formula& f) : compiled_(std::make_unique<detail::CompiledFormula>(f)) {}
EncounterEngine::~EncounterEngine() = default;
EncounterEngine::EncounterEngine(EncounterEngine&&) noexcept = default;
EncounterEngine& EncounterEngine::operator=(EncounterEngine&&) noexcept = default;

const Formula& EncounterEngine::formula() const { return compiled_->formula; }

std::optional<EncounterEngine::RawAssignment> EncounterEngine::find(std::span<const LetterId> w) const {
    HostIndex host(w);
    Search search(*compiled_, host, std::nullopt);
    return search.run();
}

std::optional<EncounterEngine::RawAssignment> EncounterEngine::find_at_end(std::span<const LetterId> w) const {
    HostIndex host(w);
    for (std::size_t fi = 0; fi < compiled_->fragments.size(); ++fi) {
        Search search(*compiled_, host, static_cast<int>(fi));
        if (auto raw = search.run()) return raw;
    }
    return std::nullopt;
}

Witness EncounterEngine::to_witness(const RawAssignment& raw, const Word& w) const {
    Witness out;
    const auto& vars = compiled_->formula.variables();
    for (std::size_t v = 0; v < vars.size(); ++v) out.assignment.images.emplace(vars[v], span_word(raw[v], w));
    for (const auto& p : compiled_->formula.fragments()) {
        auto positions = factor_positions(instantiate(p, out.assignment), w);
        if (positions.empty()) throw std::logic_error("engine produced an invalid witness");
        out.placements[p.str()] = positions.front();
    }
    return out;
}

std::optional<Witness> encounters(const Word& w, const Formula& f) {
    EncounterEngine engine(f);
    auto raw = engine.find(w.letters());
    if (!raw) return std::nullopt;
    return engine.to_witness(*raw, w);
}

std::optional<Witness> encounters_at_end(const Word& w, const Formula& f) {
    EncounterEngine engine(f);
    auto raw = engine.find_at_end(w.letters());
    if (!raw) return std::nullopt;
    return engine.to_witness(*raw, w);
}

bool validate_witness(const Witness& witness, const Word& w, const Formula& f) {
    for (const auto& v : f.variables()) {
        auto it = witness.assignment.images.find(v);
        if (it == witness.assignment.images.end() || it->second.empty()) return false;
    }
    for (const auto& p : f.fragments()) {
        auto placed = witness.placements.find(p.str());
        if (placed == witness.placements.end()) return false;
        Word image = instantiate(p, witness.assignment);
        if (placed->second + image.size() > w.size()) return false;
        if (!(w.slice(placed->second, image.size()) == image)) return false;
    }
    return true;
}

}  // namespace revform
