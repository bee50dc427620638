#include "revform/cyclic.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "revform/formula.hpp"
#include "revform/parallel.hpp"

namespace revform {

ExponentWord::ExponentWord(std::vector<int> exponents, int bound) : exponents_(std::move(exponents)), bound_(bound) {
    if (exponents_.empty()) throw std::invalid_argument("exponent word must be nonempty");
    if (bound_ < 1) throw std::invalid_argument("exponent bound must be positive");
    for (int e : exponents_) {
        if (e < 1 || e > bound_) {
            throw std::invalid_argument("exponent " + std::to_string(e) + " outside 1.." + std::to_string(bound_));
        }
    }
}

ExponentWord ExponentWord::parse(std::string_view csv, int bound) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        std::size_t comma = csv.find(',', pos);
        if (comma == std::string_view::npos) comma = csv.size();
        auto token = csv.substr(pos, comma - pos);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        int value = 0;
        auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc() || end != token.data() + token.size()) {
            throw std::invalid_argument("malformed exponent '" + std::string(token) + "'");
        }
        out.push_back(value);
        pos = comma + 1;
    }
    return ExponentWord(std::move(out), bound);
}

ExponentWord ExponentWord::from_digits(const Word& w, int bound) {
    std::vector<int> out;
    for (char c : w.str()) {
        if (c < '0' || c > '9') throw std::invalid_argument(std::string("letter '") + c + "' is not a digit");
        out.push_back(c - '0');
    }
    return ExponentWord(std::move(out), bound);
}

long long ExponentWord::total() const { return std::accumulate(exponents_.begin(), exponents_.end(), 0LL); }

std::string ExponentWord::str() const {
    std::string out;
    for (int e : exponents_) {
        if (!out.empty()) out.push_back(',');
        out += std::to_string(e);
    }
    return out;
}

std::string default_cyclic_letters(int m) {
    static const std::string letters = "abcdefghijklmnopqrstuvwxyz";
    if (m < 1 || m > static_cast<int>(letters.size())) throw std::invalid_argument("unsupported cycle length");
    return letters.substr(0, static_cast<std::size_t>(m));
}

Word build_cyclic(int m, const ExponentWord& w, std::string_view letters) {
    if (m < 2) throw std::invalid_argument("cyclic words need m >= 2");
    if (letters.size() != static_cast<std::size_t>(m)) {
        throw std::invalid_argument("cyclic word needs exactly " + std::to_string(m) + " letters");
    }
    auto alphabet = Alphabet::make(letters);  // rejects repeated letters
    std::vector<LetterId> out;
    out.reserve(static_cast<std::size_t>(w.total()));
    for (std::size_t i = 0; i < w.size(); ++i) {
        out.insert(out.end(), static_cast<std::size_t>(w[i]), static_cast<LetterId>(i % static_cast<std::size_t>(m)));
    }
    return Word(std::move(alphabet), std::move(out));
}

Word build_cyclic(int m, const ExponentWord& w) { return build_cyclic(m, w, default_cyclic_letters(m)); }

std::vector<int> run_lengths(const Word& w) {
    std::vector<int> out;
    auto letters = w.letters();
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i > 0 && letters[i] == letters[i - 1]) {
            ++out.back();
        } else {
            out.push_back(1);
        }
    }
    return out;
}

std::optional<BadFactorWitness> find_bad_factor(const ExponentWord& w, int k, int m, BadFactorOptions options) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    if (m < k + 2) throw std::invalid_argument("the exponent-word test needs m >= k + 2");
    for (int e : w.exponents()) {
        if (e > k + 1) {
            throw std::invalid_argument("exponent " + std::to_string(e) + " exceeds k + 1 = " + std::to_string(k + 1));
        }
    }
    const auto& e = w.exponents();
    const std::size_t len = e.size();
    const auto um = static_cast<std::size_t>(m);

    for (std::size_t start = 0; start < len; ++start) {
        for (std::size_t n = 1; start + 2 * n + 1 <= len; ++n) {
            for (std::size_t j = 1; j <= static_cast<std::size_t>(k); ++j) {
                if (options.only_j && *options.only_j != j) continue;
                if ((n + j) % um != 0) continue;  // n = m - j (mod m)
                if (start + 2 * n + j > len) break;
                const std::size_t mid = start + n;
                const std::size_t tail = mid + j;
                long long sum = 0;
                for (std::size_t i = 0; i < j; ++i) sum += e[mid + i];
                if (sum < k) continue;
                if (e[start] < e[tail]) continue;
                if (e[start + n - 1] > e[tail + n - 1]) continue;
                // interior, 0-based offsets 1 .. last
                const std::size_t last = options.interior == InteriorRange::through_n_minus_1 ? n - 1 : n - 2;
                bool equal = true;
                for (std::size_t i = 1; i < last && equal; ++i) equal = e[start + i] == e[tail + i];
                if (!equal) continue;
                return BadFactorWitness{start, n, j, std::vector<int>(e.begin() + static_cast<std::ptrdiff_t>(mid),
                                                                      e.begin() + static_cast<std::ptrdiff_t>(tail))};
            }
        }
    }
    return std::nullopt;
}

std::string to_string(LemmaStatus s) {
    switch (s) {
        case LemmaStatus::agree_avoid: return "agree_avoid";
        case LemmaStatus::agree_encounter: return "agree_encounter";
        case LemmaStatus::hard_failure: return "hard_failure";
        case LemmaStatus::boundary_inconclusive: return "boundary_inconclusive";
    }
    return "unknown";
}

LemmaReport lemma_equivalence_report(int k, int m, std::span<const ExponentWord> words, int jobs,
                                     BadFactorOptions options) {
    if (m < k + 2) throw std::invalid_argument("the exponent-word test needs m >= k + 2");
    const Formula phi = make_phi(k);
    const EncounterEngine engine(phi);

    LemmaReport report;
    report.k = k;
    report.m = m;
    std::vector<std::optional<LemmaReportEntry>> slots(words.size());
    parallel_for(words.size(), jobs, [&](std::size_t i) {
        const ExponentWord& w = words[i];
        LemmaReportEntry entry{w, find_bad_factor(w, k, m, options), std::nullopt, LemmaStatus::agree_avoid};
        Word cyclic = build_cyclic(m, w);
        if (auto raw = engine.find(cyclic.letters())) entry.encounter = engine.to_witness(*raw, cyclic);
        if (entry.bad_factor && entry.encounter) {
            entry.status = LemmaStatus::agree_encounter;
        } else if (entry.bad_factor) {
            entry.status = LemmaStatus::hard_failure;
        } else if (entry.encounter) {
            entry.status = LemmaStatus::boundary_inconclusive;
        }
        slots[i] = std::move(entry);
    });

    auto smaller = [](const LemmaReportEntry& a, const LemmaReportEntry& b) {
        if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
        return a.word.exponents() < b.word.exponents();
    };
    for (auto& slot : slots) {
        LemmaReportEntry& entry = *slot;
        if (entry.status == LemmaStatus::hard_failure) {
            ++report.hard_failures;
            if (!report.minimal_hard_failure || smaller(entry, *report.minimal_hard_failure))
                report.minimal_hard_failure = entry;
        } else if (entry.status == LemmaStatus::boundary_inconclusive) {
            ++report.inconclusive;
            if (!report.minimal_inconclusive || smaller(entry, *report.minimal_inconclusive))
                report.minimal_inconclusive = entry;
        }
        report.entries.push_back(std::move(entry));
    }
    return report;
}

std::vector<ExponentWord> all_exponent_words(int bound, std::size_t max_len, std::size_t min_len) {
    std::vector<ExponentWord> out;
    for (std::size_t len = std::max<std::size_t>(1, min_len); len <= max_len; ++len) {
        std::vector<int> cur(len, 1);
        while (true) {
            out.emplace_back(cur, bound);
            std::size_t i = len;
            while (i > 0 && cur[i - 1] == bound) cur[--i] = 1;
            if (i == 0) break;
            ++cur[i - 1];
        }
    }
    return out;
}

}  // namespace revform
