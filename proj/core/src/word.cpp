#include "revform/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace revform {

namespace {

void require_same_alphabet(const Word& a, const Word& b) {
    if (!(a.alphabet() == b.alphabet()) && !a.empty()) {
        throw std::invalid_argument("words are drawn from different alphabets: '" + a.alphabet().chars() +
                                    "' vs '" + b.alphabet().chars() + "'");
    }
}

}  // namespace

std::shared_ptr<const Alphabet> Alphabet::make(std::string_view chars) {
    if (chars.size() > 255) throw std::invalid_argument("alphabet too large");
    std::string seen;
    for (char c : chars) {
        if (c < '!' || c > '~') throw std::invalid_argument(std::string("non-printable alphabet character"));
        if (seen.find(c) != std::string::npos)
            throw std::invalid_argument(std::string("duplicate alphabet character '") + c + "'");
        seen.push_back(c);
    }
    return std::shared_ptr<const Alphabet>(new Alphabet(std::string(chars)));
}

std::shared_ptr<const Alphabet> Alphabet::infer(std::string_view text) {
    std::string chars(text);
    std::sort(chars.begin(), chars.end());
    chars.erase(std::unique(chars.begin(), chars.end()), chars.end());
    return make(chars);
}

std::optional<LetterId> Alphabet::find(char c) const {
    auto pos = chars_.find(c);
    if (pos == std::string::npos) return std::nullopt;
    return static_cast<LetterId>(pos);
}

LetterId Alphabet::id_of(char c) const {
    if (auto id = find(c)) return *id;
    throw std::invalid_argument(std::string("letter '") + c + "' is not in alphabet '" + chars_ + "'");
}

Word::Word() : alphabet_(Alphabet::make("")) {}

Word::Word(AlphabetPtr alphabet, std::vector<LetterId> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
    if (!alphabet_) throw std::invalid_argument("word needs an alphabet");
    for (LetterId id : letters_) {
        if (id >= alphabet_->size()) throw std::invalid_argument("letter id outside alphabet");
    }
}

Word Word::parse(AlphabetPtr alphabet, std::string_view text) {
    std::vector<LetterId> letters;
    letters.reserve(text.size());
    for (char c : text) letters.push_back(alphabet->id_of(c));
    return Word(std::move(alphabet), std::move(letters));
}

Word Word::from_string(std::string_view text) { return parse(Alphabet::infer(text), text); }

std::string Word::str() const {
    std::string out;
    out.reserve(letters_.size());
    for (LetterId id : letters_) out.push_back(alphabet_->display(id));
    return out;
}

Word Word::slice(std::size_t pos, std::size_t len) const {
    if (pos > letters_.size() || len > letters_.size() - pos) throw std::out_of_range("slice outside word");
    return Word(alphabet_, std::vector<LetterId>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                                 letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

Word Word::concat(const Word& other) const {
    if (empty()) return other;
    require_same_alphabet(*this, other);
    auto letters = letters_;
    letters.insert(letters.end(), other.letters_.begin(), other.letters_.end());
    return Word(alphabet_, std::move(letters));
}

Word Word::with_alphabet(AlphabetPtr alphabet) const { return parse(std::move(alphabet), str()); }

bool operator==(const Word& a, const Word& b) {
    return a.letters_ == b.letters_ && (a.empty() || *a.alphabet_ == *b.alphabet_);
}

Word reverse(const Word& w) {
    std::vector<LetterId> letters(w.letters().rbegin(), w.letters().rend());
    return Word(w.alphabet_ptr(), std::move(letters));
}

std::vector<std::size_t> factor_positions(const Word& u, const Word& w) {
    require_same_alphabet(u, w);
    std::vector<std::size_t> out;
    if (u.size() > w.size()) return out;
    auto hay = w.letters();
    auto needle = u.letters();
    for (std::size_t i = 0; i + needle.size() <= hay.size(); ++i) {
        if (std::equal(needle.begin(), needle.end(), hay.begin() + static_cast<std::ptrdiff_t>(i))) out.push_back(i);
    }
    return out;
}

bool is_factor(const Word& u, const Word& w) {
    require_same_alphabet(u, w);
    if (u.size() > w.size()) return false;
    auto hay = w.letters();
    auto needle = u.letters();
    return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) != hay.end();
}

bool is_square_free(std::span<const LetterId> w) {
    const std::size_t n = w.size();
    for (std::size_t half = 1; 2 * half <= n; ++half) {
        // run = length of the current streak of positions with w[i] == w[i + half]
        std::size_t run = 0;
        for (std::size_t i = 0; i + half < n; ++i) {
            run = (w[i] == w[i + half]) ? run + 1 : 0;
            if (run == half) return false;
        }
    }
    return true;
}

Word square_free_stream(std::size_t n) {
    static const std::vector<LetterId> images[3] = {{0, 1, 2}, {0, 2}, {1}};
    std::vector<LetterId> letters{0};
    // The fixed point is generated in place: position i's image is appended
    // until the prefix is long enough.
    for (std::size_t i = 0; letters.size() < n; ++i) {
        const auto& img = images[letters[i]];
        if (i == 0) {
            letters.insert(letters.end(), img.begin() + 1, img.end());
        } else {
            letters.insert(letters.end(), img.begin(), img.end());
        }
    }
    letters.resize(n);
    return Word(Alphabet::make("012"), std::move(letters));
}

Word apply_morphism(const MorphismRules& rules, const Word& w) {
    AlphabetPtr target;
    for (const auto& [c, image] : rules) {
        if (image.empty()) throw std::invalid_argument(std::string("morphism image of '") + c + "' is empty");
        if (!target) {
            target = image.alphabet_ptr();
        } else if (!(*target == image.alphabet())) {
            throw std::invalid_argument("morphism images use different alphabets");
        }
    }
    if (!target) target = w.alphabet_ptr();
    std::vector<LetterId> out;
    for (LetterId id : w.letters()) {
        char c = w.alphabet().display(id);
        auto it = rules.find(c);
        if (it == rules.end()) throw std::invalid_argument(std::string("morphism has no rule for letter '") + c + "'");
        auto img = it->second.letters();
        out.insert(out.end(), img.begin(), img.end());
    }
    return Word(target, std::move(out));
}

bool is_reversible_in(const Word& u, const Word& w) {
    if (u.empty()) throw std::invalid_argument("is_reversible_in needs a nonempty word");
    return is_factor(u, w) && is_factor(reverse(u), w);
}

}  // namespace revform
