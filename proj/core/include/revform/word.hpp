#pragma once

// Finite words over small explicit alphabets, and the handful of
// combinatorial queries everything else is built on.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace revform {

using LetterId = std::uint8_t;

struct Letter {
    LetterId id = 0;
    char display = '?';
};

// Ordered list of distinct printable characters. Letter ids index into it.
class Alphabet {
public:
    static std::shared_ptr<const Alphabet> make(std::string_view chars);

    // Sorted distinct characters of `text`.
    static std::shared_ptr<const Alphabet> infer(std::string_view text);

    std::size_t size() const { return chars_.size(); }
    const std::string& chars() const { return chars_; }
    char display(LetterId id) const { return chars_.at(id); }
    Letter letter(LetterId id) const { return {id, display(id)}; }
    std::optional<LetterId> find(char c) const;
    LetterId id_of(char c) const;  // throws std::invalid_argument

    bool operator==(const Alphabet& other) const { return chars_ == other.chars_; }

private:
    explicit Alphabet(std::string chars) : chars_(std::move(chars)) {}
    std::string chars_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

class Word {
public:
    Word();
    explicit Word(AlphabetPtr alphabet, std::vector<LetterId> letters = {});

    // Parses display characters; every character must belong to `alphabet`.
    static Word parse(AlphabetPtr alphabet, std::string_view text);
    // Infers the alphabet as the sorted distinct characters of `text`.
    static Word from_string(std::string_view text);

    const Alphabet& alphabet() const { return *alphabet_; }
    const AlphabetPtr& alphabet_ptr() const { return alphabet_; }
    std::span<const LetterId> letters() const { return letters_; }

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    LetterId operator[](std::size_t i) const { return letters_[i]; }

    std::string str() const;
    Word slice(std::size_t pos, std::size_t len) const;
    Word concat(const Word& other) const;
    Word with_alphabet(AlphabetPtr alphabet) const;  // re-interns by display char

    friend bool operator==(const Word& a, const Word& b);
    friend bool operator<(const Word& a, const Word& b) { return a.str() < b.str(); }

private:
    AlphabetPtr alphabet_;
    std::vector<LetterId> letters_;
};

Word reverse(const Word& w);

bool is_factor(const Word& u, const Word& w);
// All start positions of `u` in `w`, ascending. The empty word occurs everywhere.
std::vector<std::size_t> factor_positions(const Word& u, const Word& w);

bool is_square_free(std::span<const LetterId> w);
inline bool is_square_free(const Word& w) { return is_square_free(w.letters()); }

// Prefix of the fixed point of 0->012, 1->02, 2->1.
Word square_free_stream(std::size_t n);

using MorphismRules = std::map<char, Word>;

// Image of `w` under the letter-to-word morphism `rules`, keyed by display char.
Word apply_morphism(const MorphismRules& rules, const Word& w);

bool is_reversible_in(const Word& u, const Word& w);

}  // namespace revform
