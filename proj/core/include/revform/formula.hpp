#pragma once

// Patterns and formulas with reversal, in the dot notation
//   x y1 x . y1^R
// where `.` separates fragments and `^R` marks a mirrored variable.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace revform {

enum class Polarity { plain, reversed };

struct FragmentSymbol {
    std::string var;
    Polarity polarity = Polarity::plain;

    bool reversed() const { return polarity == Polarity::reversed; }
    friend bool operator==(const FragmentSymbol&, const FragmentSymbol&) = default;
};

class Pattern {
public:
    explicit Pattern(std::vector<FragmentSymbol> symbols);

    const std::vector<FragmentSymbol>& symbols() const { return symbols_; }
    std::size_t size() const { return symbols_.size(); }
    std::string str() const;

    friend bool operator==(const Pattern&, const Pattern&) = default;

private:
    std::vector<FragmentSymbol> symbols_;
};

// Total order used for canonical formatting: longer fragments first, then
// symbol by symbol with numeric runs in names compared by value (y2 < y10).
bool canonical_less(const Pattern& a, const Pattern& b);

class Formula {
public:
    explicit Formula(std::vector<Pattern> fragments);

    // Canonical order (see canonical_less), duplicates removed.
    const std::vector<Pattern>& fragments() const { return fragments_; }
    // Ordered by first occurrence when reading the fragments in canonical order.
    const std::vector<std::string>& variables() const { return variables_; }
    // Variables that occur with both polarities.
    const std::vector<std::string>& reversed_variables() const { return reversed_variables_; }

    friend bool operator==(const Formula&, const Formula&) = default;

private:
    std::vector<Pattern> fragments_;
    std::vector<std::string> variables_;
    std::vector<std::string> reversed_variables_;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// x y_1 ... y_k x . y_1^R . ... . y_k^R
Formula make_phi(int k);

Formula parse_formula(std::string_view text);
std::string format_formula(const Formula& f);

}  // namespace revform
