#include "revform/formula.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace revform {

namespace {

// Compares names treating maximal digit runs as numbers.
int natural_compare(std::string_view a, std::string_view b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (std::isdigit(static_cast<unsigned char>(a[i])) && std::isdigit(static_cast<unsigned char>(b[j]))) {
            std::size_t ei = i, ej = j;
            while (ei < a.size() && std::isdigit(static_cast<unsigned char>(a[ei]))) ++ei;
            while (ej < b.size() && std::isdigit(static_cast<unsigned char>(b[ej]))) ++ej;
            auto da = a.substr(i, ei - i), db = b.substr(j, ej - j);
            while (da.size() > 1 && da.front() == '0') da.remove_prefix(1);
            while (db.size() > 1 && db.front() == '0') db.remove_prefix(1);
            if (da.size() != db.size()) return da.size() < db.size() ? -1 : 1;
            if (int c = da.compare(db)) return c < 0 ? -1 : 1;
            // equal values with different zero padding fall back to raw text
            if (int c = a.substr(i, ei - i).compare(b.substr(j, ej - j))) return c < 0 ? -1 : 1;
            i = ei;
            j = ej;
        } else {
            if (a[i] != b[j]) return a[i] < b[j] ? -1 : 1;
            ++i;
            ++j;
        }
    }
    if (i < a.size()) return 1;
    if (j < b.size()) return -1;
    return 0;
}

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

Pattern::Pattern(std::vector<FragmentSymbol> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty()) throw std::invalid_argument("pattern must have at least one symbol");
    for (const auto& s : symbols_) {
        if (s.var.empty()) throw std::invalid_argument("variable name must be nonempty");
    }
}

std::string Pattern::str() const {
    std::string out;
    for (const auto& s : symbols_) {
        if (!out.empty()) out.push_back(' ');
        out += s.var;
        if (s.reversed()) out += "^R";
    }
    return out;
}

bool canonical_less(const Pattern& a, const Pattern& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto& sa = a.symbols()[i];
        const auto& sb = b.symbols()[i];
        if (int c = natural_compare(sa.var, sb.var)) return c < 0;
        if (sa.polarity != sb.polarity) return sa.polarity == Polarity::plain;
    }
    return false;
}

Formula::Formula(std::vector<Pattern> fragments) : fragments_(std::move(fragments)) {
    if (fragments_.empty()) throw std::invalid_argument("formula must have at least one fragment");
    std::sort(fragments_.begin(), fragments_.end(), canonical_less);
    fragments_.erase(std::unique(fragments_.begin(), fragments_.end()), fragments_.end());

    std::set<std::string> plain, mirrored;
    for (const auto& p : fragments_) {
        for (const auto& s : p.symbols()) {
            if (std::find(variables_.begin(), variables_.end(), s.var) == variables_.end()) variables_.push_back(s.var);
            (s.reversed() ? mirrored : plain).insert(s.var);
        }
    }
    for (const auto& v : variables_) {
        if (plain.count(v) && mirrored.count(v)) reversed_variables_.push_back(v);
    }
}

Formula make_phi(int k) {
    if (k < 1) throw std::invalid_argument("Phi_k is defined for k >= 1");
    std::vector<FragmentSymbol> long_fragment{{"x", Polarity::plain}};
    std::vector<Pattern> fragments;
    for (int i = 1; i <= k; ++i) {
        std::string y = "y" + std::to_string(i);
        long_fragment.push_back({y, Polarity::plain});
        fragments.emplace_back(std::vector<FragmentSymbol>{{y, Polarity::reversed}});
    }
    long_fragment.push_back({"x", Polarity::plain});
    fragments.emplace_back(std::move(long_fragment));
    return Formula(std::move(fragments));
}

Formula parse_formula(std::string_view text) {
    std::vector<Pattern> fragments;
    std::vector<FragmentSymbol> current;
    std::size_t fragment_start = 0;
    std::size_t i = 0;

    auto close_fragment = [&](std::size_t pos) {
        if (current.empty()) throw ParseError("empty fragment", fragment_start);
        fragments.emplace_back(std::move(current));
        current.clear();
        fragment_start = pos;
    };

    if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) throw ParseError("empty formula", 0);

    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (c == '.') {
            close_fragment(i);
            ++i;
        } else if (is_ident_start(c)) {
            std::size_t start = i;
            while (i < text.size() && is_ident_char(text[i])) ++i;
            FragmentSymbol sym{std::string(text.substr(start, i - start)), Polarity::plain};
            if (i < text.size() && text[i] == '^') {
                if (i + 1 >= text.size() || text[i + 1] != 'R') throw ParseError("malformed reversal suffix", i);
                if (i + 2 < text.size() && is_ident_char(text[i + 2])) throw ParseError("malformed reversal suffix", i);
                sym.polarity = Polarity::reversed;
                i += 2;
            }
            current.push_back(std::move(sym));
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", i);
        }
    }
    close_fragment(i);
    return Formula(std::move(fragments));
}

std::string format_formula(const Formula& f) {
    std::string out;
    for (const auto& p : f.fragments()) {
        if (!out.empty()) out += " . ";
        out += p.str();
    }
    return out;
}

}  // namespace revform
