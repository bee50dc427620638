#include "revform/constructions.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "revform/encounter.hpp"

namespace revform {

namespace {

MorphismRules rules_over(const AlphabetPtr& target, std::initializer_list<std::pair<char, std::string>> table) {
    MorphismRules rules;
    for (const auto& [c, image] : table) rules.emplace(c, Word::parse(target, image));
    return rules;
}

void require_alphabet_subset(const Word& w, std::string_view allowed, const char* what) {
    for (char c : w.str()) {
        if (allowed.find(c) == std::string_view::npos)
            throw std::invalid_argument(std::string(what) + ": letter '" + c + "' not in {" + std::string(allowed) + "}");
    }
}

Word ternary(const Word& w) {
    require_alphabet_subset(w, "012", "expected a ternary word");
    return w.with_alphabet(Alphabet::make("012"));
}

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > cap) return cap + 1;
    }
    return static_cast<std::uint64_t>(r);
}

}  // namespace

const std::vector<std::string>& f_phi1_code_words() {
    static const std::vector<std::string> words{"11112122", "12112222", "21111222"};
    return words;
}

Word f_phi1(const Word& v) {
    Word t = ternary(v);
    if (!is_square_free(t)) throw std::invalid_argument("f is only applied to square-free words: '" + v.str() + "'");
    const auto& code = f_phi1_code_words();
    auto target = Alphabet::make("12");
    return apply_morphism(rules_over(target, {{'0', code[0]}, {'1', code[1]}, {'2', code[2]}}), t);
}

Word rho_prefix(unsigned iterations) {
    auto alphabet = Alphabet::make("12");
    auto rules = rules_over(alphabet, {{'1', "22"}, {'2', "21"}});
    Word w = Word::parse(alphabet, "2");
    for (unsigned i = 0; i < iterations; ++i) w = apply_morphism(rules, w);
    return w;
}

Word rho_word_prefix(std::size_t n) {
    unsigned it = 0;
    while ((std::size_t{1} << it) < n) ++it;
    return rho_prefix(it).slice(0, n);
}

Word gdk(const Word& w, int k) {
    if (k < 1) throw std::invalid_argument("d_k needs k >= 1");
    Word t = ternary(w);
    auto mid = Alphabet::make("012");
    auto power = [&](char c) { return std::string(static_cast<std::size_t>(k) + 1, c); };
    Word d = apply_morphism(rules_over(mid, {{'0', power('0')}, {'1', power('1')}, {'2', power('2')}}), t);
    auto target = Alphabet::make("012ab");
    return apply_morphism(rules_over(target, {{'0', "0ab"}, {'1', "1ab"}, {'2', "2ab"}}), d);
}

Word insert_periodic(const Word& u, std::size_t period, char c) {
    if (period < 1) throw std::invalid_argument("insertion period must be >= 1");
    if (u.alphabet().find(c)) throw std::invalid_argument(std::string("letter '") + c + "' already in the alphabet");
    auto alphabet = Alphabet::make(u.alphabet().chars() + c);
    const auto c_id = static_cast<LetterId>(alphabet->size() - 1);
    std::vector<LetterId> out;
    auto letters = u.letters();
    for (std::size_t i = 0; i < letters.size(); ++i) {
        out.push_back(letters[i]);
        if ((i + 1) % period == 0) out.push_back(c_id);
    }
    return Word(alphabet, std::move(out));
}

Word insert_after_b(const Word& u, int k, char c) {
    if (k < 2) throw std::invalid_argument("insert_after_b needs k >= 2");
    if (u.alphabet().find(c)) throw std::invalid_argument(std::string("letter '") + c + "' already in the alphabet");
    auto b = u.alphabet().find('b');
    if (!b || std::find(u.letters().begin(), u.letters().end(), *b) == u.letters().end()) {
        throw std::invalid_argument("insert_after_b needs a word containing 'b'");
    }
    auto alphabet = Alphabet::make(u.alphabet().chars() + c);
    const auto c_id = static_cast<LetterId>(alphabet->size() - 1);
    std::vector<LetterId> out;
    long long count = 0;
    for (LetterId id : u.letters()) {
        out.push_back(id);
        if (id == *b) {
            ++count;
            const long long r = count % k;
            if (r == 0 || r == 1) out.push_back(c_id);
        }
    }
    return Word(alphabet, std::move(out));
}

Word g_prime_dk(const Word& w, int k) {
    if (k < 0) throw std::invalid_argument("g_prime_dk: k must be non-negative");
    Word t = ternary(w);
    auto mid = Alphabet::make("012");
    const auto n = static_cast<std::size_t>(k) + 1;
    Word d = apply_morphism(
        rules_over(mid, {{'0', std::string(n, '0')}, {'1', std::string(n, '1')}, {'2', std::string(n, '2')}}), t);
    auto target = Alphabet::make("012abcd");
    return apply_morphism(rules_over(target, {{'0', "0abcd"}, {'1', "1abcd"}, {'2', "2abcd"}}), d);
}

Word g_prime_d2(const Word& w) { return g_prime_dk(w, 2); }

std::vector<Word> mutate_2to3(const Word& u, std::size_t count, MutationOptions options) {
    require_alphabet_subset(u, "12", "mutate_2to3 expects a word over {1,2}");
    const std::string text = u.str();
    std::vector<std::size_t> twos;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '2') twos.push_back(i);
    }
    if (count > twos.size()) {
        throw std::invalid_argument("cannot replace " + std::to_string(count) + " 2's; word has " +
                                    std::to_string(twos.size()));
    }
    auto alphabet = Alphabet::make("123");
    auto render = [&](const std::vector<std::size_t>& chosen) {
        std::string s = text;
        for (std::size_t i : chosen) s[i] = '3';
        return s;
    };

    std::set<std::string> out;
    const std::uint64_t total = binomial_capped(twos.size(), count, options.cap);
    if (total <= options.cap) {
        // every subset, in lexicographic order of chosen indices
        std::vector<std::size_t> idx(count);
        for (std::size_t i = 0; i < count; ++i) idx[i] = i;
        while (true) {
            std::vector<std::size_t> chosen;
            for (std::size_t i : idx) chosen.push_back(twos[i]);
            out.insert(render(chosen));
            std::size_t i = count;
            while (i > 0 && idx[i - 1] == twos.size() - count + (i - 1)) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < count; ++j) idx[j] = idx[j - 1] + 1;
        }
    } else {
        std::mt19937_64 rng(options.seed);
        while (out.size() < options.cap) {
            std::vector<std::size_t> chosen;
            std::sample(twos.begin(), twos.end(), std::back_inserter(chosen), static_cast<std::ptrdiff_t>(count), rng);
            out.insert(render(chosen));
        }
    }
    std::vector<Word> words;
    for (const auto& s : out) words.push_back(Word::parse(alphabet, s));
    return words;
}

int construction_alphabet_size(int k) {
    if (k < 1) throw std::invalid_argument("Phi_k is defined for k >= 1");
    if (k == 1) return 4;
    if (k == 2) return 5;
    if (k == 5) return 7;
    if (k % 3 == 0) return 5;
    return 6;
}

ConstructionOutput build_avoider(int k, std::size_t base_len) {
    if (k < 1) throw std::invalid_argument("Phi_k is defined for k >= 1");
    if (base_len < 1) throw std::invalid_argument("base length must be positive");

    ConstructionOutput out{Word(), k, make_phi(k), construction_alphabet_size(k), "", {}};
    auto push = [&](std::string name, std::string detail) { out.provenance.push_back({std::move(name), std::move(detail)}); };

    if (k == 2) {
        Word base = rho_word_prefix(base_len);
        out.base = base.str();
        push("rho_prefix", "length " + std::to_string(base_len) + " prefix of rho^inf(2), rho(1)=22, rho(2)=21");
        out.word = build_cyclic(5, ExponentWord::from_digits(base, 3));
        push("cyclic", "m=5");
    } else {
        Word v = square_free_stream(base_len);
        out.base = v.str();
        push("square_free_stream", "n=" + std::to_string(base_len));
        if (k == 1) {
            Word fv = f_phi1(v);
            push("f", "0->11112122, 1->12112222, 2->21111222");
            out.word = build_cyclic(4, ExponentWord::from_digits(fv, 2));
            push("cyclic", "m=4");
        } else if (k == 5) {
            out.word = g_prime_d2(v);
            push("g_prime_d2", "d_2 then i->iabcd");
        } else if (k % 3 == 0) {
            const int kk = k / 3;
            out.word = gdk(v, kk);
            push("gdk", "k=" + std::to_string(kk));
        } else if (k % 3 == 1) {
            const int kk = (k - 1) / 3;
            out.word = insert_periodic(gdk(v, kk), static_cast<std::size_t>(3 * kk), 'c');
            push("gdk", "k=" + std::to_string(kk));
            push("insert_periodic", "c after every " + std::to_string(3 * kk) + " letters");
        } else {
            const int kk = (k - 2) / 3;
            out.word = insert_after_b(gdk(v, kk), kk, 'c');
            push("gdk", "k=" + std::to_string(kk));
            push("insert_after_b", "c after the t-th b when t mod " + std::to_string(kk) + " in {0,1}");
        }
    }

    if (static_cast<int>(out.word.alphabet().size()) != out.alphabet_size) {
        throw InternalError("construction for Phi_" + std::to_string(k) + " used " +
                            std::to_string(out.word.alphabet().size()) + " letters");
    }
    if (auto w = encounters(out.word, out.target_formula)) {
        throw InternalError("construction for Phi_" + std::to_string(k) + " encounters the formula");
    }
    return out;
}

}  // namespace revform
