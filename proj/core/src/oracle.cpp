#include "revform/oracle.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace revform {

namespace {

std::vector<std::string> distinct_factors(const std::string& s) {
    std::set<std::string> out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t len = 1; i + len <= s.size(); ++len) out.insert(s.substr(i, len));
    }
    return {out.begin(), out.end()};
}

struct Odometer {
    const std::string& host;
    const Formula& f;
    std::vector<std::vector<std::string>> domains;
    std::vector<std::size_t> pick;

    bool satisfied() const {
        const auto& vars = f.variables();
        std::string image;
        for (const auto& p : f.fragments()) {
            image.clear();
            for (const auto& s : p.symbols()) {
                auto idx = static_cast<std::size_t>(std::find(vars.begin(), vars.end(), s.var) - vars.begin());
                const std::string& img = domains[idx][pick[idx]];
                if (s.reversed()) {
                    image.append(img.rbegin(), img.rend());
                } else {
                    image += img;
                }
            }
            if (host.find(image) == std::string::npos) return false;
        }
        return true;
    }

    bool any() {
        for (const auto& d : domains) {
            if (d.empty()) return false;
        }
        pick.assign(domains.size(), 0);
        while (true) {
            if (satisfied()) return true;
            std::size_t i = 0;
            while (i < pick.size() && ++pick[i] == domains[i].size()) pick[i++] = 0;
            if (i == pick.size()) return false;
        }
    }
};

}  // namespace

bool oracle_encounters(const Word& w, const Formula& f) {
    const std::string host = w.str();
    std::string mirrored(host.rbegin(), host.rend());
    const auto forward = distinct_factors(host);
    const auto backward = distinct_factors(mirrored);

    Odometer od{host, f, {}, {}};
    for (const auto& v : f.variables()) {
        bool plain = false;
        for (const auto& p : f.fragments()) {
            for (const auto& s : p.symbols()) plain = plain || (s.var == v && !s.reversed());
        }
        od.domains.push_back(plain ? forward : backward);
    }
    return od.any();
}

}  // namespace revform
