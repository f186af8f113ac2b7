#include "fano/polynomial.hpp"

namespace fano {

std::vector<Monomial> monomial_basis(std::size_t nvars, std::uint32_t degree) {
    std::vector<Monomial> out;
    if (nvars == 0) {
        if (degree == 0) out.emplace_back(0);
        return out;
    }
    // Enumerate compositions of `degree` into nvars parts, then sort.
    Monomial cur(nvars);
    auto rec = [&](auto&& self, std::size_t v, std::uint32_t remaining) -> void {
        if (v + 1 == nvars) {
            cur[v] = remaining;
            out.push_back(cur);
            return;
        }
        for (std::uint32_t e = 0; e <= remaining; ++e) {
            cur[v] = e;
            self(self, v + 1, remaining - e);
        }
    };
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end(), MonomialOrder{});
    return out;
}

std::vector<std::string> default_variable_names(std::size_t nvars) {
    std::vector<std::string> names;
    names.reserve(nvars);
    for (std::size_t i = 0; i < nvars; ++i) names.push_back("z" + std::to_string(i));
    return names;
}

std::vector<std::string> patch_variable_names(std::size_t nvars, std::size_t i) {
    std::vector<std::string> names;
    for (std::size_t v = 0; v < nvars; ++v)
        if (v != i) names.push_back("x" + std::to_string(v));
    return names;
}

namespace detail {

std::string format_monomial(const Monomial& m, const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t v = 0; v < m.size(); ++v) {
        if (m[v] == 0) continue;
        if (!out.empty()) out += '*';
        out += v < names.size() ? names[v] : "z" + std::to_string(v);
        if (m[v] > 1) out += '^' + std::to_string(m[v]);
    }
    return out;
}

std::string format_terms(const std::vector<std::pair<std::string, std::string>>& parts) {
    if (parts.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [coeff, mono] : parts) {
        const bool negative = !coeff.empty() && coeff.front() == '-';
        const std::string magnitude = negative ? coeff.substr(1) : coeff;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (mono.empty())
            out += magnitude;
        else if (magnitude == "1")
            out += mono;
        else
            out += magnitude + "*" + mono;
        first = false;
    }
    return out;
}

} // namespace detail
} // namespace fano
