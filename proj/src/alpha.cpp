#include "fano/alpha.hpp"

#include <algorithm>
#include <cctype>

namespace fano {

std::vector<BlockMonomial> block_basis(const MultiDegree& d, int k) {
    std::vector<BlockMonomial> out;
    for (std::size_t b = 0; b < d.size(); ++b)
        for (Monomial& m : monomial_basis(static_cast<std::size_t>(k + 1), static_cast<std::uint32_t>(d[b])))
            out.push_back({b, std::move(m)});
    return out;
}

MMuMatrix m_mu(const MultiDegree& d, int k) {
    if (k < 0) throw Error(ErrorCode::InvalidRange, "k must be non-negative");
    d.require_at_least_two();
    MMuMatrix m;
    m.k = k;
    m.degrees = d;
    m.columns = block_basis(d.shifted(-1), k);
    const auto vars = static_cast<std::size_t>(k + 1);
    for (std::size_t i = 0; i < vars; ++i) {
        std::vector<BlockMonomial> row;
        row.reserve(m.columns.size());
        for (const BlockMonomial& col : m.columns) row.push_back({col.block, col.monomial * Monomial::unit(vars, i)});
        m.entries.push_back(std::move(row));
    }
    return m;
}

namespace {

constexpr std::string_view kDirectSum = "\xE2\x8A\x95"; // ⊕

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

/// Splits at bracket depth 0: on '+' and '⊕' between blocks, or before each
/// '+'/'-' sign inside a block (the sign stays with the following term).
std::vector<std::string> split_top_level(std::string_view s, bool blocks) {
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (depth < 0) throw Error(ErrorCode::SyntaxError, "unbalanced brackets in functional");
        if (depth == 0) {
            if (blocks && s.substr(i, kDirectSum.size()) == kDirectSum) {
                parts.push_back(cur);
                cur.clear();
                i += kDirectSum.size() - 1;
                continue;
            }
            if (blocks && c == '+') {
                parts.push_back(cur);
                cur.clear();
                continue;
            }
            if (!blocks && (c == '+' || c == '-') && !trim(cur).empty()) {
                parts.push_back(cur);
                cur.clear();
            }
        }
        cur += c;
    }
    if (depth != 0) throw Error(ErrorCode::SyntaxError, "unbalanced brackets in functional");
    parts.push_back(cur);
    return parts;
}

/// One dual term "[+|-][c[/c]][*](monomial)*".
void parse_dual_term(std::string_view text, std::size_t block, const MultiDegree& d, int k,
                     HFunctional<Rational>& h) {
    const FieldSpec q = FieldSpec::rationals();
    std::string_view s = trim(text);
    Rational coeff(1);
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        if (s.front() == '-') coeff = -coeff;
        s = trim(s.substr(1));
    }
    std::size_t i = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i > 0) {
        BigInt num(std::string(s.substr(0, i)));
        BigInt den(1);
        if (i < s.size() && s[i] == '/') {
            const std::size_t start = ++i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (i == start) throw Error(ErrorCode::SyntaxError, "missing denominator in '" + std::string(text) + "'");
            den = BigInt(std::string(s.substr(start, i - start)));
        }
        coeff *= Rational(num, den);
        s = trim(s.substr(i));
        if (!s.empty() && s.front() == '*') s = trim(s.substr(1));
    }
    if (s.size() < 3 || s.front() != '(' || s.back() != '*')
        throw Error(ErrorCode::SyntaxError, "expected a dual term like (z0^2)* , got '" + std::string(text) + "'");
    s = trim(s.substr(0, s.size() - 1));
    if (s.back() != ')') throw Error(ErrorCode::SyntaxError, "expected ')' before '*' in '" + std::string(text) + "'");
    const auto inner = s.substr(1, s.size() - 2);
    const Polynomial<Rational> p = parse_polynomial<Rational>(inner, static_cast<std::size_t>(k + 1), q);
    if (p.term_count() != 1)
        throw Error(ErrorCode::BasisMismatch, "dual term must name a single monomial: '" + std::string(inner) + "'");
    const auto& [mono, c] = *p.terms().begin();
    if (mono.degree() != static_cast<std::uint32_t>(d[block]))
        throw Error(ErrorCode::BasisMismatch, "monomial " + std::string(inner) + " is not of degree " +
                                                  std::to_string(d[block]) + " in block " + std::to_string(block + 1));
    Rational& slot = h.coefficients[{block, mono}];
    slot += coeff * c;
    if (slot.is_zero()) h.coefficients.erase({block, mono});
}

std::size_t display_width(std::string_view s) {
    std::size_t w = 0;
    for (unsigned char c : s)
        if ((c & 0xC0) != 0x80) ++w;
    return w;
}

std::string pad(const std::string& s, std::size_t width) {
    return s + std::string(width > display_width(s) ? width - display_width(s) : 0, ' ');
}

} // namespace

HFunctional<Rational> parse_h_functional(std::string_view text, const MultiDegree& d, int k) {
    HFunctional<Rational> h;
    h.degrees = d;
    h.k = k;
    const std::vector<std::string> blocks = split_top_level(text, true);
    if (blocks.size() != d.size())
        throw Error(ErrorCode::BasisMismatch, "functional has " + std::to_string(blocks.size()) + " blocks, expected " +
                                                  std::to_string(d.size()));
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        std::string_view item = trim(blocks[b]);
        if (item == "0") continue;
        if (item.empty()) throw Error(ErrorCode::SyntaxError, "empty block " + std::to_string(b + 1));
        if (item.front() == '[') {
            if (item.back() != ']') throw Error(ErrorCode::SyntaxError, "unterminated '[' in block " + std::to_string(b + 1));
            for (const std::string& term : split_top_level(item.substr(1, item.size() - 2), false))
                parse_dual_term(term, b, d, k, h);
        } else {
            parse_dual_term(item, b, d, k, h);
        }
    }
    return h;
}

std::string format_block_monomial(const BlockMonomial& bm, std::size_t blocks) {
    std::string out;
    const auto names = default_variable_names(bm.monomial.size());
    for (std::size_t b = 0; b < blocks; ++b) {
        if (b) out += " " + std::string(kDirectSum) + " ";
        out += b == bm.block ? detail::format_monomial(bm.monomial, names) : "0";
    }
    return out;
}

std::string format_m_mu(const MMuMatrix& m) {
    const std::size_t s = m.degrees.size();
    std::vector<std::vector<std::string>> cells(m.rows() + 1, std::vector<std::string>(m.cols() + 1));
    for (std::size_t c = 0; c < m.cols(); ++c) cells[0][c + 1] = format_block_monomial(m.columns[c], s);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        cells[i + 1][0] = "z" + std::to_string(i);
        for (std::size_t c = 0; c < m.cols(); ++c) cells[i + 1][c + 1] = format_block_monomial(m.entries[i][c], s);
    }
    std::vector<std::size_t> widths(m.cols() + 1, 0);
    for (const auto& row : cells)
        for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], display_width(row[c]));

    std::string out;
    for (const auto& row : cells) {
        std::string line = pad(row[0], widths[0]);
        for (std::size_t c = 1; c < row.size(); ++c) {
            // A vertical rule wherever a new block of columns starts.
            const bool new_block = c == 1 || m.columns[c - 1].block != m.columns[c - 2].block;
            line += new_block ? " | " : "  ";
            line += pad(row[c], widths[c]);
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
    }
    return out;
}

} // namespace fano
