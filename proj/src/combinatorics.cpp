#include "fano/combinatorics.hpp"

#include <algorithm>
#include <charconv>

namespace fano {

MultiDegree::MultiDegree(std::vector<int> degrees) : degrees_(std::move(degrees)) {
    if (degrees_.empty()) throw Error(ErrorCode::InvalidDegree, "multidegree must be non-empty");
    for (int v : degrees_)
        if (v < 0) throw Error(ErrorCode::NegativeDegree, "degree " + std::to_string(v));
}

MultiDegree MultiDegree::parse(std::string_view csv) {
    std::vector<int> out;
    std::size_t start = 0;
    while (start <= csv.size()) {
        const std::size_t comma = std::min(csv.find(',', start), csv.size());
        std::string_view item = csv.substr(start, comma - start);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        int v = 0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
            throw Error(ErrorCode::SyntaxError, "bad degree list '" + std::string(csv) + "'");
        out.push_back(v);
        start = comma + 1;
    }
    return MultiDegree(std::move(out));
}

MultiDegree MultiDegree::shifted(int m) const {
    std::vector<int> out(degrees_);
    for (int& v : out) {
        v += m;
        if (v < 0) throw Error(ErrorCode::NegativeDegree, "shift by " + std::to_string(m) + " of " + to_string());
    }
    return MultiDegree(std::move(out));
}

void MultiDegree::require_at_least_two() const {
    for (int v : degrees_)
        if (v < 2) throw Error(ErrorCode::InvalidDegree, "every degree must be >= 2, got " + to_string());
}

std::string MultiDegree::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < degrees_.size(); ++i) s += (i ? "," : "") + std::to_string(degrees_[i]);
    return s + ")";
}

BigInt binom(long a, long b) {
    if (b < 0 || a < b) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

BigInt multideg_binom(const MultiDegree& d, long m) {
    BigInt total = 0;
    for (int di : d) total += binom(di, m);
    return total;
}

namespace {

/// C(d + shift, m) = sum_i C(d_i + shift, m), without building the shifted tuple.
BigInt shifted_binom(const MultiDegree& d, long shift, long m) {
    BigInt total = 0;
    for (int di : d) total += binom(di + shift, m);
    return total;
}

void require_range(int n, int k) {
    if (k < 0 || k >= n)
        throw Error(ErrorCode::InvalidRange, "need 0 <= k < n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
}

} // namespace

BigInt expected_dimension(int n, int k, const MultiDegree& d) {
    return BigInt(k + 1) * (n - k) - shifted_binom(d, k, k);
}

BigInt delta_minus(int n, int k, const MultiDegree& d) {
    const BigInt delta = expected_dimension(n, k, d);
    const BigInt other = BigInt(n - 2 * k - static_cast<long>(d.size()));
    return delta < other ? delta : other;
}

std::string_view to_string(Regime r) {
    switch (r) {
    case Regime::EmptyGeneric: return "EmptyGeneric";
    case Regime::NonemptySmooth: return "NonemptySmooth";
    case Regime::NonemptySmoothConnected: return "NonemptySmoothConnected";
    }
    return "";
}

DimensionReport dimension_report(int n, int k, const MultiDegree& d) {
    require_range(n, k);
    d.require_at_least_two();
    DimensionReport r;
    r.n = n;
    r.k = k;
    r.d = d;
    r.delta = expected_dimension(n, k, d);
    r.delta_minus = delta_minus(n, k, d);
    r.sym_dim = shifted_binom(d, n, n) - 1;
    r.num_local_equations = shifted_binom(d, k, k);
    r.incidence_dim = BigInt(k + 1) * (n - k) + r.sym_dim - r.num_local_equations;
    const int sign = sgn(r.delta_minus);
    r.regime = sign < 0 ? Regime::EmptyGeneric : sign == 0 ? Regime::NonemptySmooth : Regime::NonemptySmoothConnected;
    return r;
}

BigInt psi(int n, int k, const MultiDegree& d, long t) {
    return BigInt(t) * (n - 2L * k + t - 1) - shifted_binom(d, t - 1, t - 1);
}

PsiProfile psi_profile(int n, int k, const MultiDegree& d, int t_max) {
    require_range(n, k);
    d.require_at_least_two();
    if (t_max < k + 1)
        throw Error(ErrorCode::InvalidRange, "t_max must be at least k+1 = " + std::to_string(k + 1));
    PsiProfile p;
    p.n = n;
    p.k = k;
    p.d = d;
    for (int t = 1; t <= t_max; ++t) p.values.push_back(psi(n, k, d, t));
    for (std::size_t i = 0; i + 1 < p.values.size(); ++i) p.first_diff.push_back(p.values[i + 1] - p.values[i]);
    for (std::size_t i = 0; i + 1 < p.first_diff.size(); ++i)
        p.second_diff.push_back(p.first_diff[i + 1] - p.first_diff[i]);
    p.min_over_range = *std::min_element(p.values.begin(), p.values.begin() + (k + 1));
    const BigInt& first = p.values.front();
    const BigInt& last = p.values[static_cast<std::size_t>(k)];
    p.codim_bound = (first < last ? first : last) + 1;
    return p;
}

MinorSize minor_size(const MultiDegree& d, int k, int t) {
    if (k < 0 || t < 1 || t > k + 1)
        throw Error(ErrorCode::InvalidRange, "need 1 <= t <= k+1, got t=" + std::to_string(t));
    MinorSize m;
    m.closed_form = shifted_binom(d, k, k) - shifted_binom(d, t - 1, t - 1);
    m.direct_sum = 0;
    for (int j = 0; j <= k - t; ++j) m.direct_sum += shifted_binom(d, k - j - 1, k - j);
    return m;
}

} // namespace fano
