#include "fano/report.hpp"

#include <limits>

namespace fano {

Json big_json(const BigInt& v) {
    if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

Json scalar_json(const Rational& x) {
    if (x.is_integer() && x.numerator().fits_slong_p()) return static_cast<std::int64_t>(x.numerator().get_si());
    return x.to_string();
}

Json to_json(const MultiDegree& d) { return d.values(); }

Json to_json(const DimensionReport& r) {
    return {{"n", r.n},
            {"k", r.k},
            {"d", to_json(r.d)},
            {"delta", big_json(r.delta)},
            {"delta_minus", big_json(r.delta_minus)},
            {"sym_dim", big_json(r.sym_dim)},
            {"incidence_dim", big_json(r.incidence_dim)},
            {"num_local_equations", big_json(r.num_local_equations)},
            {"regime", std::string(to_string(r.regime))}};
}

Json to_json(const PsiProfile& p) {
    auto list = [](const std::vector<BigInt>& v) {
        Json a = Json::array();
        for (const BigInt& x : v) a.push_back(big_json(x));
        return a;
    };
    return {{"n", p.n},
            {"k", p.k},
            {"d", to_json(p.d)},
            {"psi", list(p.values)},
            {"first_diff", list(p.first_diff)},
            {"second_diff", list(p.second_diff)},
            {"min_over_range", big_json(p.min_over_range)},
            {"codim_bound", big_json(p.codim_bound)}};
}

Json predict_json(int n, int k, const MultiDegree& d) {
    Json j = to_json(dimension_report(n, k, d));
    const PsiProfile p = psi_profile(n, k, d, k + 1);
    Json values = Json::array();
    for (const BigInt& v : p.values) values.push_back(big_json(v));
    j["psi"] = std::move(values);
    j["codim_bound"] = big_json(p.codim_bound);
    j["schema"] = kSchemaVersion;
    return j;
}

FieldSpec plane_field(const Json& j) {
    if (!j.is_object() || !j.contains("q") || j.at("q").is_null()) return FieldSpec::rationals();
    return FieldSpec::prime(j.at("q").get<std::uint64_t>());
}

Json to_json(const TangentReport& t) {
    return {{"jacobian_rank", t.jacobian_rank},
            {"tangent_dim", t.tangent_dim},
            {"expected_dim", big_json(t.expected_dim)},
            {"smooth", t.smooth}};
}

Json to_json(const CountReport& r, bool witnesses) {
    Json charts = Json::array();
    for (const ChartCount& c : r.per_chart) charts.push_back({{"pivots", c.pivots}, {"planes", c.planes}, {"count", c.count}});
    Json j = {{"q", r.q},
              {"n", r.n},
              {"k", r.k},
              {"total_planes", big_json(r.total_planes)},
              {"fano_points", r.fano_points},
              {"per_chart", std::move(charts)}};
    if (witnesses) {
        Json w = Json::array();
        for (const auto& p : r.witnesses) w.push_back(plane_json(p));
        j["witnesses"] = std::move(w);
    }
    return j;
}

namespace {

std::string join(const std::vector<int>& v, char sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

} // namespace

std::string count_csv(const std::vector<CountReport>& reports) {
    std::string out = "q,chart,planes,count\n";
    for (const CountReport& r : reports)
        for (const ChartCount& c : r.per_chart)
            out += std::to_string(r.q) + "," + join(c.pivots, ' ') + "," + std::to_string(c.planes) + "," +
                   std::to_string(c.count) + "\n";
    return out;
}

std::vector<std::string> lambda_names(int k) {
    std::vector<std::string> names;
    for (int a = 0; a <= k; ++a) names.push_back("l" + std::to_string(a));
    return names;
}

Json to_json(const MMuMatrix& m) {
    const std::size_t s = m.degrees.size();
    Json cols = Json::array();
    for (const BlockMonomial& c : m.columns) cols.push_back(format_block_monomial(c, s));
    Json rows = Json::array();
    Json entries = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        rows.push_back("z" + std::to_string(i));
        Json row = Json::array();
        for (const BlockMonomial& e : m.entries[i]) row.push_back(format_block_monomial(e, s));
        entries.push_back(std::move(row));
    }
    return {{"d", to_json(m.degrees)},
            {"k", m.k},
            {"rows", std::move(rows)},
            {"columns", std::move(cols)},
            {"entries", std::move(entries)},
            {"display", format_m_mu(m)}};
}

Json to_json(const DimensionEstimate& e) {
    return {{"primes", e.primes},
            {"counts", e.counts},
            {"slope", e.slope},
            {"intercept", e.intercept},
            {"residual", e.residual}};
}

Json to_json(const ScanReport& r) {
    Json hist = Json::array();
    for (const auto& [dim, points] : r.tangent_histogram) hist.push_back({{"tangent_dim", dim}, {"points", points}});
    return {{"n", r.config.n},
            {"k", r.config.k},
            {"d", to_json(r.config.d)},
            {"q", r.config.q},
            {"trials", r.config.trials},
            {"seed", r.config.seed},
            {"expected_dim", big_json(r.expected_dim)},
            {"counts", r.counts},
            {"fraction_empty", r.fraction_empty},
            {"mean_count", r.mean_count},
            {"tangent_histogram", std::move(hist)},
            {"found_points", r.found_points},
            {"smooth_points", r.smooth_points},
            {"fraction_smooth", r.fraction_smooth}};
}

std::string scan_csv(const ScanReport& r) {
    std::string out = "trial,count\n";
    for (std::size_t t = 0; t < r.counts.size(); ++t) out += std::to_string(t) + "," + std::to_string(r.counts[t]) + "\n";
    return out;
}

} // namespace fano
