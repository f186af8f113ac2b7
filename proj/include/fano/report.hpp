#ifndef FANO_REPORT_HPP
#define FANO_REPORT_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "fano/alpha.hpp"
#include "fano/experiment.hpp"

namespace fano {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Integers that fit in 64 bits are JSON numbers, larger ones decimal strings.
Json big_json(const BigInt& v);

inline Json scalar_json(const Fp& x) { return x.value(); }
Json scalar_json(const Rational& x);

/// Accepts a JSON integer or a string such as "-3/4".
template <FieldScalar S>
S scalar_from_json(const Json& j, const FieldSpec& field) {
    if (j.is_number_integer()) return S::from(BigInt(std::to_string(j.get<std::int64_t>())), field);
    if (j.is_string()) {
        const auto p = parse_polynomial<S>(j.get<std::string>(), 0, field);
        if (p.is_zero()) return S::zero(field);
        return p.coefficient(Monomial(std::size_t{0}));
    }
    throw Error(ErrorCode::SyntaxError, "plane entry must be an integer or a rational string");
}

template <class Derived>
Json matrix_json(const Eigen::MatrixBase<Derived>& m) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(scalar_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const MultiDegree& d);
Json to_json(const DimensionReport& r);
Json to_json(const PsiProfile& p);
/// The `predict` report: DimensionReport fields plus psi and codim_bound.
Json predict_json(int n, int k, const MultiDegree& d);

/// {pivots, entries, q}; q is null over Q.
template <FieldScalar S>
Json plane_json(const PlaneCoords<S>& p) {
    Json j;
    j["pivots"] = p.chart.pivots();
    j["entries"] = matrix_json(p.entries);
    j["q"] = p.field.is_prime_field() ? Json(p.field.modulus()) : Json(nullptr);
    return j;
}

/// The field named by a plane's "q" key (absent or null means Q).
FieldSpec plane_field(const Json& j);

template <FieldScalar S>
PlaneCoords<S> plane_from_json(const Json& j, const FieldSpec& field) {
    if (!j.is_object() || !j.contains("pivots") || !j.contains("entries"))
        throw Error(ErrorCode::SyntaxError, "plane needs 'pivots' and 'entries'");
    const auto pivots = j.at("pivots").get<std::vector<int>>();
    const Json& rows = j.at("entries");
    if (pivots.empty() || !rows.is_array() || rows.size() != pivots.size())
        throw Error(ErrorCode::ArityMismatch, "plane needs one entry row per pivot");
    const std::size_t cols = rows.front().size();
    const int k = static_cast<int>(pivots.size()) - 1;
    const Chart chart(k, k + static_cast<int>(cols), pivots);
    Matrix<S> entries(chart.rows(), chart.cols());
    for (std::size_t a = 0; a < rows.size(); ++a) {
        if (!rows[a].is_array() || rows[a].size() != cols)
            throw Error(ErrorCode::ArityMismatch, "plane entry rows must have equal length");
        for (std::size_t c = 0; c < cols; ++c)
            entries(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(c)) = scalar_from_json<S>(rows[a][c], field);
    }
    return PlaneCoords<S>(chart, std::move(entries), field);
}

Json to_json(const TangentReport& t);
Json to_json(const CountReport& r, bool witnesses);
/// One row per (q, chart, count), with a header.
std::string count_csv(const std::vector<CountReport>& reports);

/// Names l0..lk for the plane's own coordinates lambda_0..lambda_k.
std::vector<std::string> lambda_names(int k);

template <FieldScalar S>
Json to_json(const LocalFanoSystem<S>& sys) {
    Json j;
    j["pivots"] = sys.chart.pivots();
    j["variables"] = sys.chart.variable_names();
    j["d"] = to_json(sys.degrees);
    j["equation_count"] = sys.equations.size();
    const auto names = sys.chart.variable_names();
    const auto lambdas = lambda_names(sys.chart.k());
    Json eqs = Json::array();
    for (const auto& eq : sys.equations)
        eqs.push_back({{"form", eq.form},
                       {"lambda", detail::format_monomial(eq.lambda, lambdas)},
                       {"equation", to_string(eq.polynomial, names)}});
    j["equations"] = std::move(eqs);
    return j;
}

template <FieldScalar S>
Json to_json(const AlphaMatrix<S>& a) {
    const auto lambdas = lambda_names(a.rows.empty() ? 0 : static_cast<int>(a.rows.front().lambda.size()) - 1);
    Json rows = Json::array();
    for (const auto& r : a.rows) rows.push_back({{"form", r.form}, {"lambda", detail::format_monomial(r.lambda, lambdas)}});
    Json cols = Json::array();
    for (const auto& c : a.columns) cols.push_back({{"j", c.ambient_column}, {"a", c.lambda_index}});
    const auto r = rank(a.matrix);
    return {{"rows", rows},
            {"columns", cols},
            {"matrix", matrix_json(a.matrix)},
            {"rank", r},
            {"surjective", r == a.matrix.rows()}};
}

Json to_json(const MMuMatrix& m);
Json to_json(const DimensionEstimate& e);
Json to_json(const ScanReport& r);
std::string scan_csv(const ScanReport& r);

/// Rows of a matrix of scalars, comma separated.
template <class Derived>
std::string matrix_csv(const Eigen::MatrixBase<Derived>& m) {
    std::string out;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (c) out += ',';
            out += m(r, c).to_string();
        }
        out += '\n';
    }
    return out;
}

} // namespace fano

#endif // FANO_REPORT_HPP
