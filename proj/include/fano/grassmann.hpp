#ifndef FANO_GRASSMANN_HPP
#define FANO_GRASSMANN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fano/field.hpp"
#include "fano/linalg.hpp"

namespace fano {

/// Affine patch of Gr(k, n): planes spanned by the rows of a (k+1) x (n+1)
/// matrix whose columns at `pivots` form the identity.
class Chart {
public:
    Chart(int k, int n, std::vector<int> pivots);

    /// The patch U0 around Span(e0, ..., ek).
    static Chart standard(int k, int n);

    int k() const noexcept { return k_; }
    int n() const noexcept { return n_; }
    const std::vector<int>& pivots() const noexcept { return pivots_; }
    /// Columns not in `pivots`, increasing; entry column j of a plane sits here.
    const std::vector<int>& free_columns() const noexcept { return free_columns_; }
    int rows() const noexcept { return k_ + 1; }
    int cols() const noexcept { return n_ - k_; }
    /// Number of chart coordinates, (k+1)(n-k).
    int dimension() const noexcept { return rows() * cols(); }

    /// Name of coordinate (a, j), e.g. "x_{0,2}" (column index is the ambient one).
    std::string variable_name(int a, int j) const;
    std::vector<std::string> variable_names() const;

    friend bool operator==(const Chart& a, const Chart& b) {
        return a.k_ == b.k_ && a.n_ == b.n_ && a.pivots_ == b.pivots_;
    }

private:
    int k_;
    int n_;
    std::vector<int> pivots_;
    std::vector<int> free_columns_;
};

/// A point of a chart: entry (a, j) is the coordinate x_{a, free_columns[j]}.
template <FieldScalar S>
struct PlaneCoords {
    Chart chart;
    Matrix<S> entries;
    FieldSpec field;

    PlaneCoords(Chart c, Matrix<S> e, FieldSpec f) : chart(std::move(c)), entries(std::move(e)), field(f) {
        if (entries.rows() != chart.rows() || entries.cols() != chart.cols())
            throw Error(ErrorCode::ArityMismatch, "plane entries must be (k+1) x (n-k)");
    }

    /// The chart's center: every entry zero.
    static PlaneCoords origin(const Chart& c, FieldSpec f) {
        Matrix<S> e(c.rows(), c.cols());
        e.fill(S::zero(f));
        return PlaneCoords(c, std::move(e), f);
    }

    int k() const noexcept { return chart.k(); }
    int n() const noexcept { return chart.n(); }

    /// Chart coordinates flattened row-major, matching Chart::variable_names().
    std::vector<S> coordinates() const {
        std::vector<S> out;
        out.reserve(static_cast<std::size_t>(entries.size()));
        for (Eigen::Index a = 0; a < entries.rows(); ++a)
            for (Eigen::Index j = 0; j < entries.cols(); ++j) out.push_back(entries(a, j));
        return out;
    }
};

/// (k+1) x (n+1) matrix with the identity in pivot columns whose rows span the plane.
template <FieldScalar S>
Matrix<S> chart_matrix(const PlaneCoords<S>& p) {
    const Chart& c = p.chart;
    Matrix<S> m(c.rows(), c.n() + 1);
    m.fill(S::zero(p.field));
    for (int a = 0; a < c.rows(); ++a) {
        m(a, c.pivots()[static_cast<std::size_t>(a)]) = S::one(p.field);
        for (int j = 0; j < c.cols(); ++j) m(a, c.free_columns()[static_cast<std::size_t>(j)]) = p.entries(a, j);
    }
    return m;
}

/// Point of P^n; `normalized()` scales the first nonzero coordinate to 1.
template <FieldScalar S>
struct ProjPoint {
    Vector<S> coords;
    FieldSpec field;

    ProjPoint(Vector<S> c, FieldSpec f) : coords(std::move(c)), field(f) {
        bool any = false;
        for (Eigen::Index i = 0; i < coords.size(); ++i) any = any || !coords(i).is_zero();
        if (!any) throw Error(ErrorCode::InvalidRange, "projective point needs a nonzero coordinate");
    }

    ProjPoint normalized() const {
        Eigen::Index lead = 0;
        while (coords(lead).is_zero()) ++lead;
        const S inv = coords(lead).inverse();
        Vector<S> c = coords;
        for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = c(i) * inv;
        return ProjPoint(std::move(c), field);
    }
};

/// True iff q lies on the plane: stacking q under the chart matrix keeps rank k+1.
template <FieldScalar S>
bool plane_contains_point(const PlaneCoords<S>& p, const ProjPoint<S>& q) {
    require_same_field(p.field, q.field);
    if (q.coords.size() != p.n() + 1) throw Error(ErrorCode::ArityMismatch, "point and plane live in different P^n");
    Matrix<S> stacked(p.chart.rows() + 1, p.n() + 1);
    stacked.topRows(p.chart.rows()) = chart_matrix(p);
    stacked.bottomRows(1) = q.coords.transpose();
    return rank(stacked) == p.chart.rows();
}

/// Number of k-planes in P^n(F_q): the Gaussian binomial [n+1, k+1]_q.
BigInt gaussian_count(int k, int n, std::uint64_t q);

/// All (k+1)-subsets of {0..n} in colex order.
std::vector<std::vector<int>> pivot_sets_colex(int k, int n);

/// Reduced row-echelon planes with a fixed pivot set. Row a is zero left of
/// its pivot and at other pivot columns; the remaining `free_positions` range
/// over F_q. Planes are numbered in odometer order, last free position fastest.
struct PivotBlock {
    Chart chart;
    std::vector<std::pair<int, int>> free_positions; // (row a, entry column j), row-major
    std::uint64_t plane_count = 0;                   // q^|free_positions|
};

std::vector<PivotBlock> pivot_blocks(int k, int n, std::uint32_t q);

/// Plane number `index` of `block` over F_q.
PlaneCoords<Fp> plane_at(const PivotBlock& block, std::uint64_t index, const FieldSpec& field);

/// Visits every k-plane of P^n(F_q) exactly once: pivot sets in colex order,
/// entries in odometer order.
template <class Visitor>
void for_each_plane(int k, int n, std::uint32_t q, Visitor&& visit) {
    const FieldSpec field = FieldSpec::prime(q);
    for (const PivotBlock& block : pivot_blocks(k, n, q))
        for (std::uint64_t i = 0; i < block.plane_count; ++i) visit(plane_at(block, i, field));
}

std::vector<PlaneCoords<Fp>> enumerate_planes(int k, int n, std::uint32_t q);

} // namespace fano

#endif // FANO_GRASSMANN_HPP
