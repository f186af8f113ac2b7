#ifndef FANO_LINALG_HPP
#define FANO_LINALG_HPP

#include <utility>

#include "fano/field.hpp"

namespace fano {

/// Reduces `m` in place to reduced row-echelon form over its exact field and
/// returns the rank. Eigen's own decompositions assume an ordered, inexact
/// scalar, so elimination here is plain Gauss-Jordan with nonzero pivoting.
template <class S>
Eigen::Index row_reduce(Matrix<S>& m) {
    const Eigen::Index rows = m.rows();
    const Eigen::Index cols = m.cols();
    Eigen::Index rank = 0;
    for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
        Eigen::Index pivot = -1;
        for (Eigen::Index r = rank; r < rows; ++r) {
            if (!m(r, c).is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != rank) m.row(pivot).swap(m.row(rank));
        const S inv = m(rank, c).inverse();
        for (Eigen::Index j = c; j < cols; ++j) m(rank, j) = m(rank, j) * inv;
        for (Eigen::Index r = 0; r < rows; ++r) {
            if (r == rank || m(r, c).is_zero()) continue;
            const S factor = m(r, c);
            for (Eigen::Index j = c; j < cols; ++j) m(r, j) = m(r, j) - factor * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

template <class Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
    using S = typename Derived::Scalar;
    Matrix<S> work = m;
    // Eliminate along the shorter dimension.
    if (work.rows() > work.cols()) {
        Matrix<S> t = work.transpose();
        return row_reduce(t);
    }
    return row_reduce(work);
}

} // namespace fano

#endif // FANO_LINALG_HPP
