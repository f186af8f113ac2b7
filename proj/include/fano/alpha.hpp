#ifndef FANO_ALPHA_HPP
#define FANO_ALPHA_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fano/fano_local.hpp"

namespace fano {

// ---------------------------------------------------------------------------
// The multiplication map alpha_f : Gamma(1)^{n-k} -> Gamma(d)

struct AlphaRow {
    std::size_t form; // block i
    Monomial lambda;  // basis monomial of degree d_i in lambda_0..lambda_k
};

struct AlphaColumn {
    int ambient_column; // j, a free column of the chart
    int lambda_index;   // a, with l_j = lambda_a
};

/// Rows: reverse-lex basis of Gamma(d_1), then Gamma(d_2), ... Columns:
/// grouped by ambient column j (increasing), then by a = 0..k. Column (j, a)
/// holds lambda_a * (df_i/dz_j restricted to the plane) in block i.
template <FieldScalar S>
struct AlphaMatrix {
    Matrix<S> matrix;
    std::vector<AlphaRow> rows;
    std::vector<AlphaColumn> columns;
};

template <FieldScalar S>
AlphaMatrix<S> alpha_matrix(const FormTuple<S>& forms, const PlaneCoords<S>& p) {
    if (!fano_contains(forms, p)) throw Error(ErrorCode::NotOnFano, "plane is not contained in V(f)");
    const Chart& chart = p.chart;
    const std::size_t lambdas = static_cast<std::size_t>(chart.rows());

    AlphaMatrix<S> out;
    std::vector<std::map<Monomial, std::size_t, MonomialOrder>> row_index(forms.size());
    for (std::size_t i = 0; i < forms.size(); ++i) {
        for (Monomial& m : monomial_basis(lambdas, static_cast<std::uint32_t>(forms.degrees()[i]))) {
            row_index[i].emplace(m, out.rows.size());
            out.rows.push_back({i, std::move(m)});
        }
    }
    for (int col : chart.free_columns())
        for (int a = 0; a < chart.rows(); ++a) out.columns.push_back({col, a});

    out.matrix.resize(static_cast<Eigen::Index>(out.rows.size()), static_cast<Eigen::Index>(out.columns.size()));
    out.matrix.fill(S::zero(p.field));
    for (std::size_t i = 0; i < forms.size(); ++i) {
        for (std::size_t jj = 0; jj < chart.free_columns().size(); ++jj) {
            const int j = chart.free_columns()[jj];
            const Polynomial<S> partial = restrict_to_plane(differentiate(forms[i], static_cast<std::size_t>(j)), p);
            for (std::size_t a = 0; a < lambdas; ++a) {
                const auto c = static_cast<Eigen::Index>(jj * lambdas + a);
                for (const auto& [m, coeff] : partial.terms()) {
                    const Monomial shifted = m * Monomial::unit(lambdas, a);
                    const auto r = static_cast<Eigen::Index>(row_index[i].at(shifted));
                    out.matrix(r, c) = out.matrix(r, c) + coeff;
                }
            }
        }
    }
    return out;
}

/// False exactly when (f, plane) lies in the non-smooth locus of the projection.
template <FieldScalar S>
bool alpha_surjective(const FormTuple<S>& forms, const PlaneCoords<S>& p) {
    const AlphaMatrix<S> alpha = alpha_matrix(forms, p);
    return rank(alpha.matrix) == alpha.matrix.rows();
}

// ---------------------------------------------------------------------------
// The multiplication Gamma(1) x Gamma(d - 1) -> Gamma(d) as a symbolic matrix

/// A basis monomial of Gamma(d) = Gamma(d_1) + ... + Gamma(d_s): one block, one monomial.
struct BlockMonomial {
    std::size_t block;
    Monomial monomial;
    friend bool operator==(const BlockMonomial&, const BlockMonomial&) = default;
};

/// Blocks in order, reverse-lex inside each block.
struct BlockOrder {
    bool operator()(const BlockMonomial& a, const BlockMonomial& b) const {
        if (a.block != b.block) return a.block < b.block;
        return MonomialOrder{}(a.monomial, b.monomial);
    }
};

/// Basis of Gamma(d) in lambda_0..lambda_k (printed z0..zk), in BlockOrder.
std::vector<BlockMonomial> block_basis(const MultiDegree& d, int k);

/// Row i (for z_i), column J (basis of Gamma(d - 1)): the monomial z^{J + e_i} in J's block.
struct MMuMatrix {
    int k = 0;
    MultiDegree degrees;
    std::vector<BlockMonomial> columns;
    std::vector<std::vector<BlockMonomial>> entries;

    std::size_t rows() const { return entries.size(); }
    std::size_t cols() const { return columns.size(); }
};

MMuMatrix m_mu(const MultiDegree& d, int k);

/// Sparse dual functional h on Gamma(d).
template <FieldScalar S>
struct HFunctional {
    MultiDegree degrees;
    int k = 0;
    std::map<BlockMonomial, S, BlockOrder> coefficients;
};

/// Scalar matrix h(M(mu)); its rank is the codimension of A_[h] in Gamma(d - 1).
template <FieldScalar S>
Matrix<S> apply_h(const MMuMatrix& m, const HFunctional<S>& h, const FieldSpec& field) {
    if (!(h.degrees == m.degrees) || h.k != m.k)
        throw Error(ErrorCode::BasisMismatch, "functional and matrix use different Gamma(d) bases");
    const auto vars = static_cast<std::size_t>(m.k + 1);
    for (const auto& [bm, c] : h.coefficients) {
        if (bm.block >= m.degrees.size() || bm.monomial.size() != vars ||
            bm.monomial.degree() != static_cast<std::uint32_t>(m.degrees[bm.block]))
            throw Error(ErrorCode::BasisMismatch, "functional term outside the basis of Gamma(d)");
    }
    Matrix<S> out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            auto it = h.coefficients.find(m.entries[i][c]);
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) =
                it == h.coefficients.end() ? S::zero(field) : it->second;
        }
    }
    return out;
}

/// Reads a functional such as "(z0^2)* + (z0^2)*" or "[(z0*z1)* - 2(z1^2)*] + 0".
/// Top-level '+' (or '⊕') separates the s blocks; inside a block, a single
/// dual term "c(m)*" or a bracketed sum of them, or "0".
HFunctional<Rational> parse_h_functional(std::string_view text, const MultiDegree& d, int k);

/// "z0^2 ⊕ 0", "0 ⊕ z0*z1", ...
std::string format_block_monomial(const BlockMonomial& bm, std::size_t blocks);

/// Block-annotated table: row labels z_i, column labels from the Gamma(d - 1) basis.
std::string format_m_mu(const MMuMatrix& m);

} // namespace fano

#endif // FANO_ALPHA_HPP
