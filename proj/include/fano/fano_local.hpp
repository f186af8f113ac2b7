#ifndef FANO_FANO_LOCAL_HPP
#define FANO_FANO_LOCAL_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "fano/forms.hpp"
#include "fano/grassmann.hpp"
#include "fano/linalg.hpp"

namespace fano {

/// f restricted to a numeric plane: f(lambda * chart_matrix), a form in lambda_0..lambda_k.
template <FieldScalar S>
Polynomial<S> restrict_to_plane(const Polynomial<S>& f, const PlaneCoords<S>& p) {
    require_same_field(f.field(), p.field);
    if (f.nvars() != static_cast<std::size_t>(p.n() + 1))
        throw Error(ErrorCode::ArityMismatch, "form and plane live in different P^n");
    const std::size_t lambdas = static_cast<std::size_t>(p.chart.rows());
    const Matrix<S> basis = chart_matrix(p);
    std::vector<Polynomial<S>> images;
    images.reserve(f.nvars());
    for (Eigen::Index c = 0; c < basis.cols(); ++c) {
        Polynomial<S> z(lambdas, p.field);
        for (Eigen::Index a = 0; a < basis.rows(); ++a)
            z.add_term(Monomial::unit(lambdas, static_cast<std::size_t>(a)), basis(a, c));
        images.push_back(std::move(z));
    }
    return compose(f, images);
}

/// Coefficient of one lambda-monomial in a symbolic restriction.
template <FieldScalar S>
struct LambdaCoefficient {
    Monomial lambda;           // exponents of lambda_0..lambda_k
    Polynomial<S> coefficient; // polynomial in the chart coordinates, row-major x_{a,b}
};

/// f(lambda_0, ..., lambda_k, sum_a lambda_a x_{a,b}, ...) over the whole chart,
/// collected by lambda-monomial. Every degree-d lambda-monomial appears, in
/// MonomialOrder, including those with zero coefficient.
template <FieldScalar S>
std::vector<LambdaCoefficient<S>> restrict_symbolic(const Polynomial<S>& f, const Chart& chart) {
    if (f.nvars() != static_cast<std::size_t>(chart.n() + 1))
        throw Error(ErrorCode::ArityMismatch, "form and chart live in different P^n");
    if (!f.is_homogeneous()) throw Error(ErrorCode::NotHomogeneous, to_string(f));
    const std::size_t lambdas = static_cast<std::size_t>(chart.rows());
    const std::size_t coords = static_cast<std::size_t>(chart.dimension());
    const std::size_t total = lambdas + coords;
    const FieldSpec field = f.field();

    std::vector<Polynomial<S>> images(f.nvars(), Polynomial<S>(total, field));
    for (std::size_t a = 0; a < lambdas; ++a)
        images[static_cast<std::size_t>(chart.pivots()[a])] =
            Polynomial<S>::variable(total, a, field);
    for (int j = 0; j < chart.cols(); ++j) {
        Polynomial<S>& z = images[static_cast<std::size_t>(chart.free_columns()[static_cast<std::size_t>(j)])];
        for (int a = 0; a < chart.rows(); ++a) {
            Monomial m(total);
            m[static_cast<std::size_t>(a)] = 1;
            m[lambdas + static_cast<std::size_t>(a * chart.cols() + j)] = 1;
            z.add_term(m, S::one(field));
        }
    }
    const Polynomial<S> expanded = compose(f, images);

    std::vector<LambdaCoefficient<S>> out;
    for (Monomial& lm : monomial_basis(lambdas, f.degree()))
        out.push_back({std::move(lm), Polynomial<S>(coords, field)});
    for (const auto& [m, c] : expanded.terms()) {
        std::vector<std::uint32_t> le(m.exponents().begin(), m.exponents().begin() + static_cast<long>(lambdas));
        std::vector<std::uint32_t> xe(m.exponents().begin() + static_cast<long>(lambdas), m.exponents().end());
        const Monomial lm(std::move(le));
        auto it = std::find_if(out.begin(), out.end(), [&](const auto& e) { return e.lambda == lm; });
        it->coefficient.add_term(Monomial(std::move(xe)), c);
    }
    return out;
}

template <FieldScalar S>
struct LocalEquation {
    std::size_t form;          // index i of f_i
    Monomial lambda;           // which lambda-coefficient of f_i
    Polynomial<S> polynomial;  // in the chart coordinates
};

/// Equations of F_k(V(f)) inside one chart: for each f_i the C(d_i+k, k)
/// lambda-coefficients of its restriction, forms in order.
template <FieldScalar S>
struct LocalFanoSystem {
    Chart chart;
    MultiDegree degrees;
    std::vector<LocalEquation<S>> equations;
};

template <FieldScalar S>
LocalFanoSystem<S> fano_local_system(const FormTuple<S>& forms, const Chart& chart) {
    LocalFanoSystem<S> sys{chart, forms.degrees(), {}};
    for (std::size_t i = 0; i < forms.size(); ++i)
        for (auto& lc : restrict_symbolic(forms[i], chart))
            sys.equations.push_back({i, std::move(lc.lambda), std::move(lc.coefficient)});
    return sys;
}

/// Jacobian of the local system at chart coordinates `point` (row-major x_{a,b}).
template <FieldScalar S>
Matrix<S> jacobian(const LocalFanoSystem<S>& sys, std::span<const S> point, const FieldSpec& field) {
    const std::size_t vars = static_cast<std::size_t>(sys.chart.dimension());
    Matrix<S> jac(static_cast<Eigen::Index>(sys.equations.size()), static_cast<Eigen::Index>(vars));
    for (std::size_t r = 0; r < sys.equations.size(); ++r)
        for (std::size_t v = 0; v < vars; ++v)
            jac(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(v)) =
                sys.equations[r].polynomial.is_zero()
                    ? S::zero(field)
                    : evaluate(differentiate(sys.equations[r].polynomial, v), point);
    return jac;
}

/// True iff the plane lies on V(f): every restriction vanishes identically.
template <FieldScalar S>
bool fano_contains(const FormTuple<S>& forms, const PlaneCoords<S>& p) {
    require_same_field(forms.field(), p.field);
    for (const auto& f : forms.components())
        if (!restrict_to_plane(f, p).is_zero()) return false;
    return true;
}

struct TangentReport {
    long jacobian_rank = 0;
    long tangent_dim = 0;   // (k+1)(n-k) - jacobian_rank
    BigInt expected_dim;    // delta(n, d, k)
    bool smooth = false;    // jacobian_rank == C(d+k, k)
};

template <FieldScalar S>
TangentReport tangent_profile(const LocalFanoSystem<S>& sys, const FormTuple<S>& forms, const PlaneCoords<S>& p) {
    if (!(sys.chart == p.chart)) throw Error(ErrorCode::InvalidRange, "plane is not in the system's chart");
    if (!fano_contains(forms, p)) throw Error(ErrorCode::NotOnFano, "plane is not contained in V(f)");
    const std::vector<S> point = p.coordinates();
    const Matrix<S> jac = jacobian(sys, std::span<const S>(point), p.field);
    TangentReport r;
    r.jacobian_rank = static_cast<long>(rank(jac));
    r.tangent_dim = p.chart.dimension() - r.jacobian_rank;
    r.expected_dim = expected_dimension(p.n(), p.k(), forms.degrees());
    r.smooth = BigInt(r.jacobian_rank) == multideg_binom(forms.degrees().shifted(p.k()), p.k());
    return r;
}

template <FieldScalar S>
TangentReport tangent_profile(const FormTuple<S>& forms, const PlaneCoords<S>& p) {
    if (!fano_contains(forms, p)) throw Error(ErrorCode::NotOnFano, "plane is not contained in V(f)");
    return tangent_profile(fano_local_system(forms, p.chart), forms, p);
}

// ---------------------------------------------------------------------------
// Point counting over F_q

struct ChartCount {
    std::vector<int> pivots;
    std::uint64_t planes = 0;
    std::uint64_t count = 0;
};

struct CountReport {
    std::uint32_t q = 0;
    int n = 0;
    int k = 0;
    BigInt total_planes;
    std::uint64_t fano_points = 0;
    std::vector<ChartCount> per_chart;          // colex pivot order
    std::vector<PlaneCoords<Fp>> witnesses;     // enumeration order
};

/// Local system over F_q specialised to one block of reduced row-echelon
/// planes: coordinates fixed at zero are substituted away, leaving integer
/// coefficient/exponent tables evaluated with 64-bit arithmetic.
class CompiledBlockSystem {
public:
    CompiledBlockSystem(const LocalFanoSystem<Fp>& sys, const PivotBlock& block, std::uint32_t q);

    /// `values[i]` is the entry at block.free_positions[i]. Stops at the
    /// first nonvanishing equation.
    bool vanishes(std::span<const std::uint32_t> values) const;

private:
    struct Term {
        std::uint64_t coefficient;
        std::uint32_t exponent_offset; // into exponents_, one entry per free position
    };
    struct Equation {
        std::uint32_t first_term;
        std::uint32_t term_count;
    };
    std::uint64_t q_;
    std::size_t free_count_;
    std::uint32_t max_degree_ = 0;
    std::vector<Term> terms_;
    std::vector<std::uint8_t> exponents_;
    std::vector<Equation> equations_;
};

/// Exhaustively counts k-planes of P^n(F_q) on V(f), sharded over `threads` workers.
CountReport count_fano_points(const FormTuple<Fp>& forms, int k, bool collect_witnesses, unsigned threads = 1);

struct DimensionEstimate {
    std::vector<std::uint32_t> primes;
    std::vector<std::uint64_t> counts;
    double slope = 0;     // least-squares slope of log(count) against log(q)
    double intercept = 0;
    double residual = 0;  // root-mean-square residual of the fit
};

DimensionEstimate estimate_dimension(std::span<const std::uint32_t> primes, std::span<const std::uint64_t> counts);

/// `family` builds the form tuple over each requested prime field.
DimensionEstimate estimate_dimension(const std::function<FormTuple<Fp>(const FieldSpec&)>& family, int k,
                                     std::span<const std::uint32_t> primes, unsigned threads = 1);

} // namespace fano

#endif // FANO_FANO_LOCAL_HPP
