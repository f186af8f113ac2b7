#ifndef FANO_TESTS_SUPPORT_HPP
#define FANO_TESTS_SUPPORT_HPP

#include <fano/experiment.hpp>

namespace fano::testing {

inline Fp random_fp(TrialRng& rng, const FieldSpec& f) {
    return Fp(static_cast<std::int64_t>(rng.below(f.modulus())), f.modulus());
}

inline Rational random_rational(TrialRng& rng) {
    const auto num = static_cast<long>(rng.below(41)) - 20;
    const auto den = static_cast<long>(rng.below(9)) + 1;
    return Rational(BigInt(num), BigInt(den));
}

template <FieldScalar S>
S random_scalar(TrialRng& rng, const FieldSpec& f) {
    if constexpr (std::is_same_v<S, Fp>)
        return random_fp(rng, f);
    else
        return random_rational(rng);
}

/// Sparse random polynomial with up to `terms` terms of degree <= max_degree.
template <FieldScalar S>
Polynomial<S> random_polynomial(TrialRng& rng, std::size_t nvars, std::uint32_t max_degree, int terms,
                                const FieldSpec& f) {
    Polynomial<S> p(nvars, f);
    for (int t = 0; t < terms; ++t) {
        Monomial m(nvars);
        for (std::size_t v = 0; v < nvars; ++v) m[v] = static_cast<std::uint32_t>(rng.below(max_degree + 1));
        p.add_term(m, random_scalar<S>(rng, f));
    }
    return p;
}

/// Dense random form of exactly this degree (zero only with negligible chance).
template <FieldScalar S>
Polynomial<S> random_form(TrialRng& rng, std::size_t nvars, std::uint32_t degree, const FieldSpec& f) {
    Polynomial<S> p(nvars, f);
    for (const Monomial& m : monomial_basis(nvars, degree)) p.add_term(m, random_scalar<S>(rng, f));
    return p;
}

template <FieldScalar S>
Matrix<S> random_matrix(TrialRng& rng, Eigen::Index rows, Eigen::Index cols, const FieldSpec& f) {
    Matrix<S> m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r)
        for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = random_scalar<S>(rng, f);
    return m;
}

/// Substitutes z -> A z into every form, A invertible.
template <FieldScalar S>
FormTuple<S> change_coordinates(const FormTuple<S>& forms, const Matrix<S>& a) {
    const std::size_t nvars = forms.nvars();
    std::vector<Polynomial<S>> images;
    for (std::size_t i = 0; i < nvars; ++i) {
        Polynomial<S> img(nvars, forms.field());
        for (std::size_t j = 0; j < nvars; ++j)
            img.add_term(Monomial::unit(nvars, j), a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
        images.push_back(std::move(img));
    }
    std::vector<Polynomial<S>> out;
    for (const auto& f : forms.components()) out.push_back(compose(f, images));
    return FormTuple<S>(std::move(out), DegreePolicy::AllowLinear);
}

template <FieldScalar S>
struct IncidencePair {
    FormTuple<S> forms;
    PlaneCoords<S> plane;
};

/// A random plane in a random chart together with forms vanishing on it:
/// f_i = sum_j w_j g_ij where w_j = z_{c_j} - sum_a x_{a,j} z_{p_a} cut out the
/// plane and the g_ij are random forms of degree d_i - 1.
template <FieldScalar S>
IncidencePair<S> random_incidence_pair(int n, int k, const MultiDegree& d, const FieldSpec& f, TrialRng& rng) {
    const auto pivot_sets = pivot_sets_colex(k, n);
    const Chart chart(k, n, pivot_sets[rng.below(pivot_sets.size())]);
    const PlaneCoords<S> plane(chart, random_matrix<S>(rng, chart.rows(), chart.cols(), f), f);
    const std::size_t nvars = static_cast<std::size_t>(n + 1);
    std::vector<Polynomial<S>> ideal;
    for (int j = 0; j < chart.cols(); ++j) {
        Polynomial<S> w = Polynomial<S>::variable(nvars, static_cast<std::size_t>(chart.free_columns()[static_cast<std::size_t>(j)]), f);
        for (int a = 0; a < chart.rows(); ++a)
            w.add_term(Monomial::unit(nvars, static_cast<std::size_t>(chart.pivots()[static_cast<std::size_t>(a)])),
                       -plane.entries(a, j));
        ideal.push_back(std::move(w));
    }
    std::vector<Polynomial<S>> forms;
    for (int di : d) {
        Polynomial<S> fi(nvars, f);
        while (fi.is_zero()) {
            for (const auto& w : ideal) fi += w * random_form<S>(rng, nvars, static_cast<std::uint32_t>(di - 1), f);
        }
        forms.push_back(std::move(fi));
    }
    return {FormTuple<S>(std::move(forms)), plane};
}

} // namespace fano::testing

#endif // FANO_TESTS_SUPPORT_HPP
