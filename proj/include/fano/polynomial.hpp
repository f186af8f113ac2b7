#ifndef FANO_POLYNOMIAL_HPP
#define FANO_POLYNOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "fano/field.hpp"

namespace fano {

/// Exponent vector of a monomial in a fixed number of variables.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}
    Monomial(std::initializer_list<std::uint32_t> exps) : exps_(exps) {}

    static Monomial unit(std::size_t nvars, std::size_t i) {
        Monomial m(nvars);
        m.exps_[i] = 1;
        return m;
    }

    std::size_t size() const noexcept { return exps_.size(); }
    std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
    std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
    const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }

    std::uint32_t degree() const { return std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0}); }

    Monomial& operator*=(const Monomial& o) {
        for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] += o.exps_[i];
        return *this;
    }
    friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<std::uint32_t> exps_;
};

/// Graded reverse-lexicographic order: lower total degree first; within a
/// degree, compare exponents from the last variable backwards and put the
/// smaller exponent first. For degree 2 in z0..z3 this yields
/// z0^2, z0z1, z1^2, z0z2, z1z2, z2^2, z0z3, z1z3, z2z3, z3^2.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const auto da = a.degree();
        const auto db = b.degree();
        if (da != db) return da < db;
        for (std::size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] < b[i];
        }
        return false;
    }
};

/// All monomials of total degree `degree` in `nvars` variables, in MonomialOrder.
std::vector<Monomial> monomial_basis(std::size_t nvars, std::uint32_t degree);

/// Variable names z0..z{n-1}.
std::vector<std::string> default_variable_names(std::size_t nvars);

/// Sparse multivariate polynomial with exact coefficients. Zero coefficients
/// are never stored and terms iterate in MonomialOrder.
template <FieldScalar S>
class Polynomial {
public:
    using Scalar = S;
    using TermMap = std::map<Monomial, S, MonomialOrder>;

    Polynomial(std::size_t nvars, FieldSpec field) : field_(field), nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const S& c, FieldSpec field) {
        Polynomial p(nvars, field);
        p.add_term(Monomial(nvars), c);
        return p;
    }
    static Polynomial variable(std::size_t nvars, std::size_t i, FieldSpec field) {
        if (i >= nvars) throw Error(ErrorCode::VariableOutOfRange, "z" + std::to_string(i));
        Polynomial p(nvars, field);
        p.add_term(Monomial::unit(nvars, i), S::one(field));
        return p;
    }
    static Polynomial monomial(const Monomial& m, const S& c, FieldSpec field) {
        Polynomial p(m.size(), field);
        p.add_term(m, c);
        return p;
    }

    const FieldSpec& field() const noexcept { return field_; }
    std::size_t nvars() const noexcept { return nvars_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    S coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? S::zero(field_) : it->second;
    }

    /// Highest total degree among terms; 0 for the zero polynomial.
    std::uint32_t degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }

    /// The zero polynomial counts as homogeneous of every degree.
    bool is_homogeneous() const {
        return terms_.empty() || terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
    }

    void add_term(const Monomial& m, const S& c) {
        if (m.size() != nvars_) throw Error(ErrorCode::ArityMismatch, "monomial length mismatch");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        check_compatible(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        check_compatible(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Polynomial& operator*=(const S& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const S& s) { return a *= s; }
    friend Polynomial operator*(const S& s, Polynomial a) { return a *= s; }
    Polynomial operator-() const { return *this * (-S::one(field_)); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_compatible(b);
        Polynomial r(a.nvars_, a.field_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.field_ == b.field_ && a.terms_ == b.terms_;
    }

    Polynomial pow(std::uint32_t e) const {
        Polynomial result = constant(nvars_, S::one(field_), field_);
        Polynomial base = *this;
        while (e) {
            if (e & 1) result *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return result;
    }

    void check_compatible(const Polynomial& o) const {
        require_same_field(field_, o.field_);
        if (nvars_ != o.nvars_)
            throw Error(ErrorCode::ArityMismatch,
                        std::to_string(nvars_) + " vs " + std::to_string(o.nvars_) + " variables");
    }

private:
    FieldSpec field_;
    std::size_t nvars_;
    TermMap terms_;
};

/// Formal partial derivative with respect to variable i.
template <FieldScalar S>
Polynomial<S> differentiate(const Polynomial<S>& p, std::size_t i) {
    if (i >= p.nvars()) throw Error(ErrorCode::IndexOutOfRange, "variable index " + std::to_string(i));
    Polynomial<S> r(p.nvars(), p.field());
    for (const auto& [m, c] : p.terms()) {
        if (m[i] == 0) continue;
        Monomial dm = m;
        dm[i] -= 1;
        r.add_term(dm, c * S::from(BigInt(m[i]), p.field()));
    }
    return r;
}

template <FieldScalar S>
S evaluate(const Polynomial<S>& p, std::span<const S> point) {
    if (point.size() != p.nvars())
        throw Error(ErrorCode::ArityMismatch, "point has " + std::to_string(point.size()) + " coordinates, expected " +
                                                  std::to_string(p.nvars()));
    S total = S::zero(p.field());
    for (const auto& [m, c] : p.terms()) {
        S term = c;
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::uint32_t e = 0; e < m[i]; ++e) term *= point[i];
        total += term;
    }
    return total;
}

template <FieldScalar S>
S evaluate(const Polynomial<S>& p, const std::vector<S>& point) {
    return evaluate(p, std::span<const S>(point));
}

/// Sets z_i = 1 and drops that variable; the remaining variables keep their
/// relative order (names from `patch_variable_names`).
template <FieldScalar S>
Polynomial<S> dehomogenize(const Polynomial<S>& p, std::size_t i) {
    if (i >= p.nvars()) throw Error(ErrorCode::IndexOutOfRange, "chart index " + std::to_string(i));
    if (!p.is_homogeneous()) throw Error(ErrorCode::NotHomogeneous, "dehomogenize needs a homogeneous form");
    Polynomial<S> r(p.nvars() - 1, p.field());
    for (const auto& [m, c] : p.terms()) {
        std::vector<std::uint32_t> e;
        e.reserve(m.size() - 1);
        for (std::size_t v = 0; v < m.size(); ++v)
            if (v != i) e.push_back(m[v]);
        r.add_term(Monomial(std::move(e)), c);
    }
    return r;
}

/// Names x0..xn with x_i omitted, for the affine patch z_i != 0.
std::vector<std::string> patch_variable_names(std::size_t nvars, std::size_t i);

/// Substitutes images[v] for variable v and expands.
template <FieldScalar S>
Polynomial<S> compose(const Polynomial<S>& p, const std::vector<Polynomial<S>>& images) {
    if (images.size() != p.nvars()) throw Error(ErrorCode::ArityMismatch, "one image per variable required");
    if (images.empty()) return p;
    const std::size_t target = images.front().nvars();
    Polynomial<S> result(target, p.field());
    // powers[v][e] = images[v]^e, filled lazily
    std::vector<std::vector<Polynomial<S>>> powers(p.nvars());
    auto power = [&](std::size_t v, std::uint32_t e) -> const Polynomial<S>& {
        auto& cache = powers[v];
        if (cache.empty()) cache.push_back(Polynomial<S>::constant(target, S::one(p.field()), p.field()));
        while (cache.size() <= e) cache.push_back(cache.back() * images[v]);
        return cache[e];
    };
    for (const auto& [m, c] : p.terms()) {
        Polynomial<S> term = Polynomial<S>::constant(target, c, p.field());
        for (std::size_t v = 0; v < m.size(); ++v)
            if (m[v]) term *= power(v, m[v]);
        result += term;
    }
    return result;
}

namespace detail {
std::string format_monomial(const Monomial& m, const std::vector<std::string>& names);
std::string format_terms(const std::vector<std::pair<std::string, std::string>>& coeff_and_monomial);
} // namespace detail

/// Canonical text: terms in MonomialOrder, explicit '*' and '^', "0" for zero.
template <FieldScalar S>
std::string to_string(const Polynomial<S>& p, const std::vector<std::string>& names) {
    std::vector<std::pair<std::string, std::string>> parts;
    for (const auto& [m, c] : p.terms()) parts.emplace_back(c.to_string(), detail::format_monomial(m, names));
    return detail::format_terms(parts);
}

template <FieldScalar S>
std::string to_string(const Polynomial<S>& p) {
    return to_string(p, default_variable_names(p.nvars()));
}

} // namespace fano

#endif // FANO_POLYNOMIAL_HPP
