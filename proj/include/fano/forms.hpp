#ifndef FANO_FORMS_HPP
#define FANO_FORMS_HPP

#include <algorithm>
#include <string_view>
#include <vector>

#include "fano/combinatorics.hpp"
#include "fano/parser.hpp"
#include "fano/polynomial.hpp"

namespace fano {

/// Point counting also makes sense for hyperplanes; everything else assumes d_i >= 2.
enum class DegreePolicy { AtLeastTwo, AllowLinear };

/// f = (f_1, ..., f_s): nonzero forms sharing variables and field, f_i of degree d_i >= 2
/// (d_i >= 1 under DegreePolicy::AllowLinear).
template <FieldScalar S>
class FormTuple {
public:
    explicit FormTuple(std::vector<Polynomial<S>> components, DegreePolicy policy = DegreePolicy::AtLeastTwo)
        : components_(std::move(components)) {
        if (components_.empty()) throw Error(ErrorCode::InvalidDegree, "form tuple needs at least one form");
        std::vector<int> degrees;
        for (const auto& f : components_) {
            components_.front().check_compatible(f);
            if (f.is_zero()) throw Error(ErrorCode::InvalidDegree, "zero form has no degree");
            if (!f.is_homogeneous()) throw Error(ErrorCode::NotHomogeneous, to_string(f));
            degrees.push_back(static_cast<int>(f.degree()));
        }
        degrees_ = MultiDegree(std::move(degrees));
        if (policy == DegreePolicy::AtLeastTwo) degrees_.require_at_least_two();
        if (std::find(degrees_.begin(), degrees_.end(), 0) != degrees_.end())
            throw Error(ErrorCode::InvalidDegree, "constant forms have no vanishing locus");
    }

    const std::vector<Polynomial<S>>& components() const noexcept { return components_; }
    const Polynomial<S>& operator[](std::size_t i) const { return components_[i]; }
    std::size_t size() const noexcept { return components_.size(); }
    const MultiDegree& degrees() const noexcept { return degrees_; }
    std::size_t nvars() const { return components_.front().nvars(); }
    /// Ambient projective dimension n.
    int ambient_dimension() const { return static_cast<int>(nvars()) - 1; }
    const FieldSpec& field() const { return components_.front().field(); }

private:
    std::vector<Polynomial<S>> components_;
    MultiDegree degrees_;
};

/// Parses each expression as a form in z0..z{nvars-1}.
template <FieldScalar S>
FormTuple<S> parse_forms(const std::vector<std::string>& exprs, std::size_t nvars, const FieldSpec& field,
                         DegreePolicy policy = DegreePolicy::AtLeastTwo) {
    std::vector<Polynomial<S>> polys;
    polys.reserve(exprs.size());
    for (const auto& e : exprs) polys.push_back(parse_polynomial<S>(e, nvars, field));
    return FormTuple<S>(std::move(polys), policy);
}

/// One past the highest variable index mentioned in `exprs` (at least 1).
std::size_t infer_variable_count(const std::vector<std::string>& exprs);

} // namespace fano

#endif // FANO_FORMS_HPP
