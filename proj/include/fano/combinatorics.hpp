#ifndef FANO_COMBINATORICS_HPP
#define FANO_COMBINATORICS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "fano/field.hpp"

namespace fano {

/// Tuple d = (d_1, ..., d_s) of form degrees.
///
/// Structurally any non-empty list of non-negative entries (shifts such as
/// d - 1 are needed); `require_at_least_two` enforces d_i >= 2 where the
/// theory assumes it.
class MultiDegree {
public:
    MultiDegree() = default;
    MultiDegree(std::initializer_list<int> degrees) : MultiDegree(std::vector<int>(degrees)) {}
    explicit MultiDegree(std::vector<int> degrees);

    /// Parses "3" or "2,2".
    static MultiDegree parse(std::string_view csv);

    std::size_t size() const noexcept { return degrees_.size(); }
    int operator[](std::size_t i) const { return degrees_[i]; }
    const std::vector<int>& values() const noexcept { return degrees_; }
    auto begin() const { return degrees_.begin(); }
    auto end() const { return degrees_.end(); }

    /// d + m, componentwise.
    MultiDegree shifted(int m) const;
    void require_at_least_two() const;
    bool is_single_quadric() const { return degrees_ == std::vector<int>{2}; }

    std::string to_string() const;
    friend bool operator==(const MultiDegree&, const MultiDegree&) = default;

private:
    std::vector<int> degrees_;
};

/// C(a, b), zero whenever b < 0 or a < b.
BigInt binom(long a, long b);

/// C(d, m) = sum_i C(d_i, m).
BigInt multideg_binom(const MultiDegree& d, long m);

/// delta(n, d, k) = (k+1)(n-k) - C(d+k, k).
BigInt expected_dimension(int n, int k, const MultiDegree& d);

/// min(delta, n - 2k - s).
BigInt delta_minus(int n, int k, const MultiDegree& d);

enum class Regime { EmptyGeneric, NonemptySmooth, NonemptySmoothConnected };

std::string_view to_string(Regime r);

struct DimensionReport {
    int n = 0;
    int k = 0;
    MultiDegree d;
    BigInt delta;
    BigInt delta_minus;
    BigInt sym_dim;             // dim P Sym^d = C(d+n, n) - 1
    BigInt incidence_dim;       // (k+1)(n-k) + sym_dim - C(d+k, k)
    BigInt num_local_equations; // C(d+k, k)
    Regime regime = Regime::EmptyGeneric;
};

DimensionReport dimension_report(int n, int k, const MultiDegree& d);

/// psi(t) = t(n - 2k + t - 1) - C(d + t - 1, t - 1) on t = 1..t_max.
struct PsiProfile {
    int n = 0;
    int k = 0;
    MultiDegree d;
    std::vector<BigInt> values;      // values[t-1] = psi(t)
    std::vector<BigInt> first_diff;  // psi(t+1) - psi(t), t = 1..t_max-1
    std::vector<BigInt> second_diff; // first_diff(t+1) - first_diff(t), t = 1..t_max-2
    BigInt min_over_range;           // min psi(t) over t in [1, k+1]
    BigInt codim_bound;              // min{psi(1), psi(k+1)} + 1

    const BigInt& psi(int t) const { return values.at(static_cast<std::size_t>(t - 1)); }
};

BigInt psi(int n, int k, const MultiDegree& d, long t);
PsiProfile psi_profile(int n, int k, const MultiDegree& d, int t_max);

/// Size of the selected minor for a given t, computed two ways.
struct MinorSize {
    BigInt closed_form; // C(d+k, k) - C(d+t-1, t-1)
    BigInt direct_sum;  // sum_{j=0}^{k-t} C(k-j + (d-1), k-j)
    bool agree() const { return closed_form == direct_sum; }
};

MinorSize minor_size(const MultiDegree& d, int k, int t);

} // namespace fano

#endif // FANO_COMBINATORICS_HPP
