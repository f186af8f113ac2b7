#ifndef FANO_EXPERIMENT_HPP
#define FANO_EXPERIMENT_HPP

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "fano/fano_local.hpp"

namespace fano {

/// Reproducible random stream: a std::mt19937_64 engine seeded through
/// std::seed_seq from (seed, stream). Both algorithms are fixed by the C++
/// standard, and bounded draws use our own rejection sampling instead of
/// std::uniform_int_distribution (whose algorithm is implementation-defined),
/// so a given (seed, stream) yields the same values on every platform.
/// Trial t of an experiment uses stream t, so parallel trials reproduce
/// serial output exactly.
class TrialRng {
public:
    TrialRng(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound);

private:
    std::mt19937_64 engine_;
};

/// Each f_i gets independent uniform coefficients in F_q on every degree-d_i
/// monomial (in MonomialOrder); an all-zero draw is redrawn.
FormTuple<Fp> random_form_tuple(int n, const MultiDegree& d, const FieldSpec& field, TrialRng& rng);

struct ScanConfig {
    int n = 0;
    int k = 0;
    MultiDegree d;
    std::uint32_t q = 0;
    int trials = 0;
    std::uint64_t seed = 0;
};

struct ScanReport {
    ScanConfig config;
    std::vector<std::uint64_t> counts;                 // per trial
    double fraction_empty = 0;
    double mean_count = 0;
    std::map<long, std::uint64_t> tangent_histogram;   // tangent_dim -> found points
    std::uint64_t found_points = 0;
    std::uint64_t smooth_points = 0;
    double fraction_smooth = 0;                        // 0 when nothing was found
    BigInt expected_dim;
};

/// Draws `trials` random tuples, counts their F_q-rational k-planes and takes
/// the tangent profile at each one. Trials run on up to `threads` workers.
ScanReport scan(const ScanConfig& config, unsigned threads = 1);

} // namespace fano

#endif // FANO_EXPERIMENT_HPP
