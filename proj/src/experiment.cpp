#include "fano/experiment.hpp"

#include "fano/parallel.hpp"

namespace fano {

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    engine_.seed(seq);
}

std::uint64_t TrialRng::below(std::uint64_t bound) {
    if (bound == 0) throw Error(ErrorCode::InvalidRange, "empty sampling range");
    // Reject the top partial bucket so every residue is equally likely.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % bound;
}

FormTuple<Fp> random_form_tuple(int n, const MultiDegree& d, const FieldSpec& field, TrialRng& rng) {
    if (!field.is_prime_field()) throw Error(ErrorCode::InvalidField, "random forms are drawn over F_q");
    if (n < 1) throw Error(ErrorCode::InvalidRange, "ambient dimension must be positive");
    d.require_at_least_two();
    const auto nvars = static_cast<std::size_t>(n + 1);
    std::vector<Polynomial<Fp>> forms;
    for (int degree : d) {
        const std::vector<Monomial> basis = monomial_basis(nvars, static_cast<std::uint32_t>(degree));
        Polynomial<Fp> f(nvars, field);
        while (f.is_zero()) {
            for (const Monomial& m : basis)
                f.add_term(m, Fp(static_cast<std::int64_t>(rng.below(field.modulus())), field.modulus()));
        }
        forms.push_back(std::move(f));
    }
    return FormTuple<Fp>(std::move(forms));
}

namespace {

struct TrialOutcome {
    std::uint64_t count = 0;
    std::vector<long> tangent_dims;
    std::uint64_t smooth = 0;
};

TrialOutcome run_trial(const ScanConfig& cfg, const FieldSpec& field, std::size_t trial) {
    TrialRng rng(cfg.seed, trial);
    const FormTuple<Fp> forms = random_form_tuple(cfg.n, cfg.d, field, rng);
    const CountReport counted = count_fano_points(forms, cfg.k, true, 1);
    TrialOutcome out;
    out.count = counted.fano_points;
    std::map<std::vector<int>, LocalFanoSystem<Fp>> systems;
    for (const auto& plane : counted.witnesses) {
        auto it = systems.find(plane.chart.pivots());
        if (it == systems.end()) it = systems.emplace(plane.chart.pivots(), fano_local_system(forms, plane.chart)).first;
        const TangentReport t = tangent_profile(it->second, forms, plane);
        out.tangent_dims.push_back(t.tangent_dim);
        if (t.smooth) ++out.smooth;
    }
    return out;
}

} // namespace

ScanReport scan(const ScanConfig& config, unsigned threads) {
    if (config.trials < 1) throw Error(ErrorCode::InvalidRange, "scan needs at least one trial");
    if (config.k < 0 || config.k >= config.n) throw Error(ErrorCode::InvalidRange, "need 0 <= k < n");
    config.d.require_at_least_two();
    const FieldSpec field = FieldSpec::prime(config.q);

    std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(config.trials));
    parallel_for(outcomes.size(), threads, [&](std::size_t t) { outcomes[t] = run_trial(config, field, t); });

    ScanReport r;
    r.config = config;
    r.expected_dim = expected_dimension(config.n, config.k, config.d);
    std::uint64_t empty = 0;
    std::uint64_t total = 0;
    for (const TrialOutcome& o : outcomes) {
        r.counts.push_back(o.count);
        total += o.count;
        if (o.count == 0) ++empty;
        for (long dim : o.tangent_dims) ++r.tangent_histogram[dim];
        r.found_points += o.tangent_dims.size();
        r.smooth_points += o.smooth;
    }
    const auto trials = static_cast<double>(config.trials);
    r.fraction_empty = static_cast<double>(empty) / trials;
    r.mean_count = static_cast<double>(total) / trials;
    r.fraction_smooth =
        r.found_points ? static_cast<double>(r.smooth_points) / static_cast<double>(r.found_points) : 0.0;
    return r;
}

} // namespace fano
