#include "fano/fano_local.hpp"

#include <cmath>

#include "fano/parallel.hpp"

namespace fano {

CompiledBlockSystem::CompiledBlockSystem(const LocalFanoSystem<Fp>& sys, const PivotBlock& block, std::uint32_t q)
    : q_(q), free_count_(block.free_positions.size()) {
    const Chart& chart = block.chart;
    std::vector<int> slot(static_cast<std::size_t>(chart.dimension()), -1);
    for (std::size_t i = 0; i < block.free_positions.size(); ++i) {
        const auto [a, j] = block.free_positions[i];
        slot[static_cast<std::size_t>(a * chart.cols() + j)] = static_cast<int>(i);
    }
    for (const auto& eq : sys.equations) {
        Equation compiled{static_cast<std::uint32_t>(terms_.size()), 0};
        for (const auto& [m, c] : eq.polynomial.terms()) {
            bool survives = true;
            for (std::size_t v = 0; v < m.size() && survives; ++v) survives = m[v] == 0 || slot[v] >= 0;
            if (!survives) continue;
            const auto offset = static_cast<std::uint32_t>(exponents_.size());
            exponents_.resize(exponents_.size() + free_count_, 0);
            for (std::size_t v = 0; v < m.size(); ++v) {
                if (m[v] == 0) continue;
                if (m[v] > 255) throw Error(ErrorCode::InvalidDegree, "degree too large for compiled evaluation");
                exponents_[offset + static_cast<std::size_t>(slot[v])] = static_cast<std::uint8_t>(m[v]);
                max_degree_ = std::max(max_degree_, m[v]);
            }
            terms_.push_back({c.value(), offset});
            ++compiled.term_count;
        }
        // An equation with no surviving terms vanishes on the whole block.
        if (compiled.term_count > 0) equations_.push_back(compiled);
    }
}

bool CompiledBlockSystem::vanishes(std::span<const std::uint32_t> values) const {
    const std::size_t stride = max_degree_ + 1;
    std::uint64_t powers[512];
    std::vector<std::uint64_t> heap;
    std::uint64_t* pw = powers;
    if (free_count_ * stride > std::size(powers)) {
        heap.resize(free_count_ * stride);
        pw = heap.data();
    }
    for (std::size_t i = 0; i < free_count_; ++i) {
        std::uint64_t* row = pw + i * stride;
        row[0] = 1;
        for (std::size_t e = 1; e < stride; ++e) row[e] = row[e - 1] * values[i] % q_;
    }
    for (const Equation& eq : equations_) {
        std::uint64_t sum = 0;
        for (std::uint32_t t = eq.first_term; t < eq.first_term + eq.term_count; ++t) {
            const Term& term = terms_[t];
            std::uint64_t v = term.coefficient;
            const std::uint8_t* ex = exponents_.data() + term.exponent_offset;
            for (std::size_t i = 0; i < free_count_; ++i)
                if (ex[i]) v = v * pw[i * stride + ex[i]] % q_;
            sum += v;
            if (sum >= q_) sum -= q_;
        }
        if (sum != 0) return false;
    }
    return true;
}

namespace {

constexpr std::uint64_t kShardSize = 4096;

struct Shard {
    std::size_t block;
    std::uint64_t begin;
    std::uint64_t end;
};

struct ShardResult {
    std::uint64_t count = 0;
    std::vector<std::uint64_t> witnesses;
};

} // namespace

CountReport count_fano_points(const FormTuple<Fp>& forms, int k, bool collect_witnesses, unsigned threads) {
    const int n = forms.ambient_dimension();
    if (k < 0 || k >= n)
        throw Error(ErrorCode::InvalidRange, "need 0 <= k < n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
    const FieldSpec field = forms.field();
    const std::uint32_t q = field.modulus();

    const std::vector<PivotBlock> blocks = pivot_blocks(k, n, q);
    std::vector<CompiledBlockSystem> compiled;
    compiled.reserve(blocks.size());
    for (const PivotBlock& block : blocks) compiled.emplace_back(fano_local_system(forms, block.chart), block, q);

    std::vector<Shard> shards;
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (std::uint64_t s = 0; s < blocks[b].plane_count; s += kShardSize)
            shards.push_back({b, s, std::min(s + kShardSize, blocks[b].plane_count)});

    std::vector<ShardResult> results(shards.size());
    parallel_for(shards.size(), threads, [&](std::size_t idx) {
        const Shard& shard = shards[idx];
        const PivotBlock& block = blocks[shard.block];
        const std::size_t f = block.free_positions.size();
        std::vector<std::uint32_t> digits(f, 0);
        std::uint64_t rem = shard.begin;
        for (std::size_t i = f; i-- > 0;) {
            digits[i] = static_cast<std::uint32_t>(rem % q);
            rem /= q;
        }
        ShardResult& out = results[idx];
        for (std::uint64_t i = shard.begin; i < shard.end; ++i) {
            if (compiled[shard.block].vanishes(digits)) {
                ++out.count;
                if (collect_witnesses) out.witnesses.push_back(i);
            }
            for (std::size_t p = f; p-- > 0;) {
                if (++digits[p] < q) break;
                digits[p] = 0;
            }
        }
    });

    CountReport report;
    report.q = q;
    report.n = n;
    report.k = k;
    report.total_planes = 0;
    for (const PivotBlock& block : blocks) {
        report.per_chart.push_back({block.chart.pivots(), block.plane_count, 0});
        report.total_planes += BigInt(static_cast<unsigned long>(block.plane_count));
    }
    for (std::size_t idx = 0; idx < shards.size(); ++idx) {
        const ShardResult& r = results[idx];
        report.per_chart[shards[idx].block].count += r.count;
        report.fano_points += r.count;
        for (std::uint64_t w : r.witnesses) report.witnesses.push_back(plane_at(blocks[shards[idx].block], w, field));
    }
    return report;
}

DimensionEstimate estimate_dimension(std::span<const std::uint32_t> primes, std::span<const std::uint64_t> counts) {
    if (primes.size() < 2) throw Error(ErrorCode::InvalidRange, "dimension estimate needs at least two primes");
    if (primes.size() != counts.size()) throw Error(ErrorCode::ArityMismatch, "one count per prime required");
    for (std::size_t i = 0; i < primes.size(); ++i)
        if (counts[i] == 0)
            throw Error(ErrorCode::ZeroCount, "no points over F_" + std::to_string(primes[i]));

    DimensionEstimate est;
    est.primes.assign(primes.begin(), primes.end());
    est.counts.assign(counts.begin(), counts.end());
    const std::size_t m = primes.size();
    std::vector<double> x(m);
    std::vector<double> y(m);
    double mx = 0;
    double my = 0;
    for (std::size_t i = 0; i < m; ++i) {
        x[i] = std::log(static_cast<double>(primes[i]));
        y[i] = std::log(static_cast<double>(counts[i]));
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(m);
    my /= static_cast<double>(m);
    double sxx = 0;
    double sxy = 0;
    for (std::size_t i = 0; i < m; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0) throw Error(ErrorCode::InvalidRange, "dimension estimate needs distinct primes");
    est.slope = sxy / sxx;
    est.intercept = my - est.slope * mx;
    double ss = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const double r = y[i] - (est.intercept + est.slope * x[i]);
        ss += r * r;
    }
    est.residual = std::sqrt(ss / static_cast<double>(m));
    return est;
}

DimensionEstimate estimate_dimension(const std::function<FormTuple<Fp>(const FieldSpec&)>& family, int k,
                                     std::span<const std::uint32_t> primes, unsigned threads) {
    if (primes.size() < 2) throw Error(ErrorCode::InvalidRange, "dimension estimate needs at least two primes");
    std::vector<std::uint64_t> counts;
    for (std::uint32_t q : primes)
        counts.push_back(count_fano_points(family(FieldSpec::prime(q)), k, false, threads).fano_points);
    return estimate_dimension(primes, counts);
}

} // namespace fano
