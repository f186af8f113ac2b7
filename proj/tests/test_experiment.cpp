#include <doctest.h>

#include <algorithm>
#include <numeric>

#include <fano/report.hpp>

using namespace fano;

namespace {

/// det of a 4x4 matrix mod p by the Leibniz formula.
std::int64_t det4_mod(const std::int64_t a[4][4], std::int64_t p) {
    std::array<int, 4> perm{0, 1, 2, 3};
    std::int64_t total = 0;
    do {
        int inversions = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) inversions += perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)];
        std::int64_t term = 1;
        for (int i = 0; i < 4; ++i) term = term * a[i][perm[static_cast<std::size_t>(i)]] % p;
        total = (total + (inversions % 2 ? p - term : term)) % p;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t p) {
    std::int64_t r = 1;
    for (b %= p; e; e >>= 1, b = b * b % p)
        if (e & 1) r = r * b % p;
    return r;
}

} // namespace

TEST_CASE("the random stream is reproducible and split by trial") {
    TrialRng a(1, 0);
    TrialRng b(1, 0);
    TrialRng c(1, 1);
    TrialRng d(2, 0);
    std::vector<std::uint64_t> va, vb, vc, vd;
    for (int i = 0; i < 16; ++i) {
        va.push_back(a.next());
        vb.push_back(b.next());
        vc.push_back(c.next());
        vd.push_back(d.next());
    }
    CHECK(va == vb);
    CHECK(va != vc);
    CHECK(va != vd);
    // Pinned values: the engine and seeding are fully specified by the standard.
    std::seed_seq seq{1u, 0u, 0u, 0u};
    std::mt19937_64 engine(seq);
    CHECK(va.front() == engine());
}

TEST_CASE("bounded draws are uniform enough") {
    TrialRng rng(5, 0);
    std::vector<int> hist(7, 0);
    for (int i = 0; i < 70000; ++i) ++hist[rng.below(7)];
    for (int h : hist) CHECK(std::abs(h - 10000) < 500);
    CHECK_THROWS_AS(rng.below(0), Error);
}

TEST_CASE("random form tuples") {
    const FieldSpec f7 = FieldSpec::prime(7);
    TrialRng a(1, 0);
    TrialRng b(1, 0);
    const auto x = random_form_tuple(3, MultiDegree{2}, f7, a);
    const auto y = random_form_tuple(3, MultiDegree{2}, f7, b);
    CHECK(x[0] == y[0]);

    // One draw per basis monomial, in basis order.
    TrialRng draw(1, 0);
    TrialRng oracle(1, 0);
    const auto cubic = random_form_tuple(3, MultiDegree{3}, f7, draw);
    const auto basis = monomial_basis(4, 3);
    CHECK(basis.size() == 20);
    for (const Monomial& m : basis) CHECK(cubic[0].coefficient(m).value() == oracle.below(7));
    CHECK(draw.next() == oracle.next());

    TrialRng r2(2, 0);
    const auto two = random_form_tuple(3, MultiDegree{2, 2}, FieldSpec::prime(5), r2);
    CHECK(two.size() == 2);
    CHECK(monomial_basis(4, 2).size() == 10);
    CHECK(two.degrees() == MultiDegree{2, 2});
    for (const auto& f : two.components()) CHECK(f.term_count() <= 10);

    // Over F_2 the all-zero draw is likely enough to exercise the redraw.
    for (std::uint64_t s = 0; s < 200; ++s) {
        TrialRng r(s, 0);
        CHECK_FALSE(random_form_tuple(1, MultiDegree{2}, FieldSpec::prime(2), r)[0].is_zero());
    }
    TrialRng r(0, 0);
    CHECK_THROWS_AS(random_form_tuple(3, MultiDegree{1}, f7, r), Error);
    CHECK_THROWS_AS(random_form_tuple(3, MultiDegree{2}, FieldSpec::rationals(), r), Error);
}

TEST_CASE("scan reports are identical at every thread count") {
    ScanConfig cfg{3, 1, MultiDegree{3}, 5, 30, 99};
    const std::string one = to_json(scan(cfg, 1)).dump(2);
    for (unsigned threads : {2u, 4u, 7u}) CHECK(to_json(scan(cfg, threads)).dump(2) == one);
    cfg.seed = 100;
    CHECK(to_json(scan(cfg, 3)).dump(2) != one);
}

TEST_CASE("quadric scan against the determinant oracle") {
    const std::uint32_t q = 7;
    const ScanConfig cfg{3, 1, MultiDegree{2}, q, 50, 3};
    const ScanReport r = scan(cfg, 4);
    REQUIRE(r.counts.size() == 50);
    std::uint64_t histogram_total = 0;
    for (const auto& [dim, points] : r.tangent_histogram) histogram_total += points;
    CHECK(histogram_total == r.found_points);
    CHECK(r.found_points == std::accumulate(r.counts.begin(), r.counts.end(), std::uint64_t{0}));

    std::uint64_t nonsingular = 0;
    for (int t = 0; t < cfg.trials; ++t) {
        TrialRng rng(cfg.seed, static_cast<std::uint64_t>(t));
        const auto forms = random_form_tuple(3, MultiDegree{2}, FieldSpec::prime(q), rng);
        // Gram matrix 2A of the quadric, so that f(z) = z^T A z with integer entries.
        std::int64_t gram[4][4] = {};
        for (const auto& [m, c] : forms[0].terms()) {
            std::vector<int> vars;
            for (int v = 0; v < 4; ++v)
                for (std::uint32_t e = 0; e < m[static_cast<std::size_t>(v)]; ++e) vars.push_back(v);
            if (vars[0] == vars[1])
                gram[vars[0]][vars[0]] = 2 * c.value() % q;
            else
                gram[vars[0]][vars[1]] = gram[vars[1]][vars[0]] = c.value();
        }
        const std::int64_t det = det4_mod(gram, q);
        CAPTURE(t);
        if (det == 0) continue;
        ++nonsingular;
        const bool square = pow_mod(det, (q - 1) / 2, q) == 1;
        CHECK(r.counts[static_cast<std::size_t>(t)] == (square ? 2 * (q + 1) : 0));
        const auto found = count_fano_points(forms, 1, true);
        for (const auto& w : found.witnesses) {
            const auto tp = tangent_profile(forms, w);
            CHECK(tp.tangent_dim == 1);
            CHECK(tp.smooth);
        }
    }
    CHECK(nonsingular > 30);
    for (std::uint64_t c : r.counts) CHECK(c <= gaussian_count(1, 3, q));
}

TEST_CASE("scan tangent dimensions respect the expected dimension") {
    for (const auto& cfg : {ScanConfig{3, 1, MultiDegree{3}, 7, 20, 5}, ScanConfig{4, 1, MultiDegree{2, 2}, 3, 10, 6},
                            ScanConfig{3, 1, MultiDegree{2}, 5, 20, 8}}) {
        const ScanReport r = scan(cfg, 2);
        const BigInt delta = expected_dimension(cfg.n, cfg.k, cfg.d);
        CHECK(r.expected_dim == delta);
        for (const auto& [dim, points] : r.tangent_histogram) CHECK(BigInt(dim) >= delta);
        CHECK(r.fraction_smooth >= 0.0);
        CHECK(r.fraction_smooth <= 1.0);
    }
}

TEST_CASE("scan rejects invalid configurations") {
    CHECK_THROWS_AS(scan(ScanConfig{3, 1, MultiDegree{2}, 7, 0, 1}), Error);
    CHECK_THROWS_AS(scan(ScanConfig{3, 3, MultiDegree{2}, 7, 1, 1}), Error);
    CHECK_THROWS_AS(scan(ScanConfig{3, 1, MultiDegree{2}, 8, 1, 1}), Error);
    CHECK_THROWS_AS(scan(ScanConfig{3, 1, MultiDegree{1}, 7, 1, 1}), Error);
}
