#include <doctest.h>

#include <fstream>
#include <sstream>

#include <fano/alpha.hpp>

#include "support.hpp"

using namespace fano;

namespace {

const FieldSpec QQ = FieldSpec::rationals();

Matrix<Rational> rational_matrix(std::initializer_list<std::initializer_list<int>> rows) {
    Matrix<Rational> m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
    Eigen::Index r = 0;
    for (const auto& row : rows) {
        Eigen::Index c = 0;
        for (int v : row) m(r, c++) = v;
        ++r;
    }
    return m;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Entry (i, J) of M(mu), spelled by hand: z^{J + e_i} in J's block.
std::string entry_by_hand(std::size_t block, std::size_t blocks, const std::string& mono) {
    std::string out;
    for (std::size_t b = 0; b < blocks; ++b) out += (b ? " ⊕ " : "") + (b == block ? mono : std::string("0"));
    return out;
}

} // namespace

TEST_CASE("alpha matrix of the quadric at Span(e0, e1)") {
    const auto f = parse_forms<Rational>({"z0*z2 - z1*z3"}, 4, QQ);
    const auto span = PlaneCoords<Rational>::origin(Chart::standard(1, 3), QQ);
    const auto a = alpha_matrix(f, span);
    CHECK(a.matrix == rational_matrix({{1, 0, 0, 0}, {0, 1, -1, 0}, {0, 0, 0, -1}}));
    CHECK(rank(a.matrix) == 3);
    CHECK(alpha_surjective(f, span));
    REQUIRE(a.columns.size() == 4);
    CHECK(a.columns[0].ambient_column == 2);
    CHECK(a.columns[0].lambda_index == 0);
    CHECK(a.columns[1].ambient_column == 2);
    CHECK(a.columns[1].lambda_index == 1);
    CHECK(a.columns[2].ambient_column == 3);
    CHECK(a.rows[1].lambda == Monomial{1, 1});
}

TEST_CASE("vanishing partials give the zero map") {
    const auto f = parse_forms<Rational>({"z2^2"}, 4, QQ);
    const auto span = PlaneCoords<Rational>::origin(Chart::standard(1, 3), QQ);
    const auto a = alpha_matrix(f, span);
    CHECK(a.matrix.rows() == 3);
    CHECK(a.matrix.cols() == 4);
    CHECK(rank(a.matrix) == 0);
    CHECK_FALSE(alpha_surjective(f, span));

    auto off = span;
    off.entries(0, 0) = 1;
    CHECK_THROWS_WITH_AS(alpha_matrix(f, off), doctest::Contains("NotOnFano"), Error);
}

TEST_CASE("alpha is surjective at all 27 lines of the Fermat cubic over F_7") {
    const auto cubic = parse_forms<Fp>({"z0^3 + z1^3 + z2^3 + z3^3"}, 4, FieldSpec::prime(7));
    const auto report = count_fano_points(cubic, 1, true);
    REQUIRE(report.witnesses.size() == 27);
    for (const auto& w : report.witnesses) CHECK(alpha_surjective(cubic, w));
}

TEST_CASE_TEMPLATE("alpha equals the Jacobian up to the fixed column permutation", S, Fp, Rational) {
    const FieldSpec f = std::is_same_v<S, Fp> ? FieldSpec::prime(101) : QQ;
    TrialRng rng(31, 0);
    const std::vector<std::tuple<int, int, MultiDegree>> grid{
        {3, 1, MultiDegree{2}}, {3, 1, MultiDegree{3}}, {4, 1, MultiDegree{2, 2}}, {4, 2, MultiDegree{2}},
        {5, 1, MultiDegree{2, 3}}};
    for (const auto& [n, k, d] : grid)
        for (int i = 0; i < 12; ++i) {
            const auto pair = testing::random_incidence_pair<S>(n, k, d, f, rng);
            REQUIRE(fano_contains(pair.forms, pair.plane));
            const auto a = alpha_matrix(pair.forms, pair.plane);
            const auto sys = fano_local_system(pair.forms, pair.plane.chart);
            const auto point = pair.plane.coordinates();
            const Matrix<S> jac = jacobian(sys, std::span<const S>(point), f);
            const int rows = k + 1;
            const int cols = n - k;
            CHECK(a.matrix.rows() == jac.rows());
            CHECK(BigInt(static_cast<long>(a.matrix.rows())) == multideg_binom(d.shifted(k), k));
            CHECK(a.matrix.cols() == rows * cols);
            bool equal = true;
            for (int jj = 0; jj < cols; ++jj)
                for (int r = 0; r < rows; ++r)
                    equal = equal && a.matrix.col(jj * rows + r) == jac.col(r * cols + jj);
            CHECK(equal);
            CHECK(rank(a.matrix) == tangent_profile(pair.forms, pair.plane).jacobian_rank);
        }
}

TEST_CASE("M(mu) for d = (2,2), k = 1") {
    const auto m = m_mu(MultiDegree{2, 2}, 1);
    REQUIRE(m.rows() == 2);
    REQUIRE(m.cols() == 4);
    const std::vector<std::vector<std::string>> paper{
        {"z0^2 ⊕ 0", "z0*z1 ⊕ 0", "0 ⊕ z0^2", "0 ⊕ z0*z1"},
        {"z0*z1 ⊕ 0", "z1^2 ⊕ 0", "0 ⊕ z0*z1", "0 ⊕ z1^2"}};
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t c = 0; c < 4; ++c) CHECK(format_block_monomial(m.entries[i][c], 2) == paper[i][c]);
    const std::vector<std::string> labels{"z0 ⊕ 0", "z1 ⊕ 0", "0 ⊕ z0", "0 ⊕ z1"};
    for (std::size_t c = 0; c < 4; ++c) CHECK(format_block_monomial(m.columns[c], 2) == labels[c]);
    CHECK(format_m_mu(m) == read_file(std::string(FANO_GOLDEN_DIR) + "/m_mu_d2-2_k1.txt"));
}

TEST_CASE("M(mu) for d = (3,3), k = 3 matches the transposed display") {
    const auto m = m_mu(MultiDegree{3, 3}, 3);
    REQUIRE(m.rows() == 4);
    REQUIRE(m.cols() == 20);
    // Rows of the transpose: column label of Gamma(2) and the entries for z0..z3.
    const std::vector<std::vector<std::string>> block{
        {"z0^2", "z0^3", "z0^2*z1", "z0^2*z2", "z0^2*z3"},
        {"z0*z1", "z0^2*z1", "z0*z1^2", "z0*z1*z2", "z0*z1*z3"},
        {"z1^2", "z0*z1^2", "z1^3", "z1^2*z2", "z1^2*z3"},
        {"z0*z2", "z0^2*z2", "z0*z1*z2", "z0*z2^2", "z0*z2*z3"},
        {"z1*z2", "z0*z1*z2", "z1^2*z2", "z1*z2^2", "z1*z2*z3"},
        {"z2^2", "z0*z2^2", "z1*z2^2", "z2^3", "z2^2*z3"},
        {"z0*z3", "z0^2*z3", "z0*z1*z3", "z0*z2*z3", "z0*z3^2"},
        {"z1*z3", "z0*z1*z3", "z1^2*z3", "z1*z2*z3", "z1*z3^2"},
        {"z2*z3", "z0*z2*z3", "z1*z2*z3", "z2^2*z3", "z2*z3^2"},
        {"z3^2", "z0*z3^2", "z1*z3^2", "z2*z3^2", "z3^3"}};
    for (std::size_t b = 0; b < 2; ++b)
        for (std::size_t r = 0; r < 10; ++r) {
            const std::size_t c = b * 10 + r;
            CHECK(format_block_monomial(m.columns[c], 2) == entry_by_hand(b, 2, block[r][0]));
            for (std::size_t i = 0; i < 4; ++i)
                CHECK(format_block_monomial(m.entries[i][c], 2) == entry_by_hand(b, 2, block[r][i + 1]));
        }
}

TEST_CASE("M(mu) shape and entry degrees") {
    CHECK(format_block_monomial(m_mu(MultiDegree{2}, 0).entries[0][0], 1) == "z0^2");
    CHECK(m_mu(MultiDegree{2}, 0).cols() == 1);
    for (const MultiDegree& d : {MultiDegree{2}, MultiDegree{3}, MultiDegree{2, 2}, MultiDegree{2, 4, 3}})
        for (int k = 0; k <= 4; ++k) {
            const auto m = m_mu(d, k);
            CHECK(m.rows() == static_cast<std::size_t>(k + 1));
            CHECK(BigInt(static_cast<unsigned long>(m.cols())) == multideg_binom(d.shifted(k - 1), k));
            for (const auto& row : m.entries)
                for (const auto& e : row) CHECK(e.monomial.degree() == static_cast<std::uint32_t>(d[e.block]));
        }
    CHECK_THROWS_AS(m_mu(MultiDegree{2}, -1), Error);
    CHECK_THROWS_AS(m_mu(MultiDegree{1}, 1), Error);
}

TEST_CASE("h applied to M(mu): the worked examples") {
    const MultiDegree d{2, 2};
    const auto m = m_mu(d, 1);

    const auto h1 = parse_h_functional("(z0^2)* + (z0^2)*", d, 1);
    const auto a1 = apply_h(m, h1, QQ);
    CHECK(a1 == rational_matrix({{1, 0, 1, 0}, {0, 0, 0, 0}}));
    CHECK(rank(a1) == 1);

    const auto h2 = parse_h_functional("(z0*z1)* ⊕ 0", d, 1);
    const auto a2 = apply_h(m, h2, QQ);
    CHECK(a2 == rational_matrix({{0, 1, 0, 0}, {1, 0, 0, 0}}));
    CHECK(rank(a2) == 2);

    const auto zero = parse_h_functional("0 + 0", d, 1);
    CHECK(zero.coefficients.empty());
    CHECK(rank(apply_h(m, zero, QQ)) == 0);
}

TEST_CASE("h functional syntax") {
    const MultiDegree d{2, 2};
    const auto h = parse_h_functional("[(z0*z1)* - 2(z1^2)* + 1/2*(z0^2)*] + 3(z1^2)*", d, 1);
    CHECK(h.coefficients.size() == 4);
    CHECK(h.coefficients.at({0, Monomial{1, 1}}) == Rational(1));
    CHECK(h.coefficients.at({0, Monomial{0, 2}}) == Rational(-2));
    CHECK(h.coefficients.at({0, Monomial{2, 0}}) == Rational(BigInt(1), BigInt(2)));
    CHECK(h.coefficients.at({1, Monomial{0, 2}}) == Rational(3));
    CHECK(parse_h_functional("[(z0^2)* - (z0^2)*] + 0", d, 1).coefficients.empty());

    CHECK_THROWS_AS(parse_h_functional("(z0^2)*", d, 1), Error);               // one block missing
    CHECK_THROWS_AS(parse_h_functional("(z0^3)* + 0", d, 1), Error);           // wrong degree
    CHECK_THROWS_AS(parse_h_functional("(z0^2 + z1^2)* + 0", d, 1), Error);    // not a single monomial
    CHECK_THROWS_AS(parse_h_functional("(z2^2)* + 0", d, 1), Error);           // z2 is not a variable of Gamma
    CHECK_THROWS_AS(parse_h_functional("[(z0^2)* + 0", d, 1), Error);          // unbalanced
    CHECK_THROWS_AS(parse_h_functional("z0^2 + 0", d, 1), Error);              // missing dual marker

    HFunctional<Rational> bad;
    bad.degrees = MultiDegree{2};
    bad.k = 1;
    CHECK_THROWS_AS(apply_h(m_mu(d, 1), bad, QQ), Error);
}

TEST_CASE("rank of h(M(mu)) never exceeds k + 1") {
    TrialRng rng(17, 0);
    const std::vector<MultiDegree> degrees{MultiDegree{2}, MultiDegree{3}, MultiDegree{2, 2}, MultiDegree{3, 3},
                                           MultiDegree{2, 3, 4}};
    for (const MultiDegree& d : degrees)
        for (int k = 0; k <= 3; ++k) {
            const auto m = m_mu(d, k);
            const auto basis = block_basis(d, k);
            long max_rank = 0;
            for (int trial = 0; trial < 1000; ++trial) {
                HFunctional<Rational> h;
                h.degrees = d;
                h.k = k;
                const auto terms = rng.below(6) + 1;
                for (std::uint64_t t = 0; t < terms; ++t) {
                    const Rational c = testing::random_rational(rng);
                    if (!c.is_zero()) h.coefficients[basis[rng.below(basis.size())]] = c;
                }
                const long r = static_cast<long>(rank(apply_h(m, h, QQ)));
                max_rank = std::max(max_rank, r);
                CHECK(r <= k + 1);
            }
            CHECK(max_rank == k + 1);
        }
}
