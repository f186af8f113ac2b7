#include <doctest.h>

#include <fano/forms.hpp>

#include "support.hpp"

using namespace fano;

namespace {

const FieldSpec QQ = FieldSpec::rationals();

Polynomial<Rational> pq(std::string_view s, std::size_t nvars) { return parse_polynomial<Rational>(s, nvars, QQ); }

Polynomial<Fp> pf(std::string_view s, std::size_t nvars, std::uint32_t p) {
    return parse_polynomial<Fp>(s, nvars, FieldSpec::prime(p));
}

} // namespace

TEST_CASE("monomial order is graded reverse lexicographic") {
    const auto basis = monomial_basis(4, 2);
    std::vector<std::string> printed;
    for (const auto& m : basis) printed.push_back(detail::format_monomial(m, default_variable_names(4)));
    CHECK(printed == std::vector<std::string>{"z0^2", "z0*z1", "z1^2", "z0*z2", "z1*z2", "z2^2", "z0*z3", "z1*z3",
                                              "z2*z3", "z3^2"});
    CHECK(monomial_basis(4, 3).size() == 20);
    CHECK(monomial_basis(1, 5).size() == 1);
    CHECK(monomial_basis(3, 0).size() == 1);
}

TEST_CASE("parsing the worked examples") {
    const auto f = pq("z0*z2 - z1^2", 3);
    CHECK(f.term_count() == 2);
    CHECK(f.degree() == 2);
    CHECK(f.is_homogeneous());
    CHECK(to_string(f) == "-z1^2 + z0*z2");

    CHECK(pq("z0 - z0", 2).is_zero());
    CHECK(pq("z0 - z0", 2).terms().empty());
    CHECK(to_string(pq("z0 - z0", 2)) == "0");

    CHECK_THROWS_WITH_AS(pf("z5", 4, 7), doctest::Contains("VariableOutOfRange"), Error);
}

TEST_CASE("parser errors") {
    auto code_of = [](std::string_view s) {
        try {
            pq(s, 3);
        } catch (const Error& e) {
            return e.code();
        }
        FAIL("no error for " << s);
        return ErrorCode::SyntaxError;
    };
    CHECK(code_of("z0 +") == ErrorCode::SyntaxError);
    CHECK(code_of("z0 * * z1") == ErrorCode::SyntaxError);
    CHECK(code_of("(z0 + z1") == ErrorCode::SyntaxError);
    CHECK(code_of("z0 z1") == ErrorCode::SyntaxError);
    CHECK(code_of("x0") == ErrorCode::SyntaxError);
    CHECK(code_of("z0 $ z1") == ErrorCode::SyntaxError);
    CHECK(code_of("z0^z1") == ErrorCode::NonIntegerExponent);
    CHECK(code_of("z0^(2)") == ErrorCode::NonIntegerExponent);
    CHECK(code_of("z0^-1") == ErrorCode::NonIntegerExponent);
    CHECK(code_of("z3") == ErrorCode::VariableOutOfRange);
    CHECK(code_of("") == ErrorCode::SyntaxError);
}

TEST_CASE("whitespace and parentheses") {
    CHECK(pq(" ( z0 + z1 ) ^ 2 ", 2) == pq("z0^2 + 2*z0*z1 + z1^2", 2));
    CHECK(pq("2*(z0 - 3)*z1", 2) == pq("2*z0*z1 - 6*z1", 2));
    CHECK(pq("-z0 + 1/2*z1", 2).coefficient(Monomial{0, 1}) == Rational(BigInt(1), BigInt(2)));
}

TEST_CASE("arithmetic examples") {
    CHECK((pq("z0 + z1", 2) * pq("z0 - z1", 2)) == pq("z0^2 - z1^2", 2));
    const auto p = pq("3*z0^2 - z1", 2);
    CHECK(p + Polynomial<Rational>(2, QQ) == p);
    CHECK(pf("2*z0", 1, 5) * pf("3*z0", 1, 5) == pf("z0^2", 1, 5));
    CHECK(to_string(pf("2*z0", 1, 5) * pf("3*z0", 1, 5)) == "z0^2");
    CHECK_THROWS_AS(pf("z0", 1, 5) + pf("z0", 1, 7), Error);
    CHECK_THROWS_AS(pq("z0", 1) + pq("z0", 2), Error);
}

TEST_CASE("differentiation examples") {
    const auto f = pq("z0*z2 - z1^2", 3);
    CHECK(differentiate(f, 0) == pq("z2", 3));
    CHECK(differentiate(f, 1) == pq("-2*z1", 3));
    CHECK(differentiate(pf("z0^5", 1, 5), 0).is_zero());
    CHECK_THROWS_AS(differentiate(f, 3), Error);
}

TEST_CASE("evaluation examples") {
    const std::vector<Rational> p1{1, 1, 0, 0};
    CHECK(evaluate(pq("z0*z2 - z1*z3", 4), p1).is_zero());
    const std::vector<Rational> p2{1, 1, 1};
    CHECK(evaluate(pq("z0*z2 - z1^2", 3), p2).is_zero());
    const std::vector<Rational> p3{1, 2, 3};
    CHECK(evaluate(pq("z0*z2 - z1^2", 3), p3) == Rational(-1));
    const std::vector<Rational> bad{1, 2};
    CHECK_THROWS_AS(evaluate(pq("z0*z2 - z1^2", 3), bad), Error);
}

TEST_CASE("dehomogenization examples") {
    const auto f0 = dehomogenize(pq("z0*z2 - z1^2", 3), 0);
    CHECK(f0.nvars() == 2);
    CHECK(to_string(f0, patch_variable_names(3, 0)) == "x2 - x1^2");

    const auto one = dehomogenize(pq("z0", 3), 0);
    CHECK(one == Polynomial<Rational>::constant(2, Rational(1), QQ));

    const auto f2 = dehomogenize(pq("z0*z2 - z1*z3", 4), 2);
    CHECK(to_string(f2, patch_variable_names(4, 2)) == "x0 - x1*x3");
    CHECK_THROWS_AS(dehomogenize(pq("z0 + z1^2", 2), 0), Error);
}

TEST_CASE_TEMPLATE("Euler identity for random forms", S, Rational, Fp) {
    const FieldSpec f = std::is_same_v<S, Fp> ? FieldSpec::prime(32749) : QQ;
    TrialRng rng(3, 0);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t nvars = rng.below(4) + 2;
        const auto d = static_cast<std::uint32_t>(rng.below(4) + 1);
        const auto form = testing::random_form<S>(rng, nvars, d, f);
        Polynomial<S> lhs(nvars, f);
        for (std::size_t i = 0; i < nvars; ++i)
            lhs += Polynomial<S>::variable(nvars, i, f) * differentiate(form, i);
        CHECK(lhs == form * S::from(BigInt(d), f));
    }
}

TEST_CASE_TEMPLATE("polynomial ring axioms", S, Rational, Fp) {
    const FieldSpec f = std::is_same_v<S, Fp> ? FieldSpec::prime(7) : QQ;
    TrialRng rng(4, 0);
    for (int i = 0; i < 300; ++i) {
        const auto a = testing::random_polynomial<S>(rng, 3, 2, 4, f);
        const auto b = testing::random_polynomial<S>(rng, 3, 2, 4, f);
        const auto c = testing::random_polynomial<S>(rng, 3, 2, 4, f);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) - b == a);
    }
}

TEST_CASE_TEMPLATE("print then parse is the identity", S, Rational, Fp) {
    const FieldSpec f = std::is_same_v<S, Fp> ? FieldSpec::prime(101) : QQ;
    TrialRng rng(8, 0);
    for (int i = 0; i < 300; ++i) {
        const auto p = testing::random_polynomial<S>(rng, 4, 3, 6, f);
        const std::string printed = to_string(p);
        const auto back = parse_polynomial<S>(printed, 4, f);
        CHECK(back == p);
        CHECK(to_string(back) == printed);
    }
}

TEST_CASE("prime field coefficients lie in [0, p)") {
    const FieldSpec f = FieldSpec::prime(11);
    TrialRng rng(9, 0);
    for (int i = 0; i < 200; ++i) {
        auto p = testing::random_polynomial<Fp>(rng, 3, 3, 5, f);
        p *= testing::random_polynomial<Fp>(rng, 3, 2, 3, f);
        p -= testing::random_polynomial<Fp>(rng, 3, 3, 5, f);
        for (std::size_t v = 0; v < 3; ++v) {
            const auto dp = differentiate(p, v);
            for (const auto& [m, c] : dp.terms()) {
                CHECK(c.value() < 11u);
                CHECK_FALSE(c.is_zero());
            }
        }
        for (const auto& [m, c] : p.terms()) CHECK(c.value() < 11u);
    }
    CHECK(to_string(pf("-z0", 1, 7)) == "6*z0");
}

TEST_CASE("composition substitutes linear images") {
    const auto f = pq("z0*z1", 2);
    const std::vector<Polynomial<Rational>> images{pq("z0 + z1", 2), pq("z0 - z1", 2)};
    CHECK(compose(f, images) == pq("z0^2 - z1^2", 2));
}

TEST_CASE("form tuples") {
    const auto t = parse_forms<Rational>({"z0*z2 - z1*z3", "z0^3 + z3^3"}, 4, QQ);
    CHECK(t.degrees() == MultiDegree{2, 3});
    CHECK(t.ambient_dimension() == 3);
    CHECK_THROWS_AS(parse_forms<Rational>({"z0"}, 4, QQ), Error);
    CHECK(parse_forms<Rational>({"z0"}, 4, QQ, DegreePolicy::AllowLinear).degrees() == MultiDegree{1});
    CHECK_THROWS_AS(parse_forms<Rational>({"z0^2 + z1"}, 4, QQ), Error);
    CHECK_THROWS_AS(parse_forms<Rational>({"z0 - z0"}, 4, QQ), Error);
    CHECK_THROWS_AS(parse_forms<Rational>({"1"}, 4, QQ, DegreePolicy::AllowLinear), Error);
    CHECK(infer_variable_count({"z0*z7", "z2^2"}) == 8);
}
