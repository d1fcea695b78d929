#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qec/closed_forms.hpp"
#include "qec/engine.hpp"
#include "qec/errors.hpp"

using namespace qec;

TEST_CASE("rational arithmetic") {
    constexpr Rational a(6, -8);
    static_assert(a.num() == -3 && a.den() == 4);
    CHECK((a + Rational(1, 4)) == Rational(-1, 2));
    CHECK((a * Rational(4, 3)) == Rational(-1));
    CHECK((a / Rational(3)) == Rational(-1, 4));
    CHECK((Rational(1) - a).str() == "7/4");
    CHECK(Rational(10, 5).str() == "2");
    CHECK(Rational(10, 5).is_integer());
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(-Rational(1, 3) > Rational(-1, 2));
    CHECK_THROWS_AS(Rational(1, 0), InvalidArgument);
}

TEST_CASE("basic family values") {
    CHECK(*qec_complete(5).exact == Rational(-1));
    CHECK(*qec_complete_bipartite(1, 2).exact == Rational(-2, 3));
    CHECK(*qec_complete_bipartite(3, 3).exact == Rational(1));
    CHECK(*qec_cycle(3).exact == Rational(-1));
    CHECK(*qec_cycle(8).exact == Rational(0));
    CHECK(qec_cycle(5).value == doctest::Approx(-1.0 / (4.0 * std::pow(std::cos(std::numbers::pi / 5), 2))));
    CHECK_FALSE(qec_cycle(5).exact.has_value());
    CHECK(lambda_min_cycle(6) == -2.0);
    CHECK(lambda_min_cycle(5) == doctest::Approx(-(1 + std::sqrt(5.0)) / 2));
    CHECK(*qec_friendship(2).exact == Rational(-3, 5));
    CHECK(*qec_complete_split(2, 2).exact == Rational(-1, 2));
    CHECK(*qec_wheel(6).exact == Rational(0));
    CHECK(qec_wheel(5).value == doctest::Approx(-4 * std::pow(std::sin(std::numbers::pi / 10), 2)));
    CHECK(*qec_cycle_join_empty(3, 2).exact == Rational(-2, 5));
    CHECK(*qec_cycle_join_empty(5, 2).exact == Rational(2, 7));
    CHECK(qec_cycle_join_complete(5, 1).value == doctest::Approx(-(3 - std::sqrt(5.0)) / 2));
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(qec_complete(1), InvalidArgument);
    CHECK_THROWS_AS(qec_complete_bipartite(0, 3), InvalidArgument);
    CHECK_THROWS_AS(qec_cycle(2), InvalidArgument);
    CHECK_THROWS_AS(qec_cycle_join_empty(5, 1), InvalidArgument);
    CHECK_THROWS_AS(qec_complete_split(1, 1), InvalidArgument);
    CHECK_THROWS_AS(qec_double_formula(-1.5), InvalidArgument);
    CHECK_THROWS_AS(qec_srg({10, 3, 1, 1}), InvalidArgument);
    CHECK_THROWS_AS(qec_srg({5, 4, 3, 0}), InvalidArgument);
    CHECK_THROWS_AS(qec_srg_join_tables(SrgFamily::petersen, 0, JoinPartner::empty, 1), InvalidArgument);
    CHECK_THROWS_AS(qec_srg_join_tables(SrgFamily::triangular, 3, JoinPartner::complete, 1), InvalidArgument);
    CHECK_THROWS_AS(qec_srg_join_tables(SrgFamily::cycle5, 0, JoinPartner::complete, 0), InvalidArgument);
}

TEST_CASE("regular join formula") {
    // K_{1,1,m} as K_2 + Kbar_m.
    for (std::int64_t m = 1; m <= 10; ++m)
        CHECK(*qec_join_regular(complete_part(2), empty_part(m)).exact == Rational(m - 4, m + 2));
    // Symmetric in its arguments.
    const auto a = qec_join_regular(cycle_part(5), complete_part(3));
    const auto b = qec_join_regular(complete_part(3), cycle_part(5));
    CHECK(a.value == b.value);
    CHECK(a.source == "regular-join");
    // Irrational branch wins: C_5 + K_1.
    CHECK_FALSE(qec_join_regular(cycle_part(5), complete_part(1)).exact.has_value());
    CHECK(copies_part(3, complete_part(2)).n == 6);
    CHECK(copies_part(3, complete_part(2)).r == 1);
}

TEST_CASE("double and lexicographic identities") {
    CHECK(qec_double_formula(-1.0).value == 0.0);
    CHECK(*qec_double_formula(qec_complete_bipartite(1, 2)).exact == Rational(2, 3));
    CHECK(*qec_lex2_formula(qec_complete_bipartite(1, 2)).exact == Rational(-1, 3));
    CHECK_FALSE(qec_lex2_formula(qec_cycle(5)).exact.has_value());
}

TEST_CASE("strongly regular values") {
    const std::pair<SrgParams, std::int64_t> table[] = {
        {{10, 3, 0, 1}, 0},  {{16, 6, 2, 2}, 0}, {{16, 10, 6, 6}, 0},  {{27, 16, 10, 8}, 0},
        {{28, 12, 6, 4}, 0}, {{50, 7, 0, 1}, 1}, {{100, 22, 0, 6}, 6}, {{1782, 416, 100, 96}, 14}};
    for (const auto& [p, v] : table) {
        const auto f = qec_srg(p);
        REQUIRE(f.exact.has_value());
        CHECK(*f.exact == Rational(v));
    }
    CHECK(srg_lambda_min({5, 2, 0, 1}) == doctest::Approx(-(1 + std::sqrt(5.0)) / 2));
    CHECK_FALSE(srg_lambda_min_exact({5, 2, 0, 1}).has_value());
    CHECK(*srg_lambda_min_exact({100, 22, 0, 6}) == Rational(-8));
}

TEST_CASE("join tables") {
    CHECK(*qec_srg_join_tables(SrgFamily::petersen, 0, JoinPartner::complete, 3).exact == Rational(5, 13));
    CHECK(*qec_srg_join_tables(SrgFamily::shrikhande, 0, JoinPartner::empty, 2).exact == Rational(8, 9));
    CHECK(*qec_srg_join_tables(SrgFamily::hoffman_singleton, 0, JoinPartner::complete, 2).exact == Rational(1));
    CHECK(*qec_srg_join_tables(SrgFamily::higman_sims, 0, JoinPartner::complete, 9).exact == Rational(6));
    CHECK(*qec_srg_join_tables(SrgFamily::higman_sims, 0, JoinPartner::complete, 10).exact == Rational(660, 110));
    CHECK(*qec_srg_join_tables(SrgFamily::suzuki, 0, JoinPartner::empty, 10).exact ==
          Rational(3146 * 10 - 3564, 1792));
    CHECK(srg_family_params(SrgFamily::triangular, 6) == SrgParams{15, 8, 4, 4});
    CHECK(srg_family_params(SrgFamily::grid, 4) == SrgParams{16, 6, 2, 2});
}
