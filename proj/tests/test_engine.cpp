#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "qec/engine.hpp"
#include "qec/errors.hpp"
#include "qec/random.hpp"

using namespace qec;

TEST_CASE("hyperplane basis is orthonormal and orthogonal to ones") {
    for (std::size_t n : {2u, 3u, 7u, 20u}) {
        const Matrix q = hyperplane_basis(n);
        REQUIRE(q.rows() == n);
        REQUIRE(q.cols() == n - 1);
        double worst = 0.0;
        for (std::size_t a = 0; a + 1 < n; ++a) {
            const auto ca = q.column(a);
            double sum = 0.0;
            for (double x : ca) sum += x;
            worst = std::max(worst, std::abs(sum));
            for (std::size_t b = 0; b + 1 < n; ++b)
                worst = std::max(worst, std::abs(dot(ca, q.column(b)) - (a == b ? 1.0 : 0.0)));
        }
        CHECK(worst < 1e-14);
    }
    CHECK_THROWS_AS(hyperplane_basis(1), InvalidArgument);
}

TEST_CASE("small exact values") {
    CHECK(qec::qec(complete(2)).value == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(qec::qec(path(3)).value == doctest::Approx(-2.0 / 3).epsilon(1e-12));
    CHECK(qec::qec(cycle(4)).value == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(std::abs(qec::qec(petersen()).value) < 1e-12);
    CHECK(qec::qec(hoffman_singleton()).value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(qec::qec(complete(1)), DomainError);
    CHECK_THROWS_AS(qec::qec(empty(3)), DisconnectedError);
}

TEST_CASE("methods agree with the Jacobi reference") {
    Rng rng(5);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = rng.between(3, 12);
        const Graph g = random_connected_graph(rng, n, 0.5 * rng.unit());
        const double ref = oracle::qec(g);
        CHECK(qec_compression(g).value == doctest::Approx(ref).epsilon(1e-9));
        CHECK(qec_stationary(g).value == doctest::Approx(ref).epsilon(1e-9));
        if (diameter(g) <= 2) CHECK(qec_diam2(g).value == doctest::Approx(ref).epsilon(1e-9));
        CHECK_NOTHROW(qec::qec(g, Dispatch::verify));
    }
}

TEST_CASE("dispatcher picks the cheapest applicable method") {
    CHECK(qec::qec(petersen()).method == Method::diam2_regular);
    CHECK(qec::qec(join(cycle(5), empty(2))).method == Method::diam2_general);
    CHECK(qec::qec(path(5)).method == Method::compression);
    CHECK(qec_with(path(5), Method::stationary).method == Method::stationary);
    CHECK_THROWS_AS(qec_with(path(5), Method::formula), InvalidArgument);
    CHECK_THROWS_AS(qec_diam2(path(4)), DomainError);
    CHECK_THROWS_AS(qec_regular_diam2(join(cycle(5), empty(2))), DomainError);
    CHECK_THROWS_AS(qec_stationary(complete(2)), DomainError);
}

TEST_CASE("witnesses satisfy the constraints") {
    Rng rng(9);
    std::vector<Graph> graphs{petersen(), path(6), cycle(9), join(cycle(6), complete(3)), double_graph(path(4))};
    for (int t = 0; t < 15; ++t) graphs.push_back(random_connected_graph(rng, rng.between(3, 15), 0.3));
    for (const Graph& g : graphs) {
        const auto d = distance_matrix(g);
        for (Method m : {Method::compression, Method::stationary}) {
            const auto r = qec_with(g, m);
            REQUIRE(r.witness.has_value());
            const auto c = check_witness(d, r);
            CHECK(c.ok());
        }
        if (d.max() <= 2) {
            const auto r = qec_diam2(g);
            if (r.witness) CHECK(check_witness(d, r).ok());
        }
    }
}

TEST_CASE("stationary points solve the Lagrange system") {
    for (const Graph& g : {path(5), cycle(7), join(cycle(5), complete(1)), double_graph(path(3))}) {
        const auto d = distance_matrix(g);
        const Matrix dm = to_matrix(d);
        const auto points = stationary_points(d);
        REQUIRE_FALSE(points.empty());
        for (std::size_t i = 1; i < points.size(); ++i) CHECK(points[i - 1].lambda >= points[i].lambda);
        CHECK(points.front().lambda == doctest::Approx(qec_compression(d).value).epsilon(1e-10));
        for (const auto& p : points) {
            const auto df = dm * std::span<const double>(p.f);
            double residual = 0.0, sum = 0.0, norm = 0.0;
            for (std::size_t i = 0; i < p.f.size(); ++i) {
                residual = std::max(residual, std::abs(df[i] - p.lambda * p.f[i] - p.mu / 2.0));
                sum += p.f[i];
                norm += p.f[i] * p.f[i];
            }
            CHECK(residual < 1e-8);
            CHECK(std::abs(sum) < 1e-9);
            CHECK(norm == doctest::Approx(1.0).epsilon(1e-10));
            CHECK(quadratic_form(dm, p.f) == doctest::Approx(p.lambda).epsilon(1e-9));
        }
    }
}

TEST_CASE("QEC bounds") {
    Rng rng(21);
    for (int t = 0; t < 25; ++t) {
        const Graph g = random_connected_graph(rng, rng.between(2, 14), 0.4 * rng.unit());
        const double q = qec::qec(g).value;
        const auto ds = distance_spectrum(g);
        CHECK(q >= ds.second() - 1e-9);
        CHECK(q < ds.largest());
        if (is_complete(g))
            CHECK(q == doctest::Approx(-1.0));
        else
            CHECK(q >= -2.0 / 3 - 1e-9);
    }
}
