#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "oracles.hpp"
#include "qec/closed_forms.hpp"
#include "qec/engine.hpp"
#include "qec/errors.hpp"
#include "qec/expr.hpp"
#include "qec/random.hpp"

using namespace qec;

namespace {

std::vector<std::pair<std::string, Graph>> generators_up_to(std::size_t max_n) {
    std::vector<std::pair<std::string, Graph>> out;
    for (std::size_t n = 2; n <= max_n; ++n) {
        out.emplace_back("K", complete(n));
        out.emplace_back("P", path(n));
        if (n >= 3) out.emplace_back("C", cycle(n));
        for (std::size_t m = 1; m < n; ++m) out.emplace_back("Kb", complete_bipartite(m, n - m));
        if (n >= 4) out.emplace_back("wheel", join(cycle(n - 1), complete(1)));
    }
    for (std::size_t k = 1; 2 * k + 1 <= max_n; ++k) out.emplace_back("friendship", join(copies(k, complete(2)), complete(1)));
    return out;
}

bool symmetric_loopless(const Graph& g) {
    for (Vertex u = 0; u < g.order(); ++u) {
        if (g.adjacent(u, u)) return false;
        for (Vertex v = 0; v < g.order(); ++v)
            if (g.adjacent(u, v) != g.adjacent(v, u)) return false;
    }
    return true;
}

std::array<double, 3> eig3_analytic(const Matrix& a) {
    const double p1 = a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) + a(1, 2) * a(1, 2);
    const double q = (a(0, 0) + a(1, 1) + a(2, 2)) / 3.0;
    const double p2 = std::pow(a(0, 0) - q, 2) + std::pow(a(1, 1) - q, 2) + std::pow(a(2, 2) - q, 2) + 2.0 * p1;
    if (p2 == 0.0) return {q, q, q};
    const double p = std::sqrt(p2 / 6.0);
    Matrix b(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) b(i, j) = (a(i, j) - (i == j ? q : 0.0)) / p;
    const double det = b(0, 0) * (b(1, 1) * b(2, 2) - b(1, 2) * b(2, 1)) - b(0, 1) * (b(1, 0) * b(2, 2) - b(1, 2) * b(2, 0)) +
                       b(0, 2) * (b(1, 0) * b(2, 1) - b(1, 1) * b(2, 0));
    const double phi = std::acos(std::clamp(det / 2.0, -1.0, 1.0)) / 3.0;
    const double e1 = q + 2.0 * p * std::cos(phi);
    const double e3 = q + 2.0 * p * std::cos(phi + 2.0 * std::numbers::pi / 3.0);
    return {e1, 3.0 * q - e1 - e3, e3};
}

}  // namespace

TEST_CASE("constructor outputs are symmetric and loopless") {
    std::vector<Graph> graphs{petersen(), shrikhande(), clebsch(), schlafli(), hoffman_singleton(), chang(1), chang(2),
                              chang(3), triangular(6), grid(4), double_graph(cycle(5)), lex_k2(path(4)),
                              complement(cycle(7)), line_graph(petersen()), cartesian(cycle(4), path(3))};
    for (auto& [name, g] : generators_up_to(9)) graphs.push_back(g);
    for (const Graph& g : graphs) CHECK(symmetric_loopless(g));
}

TEST_CASE("edge counts of operations") {
    Rng rng(2);
    for (int t = 0; t < 20; ++t) {
        const Graph a = random_connected_graph(rng, rng.between(1, 9), 0.3);
        const Graph b = random_connected_graph(rng, rng.between(1, 9), 0.3);
        const Graph j = join(a, b);
        CHECK(j.size() == a.size() + b.size() + a.order() * b.order());
        CHECK(diameter(j) <= 2);
        CHECK(double_graph(a).order() == 2 * a.order());
        CHECK(double_graph(a).size() == 4 * a.size());
        CHECK(lex_k2(a).size() == 4 * a.size() + a.order());
    }
}

TEST_CASE("seidel switching is an involution") {
    Rng rng(4);
    for (int t = 0; t < 20; ++t) {
        const Graph g = random_connected_graph(rng, rng.between(2, 12), 0.4);
        std::vector<Vertex> s;
        for (Vertex v = 0; v < g.order(); ++v)
            if (rng.below(2)) s.push_back(v);
        CHECK(seidel_switch(seidel_switch(g, s), s) == g);
        std::vector<Vertex> all(g.order());
        for (Vertex v = 0; v < g.order(); ++v) all[v] = v;
        CHECK(seidel_switch(g, all) == g);
    }
}

TEST_CASE("SRG families") {
    for (std::size_t n = 4; n <= 9; ++n) {
        const auto p = srg_parameters(line_graph(complete(n)));
        const auto nn = static_cast<std::int64_t>(n);
        REQUIRE(p.has_value());
        CHECK(*p == SrgParams{nn * (nn - 1) / 2, 2 * (nn - 2), nn - 2, 4});
        CHECK(line_graph(complete(n)) == triangular(n));
    }
    for (std::size_t n = 3; n <= 7; ++n) {
        const auto nn = static_cast<std::int64_t>(n);
        CHECK(srg_parameters(grid(n)) == std::optional<SrgParams>(SrgParams{nn * nn, 2 * (nn - 1), nn - 2, 2}));
    }
    for (int i = 1; i <= 3; ++i) CHECK(clique_number(chang(i)) < 7);
    CHECK(clique_number(triangular(8)) == 7);
}

TEST_CASE("lexicographic product distances have the block form [[D, D+I], [D+I, D]]") {
    Rng rng(23);
    for (int t = 0; t < 20; ++t) {
        const Graph g = random_connected_graph(rng, rng.between(2, 10), 0.4 * rng.unit());
        const std::size_t n = g.order();
        const auto d = distance_matrix(g);
        const auto dl = distance_matrix(lex_k2(g));
        bool ok = true;
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                const int diag = x == y ? 1 : 0;
                ok = ok && dl(x, y) == d(x, y) && dl(n + x, n + y) == d(x, y) && dl(x, n + y) == d(x, y) + diag &&
                     dl(n + x, y) == d(x, y) + diag;
            }
        CHECK(ok);
    }
}

TEST_CASE("join distances equal 2J - 2I - A") {
    const Graph g = join(path(4), cycle(5));
    const auto d = distance_matrix(g);
    for (Vertex x = 0; x < g.order(); ++x)
        for (Vertex y = 0; y < g.order(); ++y) CHECK(d(x, y) == (x == y ? 0 : (g.adjacent(x, y) ? 1 : 2)));
}

TEST_CASE("spectral invariants") {
    Rng rng(6);
    for (int t = 0; t < 20; ++t) {
        const Graph g = random_connected_graph(rng, rng.between(2, 20), 0.3);
        const double n = static_cast<double>(g.order());
        CHECK(std::abs(adjacency_spectrum(g).sum()) <= 1e-9 * n);
        CHECK(std::abs(distance_spectrum(g).sum()) <= 1e-9 * n);
    }
    for (const Graph& g : {petersen(), cycle(8), clebsch(), hoffman_singleton(), double_graph(cycle(5))}) {
        const auto s = adjacency_spectrum(g);
        const double r = static_cast<double>(*regularity(g));
        CHECK(s.largest() == doctest::Approx(r).epsilon(1e-10));
        CHECK(s.second() < r - 1e-8);
    }
    for (const Graph& g : {petersen(), shrikhande(), clebsch(), schlafli(), chang(2), triangular(7), grid(5),
                           hoffman_singleton(), cycle(5)}) {
        const auto p = *srg_parameters(g);
        const auto groups = adjacency_spectrum(g).grouped();
        REQUIRE(groups.size() == 3);
        const double b = static_cast<double>(p.f - p.e), c = static_cast<double>(p.f - p.r);
        const double disc = std::sqrt(b * b - 4.0 * c);
        CHECK(groups[0].first == doctest::Approx(static_cast<double>(p.r)));
        CHECK(groups[1].first == doctest::Approx((-b + disc) / 2).epsilon(1e-10));
        CHECK(groups[2].first == doctest::Approx((-b - disc) / 2).epsilon(1e-10));
    }
}

TEST_CASE("small symmetric matrices match characteristic-polynomial roots") {
    Rng rng(8);
    auto entry = [&] { return static_cast<double>(rng.between(0, 10)) - 5.0; };
    for (int t = 0; t < 500; ++t) {
        Matrix a(2, 2);
        a(0, 0) = entry();
        a(1, 1) = entry();
        a(0, 1) = a(1, 0) = entry();
        const double mid = (a(0, 0) + a(1, 1)) / 2, rad = std::hypot((a(0, 0) - a(1, 1)) / 2, a(0, 1));
        const auto s = sym_eigenvalues(a);
        CHECK(std::abs(s.largest() - (mid + rad)) < 1e-10);
        CHECK(std::abs(s.smallest() - (mid - rad)) < 1e-10);

        Matrix b(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j <= i; ++j) b(i, j) = b(j, i) = entry();
        const auto want = eig3_analytic(b);
        const auto sb = sym_eigenvalues(b);
        const auto got = sb.values();
        for (int i = 0; i < 3; ++i) CHECK(std::abs(got[i] - want[i]) < 1e-10);
    }
}

TEST_CASE("QEC lower bounds over generators") {
    for (const auto& [name, g] : generators_up_to(9)) {
        CAPTURE(name);
        CAPTURE(g.order());
        const double q = qec::qec(g).value;
        CHECK(q >= -1.0 - 1e-9);
        CHECK((std::abs(q + 1.0) <= 1e-9) == is_complete(g));
        if (!is_complete(g)) CHECK(q >= -2.0 / 3 - 1e-9);
    }
}

TEST_CASE("isometric subgraphs have smaller QEC") {
    Rng rng(12);
    int checked = 0;
    for (int t = 0; t < 60 && checked < 40; ++t) {
        const Graph g = random_connected_graph(rng, rng.between(4, 10), 0.5);
        if (diameter(g) > 2) continue;
        std::vector<Vertex> keep;
        for (Vertex v = 0; v < g.order(); ++v)
            if (rng.unit() < 0.7) keep.push_back(v);
        if (keep.size() < 2) continue;
        const Graph h = induced_subgraph(g, keep);
        if (!is_connected(h)) continue;
        const auto dg = distance_matrix(g), dh = distance_matrix(h);
        bool isometric = true;
        for (std::size_t i = 0; i < keep.size(); ++i)
            for (std::size_t j = 0; j < keep.size(); ++j) isometric = isometric && dh(i, j) == dg(keep[i], keep[j]);
        if (!isometric) continue;
        ++checked;
        CHECK(qec::qec(h).value <= qec::qec(g).value + 1e-9);
    }
    CHECK(checked > 10);
}

TEST_CASE("regular join lower bound and SRG sign dichotomy") {
    const std::vector<RegularPart> parts{complete_part(1), complete_part(4), empty_part(3), cycle_part(5), cycle_part(6),
                                         copies_part(3, complete_part(2)), srg_part({10, 3, 0, 1}),
                                         srg_part({50, 7, 0, 1})};
    for (const auto& a : parts)
        for (const auto& b : parts)
            CHECK(qec_join_regular(a, b).value >= std::max(-2.0 - a.lambda_min, -2.0 - b.lambda_min) - 1e-12);

    const std::vector<std::pair<std::string, Graph>> srgs{
        {"C5", cycle(5)},          {"petersen", petersen()}, {"shrikhande", shrikhande()}, {"clebsch", clebsch()},
        {"schlafli", schlafli()},  {"T(6)", triangular(6)},  {"grid(4)", grid(4)},          {"chang(3)", chang(3)},
        {"hoffman_singleton", hoffman_singleton()}};
    for (const auto& [name, g] : srgs) {
        CAPTURE(name);
        const double q = qec::qec(g).value;
        CHECK((q <= 1e-9) == (lambda_min(g) >= -2.0 - 1e-9));
        for (std::size_t m = 1; m <= 3; ++m) {
            const double qk = qec::qec(join(g, complete(m))).value;
            const double qe = qec::qec(join(g, empty(m))).value;
            if (name == "C5") {
                if (m == 1) CHECK(qk == doctest::Approx(-(3 - std::sqrt(5.0)) / 2));
            } else {
                CHECK(qk >= -1e-9);
                CHECK(qe >= -1e-9);
            }
        }
    }
}

TEST_CASE("regular graphs with lambda_min above -2 are complete or odd cycles") {
    std::vector<Graph> regular{petersen(), cycle(7), cycle(8), complete(5), clebsch(), hoffman_singleton(), cycle(5),
                               double_graph(complete(3)), grid(3), complement(cycle(7)), copies(1, complete(3))};
    for (const Graph& g : regular) {
        if (lambda_min(g) <= -2.0 + 1e-9) continue;
        const bool odd_cycle = *regularity(g) == 2 && g.order() % 2 == 1 && is_connected(g);
        CHECK((is_complete(g) || odd_cycle));
    }
}

TEST_CASE("matched formulas agree with numerics on random expressions") {
    Rng rng(31);
    const char* atoms[] = {"K(3)", "Kbar(2)", "C(5)", "C(6)", "petersen", "K(1)", "Kbar(4)", "2*K(2)", "T(4)", "Kb(2, 3)"};
    int matched = 0;
    for (int t = 0; t < 300; ++t) {
        std::string text = atoms[rng.below(std::size(atoms))];
        const auto shape = rng.below(4);
        if (shape == 1) text += std::string(" + ") + atoms[rng.below(std::size(atoms))];
        if (shape == 2) text = "double(" + text + ")";
        if (shape == 3) text = "lex2(" + text + ")";
        const auto e = expr::parse(text);
        const auto f = expr::match_formula(*e);
        const Graph g = expr::eval_expr(*e);
        if (!f || g.order() > 60 || !is_connected(g)) continue;
        ++matched;
        CAPTURE(text);
        CHECK(std::abs(f->value - qec::qec(g).value) <= 1e-7);
    }
    CHECK(matched > 100);
}

TEST_CASE("parser fuzz: rejections carry offsets") {
    const char* tokens[] = {"K", "Kbar", "C", "petersen", "(", ")", ",", "+", "*", "3", "12", "union", "join",
                            "double", "lex2", "file", "\"x\"", " ", "foo", "-", "0", "99999999999999999999", "@"};
    Rng rng(77);
    int accepted = 0;
    for (int t = 0; t < 10000; ++t) {
        std::string text;
        const auto len = rng.between(1, 8);
        for (std::size_t i = 0; i < len; ++i) text += tokens[rng.below(std::size(tokens))];
        try {
            const auto e = expr::parse(text);
            ++accepted;
            CHECK(*expr::parse(expr::render(*e)) == *e);
        } catch (const ParseError& err) {
            CHECK(err.offset() >= 1);
            CHECK(err.offset() <= text.size() + 1);
        }
    }
    CHECK(accepted > 0);
}
