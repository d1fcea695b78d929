#include "qec/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qec/errors.hpp"

namespace qec {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw InvalidArgument(what);
}

FormulaValue exact_value(Rational q, std::string source, std::string validity) {
    return {q.to_double(), std::move(source), std::move(validity), q};
}

FormulaValue real_value(double v, std::string source, std::string validity) {
    return {v, std::move(source), std::move(validity), std::nullopt};
}

std::optional<std::int64_t> exact_sqrt(std::int64_t x) {
    if (x < 0) return std::nullopt;
    auto s = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(x))));
    while (s * s > x) --s;
    while ((s + 1) * (s + 1) <= x) ++s;
    if (s * s == x) return s;
    return std::nullopt;
}

std::optional<Rational> lambda_min_cycle_exact(std::int64_t n) {
    if (n % 2 == 0) return Rational(-2);
    if (n == 3) return Rational(-1);
    return std::nullopt;
}

std::string str(std::int64_t x) { return std::to_string(x); }

}  // namespace

// ---------------------------------------------------------------------------
// Regular parts

RegularPart complete_part(std::int64_t n) {
    require(n >= 1, "complete graph requires n >= 1");
    return n == 1 ? RegularPart{1, 0, 0.0, Rational(0)} : RegularPart{n, n - 1, -1.0, Rational(-1)};
}

RegularPart empty_part(std::int64_t n) {
    require(n >= 1, "empty graph requires n >= 1");
    return {n, 0, 0.0, Rational(0)};
}

RegularPart cycle_part(std::int64_t n) {
    require(n >= 3, "cycle requires n >= 3");
    return {n, 2, lambda_min_cycle(n), lambda_min_cycle_exact(n)};
}

RegularPart copies_part(std::int64_t k, const RegularPart& p) {
    require(k >= 1, "copies requires k >= 1");
    return {k * p.n, p.r, p.lambda_min, p.lambda_min_exact};
}

RegularPart srg_part(const SrgParams& p) { return {p.n, p.r, srg_lambda_min(p), srg_lambda_min_exact(p)}; }

// ---------------------------------------------------------------------------
// Baseline families

FormulaValue qec_complete(std::int64_t n) {
    require(n >= 2, "QEC(K_n) requires n >= 2");
    return exact_value(Rational(-1), "complete", "n >= 2");
}

FormulaValue qec_complete_bipartite(std::int64_t m, std::int64_t n) {
    require(m >= 1 && n >= 1, "QEC(K_{m,n}) requires m, n >= 1");
    return exact_value(Rational(2 * (m * n - m - n), m + n), "complete-bipartite", "m >= 1, n >= 1");
}

double lambda_min_cycle(std::int64_t n) {
    require(n >= 3, "lambda_min(C_n) requires n >= 3");
    if (n % 2 == 0) return -2.0;
    const double s = std::sin(std::numbers::pi / (2.0 * static_cast<double>(n)));
    return -2.0 + 4.0 * s * s;
}

FormulaValue qec_cycle(std::int64_t n) {
    require(n >= 3, "QEC(C_n) requires n >= 3");
    if (n % 2 == 0) return exact_value(Rational(0), "cycle", "n >= 4 even");
    if (n == 3) return exact_value(Rational(-1), "cycle", "n >= 3 odd");
    const double c = std::cos(std::numbers::pi / static_cast<double>(n));
    return real_value(-1.0 / (4.0 * c * c), "cycle", "n >= 3 odd");
}

// ---------------------------------------------------------------------------
// Joins of regular graphs

FormulaValue qec_join_regular(const RegularPart& a, const RegularPart& b) {
    for (const auto* p : {&a, &b}) {
        require(p->n >= 1, "regular join part requires n >= 1");
        require(p->r >= 0 && p->r <= p->n - 1, "regular join part degree out of range [0, n-1]");
        require(p->lambda_min <= 1e-12 && p->lambda_min >= -static_cast<double>(p->r) - 1e-9,
                "regular join part lambda_min out of range [-r, 0]");
    }
    const Rational lambda_star(2 * a.n * b.n - a.r * b.n - b.r * a.n, a.n + b.n);
    const std::string validity = "regular G1, G2";

    if (a.lambda_min_exact && b.lambda_min_exact) {
        const Rational best = std::max({-*a.lambda_min_exact, -*b.lambda_min_exact, lambda_star});
        return exact_value(Rational(-2) + best, "regular-join", validity);
    }
    const double best = std::max({-a.lambda_min, -b.lambda_min, lambda_star.to_double()});
    if (best == lambda_star.to_double()) return exact_value(Rational(-2) + lambda_star, "regular-join", validity);
    for (const auto* p : {&a, &b})
        if (p->lambda_min_exact && best == -p->lambda_min)
            return exact_value(Rational(-2) - *p->lambda_min_exact, "regular-join", validity);
    return real_value(-2.0 + best, "regular-join", validity);
}

FormulaValue qec_join_regular(std::int64_t n1, std::int64_t r1, double lmin1, std::int64_t n2, std::int64_t r2,
                              double lmin2) {
    auto exact_if_integral = [](double x) -> std::optional<Rational> {
        if (std::abs(x - std::round(x)) < 1e-12) return Rational(static_cast<std::int64_t>(std::llround(x)));
        return std::nullopt;
    };
    return qec_join_regular(RegularPart{n1, r1, lmin1, exact_if_integral(lmin1)},
                            RegularPart{n2, r2, lmin2, exact_if_integral(lmin2)});
}

FormulaValue qec_complete_split(std::int64_t m, std::int64_t n) {
    require(n >= 2 && m >= 1, "QEC(K_n + Kbar_m) requires n >= 2, m >= 1");
    return exact_value(Rational(m * n - m - 2 * n, m + n), "complete-split", "n >= 2, m >= 1");
}

FormulaValue qec_friendship(std::int64_t n) {
    require(n >= 1, "QEC(F_n) requires n >= 1");
    return exact_value(Rational(-3, 2 * n + 1), "friendship", "n >= 1");
}

FormulaValue qec_cycle_join_complete(std::int64_t n, std::int64_t m) {
    require(n >= 3 && m >= 1, "QEC(C_n + K_m) requires n >= 3, m >= 1");
    const Rational branch(m * n - 4 * m - n, m + n);
    const std::string validity = "n >= 3, m >= 1";
    if (auto lmin = lambda_min_cycle_exact(n))
        return exact_value(std::max(Rational(-2) - *lmin, branch), "cycle-join-complete", validity);
    const double eig_branch = -2.0 - lambda_min_cycle(n);
    if (branch.to_double() >= eig_branch) return exact_value(branch, "cycle-join-complete", validity);
    return real_value(eig_branch, "cycle-join-complete", validity);
}

FormulaValue qec_wheel(std::int64_t n) {
    require(n >= 3, "QEC(W_n) requires n >= 3");
    if (n % 2 == 0) return exact_value(Rational(0), "wheel", "n >= 3");
    if (n == 3) return exact_value(Rational(-1), "wheel", "n >= 3");
    const double s = std::sin(std::numbers::pi / (2.0 * static_cast<double>(n)));
    return real_value(-4.0 * s * s, "wheel", "n >= 3");
}

FormulaValue qec_cycle_join_empty(std::int64_t n, std::int64_t m) {
    require(n >= 3 && m >= 2, "QEC(C_n + Kbar_m) requires n >= 3, m >= 2");
    return exact_value(Rational(2 * m * n - 4 * m - 2 * n, m + n), "cycle-join-empty", "n >= 3, m >= 2");
}

// ---------------------------------------------------------------------------
// Double graph and lexicographic product with K_2

namespace {
constexpr double kQecFloorSlack = 1e-12;
}

FormulaValue qec_double_formula(double q) {
    require(q >= -1.0 - kQecFloorSlack, "QEC value must be >= -1");
    return real_value(2.0 * q + 2.0, "double", "connected G");
}

FormulaValue qec_double_formula(const FormulaValue& q) {
    if (!q.exact) return qec_double_formula(q.value);
    require(*q.exact >= Rational(-1), "QEC value must be >= -1");
    return exact_value(Rational(2) * *q.exact + Rational(2), "double", "connected G");
}

FormulaValue qec_lex2_formula(double q) {
    require(q >= -1.0 - kQecFloorSlack, "QEC value must be >= -1");
    return real_value(2.0 * q + 1.0, "lex-k2", "connected G");
}

FormulaValue qec_lex2_formula(const FormulaValue& q) {
    if (!q.exact) return qec_lex2_formula(q.value);
    require(*q.exact >= Rational(-1), "QEC value must be >= -1");
    return exact_value(Rational(2) * *q.exact + Rational(1), "lex-k2", "connected G");
}

// ---------------------------------------------------------------------------
// Strongly regular graphs

namespace {

void require_srg(const SrgParams& p) {
    require(p.n >= 4 && p.r >= 2 && p.r <= p.n - 2 && p.f >= 1,
            "connected SRG requires n >= 4, 2 <= r <= n-2, f >= 1");
    require(p.r >= p.f, "SRG parameters require r >= f");
    require(p.e >= 0 && p.e < p.r, "SRG parameters require 0 <= e < r");
    require(p.feasible(), "SRG parameters violate r(r-e-1) = (n-r-1)f");
}

}  // namespace

double srg_lambda_min(const SrgParams& p) {
    require_srg(p);
    const double fe = static_cast<double>(p.f - p.e);
    return -(fe + std::sqrt(fe * fe + 4.0 * static_cast<double>(p.r - p.f))) / 2.0;
}

std::optional<Rational> srg_lambda_min_exact(const SrgParams& p) {
    require_srg(p);
    const std::int64_t fe = p.f - p.e;
    if (auto s = exact_sqrt(fe * fe + 4 * (p.r - p.f))) return Rational(-(fe + *s), 2);
    return std::nullopt;
}

FormulaValue qec_srg(const SrgParams& p) {
    const std::string validity = "connected SRG";
    if (auto lmin = srg_lambda_min_exact(p)) return exact_value(Rational(-2) - *lmin, "srg", validity);
    return real_value(-2.0 - srg_lambda_min(p), "srg", validity);
}

SrgParams srg_family_params(SrgFamily family, std::int64_t param) {
    switch (family) {
        case SrgFamily::triangular:
            require(param >= 4, "T(n) is strongly regular for n >= 4");
            return {param * (param - 1) / 2, 2 * (param - 2), param - 2, 4};
        case SrgFamily::grid:
            require(param >= 2, "grid requires n >= 2");
            return {param * param, 2 * (param - 1), param - 2, 2};
        case SrgFamily::cycle5: return {5, 2, 0, 1};
        case SrgFamily::petersen: return {10, 3, 0, 1};
        case SrgFamily::shrikhande: return {16, 6, 2, 2};
        case SrgFamily::clebsch: return {16, 10, 6, 6};
        case SrgFamily::schlafli: return {27, 16, 10, 8};
        case SrgFamily::chang: return {28, 12, 6, 4};
        case SrgFamily::hoffman_singleton: return {50, 7, 0, 1};
        case SrgFamily::higman_sims: return {100, 22, 0, 6};
        case SrgFamily::suzuki: return {1782, 416, 100, 96};
    }
    throw InvalidArgument("unknown SRG family");
}

std::string srg_family_name(SrgFamily family, std::int64_t param) {
    switch (family) {
        case SrgFamily::triangular: return "T(" + str(param) + ")";
        case SrgFamily::grid: return "K" + str(param) + "xK" + str(param);
        case SrgFamily::cycle5: return "C5";
        case SrgFamily::petersen: return "Petersen";
        case SrgFamily::shrikhande: return "Shrikhande";
        case SrgFamily::clebsch: return "Clebsch";
        case SrgFamily::schlafli: return "Schlafli";
        case SrgFamily::chang: return "Chang";
        case SrgFamily::hoffman_singleton: return "Hoffman-Singleton";
        case SrgFamily::higman_sims: return "Higman-Sims";
        case SrgFamily::suzuki: return "Suzuki";
    }
    return "?";
}

FormulaValue qec_srg_join_tables(SrgFamily family, std::int64_t param, JoinPartner partner, std::int64_t m) {
    require(m >= 1, "join tables require m >= 1");
    if (partner == JoinPartner::empty) {
        const bool from_one = family == SrgFamily::triangular || family == SrgFamily::higman_sims ||
                              family == SrgFamily::suzuki;
        require(from_one || m >= 2, srg_family_name(family, param) + " + Kbar_m is tabulated for m >= 2");
    }

    RegularPart srg;
    switch (family) {
        case SrgFamily::higman_sims: srg = {100, 22, -8.0, Rational(-8)}; break;
        case SrgFamily::suzuki: srg = {1782, 416, -16.0, Rational(-16)}; break;
        default: srg = srg_part(srg_family_params(family, param)); break;
    }
    const RegularPart other = partner == JoinPartner::complete ? complete_part(m) : empty_part(m);
    auto v = qec_join_regular(srg, other);
    v.source = "srg-join";
    v.validity = partner == JoinPartner::complete ? "m >= 1" : (m >= 2 ? "m >= 2" : "m >= 1");
    return v;
}

}  // namespace qec
