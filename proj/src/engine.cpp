#include "qec/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qec/errors.hpp"

namespace qec {

std::string_view to_string(Method m) {
    switch (m) {
        case Method::compression: return "compression";
        case Method::stationary: return "stationary";
        case Method::diam2_general: return "diam2_general";
        case Method::diam2_regular: return "diam2_regular";
        case Method::formula: return "formula";
    }
    return "unknown";
}

namespace {

void require_order(const Graph& g, std::size_t min_n, std::string_view who) {
    if (g.order() < min_n)
        throw DomainError(std::string(who) + " requires at least " + std::to_string(min_n) +
                          " vertices, got " + std::to_string(g.order()));
}

// Householder reflector H = I - beta v v^T with v = 1/sqrt(n) - e_0, so H maps
// 1/sqrt(n) to e_0 and its trailing columns span the hyperplane.
struct Reflector {
    std::vector<double> v;
    double beta = 0.0;

    explicit Reflector(std::size_t n) : v(n, 1.0 / std::sqrt(static_cast<double>(n))) {
        v[0] -= 1.0;
        const double vv = dot(v, v);
        beta = vv > 0.0 ? 2.0 / vv : 0.0;
    }

    // Q^T M Q where Q is H without its first column: the trailing block of H M H.
    Matrix compress(const Matrix& m) const {
        const std::size_t n = v.size();
        const auto mv = m * std::span<const double>(v);
        const double vmv = dot(v, mv);
        Matrix out(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 1; j < n; ++j)
                out(i - 1, j - 1) = m(i, j) - beta * v[i] * mv[j] - beta * mv[i] * v[j] +
                                    beta * beta * v[i] * vmv * v[j];
        return out;
    }

    // Q y for y of length n - 1.
    std::vector<double> expand(std::span<const double> y) const {
        const std::size_t n = v.size();
        std::vector<double> x(n, 0.0);
        for (std::size_t i = 1; i < n; ++i) x[i] = y[i - 1];
        const double s = beta * dot(v, x);
        for (std::size_t i = 0; i < n; ++i) x[i] -= s * v[i];
        return x;
    }
};

// Remove the all-ones component and rescale to unit length.
std::vector<double> normalize_in_hyperplane(std::vector<double> f) {
    const double n = static_cast<double>(f.size());
    double mean = 0.0;
    for (double x : f) mean += x;
    mean /= n;
    for (double& x : f) x -= mean;
    const double len = std::sqrt(dot(f, f));
    if (len > 0.0)
        for (double& x : f) x /= len;
    return f;
}

struct Compressed {
    Reflector h;
    EigenDecomposition eig;
};

Compressed compressed_eigen(const Matrix& m) {
    Reflector h(m.rows());
    auto eig = sym_eigen(h.compress(m));
    return {std::move(h), std::move(eig)};
}

}  // namespace

Matrix hyperplane_basis(std::size_t n) {
    if (n < 2) throw InvalidArgument("hyperplane basis requires n >= 2");
    Reflector h(n);
    Matrix q(n, n - 1);
    std::vector<double> y(n - 1, 0.0);
    for (std::size_t j = 0; j + 1 < n; ++j) {
        y.assign(n - 1, 0.0);
        y[j] = 1.0;
        const auto col = h.expand(y);
        for (std::size_t i = 0; i < n; ++i) q(i, j) = col[i];
    }
    return q;
}

// ---------------------------------------------------------------------------
// Compression

QecResult qec_compression(const DistanceMatrix& d) {
    if (d.size() < 2) throw DomainError("QEC requires at least 2 vertices");
    auto [h, eig] = compressed_eigen(to_matrix(d));
    auto f = normalize_in_hyperplane(h.expand(eig.vectors.column(0)));
    return {eig.values.front(), Method::compression, std::move(f)};
}

QecResult qec_compression(const Graph& g) {
    require_order(g, 2, "compression method");
    return qec_compression(distance_matrix(g));
}

// ---------------------------------------------------------------------------
// Stationary points

std::vector<StationaryPoint> stationary_points(const DistanceMatrix& dm) {
    const std::size_t n = dm.size();
    const Matrix d = to_matrix(dm);
    const auto eig = sym_eigen(d);
    const double norm = std::max(1.0, d.frobenius_norm());
    const double sqrt_n = std::sqrt(static_cast<double>(n));

    struct Group {
        double value;
        std::vector<std::size_t> columns;
        std::vector<double> ones_coeff;  // V_k^T 1
        double weight;                   // |V_k^T 1|^2
    };
    std::vector<Group> groups;
    for (std::size_t k = 0; k < n; ++k) {
        if (groups.empty() || groups.back().value - eig.values[k] > Spectrum::kGroupTolerance)
            groups.push_back({eig.values[k], {}, {}, 0.0});
        auto& grp = groups.back();
        grp.columns.push_back(k);
        double c = 0.0;
        for (std::size_t i = 0; i < n; ++i) c += eig.vectors(i, k);
        grp.ones_coeff.push_back(c);
        grp.weight += c * c;
    }
    for (auto& grp : groups) {
        double mean = 0.0;
        for (auto k : grp.columns) mean += eig.values[k];
        grp.value = mean / static_cast<double>(grp.columns.size());
    }

    const double main_threshold = 1e-9 * sqrt_n;
    auto is_main = [&](const Group& grp) { return std::sqrt(grp.weight) > main_threshold; };

    std::vector<StationaryPoint> points;

    // mu = 0: an eigenvector of D inside the hyperplane.
    for (const auto& grp : groups) {
        if (grp.columns.size() < 2 && is_main(grp)) continue;
        std::vector<double> f(n, 0.0);
        if (!is_main(grp)) {
            f = eig.vectors.column(grp.columns.front());
        } else {
            // Combination of the eigenspace basis orthogonal to V_k^T 1: take the basis
            // direction least aligned with it and remove the aligned part.
            const auto& c = grp.ones_coeff;
            std::size_t pick = 0;
            for (std::size_t j = 1; j < c.size(); ++j)
                if (std::abs(c[j]) < std::abs(c[pick])) pick = j;
            std::vector<double> coeff(c.size(), 0.0);
            coeff[pick] = 1.0;
            for (std::size_t j = 0; j < c.size(); ++j) coeff[j] -= c[pick] * c[j] / grp.weight;
            for (std::size_t j = 0; j < c.size(); ++j)
                for (std::size_t i = 0; i < n; ++i) f[i] += coeff[j] * eig.vectors(i, grp.columns[j]);
        }
        points.push_back({normalize_in_hyperplane(std::move(f)), grp.value, 0.0});
    }

    // mu != 0: roots of phi(lambda) = sum_k w_k / (lambda_k - lambda) over main groups.
    std::vector<const Group*> poles;
    for (const auto& grp : groups)
        if (is_main(grp)) poles.push_back(&grp);
    auto phi = [&](double lambda) {
        double s = 0.0;
        for (const auto* p : poles) s += p->weight / (p->value - lambda);
        return s;
    };
    const double eps = 1e-9 * norm;
    for (std::size_t k = 0; k + 1 < poles.size(); ++k) {
        double hi = poles[k]->value - eps;
        double lo = poles[k + 1]->value + eps;
        double root;
        if (lo >= hi || phi(lo) >= 0.0) {
            root = lo;
        } else if (phi(hi) <= 0.0) {
            root = hi;
        } else {
            for (int it = 0; it < 200 && hi - lo > 1e-11; ++it) {
                const double mid = 0.5 * (lo + hi);
                if (mid <= lo || mid >= hi) break;
                (phi(mid) < 0.0 ? lo : hi) = mid;
            }
            root = 0.5 * (lo + hi);
        }
        // g = (D - root)^{-1} 1 restricted to main components; f = g / |g|, mu = 2 / |g|.
        std::vector<double> g(n, 0.0);
        for (const auto* p : poles) {
            const double scale = 1.0 / (p->value - root);
            for (std::size_t j = 0; j < p->columns.size(); ++j)
                for (std::size_t i = 0; i < n; ++i)
                    g[i] += scale * p->ones_coeff[j] * eig.vectors(i, p->columns[j]);
        }
        const double len = std::sqrt(dot(g, g));
        points.push_back({normalize_in_hyperplane(std::move(g)), root, 2.0 / len});
    }

    std::sort(points.begin(), points.end(),
              [](const StationaryPoint& a, const StationaryPoint& b) { return a.lambda > b.lambda; });
    return points;
}

QecResult qec_stationary(const Graph& g) {
    require_order(g, 3, "stationary method");
    auto points = stationary_points(distance_matrix(g));
    if (points.empty()) throw Error("stationary set is empty");
    return {points.front().lambda, Method::stationary, std::move(points.front().f)};
}

// ---------------------------------------------------------------------------
// Diameter <= 2

namespace {

void require_diam2(const Graph& g) {
    if (!is_connected(g)) (void)distance_matrix(g);  // throws DisconnectedError
    (void)distance_from_adjacency_diam2(g);
}

}  // namespace

QecResult qec_diam2(const Graph& g) {
    require_order(g, 2, "diameter-2 method");
    require_diam2(g);
    auto [h, eig] = compressed_eigen(adjacency_matrix(g));
    const std::size_t last = eig.values.size() - 1;
    auto f = normalize_in_hyperplane(h.expand(eig.vectors.column(last)));
    return {-2.0 - eig.values[last], Method::diam2_general, std::move(f)};
}

QecResult qec_regular_diam2(const Graph& g) {
    require_order(g, 2, "regular diameter-2 method");
    require_diam2(g);
    if (!regularity(g)) throw DomainError("regular diameter-2 method requires a regular graph");
    const auto eig = sym_eigen(adjacency_matrix(g));
    const std::size_t last = eig.values.size() - 1;
    auto f = normalize_in_hyperplane(eig.vectors.column(last));
    return {-2.0 - eig.values[last], Method::diam2_regular, std::move(f)};
}

// ---------------------------------------------------------------------------
// Dispatch

QecResult qec_with(const Graph& g, Method m) {
    switch (m) {
        case Method::compression: return qec_compression(g);
        case Method::stationary: return qec_stationary(g);
        case Method::diam2_general: return qec_diam2(g);
        case Method::diam2_regular: return qec_regular_diam2(g);
        case Method::formula: break;
    }
    throw InvalidArgument("method '" + std::string(to_string(m)) + "' is not a numeric route");
}

QecResult qec(const Graph& g, Dispatch mode) {
    require_order(g, 2, "QEC");
    const auto d = distance_matrix(g);
    const bool diam2 = d.max() <= 2;
    const bool regular = regularity(g).has_value();

    QecResult chosen = diam2 && regular ? qec_regular_diam2(g)
                       : diam2          ? qec_diam2(g)
                                        : qec_compression(d);
    if (mode == Dispatch::automatic) return chosen;

    std::vector<QecResult> all{qec_compression(d)};
    if (g.order() >= 3) all.push_back(qec_stationary(g));
    if (diam2) all.push_back(qec_diam2(g));
    if (diam2 && regular) all.push_back(qec_regular_diam2(g));
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            if (std::abs(all[i].value - all[j].value) > kMethodAgreement)
                throw Error("QEC methods disagree: " + std::string(to_string(all[i].method)) + " = " +
                            std::to_string(all[i].value) + ", " + std::string(to_string(all[j].method)) +
                            " = " + std::to_string(all[j].value));
    return chosen;
}

WitnessCheck check_witness(const DistanceMatrix& dm, const QecResult& r) {
    WitnessCheck c;
    if (!r.witness) {
        c.norm_error = c.orthogonality = c.value_error = std::numeric_limits<double>::infinity();
        return c;
    }
    const auto& f = *r.witness;
    double sum = 0.0;
    for (double x : f) sum += x;
    c.norm_error = std::abs(dot(f, f) - 1.0);
    c.orthogonality = std::abs(sum);
    c.value_error = std::abs(quadratic_form(to_matrix(dm), f) - r.value);
    return c;
}

}  // namespace qec
