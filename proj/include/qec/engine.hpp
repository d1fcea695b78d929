#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "qec/graph.hpp"
#include "qec/metric.hpp"
#include "qec/spectral.hpp"

namespace qec {

enum class Method { compression, stationary, diam2_general, diam2_regular, formula };

std::string_view to_string(Method m);

// Value of the quadratic embedding constant together with the route that produced
// it and, when available, a unit vector f* orthogonal to the all-ones vector with
// <f*, D f*> = value.
struct QecResult {
    double value = 0.0;
    Method method = Method::compression;
    std::optional<std::vector<double>> witness;
};

// Solution of (D - lambda) f = (mu / 2) 1 with <f, f> = 1 and <1, f> = 0.
struct StationaryPoint {
    std::vector<double> f;
    double lambda = 0.0;
    double mu = 0.0;
};

// Orthonormal basis (n x (n-1)) of the hyperplane orthogonal to the all-ones
// vector: the trailing columns of the Householder reflector sending 1/sqrt(n) to e_0.
Matrix hyperplane_basis(std::size_t n);

// Maximum of <f, D f> over the unit sphere of the hyperplane, as the top eigenvalue
// of the compressed matrix Q^T D Q.
QecResult qec_compression(const Graph& g);
QecResult qec_compression(const DistanceMatrix& d);

// Every point of the stationary set of the Lagrangian, enumerated from the
// eigendecomposition of D: eigenvalues whose eigenspace meets the hyperplane, and
// roots of <1, (D - lambda)^{-1} 1> between consecutive main eigenvalues.
std::vector<StationaryPoint> stationary_points(const DistanceMatrix& d);
QecResult qec_stationary(const Graph& g);

// -2 - min <f, A f> over the same constraint set. Requires diameter <= 2.
QecResult qec_diam2(const Graph& g);
// -2 - lambda_min(A). Requires a regular graph with diameter <= 2.
QecResult qec_regular_diam2(const Graph& g);

enum class Dispatch { automatic, verify };

// Routes to the cheapest applicable method. In verify mode every applicable method
// runs and a pairwise disagreement above kMethodAgreement throws Error.
QecResult qec(const Graph& g, Dispatch mode = Dispatch::automatic);
QecResult qec_with(const Graph& g, Method m);

inline constexpr double kMethodAgreement = 1e-7;

struct WitnessCheck {
    double norm_error = 0.0;        // |<f,f> - 1|
    double orthogonality = 0.0;     // |<1,f>|
    double value_error = 0.0;       // |<f,Df> - value|
    bool ok(double unit_tol = 1e-9, double value_tol = 1e-8) const {
        return norm_error <= unit_tol && orthogonality <= unit_tol && value_error <= value_tol;
    }
};

WitnessCheck check_witness(const DistanceMatrix& d, const QecResult& r);

}  // namespace qec
