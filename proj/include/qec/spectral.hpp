#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "qec/graph.hpp"
#include "qec/metric.hpp"

namespace qec {

// Dense row-major real matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

    std::vector<double> column(std::size_t j) const;
    Matrix transpose() const;
    double frobenius_norm() const;
    double trace() const;
    bool is_symmetric(double tol) const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend std::vector<double> operator*(const Matrix& a, std::span<const double> x);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

Matrix adjacency_matrix(const Graph& g);
Matrix to_matrix(const DistanceMatrix& d);

double dot(std::span<const double> a, std::span<const double> b);
double quadratic_form(const Matrix& m, std::span<const double> x);

// Eigenvalues sorted descending, with multiplicity grouping at an absolute tolerance.
class Spectrum {
public:
    static constexpr double kGroupTolerance = 1e-8;

    explicit Spectrum(std::vector<double> values_desc);

    std::span<const double> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    double largest() const { return values_.front(); }
    double second() const { return values_.size() > 1 ? values_[1] : values_.front(); }
    double smallest() const { return values_.back(); }
    double sum() const;

    // (value, multiplicity) pairs in descending order; value is the group mean.
    std::vector<std::pair<double, std::size_t>> grouped(double tol = kGroupTolerance) const;

private:
    std::vector<double> values_;
};

// Eigenvalues (descending) and matching orthonormal eigenvectors as columns.
struct EigenDecomposition {
    std::vector<double> values;
    Matrix vectors;
};

// Householder reduction to tridiagonal form followed by the implicit QL iteration.
// Throws InvalidArgument for non-square or asymmetric (beyond 1e-12) input and Error
// if an eigenvalue fails to converge within 100 iterations.
EigenDecomposition sym_eigen(const Matrix& m);
Spectrum sym_eigenvalues(const Matrix& m);

Spectrum adjacency_spectrum(const Graph& g);
double lambda_min(const Graph& g);
// Throws DisconnectedError for disconnected g.
Spectrum distance_spectrum(const Graph& g);

}  // namespace qec
