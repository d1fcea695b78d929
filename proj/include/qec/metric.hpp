#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qec/graph.hpp"

namespace qec {

// Dense symmetric matrix of shortest-path lengths of a connected graph.
class DistanceMatrix {
public:
    DistanceMatrix(std::size_t n, std::vector<std::uint16_t> entries);

    std::size_t size() const noexcept { return n_; }
    std::uint16_t operator()(std::size_t x, std::size_t y) const noexcept { return d_[x * n_ + y]; }
    std::uint16_t max() const noexcept;

    bool operator==(const DistanceMatrix&) const = default;

private:
    std::size_t n_;
    std::vector<std::uint16_t> d_;
};

// One breadth-first search per source. Throws DisconnectedError naming an
// unreachable pair.
DistanceMatrix distance_matrix(const Graph& g);

std::size_t diameter(const Graph& g);

// 2J - 2I - A. Throws DomainError unless g is connected with diameter at most 2.
DistanceMatrix distance_from_adjacency_diam2(const Graph& g);

}  // namespace qec
