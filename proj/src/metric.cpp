#include "qec/metric.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "qec/errors.hpp"

namespace qec {

namespace {
constexpr std::uint16_t kUnreached = 0xFFFF;
}

DistanceMatrix::DistanceMatrix(std::size_t n, std::vector<std::uint16_t> entries)
    : n_(n), d_(std::move(entries)) {
    if (d_.size() != n_ * n_) throw InvalidArgument("distance matrix entry count does not match n*n");
}

std::uint16_t DistanceMatrix::max() const noexcept {
    return d_.empty() ? 0 : *std::max_element(d_.begin(), d_.end());
}

DistanceMatrix distance_matrix(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<std::uint16_t> d(n * n, kUnreached);
    std::deque<Vertex> queue;
    for (Vertex s = 0; s < n; ++s) {
        std::uint16_t* row = d.data() + s * n;
        row[s] = 0;
        queue.assign(1, s);
        while (!queue.empty()) {
            const Vertex v = queue.front();
            queue.pop_front();
            for (Vertex u = 0; u < n; ++u)
                if (row[u] == kUnreached && g.adjacent(v, u)) {
                    row[u] = static_cast<std::uint16_t>(row[v] + 1);
                    queue.push_back(u);
                }
        }
        for (Vertex u = 0; u < n; ++u)
            if (row[u] == kUnreached) throw DisconnectedError(s, u);
    }
    return DistanceMatrix(n, std::move(d));
}

std::size_t diameter(const Graph& g) { return distance_matrix(g).max(); }

DistanceMatrix distance_from_adjacency_diam2(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<std::uint16_t> d(n * n, 0);
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = 0; y < n; ++y) {
            if (x == y) continue;
            if (g.adjacent(x, y)) {
                d[x * n + y] = 1;
            } else {
                if (common_neighbours(g, x, y) == 0)
                    throw DomainError("diameter exceeds 2: vertices " + std::to_string(x) + " and " +
                                      std::to_string(y) + " have no common neighbour");
                d[x * n + y] = 2;
            }
        }
    return DistanceMatrix(n, std::move(d));
}

}  // namespace qec
