#include "qec/random.hpp"

namespace qec {

Graph random_connected_graph(Rng& rng, std::size_t n, double p) {
    GraphBuilder b(n);
    for (Vertex v = 1; v < n; ++v) b.add_edge(v, rng.below(v));
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!b.adjacent(u, v) && rng.unit() < p) b.add_edge(u, v);
    return std::move(b).build();
}

}  // namespace qec
