#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "qec/graph.hpp"

namespace qec {

// Seeded 64-bit generator with portable bounded draws (std distributions are
// implementation-defined, which would break golden output across toolchains).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    std::size_t below(std::size_t bound) { return static_cast<std::size_t>(engine_() % bound); }
    std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

// Random spanning tree (each vertex attached to an earlier one) plus independent
// extra edges with probability p; always connected.
Graph random_connected_graph(Rng& rng, std::size_t n, double p);

}  // namespace qec
