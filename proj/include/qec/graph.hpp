#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace qec {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on vertices {0, ..., n-1}, stored as a dense symmetric
// bit matrix. Values are immutable once built; use GraphBuilder to assemble one.
class Graph {
public:
    static constexpr std::size_t kMaxVertices = 4096;

    // Throws InvalidArgument for n outside [1, kMaxVertices], out-of-range
    // endpoints or self-loops. Duplicate edges are collapsed.
    Graph(std::size_t n, std::span<const Edge> edges);

    std::size_t order() const noexcept { return n_; }
    std::size_t size() const noexcept { return m_; }

    bool adjacent(Vertex u, Vertex v) const noexcept {
        return (bits_[u * words_ + v / 64] >> (v % 64)) & 1U;
    }
    std::size_t degree(Vertex v) const;
    std::vector<Vertex> neighbours(Vertex v) const;

    // Edges as (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    // Row of the adjacency bit matrix; bit v of word v/64 is set iff v is a neighbour.
    std::span<const std::uint64_t> row(Vertex v) const noexcept {
        return {bits_.data() + v * words_, words_};
    }

    bool operator==(const Graph&) const = default;

private:
    friend class GraphBuilder;
    Graph(std::size_t n, std::vector<std::uint64_t> bits, std::size_t words, std::size_t m)
        : n_(n), words_(words), m_(m), bits_(std::move(bits)) {}

    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::size_t m_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Mutable staging area for a Graph.
class GraphBuilder {
public:
    explicit GraphBuilder(std::size_t n);

    std::size_t order() const noexcept { return n_; }
    void add_edge(Vertex u, Vertex v);
    void toggle_edge(Vertex u, Vertex v);
    bool adjacent(Vertex u, Vertex v) const noexcept {
        return (bits_[u * words_ + v / 64] >> (v % 64)) & 1U;
    }
    Graph build() &&;

private:
    void check(Vertex u, Vertex v) const;

    std::size_t n_;
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

// Strongly regular parameters (n, r, e, f): r-regular on n vertices, adjacent pairs
// share e neighbours and non-adjacent pairs share f.
struct SrgParams {
    std::int64_t n = 0;
    std::int64_t r = 0;
    std::int64_t e = 0;
    std::int64_t f = 0;

    bool feasible() const noexcept { return r * (r - e - 1) == (n - r - 1) * f; }
    bool operator==(const SrgParams&) const = default;
};

// Families.
Graph complete(std::size_t n);
Graph empty(std::size_t n);
Graph cycle(std::size_t n);
Graph path(std::size_t n);
Graph complete_bipartite(std::size_t m, std::size_t n);

// Operations. Vertex orderings: join and disjoint_union place g1 first; double_graph
// and lex_k2 place all (x,0) before all (x,1); cartesian is row-major over (a, b).
Graph join(const Graph& g1, const Graph& g2);
Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph copies(std::size_t k, const Graph& g);
Graph double_graph(const Graph& g);
Graph lex_k2(const Graph& g);
Graph complement(const Graph& g);
// Vertices of the result follow Graph::edges() order of g.
Graph line_graph(const Graph& g);
Graph cartesian(const Graph& g1, const Graph& g2);
Graph seidel_switch(const Graph& g, std::span<const Vertex> subset);

// Named strongly regular graphs.
Graph petersen();
Graph shrikhande();
Graph clebsch();
Graph schlafli();
Graph triangular(std::size_t n);
Graph grid(std::size_t n);
Graph chang(int which);
Graph hoffman_singleton();

// Edge-list text: optional "n <count>" header, then "u v" per line; blank lines and
// lines starting with '#' are skipped. Errors carry the 1-based line number.
Graph from_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

// Structure queries.
bool is_connected(const Graph& g);
std::optional<std::size_t> regularity(const Graph& g);
std::size_t common_neighbours(const Graph& g, Vertex u, Vertex v);
std::optional<SrgParams> srg_parameters(const Graph& g);
bool is_complete(const Graph& g);
std::size_t clique_number(const Graph& g);
// Length of a shortest cycle, or nullopt for forests.
std::optional<std::size_t> girth(const Graph& g);
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

}  // namespace qec
