#include "qec/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <deque>
#include <sstream>
#include <string>

#include "qec/errors.hpp"

namespace qec {

namespace {

std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

void check_order(std::size_t n) {
    if (n == 0) throw InvalidArgument("graph must have at least one vertex");
    if (n > Graph::kMaxVertices)
        throw InvalidArgument("graph order " + std::to_string(n) + " exceeds cap of " +
                              std::to_string(Graph::kMaxVertices) + " vertices");
}

}  // namespace

// ---------------------------------------------------------------------------
// GraphBuilder

GraphBuilder::GraphBuilder(std::size_t n) : n_(n), words_(words_for(n)) {
    check_order(n);
    bits_.assign(n_ * words_, 0);
}

void GraphBuilder::check(Vertex u, Vertex v) const {
    if (u >= n_ || v >= n_)
        throw InvalidArgument("vertex index out of range: (" + std::to_string(u) + ", " +
                              std::to_string(v) + ") with n = " + std::to_string(n_));
    if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
    check(u, v);
    bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    bits_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

void GraphBuilder::toggle_edge(Vertex u, Vertex v) {
    check(u, v);
    bits_[u * words_ + v / 64] ^= std::uint64_t{1} << (v % 64);
    bits_[v * words_ + u / 64] ^= std::uint64_t{1} << (u % 64);
}

Graph GraphBuilder::build() && {
    std::size_t twice = 0;
    for (auto w : bits_) twice += static_cast<std::size_t>(std::popcount(w));
    return Graph(n_, std::move(bits_), words_, twice / 2);
}

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(std::size_t n, std::span<const Edge> edge_list) {
    GraphBuilder b(n);
    for (auto [u, v] : edge_list) b.add_edge(u, v);
    *this = std::move(b).build();
}

std::size_t Graph::degree(Vertex v) const {
    std::size_t d = 0;
    for (auto w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
    return d;
}

std::vector<Vertex> Graph::neighbours(Vertex v) const {
    std::vector<Vertex> out;
    for (Vertex u = 0; u < n_; ++u)
        if (adjacent(v, u)) out.push_back(u);
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

// ---------------------------------------------------------------------------
// Families

Graph complete(std::size_t n) {
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
    return std::move(b).build();
}

Graph empty(std::size_t n) { return GraphBuilder(n).build(); }

Graph cycle(std::size_t n) {
    if (n < 3) throw InvalidArgument("cycle requires n >= 3, got " + std::to_string(n));
    GraphBuilder b(n);
    for (Vertex v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
    return std::move(b).build();
}

Graph path(std::size_t n) {
    GraphBuilder b(n);
    for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
    return std::move(b).build();
}

Graph complete_bipartite(std::size_t m, std::size_t n) { return join(empty(m), empty(n)); }

// ---------------------------------------------------------------------------
// Operations

Graph join(const Graph& g1, const Graph& g2) {
    const std::size_t n1 = g1.order(), n2 = g2.order();
    GraphBuilder b(n1 + n2);
    for (auto [u, v] : g1.edges()) b.add_edge(u, v);
    for (auto [u, v] : g2.edges()) b.add_edge(n1 + u, n1 + v);
    for (Vertex u = 0; u < n1; ++u)
        for (Vertex v = 0; v < n2; ++v) b.add_edge(u, n1 + v);
    return std::move(b).build();
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    const std::size_t n1 = g1.order();
    GraphBuilder b(n1 + g2.order());
    for (auto [u, v] : g1.edges()) b.add_edge(u, v);
    for (auto [u, v] : g2.edges()) b.add_edge(n1 + u, n1 + v);
    return std::move(b).build();
}

Graph copies(std::size_t k, const Graph& g) {
    if (k == 0) throw InvalidArgument("copies requires k >= 1");
    const std::size_t n = g.order();
    if (k > Graph::kMaxVertices / n) check_order(k * n);
    GraphBuilder b(k * n);
    const auto es = g.edges();
    for (std::size_t c = 0; c < k; ++c)
        for (auto [u, v] : es) b.add_edge(c * n + u, c * n + v);
    return std::move(b).build();
}

Graph double_graph(const Graph& g) {
    const std::size_t n = g.order();
    GraphBuilder b(2 * n);
    for (auto [x, y] : g.edges())
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) b.add_edge(i * n + x, j * n + y);
    return std::move(b).build();
}

Graph lex_k2(const Graph& g) {
    const std::size_t n = g.order();
    GraphBuilder b(2 * n);
    for (auto [x, y] : g.edges())
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) b.add_edge(i * n + x, j * n + y);
    for (Vertex x = 0; x < n; ++x) b.add_edge(x, n + x);
    return std::move(b).build();
}

Graph complement(const Graph& g) {
    const std::size_t n = g.order();
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) b.add_edge(u, v);
    return std::move(b).build();
}

Graph line_graph(const Graph& g) {
    const auto es = g.edges();
    if (es.empty()) throw InvalidArgument("line graph of an edgeless graph is undefined");
    GraphBuilder b(es.size());
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            auto [a, c] = es[i];
            auto [p, q] = es[j];
            if (a == p || a == q || c == p || c == q) b.add_edge(i, j);
        }
    return std::move(b).build();
}

Graph cartesian(const Graph& g1, const Graph& g2) {
    const std::size_t n1 = g1.order(), n2 = g2.order();
    if (n1 > Graph::kMaxVertices / n2) check_order(n1 * n2);
    GraphBuilder b(n1 * n2);
    auto id = [n2](Vertex a, Vertex c) { return a * n2 + c; };
    for (Vertex a = 0; a < n1; ++a)
        for (auto [u, v] : g2.edges()) b.add_edge(id(a, u), id(a, v));
    for (Vertex c = 0; c < n2; ++c)
        for (auto [u, v] : g1.edges()) b.add_edge(id(u, c), id(v, c));
    return std::move(b).build();
}

Graph seidel_switch(const Graph& g, std::span<const Vertex> subset) {
    const std::size_t n = g.order();
    std::vector<bool> in(n, false);
    for (auto v : subset) {
        if (v >= n)
            throw InvalidArgument("switching set contains vertex " + std::to_string(v) +
                                  " outside 0.." + std::to_string(n - 1));
        in[v] = true;
    }
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (g.adjacent(u, v) != (in[u] != in[v])) b.add_edge(u, v);
    return std::move(b).build();
}

// ---------------------------------------------------------------------------
// Named graphs

Graph petersen() {
    // Kneser graph K(5,2): 2-subsets of {0..4}, adjacent iff disjoint.
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) pairs.emplace_back(i, j);
    GraphBuilder b(pairs.size());
    for (std::size_t s = 0; s < pairs.size(); ++s)
        for (std::size_t t = s + 1; t < pairs.size(); ++t) {
            auto [a, c] = pairs[s];
            auto [p, q] = pairs[t];
            if (a != p && a != q && c != p && c != q) b.add_edge(s, t);
        }
    return std::move(b).build();
}

Graph shrikhande() {
    // Cayley graph on Z4 x Z4 with connection set {±(1,0), ±(0,1), ±(1,1)}.
    constexpr std::array<std::pair<int, int>, 3> gens{{{1, 0}, {0, 1}, {1, 1}}};
    GraphBuilder b(16);
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y)
            for (auto [dx, dy] : gens) {
                const int u = 4 * x + y;
                const int v = 4 * ((x + dx) % 4) + (y + dy) % 4;
                b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
            }
    return std::move(b).build();
}

Graph clebsch() {
    // Complement of the folded 5-cube: {0,1}^4, adjacent iff Hamming distance 1 or 4.
    GraphBuilder b(16);
    for (unsigned u = 0; u < 16; ++u)
        for (unsigned v = u + 1; v < 16; ++v) {
            const int d = std::popcount(u ^ v);
            if (d == 1 || d == 4) b.add_edge(u, v);
        }
    return complement(std::move(b).build());
}

Graph schlafli() {
    // Complement of the 27-vertex graph on a_1..a_6, b_1..b_6 and c_ij (i<j).
    auto a = [](int i) { return static_cast<Vertex>(i); };
    auto bv = [](int i) { return static_cast<Vertex>(6 + i); };
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) pairs.emplace_back(i, j);
    auto c = [](std::size_t k) { return static_cast<Vertex>(12 + k); };

    GraphBuilder g(27);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            if (i != j) g.add_edge(a(i), bv(j));
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        auto [p, q] = pairs[k];
        for (int i : {p, q}) {
            g.add_edge(a(i), c(k));
            g.add_edge(bv(i), c(k));
        }
        for (std::size_t l = k + 1; l < pairs.size(); ++l) {
            auto [s, t] = pairs[l];
            if (p != s && p != t && q != s && q != t) g.add_edge(c(k), c(l));
        }
    }
    return complement(std::move(g).build());
}

Graph triangular(std::size_t n) {
    if (n < 2) throw InvalidArgument("triangular graph requires n >= 2");
    return line_graph(complete(n));
}

Graph grid(std::size_t n) {
    if (n < 2) throw InvalidArgument("grid requires n >= 2");
    return cartesian(complete(n), complete(n));
}

Graph chang(int which) {
    // Seidel switching of T(8) with respect to the line-graph vertices of an edge set
    // of K8: a perfect matching, a triangle plus a 5-cycle, or an 8-cycle.
    std::vector<Edge> switching;
    switch (which) {
        case 1: switching = {{0, 1}, {2, 3}, {4, 5}, {6, 7}}; break;
        case 2: switching = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {3, 7}}; break;
        case 3:
            for (Vertex v = 0; v < 8; ++v) switching.emplace_back(std::min(v, (v + 1) % 8), std::max(v, (v + 1) % 8));
            break;
        default: throw InvalidArgument("chang index must be 1, 2 or 3, got " + std::to_string(which));
    }
    const Graph k8 = complete(8);
    const auto es = k8.edges();
    std::vector<Vertex> subset;
    for (const auto& e : switching) {
        auto it = std::find(es.begin(), es.end(), e);
        subset.push_back(static_cast<Vertex>(it - es.begin()));
    }
    return seidel_switch(line_graph(k8), subset);
}

Graph hoffman_singleton() {
    // Robertson's construction: pentagons P_h, pentagrams Q_h, and vertex j of P_h
    // joined to vertex (h*i + j) mod 5 of Q_i.
    auto p = [](int h, int j) { return static_cast<Vertex>(5 * h + j); };
    auto q = [](int h, int j) { return static_cast<Vertex>(25 + 5 * h + j); };
    GraphBuilder b(50);
    for (int h = 0; h < 5; ++h)
        for (int j = 0; j < 5; ++j) {
            b.add_edge(p(h, j), p(h, (j + 1) % 5));
            b.add_edge(q(h, j), q(h, (j + 2) % 5));
            for (int i = 0; i < 5; ++i) b.add_edge(p(h, j), q(i, (h * i + j) % 5));
        }
    return std::move(b).build();
}

// ---------------------------------------------------------------------------
// Edge lists

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::size_t parse_index(std::string_view tok, std::size_t line_no) {
    if (!tok.empty() && tok.front() == '-')
        throw ParseError("line " + std::to_string(line_no) + ": negative vertex index '" +
                             std::string(tok) + "'",
                         line_no);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError("line " + std::to_string(line_no) + ": expected a decimal integer, got '" +
                             std::string(tok) + "'",
                         line_no);
    return value;
}

}  // namespace

Graph from_edge_list(std::string_view text) {
    std::optional<std::size_t> declared;
    std::vector<std::pair<Edge, std::size_t>> edges;
    std::size_t line_no = 0;
    bool seen_content = false;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;

        auto toks = split_ws(line);
        if (toks.empty() || toks.front().front() == '#') continue;

        if (!seen_content && toks.front() == "n") {
            seen_content = true;
            if (toks.size() != 2)
                throw ParseError("line " + std::to_string(line_no) + ": header must be 'n <count>'", line_no);
            declared = parse_index(toks[1], line_no);
            if (*declared == 0) throw ParseError("line " + std::to_string(line_no) + ": vertex count must be positive", line_no);
            continue;
        }
        seen_content = true;
        if (toks.size() != 2)
            throw ParseError("line " + std::to_string(line_no) + ": expected 'u v', got " +
                                 std::to_string(toks.size()) + " fields",
                             line_no);
        const std::size_t u = parse_index(toks[0], line_no);
        const std::size_t v = parse_index(toks[1], line_no);
        if (u == v) throw ParseError("line " + std::to_string(line_no) + ": self-loop at vertex " + std::to_string(u), line_no);
        if (declared && (u >= *declared || v >= *declared))
            throw ParseError("line " + std::to_string(line_no) + ": vertex index exceeds declared count " +
                                 std::to_string(*declared),
                             line_no);
        if (std::max(u, v) >= Graph::kMaxVertices)
            throw ParseError("line " + std::to_string(line_no) + ": vertex index exceeds cap", line_no);
        edges.push_back({{u, v}, line_no});
    }

    std::size_t n = declared.value_or(0);
    if (!declared)
        for (const auto& [e, ln] : edges) n = std::max({n, e.first + 1, e.second + 1});
    if (n == 0) throw ParseError("edge list defines no vertices", line_no);

    GraphBuilder b(n);
    for (const auto& [e, ln] : edges) b.add_edge(e.first, e.second);
    return std::move(b).build();
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.order() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

// ---------------------------------------------------------------------------
// Structure queries

bool is_connected(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<bool> seen(n, false);
    std::deque<Vertex> queue{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop_front();
        for (Vertex u = 0; u < n; ++u)
            if (g.adjacent(v, u) && !seen[u]) {
                seen[u] = true;
                ++count;
                queue.push_back(u);
            }
    }
    return count == n;
}

std::optional<std::size_t> regularity(const Graph& g) {
    const std::size_t r = g.degree(0);
    for (Vertex v = 1; v < g.order(); ++v)
        if (g.degree(v) != r) return std::nullopt;
    return r;
}

std::size_t common_neighbours(const Graph& g, Vertex u, Vertex v) {
    auto a = g.row(u);
    auto b = g.row(v);
    std::size_t c = 0;
    for (std::size_t w = 0; w < a.size(); ++w) c += static_cast<std::size_t>(std::popcount(a[w] & b[w]));
    return c;
}

std::optional<SrgParams> srg_parameters(const Graph& g) {
    const std::size_t n = g.order();
    auto r = regularity(g);
    if (!r || *r == 0 || *r == n - 1) return std::nullopt;
    std::optional<std::size_t> e, f;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            const std::size_t c = common_neighbours(g, u, v);
            auto& slot = g.adjacent(u, v) ? e : f;
            if (!slot) slot = c;
            else if (*slot != c) return std::nullopt;
        }
    return SrgParams{static_cast<std::int64_t>(n), static_cast<std::int64_t>(*r),
                     static_cast<std::int64_t>(e.value_or(0)), static_cast<std::int64_t>(f.value_or(0))};
}

bool is_complete(const Graph& g) {
    const std::size_t n = g.order();
    return g.size() == n * (n - 1) / 2;
}

namespace {

void extend_clique(const Graph& g, std::size_t size, std::vector<Vertex>& candidates, std::size_t& best) {
    if (candidates.empty()) {
        best = std::max(best, size);
        return;
    }
    while (!candidates.empty()) {
        if (size + candidates.size() <= best) return;
        const Vertex v = candidates.back();
        candidates.pop_back();
        std::vector<Vertex> next;
        for (auto u : candidates)
            if (g.adjacent(u, v)) next.push_back(u);
        extend_clique(g, size + 1, next, best);
    }
}

}  // namespace

std::size_t clique_number(const Graph& g) {
    std::vector<Vertex> all(g.order());
    for (Vertex v = 0; v < g.order(); ++v) all[v] = v;
    std::size_t best = 0;
    extend_clique(g, 0, all, best);
    return best;
}

std::optional<std::size_t> girth(const Graph& g) {
    const std::size_t n = g.order();
    std::optional<std::size_t> best;
    std::vector<std::size_t> dist(n), parent(n);
    constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
    for (Vertex s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), kUnseen);
        dist[s] = 0;
        parent[s] = kUnseen;
        std::deque<Vertex> queue{s};
        while (!queue.empty()) {
            const Vertex v = queue.front();
            queue.pop_front();
            for (Vertex u = 0; u < n; ++u) {
                if (!g.adjacent(v, u)) continue;
                if (dist[u] == kUnseen) {
                    dist[u] = dist[v] + 1;
                    parent[u] = v;
                    queue.push_back(u);
                } else if (parent[v] != u) {
                    const std::size_t len = dist[u] + dist[v] + 1;
                    if (!best || len < *best) best = len;
                }
            }
        }
    }
    return best;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    GraphBuilder b(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (vertices[i] >= g.order() || vertices[j] >= g.order())
                throw InvalidArgument("induced subgraph vertex out of range");
            if (g.adjacent(vertices[i], vertices[j])) b.add_edge(i, j);
        }
    return std::move(b).build();
}

}  // namespace qec
