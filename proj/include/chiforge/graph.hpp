#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chiforge {

// Vertex sets are bitmasks: bit u set <=> vertex u in the set.
using VertexSet = std::uint64_t;

struct ParseError : std::runtime_error {
    std::size_t offset;
    ParseError(const std::string& msg, std::size_t off)
        : std::runtime_error(msg + " (byte " + std::to_string(off) + ")"), offset(off) {}
};

struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

namespace bits {

inline int popcount(std::uint64_t m) { return std::popcount(m); }
inline int lowest(std::uint64_t m) { return std::countr_zero(m); }
inline std::uint64_t bit(int i) { return std::uint64_t{1} << i; }
inline bool has(std::uint64_t m, int i) { return (m >> i) & 1; }
// All vertices below n.
inline std::uint64_t full(int n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

template <class Fn>
void for_each(std::uint64_t m, Fn fn) {
    while (m) {
        int v = std::countr_zero(m);
        m &= m - 1;
        fn(v);
    }
}

inline std::vector<int> to_list(std::uint64_t m) {
    std::vector<int> out;
    for_each(m, [&](int v) { out.push_back(v); });
    return out;
}

}  // namespace bits

// Simple graph on at most 64 vertices, adjacency rows as bitmasks.
// Operations never mutate their arguments; add_edge exists for construction.
class Graph {
  public:
    static constexpr int kMaxVertices = 64;

    Graph() = default;
    explicit Graph(int n) : n_(n) {
        if (n < 0 || n > kMaxVertices) throw CapacityError("graph order out of range: " + std::to_string(n));
    }

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    int order() const { return n_; }
    VertexSet vertices() const { return bits::full(n_); }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("loops not allowed");
        adj_[u] |= bits::bit(v);
        adj_[v] |= bits::bit(u);
    }

    bool adjacent(int u, int v) const { return bits::has(adj_[u], v); }
    VertexSet neighbors(int u) const { return adj_[u]; }
    VertexSet closed_neighborhood(int u) const { return adj_[u] | bits::bit(u); }

    int degree(int u) const { return bits::popcount(adj_[u]); }
    int max_degree() const {
        int d = 0;
        for (int u = 0; u < n_; ++u) d = std::max(d, degree(u));
        return d;
    }
    long edge_count() const {
        long twice = 0;
        for (int u = 0; u < n_; ++u) twice += degree(u);
        return twice / 2;
    }

    std::vector<int> degree_sequence() const;  // ascending

    bool operator==(const Graph& o) const {
        if (n_ != o.n_) return false;
        for (int u = 0; u < n_; ++u)
            if (adj_[u] != o.adj_[u]) return false;
        return true;
    }

  private:
    void check_vertex(int u) const {
        if (u < 0 || u >= n_) throw std::invalid_argument("vertex out of range: " + std::to_string(u));
    }

    int n_ = 0;
    std::uint64_t adj_[kMaxVertices] = {};
};

// Non-negative weight per vertex; length must equal the graph order.
using VertexWeights = std::vector<int>;

VertexSet weight_support(const VertexWeights& q);
int weight_total(const VertexWeights& q);
int weight_of_set(const VertexWeights& q, VertexSet s);
VertexWeights unit_weights(int n);
void check_weights(const Graph& g, const VertexWeights& q);

// Named constructors.
Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_bipartite(int a, int b);

// Structural operations. All return fresh graphs.
Graph complement(const Graph& g);
Graph induced(const Graph& g, VertexSet s);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph copies(int k, const Graph& g);
Graph join(const Graph& a, const Graph& b);
// Each vertex u becomes a clique of q[u] vertices (q[u] == 0 removes it); blocks
// keep the original vertex order and are laid out contiguously.
Graph expansion(const Graph& g, const VertexWeights& q);

bool is_connected(const Graph& g);
std::vector<VertexSet> components(const Graph& g);
std::vector<VertexSet> components_of_subset(const Graph& g, VertexSet s);
// Vertices at graph distance exactly i from s (i = 0 returns s itself).
VertexSet neighborhood_shell(const Graph& g, VertexSet s, int i);
VertexSet neighbors_of_set(const Graph& g, VertexSet s);

bool is_clique(const Graph& g, VertexSet s);
bool is_independent(const Graph& g, VertexSet s);
// Predicates over disjoint vertex sets; throw if a and b intersect.
bool is_complete_between(const Graph& g, VertexSet a, VertexSet b);
bool is_anticomplete_between(const Graph& g, VertexSet a, VertexSet b);

// graph6 interchange format (short form for n <= 62, one long-form prefix
// byte for 63..64; the optional ">>graph6<<" header is tolerated).
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

}  // namespace chiforge
