#include "chiforge/graph.hpp"

#include <algorithm>

namespace chiforge {

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> d(n_);
    for (int u = 0; u < n_; ++u) d[u] = degree(u);
    std::sort(d.begin(), d.end());
    return d;
}

VertexSet weight_support(const VertexWeights& q) {
    VertexSet s = 0;
    for (std::size_t u = 0; u < q.size(); ++u)
        if (q[u] > 0) s |= bits::bit(static_cast<int>(u));
    return s;
}

int weight_total(const VertexWeights& q) {
    int t = 0;
    for (int w : q) t += w;
    return t;
}

int weight_of_set(const VertexWeights& q, VertexSet s) {
    int t = 0;
    bits::for_each(s, [&](int u) { t += q[u]; });
    return t;
}

VertexWeights unit_weights(int n) { return VertexWeights(n, 1); }

void check_weights(const Graph& g, const VertexWeights& q) {
    if (static_cast<int>(q.size()) != g.order())
        throw std::invalid_argument("weight vector length does not match graph order");
    for (int w : q)
        if (w < 0) throw std::invalid_argument("negative vertex weight");
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete_bipartite(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("negative part size");
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.add_edge(u, v);
    return g;
}

Graph complement(const Graph& g) {
    int n = g.order();
    Graph h(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) h.add_edge(u, v);
    return h;
}

Graph induced(const Graph& g, VertexSet s) {
    if (s & ~g.vertices()) throw std::invalid_argument("induced: set not within vertex range");
    std::vector<int> keep = bits::to_list(s);
    Graph h(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (g.adjacent(keep[i], keep[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    if (a.order() + b.order() > Graph::kMaxVertices)
        throw CapacityError("disjoint_union exceeds 64 vertices");
    Graph g(a.order() + b.order());
    for (int u = 0; u < a.order(); ++u)
        for (int v = u + 1; v < a.order(); ++v)
            if (a.adjacent(u, v)) g.add_edge(u, v);
    int off = a.order();
    for (int u = 0; u < b.order(); ++u)
        for (int v = u + 1; v < b.order(); ++v)
            if (b.adjacent(u, v)) g.add_edge(off + u, off + v);
    return g;
}

Graph copies(int k, const Graph& g) {
    if (k < 0) throw std::invalid_argument("negative copy count");
    Graph out(0);
    for (int i = 0; i < k; ++i) out = disjoint_union(out, g);
    return out;
}

Graph join(const Graph& a, const Graph& b) {
    Graph g = disjoint_union(a, b);
    for (int u = 0; u < a.order(); ++u)
        for (int v = 0; v < b.order(); ++v) g.add_edge(u, a.order() + v);
    return g;
}

Graph expansion(const Graph& g, const VertexWeights& q) {
    check_weights(g, q);
    int total = weight_total(q);
    if (total > Graph::kMaxVertices) throw CapacityError("expansion exceeds 64 vertices");
    std::vector<int> offset(g.order() + 1, 0);
    for (int u = 0; u < g.order(); ++u) offset[u + 1] = offset[u] + q[u];
    Graph h(total);
    for (int u = 0; u < g.order(); ++u) {
        for (int i = offset[u]; i < offset[u + 1]; ++i)
            for (int j = i + 1; j < offset[u + 1]; ++j) h.add_edge(i, j);
        for (int v = u + 1; v < g.order(); ++v) {
            if (!g.adjacent(u, v)) continue;
            for (int i = offset[u]; i < offset[u + 1]; ++i)
                for (int j = offset[v]; j < offset[v + 1]; ++j) h.add_edge(i, j);
        }
    }
    return h;
}

VertexSet neighbors_of_set(const Graph& g, VertexSet s) {
    VertexSet n = 0;
    bits::for_each(s, [&](int u) { n |= g.neighbors(u); });
    return n & ~s;
}

static VertexSet reach_from(const Graph& g, VertexSet start, VertexSet allowed) {
    VertexSet seen = start & allowed;
    VertexSet frontier = seen;
    while (frontier) {
        VertexSet next = neighbors_of_set(g, seen) & allowed & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

bool is_connected(const Graph& g) {
    if (g.order() <= 1) return true;
    VertexSet all = g.vertices();
    return reach_from(g, bits::bit(0), all) == all;
}

std::vector<VertexSet> components_of_subset(const Graph& g, VertexSet s) {
    std::vector<VertexSet> out;
    VertexSet rest = s;
    while (rest) {
        VertexSet c = reach_from(g, bits::bit(bits::lowest(rest)), s);
        out.push_back(c);
        rest &= ~c;
    }
    return out;
}

std::vector<VertexSet> components(const Graph& g) { return components_of_subset(g, g.vertices()); }

VertexSet neighborhood_shell(const Graph& g, VertexSet s, int i) {
    if (!s) throw std::invalid_argument("neighborhood_shell: empty seed set");
    if (s & ~g.vertices()) throw std::invalid_argument("neighborhood_shell: set not within vertex range");
    if (i < 0) throw std::invalid_argument("neighborhood_shell: negative distance");
    VertexSet shell = s;
    VertexSet seen = s;
    for (int d = 0; d < i; ++d) {
        shell = neighbors_of_set(g, seen);
        seen |= shell;
        if (!shell) break;
    }
    return shell;
}

bool is_clique(const Graph& g, VertexSet s) {
    bool ok = true;
    bits::for_each(s, [&](int u) {
        if ((s & ~bits::bit(u)) & ~g.neighbors(u)) ok = false;
    });
    return ok;
}

bool is_independent(const Graph& g, VertexSet s) {
    bool ok = true;
    bits::for_each(s, [&](int u) {
        if (s & g.neighbors(u)) ok = false;
    });
    return ok;
}

bool is_complete_between(const Graph& g, VertexSet a, VertexSet b) {
    if (a & b) throw std::invalid_argument("edge predicate on intersecting sets");
    bool ok = true;
    bits::for_each(a, [&](int u) {
        if (b & ~g.neighbors(u)) ok = false;
    });
    return ok;
}

bool is_anticomplete_between(const Graph& g, VertexSet a, VertexSet b) {
    if (a & b) throw std::invalid_argument("edge predicate on intersecting sets");
    bool ok = true;
    bits::for_each(a, [&](int u) {
        if (b & g.neighbors(u)) ok = false;
    });
    return ok;
}

// graph6 layout: N(n) is one byte n+63 for n <= 62, else 126 followed by three
// bytes holding n in big-endian 6-bit groups (each +63). R(x) packs the upper
// triangle column by column ((0,1),(0,2),(1,2),(0,3),...), 6 bits per byte,
// high bit first, each byte +63, zero-padded to a byte boundary.

static int g6_byte(unsigned char c, std::size_t off) {
    if (c < 63 || c > 126) throw ParseError("graph6 byte out of range", off);
    return c - 63;
}

Graph parse_graph6(std::string_view text) {
    static constexpr std::string_view kHeader = ">>graph6<<";
    if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
    if (text.empty()) throw ParseError("empty graph6 string", 0);

    std::size_t pos = 0;
    long n;
    if (static_cast<unsigned char>(text[0]) == 126) {
        if (text.size() < 4) throw ParseError("truncated long-form vertex count", text.size());
        if (static_cast<unsigned char>(text[1]) == 126)
            throw ParseError("vertex count exceeds 64", 1);
        n = 0;
        for (pos = 1; pos < 4; ++pos) n = (n << 6) | g6_byte(text[pos], pos);
    } else {
        n = g6_byte(text[0], 0);
        pos = 1;
    }
    if (n > Graph::kMaxVertices) throw ParseError("vertex count exceeds 64", 0);

    Graph g(static_cast<int>(n));
    long nbits = n * (n - 1) / 2;
    long nbytes = (nbits + 5) / 6;
    if (static_cast<long>(text.size()) - static_cast<long>(pos) < nbytes)
        throw ParseError("truncated edge data", text.size());
    if (static_cast<long>(text.size()) - static_cast<long>(pos) > nbytes)
        throw ParseError("trailing bytes after edge data", pos + nbytes);

    long k = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++k) {
            std::size_t byte = pos + k / 6;
            int bit = 5 - static_cast<int>(k % 6);
            if ((g6_byte(text[byte], byte) >> bit) & 1) g.add_edge(u, v);
        }
    }
    for (; k < nbytes * 6; ++k) {
        std::size_t byte = pos + k / 6;
        int bit = 5 - static_cast<int>(k % 6);
        if ((g6_byte(text[byte], byte) >> bit) & 1)
            throw ParseError("nonzero padding bits", byte);
    }
    return g;
}

std::string write_graph6(const Graph& g) {
    int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0, filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

}  // namespace chiforge
