#include "chiforge/patterns.hpp"

#include <algorithm>
#include <array>

namespace chiforge {

const std::vector<Pattern>& pattern_zoo() {
    static const std::vector<Pattern> zoo = [] {
        std::vector<Pattern> z;
        auto add = [&z](const char* name, int n, std::vector<std::pair<int, int>> edges) {
            z.push_back({name, Graph::from_edges(n, edges)});
        };
        add("3K1", 3, {});
        add("2K2", 4, {{0, 1}, {2, 3}});
        add("C4", 4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
        // triangle 1,2,3 with pendant 0
        add("paw", 4, {{0, 1}, {1, 2}, {1, 3}, {2, 3}});
        // 4-cycle 1,2,3,4 with pendant 0
        add("banner", 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 1}});
        // triangle 2,3,4 with tail 0-1-2
        add("cobanner", 5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
        // triangle 1,2,3 with horns 0-1 and 4-2
        add("bull", 5, {{0, 1}, {1, 2}, {1, 3}, {2, 3}, {2, 4}});
        add("C5", 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
        // path 0-1-2-3 dominated by 4
        add("gem", 5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}});
        add("P5", 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
        // K_{2,3} with parts {0,1} and {2,3,4}, plus the edge 3-4
        add("paraglider", 5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {3, 4}});
        // rim cycle 0..4, hub 5
        add("W5", 6,
            {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 0}, {5, 1}, {5, 2}, {5, 3}, {5, 4}});
        add("P4", 4, {{0, 1}, {1, 2}, {2, 3}});
        return z;
    }();
    return zoo;
}

const Graph& pattern_graph(std::string_view name) {
    for (const Pattern& p : pattern_zoo())
        if (p.name == name) return p.graph;
    throw std::invalid_argument("unknown pattern: " + std::string(name));
}

bool is_pattern_name(std::string_view name) {
    for (const Pattern& p : pattern_zoo())
        if (p.name == name) return true;
    return false;
}

std::optional<Witness> find_induced(const Graph& host, const Graph& pattern) {
    int pn = pattern.order();
    int hn = host.order();
    if (pn > hn) return std::nullopt;
    if (pn == 0) return Witness{};

    // Visit pattern vertices most-connected-to-placed first (ties by index) so
    // candidate masks shrink early.
    std::array<int, Graph::kMaxVertices> order{};
    std::uint64_t placed = 0;
    for (int d = 0; d < pn; ++d) {
        int best = -1, best_links = -1;
        for (int p = 0; p < pn; ++p) {
            if (bits::has(placed, p)) continue;
            int links = bits::popcount(pattern.neighbors(p) & placed);
            if (links > best_links) {
                best = p;
                best_links = links;
            }
        }
        order[d] = best;
        placed |= bits::bit(best);
    }

    std::array<int, Graph::kMaxVertices> map{};  // depth -> host vertex
    std::array<VertexSet, Graph::kMaxVertices> cand{};
    std::uint64_t used = 0;
    int depth = 0;
    cand[0] = host.vertices();
    while (depth >= 0) {
        if (!cand[depth]) {
            --depth;
            if (depth >= 0) used &= ~bits::bit(map[depth]);
            continue;
        }
        int v = bits::lowest(cand[depth]);
        cand[depth] &= cand[depth] - 1;
        map[depth] = v;
        if (depth + 1 == pn) {
            Witness w(pn);
            for (int d = 0; d < pn; ++d) w[order[d]] = map[d];
            return w;
        }
        used |= bits::bit(v);
        ++depth;
        VertexSet c = host.vertices() & ~used;
        int p = order[depth];
        for (int e = 0; e < depth && c; ++e) {
            if (pattern.adjacent(p, order[e]))
                c &= host.neighbors(map[e]);
            else
                c &= ~host.neighbors(map[e]);
        }
        cand[depth] = c;
    }
    return std::nullopt;
}

bool contains_induced(const Graph& host, const Graph& pattern) {
    return find_induced(host, pattern).has_value();
}

Graph build_qf(const Graph& f) {
    int nf = f.order();
    if (nf + 3 > Graph::kMaxVertices) throw CapacityError("build_qf exceeds 64 vertices");
    Graph g(nf + 3);
    int u1 = 0, u2 = 1, u4 = nf + 2;
    g.add_edge(u1, u2);
    for (int i = 0; i < nf; ++i) {
        g.add_edge(u2, 2 + i);
        g.add_edge(2 + i, u4);
        for (int j = i + 1; j < nf; ++j)
            if (f.adjacent(i, j)) g.add_edge(2 + i, 2 + j);
    }
    return g;
}

namespace {

// Extends an induced path s, p1, ..., last by vertices above s; a vertex
// adjacent to s may only close the cycle, interior vertices may not touch it.
bool odd_hole_dfs(const Graph& g, int s, int last, VertexSet blocked, std::vector<int>& path) {
    VertexSet above = g.vertices() & ~bits::full(s + 1);
    VertexSet cand = g.neighbors(last) & above & ~blocked;
    std::size_t len = path.size();
    if (len + 1 >= 5 && (len + 1) % 2 == 1) {
        VertexSet close = cand & g.neighbors(s);
        if (close) {
            path.push_back(bits::lowest(close));
            return true;
        }
    }
    VertexSet ext = cand & ~g.neighbors(s);
    bool found = false;
    bits::for_each(ext, [&](int v) {
        if (found) return;
        path.push_back(v);
        if (odd_hole_dfs(g, s, v, blocked | bits::bit(v) | g.neighbors(last), path))
            found = true;
        else
            path.pop_back();
    });
    return found;
}

}  // namespace

std::optional<std::vector<int>> find_odd_hole(const Graph& g) {
    int n = g.order();
    for (int s = 0; s + 4 < n; ++s) {
        VertexSet starts = g.neighbors(s) & ~bits::full(s + 1);
        std::vector<int> path;
        bool found = false;
        bits::for_each(starts, [&](int p1) {
            if (found) return;
            path = {s, p1};
            if (odd_hole_dfs(g, s, p1, bits::bit(s) | bits::bit(p1), path)) found = true;
        });
        if (found) return path;
    }
    return std::nullopt;
}

bool is_perfect(const Graph& g) {
    return !find_odd_hole(g) && !find_odd_hole(complement(g));
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order()) return false;
    if (a.edge_count() != b.edge_count()) return false;
    if (a.degree_sequence() != b.degree_sequence()) return false;
    return find_induced(a, b).has_value();
}

const char* class_name(GraphClass c) {
    switch (c) {
        case GraphClass::P5BannerFree: return "P5+banner";
        case GraphClass::P5CoBannerFree: return "P5+cobanner";
        case GraphClass::OddHoleBannerFree: return "oddhole+banner";
        case GraphClass::P5C4Free: return "P5+C4";
        case GraphClass::ThreeK1Free: return "3K1";
        case GraphClass::TwoK2Free: return "2K2";
        case GraphClass::C5ThreeK1Free: return "C5+3K1";
    }
    return "?";
}

std::optional<GraphClass> class_by_name(std::string_view name) {
    for (GraphClass c : kAllClasses)
        if (name == class_name(c)) return c;
    return std::nullopt;
}

bool in_class(const Graph& g, GraphClass c) {
    switch (c) {
        case GraphClass::P5BannerFree:
            return !contains_induced(g, pattern_graph("P5")) &&
                   !contains_induced(g, pattern_graph("banner"));
        case GraphClass::P5CoBannerFree:
            return !contains_induced(g, pattern_graph("P5")) &&
                   !contains_induced(g, pattern_graph("cobanner"));
        case GraphClass::OddHoleBannerFree:
            return !find_odd_hole(g) && !contains_induced(g, pattern_graph("banner"));
        case GraphClass::P5C4Free:
            return !contains_induced(g, pattern_graph("P5")) &&
                   !contains_induced(g, pattern_graph("C4"));
        case GraphClass::ThreeK1Free:
            return !contains_induced(g, pattern_graph("3K1"));
        case GraphClass::TwoK2Free:
            return !contains_induced(g, pattern_graph("2K2"));
        case GraphClass::C5ThreeK1Free:
            return !contains_induced(g, pattern_graph("C5")) &&
                   !contains_induced(g, pattern_graph("3K1"));
    }
    return false;
}

}  // namespace chiforge
