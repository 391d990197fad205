#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chiforge/graph.hpp"

namespace chiforge {

struct Pattern {
    std::string name;
    Graph graph;
};

// Fixed small graphs used as forbidden patterns throughout.
const std::vector<Pattern>& pattern_zoo();
const Graph& pattern_graph(std::string_view name);  // throws std::invalid_argument
bool is_pattern_name(std::string_view name);

// witness[i] = host vertex playing the role of pattern vertex i.
using Witness = std::vector<int>;
std::optional<Witness> find_induced(const Graph& host, const Graph& pattern);
bool contains_induced(const Graph& host, const Graph& pattern);

// P4 u1-u2-u3-u4 with u3 replaced by a copy of f, every f-vertex adjacent to
// u2 and u4. Layout: u1=0, u2=1, f occupies 2..|f|+1, u4=|f|+2.
Graph build_qf(const Graph& f);

// Induced odd cycle of length >= 5, returned in cycle order.
std::optional<std::vector<int>> find_odd_hole(const Graph& g);

// No odd hole in the graph or its complement.
bool is_perfect(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

enum class GraphClass {
    P5BannerFree,
    P5CoBannerFree,
    OddHoleBannerFree,
    P5C4Free,
    ThreeK1Free,
    TwoK2Free,
    C5ThreeK1Free,
};

constexpr GraphClass kAllClasses[] = {
    GraphClass::P5BannerFree,  GraphClass::P5CoBannerFree, GraphClass::OddHoleBannerFree,
    GraphClass::P5C4Free,      GraphClass::ThreeK1Free,    GraphClass::TwoK2Free,
    GraphClass::C5ThreeK1Free,
};

const char* class_name(GraphClass c);
std::optional<GraphClass> class_by_name(std::string_view name);
bool in_class(const Graph& g, GraphClass c);

}  // namespace chiforge
