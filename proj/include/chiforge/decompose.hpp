#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chiforge/coloring.hpp"
#include "chiforge/graph.hpp"
#include "chiforge/patterns.hpp"

namespace chiforge {

// Structural precondition failure; carries the embedding that proves it.
struct PreconditionError : std::invalid_argument {
    PreconditionError(const std::string& what, Witness w)
        : std::invalid_argument(what), witness(std::move(w)) {}
    Witness witness;
};

// Every vertex outside m sees all of m or none of it.
bool is_module(const Graph& g, VertexSet m);
bool is_homogeneous_set(const Graph& g, VertexSet m);  // module with 1 < |m| < n
bool is_prime(const Graph& g);                         // no homogeneous set at all

// Inclusion-maximal homogeneous sets. They can overlap on general inputs
// (every 3-subset of K4 is one); the flag reports whether they do.
struct MaximalHomogeneousSets {
    std::vector<VertexSet> sets;
    bool pairwise_disjoint = true;
};
MaximalHomogeneousSets maximal_homogeneous_sets(const Graph& g);

// A vertex set x whose removal disconnects g and which splits into pairwise
// completely joined modules of g (the co-components of g[x]). side1 and side2
// cover the graph, intersect exactly in x, and have no edges between their
// strict parts.
struct CliqueSeparatorOfModules {
    VertexSet separator = 0;
    std::vector<VertexSet> parts;
    VertexSet side1 = 0;
    VertexSet side2 = 0;
};
bool is_clique_separator_of_modules(const Graph& g, VertexSet x);
std::optional<CliqueSeparatorOfModules> find_clique_separator_of_modules(const Graph& g);

// For a module m of a connected host that avoids the composite pattern built
// from f, exactly one of three outcomes applies: g[m] avoids f, or the
// neighbourhood of m is a clique-separator of modules, or nothing lies at
// distance two from m.
enum class ModuleCase { PatternFree, Separator, EmptyShell };
struct TrichotomyResult {
    ModuleCase kind = ModuleCase::PatternFree;
    std::optional<CliqueSeparatorOfModules> separator;
};
TrichotomyResult module_trichotomy(const Graph& g, const Graph& f, VertexSet m);

// One joined factor of a decomposition: the weighted subgraph on 'vertices'
// is an expansion of 'quotient' with the given bag sizes, and contributes
// 'chi' colours. Weight vectors are indexed by the host graph.
struct DecompositionPart {
    VertexSet vertices = 0;
    VertexWeights weights;
    std::vector<VertexSet> bags;  // one clique per quotient vertex, ascending
    Graph quotient;
    VertexWeights quotient_weights;
    int chi = 0;
};

struct Decomposition {
    VertexWeights minimal_weights;  // the reduced host weights the parts refine
    std::vector<DecompositionPart> parts;
    int chi_total = 0;
};

// Splits a weighted graph whose host avoids the P4 quotient pattern into
// pairwise joined parts whose quotients are prime and have no
// clique-separator of modules, with chi adding up across parts.
Decomposition decompose_weighted(const Graph& g, const VertexWeights& q, const ChiOracle& oracle);
Decomposition decompose_weighted(const Graph& g, const VertexWeights& q);

std::string decomposition_json(const Decomposition& d);

}  // namespace chiforge
