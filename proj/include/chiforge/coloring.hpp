#pragma once

#include <functional>
#include <string>
#include <vector>

#include "chiforge/graph.hpp"

namespace chiforge {

// Exact solvers are sized for graphs whose expansion fits in a 2^n table.
constexpr int kSolverMaxVertices = 24;

int clique_number(const Graph& g);
int clique_number_weighted(const Graph& g, const VertexWeights& q);
int independence_number(const Graph& g);
int independence_number_weighted(const Graph& g, const VertexWeights& q);

// colors[u] lists the colour set of u (sorted, size q[u]; singletons when unweighted).
struct ColoringCertificate {
    int palette = 0;
    std::vector<std::vector<int>> colors;
    bool validate(const Graph& g, const VertexWeights& q) const;
    bool validate(const Graph& g) const;
};
std::string certificate_json(const ColoringCertificate& c);

struct ChiResult {
    int chi = 0;
    ColoringCertificate certificate;
};

// Unweighted engines: iterative-deepening cover by maximal independent sets,
// and a full subset table dp[S] = chi(G[S]). chromatic_number runs both and
// insists they agree.
int chi_mis_cover(const Graph& g);
int chi_subset_dp(const Graph& g);
std::vector<std::uint8_t> chi_table(const Graph& g);  // n <= 20
ChiResult chromatic_number(const Graph& g);

// Weighted routes. chromatic_number_weighted computes the expansion route and
// the direct set-colouring route and insists they agree.
int chi_weighted_via_expansion(const Graph& g, const VertexWeights& q);
ChiResult chi_weighted_direct(const Graph& g, const VertexWeights& q);
ChiResult chromatic_number_weighted(const Graph& g, const VertexWeights& q);

// Table of chi_q over every weight vector below a cap, for grid sweeps and
// decrement searches. Memory is the product of (cap[i]+1).
class WeightLatticeChi {
  public:
    WeightLatticeChi(const Graph& g, const VertexWeights& cap);
    int chi(const VertexWeights& q) const;  // requires q <= cap pointwise
    int chi_of_subset(const VertexWeights& q, VertexSet s) const;

  private:
    std::vector<std::uint8_t> dp_;
    std::vector<std::uint64_t> stride_;
    VertexWeights cap_;
};
int chi_weighted_lattice(const Graph& g, const VertexWeights& q);

// chi_q queries against a fixed host graph; decompose and the harness swap in
// precomputed tables here.
using ChiOracle = std::function<int(const VertexWeights&)>;
ChiOracle default_chi_oracle(const Graph& g);

struct C5ChiFormula {
    int value;  // max(omega_q, ceil(total/2))
    int bound;  // ceil((5*omega_q - 1)/4)
};
// q holds weights for the 5-cycle c1..c5 in cycle order.
C5ChiFormula chi_weighted_c5_closed_form(const VertexWeights& q);

bool is_critical(const Graph& g);

// Greedy single-unit decrements in ascending vertex order; the result is
// minimal in the sense that any further decrement drops chi_q.
VertexWeights minimalize_weights(const Graph& g, const VertexWeights& q,
                                 const ChiOracle& oracle);
VertexWeights minimalize_weights(const Graph& g, const VertexWeights& q);
bool is_weight_minimal(const Graph& g, const VertexWeights& q, const ChiOracle& oracle);
bool is_weight_minimal(const Graph& g, const VertexWeights& q);

int reed_ceiling(const Graph& g);  // ceil((max_degree + omega + 1)/2)
bool reed_bound_holds(const Graph& g);

}  // namespace chiforge
