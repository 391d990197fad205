#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chiforge/graph.hpp"
#include "chiforge/patterns.hpp"

namespace chiforge {

// All 2^(n(n-1)/2) labeled graphs on n vertices, in edge-mask order. Bit k of
// the mask toggles the k-th pair (0,1),(0,2),(1,2),(0,3),... Exhaustive
// streaming is limited to n <= 7; larger orders have to come from graph6
// catalog files.
std::uint64_t labeled_count(int n);
Graph labeled_graph(int n, std::uint64_t mask);
void enumerate_labeled(int n, const std::function<void(const Graph&)>& fn);

// Where a verifier draws its graphs from: one exhaustive labeled order, or a
// graph6 file with one graph per line (">>graph6<<" headers and blank lines
// are skipped; anything else that fails to parse raises ParseError with the
// line number). Optional class and connectivity filters narrow the stream;
// indices reported to visitors always refer to the unfiltered position.
class CatalogSource {
  public:
    static CatalogSource labeled(int n);
    static CatalogSource file(const std::string& path);

    CatalogSource& restrict_to(GraphClass c);
    CatalogSource& connected_only();

    std::uint64_t size() const;  // unfiltered stream length
    Graph at(std::uint64_t index) const;
    bool admits(const Graph& g) const;  // filter check
    void for_each(const std::function<void(const Graph&, std::uint64_t)>& fn) const;

    std::string describe() const;
    // Order covered exhaustively, when the source is a labeled stream.
    std::optional<int> exhaustive_order() const;

  private:
    CatalogSource() = default;

    int labeled_n_ = 0;  // 0 means file-backed
    std::string path_;
    std::vector<Graph> graphs_;
    std::optional<GraphClass> class_filter_;
    bool connected_only_ = false;
};

// One violation found during a sweep: the offending graph plus the numbers
// that disagree, both as plain text so reports stay self-contained.
struct ReportFailure {
    std::string witness;  // graph6
    std::string detail;
};

// Largest chromatic number seen for one clique number, with the first graph
// attaining it. first_index keeps merges deterministic under ties.
struct ExtremalRow {
    int omega = 0;
    int max_chi = 0;
    std::string witness;
    std::uint64_t first_index = 0;
};

struct VerificationReport {
    std::string theorem;
    std::uint64_t checked = 0;
    std::vector<ReportFailure> failures;  // sorted by (witness, detail)
    std::vector<ExtremalRow> table;       // sorted by omega
    std::vector<std::string> notes;

    bool pass() const { return failures.empty(); }
};

// Associative, commutative combination: checked adds up, failures are
// deduplicated and re-sorted, table rows keep the maximum per omega (ties go
// to the smallest first_index, then the smaller witness string), notes are
// concatenated with exact duplicates dropped.
VerificationReport merge_reports(const std::string& theorem,
                                 const std::vector<VerificationReport>& parts);

std::string report_json(const VerificationReport& r);
std::string report_csv(const VerificationReport& r);  // omega,max_chi,witness_graph6
// Writes <dir>/<theorem>.json and <dir>/<theorem>.csv, creating dir if needed.
void write_report(const VerificationReport& r, const std::string& dir);

// Worker count for catalog sweeps: CHIFORGE_THREADS when set (clamped to
// 1..16), otherwise 1. Reports are identical for every thread count.
int worker_count();

// Closed form max(omega_q, ceil(total/2)) against the exact solver for every
// weight vector on the five-cycle with total <= max_total, plus the
// alternating near-half profiles that meet ceil((5w-1)/4) for w = 1..6.
VerificationReport verify_c5_formula(int max_total);

// chi <= ceil((5*omega-1)/4) over every (P5,C4)-free member of the sources,
// with constructed five-cycle expansions certifying that the bound is
// attained for omega = 1..6.
VerificationReport verify_thm12_iv(const std::vector<CatalogSource>& sources);

// Catalog-relative comparison of the optimal chi-binding functions of a host
// class and a base subclass (for example (P5,banner)-free against 3K1-free).
// Rows of the base table are only asserted against when a Ramsey bound
// certifies the catalog holds every base extremal graph of that clique
// number; all other rows are reported as observations.
VerificationReport verify_thm12_reductions(GraphClass host, GraphClass base,
                                           const std::vector<CatalogSource>& sources);
std::string reduction_theorem_id(GraphClass host, GraphClass base);

// Critical members of the four theorem classes, part 1..4:
//   1: critical (P5,banner)-free graphs are 3K1-free
//   2: critical (P5,co-banner)-free graphs are 2K2-free
//   3: critical (odd-hole,banner)-free graphs are (C5,3K1)-free
//   4: critical (P5,C4)-free graphs are complete or clique expansions of the
//      five-cycle or the five-wheel
VerificationReport verify_thm13(int part, const std::vector<CatalogSource>& sources);

// Collapses classes of mutual true twins (N[u] == N[v]) and reports the bag
// sizes when the quotient is a five-cycle or five-wheel, in the pattern's
// vertex order, so expansion(pattern, weights) rebuilds the input up to
// isomorphism.
struct ExpansionForm {
    std::string base;  // "C5" or "W5"
    VertexWeights weights;
};
std::optional<ExpansionForm> recognize_clique_expansion(const Graph& g);

// chi <= ceil((max_degree + omega + 1)/2) over every (P5,banner)-free member,
// logging the graphs that meet the ceiling exactly.
VerificationReport verify_cor14(const std::vector<CatalogSource>& sources);

// Join of the catalog-extremal members of class h at clique numbers w1 and w2
// stays in the class with chi and omega adding up. Also certifies the
// hypothesis that no forbidden graph of h has a spanning complete bipartite
// subgraph.
VerificationReport verify_superadditivity(GraphClass h, int w1, int w2,
                                          const std::vector<CatalogSource>& sources);

// Prime members of a banner-excluding class with independence number >= 3
// must be perfect. cls is P5BannerFree or OddHoleBannerFree.
VerificationReport verify_prime_dichotomy(GraphClass cls,
                                          const std::vector<CatalogSource>& sources);

// Structural decomposition sweep over the hosts that exclude the composite
// P4 quotient pattern: separator splits preserve chi_q and omega_q, the
// module trichotomy resolves, decompositions into prime separator-free
// quotients account for chi_q exactly, and the superadditive transfer
// inequality holds wherever the empirical binding tables are Ramsey-closed.
// Weight vectors run the full {0,1,2}^n grid for n <= 6 and 64 seeded random
// vectors with entries <= 4 beyond that; the seed lands in the notes.
VerificationReport verify_decomposition_lemmas(const std::vector<CatalogSource>& sources,
                                               std::uint64_t seed);

// Seeded random (G, q) pairs with total weight <= max_total: the expansion
// route and the direct set-colouring route must agree exactly.
VerificationReport verify_expansion_chi_agreement(int pairs, int max_total,
                                                  std::uint64_t seed);

}  // namespace chiforge
