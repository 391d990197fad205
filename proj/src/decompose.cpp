#include "chiforge/decompose.hpp"

#include <algorithm>
#include <climits>

#include <nlohmann/json.hpp>

namespace chiforge {

bool is_module(const Graph& g, VertexSet m) {
    m &= g.vertices();
    if (!m) return false;
    bool ok = true;
    bits::for_each(g.vertices() & ~m, [&](int u) {
        VertexSet hit = g.neighbors(u) & m;
        if (hit != 0 && hit != m) ok = false;
    });
    return ok;
}

bool is_homogeneous_set(const Graph& g, VertexSet m) {
    m &= g.vertices();
    int size = bits::popcount(m);
    return size > 1 && size < g.order() && is_module(g, m);
}

bool is_prime(const Graph& g) {
    int n = g.order();
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            // close {u,v} under splitters; the result is the smallest module
            // containing the pair
            VertexSet s = bits::bit(u) | bits::bit(v);
            bool grew = true;
            while (grew) {
                grew = false;
                bits::for_each(g.vertices() & ~s, [&](int w) {
                    VertexSet hit = g.neighbors(w) & s;
                    if (hit != 0 && hit != s) {
                        s |= bits::bit(w);
                        grew = true;
                    }
                });
            }
            if (s != g.vertices()) return false;
        }
    }
    return true;
}

MaximalHomogeneousSets maximal_homogeneous_sets(const Graph& g) {
    if (!is_connected(g))
        throw std::invalid_argument("homogeneous set listing needs a connected graph");
    int n = g.order();
    if (n > 20) throw BudgetError("module enumeration limited to 20 vertices");

    std::vector<VertexSet> homs;
    for (VertexSet s = 3; s < g.vertices(); ++s)
        if (bits::popcount(s) > 1 && is_module(g, s)) homs.push_back(s);

    MaximalHomogeneousSets out;
    std::sort(homs.begin(), homs.end(), [](VertexSet a, VertexSet b) {
        int pa = bits::popcount(a), pb = bits::popcount(b);
        return pa != pb ? pa > pb : a < b;
    });
    for (VertexSet h : homs) {
        bool covered = false;
        for (VertexSet kept : out.sets)
            if ((h & ~kept) == 0) covered = true;
        if (!covered) out.sets.push_back(h);
    }
    std::sort(out.sets.begin(), out.sets.end());
    for (std::size_t i = 0; i < out.sets.size() && out.pairwise_disjoint; ++i)
        for (std::size_t j = i + 1; j < out.sets.size(); ++j)
            if (out.sets[i] & out.sets[j]) out.pairwise_disjoint = false;
    return out;
}

namespace {

std::vector<VertexSet> co_components(const Graph& g, VertexSet s) {
    return components_of_subset(complement(g), s);
}

CliqueSeparatorOfModules separator_at(const Graph& g, VertexSet x) {
    CliqueSeparatorOfModules r;
    r.separator = x;
    r.parts = co_components(g, x);
    auto comps = components_of_subset(g, g.vertices() & ~x);
    r.side1 = comps[0] | x;
    r.side2 = x;
    for (std::size_t j = 1; j < comps.size(); ++j) r.side2 |= comps[j];
    return r;
}

}  // namespace

bool is_clique_separator_of_modules(const Graph& g, VertexSet x) {
    x &= g.vertices();
    if (!x || x == g.vertices()) return false;
    if (components_of_subset(g, g.vertices() & ~x).size() < 2) return false;
    for (VertexSet part : co_components(g, x))
        if (!is_module(g, part)) return false;
    return true;
}

std::optional<CliqueSeparatorOfModules> find_clique_separator_of_modules(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("separator search needs a connected graph");
    int n = g.order();
    if (n > 20) throw BudgetError("separator search limited to 20 vertices");
    if (n < 3) return std::nullopt;

    // plain clique candidates first, then unions involving larger modules;
    // smallest separator first within each family
    for (int want_clique = 1; want_clique >= 0; --want_clique) {
        for (int size = 1; size <= n - 2; ++size) {
            VertexSet x = (VertexSet{1} << size) - 1;
            while (x < (VertexSet{1} << n)) {
                if (is_clique(g, x) == static_cast<bool>(want_clique) &&
                    is_clique_separator_of_modules(g, x))
                    return separator_at(g, x);
                VertexSet c = x & (~x + 1);
                VertexSet r = x + c;
                x = (((r ^ x) >> 2) / c) | r;
            }
        }
    }
    return std::nullopt;
}

TrichotomyResult module_trichotomy(const Graph& g, const Graph& f, VertexSet m) {
    if (!is_connected(g)) throw std::invalid_argument("module trichotomy needs a connected graph");
    Graph composite = build_qf(f);
    if (auto w = find_induced(g, composite))
        throw PreconditionError("host contains the composite pattern of the forbidden graph", *w);
    if (!is_module(g, m)) throw std::invalid_argument("given set is not a module");

    if (!contains_induced(induced(g, m), f)) return {ModuleCase::PatternFree, std::nullopt};
    if (neighborhood_shell(g, m, 2) == 0) return {ModuleCase::EmptyShell, std::nullopt};

    VertexSet x = neighbors_of_set(g, m);
    if (!is_clique_separator_of_modules(g, x))
        throw std::logic_error("module trichotomy fell through");
    CliqueSeparatorOfModules r;
    r.separator = x;
    r.parts = co_components(g, x);
    r.side1 = m | x;
    r.side2 = g.vertices() & ~m;
    return {ModuleCase::Separator, r};
}

namespace {

VertexWeights restrict_weights(const VertexWeights& q, VertexSet s) {
    VertexWeights r(q.size(), 0);
    bits::for_each(s, [&](int v) { r[v] = q[v]; });
    return r;
}

struct DecomposeContext {
    const Graph& g;
    const ChiOracle& oracle;
};

// scope equals the support of q, is connected, and q is minimal for the host.
void decompose_scope(DecomposeContext& ctx, VertexSet scope, const VertexWeights& q,
                     std::vector<DecompositionPart>& out) {
    auto factors = co_components(ctx.g, scope);
    if (factors.size() > 1) {
        for (VertexSet c : factors) decompose_scope(ctx, c, restrict_weights(q, c), out);
        return;
    }

    Graph h = induced(ctx.g, scope);
    auto homs = maximal_homogeneous_sets(h);
    if (!homs.pairwise_disjoint)
        throw std::logic_error("overlapping homogeneous sets under minimal weights");

    auto host_of = bits::to_list(scope);
    DecompositionPart part;
    part.vertices = scope;
    part.weights = q;
    std::vector<VertexSet> collapsed;
    for (VertexSet local : homs.sets) {
        VertexSet host_set = 0;
        bits::for_each(local, [&](int i) { host_set |= bits::bit(host_of[i]); });
        if (!is_clique(ctx.g, host_set))
            throw std::logic_error("non-clique homogeneous set under minimal weights");
        int rep = bits::lowest(host_set);
        int sum = 0;
        bits::for_each(host_set, [&](int v) {
            sum += part.weights[v];
            part.weights[v] = 0;
        });
        part.weights[rep] = sum;
        collapsed.push_back(host_set);
    }

    VertexSet kept = weight_support(part.weights);
    bits::for_each(kept, [&](int v) {
        VertexSet bag = bits::bit(v);
        for (VertexSet c : collapsed)
            if (bits::has(c, v)) bag = c;
        part.bags.push_back(bag);
        part.quotient_weights.push_back(part.weights[v]);
    });
    part.quotient = induced(ctx.g, kept);
    part.chi = ctx.oracle(part.weights);

    if (!is_prime(part.quotient)) throw std::logic_error("quotient is not prime");
    if (part.quotient.order() >= 3 && find_clique_separator_of_modules(part.quotient))
        throw std::logic_error("quotient has a clique-separator of modules");
    out.push_back(std::move(part));
}

}  // namespace

Decomposition decompose_weighted(const Graph& g, const VertexWeights& q, const ChiOracle& oracle) {
    check_weights(g, q);
    if (g.order() == 0) throw std::invalid_argument("decomposition needs at least one vertex");
    if (auto w = find_induced(g, build_qf(pattern_graph("P4"))))
        throw PreconditionError("host contains the P4 quotient pattern", *w);

    Decomposition d;
    d.minimal_weights = minimalize_weights(g, q, oracle);
    VertexSet supp = weight_support(d.minimal_weights);
    if (!supp) {
        DecompositionPart part;
        part.vertices = bits::bit(0);
        part.weights = VertexWeights(g.order(), 0);
        d.parts.push_back(std::move(part));
        return d;
    }
    DecomposeContext ctx{g, oracle};
    decompose_scope(ctx, supp, d.minimal_weights, d.parts);
    for (const auto& p : d.parts) d.chi_total += p.chi;
    return d;
}

Decomposition decompose_weighted(const Graph& g, const VertexWeights& q) {
    return decompose_weighted(g, q, default_chi_oracle(g));
}

std::string decomposition_json(const Decomposition& d) {
    nlohmann::json j;
    j["chi"] = d.chi_total;
    j["minimal_weights"] = d.minimal_weights;
    j["parts"] = nlohmann::json::array();
    for (const auto& p : d.parts) {
        nlohmann::json jp;
        jp["vertices"] = bits::to_list(p.vertices);
        jp["weights"] = p.weights;
        jp["bags"] = nlohmann::json::array();
        for (VertexSet b : p.bags) jp["bags"].push_back(bits::to_list(b));
        jp["quotient"] = write_graph6(p.quotient);
        jp["quotient_weights"] = p.quotient_weights;
        jp["chi"] = p.chi;
        j["parts"].push_back(jp);
    }
    return j.dump();
}

}  // namespace chiforge
