#include "chiforge/coloring.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <memory>
#include <unordered_map>

#include <nlohmann/json.hpp>

namespace chiforge {

namespace {

// Non-neighbours of v (excluding v): adjacency in the complement.
inline VertexSet co_row(const Graph& g, int v) {
    return ~(g.neighbors(v) | bits::bit(v)) & g.vertices();
}

// Bron-Kerbosch with pivoting on the complement: enumerates maximal
// independent sets. fn returns false to abort the enumeration.
template <class Fn>
bool bk_mis(const Graph& g, VertexSet r, VertexSet p, VertexSet x, Fn&& fn) {
    if (!p && !x) return fn(r);
    VertexSet px = p | x;
    int pivot = -1, best = -1;
    bits::for_each(px, [&](int v) {
        int c = bits::popcount(p & co_row(g, v));
        if (c > best) {
            best = c;
            pivot = v;
        }
    });
    VertexSet cand = p & ~co_row(g, pivot);
    while (cand) {
        int v = bits::lowest(cand);
        cand &= cand - 1;
        if (!bk_mis(g, r | bits::bit(v), p & co_row(g, v), x & co_row(g, v), fn)) return false;
        p &= ~bits::bit(v);
        x |= bits::bit(v);
    }
    return true;
}

// Maximal independent subsets of 'mask' containing its lowest vertex.
template <class Fn>
void for_each_mis_at_lowest(const Graph& g, VertexSet mask, Fn&& fn) {
    int v = bits::lowest(mask);
    bk_mis(g, bits::bit(v), mask & co_row(g, v), 0, fn);
}

struct WeightedCliqueSearch {
    const Graph& g;
    const VertexWeights& w;
    int best = 0;

    void run(VertexSet cand, int cur) {
        if (cur > best) best = cur;
        int rem = weight_of_set(w, cand);
        while (cand) {
            if (cur + rem <= best) return;
            int v = bits::lowest(cand);
            cand &= cand - 1;
            rem -= w[v];
            run(cand & g.neighbors(v), cur + w[v]);
        }
    }
};

int greedy_chromatic(const Graph& g) {
    int n = g.order();
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
    });
    std::vector<int> color(n, -1);
    int k = 0;
    for (int u : order) {
        std::uint64_t taken = 0;
        bits::for_each(g.neighbors(u), [&](int v) {
            if (color[v] >= 0) taken |= bits::bit(color[v]);
        });
        int c = bits::lowest(~taken);
        color[u] = c;
        k = std::max(k, c + 1);
    }
    return k;
}

struct CoverSearch {
    const Graph& g;
    int alpha;
    std::unordered_map<std::uint64_t, int> failed;  // mask -> highest k proven infeasible
    std::vector<VertexSet> classes;

    bool cover(VertexSet mask, int k) {
        if (!mask) return true;
        if ((bits::popcount(mask) + alpha - 1) / alpha > k) return false;
        auto it = failed.find(mask);
        if (it != failed.end() && k <= it->second) return false;
        bool done = false;
        for_each_mis_at_lowest(g, mask, [&](VertexSet i) {
            classes.push_back(i);
            if (cover(mask & ~i, k - 1)) {
                done = true;
                return false;
            }
            classes.pop_back();
            return true;
        });
        if (!done) {
            int& slot = failed[mask];
            slot = std::max(slot, k);
        }
        return done;
    }
};

std::pair<int, std::vector<VertexSet>> mis_cover_with_classes(const Graph& g) {
    int n = g.order();
    if (n == 0) return {0, {}};
    if (n > kSolverMaxVertices)
        throw BudgetError("chromatic solver limited to " + std::to_string(kSolverMaxVertices) +
                          " vertices");
    int alpha = independence_number(g);
    int lb = std::max(clique_number(g), (n + alpha - 1) / alpha);
    int ub = greedy_chromatic(g);
    CoverSearch cs{g, alpha, {}, {}};
    for (int k = lb; k <= ub; ++k) {
        cs.classes.clear();
        if (cs.cover(g.vertices(), k)) return {k, cs.classes};
    }
    throw std::logic_error("cover search failed below its greedy upper bound");
}

std::vector<std::uint8_t> chi_table_impl(const Graph& g, int max_bits) {
    int n = g.order();
    if (n > max_bits)
        throw BudgetError("subset table limited to " + std::to_string(max_bits) + " vertices");
    std::vector<std::uint8_t> dp(std::size_t{1} << n);
    dp[0] = 0;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
        int best = INT_MAX;
        for_each_mis_at_lowest(g, s, [&](VertexSet i) {
            best = std::min(best, static_cast<int>(dp[s & ~i]));
            return true;
        });
        dp[s] = static_cast<std::uint8_t>(best + 1);
    }
    return dp;
}

}  // namespace

int clique_number_weighted(const Graph& g, const VertexWeights& q) {
    check_weights(g, q);
    WeightedCliqueSearch s{g, q};
    s.run(weight_support(q), 0);
    return s.best;
}

int clique_number(const Graph& g) { return clique_number_weighted(g, unit_weights(g.order())); }

int independence_number(const Graph& g) { return clique_number(complement(g)); }

int independence_number_weighted(const Graph& g, const VertexWeights& q) {
    return clique_number_weighted(complement(g), q);
}

bool ColoringCertificate::validate(const Graph& g, const VertexWeights& q) const {
    if (static_cast<int>(colors.size()) != g.order()) return false;
    if (static_cast<int>(q.size()) != g.order()) return false;
    for (int u = 0; u < g.order(); ++u) {
        const auto& cu = colors[u];
        if (static_cast<int>(cu.size()) != q[u]) return false;
        for (std::size_t i = 0; i < cu.size(); ++i) {
            if (cu[i] < 0 || cu[i] >= palette) return false;
            if (i > 0 && cu[i] <= cu[i - 1]) return false;  // sorted, distinct
        }
        for (int v = u + 1; v < g.order(); ++v) {
            if (!g.adjacent(u, v)) continue;
            for (int a : cu)
                for (int b : colors[v])
                    if (a == b) return false;
        }
    }
    return true;
}

bool ColoringCertificate::validate(const Graph& g) const {
    return validate(g, unit_weights(g.order()));
}

std::string certificate_json(const ColoringCertificate& c) {
    nlohmann::json j;
    j["k"] = c.palette;
    j["colours"] = c.colors;
    return j.dump();
}

int chi_mis_cover(const Graph& g) { return mis_cover_with_classes(g).first; }

std::vector<std::uint8_t> chi_table(const Graph& g) { return chi_table_impl(g, 20); }

int chi_subset_dp(const Graph& g) {
    if (g.order() == 0) return 0;
    return chi_table_impl(g, kSolverMaxVertices)[g.vertices()];
}

ChiResult chromatic_number(const Graph& g) {
    auto [chi, classes] = mis_cover_with_classes(g);
    int check = chi_subset_dp(g);
    if (chi != check) throw std::logic_error("chromatic engines disagree");
    ColoringCertificate cert;
    cert.palette = chi;
    cert.colors.assign(g.order(), {});
    for (std::size_t c = 0; c < classes.size(); ++c)
        bits::for_each(classes[c], [&](int u) { cert.colors[u] = {static_cast<int>(c)}; });
    return {chi, cert};
}

int chi_weighted_via_expansion(const Graph& g, const VertexWeights& q) {
    check_weights(g, q);
    Graph ex = expansion(g, q);
    if (ex.order() > kSolverMaxVertices)
        throw BudgetError("expansion beyond solver budget of " +
                          std::to_string(kSolverMaxVertices) + " vertices");
    int chi = chi_mis_cover(ex);
    if (ex.order() <= 16 && chi != chi_subset_dp(ex))
        throw std::logic_error("chromatic engines disagree on expansion");
    return chi;
}

namespace {

struct SetColoringSearch {
    const Graph& g;
    const VertexWeights& q;
    int k;
    std::uint64_t all_colors;
    std::vector<std::uint64_t> avail;
    std::vector<std::uint64_t> chosen;
    std::uint64_t used = 0;
    VertexSet pending = 0;

    bool assign() {
        if (!pending) return true;
        int u = -1, best_slack = INT_MAX;
        bits::for_each(pending, [&](int v) {
            int slack = bits::popcount(avail[v]) - q[v];
            if (slack < best_slack) {
                best_slack = slack;
                u = v;
            }
        });
        if (best_slack < 0) return false;

        std::uint64_t ua = avail[u] & used;
        std::uint64_t fresh = all_colors & ~used;
        int fresh_count = bits::popcount(fresh);
        int max_reuse = std::min(q[u], bits::popcount(ua));
        for (int j = max_reuse; j >= std::max(0, q[u] - fresh_count); --j) {
            std::uint64_t fresh_part = 0;
            std::uint64_t f = fresh;
            for (int t = 0; t < q[u] - j; ++t) {
                fresh_part |= f & (~f + 1);
                f &= f - 1;
            }
            // Gosper's hack over j-subsets of the already-used available colours.
            std::uint64_t sub = (std::uint64_t{1} << j) - 1;
            while (true) {
                std::uint64_t reuse_part = 0;
                if (j > 0) {
                    // spread subset bits of 'sub' onto the bits of ua
                    std::uint64_t m = ua, s = sub;
                    while (s) {
                        std::uint64_t low = m & (~m + 1);
                        if (s & 1) reuse_part |= low;
                        m &= m - 1;
                        s >>= 1;
                    }
                }
                if (try_set(u, reuse_part | fresh_part)) return true;
                if (j == 0) break;
                std::uint64_t c = sub & (~sub + 1);
                std::uint64_t r = sub + c;
                sub = (((r ^ sub) >> 2) / c) | r;
                if (sub >= (std::uint64_t{1} << bits::popcount(ua))) break;
            }
        }
        return false;
    }

    bool try_set(int u, std::uint64_t s) {
        std::uint64_t saved_used = used;
        VertexSet touched = g.neighbors(u) & pending;
        std::vector<std::pair<int, std::uint64_t>> saved;
        bool ok = true;
        bits::for_each(touched, [&](int v) {
            saved.push_back({v, avail[v]});
            avail[v] &= ~s;
            if (bits::popcount(avail[v]) < q[v]) ok = false;
        });
        if (ok) {
            chosen[u] = s;
            pending &= ~bits::bit(u);
            used |= s;
            if (assign()) return true;
            pending |= bits::bit(u);
            chosen[u] = 0;
        }
        used = saved_used;
        for (auto& [v, a] : saved) avail[v] = a;
        return false;
    }
};

int greedy_set_coloring(const Graph& g, const VertexWeights& q) {
    int n = g.order();
    std::vector<int> order;
    for (int u = 0; u < n; ++u)
        if (q[u] > 0) order.push_back(u);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (q[a] != q[b]) return q[a] > q[b];
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    std::vector<std::uint64_t> sets(n, 0);
    int k = 0;
    for (int u : order) {
        std::uint64_t taken = 0;
        bits::for_each(g.neighbors(u), [&](int v) { taken |= sets[v]; });
        std::uint64_t s = 0;
        std::uint64_t free = ~taken;
        for (int t = 0; t < q[u]; ++t) {
            std::uint64_t low = free & (~free + 1);
            s |= low;
            free &= free - 1;
        }
        sets[u] = s;
        k = std::max(k, 64 - std::countl_zero(s));
    }
    return k;
}

}  // namespace

ChiResult chi_weighted_direct(const Graph& g, const VertexWeights& q) {
    check_weights(g, q);
    int n = g.order();
    int total = weight_total(q);
    ColoringCertificate cert;
    cert.colors.assign(n, {});
    if (total == 0) return {0, cert};
    if (total > kSolverMaxVertices)
        throw BudgetError("total weight beyond solver budget of " +
                          std::to_string(kSolverMaxVertices));

    VertexSet supp = weight_support(q);
    int alpha = independence_number(induced(g, supp));
    int lb = std::max(clique_number_weighted(g, q), (total + alpha - 1) / alpha);
    int ub = greedy_set_coloring(g, q);

    for (int k = lb; k <= ub; ++k) {
        SetColoringSearch search{g, q, k, (std::uint64_t{1} << k) - 1, {}, {}, 0, 0};
        search.avail.assign(n, search.all_colors);
        search.chosen.assign(n, 0);
        search.pending = supp;
        if (search.assign()) {
            cert.palette = k;
            for (int u = 0; u < n; ++u)
                cert.colors[u] = bits::to_list(search.chosen[u]);
            return {k, cert};
        }
    }
    throw std::logic_error("set colouring failed below its greedy upper bound");
}

ChiResult chromatic_number_weighted(const Graph& g, const VertexWeights& q) {
    ChiResult direct = chi_weighted_direct(g, q);
    int via_expansion = chi_weighted_via_expansion(g, q);
    if (direct.chi != via_expansion)
        throw std::logic_error("weighted chromatic routes disagree");
    return direct;
}

WeightLatticeChi::WeightLatticeChi(const Graph& g, const VertexWeights& cap) : cap_(cap) {
    check_weights(g, cap);
    int n = g.order();
    stride_.resize(n);
    std::uint64_t states = 1;
    for (int i = 0; i < n; ++i) {
        stride_[i] = states;
        states *= static_cast<std::uint64_t>(cap[i]) + 1;
        if (states > (std::uint64_t{1} << 24)) throw BudgetError("weight lattice too large");
    }
    dp_.assign(states, 0);

    std::unordered_map<VertexSet, std::vector<VertexSet>> mis_cache;
    VertexWeights digit(n, 0);
    VertexSet support = 0;
    for (std::uint64_t idx = 1; idx < states; ++idx) {
        // odometer step
        for (int i = 0;; ++i) {
            if (digit[i] < cap[i]) {
                ++digit[i];
                support |= bits::bit(i);
                break;
            }
            digit[i] = 0;
            support &= ~bits::bit(i);
        }
        auto it = mis_cache.find(support);
        if (it == mis_cache.end()) {
            std::vector<VertexSet> list;
            for_each_mis_at_lowest(g, support, [&](VertexSet s) {
                list.push_back(s);
                return true;
            });
            it = mis_cache.emplace(support, std::move(list)).first;
        }
        int best = INT_MAX;
        for (VertexSet i : it->second) {
            std::uint64_t child = idx;
            bits::for_each(i, [&](int v) { child -= stride_[v]; });
            best = std::min(best, static_cast<int>(dp_[child]));
        }
        dp_[idx] = static_cast<std::uint8_t>(best + 1);
    }
}

int WeightLatticeChi::chi(const VertexWeights& q) const {
    if (q.size() != cap_.size()) throw std::invalid_argument("weight length mismatch");
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (q[i] < 0 || q[i] > cap_[i]) throw std::invalid_argument("weight outside lattice cap");
        idx += static_cast<std::uint64_t>(q[i]) * stride_[i];
    }
    return dp_[idx];
}

int WeightLatticeChi::chi_of_subset(const VertexWeights& q, VertexSet s) const {
    if (q.size() != cap_.size()) throw std::invalid_argument("weight length mismatch");
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (!bits::has(s, static_cast<int>(i))) continue;
        if (q[i] < 0 || q[i] > cap_[i]) throw std::invalid_argument("weight outside lattice cap");
        idx += static_cast<std::uint64_t>(q[i]) * stride_[i];
    }
    return dp_[idx];
}

int chi_weighted_lattice(const Graph& g, const VertexWeights& q) {
    return WeightLatticeChi(g, q).chi(q);
}

ChiOracle default_chi_oracle(const Graph& g) {
    return [g](const VertexWeights& q) {
        if (weight_total(q) <= kSolverMaxVertices) return chi_weighted_via_expansion(g, q);
        return chi_weighted_lattice(g, q);
    };
}

C5ChiFormula chi_weighted_c5_closed_form(const VertexWeights& q) {
    if (q.size() != 5) throw std::invalid_argument("closed form needs exactly 5 weights");
    for (int w : q)
        if (w < 0) throw std::invalid_argument("negative vertex weight");
    int omega = 0, total = 0;
    for (int i = 0; i < 5; ++i) {
        omega = std::max(omega, q[i] + q[(i + 1) % 5]);
        total += q[i];
    }
    int value = std::max(omega, (total + 1) / 2);
    int bound = omega == 0 ? 0 : (5 * omega + 2) / 4;
    if (value > bound) throw std::logic_error("cycle formula exceeded its stated bound");
    return {value, bound};
}

bool is_critical(const Graph& g) {
    int n = g.order();
    if (n == 0) throw std::invalid_argument("criticality needs at least one vertex");
    if (n <= 20) {
        auto dp = chi_table(g);
        std::uint8_t chi = dp[g.vertices()];
        for (int u = 0; u < n; ++u)
            if (dp[g.vertices() & ~bits::bit(u)] >= chi) return false;
        return true;
    }
    int chi = chi_mis_cover(g);
    for (int u = 0; u < n; ++u)
        if (chi_mis_cover(induced(g, g.vertices() & ~bits::bit(u))) >= chi) return false;
    return true;
}

VertexWeights minimalize_weights(const Graph& g, const VertexWeights& q,
                                 const ChiOracle& oracle) {
    check_weights(g, q);
    VertexWeights cur = q;
    int chi = oracle(cur);
    for (int u = 0; u < g.order(); ++u) {
        while (cur[u] > 0) {
            --cur[u];
            if (oracle(cur) != chi) {
                ++cur[u];
                break;
            }
        }
    }
    return cur;
}

namespace {

// One lattice table answers every query at or below q.
ChiOracle oracle_below(const Graph& g, const VertexWeights& q) {
    std::uint64_t states = 1;
    bool small = true;
    for (int w : q) {
        states *= static_cast<std::uint64_t>(w) + 1;
        if (states > (std::uint64_t{1} << 22)) {
            small = false;
            break;
        }
    }
    if (small) {
        auto table = std::make_shared<WeightLatticeChi>(g, q);
        return [table](const VertexWeights& v) { return table->chi(v); };
    }
    return default_chi_oracle(g);
}

}  // namespace

VertexWeights minimalize_weights(const Graph& g, const VertexWeights& q) {
    check_weights(g, q);
    return minimalize_weights(g, q, oracle_below(g, q));
}

bool is_weight_minimal(const Graph& g, const VertexWeights& q, const ChiOracle& oracle) {
    check_weights(g, q);
    VertexWeights cur = q;
    int chi = oracle(cur);
    for (int u = 0; u < g.order(); ++u) {
        if (cur[u] == 0) continue;
        --cur[u];
        bool same = oracle(cur) == chi;
        ++cur[u];
        if (same) return false;
    }
    return true;
}

bool is_weight_minimal(const Graph& g, const VertexWeights& q) {
    check_weights(g, q);
    return is_weight_minimal(g, q, oracle_below(g, q));
}

int reed_ceiling(const Graph& g) {
    return (g.max_degree() + clique_number(g) + 2) / 2;
}

bool reed_bound_holds(const Graph& g) {
    return chromatic_number(g).chi <= reed_ceiling(g);
}

}  // namespace chiforge
