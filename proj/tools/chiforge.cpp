// Command-line front end: single-graph queries (detect, color, decompose,
// critical, expand), catalog surveys, and theorem verification sweeps.
// Exit codes: 0 success, 1 usage error, 2 malformed input, 3 verification
// failures (reports are still written), 4 budget exceeded.

#include <cstdint>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "chiforge/coloring.hpp"
#include "chiforge/decompose.hpp"
#include "chiforge/graph.hpp"
#include "chiforge/harness.hpp"
#include "chiforge/patterns.hpp"

using namespace chiforge;

namespace {

std::vector<int> parse_weight_list(const std::string& text) {
    std::vector<int> w;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t used = 0;
        int value = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("bad weight entry: " + tok);
        w.push_back(value);
    }
    if (w.empty()) throw std::invalid_argument("empty weight list");
    return w;
}

VertexWeights weights_or_ones(const Graph& g, const std::string& text) {
    if (text.empty()) return unit_weights(g.order());
    VertexWeights q = parse_weight_list(text);
    check_weights(g, q);
    return q;
}

GraphClass class_from_token(const std::string& token) {
    for (GraphClass c : kAllClasses)
        if (token == class_name(c)) return c;
    std::string known;
    for (GraphClass c : kAllClasses) known += std::string(" ") + class_name(c);
    throw std::invalid_argument("unknown class token '" + token + "'; known:" + known);
}

std::vector<CatalogSource> parse_sources(const std::vector<std::string>& tokens) {
    std::vector<CatalogSource> out;
    for (const auto& t : tokens) {
        if (t.rfind("builtin:", 0) == 0) {
            int n = std::stoi(t.substr(8));
            labeled_count(n);  // validates the order range
            for (int i = 1; i <= n; ++i) out.push_back(CatalogSource::labeled(i));
        } else if (t.rfind("file:", 0) == 0) {
            out.push_back(CatalogSource::file(t.substr(5)));
        } else {
            throw std::invalid_argument("source must be builtin:<n> or file:<path>, got " + t);
        }
    }
    return out;
}

int run_detect(const std::string& g6, const std::string& pattern, bool json) {
    Graph g = parse_graph6(g6);
    auto w = find_induced(g, pattern_graph(pattern));
    if (json) {
        nlohmann::json j;
        j["pattern"] = pattern;
        j["free"] = !w.has_value();
        j["witness"] = nlohmann::json::array();
        if (w)
            for (int v : *w) j["witness"].push_back(v);
        std::cout << j.dump(2) << "\n";
    } else if (w) {
        std::cout << "witness:";
        for (int v : *w) std::cout << " " << v;
        std::cout << "\n";
    } else {
        std::cout << "free\n";
    }
    return 0;
}

int run_color(const std::string& g6, const std::string& wtext, bool json) {
    Graph g = parse_graph6(g6);
    bool weighted = !wtext.empty();
    VertexWeights q = weights_or_ones(g, wtext);
    ChiResult r = weighted ? chromatic_number_weighted(g, q) : chromatic_number(g);
    const char* label = weighted ? "chi_q" : "chi";
    if (json) {
        nlohmann::json j;
        j[label] = r.chi;
        j["certificate"] = nlohmann::json::parse(certificate_json(r.certificate));
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << label << "=" << r.chi << "\n";
    }
    return 0;
}

int run_decompose(const std::string& g6, const std::string& wtext, bool json) {
    Graph g = parse_graph6(g6);
    VertexWeights q = weights_or_ones(g, wtext);
    Decomposition d = decompose_weighted(g, q);
    if (json) {
        std::cout << decomposition_json(d) << "\n";
    } else {
        std::cout << "chi_q=" << d.chi_total << " parts=" << d.parts.size() << "\n";
        for (std::size_t i = 0; i < d.parts.size(); ++i) {
            const DecompositionPart& p = d.parts[i];
            std::cout << "part " << i << ": vertices";
            for (int v : bits::to_list(p.vertices)) std::cout << " " << v;
            std::cout << " chi=" << p.chi << " quotient=" << write_graph6(p.quotient) << "\n";
        }
    }
    return 0;
}

int run_critical(const std::string& g6, bool json) {
    Graph g = parse_graph6(g6);
    if (g.order() == 0) throw std::invalid_argument("criticality needs at least one vertex");
    int chi = chromatic_number(g).chi;
    bool crit = is_critical(g);
    std::vector<int> removed(g.order());
    for (int v = 0; v < g.order(); ++v)
        removed[v] = chromatic_number(induced(g, g.vertices() & ~bits::bit(v))).chi;
    if (json) {
        nlohmann::json j;
        j["chi"] = chi;
        j["critical"] = crit;
        j["removals"] = nlohmann::json::array();
        for (int v = 0; v < g.order(); ++v)
            j["removals"].push_back({{"vertex", v}, {"chi", removed[v]}});
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "chi=" << chi << (crit ? " critical" : " not critical") << "\n";
        for (int v = 0; v < g.order(); ++v)
            std::cout << "remove " << v << ": chi=" << removed[v] << "\n";
    }
    return 0;
}

int run_expand(const std::string& base, const std::string& wtext, bool json) {
    if (base != "C5" && base != "W5") throw std::invalid_argument("base must be C5 or W5");
    VertexWeights w = parse_weight_list(wtext);
    Graph ex = expansion(pattern_graph(base), w);
    if (json) {
        nlohmann::json j;
        j["graph6"] = write_graph6(ex);
        j["order"] = ex.order();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << write_graph6(ex) << "\n";
    }
    return 0;
}

VerificationReport dispatch_verify(const std::string& theorem, const std::vector<CatalogSource>& sources,
                                   const std::string& cls_token, int w1, int w2, int max_total,
                                   int pairs, std::uint64_t seed) {
    if (theorem == "2.3") return verify_c5_formula(max_total > 0 ? max_total : 20);
    if (theorem == "2.2")
        return verify_expansion_chi_agreement(pairs, max_total > 0 ? max_total : 18, seed);
    if (theorem == "1.2iv") return verify_thm12_iv(sources);
    if (theorem == "1.2i")
        return verify_thm12_reductions(GraphClass::P5BannerFree, GraphClass::ThreeK1Free, sources);
    if (theorem == "1.2ii")
        return verify_thm12_reductions(GraphClass::P5CoBannerFree, GraphClass::TwoK2Free, sources);
    if (theorem == "1.2iii")
        return verify_thm12_reductions(GraphClass::OddHoleBannerFree, GraphClass::C5ThreeK1Free,
                                       sources);
    if (theorem == "1.3i") return verify_thm13(1, sources);
    if (theorem == "1.3ii") return verify_thm13(2, sources);
    if (theorem == "1.3iii") return verify_thm13(3, sources);
    if (theorem == "1.3iv") return verify_thm13(4, sources);
    if (theorem == "1.4") return verify_cor14(sources);
    if (theorem == "3.x") return verify_decomposition_lemmas(sources, seed);
    if (theorem == "superadd")
        return verify_superadditivity(class_from_token(cls_token.empty() ? "3K1" : cls_token), w1, w2,
                                      sources);
    if (theorem == "dichotomy")
        return verify_prime_dichotomy(class_from_token(cls_token.empty() ? "P5+banner" : cls_token),
                                      sources);
    throw std::invalid_argument("unknown theorem token: " + theorem);
}

int run_verify(const std::string& theorem, const std::vector<std::string>& source_tokens,
               const std::string& out_dir, const std::string& cls_token, int w1, int w2,
               int max_total, int pairs, std::uint64_t seed, bool json) {
    std::vector<CatalogSource> sources;
    bool needs_sources = theorem != "2.3" && theorem != "2.2";
    if (needs_sources) {
        if (source_tokens.empty())
            throw std::invalid_argument("--source is required for theorem " + theorem);
        sources = parse_sources(source_tokens);
    }
    VerificationReport r =
        dispatch_verify(theorem, sources, cls_token, w1, w2, max_total, pairs, seed);
    write_report(r, out_dir);
    if (json) {
        std::cout << report_json(r) << "\n";
    } else {
        std::cout << "theorem=" << r.theorem << " checked=" << r.checked
                  << " failures=" << r.failures.size() << " rows=" << r.table.size() << "\n";
        std::cout << "reports: " << out_dir << "/" << r.theorem << ".json " << out_dir << "/"
                  << r.theorem << ".csv\n";
        std::size_t shown = std::min<std::size_t>(r.failures.size(), 10);
        for (std::size_t i = 0; i < shown; ++i)
            std::cout << "failure: " << r.failures[i].witness << " " << r.failures[i].detail << "\n";
        if (r.failures.size() > shown)
            std::cout << "... " << (r.failures.size() - shown) << " more failures in the report\n";
    }
    return r.pass() ? 0 : 3;
}

int run_survey(const std::vector<std::string>& source_tokens, const std::string& cls_token,
               bool json) {
    GraphClass cls = class_from_token(cls_token);
    auto sources = parse_sources(source_tokens);
    VerificationReport r;
    r.theorem = std::string("survey-") + class_name(cls);
    std::map<int, ExtremalRow> rows;
    std::uint64_t offset = 0;
    for (const auto& src : sources) {
        src.for_each([&](const Graph& g, std::uint64_t i) {
            if (!in_class(g, cls)) return;
            ++r.checked;
            int w = clique_number(g);
            int chi = chromatic_number(g).chi;
            std::uint64_t idx = offset + i;
            auto it = rows.find(w);
            if (it == rows.end())
                rows.emplace(w, ExtremalRow{w, chi, write_graph6(g), idx});
            else if (chi > it->second.max_chi ||
                     (chi == it->second.max_chi && idx < it->second.first_index))
                it->second = ExtremalRow{w, chi, write_graph6(g), idx};
        });
        offset += src.size();
    }
    for (auto& [w, row] : rows) r.table.push_back(row);
    if (json)
        std::cout << report_json(r) << "\n";
    else
        std::cout << report_csv(r);
    return 0;
}

template <class Fn>
int guarded(const Fn& fn) {
    try {
        return fn();
    } catch (const BudgetError& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return 4;
    } catch (const CapacityError& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "input: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact chromatic engine: pattern detection, weighted colouring, decomposition, "
                 "and catalog verification sweeps"};
    app.require_subcommand(1);

    std::string graph, pattern, weights, base, theorem, cls, out = "reports";
    std::vector<std::string> sources;
    int w1 = 2, w2 = 2, max_total = -1, pairs = 1000;
    std::uint64_t seed = 2026;
    bool json = false;

    CLI::App* detect = app.add_subcommand("detect", "find an induced pattern in a graph");
    detect->add_option("--graph", graph, "graph6 string")->required();
    detect->add_option("--pattern", pattern, "pattern name, e.g. P5, C4, banner")->required();
    detect->add_flag("--json", json, "machine-readable output");

    CLI::App* color = app.add_subcommand("color", "exact chromatic number, weighted when --weights is given");
    color->add_option("--graph", graph, "graph6 string")->required();
    color->add_option("--weights", weights, "comma-separated vertex weights");
    color->add_flag("--json", json, "machine-readable output");

    CLI::App* decomp = app.add_subcommand("decompose", "split a weighted host into joined prime parts");
    decomp->add_option("--graph", graph, "graph6 string")->required();
    decomp->add_option("--weights", weights, "comma-separated vertex weights");
    decomp->add_flag("--json", json, "machine-readable output");

    CLI::App* critical = app.add_subcommand("critical", "criticality and per-vertex chi drops");
    critical->add_option("--graph", graph, "graph6 string")->required();
    critical->add_flag("--json", json, "machine-readable output");

    CLI::App* expand = app.add_subcommand("expand", "clique expansion of the five-cycle or five-wheel");
    expand->add_option("--base", base, "C5 or W5")->required();
    expand->add_option("--weights", weights, "comma-separated bag sizes")->required();
    expand->add_flag("--json", json, "machine-readable output");

    CLI::App* verify = app.add_subcommand("verify", "run a theorem sweep and write report files");
    verify->add_option("--theorem", theorem,
                       "one of 1.2i 1.2ii 1.2iii 1.2iv 1.3i 1.3ii 1.3iii 1.3iv 1.4 2.2 2.3 3.x "
                       "superadd dichotomy")
        ->required();
    verify->add_option("--source", sources, "builtin:<n> or file:<path>, repeatable");
    verify->add_option("--out", out, "report directory (default ./reports)");
    verify->add_option("--class", cls, "class token for superadd and dichotomy");
    verify->add_option("--w1", w1, "first clique number for superadd");
    verify->add_option("--w2", w2, "second clique number for superadd");
    verify->add_option("--max-total", max_total, "weight budget for 2.3 and 2.2");
    verify->add_option("--pairs", pairs, "sample count for 2.2");
    verify->add_option("--seed", seed, "seed for randomised sweeps");
    verify->add_flag("--json", json, "print the report to stdout as well");

    CLI::App* survey = app.add_subcommand("survey", "extremal chi table of a class over catalogs");
    survey->add_option("--source", sources, "builtin:<n> or file:<path>, repeatable")->required();
    survey->add_option("--class", cls, "class token, e.g. P5+C4")->required();
    survey->add_flag("--json", json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);  // help and version print, exit 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    if (*detect) return guarded([&] { return run_detect(graph, pattern, json); });
    if (*color) return guarded([&] { return run_color(graph, weights, json); });
    if (*decomp) return guarded([&] { return run_decompose(graph, weights, json); });
    if (*critical) return guarded([&] { return run_critical(graph, json); });
    if (*expand) return guarded([&] { return run_expand(base, weights, json); });
    if (*verify)
        return guarded([&] {
            return run_verify(theorem, sources, out, cls, w1, w2, max_total, pairs, seed, json);
        });
    if (*survey) return guarded([&] { return run_survey(sources, cls, json); });
    return 1;
}
