// End-to-end acceptance gate for the verification harness. Each criterion
// prints one [PASS]/[FAIL] line with its wall time and budget; the binary
// exits nonzero if any criterion fails. Reports land in ./acceptance_reports
// and the generated graph6 catalogs in ./acceptance_catalogs.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "catalog_fixtures.hpp"
#include "chiforge/graph.hpp"
#include "chiforge/harness.hpp"
#include "chiforge/patterns.hpp"

using namespace chiforge;

namespace {

const std::string kReports = "acceptance_reports";
const std::string kCatalogs = "acceptance_catalogs";

std::vector<CatalogSource> builtin_upto(int n) {
    std::vector<CatalogSource> out;
    for (int i = 1; i <= n; ++i) out.push_back(CatalogSource::labeled(i));
    return out;
}

bool has_note(const VerificationReport& r, const std::string& needle) {
    for (const auto& n : r.notes)
        if (n.find(needle) != std::string::npos) return true;
    return false;
}

bool has_note_pair(const VerificationReport& r, const std::string& a, const std::string& b) {
    for (const auto& n : r.notes)
        if (n.find(a) != std::string::npos && n.find(b) != std::string::npos) return true;
    return false;
}

const ExtremalRow* row_of(const VerificationReport& r, int omega) {
    for (const auto& row : r.table)
        if (row.omega == omega) return &row;
    return nullptr;
}

void expect(std::vector<std::string>& problems, bool ok, const std::string& msg) {
    if (!ok) problems.push_back(msg);
}

void expect_pass(std::vector<std::string>& problems, const VerificationReport& r) {
    if (r.pass()) return;
    problems.push_back(r.theorem + ": " + std::to_string(r.failures.size()) +
                       " failures, first: " + r.failures.front().witness + " " +
                       r.failures.front().detail);
}

void expect_row(std::vector<std::string>& problems, const VerificationReport& r, int omega,
                int max_chi) {
    const ExtremalRow* row = row_of(r, omega);
    if (!row)
        problems.push_back(r.theorem + ": no extremal row for omega=" + std::to_string(omega));
    else if (row->max_chi != max_chi)
        problems.push_back(r.theorem + ": omega=" + std::to_string(omega) + " max chi " +
                           std::to_string(row->max_chi) + ", expected " + std::to_string(max_chi));
}

// 1. Closed form on the five-cycle: max(omega_q, ceil(total/2)) equals the
// exact weighted solver for every vector with total <= 20, and the balanced
// recipe attains ceil((5w-1)/4) for w = 1..6.
std::vector<std::string> criterion_closed_form() {
    std::vector<std::string> p;
    VerificationReport r = verify_c5_formula(20);
    write_report(r, kReports);
    expect_pass(p, r);
    expect(p, r.checked == 53136,
           "checked " + std::to_string(r.checked) + ", expected 53136 (53130 vectors, 6 profiles)");
    const int attained[7] = {0, 1, 3, 4, 5, 6, 8};
    for (int w = 1; w <= 6; ++w)
        expect(p,
               has_note_pair(r, "tight profile w=" + std::to_string(w) + " ",
                             "attains ceil((5w-1)/4)=" + std::to_string(attained[w])),
               "missing tight profile note for w=" + std::to_string(w));
    return p;
}

// 2. chi <= ceil((5w-1)/4) for every labeled (P5,C4)-free graph up to 7
// vertices and for a saved catalog with members up to 10 vertices; the bound
// is attained at omega = 1, 2, 3 within the exhaustive range.
std::vector<std::string> criterion_chi_binding() {
    std::vector<std::string> p;
    std::filesystem::create_directories(kCatalogs);
    std::string path = kCatalogs + "/p5c4_members.g6";
    testutil::write_graph6_file(path, testutil::p5c4_members());

    VerificationReport small = verify_thm12_iv(builtin_upto(7));
    expect_pass(p, small);
    expect_row(p, small, 1, 1);
    expect_row(p, small, 2, 3);
    expect_row(p, small, 3, 4);

    auto sources = builtin_upto(7);
    sources.push_back(CatalogSource::file(path));
    VerificationReport full = verify_thm12_iv(sources);
    write_report(full, kReports);
    expect_pass(p, full);
    expect(p, has_note(full, "bound attained at omega=2"), "missing attainment note at omega=2");
    expect(p, has_note(full, "bound attained at omega=6"), "missing attainment note at omega=6");
    return p;
}

// 3. Critical members of the four host classes have the claimed structure:
// no 3K1, no 2K2, no C5 and no 3K1, complete or a five-cycle or five-wheel
// expansion. Exhaustive over all labeled graphs up to 7 vertices.
std::vector<std::string> criterion_critical_structure() {
    std::vector<std::string> p;
    for (int part = 1; part <= 4; ++part) {
        VerificationReport r = verify_thm13(part, builtin_upto(7));
        write_report(r, kReports);
        expect_pass(p, r);
        expect(p, r.checked > 0, r.theorem + ": no critical members audited");
    }
    return p;
}

// 4. chi <= ceil((degree + omega + 1) / 2) for every labeled (P5,banner)-free
// graph up to 7 vertices, with complete graphs and five-cycles logged among
// the tightness instances.
std::vector<std::string> criterion_reed_bound() {
    std::vector<std::string> p;
    VerificationReport r = verify_cor14(builtin_upto(7));
    write_report(r, kReports);
    expect_pass(p, r);
    expect(p, has_note(r, "tight instances:"), "missing tightness tally note");
    expect(p, !has_note(r, "(complete 0,"), "no complete graph among the tight instances");
    expect(p, !has_note(r, "five-cycle 0,"), "no five-cycle among the tight instances");
    return p;
}

// 5. Decomposition audit: for every QP4-free host up to 6 vertices and every
// weight vector with entries in {0,1,2}, chi_q across a clique separator of
// modules equals the side maximum, the decomposition parts sum to chi_q, and
// the quotients are prime and separator-free.
std::vector<std::string> criterion_decomposition() {
    std::vector<std::string> p;
    VerificationReport r = verify_decomposition_lemmas(builtin_upto(6), 2026);
    write_report(r, kReports);
    expect_pass(p, r);
    expect(p, r.checked == 24142125,
           "checked " + std::to_string(r.checked) + ", expected 24142125");
    expect(p, has_note(r, "weight grids: full {0,1,2}^n for n <= 6"), "missing grid note");
    return p;
}

// 6. The expansion route and the direct weighted solver agree on 1000 seeded
// random (graph, weights) pairs with total weight <= 18.
std::vector<std::string> criterion_expansion_agreement() {
    std::vector<std::string> p;
    VerificationReport r = verify_expansion_chi_agreement(1000, 18, 2026);
    write_report(r, kReports);
    expect_pass(p, r);
    expect(p, r.checked == 1000, "checked " + std::to_string(r.checked) + ", expected 1000");
    return p;
}

// 7. Superadditivity under join for the three base classes: the join of
// catalog-extremal members at clique numbers w1, w2 in {1,2} stays in the
// class with both omega and chi additive.
std::vector<std::string> criterion_superadditivity() {
    std::vector<std::string> p;
    const GraphClass classes[] = {GraphClass::ThreeK1Free, GraphClass::TwoK2Free,
                                  GraphClass::C5ThreeK1Free};
    std::vector<VerificationReport> cells;
    for (GraphClass cls : classes)
        for (int w1 = 1; w1 <= 2; ++w1)
            for (int w2 = 1; w2 <= 2; ++w2)
                cells.push_back(verify_superadditivity(cls, w1, w2, builtin_upto(6)));
    VerificationReport merged = merge_reports("3.7", cells);
    write_report(merged, kReports);
    expect_pass(p, merged);
    expect(p, has_note(merged, "hypothesis holds for 3K1"), "missing 3K1 hypothesis note");
    expect(p, has_note(merged, "hypothesis holds for 2K2"), "missing 2K2 hypothesis note");
    expect(p, has_note(merged, "hypothesis holds for C5"), "missing C5 hypothesis note");
    return p;
}

// 8. Desk-scale substitute for the global binding-function equalities: the
// catalog-relative reduction tables with Ramsey-closed rows flagged, plus the
// prime perfection dichotomy over the exhaustive range and a saved catalog
// with prime members of 8 or more vertices. The open rows are observations,
// not proofs, and the reports say so.
std::vector<std::string> criterion_scale_substitutes() {
    std::vector<std::string> p;
    std::filesystem::create_directories(kCatalogs);
    std::string path = kCatalogs + "/banner_members.g6";
    testutil::write_graph6_file(path, testutil::banner_members());

    struct Pair {
        GraphClass host, base;
    };
    const Pair pairs[] = {{GraphClass::P5BannerFree, GraphClass::ThreeK1Free},
                          {GraphClass::P5CoBannerFree, GraphClass::TwoK2Free},
                          {GraphClass::OddHoleBannerFree, GraphClass::C5ThreeK1Free}};
    for (const Pair& pr : pairs) {
        VerificationReport r = verify_thm12_reductions(pr.host, pr.base, builtin_upto(6));
        write_report(r, kReports);
        expect_pass(p, r);
        expect(p, has_note(r, "(closed row)"), r.theorem + ": no Ramsey-closed row");
        expect(p, has_note(r, "no finite catalog certifies it"),
               r.theorem + ": missing the open-row disclaimer");
    }

    auto sources = builtin_upto(7);
    sources.push_back(CatalogSource::file(path));
    for (GraphClass cls : {GraphClass::P5BannerFree, GraphClass::OddHoleBannerFree}) {
        VerificationReport r = verify_prime_dichotomy(cls, sources);
        write_report(r, kReports);
        expect_pass(p, r);
        expect(p, has_note_pair(r, "primes audited by order:", "n=8:"),
               r.theorem + ": no prime members of order 8 audited");
    }
    return p;
}

struct Criterion {
    const char* name;
    double budget_seconds;
    std::function<std::vector<std::string>()> body;
};

}  // namespace

int main() {
    std::filesystem::create_directories(kReports);
    const std::vector<Criterion> criteria = {
        {"1. five-cycle closed form vs exact solver", 60, criterion_closed_form},
        {"2. chi bound on (P5,C4)-free catalogs", 600, criterion_chi_binding},
        {"3. critical members match the structure claims", 1800, criterion_critical_structure},
        {"4. Reed bound on (P5,banner)-free graphs", 600, criterion_reed_bound},
        {"5. decomposition audit over weighted hosts", 1800, criterion_decomposition},
        {"6. expansion route agrees with weighted solver", 600, criterion_expansion_agreement},
        {"7. superadditive classes under join", 300, criterion_superadditivity},
        {"8. reduction tables and prime dichotomy", 900, criterion_scale_substitutes},
    };

    int failed = 0;
    for (const Criterion& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::vector<std::string> problems;
        try {
            problems = c.body();
        } catch (const std::exception& e) {
            problems.push_back(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > c.budget_seconds)
            problems.push_back("over budget: " + std::to_string(secs) + "s > " +
                               std::to_string(c.budget_seconds) + "s");
        bool ok = problems.empty();
        std::printf("[%s] %-48s %8.1fs (budget %.0fs)\n", ok ? "PASS" : "FAIL", c.name, secs,
                    c.budget_seconds);
        for (const auto& msg : problems) std::printf("       - %s\n", msg.c_str());
        if (!ok) ++failed;
    }
    if (failed) std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed ? 1 : 0;
}
