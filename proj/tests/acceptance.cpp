// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. All thresholds are fixed below.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>

#include "kmergraph/count_doubling.hpp"
#include "kmergraph/count_dp.hpp"
#include "kmergraph/dbg.hpp"
#include "kmergraph/lcs.hpp"
#include "kmergraph/wheelerize.hpp"
#include "support.hpp"

using namespace kmergraph;
using namespace kmergraph::testing;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kExampleSeconds = 1.0;
constexpr double kSuiteSeconds = 60.0;
constexpr std::size_t kCrossInstances = 200;
constexpr std::size_t kDbgInstances = 50;
constexpr std::size_t kDnfInstances = 30;
constexpr std::size_t kUnfoldInstances = 30;
constexpr std::size_t kOrderInstances = 100;
constexpr double kLinearTolerance = 2.0;
constexpr std::size_t kOracleCap = 200'000;
const std::vector<std::size_t> kCrossKs = {1, 2, 3, 4, 5, 8, 13, 16};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Collects failures of one criterion; only the first few are printed.
struct Verdict {
    std::size_t failures = 0;
    std::string first;

    void fail(const std::string& what) {
        if (failures++ == 0) first = what;
    }
    void expect(bool ok, const std::function<std::string()>& what) {
        if (!ok) fail(what());
    }
};

int failed_criteria = 0;

void report(const std::string& name, const Verdict& v, const std::string& detail) {
    const bool ok = v.failures == 0;
    if (!ok) ++failed_criteria;
    std::cout << (ok ? "PASS " : "FAIL ") << name << ": " << detail;
    if (!ok) std::cout << "; " << v.failures << " failures, first: " << v.first;
    std::cout << std::endl;
}

std::string str(const Count& c) { return to_decimal(c); }

void example_reduction() {
    Verdict v;
    const auto t0 = Clock::now();
    const auto gi = dnf_to_graph(example_formula());
    v.expect(gi.doubled == std::vector<std::size_t>{1, 0, 1}, [] { return std::string("d != [1,0,1]"); });
    const Count brute = count_kmers_brute(gi.graph, 3);
    const Count layered = count_kmers_layered(gi.graph, 3);
    v.expect(brute == 10, [&] { return "brute 3-mers = " + str(brute); });
    v.expect(layered == 10, [&] { return "layered 3-mers = " + str(layered); });
    std::string dwg = "dp/doubling skipped, the gadget numbering is not a Wheeler order";
    if (!check_wheeler(gi.graph)) {
        const auto w = validate_wheeler(gi.graph);
        v.expect(count_kmers_dp(w, 3).total == 10, [] { return std::string("dp != 10"); });
        v.expect(count_kmers_doubling(w, 3).total == 10, [] { return std::string("doubling != 10"); });
        dwg = "dp = doubling = 10";
    }
    const Count sat = sat_count_from_total(gi, brute);
    const Count sat_brute = dnf_count_sat_brute(gi.formula);
    v.expect(sat == 5 && sat_brute == 5, [&] { return "N - sum 2^d = " + str(sat) + ", brute #SAT = " + str(sat_brute); });
    const double secs = seconds_since(t0);
    v.expect(secs < kExampleSeconds, [&] { return "took " + std::to_string(secs) + " s"; });
    std::ostringstream d;
    d << "d=[1,0,1], brute=" << brute << ", layered=" << layered << ", " << dwg << ", N-sum=" << sat
      << ", #SAT=" << sat_brute << ", " << secs << " s (limit " << kExampleSeconds << " s)";
    report("example reduction", v, d.str());
}

void cross_engine() {
    Verdict v;
    const auto t0 = Clock::now();
    std::size_t instances = 0;
    std::size_t dropped = 0;
    std::size_t comparisons = 0;
    std::size_t origin[3] = {0, 0, 0};
    std::uint64_t seed = 1000;
    while (instances < kCrossInstances) {
        for (const auto& inst : dwg_corpus(seed++, 30, 12, 4)) {
            if (instances >= kCrossInstances) break;
            const auto& g = inst.graph;
            std::vector<KmerEnumeration> en;
            try {
                for (std::size_t k : kCrossKs) en.push_back(enumerate_kmers(g, k, kOracleCap));
            } catch (const ResourceCapError&) {
                ++dropped;
                continue;
            }
            ++instances;
            ++origin[static_cast<int>(inst.origin)];
            const auto w = validate_wheeler(g);
            for (std::size_t i = 0; i < kCrossKs.size(); ++i) {
                const std::size_t k = kCrossKs[i];
                const auto dp = count_kmers_dp(w, k);
                const auto db = count_kmers_doubling(w, k);
                const Count brute = en[i].all.members.size();
                ++comparisons;
                v.expect(dp.total == brute && db.total == brute, [&] {
                    return "k=" + std::to_string(k) + " dp=" + str(dp.total) + " doubling=" + str(db.total) +
                           " brute=" + str(brute) + "\n" + to_wgf(g);
                });
                for (Vertex x = 0; x < g.num_vertices(); ++x)
                    v.expect(dp.per_vertex.c[x] == en[i].per_vertex[x].members.size(),
                             [&] { return "per-vertex mismatch k=" + std::to_string(k) + "\n" + to_wgf(g); });
            }
        }
    }
    const double secs = seconds_since(t0);
    v.expect(secs < kSuiteSeconds, [&] { return "took " + std::to_string(secs) + " s"; });
    std::ostringstream d;
    d << instances << " instances (" << origin[0] << " de Bruijn, " << origin[1] << " staircase, " << origin[2]
      << " rejection-sampled; " << dropped << " generated graphs over the oracle cap not used), " << comparisons
      << " (graph, k) totals compared with per-vertex counts, n<=12, sigma<=4, k in {1,2,3,4,5,8,13,16}, " << secs
      << " s (limit " << kSuiteSeconds << " s)";
    report("cross-engine equality", v, d.str());
}

void dbg_equivalence_and_bound() {
    Verdict v;
    Verdict bound;
    const auto t0 = Clock::now();
    std::size_t instances = 0;
    std::size_t builds = 0;
    std::size_t kmers = 0;
    std::uint64_t worst_sum = 0;
    std::uint64_t worst_limit = 0;
    double worst_ratio = -1;
    for (const auto& inst : dwg_corpus(2000, 400, 12, 4)) {
        if (instances >= kDbgInstances + 10) break;
        const auto& g = inst.graph;
        if (g.num_vertices() < 6) continue;
        std::vector<KmerEnumeration> en;
        try {
            for (std::size_t k = 1; k <= 8; ++k) en.push_back(enumerate_kmers(g, k, 50'000));
        } catch (const ResourceCapError&) {
            continue;
        }
        ++instances;
        const auto w = validate_wheeler(g);
        for (std::size_t k = 1; k <= 8; ++k) {
            const auto& e = en[k - 1];
            const auto d = DbgData::build(w, k);
            ++builds;
            const auto got = d.build_explicit();
            const auto want = build_dbg_brute(g, k);
            v.expect(got.nodes == want.nodes && got.edges == want.edges,
                     [&] { return "explicit graph differs, k=" + std::to_string(k) + "\n" + to_wgf(g); });

            for (std::size_t idx = 0; idx < e.all.members.size(); ++idx) {
                const auto& a = e.all.members[idx];
                ++kmers;
                const auto h = d.handle_of(a);
                if (!h) {
                    v.fail("no handle for an oracle k-mer\n" + to_wgf(g));
                    continue;
                }
                const auto at = arrival(e, a);
                v.expect(h->lo == at.front() && h->hi == at.back() && h->j == rank_in(e.per_vertex[h->lo], a) &&
                             d.colex_index(*h) == idx,
                         [&] { return "handle of " + g.display(a) + " is off\n" + to_wgf(g); });
                std::vector<Label> out;
                for (const Edge& x : g.edges())
                    if (h->lo <= x.from && x.from <= h->hi) out.push_back(x.label);
                std::sort(out.begin(), out.end());
                out.erase(std::unique(out.begin(), out.end()), out.end());
                v.expect(d.outgoing_labels(*h) == out, [&] { return "outgoing labels of " + g.display(a); });
                for (Label c = 0; c < g.sigma(); ++c) {
                    LabelString b(a.begin() + 1, a.end());
                    b.push_back(c);
                    const auto f = d.forward(*h, c);
                    const bool exists = e.all.contains(b);
                    v.expect(f.has_value() == exists && (!f || *f == *d.handle_of(b)),
                             [&] { return "forward from " + g.display(a) + " by " + g.display(c) + "\n" + to_wgf(g); });
                }
            }

            std::uint64_t sum = 0;
            for (Vertex x = 0; x < g.num_vertices(); ++x)
                for (auto value : d.k_array(x)) sum += value + (value == 0 ? 1 : 0);
            const std::uint64_t limit = want.edges.size() + want.num_nodes;
            bound.expect(sum <= limit, [&] {
                return "sum " + std::to_string(sum) + " > " + std::to_string(limit) + "\n" + to_wgf(g);
            });
            const double ratio = limit == 0 ? 0 : static_cast<double>(sum) / static_cast<double>(limit);
            if (ratio > worst_ratio) {
                worst_ratio = ratio;
                worst_sum = sum;
                worst_limit = limit;
            }
        }
    }
    const double secs = seconds_since(t0);
    v.expect(instances >= kDbgInstances, [&] { return "only " + std::to_string(instances) + " instances"; });
    v.expect(secs < kSuiteSeconds, [&] { return "took " + std::to_string(secs) + " s"; });
    std::ostringstream d;
    d << instances << " instances with 6<=n<=12, " << builds << " builds (k=1..8), " << kmers
      << " oracle k-mers checked for handle/rank/forward/labels, " << secs << " s (limit " << kSuiteSeconds << " s)";
    report("de Bruijn simulation equivalence", v, d.str());
    std::ostringstream b;
    b << builds << " builds, tightest case " << worst_sum << " <= " << worst_limit;
    report("K-array value bound", bound, b.str());
}

void reduction_identity() {
    Verdict v;
    Rng rng(3000);
    for (std::size_t i = 0; i < kDnfInstances + 10; ++i) {
        const auto f = random_dnf(rng, 1 + rng() % 10, 1 + rng() % 6);
        const auto gi = dnf_to_graph(f);
        const Count want = dnf_count_sat_brute(f);
        const Count brute = sat_count_from_graph(gi, GadgetCounter::Brute);
        const Count layered = sat_count_from_graph(gi, GadgetCounter::Layered);
        v.expect(brute == want && layered == want, [&] {
            return "formula " + to_dnf_text(f) + " brute #SAT " + str(want) + " gadget " + str(brute) + "/" + str(layered);
        });
    }
    report("reduction identity", v,
           std::to_string(kDnfInstances + 10) + " random formulas, n<=10, m<=6, brute and layered gadget counts");
}

void transformation() {
    Verdict v;
    Rng rng(4000);
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < kUnfoldInstances + 10; ++i) {
        const std::size_t n = 1 + rng() % 8;
        const auto g = random_labeled_graph(rng, n, 1 + rng() % 4, rng() % (2 * n + 3));
        for (std::size_t k = 1; k <= 10; ++k) {
            Count brute;
            try {
                brute = count_kmers_brute(g, k, kOracleCap);
            } catch (const ResourceCapError&) {
                break;
            }
            ++pairs;
            const Count layered = count_kmers_layered(g, k);
            v.expect(layered == brute, [&] {
                return "k=" + std::to_string(k) + " layered=" + str(layered) + " brute=" + str(brute) + "\n" + to_wgf(g);
            });
        }
    }
    report("transformation preservation", v,
           std::to_string(kUnfoldInstances + 10) + " random labeled graphs, n<=8, " + std::to_string(pairs) +
               " (graph, k<=10) pairs within the oracle cap");
}

void complexity() {
    Verdict v;
    // dp iterates exactly k levels.
    const auto small = validate_wheeler(dbg_of_string("abaabbaab", 2));
    for (std::size_t k : {1, 2, 7, 64, 1000}) {
        const auto r = count_kmers_dp(small, k);
        v.expect(r.levels_iterated == k, [&] { return "dp ran " + std::to_string(r.levels_iterated) + " levels for k=" + std::to_string(k); });
    }

    // Doubling ladder on a fixed small graph with bounded counts.
    std::size_t worst_levels = 0;
    std::size_t worst_k = 0;
    const auto cyc = validate_wheeler(g3());
    std::vector<std::size_t> ks;
    for (std::size_t e = 0; e <= 20; ++e) ks.push_back(std::size_t{1} << e);
    for (std::size_t k : {3, 5, 13, 100, 1000, 12345, 99999, 524287, 1048575}) ks.push_back(k);
    for (std::size_t k : ks) {
        const auto r = count_kmers_doubling(cyc, k);
        const double bound = 2 * std::ceil(std::log2(static_cast<double>(k))) + 2;
        v.expect(static_cast<double>(r.levels_built) <= bound, [&] {
            return "doubling built " + std::to_string(r.levels_built) + " levels for k=" + std::to_string(k);
        });
        v.expect(r.total == 2, [&] { return "doubling total " + str(r.total) + " for k=" + std::to_string(k); });
        if (r.levels_built >= worst_levels) {
            worst_levels = r.levels_built;
            worst_k = k;
        }
    }

    // dp time per level on a fixed cyclic de Bruijn graph.
    Rng rng(5000);
    std::string period = random_text(rng, 400, 4);
    const auto big = validate_wheeler(dbg_of_string(period + period + period, 10));
    std::vector<double> per_level;
    std::ostringstream times;
    for (std::size_t e = 8; e <= 12; ++e) {
        const std::size_t k = std::size_t{1} << e;
        double best = 1e300;
        for (int rep = 0; rep < 7; ++rep) {
            const auto t0 = Clock::now();
            const auto r = count_kmers_dp(big, k);
            best = std::min(best, seconds_since(t0));
            if (r.total == 0) v.fail("zero count on the timing graph");
        }
        per_level.push_back(best / static_cast<double>(k));
        times << (e == 8 ? "" : ", ") << "k=" << k << ":" << best * 1e3 << "ms";
    }
    const double base = per_level.front();
    double worst = 0;
    for (double x : per_level) worst = std::max(worst, x / base);
    v.expect(worst <= kLinearTolerance, [&] { return "per-level time grew by " + std::to_string(worst) + "x"; });

    std::ostringstream d;
    d << "dp levels == k; doubling worst " << worst_levels << " levels at k=" << worst_k
      << " within 2*ceil(log2 k)+2 for k<=2^20; dp on " << big.num_vertices() << " vertices " << times.str()
      << ", max per-level ratio " << worst << " (limit " << kLinearTolerance << ")";
    report("complexity shape", v, d.str());
}

void order_invariants() {
    Verdict v;
    std::size_t pairs = 0;
    const std::size_t cap = 7;
    for (const auto& inst : dwg_corpus(6000, kOrderInstances, 12, 4)) {
        const auto& g = inst.graph;
        const auto w = validate_wheeler(g);
        const auto lcs = compute_levels(w, cap);
        const std::size_t n = g.num_vertices();
        std::vector<InfSup> is;
        for (Vertex x = 0; x < n; ++x) is.push_back(inf_sup_capped(w, x, cap));
        std::vector<KmerEnumeration> en;
        for (std::size_t l = 0; l <= cap; ++l) en.push_back(enumerate_kmers(g, l));

        for (Vertex u = 0; u < n; ++u)
            for (Vertex x = u + 1; x < n; ++x) {
                ++pairs;
                v.expect(!colex_less(is[x].inf.text, is[u].sup.text), [&] { return "sup_u > inf_v\n" + to_wgf(g); });
            }
        for (std::size_t l = 1; l <= cap; ++l)
            for (Vertex u = 0; u < n; ++u) {
                const auto& su = en[l].per_vertex[u].members;
                if (is[u].sup.at_least(l))
                    v.expect(!su.empty() && su.back() == suffix(is[u].sup.text, l),
                             [&] { return "fact 2 (sup) at level " + std::to_string(l) + "\n" + to_wgf(g); });
                if (is[u].inf.at_least(l))
                    v.expect(!su.empty() && su.front() == suffix(is[u].inf.text, l),
                             [&] { return "fact 2 (inf) at level " + std::to_string(l) + "\n" + to_wgf(g); });
                for (Vertex x = u + 1; x < n; ++x) {
                    const auto& sx = en[l].per_vertex[x].members;
                    const bool shared = std::any_of(su.begin(), su.end(), [&](const LabelString& s) {
                        return en[l].per_vertex[x].contains(s);
                    });
                    if (shared)
                        v.expect(is[u].sup.at_least(l) && is[x].inf.at_least(l),
                                 [&] { return "fact 1 at level " + std::to_string(l) + "\n" + to_wgf(g); });
                    if (x == u + 1)
                        v.expect((lcs.elcs(x) >= l) == shared, [&] {
                            return "elcs/share mismatch at level " + std::to_string(l) + "\n" + to_wgf(g);
                        });
                    if (!su.empty() && !sx.empty())
                        v.expect(!colex_less(sx.front(), su.back()), [&] { return "S_u not below S_v\n" + to_wgf(g); });
                }
            }
    }
    report("colex order invariants", v,
           std::to_string(kOrderInstances) + " graphs, " + std::to_string(pairs) +
               " ordered vertex pairs, facts 1-2 and adjacent share <=> elcs >= l for l<=" + std::to_string(cap));
}

}  // namespace

int main() {
    example_reduction();
    cross_engine();
    dbg_equivalence_and_bound();
    reduction_identity();
    transformation();
    complexity();
    order_invariants();
    std::cout << (failed_criteria == 0 ? "ALL PASS" : std::to_string(failed_criteria) + " FAILED") << std::endl;
    return failed_criteria == 0 ? 0 : 1;
}
