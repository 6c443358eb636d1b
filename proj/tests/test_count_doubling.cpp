#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "kmergraph/count_doubling.hpp"
#include "kmergraph/count_dp.hpp"
#include "support.hpp"

using namespace kmergraph;
using namespace kmergraph::testing;

namespace {

DoublingLevel level_at(const WheelerGraph& w, const LcsData& lcs, std::size_t l) {
    if (l == 1) return base_level(w, lcs);
    return combine_levels(lcs, level_at(w, lcs, (l + 1) / 2), level_at(w, lcs, l / 2));
}

// Oracle view of one level: walks from every vertex and arrival sets.
struct WalkOracle {
    std::vector<std::set<std::pair<Vertex, LabelString>>> from;
    KmerEnumeration en;

    WalkOracle(const LabeledGraph& g, std::size_t l) : en(enumerate_kmers(g, l)) {
        for (Vertex u = 0; u < g.num_vertices(); ++u) from.push_back(walks_from(g, u, l));
    }

    [[nodiscard]] std::set<LabelString> strings(Interval i, Vertex v) const {
        std::set<LabelString> out;
        for (Vertex u = i.lo; u <= i.hi; ++u)
            for (const auto& [x, s] : from[u])
                if (x == v) out.insert(s);
        return out;
    }
};

}  // namespace

TEST_CASE("pairwise counts on the fixtures") {
    const auto w2 = validate_wheeler(g2());
    CHECK(pairwise_counts(w2, 8).at(0, 0) == 1);

    const auto p3 = pairwise_counts(validate_wheeler(g3()), 2);
    CHECK(p3.at(0, 0) == 1);
    CHECK(p3.at(1, 1) == 1);
    CHECK(p3.at(0, 1) == 0);
    CHECK(p3.at(1, 0) == 0);

    const auto p1 = pairwise_counts(validate_wheeler(g1()), 2);
    for (const auto& c : p1.c) CHECK(c == 0);
}

TEST_CASE("reachability on the fixtures") {
    const auto r1 = reachability(pairwise_counts(validate_wheeler(g1()), 1));
    CHECK(r1.m.at(0, 1));
    CHECK_FALSE(r1.m.at(0, 0));
    CHECK_FALSE(r1.m.at(1, 0));
    CHECK_FALSE(r1.m.at(1, 1));

    const auto r3 = reachability(pairwise_counts(validate_wheeler(g3()), 2));
    CHECK(r3.m.at(0, 0));
    CHECK(r3.m.at(1, 1));
    CHECK_FALSE(r3.m.at(0, 1));
    CHECK(r3.reach_set(Interval{0, 1}) == std::vector<bool>{true, true});
}

TEST_CASE("black intervals") {
    const auto w3 = validate_wheeler(g3());
    CHECK(black_intervals(compute_levels(w3, 2), 2).intervals.empty());
    CHECK(black_intervals(compute_levels(w3, 2), 0).intervals == std::vector<Interval>{{0, 1}});

    // Generated graphs where some 2-mer arrives at exactly two vertices.
    Rng rng(3);
    bool seen = false;
    for (int it = 0; it < 200 && !seen; ++it) {
        const auto g = random_wheeler_graph(rng, 6, 2);
        const auto w = validate_wheeler(g);
        const auto lcs = compute_levels(w, 2);
        const auto en = enumerate_kmers(g, 2);
        for (const auto& s : en.all.members) {
            const auto at = arrival(en, s);
            if (at.size() != 2) continue;
            const auto b = black_intervals(lcs, 2).intervals;
            CHECK(std::find(b.begin(), b.end(), Interval{at[0], at[1]}) != b.end());
            seen = true;
        }
    }
    CHECK(seen);
}

TEST_CASE("D tables on the fixtures") {
    const auto g = g1();
    const auto w = validate_wheeler(g);
    const auto d = base_d_table(w);
    CHECK(d.dinf.at(0, 1));
    CHECK(d.dsup.at(0, 1));
    CHECK_FALSE(d.dinf.at(1, 0));

    const auto w2 = validate_wheeler(g2());
    const auto lcs = compute_levels(w2, 9);
    for (std::size_t l : {1, 2, 3, 5, 9}) {
        const auto lv = level_at(w2, lcs, l);
        CHECK(lv.d.dinf.at(0, 0));
        CHECK(lv.d.dsup.at(0, 0));
        CHECK(lv.t.at(Interval{0, 0}, 0) == 1);
        CHECK(tw_from_t(lcs, lv, Interval{0, 0}, 0) == 1);
    }
}

TEST_CASE("ladder") {
    CHECK(doubling_ladder(1) == std::vector<std::size_t>{1});
    CHECK(doubling_ladder(16) == std::vector<std::size_t>{1, 2, 4, 8, 16});
    CHECK(doubling_ladder(13) == std::vector<std::size_t>{1, 2, 3, 4, 6, 7, 13});
    for (std::size_t k = 1; k <= (1u << 20); k = k * 3 + 1) {
        const double bound = 2 * std::ceil(std::log2(static_cast<double>(k))) + 2;
        CHECK(static_cast<double>(doubling_ladder(k).size()) <= bound);
    }
}

TEST_CASE("fixture totals") {
    CHECK(count_kmers_doubling(validate_wheeler(g3()), 16).total == 2);
    CHECK(count_kmers_doubling(validate_wheeler(g2()), 10).total == 1);
    CHECK(count_kmers_doubling(validate_wheeler(g1()), 2).total == 0);
    CHECK(count_kmers_doubling(validate_wheeler(g1()), 0).total == 1);
}

TEST_CASE("every table of a level matches the oracle") {
    std::size_t checked = 0;
    for (const auto& inst : dwg_corpus(41, 45, 8, 3)) {
        const auto& g = inst.graph;
        const auto w = validate_wheeler(g);
        const std::size_t n = g.num_vertices();
        const std::size_t cap = 6;
        const auto lcs = compute_levels(w, cap);
        std::vector<InfSup> is;
        for (Vertex v = 0; v < n; ++v) is.push_back(inf_sup_capped(w, v, cap));

        for (std::size_t l = 1; l <= cap; ++l) {
            const WalkOracle o(g, l);
            if (o.en.all.members.size() > 5000) break;
            const auto lv = level_at(w, lcs, l);
            ++checked;

            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = 0; v < n; ++v) {
                    const auto s = o.strings(Interval{u, u}, v);
                    CHECK(lv.counts.at(u, v) == s.size());
                    CHECK(lv.reach.m.at(u, v) == !s.empty());
                    const bool dinf = is[v].inf.at_least(l) && s.count(suffix(is[v].inf.text, l));
                    const bool dsup = is[v].sup.at_least(l) && s.count(suffix(is[v].sup.text, l));
                    CHECK(lv.d.dinf.at(u, v) == dinf);
                    CHECK(lv.d.dsup.at(u, v) == dsup);
                    if (dinf) CHECK(lv.reach.m.at(u, v));
                }

            std::set<std::pair<Vertex, Vertex>> black;
            for (const auto& s : o.en.all.members) {
                const auto at = arrival(o.en, s);
                if (at.size() > 1) black.emplace(at.front(), at.back());
            }
            std::set<std::pair<Vertex, Vertex>> got;
            for (const auto& i : lv.black.intervals) got.emplace(i.lo, i.hi);
            CHECK(got == black);

            for (Vertex lo = 0; lo < n; ++lo)
                for (Vertex hi = lo; hi < n; ++hi)
                    for (Vertex v = 0; v < n; ++v) {
                        const Interval from{lo, hi};
                        const auto s = o.strings(from, v);
                        CHECK(lv.t.at(from, v) == s.size());
                        std::size_t white = 0;
                        for (const auto& x : s) white += arrival(o.en, x).size() == 1 ? 1 : 0;
                        CHECK(tw_from_t(lcs, lv, from, v) == white);
                        if (hi + 1 < n) CHECK(lv.t.at(from, v) <= lv.t.at(Interval{lo, hi + 1}, v));
                    }
        }
    }
    CHECK(checked >= 100);
}

TEST_CASE("totals, per-vertex counts and the ladder match the oracle") {
    std::size_t checked = 0;
    for (const auto& inst : dwg_corpus(43, 60)) {
        const auto& g = inst.graph;
        const auto w = validate_wheeler(g);
        for (std::size_t k : {1, 2, 3, 4, 5, 8, 13, 16}) {
            KmerEnumeration en;
            try {
                en = enumerate_kmers(g, k, 200'000);
            } catch (const ResourceCapError&) {
                continue;
            }
            const auto r = count_kmers_doubling(w, k, DoublingOptions{true});
            CHECK(r.total == en.all.members.size());
            CHECK(r.levels_built == doubling_ladder(k).size());
            for (Vertex v = 0; v < g.num_vertices(); ++v) CHECK(r.per_vertex[v] == en.per_vertex[v].members.size());
            for (const auto& [l, counts] : r.ladder_counts) {
                const auto dp = count_kmers_dp(w, l);
                CHECK(counts == dp.per_vertex.c);
            }
            ++checked;
        }
    }
    CHECK(checked >= 50);
}
