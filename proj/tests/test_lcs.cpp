#include <doctest.h>

#include <algorithm>

#include "kmergraph/lcs.hpp"
#include "support.hpp"

using namespace kmergraph;
using namespace kmergraph::testing;

TEST_CASE("capped arrays on the fixtures") {
    const auto l3 = compute_levels(validate_wheeler(g3()), 4);
    CHECK(l3.elcs(1) == 0);
    CHECK(l3.ilcs_array() == std::vector<std::uint32_t>{4, 4});

    const auto l1 = compute_levels(validate_wheeler(g1()), 2);
    CHECK(l1.elcs(1) == 0);
    CHECK(l1.ilcs(1) == 1);
    CHECK(l1.ilcs(0) == 0);

    const auto l2 = compute_levels(validate_wheeler(g2()), 7);
    CHECK(l2.ilcs(0) == 7);
    for (std::size_t l = 0; l <= 7; ++l) CHECK(l2.ilcs_at_least(l, 0));
}

TEST_CASE("share") {
    const auto l3 = compute_levels(validate_wheeler(g3()), 3);
    CHECK_FALSE(l3.share(1, 0, 1));
    CHECK(l3.share(0, 0, 1));
    CHECK(l3.share(2, 1, 1));
    CHECK_THROWS_AS((void)l3.share(4, 0, 1), std::out_of_range);

    const auto l1 = compute_levels(validate_wheeler(g1()), 2);
    CHECK_FALSE(l1.ilcs_at_least(1, 0));
    CHECK(l1.ilcs_at_least(0, 0));
}

TEST_CASE("the loop stops once every predicate is settled") {
    const auto lcs = compute_levels(validate_wheeler(g2()), 1000);
    CHECK(lcs.levels_iterated() <= 2);
    CHECK(lcs.ilcs(0) == 1000);
}

TEST_CASE("share and ilcs agree with the oracle") {
    for (const auto& inst : dwg_corpus(21, 120, 10, 3)) {
        const auto& g = inst.graph;
        const auto w = validate_wheeler(g);
        const std::size_t cap = 6;
        const auto lcs = compute_levels(w, cap);
        const std::size_t n = g.num_vertices();
        std::vector<InfSup> is;
        for (Vertex v = 0; v < n; ++v) is.push_back(inf_sup_capped(w, v, cap));

        for (Vertex v = 0; v < n; ++v) {
            const std::size_t want = std::min<std::size_t>(common_suffix(is[v].inf.text, is[v].sup.text), cap);
            CHECK(lcs.ilcs(v) == want);
            if (v > 0)
                CHECK(lcs.elcs(v) ==
                      std::min<std::size_t>(common_suffix(is[v - 1].sup.text, is[v].inf.text), cap));
        }

        for (std::size_t l = 0; l <= cap; ++l) {
            const auto en = enumerate_kmers(g, l);
            for (Vertex u = 0; u < n; ++u) {
                const auto& su = en.per_vertex[u].members;
                if (lcs.ilcs_at_least(l, u)) CHECK(su.size() == 1);
                for (Vertex v = u + 1; v < n; ++v) {
                    const auto& sv = en.per_vertex[v].members;
                    const bool want = !su.empty() && !sv.empty() && su.back() == sv.front();
                    CHECK(lcs.share(l, u, v) == want);
                    // Monotone in the level.
                    if (l > 0 && lcs.share(l, u, v)) CHECK(lcs.share(l - 1, u, v));
                }
            }
        }
    }
}
