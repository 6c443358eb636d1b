#include "support.hpp"

#include <algorithm>

namespace kmergraph::testing {

LabeledGraph g1() { return LabeledGraph(2, 1, {Edge{0, 1, 0}}, "a"); }
LabeledGraph g2() { return LabeledGraph(1, 1, {Edge{0, 0, 0}}, "a"); }
LabeledGraph g3() { return LabeledGraph(2, 2, {Edge{0, 1, 1}, Edge{1, 0, 0}}, "ab"); }

DnfFormula example_formula() {
    DnfFormula f;
    f.nvars = 3;
    f.clauses = {{1, 3}, {-1, 2}, {-1, -3}};
    return f;
}

LabeledGraph from_wgf(const std::string& text) { return parse_graph(text).graph; }

LabelString word(const LabeledGraph& g, const std::string& text) { return g.encode(text).value(); }

LabeledGraph rejection_sampled_dwg(Rng& rng, std::size_t max_n, std::size_t max_sigma) {
    auto pick = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
    for (;;) {
        const std::size_t n = pick(2, std::min<std::size_t>(max_n, 6));
        const std::size_t sigma = pick(1, max_sigma);
        LabeledGraph g = random_labeled_graph(rng, n, sigma, pick(1, n + 2));
        if (!check_wheeler(g)) return g;
    }
}

std::vector<Instance> dwg_corpus(std::uint64_t seed, std::size_t count, std::size_t max_n, std::size_t max_sigma) {
    Rng rng(seed);
    auto pick = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
    std::vector<Instance> out;
    while (out.size() < count) {
        switch (out.size() % 3) {
        case 0: {
            LabeledGraph g = dbg_of_string(random_text(rng, pick(3, 14), pick(1, max_sigma)), pick(1, 4));
            if (g.num_vertices() <= max_n) out.push_back({std::move(g), Origin::DeBruijn});
            break;
        }
        case 1:
            out.push_back({random_wheeler_graph(rng, pick(2, max_n), pick(1, max_sigma), pick(1, 3)), Origin::Staircase});
            break;
        default:
            out.push_back({rejection_sampled_dwg(rng, max_n, max_sigma), Origin::Rejection});
        }
    }
    return out;
}

std::vector<Vertex> arrival(const KmerEnumeration& en, const LabelString& s) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < en.per_vertex.size(); ++v)
        if (en.per_vertex[v].contains(s)) out.push_back(v);
    return out;
}

std::size_t rank_in(const KmerSet& set, const LabelString& s) {
    return static_cast<std::size_t>(std::lower_bound(set.members.begin(), set.members.end(), s, colex_less) -
                                    set.members.begin()) + 1;
}

std::set<std::pair<Vertex, LabelString>> walks_from(const LabeledGraph& g, Vertex u, std::size_t length) {
    std::set<std::pair<Vertex, LabelString>> frontier{{u, {}}};
    for (std::size_t step = 0; step < length; ++step) {
        std::set<std::pair<Vertex, LabelString>> next;
        for (const auto& [v, s] : frontier)
            for (const Edge& e : g.edges())
                if (e.from == v) {
                    LabelString t = s;
                    t.push_back(e.label);
                    next.emplace(e.to, std::move(t));
                }
        frontier = std::move(next);
    }
    return frontier;
}

LabelString suffix(const LabelString& s, std::size_t len) {
    return LabelString(s.end() - static_cast<std::ptrdiff_t>(len), s.end());
}

std::size_t common_suffix(const LabelString& a, const LabelString& b) {
    std::size_t i = 0;
    while (i < a.size() && i < b.size() && a[a.size() - 1 - i] == b[b.size() - 1 - i]) ++i;
    return i;
}

}  // namespace kmergraph::testing
