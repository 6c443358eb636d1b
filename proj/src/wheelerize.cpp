#include "kmergraph/wheelerize.hpp"

#include <algorithm>
#include <map>

namespace kmergraph {

bool LayeredDag::deterministic() const {
    for (const auto& layer : edges)
        for (std::size_t i = 1; i < layer.size(); ++i)
            if (layer[i - 1].from == layer[i].from && layer[i - 1].label == layer[i].label) return false;
    return true;
}

namespace {

// Sorted by (from, label, to) so each state's c-successors are contiguous.
void sort_layer(std::vector<LayerEdge>& layer) {
    std::sort(layer.begin(), layer.end(), [](const LayerEdge& a, const LayerEdge& b) {
        return std::tie(a.from, a.label, a.to) < std::tie(b.from, b.label, b.to);
    });
}

}  // namespace

LayeredDag unfold(const LabeledGraph& g, std::size_t k) {
    if (k < 1) throw Error(ErrorKind::Format, "unfold needs k >= 1");
    LayeredDag dag;
    dag.sigma = g.sigma();
    dag.alphabet = g.alphabet();
    dag.layer_sizes.assign(k + 1, g.num_vertices());
    std::vector<LayerEdge> copy;
    copy.reserve(g.edges().size());
    for (const Edge& e : g.edges()) copy.push_back(LayerEdge{e.from, e.to, e.label});
    sort_layer(copy);
    dag.edges.assign(k, copy);
    return dag;
}

LayeredDag determinize(const LayeredDag& dag, std::size_t layer_cap) {
    using Subset = std::vector<std::size_t>;
    LayeredDag out;
    out.sigma = dag.sigma;
    out.alphabet = dag.alphabet;

    std::vector<Subset> current(1);
    for (std::size_t s = 0; s < dag.layer_sizes.at(0); ++s) current[0].push_back(s);
    out.layer_sizes.push_back(1);

    for (std::size_t i = 0; i < dag.depth(); ++i) {
        const auto& layer = dag.edges[i];
        std::vector<std::size_t> first(dag.layer_sizes[i] + 1, 0);
        for (const LayerEdge& e : layer) ++first[e.from + 1];
        for (std::size_t s = 0; s < dag.layer_sizes[i]; ++s) first[s + 1] += first[s];

        std::map<Subset, std::size_t> ids;
        std::vector<Subset> next;
        std::vector<LayerEdge> out_edges;
        for (std::size_t id = 0; id < current.size(); ++id) {
            std::map<Label, Subset> by_label;
            for (std::size_t s : current[id])
                for (std::size_t e = first[s]; e < first[s + 1]; ++e) by_label[layer[e].label].push_back(layer[e].to);
            for (auto& [label, targets] : by_label) {
                std::sort(targets.begin(), targets.end());
                targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
                auto [it, fresh] = ids.emplace(targets, next.size());
                if (fresh) {
                    if (next.size() >= layer_cap)
                        throw ResourceCapError("subset construction exceeds " + std::to_string(layer_cap) +
                                               " states in layer " + std::to_string(i + 1));
                    next.push_back(targets);
                }
                out_edges.push_back(LayerEdge{id, it->second, label});
            }
        }
        sort_layer(out_edges);
        out.edges.push_back(std::move(out_edges));
        out.layer_sizes.push_back(next.size());
        current = std::move(next);
    }
    return out;
}

Count count_paths_layered(const LayeredDag& dag) {
    if (dag.layer_sizes.empty() || dag.layer_sizes[0] != 1)
        throw Error(ErrorKind::Format, "layered count needs exactly one layer-0 state");
    if (!dag.deterministic()) throw Error(ErrorKind::Format, "layered count needs a deterministic dag");
    std::vector<Count> paths{1};
    for (std::size_t i = 0; i < dag.depth(); ++i) {
        std::vector<Count> next(dag.layer_sizes[i + 1], 0);
        for (const LayerEdge& e : dag.edges[i]) next[e.to] += paths[e.from];
        paths = std::move(next);
    }
    Count total = 0;
    for (const Count& p : paths) total += p;
    return total;
}

Count count_kmers_layered(const LabeledGraph& g, std::size_t k, std::size_t layer_cap) {
    if (k == 0) return 1;
    return count_paths_layered(determinize(unfold(g, k), layer_cap));
}

LabeledGraph layered_to_graph(const LayeredDag& dag) {
    std::vector<std::size_t> offset(dag.layer_sizes.size() + 1, 0);
    for (std::size_t i = 0; i < dag.layer_sizes.size(); ++i) offset[i + 1] = offset[i] + dag.layer_sizes[i];
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < dag.depth(); ++i)
        for (const LayerEdge& e : dag.edges[i])
            edges.push_back(Edge{static_cast<Vertex>(offset[i] + e.from), static_cast<Vertex>(offset[i + 1] + e.to), e.label});
    return LabeledGraph(offset.back(), dag.sigma, std::move(edges), dag.alphabet);
}

GadgetInfo dnf_to_graph(const DnfFormula& f) {
    check_dnf(f);
    if (f.nvars < 1) throw Error(ErrorKind::Format, "formula needs at least one variable");
    const std::size_t n = f.nvars;
    const std::size_t m = f.clauses.size();

    GadgetInfo gi;
    gi.formula = f;
    std::vector<Edge> edges;
    for (std::size_t j = 0; j < m; ++j) {
        const auto base = static_cast<Vertex>(1 + j * (n + 1));
        std::vector<int> value(n + 1, -1);
        for (int lit : f.clauses[j]) value[static_cast<std::size_t>(std::abs(lit))] = lit > 0 ? 1 : 0;
        std::size_t doubled = 0;
        for (std::size_t i = 1; i <= n; ++i) {
            const Vertex from = base + static_cast<Vertex>(i - 1);
            if (value[i] < 0) {
                edges.push_back(Edge{from, from + 1, 0});
                edges.push_back(Edge{from, from + 1, 1});
                if (i < n) ++doubled;
            } else {
                edges.push_back(Edge{from, from + 1, static_cast<Label>(value[i])});
            }
        }
        edges.push_back(Edge{0, base, static_cast<Label>(2 + j)});
        gi.doubled.push_back(doubled);
    }

    static constexpr std::string_view markers = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz";
    std::string alphabet;
    if (m <= markers.size()) alphabet = "01" + std::string(markers.substr(0, m));
    gi.graph = LabeledGraph(1 + m * (n + 1), 2 + m, std::move(edges), alphabet);
    return gi;
}

Count sat_count_from_total(const GadgetInfo& gi, const Count& total) {
    Count out = total;
    for (std::size_t d : gi.doubled) out -= Count(1) << d;
    if (out < 0) throw ConsistencyError("gadget count is smaller than its boundary n-mers");
    return out;
}

Count sat_count_from_graph(const GadgetInfo& gi, GadgetCounter counter, std::size_t cap) {
    const std::size_t k = gi.formula.nvars;
    const Count total = counter == GadgetCounter::Brute ? count_kmers_brute(gi.graph, k, cap)
                                                        : count_kmers_layered(gi.graph, k, cap);
    return sat_count_from_total(gi, total);
}

}  // namespace kmergraph
