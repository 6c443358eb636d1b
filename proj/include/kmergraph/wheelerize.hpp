#pragma once

// k-mer preserving layered unfolding, layered subset construction and the
// DNF gadget used as a hardness instance generator.

#include <vector>

#include "kmergraph/graph.hpp"
#include "kmergraph/oracle.hpp"

namespace kmergraph {

struct LayerEdge {
    std::size_t from = 0;  // state index inside layer i
    std::size_t to = 0;    // state index inside layer i + 1
    Label label = 0;

    friend auto operator<=>(const LayerEdge&, const LayerEdge&) = default;
};

/// k + 1 layers of states; edges only go from layer i to layer i + 1.
struct LayeredDag {
    std::size_t sigma = 0;
    std::string alphabet;
    std::vector<std::size_t> layer_sizes;
    std::vector<std::vector<LayerEdge>> edges;  // edges[i]: layer i -> i + 1, sorted

    [[nodiscard]] std::size_t depth() const { return edges.size(); }
    [[nodiscard]] bool deterministic() const;
};

/// k copies of the edge set between k + 1 copies of the vertices.
LayeredDag unfold(const LabeledGraph& g, std::size_t k);

inline constexpr std::size_t kDefaultLayerStateCap = 100'000;

/// Subset construction from a virtual initial state with epsilon edges to
/// every layer-0 state. The result has one layer-0 state and keeps only
/// reachable subsets. Throws ResourceCapError when a layer exceeds the cap.
LayeredDag determinize(const LayeredDag& dag, std::size_t layer_cap = kDefaultLayerStateCap);

/// Paths from the single layer-0 state to the last layer. Each one spells a
/// different string because the dag is deterministic.
Count count_paths_layered(const LayeredDag& dag);

/// unfold, determinize and count in one go.
Count count_kmers_layered(const LabeledGraph& g, std::size_t k, std::size_t layer_cap = kDefaultLayerStateCap);

/// The dag as an ordinary graph, layer-major vertex numbering.
LabeledGraph layered_to_graph(const LayeredDag& dag);

struct GadgetInfo {
    DnfFormula formula;
    LabeledGraph graph;
    std::vector<std::size_t> doubled;  // d_j per clause
};

/// One chain gadget per clause plus a shared source with a distinct edge
/// label per clause. Labels 0 and 1 are the literal values, codes 2.. are
/// the clause markers (shown as A, B, ...).
GadgetInfo dnf_to_graph(const DnfFormula& f);

/// N - sum 2^{d_j}, where N is the number of nvars-mers of the gadget graph.
Count sat_count_from_total(const GadgetInfo& gi, const Count& total);

enum class GadgetCounter { Brute, Layered };

Count sat_count_from_graph(const GadgetInfo& gi, GadgetCounter counter, std::size_t cap = kDefaultOracleCap);

}  // namespace kmergraph
