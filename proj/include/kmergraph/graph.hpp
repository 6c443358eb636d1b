#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kmergraph/types.hpp"

namespace kmergraph {

struct Edge {
    Vertex from = 0;
    Vertex to = 0;
    Label label = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Directed graph with single-label edges over the alphabet {0, ..., sigma-1}.
///
/// Duplicate (from, to, label) triples are removed on construction. The
/// optional alphabet string maps each code to a printable character and is
/// what the WGF writer emits.
class LabeledGraph {
public:
    LabeledGraph() = default;
    LabeledGraph(std::size_t n, std::size_t sigma, std::vector<Edge> edges, std::string alphabet = {});

    [[nodiscard]] std::size_t num_vertices() const { return n_; }
    [[nodiscard]] std::size_t sigma() const { return sigma_; }
    [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
    [[nodiscard]] const std::string& alphabet() const { return alphabet_; }
    [[nodiscard]] std::size_t duplicates_removed() const { return duplicates_removed_; }

    [[nodiscard]] char display(Label c) const;
    [[nodiscard]] std::string display(const LabelString& s) const;
    /// Inverse of display(); nullopt when a character is not in the alphabet.
    [[nodiscard]] std::optional<LabelString> encode(std::string_view text) const;

private:
    std::size_t n_ = 0;
    std::size_t sigma_ = 0;
    std::vector<Edge> edges_;
    std::string alphabet_;
    std::size_t duplicates_removed_ = 0;
};

struct ParsedGraph {
    LabeledGraph graph;
    std::vector<std::string> warnings;
};

/// Parses the WGF text format. Label codes are the ranks of the distinct
/// characters used, so the label order is the ASCII order.
ParsedGraph parse_graph(std::string_view text);
ParsedGraph read_graph_file(const std::string& path);
std::string to_wgf(const LabeledGraph& g);

struct DeterminismReport {
    bool deterministic = true;
    std::optional<std::pair<Edge, Edge>> witness;
};

DeterminismReport check_deterministic(const LabeledGraph& g);

enum class WheelerRule { W1, W2, SourcesFirst, Nondeterministic, InputInconsistent };

std::string_view to_string(WheelerRule rule);

struct WheelerDiagnostic {
    WheelerRule rule;
    std::vector<Edge> witness;  // empty for SourcesFirst, which names vertices instead
    Vertex source_vertex = kNoVertex;
    Vertex positive_vertex = kNoVertex;

    [[nodiscard]] std::string message() const;
};

class WheelerViolation : public Error {
public:
    explicit WheelerViolation(WheelerDiagnostic d) : Error(ErrorKind::Format, d.message()), diag_(std::move(d)) {}
    [[nodiscard]] const WheelerDiagnostic& diagnostic() const { return diag_; }

private:
    WheelerDiagnostic diag_;
};

struct OutEdge {
    Label label;
    Vertex to;
};

/// A deterministic labeled graph whose vertex numbering is a Wheeler order.
///
/// Only validate_wheeler() builds these. Besides the incoming label and the
/// sorted adjacency lists it carries the pieces of a Wheeler index that the
/// de Bruijn simulation needs: forward search over vertex intervals and
/// distinct outgoing labels of an interval.
class WheelerGraph {
public:
    [[nodiscard]] const LabeledGraph& base() const { return base_; }
    [[nodiscard]] std::size_t num_vertices() const { return base_.num_vertices(); }
    [[nodiscard]] std::size_t num_edges() const { return base_.edges().size(); }
    [[nodiscard]] std::size_t sigma() const { return base_.sigma(); }

    [[nodiscard]] std::optional<Label> lambda(Vertex v) const;
    [[nodiscard]] bool is_source(Vertex v) const { return in_offsets_[v] == in_offsets_[v + 1]; }
    [[nodiscard]] bool is_sink(Vertex v) const { return out_offsets_[v] == out_offsets_[v + 1]; }
    [[nodiscard]] std::size_t num_sources() const { return num_sources_; }

    /// In-neighbours in increasing vertex order.
    [[nodiscard]] std::span<const Vertex> preds(Vertex v) const;
    /// Out-edges in increasing label order.
    [[nodiscard]] std::span<const OutEdge> succs(Vertex v) const;
    [[nodiscard]] std::size_t indegree(Vertex v) const { return in_offsets_[v + 1] - in_offsets_[v]; }

    /// 0-based position of u in preds(v); requires (u, v) to be an edge.
    [[nodiscard]] std::size_t pred_rank(Vertex v, Vertex u) const;

    /// Vertices reached from the interval by one c-labelled edge.
    [[nodiscard]] MaybeInterval forward(Interval from, Label c) const;
    /// Smallest vertex of the interval with an outgoing c-edge.
    [[nodiscard]] std::optional<Vertex> first_with_out_label(Interval from, Label c) const;
    /// Distinct labels on out-edges of vertices in the interval, sorted.
    [[nodiscard]] std::vector<Label> out_labels(Interval range) const;

    /// Vertices whose incoming label is c (an interval by W1), if any.
    [[nodiscard]] MaybeInterval label_block(Label c) const;

private:
    friend WheelerGraph validate_wheeler(const LabeledGraph& g);
    WheelerGraph() = default;

    LabeledGraph base_;
    std::vector<std::optional<Label>> lambda_;
    std::vector<std::size_t> in_offsets_;
    std::vector<Vertex> in_;
    std::vector<std::size_t> out_offsets_;
    std::vector<OutEdge> out_;
    std::size_t num_sources_ = 0;
    // Per label: (from, to) pairs sorted by from; to is then non-decreasing.
    std::vector<std::vector<std::pair<Vertex, Vertex>>> by_label_;
    // Per label: prefix counts of vertices having an out-edge with that label.
    std::vector<std::vector<std::uint32_t>> out_label_rank_;
};

/// Checks the given numbering against the Wheeler conditions (sources first,
/// W1, W2) plus determinism and input consistency. Runs in O(m log m).
std::optional<WheelerDiagnostic> check_wheeler(const LabeledGraph& g);

/// Builds the WheelerGraph or throws WheelerViolation.
WheelerGraph validate_wheeler(const LabeledGraph& g);

}  // namespace kmergraph
