#pragma once

// Brute-force ground truth. Everything here materialises k-mers explicitly
// and is meant for small instances and for checking the polynomial engines.

#include <string>
#include <string_view>
#include <vector>

#include "kmergraph/graph.hpp"
#include "kmergraph/types.hpp"

namespace kmergraph {

inline constexpr std::size_t kDefaultOracleCap = 1'000'000;

/// The oracle cap, overridden by the KMERGRAPH_ORACLE_CAP environment variable.
std::size_t oracle_cap_from_env();

/// Colex-sorted, duplicate-free set of length-k label strings.
struct KmerSet {
    std::size_t k = 0;
    std::vector<LabelString> members;

    [[nodiscard]] bool contains(const LabelString& s) const;
    friend bool operator==(const KmerSet&, const KmerSet&) = default;
};

struct KmerEnumeration {
    KmerSet all;
    std::vector<KmerSet> per_vertex;  // S_v^k for every vertex v
};

/// Enumerates the k-mers spelled by walks of g, per arrival vertex and in
/// total. Throws ResourceCapError once the per-vertex sets of any level hold
/// more than `cap` strings in total.
KmerEnumeration enumerate_kmers(const LabeledGraph& g, std::size_t k, std::size_t cap = kDefaultOracleCap);

Count count_kmers_brute(const LabeledGraph& g, std::size_t k, std::size_t cap = kDefaultOracleCap);

struct DbgEdge {
    std::size_t from = 0;
    std::size_t to = 0;
    Label label = 0;

    friend auto operator<=>(const DbgEdge&, const DbgEdge&) = default;
};

/// Node-centric de Bruijn graph with nodes in colex order and edges sorted by
/// (from, to, label). `nodes` may be left empty by producers that identify
/// nodes only by colex rank.
struct ExplicitDbg {
    std::size_t k = 0;
    std::size_t num_nodes = 0;
    std::vector<LabelString> nodes;
    std::vector<DbgEdge> edges;
};

ExplicitDbg build_dbg_brute(const LabeledGraph& g, std::size_t k, std::size_t cap = kDefaultOracleCap);

/// Writes `DBG k n m`, the n k-mers and the m edges (1-based node indices).
std::string to_dbg_text(const ExplicitDbg& dbg, const LabeledGraph& g);

/// Length-capped suffix of an infimum or supremum string.
struct CappedString {
    LabelString text;      // at most `cap` labels, left to right
    bool finite = false;   // the walk reached a source, so text is the whole string

    /// True when the underlying string has at least `len` labels.
    [[nodiscard]] bool at_least(std::size_t len) const { return text.size() >= len; }
    [[nodiscard]] LabelString suffix(std::size_t len) const;
};

struct InfSup {
    CappedString inf;
    CappedString sup;
};

/// Follows minimal (maximal) in-neighbours backwards from v for up to `cap`
/// steps to spell the capped infimum (supremum) string.
InfSup inf_sup_capped(const WheelerGraph& w, Vertex v, std::size_t cap);

/// Disjunctive normal form over variables 1..nvars; literal -i is the negation of x_i.
struct DnfFormula {
    std::size_t nvars = 0;
    std::vector<std::vector<int>> clauses;
};

/// Throws Error(Format) on out-of-range variables or contradictory clauses.
void check_dnf(const DnfFormula& f);
DnfFormula parse_dnf(std::string_view text);
DnfFormula read_dnf_file(const std::string& path);
std::string to_dnf_text(const DnfFormula& f);

inline constexpr std::size_t kMaxBruteDnfVars = 24;

/// Exact model count by enumerating all 2^nvars assignments.
Count dnf_count_sat_brute(const DnfFormula& f);

}  // namespace kmergraph
