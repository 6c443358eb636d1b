#pragma once

// Fixtures, instance corpora and oracle-side helpers shared by the unit
// tests and the acceptance run.

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kmergraph/generators.hpp"
#include "kmergraph/graph.hpp"
#include "kmergraph/oracle.hpp"

namespace kmergraph::testing {

// G1: source v1 with one 'a' edge to v2.
LabeledGraph g1();
// G2: one vertex with an 'a' self-loop.
LabeledGraph g2();
// G3: v1 -b-> v2 -a-> v1.
LabeledGraph g3();

// The DNF (x1 and x3) or (not x1 and x2) or (not x1 and not x3).
DnfFormula example_formula();

LabeledGraph from_wgf(const std::string& text);
LabelString word(const LabeledGraph& g, const std::string& text);

enum class Origin { DeBruijn, Staircase, Rejection };

struct Instance {
    LabeledGraph graph;
    Origin origin = Origin::DeBruijn;
};

/// Deterministic Wheeler graphs with at most max_n vertices and alphabets of
/// at most max_sigma letters, cycling through the three generators.
std::vector<Instance> dwg_corpus(std::uint64_t seed, std::size_t count, std::size_t max_n = 12,
                                 std::size_t max_sigma = 4);

/// Random graph accepted as is by validate_wheeler, found by rejection.
LabeledGraph rejection_sampled_dwg(Rng& rng, std::size_t max_n, std::size_t max_sigma);

/// Vertices whose l-mer sets contain s, ascending.
std::vector<Vertex> arrival(const KmerEnumeration& en, const LabelString& s);

/// 1-based colex rank of s among the members of a set.
std::size_t rank_in(const KmerSet& set, const LabelString& s);

/// Every (end vertex, spelled string) of a length-l walk starting at u.
std::set<std::pair<Vertex, LabelString>> walks_from(const LabeledGraph& g, Vertex u, std::size_t length);

LabelString suffix(const LabelString& s, std::size_t len);

/// Common suffix length of two label strings.
std::size_t common_suffix(const LabelString& a, const LabelString& b);

}  // namespace kmergraph::testing
