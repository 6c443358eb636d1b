#pragma once

// Random instances for tests, the acceptance run and `selftest`.

#include <random>
#include <string>

#include "kmergraph/graph.hpp"
#include "kmergraph/oracle.hpp"

namespace kmergraph {

using Rng = std::mt19937_64;

/// Display characters for generated alphabets.
std::string generated_alphabet(std::size_t sigma);

/// Node-centric de Bruijn graph of order `order` over $^order + text, with
/// vertices numbered in colex order of their order-mers ($ smallest). The
/// all-$ node is the only source. Always a deterministic Wheeler graph.
LabeledGraph dbg_of_string(const std::string& text, std::size_t order);

std::string random_text(Rng& rng, std::size_t length, std::size_t sigma);

/// Random Wheeler graph built label block by label block: every block of
/// equal incoming label receives its edges through a monotone map from an
/// increasing list of tails, which gives W1, W2 and determinism directly.
LabeledGraph random_wheeler_graph(Rng& rng, std::size_t n, std::size_t sigma, std::size_t max_sources = 2);

/// Arbitrary labeled graph, possibly nondeterministic and cyclic.
LabeledGraph random_labeled_graph(Rng& rng, std::size_t n, std::size_t sigma, std::size_t m);

DnfFormula random_dnf(Rng& rng, std::size_t nvars, std::size_t nclauses);

}  // namespace kmergraph
