#pragma once

#include <cstdint>
#include <vector>

#include "kmergraph/graph.hpp"
#include "kmergraph/rmq.hpp"

namespace kmergraph {

/// Longest-common-suffix information capped at a maximum level.
///
/// elcs(i), 1 <= i < n, is min(LCS(sup of v_{i-1}, inf of v_i), cap) and
/// ilcs(v) is min(LCS(inf of v, sup of v), cap), where an infimum or supremum
/// shorter than a level counts as a mismatch at that level. Two range-minimum
/// indexes answer share and ilcs_at_least queries in O(1).
class LcsData {
public:
    LcsData() = default;

    [[nodiscard]] std::size_t cap() const { return cap_; }
    [[nodiscard]] std::size_t num_vertices() const { return ilcs_.size(); }

    /// Capped ELCS between v_{i-1} and v_i; elcs(0) is 0.
    [[nodiscard]] std::uint32_t elcs(Vertex i) const { return elcs_[i]; }
    [[nodiscard]] std::uint32_t ilcs(Vertex v) const { return ilcs_[v]; }
    [[nodiscard]] const std::vector<std::uint32_t>& elcs_array() const { return elcs_; }
    [[nodiscard]] const std::vector<std::uint32_t>& ilcs_array() const { return ilcs_; }

    /// Whether u and v (u <= v) share an l-mer: the largest l-mer reaching u
    /// equals the smallest reaching v. share(l, u, u) is true by convention.
    /// Throws std::out_of_range when level exceeds cap().
    [[nodiscard]] bool share(std::size_t level, Vertex u, Vertex v) const;

    /// Whether v has exactly one incoming l-mer that is a suffix of both its
    /// infimum and supremum.
    [[nodiscard]] bool ilcs_at_least(std::size_t level, Vertex v) const;

    /// Number of levels the construction actually iterated.
    [[nodiscard]] std::size_t levels_iterated() const { return levels_iterated_; }

private:
    friend LcsData compute_levels(const WheelerGraph& w, std::size_t k);

    std::size_t cap_ = 0;
    std::size_t levels_iterated_ = 0;
    std::vector<std::uint32_t> elcs_;
    std::vector<std::uint32_t> ilcs_;
    RangeMin<std::uint32_t> elcs_min_;
    RangeMin<std::uint32_t> ilcs_min_;
};

/// Level-by-level computation of the share and ILCS predicates up to level k.
///
/// Once a predicate survives n^2 + 1 levels it holds at every level (the pair
/// of backward walks has revisited a state), so the loop stops there and the
/// survivors are set to the cap.
LcsData compute_levels(const WheelerGraph& w, std::size_t k);

}  // namespace kmergraph
