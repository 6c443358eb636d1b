#pragma once

// Prefix-doubling k-mer counter for deterministic Wheeler graphs.
//
// Every level l of the ladder is split into a first part a = ceil(l/2) and a
// second part b = floor(l/2). The tables of level l are built from those of
// levels a and b, so only O(log k) levels are ever materialised.

#include <cstdint>
#include <map>
#include <vector>

#include "kmergraph/graph.hpp"
#include "kmergraph/lcs.hpp"

namespace kmergraph {

/// c[u][v]: distinct l-mers spelled on length-l walks from u to v. In a
/// deterministic graph distinct walks from u spell distinct strings, so this
/// is the number of such walks.
struct PairCounts {
    std::size_t level = 0;
    std::size_t n = 0;
    std::vector<Count> c;

    [[nodiscard]] const Count& at(Vertex u, Vertex v) const { return c[u * n + v]; }
    Count& at(Vertex u, Vertex v) { return c[u * n + v]; }
};

PairCounts adjacency_counts(const WheelerGraph& w);
PairCounts compose(const PairCounts& first, const PairCounts& second);
/// Adjacency power by binary decomposition of the level.
PairCounts pairwise_counts(const WheelerGraph& w, std::size_t level);

/// Maximal vertex intervals [v_i..v_j], i < j, whose endpoints share an
/// l-mer. Each black l-mer arrives at exactly one of them. Consecutive
/// intervals may meet at a vertex whose largest and smallest l-mers differ.
struct BlackIntervals {
    std::size_t level = 0;
    std::vector<Interval> intervals;
};

BlackIntervals black_intervals(const LcsData& lcs, std::size_t level);

/// Per-pair flags with a per-column index for "any row in [i..j]" queries.
class ColumnOrTable {
public:
    ColumnOrTable() = default;
    explicit ColumnOrTable(std::size_t n);

    void set(Vertex u, Vertex v, bool value) { bits_[u * n_ + v] = value ? 1 : 0; }
    [[nodiscard]] bool at(Vertex u, Vertex v) const { return bits_[u * n_ + v] != 0; }
    /// Rebuilds the column prefix counts after the bits are filled in.
    void index();
    [[nodiscard]] bool any(Interval rows, Vertex v) const {
        return prefix_[v * (n_ + 1) + rows.hi + 1] > prefix_[v * (n_ + 1) + rows.lo];
    }
    [[nodiscard]] std::size_t size() const { return n_; }

private:
    std::size_t n_ = 0;
    std::vector<std::uint8_t> bits_;
    std::vector<std::uint32_t> prefix_;
};

/// dinf(u, v): the smallest l-mer into v is a suffix of inf_v and is spelled
/// by a walk from u. dsup mirrors it with the largest l-mer and sup_v.
struct DTable {
    std::size_t level = 0;
    ColumnOrTable dinf;
    ColumnOrTable dsup;
};

DTable base_d_table(const WheelerGraph& w);
/// Level a + b from the tables at levels a (first part) and b (second part).
DTable d_tables(const LcsData& lcs, const DTable& first, const DTable& second);

/// M_l(u, v) = [some length-l walk goes from u to v].
struct Reachability {
    std::size_t level = 0;
    ColumnOrTable m;

    /// R_l(I): vertices reachable from the interval by length-l walks.
    [[nodiscard]] std::vector<bool> reach_set(Interval from) const;
};

Reachability reachability(const PairCounts& counts);

/// T_l(I, v) = |union over u in I of the l-mers from u to v| for every
/// interval I and destination v.
class TTable {
public:
    TTable() = default;
    TTable(std::size_t level, std::size_t n);

    [[nodiscard]] std::size_t level() const { return level_; }
    [[nodiscard]] const Count& at(Interval i, Vertex v) const { return t_[index(i, v)]; }
    Count& at(Interval i, Vertex v) { return t_[index(i, v)]; }

private:
    [[nodiscard]] std::size_t index(Interval i, Vertex v) const { return (i.lo * n_ + i.hi) * n_ + v; }

    std::size_t level_ = 0;
    std::size_t n_ = 0;
    std::vector<Count> t_;
};

/// Everything the ladder keeps for one level.
struct DoublingLevel {
    std::size_t level = 0;
    PairCounts counts;
    DTable d;
    Reachability reach;
    BlackIntervals black;
    TTable t;
};

DoublingLevel base_level(const WheelerGraph& w, const LcsData& lcs);
/// T table of level a + b: white-start plus black-start terms.
TTable t_table(const LcsData& lcs, const DoublingLevel& first, const DoublingLevel& second);
DoublingLevel combine_levels(const LcsData& lcs, const DoublingLevel& first, const DoublingLevel& second);

/// White l-mers among T_l(I, v): those arriving at v only.
Count tw_from_t(const LcsData& lcs, const DoublingLevel& lv, Interval from, Vertex v);

/// Levels the doubling counter materialises for k, ascending.
std::vector<std::size_t> doubling_ladder(std::size_t k);

struct DoublingResult {
    Count total;
    std::vector<Count> per_vertex;
    std::size_t levels_built = 0;
    /// Per-vertex counts at every ladder level, when requested.
    std::map<std::size_t, std::vector<Count>> ladder_counts;
};

struct DoublingOptions {
    bool record_ladder = false;
};

DoublingResult count_kmers_doubling(const WheelerGraph& w, std::size_t k, DoublingOptions opts = {});
DoublingResult count_kmers_doubling(const WheelerGraph& w, const LcsData& lcs, std::size_t k,
                                    DoublingOptions opts = {});

}  // namespace kmergraph
