#include "kmergraph/count_doubling.hpp"

#include <algorithm>
#include <set>

#include "kmergraph/count_dp.hpp"

namespace kmergraph {

PairCounts adjacency_counts(const WheelerGraph& w) {
    const std::size_t n = w.num_vertices();
    PairCounts out{1, n, std::vector<Count>(n * n, 0)};
    for (Vertex v = 0; v < n; ++v)
        for (Vertex u : w.preds(v)) out.at(u, v) += 1;
    return out;
}

PairCounts compose(const PairCounts& first, const PairCounts& second) {
    const std::size_t n = first.n;
    PairCounts out{first.level + second.level, n, std::vector<Count>(n * n, 0)};
    for (Vertex u = 0; u < n; ++u)
        for (Vertex w = 0; w < n; ++w) {
            const Count& x = first.at(u, w);
            if (x == 0) continue;
            for (Vertex v = 0; v < n; ++v)
                if (second.at(w, v) != 0) out.at(u, v) += x * second.at(w, v);
        }
    return out;
}

PairCounts pairwise_counts(const WheelerGraph& w, std::size_t level) {
    const std::size_t n = w.num_vertices();
    PairCounts result{0, n, std::vector<Count>(n * n, 0)};
    for (Vertex v = 0; v < n; ++v) result.at(v, v) = 1;
    PairCounts power = adjacency_counts(w);
    while (level > 0) {
        if (level & 1) result = compose(result, power);
        level >>= 1;
        if (level > 0) power = compose(power, power);
    }
    return result;
}

BlackIntervals black_intervals(const LcsData& lcs, std::size_t level) {
    const std::size_t n = lcs.num_vertices();
    BlackIntervals out{level, {}};
    if (n == 0) return out;
    // reach[i]: largest j with share(level, i, j)
    std::vector<Vertex> reach(n);
    reach[n - 1] = static_cast<Vertex>(n - 1);
    for (std::size_t i = n - 1; i-- > 0;) {
        const auto next = static_cast<Vertex>(i + 1);
        if (lcs.elcs(next) < level) reach[i] = static_cast<Vertex>(i);
        else reach[i] = lcs.ilcs(next) >= level ? reach[next] : next;
    }
    for (Vertex i = 0; i < n; ++i) {
        if (reach[i] == i) continue;
        // [i..reach[i]] sits inside the run of i - 1 when i - 1 shares with i
        // and the l-mer passes through i.
        if (i > 0 && lcs.elcs(i) >= level && lcs.ilcs(i) >= level) continue;
        out.intervals.push_back(Interval{i, reach[i]});
    }
    return out;
}

ColumnOrTable::ColumnOrTable(std::size_t n) : n_(n), bits_(n * n, 0), prefix_(n * (n + 1), 0) {}

void ColumnOrTable::index() {
    for (std::size_t v = 0; v < n_; ++v) {
        auto* col = &prefix_[v * (n_ + 1)];
        col[0] = 0;
        for (std::size_t u = 0; u < n_; ++u) col[u + 1] = col[u] + bits_[u * n_ + v];
    }
}

DTable base_d_table(const WheelerGraph& w) {
    const std::size_t n = w.num_vertices();
    DTable out{1, ColumnOrTable(n), ColumnOrTable(n)};
    for (Vertex v = 0; v < n; ++v)
        for (Vertex u : w.preds(v)) {
            out.dinf.set(u, v, true);
            out.dsup.set(u, v, true);
        }
    out.dinf.index();
    out.dsup.index();
    return out;
}

DTable d_tables(const LcsData& lcs, const DTable& first, const DTable& second) {
    const std::size_t n = first.dinf.size();
    const std::size_t a = first.level;
    DTable out{first.level + second.level, ColumnOrTable(n), ColumnOrTable(n)};
    std::vector<Vertex> mids;
    for (Vertex v = 0; v < n; ++v) {
        mids.clear();
        for (Vertex w = 0; w < n; ++w)
            if (second.dinf.at(w, v)) mids.push_back(w);
        if (!mids.empty()) {
            const Vertex lo = mids.front();
            const bool through = lcs.ilcs_at_least(a, lo);
            for (Vertex u = 0; u < n; ++u) {
                bool hit = first.dinf.at(u, lo);
                if (!hit && through)
                    for (std::size_t i = 1; i < mids.size() && !hit; ++i)
                        hit = first.dinf.at(u, mids[i]) && lcs.share(a, lo, mids[i]);
                out.dinf.set(u, v, hit);
            }
        }

        mids.clear();
        for (Vertex w = 0; w < n; ++w)
            if (second.dsup.at(w, v)) mids.push_back(w);
        if (!mids.empty()) {
            const Vertex hi = mids.back();
            const bool through = lcs.ilcs_at_least(a, hi);
            for (Vertex u = 0; u < n; ++u) {
                bool hit = first.dsup.at(u, hi);
                if (!hit && through)
                    for (std::size_t i = 0; i + 1 < mids.size() && !hit; ++i)
                        hit = first.dsup.at(u, mids[i]) && lcs.share(a, mids[i], hi);
                out.dsup.set(u, v, hit);
            }
        }
    }
    out.dinf.index();
    out.dsup.index();
    return out;
}

std::vector<bool> Reachability::reach_set(Interval from) const {
    std::vector<bool> out(m.size(), false);
    for (Vertex v = 0; v < m.size(); ++v) out[v] = m.any(from, v);
    return out;
}

Reachability reachability(const PairCounts& counts) {
    Reachability out{counts.level, ColumnOrTable(counts.n)};
    for (Vertex u = 0; u < counts.n; ++u)
        for (Vertex v = 0; v < counts.n; ++v) out.m.set(u, v, counts.at(u, v) != 0);
    out.m.index();
    return out;
}

TTable::TTable(std::size_t level, std::size_t n) : level_(level), n_(n), t_(n * n * n, 0) {}

DoublingLevel base_level(const WheelerGraph& w, const LcsData& lcs) {
    const std::size_t n = w.num_vertices();
    DoublingLevel out;
    out.level = 1;
    out.counts = adjacency_counts(w);
    out.d = base_d_table(w);
    out.reach = reachability(out.counts);
    out.black = black_intervals(lcs, 1);
    out.t = TTable(1, n);
    // Determinism: at most one edge into v from the whole interval carries
    // each label, and all edges into v carry lambda(v).
    for (Vertex lo = 0; lo < n; ++lo)
        for (Vertex hi = lo; hi < n; ++hi)
            for (Vertex v = 0; v < n; ++v)
                out.t.at(Interval{lo, hi}, v) = out.reach.m.any(Interval{lo, hi}, v) ? 1 : 0;
    return out;
}

Count tw_from_t(const LcsData& lcs, const DoublingLevel& lv, Interval from, Vertex v) {
    const std::size_t n = lcs.num_vertices();
    const std::size_t l = lv.level;
    const bool left = v > 0 && lcs.share(l, v - 1, v);
    const bool right = v + 1 < n && lcs.share(l, v, v + 1);
    const bool inf = lv.d.dinf.any(from, v);
    const bool sup = lv.d.dsup.any(from, v);
    Count out = lv.t.at(from, v);
    if (left && inf) out -= 1;
    if (right && sup) out -= 1;
    // A single l-mer into v that is shared on both sides was removed twice.
    if (left && right && inf && lcs.ilcs_at_least(l, v)) out += 1;
    return out;
}

TTable t_table(const LcsData& lcs, const DoublingLevel& first, const DoublingLevel& second) {
    const std::size_t n = lcs.num_vertices();
    TTable out(first.level + second.level, n);
    std::vector<Count> white(n);
    std::vector<Vertex> next_in(n + 1);
    std::vector<Vertex> prev_in(n);

    for (Vertex lo = 0; lo < n; ++lo)
        for (Vertex hi = lo; hi < n; ++hi) {
            const Interval from{lo, hi};
            for (Vertex w = 0; w < n; ++w) white[w] = tw_from_t(lcs, first, from, w);

            const auto reach = first.reach.reach_set(from);
            next_in[n] = static_cast<Vertex>(n);
            for (std::size_t x = n; x-- > 0;) next_in[x] = reach[x] ? static_cast<Vertex>(x) : next_in[x + 1];
            Vertex last_seen = kNoVertex;
            for (Vertex x = 0; x < n; ++x) {
                if (reach[x]) last_seen = x;
                prev_in[x] = last_seen;
            }

            // Sub-intervals of the first-part black intervals that the black
            // a-mers starting in `from` actually arrive at.
            std::vector<Interval> starts;
            for (const Interval& j : first.black.intervals) {
                Vertex s = j.lo;
                Vertex e = j.hi;
                if (!first.d.dsup.any(from, j.lo)) ++s;
                if (!first.d.dinf.any(from, j.hi)) --e;
                if (s > e) continue;
                const Vertex a = next_in[s];
                const Vertex b = prev_in[e];
                if (a > e || b == kNoVertex || b < s) continue;
                for (Vertex x = a; x <= b; ++x)
                    if (!reach[x]) throw ConsistencyError("reachable set is not an interval inside a black interval");
                starts.push_back(Interval{a, b});
            }

            for (Vertex v = 0; v < n; ++v) {
                Count total = 0;
                for (Vertex w = 0; w < n; ++w)
                    if (white[w] != 0 && second.counts.at(w, v) != 0) total += white[w] * second.counts.at(w, v);
                for (const Interval& s : starts) total += second.t.at(s, v);
                out.at(from, v) = std::move(total);
            }
        }
    return out;
}

DoublingLevel combine_levels(const LcsData& lcs, const DoublingLevel& first, const DoublingLevel& second) {
    DoublingLevel out;
    out.level = first.level + second.level;
    out.counts = compose(first.counts, second.counts);
    out.d = d_tables(lcs, first.d, second.d);
    out.reach = reachability(out.counts);
    out.black = black_intervals(lcs, out.level);
    out.t = t_table(lcs, first, second);
    return out;
}

std::vector<std::size_t> doubling_ladder(std::size_t k) {
    std::set<std::size_t> levels;
    std::vector<std::size_t> todo;
    if (k > 0) todo.push_back(k);
    while (!todo.empty()) {
        const std::size_t l = todo.back();
        todo.pop_back();
        if (!levels.insert(l).second || l < 2) continue;
        todo.push_back((l + 1) / 2);
        todo.push_back(l / 2);
    }
    return {levels.begin(), levels.end()};
}

DoublingResult count_kmers_doubling(const WheelerGraph& w, const LcsData& lcs, std::size_t k, DoublingOptions opts) {
    const std::size_t n = w.num_vertices();
    DoublingResult out;
    if (k == 0) {
        out.total = 1;
        out.per_vertex.assign(n, 1);
        return out;
    }

    const auto ladder = doubling_ladder(k);
    std::map<std::size_t, DoublingLevel> built;
    const Interval all{0, static_cast<Vertex>(n - 1)};

    for (std::size_t idx = 0; idx < ladder.size(); ++idx) {
        const std::size_t l = ladder[idx];
        if (l == 1) built.emplace(1, base_level(w, lcs));
        else built.emplace(l, combine_levels(lcs, built.at((l + 1) / 2), built.at(l / 2)));
        ++out.levels_built;

        if (opts.record_ladder) {
            auto& row = out.ladder_counts[l];
            for (Vertex v = 0; v < n; ++v) row.push_back(built.at(l).t.at(all, v));
        }

        std::set<std::size_t> keep;
        for (std::size_t j = idx + 1; j < ladder.size(); ++j) {
            keep.insert((ladder[j] + 1) / 2);
            keep.insert(ladder[j] / 2);
        }
        keep.insert(k);
        for (auto it = built.begin(); it != built.end();)
            it = keep.count(it->first) ? std::next(it) : built.erase(it);
    }

    const DoublingLevel& top = built.at(k);
    LevelCounts counts{k, std::vector<Count>(n)};
    for (Vertex v = 0; v < n; ++v) counts.c[v] = top.t.at(all, v);
    out.total = total_distinct(lcs, counts);
    out.per_vertex = std::move(counts.c);
    return out;
}

DoublingResult count_kmers_doubling(const WheelerGraph& w, std::size_t k, DoublingOptions opts) {
    return count_kmers_doubling(w, compute_levels(w, k), k, opts);
}

}  // namespace kmergraph
