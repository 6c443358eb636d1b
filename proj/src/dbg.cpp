#include "kmergraph/dbg.hpp"

#include <algorithm>

namespace kmergraph {

IntervalTables compute_intervals(const WheelerGraph& w, const LcsData& lcs, std::size_t k) {
    const std::size_t n = w.num_vertices();
    IntervalTables t;
    t.left.assign(k + 1, std::vector<MaybeInterval>(n));
    t.right.assign(k + 1, std::vector<MaybeInterval>(n));
    const Interval all{0, static_cast<Vertex>(n - 1)};
    for (Vertex v = 0; v < n; ++v) t.left[0][v] = t.right[0][v] = all;

    std::vector<Vertex> left_reach(n);
    std::vector<Vertex> right_reach(n);
    for (std::size_t l = 1; l <= k; ++l) {
        // Runs of vertices joined by a shared l-mer that passes through the
        // interior vertices.
        for (Vertex i = 0; i < n; ++i) {
            if (i == 0 || lcs.elcs(i) < l) left_reach[i] = i;
            else left_reach[i] = lcs.ilcs(i - 1) >= l ? left_reach[i - 1] : i - 1;
        }
        for (std::size_t x = n; x-- > 0;) {
            const auto i = static_cast<Vertex>(x);
            if (i + 1 == n || lcs.elcs(i + 1) < l) right_reach[i] = i;
            else right_reach[i] = lcs.ilcs(i + 1) >= l ? right_reach[i + 1] : i + 1;
        }
        for (Vertex v = 0; v < n; ++v) {
            if (w.is_source(v)) continue;
            const bool single = lcs.ilcs(v) >= l;
            const bool has_min = l == 1 || t.left[l - 1][w.preds(v).front()].has_value();
            const bool has_max = l == 1 || t.right[l - 1][w.preds(v).back()].has_value();
            if (has_min) t.left[l][v] = Interval{left_reach[v], single ? right_reach[v] : v};
            if (has_max) t.right[l][v] = Interval{single ? left_reach[v] : v, right_reach[v]};
        }
    }
    return t;
}

std::vector<std::size_t> in_offsets(const WheelerGraph& w) {
    std::vector<std::size_t> off(w.num_vertices() + 1, 0);
    for (Vertex v = 0; v < w.num_vertices(); ++v) off[v + 1] = off[v] + w.indegree(v);
    return off;
}

NextPointers compute_next_pointers(const WheelerGraph& w, const LcsData& lcs,
                                   const std::vector<LevelCounts>& counts, std::size_t k) {
    NextPointers out;
    out.offsets = in_offsets(w);
    out.next.assign(k + 1, std::vector<std::uint32_t>(out.offsets.back()));
    for (std::size_t l = 0; l <= k; ++l) {
        const auto& c = counts[l].c;
        for (Vertex v = 0; v < w.num_vertices(); ++v) {
            const auto preds = w.preds(v);
            const std::size_t d = preds.size();
            std::uint32_t* next = &out.next[l][out.offsets[v]];
            std::size_t i = 0;
            while (i < d) {
                std::size_t j = i + 1;
                while (j < d && c[preds[j]] - (lcs.share(l, preds[i], preds[j]) ? 1 : 0) <= 0) ++j;
                for (std::size_t p = i; p < j; ++p) next[p] = static_cast<std::uint32_t>(j);
                i = j;
            }
        }
    }
    return out;
}

FLTables compute_fl(const WheelerGraph& w, const LcsData& lcs, const std::vector<LevelCounts>& counts,
                    std::size_t k) {
    const std::size_t n = w.num_vertices();
    FLTables t;
    t.f.assign(k + 1, {});
    t.l.assign(k + 1, {});
    if (k < 2) return t;
    t.f[2].resize(n);
    for (Vertex v = 0; v < n; ++v) t.f[2][v] = counts[2].c[v].convert_to<std::uint64_t>();
    t.l[2] = t.f[2];

    for (std::size_t l = 3; l <= k; ++l) {
        auto& f = t.f[l];
        auto& last = t.l[l];
        f.assign(n, 0);
        last.assign(n, 0);
        const auto& fp = t.f[l - 1];
        const auto& lp = t.l[l - 1];
        for (Vertex v = 0; v < n; ++v) {
            if (w.is_source(v)) continue;
            const auto u = w.preds(v);
            const std::size_t d = u.size();
            std::uint64_t fv = fp[u[0]];
            if (lcs.ilcs(u[0]) >= l - 2)
                for (std::size_t j = 1; j < d && lcs.share(l - 2, u[0], u[j]); ++j)
                    fv += fp[u[j]] - (lcs.share(l - 1, u[j - 1], u[j]) ? 1 : 0);
            std::uint64_t lv = lp[u[d - 1]];
            if (lcs.ilcs(u[d - 1]) >= l - 2)
                for (std::size_t j = d - 1; j-- > 0 && lcs.share(l - 2, u[j], u[d - 1]);)
                    lv += lp[u[j]] - (lcs.share(l - 1, u[j], u[j + 1]) ? 1 : 0);
            f[v] = fv;
            last[v] = lv;
        }
    }
    return t;
}

DbgData DbgData::build(const WheelerGraph& w, std::size_t k) {
    if (k < 1) throw Error(ErrorKind::Format, "de Bruijn graph needs k >= 1");
    DbgData d(w);
    d.k_ = k;
    d.lcs_ = compute_levels(w, k);
    d.counts_ = all_level_counts(w, d.lcs_, k);
    d.intervals_ = compute_intervals(w, d.lcs_, k);
    d.next_ = compute_next_pointers(w, d.lcs_, d.counts_, k);
    d.fl_ = compute_fl(w, d.lcs_, d.counts_, k);

    const std::size_t n = w.num_vertices();
    d.cbar_.assign(k + 1, std::vector<Count>(d.next_.offsets.back()));
    for (std::size_t l = 0; l <= k; ++l)
        for (Vertex v = 0; v < n; ++v) {
            const auto u = w.preds(v);
            Count* bar = &d.cbar_[l][d.next_.offsets[v]];
            for (std::size_t i = 0; i < u.size(); ++i) {
                bar[i] = d.counts_[l].c[u[i]];
                if (i > 0) {
                    bar[i] += bar[i - 1];
                    if (d.lcs_.share(l, u[i - 1], u[i])) bar[i] -= 1;
                }
            }
        }

    d.k_arrays_.assign(n, {});
    d.k_prefix_.assign(n, {});
    for (Vertex v = 0; v < n; ++v) {
        if (w.is_sink(v) || w.is_source(v)) continue;
        d.k_arrays_[v] = d.q_values(v, k);
        auto& prefix = d.k_prefix_[v];
        prefix.resize(d.k_arrays_[v].size());
        std::uint64_t sum = 0;
        for (std::size_t i = 0; i < prefix.size(); ++i) prefix[i] = sum += d.k_arrays_[v][i];
    }
    d.memo_.clear();

    d.base_.assign(n, 0);
    for (Vertex v = 1; v < n; ++v) {
        d.base_[v] = d.base_[v - 1] + d.counts_[k].c[v - 1];
        if (d.lcs_.share(k, v - 1, v)) d.base_[v] -= 1;
    }
    return d;
}

// Left-extension counts of the inner (l-1)-mers of v in colex order. The
// in-neighbours are scanned left to right; each (l-2)-mer class reaching
// them is either external (a run of in-neighbours summed through F and L) or
// inner to one in-neighbour (recursion one level down).
const std::vector<std::uint64_t>& DbgData::q_values(Vertex v, std::size_t level) {
    ++stats_.q_calls;
    const auto key = std::make_pair(v, level);
    if (auto it = memo_.find(key); it != memo_.end()) {
        ++stats_.q_replays;
        return it->second;
    }
    std::vector<std::uint64_t> out;
    const auto u = w_.preds(v);
    const std::size_t d = u.size();
    if (level >= 3 && d > 0) {
        const std::size_t s = level - 2;
        const auto& fprev = fl_.f[level - 1];
        const auto& lprev = fl_.l[level - 1];
        const Vertex last = u[d - 1];
        const bool last_single = intervals_.right[s][last].has_value() && lcs_.ilcs(last) >= s;

        std::size_t p = 0;
        bool mu_done = false;
        while (p < d) {
            const Vertex up = u[p];
            const std::size_t h = next_.at(s, v, p);

            // Group of in-neighbours reached by one external (l-2)-mer
            // starting at u_p; returns the last position of the group.
            auto group = [&](Interval iv, std::uint64_t first, bool phi_part) {
                std::size_t b = p;
                if (h < d && u[h] <= iv.hi) b = h;
                else if (h > p + 1 && u[h - 1] <= iv.hi) b = h - 1;
                std::uint64_t value = first;
                for (std::size_t q = next_.at(level - 1, v, p); q <= b && q < d; q = next_.at(level - 1, v, q))
                    value += fprev[u[q]] - (lcs_.share(level - 1, u[q - 1], u[q]) ? 1 : 0);
                const bool is_min = p == 0 && !phi_part;
                const bool is_max = b == d - 1 && ((phi_part && b == p) || last_single);
                if (!is_min && !is_max) out.push_back(value);
                return b;
            };

            const auto& left = intervals_.left[s][up];
            const auto& right = intervals_.right[s][up];
            std::size_t b = p;
            if (left && !mu_done) b = group(*left, fprev[up], false);
            if (b == p) {
                const Count inner = counts_[s].c[up] - (left ? 1 : 0) - (lcs_.ilcs(up) < s && right ? 1 : 0);
                if (inner > 0) {
                    const auto& sub = q_values(up, level - 1);
                    out.insert(out.end(), sub.begin(), sub.end());
                }
                if (right && lcs_.ilcs(up) < s) b = group(*right, lprev[up], true);
            }
            if (b > p) {
                p = b;
                mu_done = true;
            } else {
                p = h;
                mu_done = false;
            }
        }
    }
    return memo_.emplace(key, std::move(out)).first->second;
}

Count DbgData::num_kmers() const {
    LevelCounts top{k_, counts_[k_].c};
    return total_distinct(lcs_, top);
}

// Extends a prefix (interval prev, rank j_prev at prev.lo) by one label that
// leads to cur, updating the rank at cur.lo.
void DbgData::step(Interval prev, Count j_prev, Interval cur, std::size_t level, Count& j) const {
    if (cur.lo != cur.hi) {
        j = counts_[level].c[cur.lo];
        return;
    }
    const Label c = *w_.lambda(cur.lo);
    const Vertex p = *w_.first_with_out_label(prev, c);
    const Count jt = p == prev.lo ? j_prev : Count(1);
    const std::size_t t = w_.pred_rank(cur.lo, p);
    if (t == 0) {
        j = jt;
        return;
    }
    const auto u = w_.preds(cur.lo);
    j = cbar(level - 1, cur.lo, t - 1) + jt;
    if (lcs_.share(level - 1, u[t - 1], u[t])) j -= 1;
}

std::optional<DbgHandle> DbgData::handle_of(const LabelString& kmer) const {
    if (kmer.size() != k_) return std::nullopt;
    Interval cur{0, static_cast<Vertex>(w_.num_vertices() - 1)};
    Count j = 1;
    for (std::size_t l = 1; l <= k_; ++l) {
        const auto next = w_.forward(cur, kmer[l - 1]);
        if (!next) return std::nullopt;
        Count nj;
        step(cur, j, *next, l, nj);
        cur = *next;
        j = std::move(nj);
    }
    return DbgHandle{cur.lo, cur.hi, j};
}

std::vector<Label> DbgData::outgoing_labels(const DbgHandle& h) const {
    return w_.out_labels(Interval{h.lo, h.hi});
}

std::optional<DbgHandle> DbgData::forward(const DbgHandle& h, Label c) const {
    const std::size_t k = k_;
    Interval contracted{0, static_cast<Vertex>(w_.num_vertices() - 1)};
    Count rank = 1;

    if (k >= 2) {
        const Vertex u = h.lo;
        if (h.lo != h.hi) {
            contracted = *intervals_.right[k - 1][u];
            rank = counts_[k - 1].c[contracted.lo];
        } else {
            const auto& left = intervals_.left[k - 1][u];
            const auto& right = intervals_.right[k - 1][u];
            if (left && h.j <= f_k(u)) {
                contracted = *left;
                rank = contracted.lo == u ? Count(1) : counts_[k - 1].c[contracted.lo];
            } else if (lcs_.ilcs(u) < k - 1 && right && counts_[k].c[u] - l_k(u) < h.j) {
                contracted = *right;
                rank = counts_[k - 1].c[u];
            } else {
                if (w_.is_sink(u)) return std::nullopt;
                const Count inner = h.j - f_k(u);
                const auto& prefix = k_prefix_[u];
                std::size_t t = 0;
                while (t < prefix.size() && Count(prefix[t]) < inner) ++t;
                if (t == prefix.size()) throw ConsistencyError("rank beyond the inner k-mers of a vertex");
                contracted = Interval{u, u};
                rank = (left ? 1 : 0) + t + 1;
            }
        }
    }

    const auto next = w_.forward(contracted, c);
    if (!next) return std::nullopt;
    Count j;
    step(contracted, rank, *next, k, j);
    return DbgHandle{next->lo, next->hi, j};
}

LabelString DbgData::spell_at(Vertex u, Count j, std::size_t level) const {
    LabelString reversed;
    for (std::size_t l = level; l > 0; --l) {
        reversed.push_back(*w_.lambda(u));
        const auto preds = w_.preds(u);
        std::size_t t = 0;
        while (cbar(l - 1, u, t) < j) ++t;
        if (t > 0) {
            j -= cbar(l - 1, u, t - 1);
            if (lcs_.share(l - 1, preds[t - 1], preds[t])) j += 1;
        }
        u = preds[t];
    }
    return LabelString(reversed.rbegin(), reversed.rend());
}

LabelString DbgData::spell(const DbgHandle& h) const { return spell_at(h.lo, h.j, k_); }

Count DbgData::colex_index(const DbgHandle& h) const { return base_[h.lo] + h.j - 1; }

ExplicitDbg DbgData::build_explicit(bool with_node_strings) const {
    const std::size_t n = w_.num_vertices();
    const std::size_t k = k_;
    ExplicitDbg out;
    out.k = k;
    out.num_nodes = num_kmers().convert_to<std::size_t>();

    // First node whose k-mer ends in each label.
    std::vector<std::size_t> dst(w_.sigma(), 0);
    for (Label c = 0; c < w_.sigma(); ++c)
        if (const auto block = w_.label_block(c)) dst[c] = base_[block->lo].convert_to<std::size_t>();

    auto wire = [&](Interval arrive, std::size_t first, std::size_t size) {
        for (Label c : w_.out_labels(arrive)) {
            for (std::size_t x = first; x < first + size; ++x) out.edges.push_back(DbgEdge{x, dst[c], c});
            ++dst[c];
        }
    };

    if (k == 1) {
        wire(Interval{0, static_cast<Vertex>(n - 1)}, 0, out.num_nodes);
    } else {
        const auto& ck = counts_[k].c;
        const std::size_t s = k - 1;
        // Nodes of the k-mers suffixed by a (k-1)-mer reaching `iv`, given
        // the count at iv.lo; later vertices add their mu extensions.
        auto block_size = [&](Interval iv, std::uint64_t first) {
            std::uint64_t size = first;
            for (Vertex q = iv.lo + 1; q <= iv.hi; ++q) size += fl_.f[k][q] - (lcs_.share(k, q - 1, q) ? 1 : 0);
            return static_cast<std::size_t>(size);
        };
        for (Vertex v = 0; v < n; ++v) {
            const auto base = base_[v].convert_to<std::size_t>();
            const auto& left = intervals_.left[s][v];
            const auto& right = intervals_.right[s][v];
            if (left && left->lo == v) wire(*left, base, block_size(*left, f_k(v)));
            if (!w_.is_sink(v)) {
                std::size_t offset = f_k(v);
                for (std::uint64_t x : k_arrays_[v]) {
                    wire(Interval{v, v}, base + offset, x);
                    offset += x;
                }
            }
            if (right && lcs_.ilcs(v) < s) {
                const auto first = ck[v].convert_to<std::size_t>() - l_k(v);
                wire(*right, base + first, block_size(*right, l_k(v)));
            }
        }
    }
    std::sort(out.edges.begin(), out.edges.end());

    if (with_node_strings) {
        out.nodes.reserve(out.num_nodes);
        for (Vertex v = 0; v < n; ++v) {
            const auto count = counts_[k].c[v].convert_to<std::size_t>();
            const std::size_t from = v > 0 && lcs_.share(k, v - 1, v) ? 2 : 1;
            for (std::size_t j = from; j <= count; ++j) out.nodes.push_back(spell_at(v, j, k));
        }
    }
    return out;
}

}  // namespace kmergraph
