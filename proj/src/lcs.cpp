#include "kmergraph/lcs.hpp"

#include <algorithm>
#include <stdexcept>

namespace kmergraph {

namespace {

// share_{l-1} for arbitrary pairs while level l is being built, answered from
// prefix counts of the predicates that already failed at level l-1.
class LevelShare {
public:
    LevelShare(const std::vector<std::uint32_t>& elcs, const std::vector<std::uint32_t>& ilcs, std::uint32_t level)
        : dead_elcs_(elcs.size() + 1, 0), dead_ilcs_(ilcs.size() + 1, 0) {
        for (std::size_t i = 0; i < elcs.size(); ++i) {
            dead_elcs_[i + 1] = dead_elcs_[i] + (elcs[i] < level ? 1 : 0);
            dead_ilcs_[i + 1] = dead_ilcs_[i] + (ilcs[i] < level ? 1 : 0);
        }
    }

    [[nodiscard]] bool share(Vertex u, Vertex v) const {
        if (u == v) return true;
        // elcs over (u, v], ilcs over (u, v)
        return dead_elcs_[v + 1] == dead_elcs_[u + 1] && dead_ilcs_[v] == dead_ilcs_[u + 1];
    }

private:
    std::vector<std::uint32_t> dead_elcs_;
    std::vector<std::uint32_t> dead_ilcs_;
};

}  // namespace

LcsData compute_levels(const WheelerGraph& w, std::size_t k) {
    const std::size_t n = w.num_vertices();
    LcsData data;
    data.cap_ = k;
    data.elcs_.assign(n, 0);
    data.ilcs_.assign(n, 0);

    const std::size_t stable_after = n * n + 1;
    const std::size_t last = std::min(k, stable_after);

    for (std::size_t level = 1; level <= last; ++level) {
        const auto prev = static_cast<std::uint32_t>(level - 1);
        const LevelShare shared(data.elcs_, data.ilcs_, prev);
        bool any_alive = false;

        for (Vertex i = 1; i < n; ++i) {
            if (data.elcs_[i] != prev) continue;
            const auto a = w.lambda(i - 1);
            const auto b = w.lambda(i);
            if (!a || !b || *a != *b) continue;
            if (shared.share(w.preds(i - 1).back(), w.preds(i).front())) {
                data.elcs_[i] = static_cast<std::uint32_t>(level);
                any_alive = true;
            }
        }
        for (Vertex v = 0; v < n; ++v) {
            if (data.ilcs_[v] != prev || w.is_source(v)) continue;
            const Vertex lo = w.preds(v).front();
            const Vertex hi = w.preds(v).back();
            if (data.ilcs_[lo] >= prev && data.ilcs_[hi] >= prev && shared.share(lo, hi)) {
                data.ilcs_[v] = static_cast<std::uint32_t>(level);
                any_alive = true;
            }
        }
        data.levels_iterated_ = level;
        if (!any_alive) break;
    }

    if (k > stable_after) {
        const auto top = static_cast<std::uint32_t>(stable_after);
        const auto cap = static_cast<std::uint32_t>(k);
        for (auto& x : data.elcs_) if (x == top) x = cap;
        for (auto& x : data.ilcs_) if (x == top) x = cap;
    }

    data.elcs_min_ = RangeMin<std::uint32_t>(data.elcs_);
    data.ilcs_min_ = RangeMin<std::uint32_t>(data.ilcs_);
    return data;
}

bool LcsData::share(std::size_t level, Vertex u, Vertex v) const {
    if (level > cap_) throw std::out_of_range("share level exceeds the LCS cap");
    if (u > v) throw std::invalid_argument("share expects u <= v");
    if (level == 0 || u == v) return true;
    if (elcs_min_.min(u + 1, v + 1) < level) return false;
    return v - u < 2 || ilcs_min_.min(u + 1, v) >= level;
}

bool LcsData::ilcs_at_least(std::size_t level, Vertex v) const {
    if (level > cap_) throw std::out_of_range("ilcs level exceeds the LCS cap");
    return ilcs_[v] >= level;
}

}  // namespace kmergraph
