#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstddef>
#include <span>
#include <vector>

namespace kmergraph {

// Sparse-table range-minimum index: O(n log n) words, O(1) query.
template <typename T>
class RangeMin {
public:
    RangeMin() = default;

    explicit RangeMin(std::span<const T> values) {
        const std::size_t n = values.size();
        if (n == 0) return;
        levels_.emplace_back(values.begin(), values.end());
        for (std::size_t width = 2; width <= n; width *= 2) {
            const auto& prev = levels_.back();
            std::vector<T> next(n - width + 1);
            for (std::size_t i = 0; i + width <= n; ++i)
                next[i] = std::min(prev[i], prev[i + width / 2]);
            levels_.push_back(std::move(next));
        }
    }

    [[nodiscard]] std::size_t size() const { return levels_.empty() ? 0 : levels_[0].size(); }

    /// Minimum over the half-open range [lo, hi); requires lo < hi.
    [[nodiscard]] T min(std::size_t lo, std::size_t hi) const {
        assert(lo < hi && hi <= size());
        const std::size_t level = std::bit_width(hi - lo) - 1;
        return std::min(levels_[level][lo], levels_[level][hi - (std::size_t{1} << level)]);
    }

private:
    std::vector<std::vector<T>> levels_;
};

}  // namespace kmergraph
