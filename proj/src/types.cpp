#include "kmergraph/types.hpp"

namespace kmergraph {

bool colex_less(const LabelString& a, const LabelString& b) {
    auto ia = a.rbegin();
    auto ib = b.rbegin();
    for (; ia != a.rend() && ib != b.rend(); ++ia, ++ib) {
        if (*ia != *ib) return *ia < *ib;
    }
    return ia == a.rend() && ib != b.rend();
}

std::size_t LabelStringHash::operator()(const LabelString& s) const noexcept {
    // FNV-1a over the codes.
    std::size_t h = 1469598103934665603ULL;
    for (Label c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string to_decimal(const Count& c) { return c.str(); }

}  // namespace kmergraph
