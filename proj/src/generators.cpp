#include "kmergraph/generators.hpp"

#include <algorithm>
#include <map>

namespace kmergraph {

std::string generated_alphabet(std::size_t sigma) {
    static constexpr std::string_view letters = "abcdefghijklmnopqrstuvwxyz";
    if (sigma > letters.size()) throw Error(ErrorKind::Format, "generated alphabets stop at 26 letters");
    return std::string(letters.substr(0, sigma));
}

LabeledGraph dbg_of_string(const std::string& text, std::size_t order) {
    if (order < 1) throw Error(ErrorKind::Format, "de Bruijn order must be at least 1");
    std::string alphabet = text;
    std::sort(alphabet.begin(), alphabet.end());
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
    std::map<char, Label> code;
    for (char c : alphabet) code.emplace(c, static_cast<Label>(code.size()));

    // '$' sorts before every real character because it maps to -1.
    const std::string padded = std::string(order, '$') + text;
    auto key = [&](std::size_t start) {
        std::vector<int> reversed;
        for (std::size_t i = start + order; i-- > start;)
            reversed.push_back(padded[i] == '$' ? -1 : static_cast<int>(code.at(padded[i])));
        return reversed;
    };
    std::map<std::vector<int>, Vertex> nodes;
    for (std::size_t s = 0; s + order <= padded.size(); ++s) nodes.emplace(key(s), 0);
    Vertex next = 0;
    for (auto& [k, id] : nodes) id = next++;

    std::vector<Edge> edges;
    for (std::size_t i = order; i < padded.size(); ++i)
        edges.push_back(Edge{nodes.at(key(i - order)), nodes.at(key(i - order + 1)), code.at(padded[i])});
    return LabeledGraph(nodes.size(), alphabet.size(), std::move(edges), alphabet);
}

std::string random_text(Rng& rng, std::size_t length, std::size_t sigma) {
    const std::string alphabet = generated_alphabet(sigma);
    std::uniform_int_distribution<std::size_t> pick(0, sigma - 1);
    std::string out;
    for (std::size_t i = 0; i < length; ++i) out.push_back(alphabet[pick(rng)]);
    return out;
}

LabeledGraph random_wheeler_graph(Rng& rng, std::size_t n, std::size_t sigma, std::size_t max_sources) {
    if (n < 2) throw Error(ErrorKind::Format, "random Wheeler graphs need n >= 2");
    auto uniform = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
    const std::size_t sources = uniform(1, std::max<std::size_t>(1, std::min(max_sources, n - 1)));
    const std::size_t rest = n - sources;
    const std::size_t used = uniform(1, std::min(sigma, rest));

    // Split the non-source vertices into `used` non-empty label blocks and
    // pick which labels they carry.
    std::vector<std::size_t> cuts;
    for (std::size_t i = 1; i < rest; ++i) cuts.push_back(i);
    std::shuffle(cuts.begin(), cuts.end(), rng);
    cuts.resize(used - 1);
    cuts.push_back(0);
    cuts.push_back(rest);
    std::sort(cuts.begin(), cuts.end());
    std::vector<Label> labels(sigma);
    for (Label c = 0; c < sigma; ++c) labels[c] = c;
    std::shuffle(labels.begin(), labels.end(), rng);
    labels.resize(used);
    std::sort(labels.begin(), labels.end());

    std::vector<Edge> edges;
    std::vector<Vertex> all(n);
    for (Vertex v = 0; v < n; ++v) all[v] = v;
    for (std::size_t b = 0; b < used; ++b) {
        const auto lo = static_cast<Vertex>(sources + cuts[b]);
        const std::size_t size = cuts[b + 1] - cuts[b];
        const std::size_t tails = uniform(size, std::min(n, size + uniform(0, 2)));
        std::shuffle(all.begin(), all.end(), rng);
        std::vector<Vertex> from(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(tails));
        std::sort(from.begin(), from.end());
        // Non-decreasing surjection from the tails onto the block.
        std::vector<std::size_t> steps(tails - 1);
        for (std::size_t i = 0; i < steps.size(); ++i) steps[i] = i;
        std::shuffle(steps.begin(), steps.end(), rng);
        steps.resize(size - 1);
        std::sort(steps.begin(), steps.end());
        Vertex target = lo;
        std::size_t s = 0;
        for (std::size_t i = 0; i < tails; ++i) {
            edges.push_back(Edge{from[i], target, labels[b]});
            if (s < steps.size() && steps[s] == i) {
                ++target;
                ++s;
            }
        }
    }
    return LabeledGraph(n, sigma, std::move(edges), generated_alphabet(sigma));
}

LabeledGraph random_labeled_graph(Rng& rng, std::size_t n, std::size_t sigma, std::size_t m) {
    std::uniform_int_distribution<Vertex> vertex(0, static_cast<Vertex>(n - 1));
    std::uniform_int_distribution<Label> label(0, static_cast<Label>(sigma - 1));
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < m; ++i) edges.push_back(Edge{vertex(rng), vertex(rng), label(rng)});
    return LabeledGraph(n, sigma, std::move(edges), generated_alphabet(sigma));
}

DnfFormula random_dnf(Rng& rng, std::size_t nvars, std::size_t nclauses) {
    DnfFormula f;
    f.nvars = nvars;
    std::uniform_int_distribution<int> choice(0, 2);
    for (std::size_t j = 0; j < nclauses; ++j) {
        std::vector<int> clause;
        for (std::size_t i = 1; i <= nvars; ++i) {
            const int c = choice(rng);
            if (c == 1) clause.push_back(static_cast<int>(i));
            if (c == 2) clause.push_back(-static_cast<int>(i));
        }
        f.clauses.push_back(std::move(clause));
    }
    return f;
}

}  // namespace kmergraph
