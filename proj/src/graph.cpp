#include "kmergraph/graph.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

namespace kmergraph {

LabeledGraph::LabeledGraph(std::size_t n, std::size_t sigma, std::vector<Edge> edges, std::string alphabet)
    : n_(n), sigma_(sigma), edges_(std::move(edges)), alphabet_(std::move(alphabet)) {
    if (!alphabet_.empty() && alphabet_.size() != sigma_)
        throw Error(ErrorKind::Format, "alphabet string does not match sigma");
    for (const Edge& e : edges_) {
        if (e.from >= n_ || e.to >= n_) throw Error(ErrorKind::Format, "edge endpoint out of range");
        if (e.label >= sigma_) throw Error(ErrorKind::Format, "edge label out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    const auto last = std::unique(edges_.begin(), edges_.end());
    duplicates_removed_ = static_cast<std::size_t>(edges_.end() - last);
    edges_.erase(last, edges_.end());
}

char LabeledGraph::display(Label c) const {
    if (c < alphabet_.size()) return alphabet_[c];
    return '?';
}

std::string LabeledGraph::display(const LabelString& s) const {
    std::string out;
    out.reserve(s.size());
    for (Label c : s) out.push_back(display(c));
    return out;
}

std::optional<LabelString> LabeledGraph::encode(std::string_view text) const {
    LabelString out;
    out.reserve(text.size());
    for (char ch : text) {
        const auto pos = alphabet_.find(ch);
        if (pos == std::string::npos) return std::nullopt;
        out.push_back(static_cast<Label>(pos));
    }
    return out;
}

namespace {

struct RawEdge {
    std::size_t u, v;
    char c;
    std::size_t line;
};

bool is_comment_or_blank(std::string_view line) {
    const auto pos = line.find_first_not_of(" \t\r");
    return pos == std::string_view::npos || line[pos] == '#';
}

}  // namespace

ParsedGraph parse_graph(std::string_view text) {
    std::vector<std::pair<std::size_t, std::string>> lines;
    {
        std::size_t lineno = 0;
        std::size_t start = 0;
        while (start <= text.size()) {
            auto end = text.find('\n', start);
            if (end == std::string_view::npos) end = text.size();
            ++lineno;
            std::string_view line = text.substr(start, end - start);
            if (!is_comment_or_blank(line)) lines.emplace_back(lineno, std::string(line));
            start = end + 1;
        }
    }
    if (lines.empty()) throw ParseError("missing WGF header", 1);

    {
        std::istringstream hdr(lines[0].second);
        std::string magic, version, extra;
        if (!(hdr >> magic >> version) || magic != "WGF" || version != "1" || (hdr >> extra))
            throw ParseError("malformed header, expected 'WGF 1'", lines[0].first);
    }
    if (lines.size() < 2) throw ParseError("missing 'n m' line", lines[0].first + 1);

    long long n = -1, m = -1;
    {
        std::istringstream sz(lines[1].second);
        std::string extra;
        if (!(sz >> n >> m) || (sz >> extra) || n < 1 || m < 0)
            throw ParseError("malformed size line, expected 'n m' with n >= 1", lines[1].first);
    }

    std::vector<RawEdge> raw;
    for (std::size_t i = 2; i < lines.size(); ++i) {
        const auto& [lineno, line] = lines[i];
        std::istringstream es(line);
        long long u = 0, v = 0;
        std::string label, extra;
        if (!(es >> u >> v >> label) || (es >> extra))
            throw ParseError("malformed edge, expected 'u v c'", lineno);
        if (u < 1 || v < 1 || u > n || v > n) throw ParseError("vertex index out of range", lineno);
        if (label.size() != 1 || label[0] < 33 || label[0] > 126)
            throw ParseError("label must be one printable ASCII character", lineno);
        raw.push_back({static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1), label[0], lineno});
    }
    if (raw.size() != static_cast<std::size_t>(m)) {
        const std::size_t at = lines.back().first;
        throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(raw.size()), at);
    }

    std::array<bool, 128> used{};
    for (const auto& e : raw) used[static_cast<unsigned char>(e.c)] = true;
    std::string alphabet;
    std::array<Label, 128> code{};
    for (int ch = 0; ch < 128; ++ch) {
        if (!used[ch]) continue;
        code[ch] = static_cast<Label>(alphabet.size());
        alphabet.push_back(static_cast<char>(ch));
    }

    std::vector<Edge> edges;
    edges.reserve(raw.size());
    for (const auto& e : raw)
        edges.push_back({static_cast<Vertex>(e.u), static_cast<Vertex>(e.v), code[static_cast<unsigned char>(e.c)]});

    ParsedGraph out{LabeledGraph(static_cast<std::size_t>(n), alphabet.size(), std::move(edges), alphabet), {}};
    if (out.graph.duplicates_removed() > 0)
        out.warnings.push_back("removed " + std::to_string(out.graph.duplicates_removed()) + " duplicate edge(s)");
    return out;
}

ParsedGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Format, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

std::string to_wgf(const LabeledGraph& g) {
    for (char ch : g.alphabet()) {
        if (ch < 33 || ch > 126) throw Error(ErrorKind::Format, "alphabet has a non-printable character");
    }
    if (g.alphabet().size() != g.sigma()) throw Error(ErrorKind::Format, "graph has no display alphabet");
    std::ostringstream out;
    out << "WGF 1\n" << g.num_vertices() << ' ' << g.edges().size() << '\n';
    for (const Edge& e : g.edges()) out << e.from + 1 << ' ' << e.to + 1 << ' ' << g.display(e.label) << '\n';
    return out.str();
}

DeterminismReport check_deterministic(const LabeledGraph& g) {
    // edges() is sorted by (from, to, label); regroup by (from, label).
    std::vector<Edge> es = g.edges();
    std::sort(es.begin(), es.end(), [](const Edge& a, const Edge& b) {
        return std::tie(a.from, a.label, a.to) < std::tie(b.from, b.label, b.to);
    });
    for (std::size_t i = 1; i < es.size(); ++i) {
        if (es[i].from == es[i - 1].from && es[i].label == es[i - 1].label)
            return {false, std::make_pair(es[i - 1], es[i])};
    }
    return {};
}

std::string_view to_string(WheelerRule rule) {
    switch (rule) {
        case WheelerRule::W1: return "W1";
        case WheelerRule::W2: return "W2";
        case WheelerRule::SourcesFirst: return "sources-first";
        case WheelerRule::Nondeterministic: return "nondeterministic";
        case WheelerRule::InputInconsistent: return "input-inconsistent";
    }
    return "?";
}

std::string WheelerDiagnostic::message() const {
    std::ostringstream out;
    out << "Wheeler violation (" << to_string(rule) << ")";
    if (rule == WheelerRule::SourcesFirst) {
        out << ": source " << source_vertex + 1 << " follows vertex " << positive_vertex + 1
            << " with positive indegree";
    }
    for (const Edge& e : witness) out << " [" << e.from + 1 << "->" << e.to + 1 << " label " << e.label << "]";
    return out.str();
}

std::optional<WheelerDiagnostic> check_wheeler(const LabeledGraph& g) {
    if (auto det = check_deterministic(g); !det.deterministic)
        return WheelerDiagnostic{WheelerRule::Nondeterministic, {det.witness->first, det.witness->second}};

    const std::size_t n = g.num_vertices();
    std::vector<const Edge*> first_in(n, nullptr);
    std::vector<bool> has_in(n, false);
    for (const Edge& e : g.edges()) {
        if (first_in[e.to] == nullptr) {
            first_in[e.to] = &e;
        } else if (first_in[e.to]->label != e.label) {
            return WheelerDiagnostic{WheelerRule::InputInconsistent, {*first_in[e.to], e}};
        }
        has_in[e.to] = true;
    }

    Vertex first_positive = kNoVertex;
    for (Vertex v = 0; v < n; ++v) {
        if (has_in[v] && first_positive == kNoVertex) first_positive = v;
        if (!has_in[v] && first_positive != kNoVertex) {
            WheelerDiagnostic d{WheelerRule::SourcesFirst, {}};
            d.source_vertex = v;
            d.positive_vertex = first_positive;
            return d;
        }
    }

    std::vector<Edge> by_label = g.edges();
    std::sort(by_label.begin(), by_label.end(), [](const Edge& a, const Edge& b) {
        return std::tie(a.label, a.from, a.to) < std::tie(b.label, b.from, b.to);
    });

    // W1: every target of a smaller label precedes every target of a larger one.
    const Edge* max_prev = nullptr;  // edge with the largest target among smaller labels
    for (std::size_t i = 0; i < by_label.size();) {
        std::size_t j = i;
        const Edge* min_here = &by_label[i];
        const Edge* max_here = &by_label[i];
        while (j < by_label.size() && by_label[j].label == by_label[i].label) {
            if (by_label[j].to < min_here->to) min_here = &by_label[j];
            if (by_label[j].to > max_here->to) max_here = &by_label[j];
            ++j;
        }
        if (max_prev != nullptr && max_prev->to >= min_here->to)
            return WheelerDiagnostic{WheelerRule::W1, {*max_prev, *min_here}};
        if (max_prev == nullptr || max_here->to > max_prev->to) max_prev = max_here;
        i = j;
    }

    // W2: within a label, sorting by source leaves targets non-decreasing.
    for (std::size_t i = 1; i < by_label.size(); ++i) {
        const Edge& a = by_label[i - 1];
        const Edge& b = by_label[i];
        if (a.label == b.label && a.from < b.from && a.to > b.to) return WheelerDiagnostic{WheelerRule::W2, {a, b}};
    }
    return std::nullopt;
}

WheelerGraph validate_wheeler(const LabeledGraph& g) {
    if (auto diag = check_wheeler(g)) throw WheelerViolation(std::move(*diag));

    WheelerGraph w;
    w.base_ = g;
    const std::size_t n = g.num_vertices();
    const std::size_t sigma = g.sigma();

    w.lambda_.assign(n, std::nullopt);
    w.in_offsets_.assign(n + 1, 0);
    w.out_offsets_.assign(n + 1, 0);
    for (const Edge& e : g.edges()) {
        w.lambda_[e.to] = e.label;
        ++w.in_offsets_[e.to + 1];
        ++w.out_offsets_[e.from + 1];
    }
    for (std::size_t v = 0; v < n; ++v) {
        w.in_offsets_[v + 1] += w.in_offsets_[v];
        w.out_offsets_[v + 1] += w.out_offsets_[v];
    }
    w.in_.resize(g.edges().size());
    w.out_.resize(g.edges().size());
    {
        auto in_fill = w.in_offsets_;
        auto out_fill = w.out_offsets_;
        // edges() is sorted by (from, to, label), so in-lists come out sorted by source.
        for (const Edge& e : g.edges()) {
            w.in_[in_fill[e.to]++] = e.from;
            w.out_[out_fill[e.from]++] = OutEdge{e.label, e.to};
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
        std::sort(w.out_.begin() + static_cast<std::ptrdiff_t>(w.out_offsets_[v]),
                  w.out_.begin() + static_cast<std::ptrdiff_t>(w.out_offsets_[v + 1]),
                  [](const OutEdge& a, const OutEdge& b) { return a.label < b.label; });
        if (w.is_source(static_cast<Vertex>(v))) ++w.num_sources_;
    }

    w.by_label_.assign(sigma, {});
    for (const Edge& e : g.edges()) w.by_label_[e.label].emplace_back(e.from, e.to);
    for (auto& list : w.by_label_) std::sort(list.begin(), list.end());

    w.out_label_rank_.assign(sigma, std::vector<std::uint32_t>(n + 1, 0));
    for (Label c = 0; c < sigma; ++c) {
        auto& rank = w.out_label_rank_[c];
        std::size_t idx = 0;
        const auto& list = w.by_label_[c];
        for (Vertex v = 0; v < n; ++v) {
            bool has = false;
            while (idx < list.size() && list[idx].first == v) {
                has = true;
                ++idx;
            }
            rank[v + 1] = rank[v] + (has ? 1 : 0);
        }
    }
    return w;
}

std::optional<Label> WheelerGraph::lambda(Vertex v) const { return lambda_[v]; }

std::span<const Vertex> WheelerGraph::preds(Vertex v) const {
    return {in_.data() + in_offsets_[v], in_offsets_[v + 1] - in_offsets_[v]};
}

std::span<const OutEdge> WheelerGraph::succs(Vertex v) const {
    return {out_.data() + out_offsets_[v], out_offsets_[v + 1] - out_offsets_[v]};
}

std::size_t WheelerGraph::pred_rank(Vertex v, Vertex u) const {
    const auto p = preds(v);
    const auto it = std::lower_bound(p.begin(), p.end(), u);
    return static_cast<std::size_t>(it - p.begin());
}

MaybeInterval WheelerGraph::forward(Interval from, Label c) const {
    if (c >= by_label_.size()) return std::nullopt;
    const auto& list = by_label_[c];
    auto lo = std::lower_bound(list.begin(), list.end(), std::make_pair(from.lo, Vertex{0}));
    auto hi = std::upper_bound(list.begin(), list.end(), std::make_pair(from.hi, kNoVertex));
    if (lo == hi) return std::nullopt;
    return Interval{lo->second, std::prev(hi)->second};
}

std::optional<Vertex> WheelerGraph::first_with_out_label(Interval from, Label c) const {
    if (c >= by_label_.size()) return std::nullopt;
    const auto& list = by_label_[c];
    auto lo = std::lower_bound(list.begin(), list.end(), std::make_pair(from.lo, Vertex{0}));
    if (lo == list.end() || lo->first > from.hi) return std::nullopt;
    return lo->first;
}

std::vector<Label> WheelerGraph::out_labels(Interval range) const {
    std::vector<Label> out;
    for (Label c = 0; c < out_label_rank_.size(); ++c) {
        const auto& rank = out_label_rank_[c];
        if (rank[range.hi + 1] > rank[range.lo]) out.push_back(c);
    }
    return out;
}

MaybeInterval WheelerGraph::label_block(Label c) const {
    if (c >= by_label_.size() || by_label_[c].empty()) return std::nullopt;
    return Interval{by_label_[c].front().second, by_label_[c].back().second};
}

}  // namespace kmergraph
