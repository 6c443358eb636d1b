#include "kmergraph/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

namespace kmergraph {

std::size_t oracle_cap_from_env() {
    const char* env = std::getenv("KMERGRAPH_ORACLE_CAP");
    if (env == nullptr || *env == '\0') return kDefaultOracleCap;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') throw Error(ErrorKind::Format, "KMERGRAPH_ORACLE_CAP is not a number");
    return static_cast<std::size_t>(v);
}

bool KmerSet::contains(const LabelString& s) const {
    return std::binary_search(members.begin(), members.end(), s, colex_less);
}

namespace {

using StringSet = std::unordered_set<LabelString, LabelStringHash>;

KmerSet to_sorted(std::size_t k, const StringSet& set) {
    KmerSet out{k, {set.begin(), set.end()}};
    std::sort(out.members.begin(), out.members.end(), colex_less);
    return out;
}

}  // namespace

KmerEnumeration enumerate_kmers(const LabeledGraph& g, std::size_t k, std::size_t cap) {
    const std::size_t n = g.num_vertices();
    std::vector<StringSet> level(n, StringSet{LabelString{}});
    if (n > cap) throw ResourceCapError("oracle too large: more than " + std::to_string(cap) + " k-mers");

    for (std::size_t l = 1; l <= k; ++l) {
        std::vector<StringSet> next(n);
        std::size_t total = 0;
        for (const Edge& e : g.edges()) {
            auto& dst = next[e.to];
            for (const auto& s : level[e.from]) {
                LabelString t = s;
                t.push_back(e.label);
                if (dst.insert(std::move(t)).second && ++total > cap)
                    throw ResourceCapError("oracle too large: more than " + std::to_string(cap) + " k-mers");
            }
        }
        level = std::move(next);
    }

    KmerEnumeration out;
    StringSet all;
    out.per_vertex.reserve(n);
    for (const auto& s : level) {
        all.insert(s.begin(), s.end());
        out.per_vertex.push_back(to_sorted(k, s));
    }
    out.all = to_sorted(k, all);
    return out;
}

Count count_kmers_brute(const LabeledGraph& g, std::size_t k, std::size_t cap) {
    return Count(enumerate_kmers(g, k, cap).all.members.size());
}

ExplicitDbg build_dbg_brute(const LabeledGraph& g, std::size_t k, std::size_t cap) {
    if (k == 0) throw Error(ErrorKind::Format, "de Bruijn graph needs k >= 1");
    ExplicitDbg dbg;
    dbg.k = k;
    dbg.nodes = enumerate_kmers(g, k, cap).all.members;
    dbg.num_nodes = dbg.nodes.size();

    std::map<LabelString, std::vector<std::size_t>> by_prefix;
    for (std::size_t j = 0; j < dbg.nodes.size(); ++j) {
        const auto& s = dbg.nodes[j];
        by_prefix[LabelString(s.begin(), s.end() - 1)].push_back(j);
    }
    for (std::size_t i = 0; i < dbg.nodes.size(); ++i) {
        const auto& s = dbg.nodes[i];
        const auto it = by_prefix.find(LabelString(s.begin() + 1, s.end()));
        if (it == by_prefix.end()) continue;
        for (std::size_t j : it->second) dbg.edges.push_back({i, j, dbg.nodes[j].back()});
    }
    std::sort(dbg.edges.begin(), dbg.edges.end());
    return dbg;
}

std::string to_dbg_text(const ExplicitDbg& dbg, const LabeledGraph& g) {
    std::ostringstream out;
    out << "DBG " << dbg.k << ' ' << dbg.num_nodes << ' ' << dbg.edges.size() << '\n';
    for (const auto& s : dbg.nodes) out << g.display(s) << '\n';
    for (const auto& e : dbg.edges) out << e.from + 1 << ' ' << e.to + 1 << ' ' << g.display(e.label) << '\n';
    return out.str();
}

LabelString CappedString::suffix(std::size_t len) const {
    const std::size_t take = std::min(len, text.size());
    return LabelString(text.end() - static_cast<std::ptrdiff_t>(take), text.end());
}

namespace {

CappedString follow_extreme(const WheelerGraph& w, Vertex v, std::size_t cap, bool minimal) {
    CappedString out;
    LabelString reversed;
    Vertex cur = v;
    while (reversed.size() < cap) {
        const auto preds = w.preds(cur);
        if (preds.empty()) {
            out.finite = true;
            break;
        }
        reversed.push_back(*w.lambda(cur));
        cur = minimal ? preds.front() : preds.back();
    }
    if (reversed.size() == cap && w.is_source(cur)) out.finite = true;
    out.text.assign(reversed.rbegin(), reversed.rend());
    return out;
}

}  // namespace

InfSup inf_sup_capped(const WheelerGraph& w, Vertex v, std::size_t cap) {
    return {follow_extreme(w, v, cap, true), follow_extreme(w, v, cap, false)};
}

void check_dnf(const DnfFormula& f) {
    for (std::size_t j = 0; j < f.clauses.size(); ++j) {
        std::set<int> seen;
        for (int lit : f.clauses[j]) {
            const auto var = static_cast<std::size_t>(std::abs(lit));
            if (lit == 0 || var > f.nvars)
                throw Error(ErrorKind::Format, "clause " + std::to_string(j + 1) + ": variable out of range");
            if (seen.count(-lit))
                throw Error(ErrorKind::Format,
                            "clause " + std::to_string(j + 1) + " contains x" + std::to_string(var) + " and its negation");
            seen.insert(lit);
        }
    }
}

DnfFormula parse_dnf(std::string_view text) {
    std::vector<std::pair<std::size_t, std::string>> lines;
    std::size_t lineno = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++lineno;
        std::string line(text.substr(start, end - start));
        const auto pos = line.find_first_not_of(" \t\r");
        if (pos != std::string::npos && line[pos] != '#') lines.emplace_back(lineno, line);
        start = end + 1;
    }
    if (lines.empty()) throw ParseError("missing DNF header", 1);
    {
        std::istringstream hdr(lines[0].second);
        std::string magic, version, extra;
        if (!(hdr >> magic >> version) || magic != "DNF" || version != "1" || (hdr >> extra))
            throw ParseError("malformed header, expected 'DNF 1'", lines[0].first);
    }
    if (lines.size() < 2) throw ParseError("missing 'nvars nclauses' line", lines[0].first + 1);
    long long nvars = -1, nclauses = -1;
    {
        std::istringstream sz(lines[1].second);
        std::string extra;
        if (!(sz >> nvars >> nclauses) || (sz >> extra) || nvars < 0 || nclauses < 0)
            throw ParseError("malformed size line, expected 'nvars nclauses'", lines[1].first);
    }
    DnfFormula f;
    f.nvars = static_cast<std::size_t>(nvars);
    for (std::size_t i = 2; i < lines.size(); ++i) {
        std::istringstream cs(lines[i].second);
        std::vector<int> clause;
        std::string tok;
        bool terminated = false;
        while (cs >> tok) {
            if (terminated) throw ParseError("literal after terminating 0", lines[i].first);
            int lit = 0;
            try {
                std::size_t used = 0;
                lit = std::stoi(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw ParseError("malformed literal '" + tok + "'", lines[i].first);
            }
            if (lit == 0) {
                terminated = true;
                continue;
            }
            if (static_cast<std::size_t>(std::abs(lit)) > f.nvars)
                throw ParseError("variable out of range", lines[i].first);
            clause.push_back(lit);
        }
        f.clauses.push_back(std::move(clause));
    }
    if (f.clauses.size() != static_cast<std::size_t>(nclauses))
        throw ParseError("expected " + std::to_string(nclauses) + " clauses, found " + std::to_string(f.clauses.size()),
                         lines.back().first);
    try {
        check_dnf(f);
    } catch (const Error& e) {
        throw ParseError(e.what(), lines.back().first);
    }
    return f;
}

DnfFormula read_dnf_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Format, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_dnf(buf.str());
}

std::string to_dnf_text(const DnfFormula& f) {
    std::ostringstream out;
    out << "DNF 1\n" << f.nvars << ' ' << f.clauses.size() << '\n';
    for (const auto& clause : f.clauses) {
        for (int lit : clause) out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

Count dnf_count_sat_brute(const DnfFormula& f) {
    check_dnf(f);
    if (f.nvars > kMaxBruteDnfVars)
        throw ResourceCapError("brute-force model counting supports at most " + std::to_string(kMaxBruteDnfVars) +
                               " variables");
    std::uint64_t count = 0;
    const std::uint64_t total = std::uint64_t{1} << f.nvars;
    for (std::uint64_t a = 0; a < total; ++a) {
        const bool sat = std::any_of(f.clauses.begin(), f.clauses.end(), [a](const std::vector<int>& clause) {
            return std::all_of(clause.begin(), clause.end(), [a](int lit) {
                const bool value = (a >> (std::abs(lit) - 1)) & 1U;
                return lit > 0 ? value : !value;
            });
        });
        if (sat) ++count;
    }
    return Count(count);
}

}  // namespace kmergraph
