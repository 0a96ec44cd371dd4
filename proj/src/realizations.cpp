#include "realizations.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <unordered_set>

#include "errors.hpp"

namespace potgraph {

SmallGraph havel_hakimi_realize(const DegreeSequence& s) {
    if (!is_graphical(s)) {
        throw ContractError("sequence " + format_sequence(s) + " is not graphical");
    }
    const int n = static_cast<int>(s.size());
    SmallGraph g(n);
    std::vector<int> residual(s.terms().begin(), s.terms().end());
    std::vector<bool> done(n, false);
    while (true) {
        int v = -1;
        for (int u = 0; u < n; ++u)
            if (!done[u] && residual[u] > 0 && (v < 0 || residual[u] > residual[v])) v = u;
        if (v < 0) break;
        done[v] = true;

        std::vector<int> pool;
        for (int u = 0; u < n; ++u)
            if (!done[u] && residual[u] > 0) pool.push_back(u);
        std::stable_sort(pool.begin(), pool.end(),
                         [&](int a, int b) { return residual[a] > residual[b]; });
        if (static_cast<int>(pool.size()) < residual[v]) {
            throw ContractError("layoff failed for " + format_sequence(s));
        }
        for (int i = 0; i < residual[v]; ++i) {
            g.add_edge(v, pool[i]);
            --residual[pool[i]];
        }
        residual[v] = 0;
    }
    return g;
}

namespace {

std::string pair_name(int a, int b) { return std::to_string(a) + "-" + std::to_string(b); }

void require_edge(const SmallGraph& g, int a, int b) {
    if (!g.has_edge(a, b)) throw ContractError("required edge " + pair_name(a, b) + " is absent");
}

void require_non_edge(const SmallGraph& g, int a, int b) {
    if (g.has_edge(a, b)) throw ContractError("required non-edge " + pair_name(a, b) + " is present");
}

void require_in_range(const SmallGraph& g, std::initializer_list<int> vs) {
    for (int v : vs)
        if (v < 0 || v >= g.order()) throw ContractError("vertex " + std::to_string(v) + " out of range");
}

void require_distinct(std::initializer_list<int> vs) {
    std::vector<int> sorted(vs);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw ContractError("vertices must be pairwise distinct");
    }
}

struct Switch {
    int a, b, c, d;  // remove ab, cd; add ac, bd
};

std::vector<Switch> valid_switches(const SmallGraph& g) {
    const auto edges = g.edges();
    std::vector<Switch> out;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const auto [a, b] = edges[i];
            const auto [c, d] = edges[j];
            if (a == c || a == d || b == c || b == d) continue;
            if (!g.has_edge(a, c) && !g.has_edge(b, d)) out.push_back({a, b, c, d});
            if (!g.has_edge(a, d) && !g.has_edge(b, c)) out.push_back({a, b, d, c});
        }
    }
    return out;
}

SmallGraph apply_switch(SmallGraph g, const Switch& s) {
    g.remove_edge(s.a, s.b);
    g.remove_edge(s.c, s.d);
    g.add_edge(s.a, s.c);
    g.add_edge(s.b, s.d);
    return g;
}

}  // namespace

SmallGraph two_switch(const SmallGraph& g, int a, int b, int c, int d) {
    require_in_range(g, {a, b, c, d});
    require_distinct({a, b, c, d});
    require_edge(g, a, b);
    require_edge(g, c, d);
    require_non_edge(g, a, c);
    require_non_edge(g, b, d);
    return apply_switch(g, {a, b, c, d});
}

ExploreStats explore_realizations(const DegreeSequence& s, const SearchOptions& options,
                                  const std::function<bool(const SmallGraph&)>& visit) {
    const int n = static_cast<int>(s.size());
    if (n > options.vertex_limit) {
        throw ResourceError("realization search on " + std::to_string(n) +
                            " vertices exceeds the vertex limit " + std::to_string(options.vertex_limit));
    }
    SmallGraph start = havel_hakimi_realize(s);

    ExploreStats stats;
    std::unordered_set<std::string> seen;
    std::deque<SmallGraph> frontier;
    std::mt19937_64 rng(options.seed);

    // Returns false when exploration must stop.
    auto discover = [&](const SmallGraph& g) {
        if (!seen.insert(canonical_form(g, options.vertex_limit)).second) return true;
        if (options.budget && stats.explored >= *options.budget) return false;
        ++stats.explored;
        if (!visit(g)) return false;
        frontier.push_back(g);
        return true;
    };

    if (!discover(start)) return stats;
    while (!frontier.empty()) {
        const SmallGraph g = std::move(frontier.front());
        frontier.pop_front();
        auto moves = valid_switches(g);
        if (options.seed != 0) std::shuffle(moves.begin(), moves.end(), rng);
        for (const Switch& sw : moves) {
            if (!discover(apply_switch(g, sw))) return stats;
        }
    }
    stats.exhausted = true;
    return stats;
}

std::vector<SmallGraph> enumerate_realizations(const DegreeSequence& s, const SearchOptions& options) {
    std::vector<SmallGraph> out;
    const ExploreStats stats = explore_realizations(s, options, [&](const SmallGraph& g) {
        out.push_back(g);
        return true;
    });
    if (!stats.exhausted) {
        throw ResourceError("realization budget exhausted after " + std::to_string(stats.explored) +
                                " classes of " + format_sequence(s),
                            stats.explored);
    }
    return out;
}

bool degrees_admit(const DegreeSequence& s, const SmallGraph& pattern) {
    const DegreeSequence p = degree_sequence_of(pattern);
    if (p.size() > s.size()) return false;
    if (degree_sum(s) < degree_sum(p)) return false;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (s[i] < p[i]) return false;
    return true;
}

WitnessResult is_potentially(const DegreeSequence& s, const TargetPattern& target,
                             const SearchOptions& options) {
    if (!is_graphical(s)) {
        throw ContractError("sequence " + format_sequence(s) + " is not graphical");
    }
    WitnessResult result;
    if (static_cast<int>(s.size()) < target.m || !degrees_admit(s, target.pattern)) {
        result.exhausted = true;
        return result;
    }
    const ExploreStats stats = explore_realizations(s, options, [&](const SmallGraph& g) {
        if (auto map = contains_subgraph(g, target.pattern)) {
            result.verdict = true;
            result.witness = g;
            result.embedding = std::move(*map);
            return false;
        }
        return true;
    });
    result.explored = stats.explored;
    result.exhausted = stats.exhausted;
    return result;
}

SmallGraph theorem2_interchange(const SmallGraph& g, const InterchangeVertices& x) {
    require_in_range(g, {x.v1, x.v2, x.v3, x.v4, x.y1, x.y2, x.y3});
    require_distinct({x.v1, x.v2, x.v3, x.v4, x.y1, x.y2, x.y3});
    const int quad[4] = {x.v1, x.v2, x.v3, x.v4};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) require_edge(g, quad[i], quad[j]);
    require_edge(g, x.v1, x.y1);
    require_edge(g, x.y1, x.y3);
    require_edge(g, x.v2, x.y2);
    require_non_edge(g, x.y1, x.v2);
    require_non_edge(g, x.y3, x.v1);
    require_non_edge(g, x.y2, x.v4);

    SmallGraph out = g;
    out.remove_edge(x.y1, x.y3);
    out.remove_edge(x.v1, x.v4);
    out.remove_edge(x.v2, x.y2);
    out.add_edge(x.y1, x.v2);
    out.add_edge(x.y3, x.v1);
    out.add_edge(x.y2, x.v4);
    return out;
}

}  // namespace potgraph
