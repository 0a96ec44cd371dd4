#include "graphs.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "errors.hpp"

namespace potgraph {

namespace {

void check_order(int n) {
    if (n < 0) throw InputError("vertex count is negative");
    if (n > SmallGraph::kMaxVertices) {
        throw ResourceError("vertex count " + std::to_string(n) + " exceeds " +
                            std::to_string(SmallGraph::kMaxVertices));
    }
}

constexpr std::uint32_t bit(int v) { return std::uint32_t{1} << v; }

}  // namespace

SmallGraph::SmallGraph(int order) : n_(order) { check_order(order); }

int SmallGraph::check(int v) const {
    if (v < 0 || v >= n_) {
        throw InputError("vertex " + std::to_string(v) + " out of range for order " +
                         std::to_string(n_));
    }
    return v;
}

int SmallGraph::size() const noexcept {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
    return twice / 2;
}

int SmallGraph::degree(int v) const { return std::popcount(adj_[check(v)]); }

void SmallGraph::add_edge(int u, int v) {
    check(u);
    check(v);
    if (u == v) throw InputError("loop at vertex " + std::to_string(u));
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
}

void SmallGraph::remove_edge(int u, int v) {
    check(u);
    check(v);
    adj_[u] &= ~bit(v);
    adj_[v] &= ~bit(u);
}

std::vector<std::pair<int, int>> SmallGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
        for (int v = u + 1; v < n_; ++v) {
            if ((adj_[u] >> v) & 1u) out.emplace_back(u, v);
        }
    }
    return out;
}

SmallGraph empty_graph(int n) { return SmallGraph(n); }

SmallGraph complete_graph(int k) {
    SmallGraph g(k);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
    return g;
}

SmallGraph cycle_graph(int k) {
    if (k < 3) throw InputError("a cycle needs at least 3 vertices");
    SmallGraph g(k);
    for (int v = 0; v < k; ++v) g.add_edge(v, (v + 1) % k);
    return g;
}

SmallGraph matching_graph(int p) {
    if (p < 0) throw InputError("matching size is negative");
    SmallGraph g(2 * p);
    for (int i = 0; i < p; ++i) g.add_edge(2 * i, 2 * i + 1);
    return g;
}

SmallGraph complement(const SmallGraph& g) {
    const int n = g.order();
    SmallGraph out(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) out.add_edge(u, v);
    return out;
}

SmallGraph disjoint_union(const SmallGraph& g1, const SmallGraph& g2) {
    const int n1 = g1.order();
    check_order(n1 + g2.order());
    SmallGraph out(n1 + g2.order());
    for (auto [u, v] : g1.edges()) out.add_edge(u, v);
    for (auto [u, v] : g2.edges()) out.add_edge(n1 + u, n1 + v);
    return out;
}

SmallGraph join(const SmallGraph& g1, const SmallGraph& g2) {
    SmallGraph out = disjoint_union(g1, g2);
    const int n1 = g1.order();
    for (int u = 0; u < n1; ++u)
        for (int v = 0; v < g2.order(); ++v) out.add_edge(u, n1 + v);
    return out;
}

TargetPattern km_minus_c4(int m) {
    if (m < 4) throw InputError("K_m-C_4 needs m >= 4, got " + std::to_string(m));
    SmallGraph g = complete_graph(m);
    g.remove_edge(0, 1);
    g.remove_edge(1, 2);
    g.remove_edge(2, 3);
    g.remove_edge(3, 0);
    return {m, g};
}

namespace {

struct EmbeddingSearch {
    const SmallGraph& host;
    const SmallGraph& pattern;
    std::vector<int> order;                   // pattern vertices in placement order
    std::vector<std::uint32_t> degree_ok;     // host vertices with enough degree, per pattern vertex
    Embedding map;

    bool place(std::size_t i, std::uint32_t used) {
        if (i == order.size()) return true;
        const int h = order[i];
        std::uint32_t candidates = degree_ok[h] & ~used;
        for (std::size_t j = 0; j < i; ++j) {
            const int prev = order[j];
            if (pattern.has_edge(h, prev)) candidates &= host.neighbors(map[prev]);
        }
        while (candidates) {
            const int g = std::countr_zero(candidates);
            candidates &= candidates - 1;
            map[h] = g;
            if (place(i + 1, used | bit(g))) return true;
        }
        map[h] = -1;
        return false;
    }
};

}  // namespace

std::optional<Embedding> contains_subgraph(const SmallGraph& host, const SmallGraph& pattern) {
    const int np = pattern.order();
    const int nh = host.order();
    if (np > nh || pattern.size() > host.size()) return std::nullopt;

    EmbeddingSearch search{host, pattern, {}, std::vector<std::uint32_t>(np, 0), Embedding(np, -1)};
    for (int h = 0; h < np; ++h) {
        for (int g = 0; g < nh; ++g)
            if (host.degree(g) >= pattern.degree(h)) search.degree_ok[h] |= bit(g);
        if (search.degree_ok[h] == 0) return std::nullopt;
    }

    // Decreasing degree; among equals prefer vertices tied to already ordered ones.
    std::vector<bool> taken(np, false);
    std::uint32_t ordered_mask = 0;
    for (int step = 0; step < np; ++step) {
        int best = -1;
        for (int h = 0; h < np; ++h) {
            if (taken[h]) continue;
            if (best < 0) {
                best = h;
                continue;
            }
            const int dh = pattern.degree(h), db = pattern.degree(best);
            const int ch = std::popcount(pattern.neighbors(h) & ordered_mask);
            const int cb = std::popcount(pattern.neighbors(best) & ordered_mask);
            if (dh > db || (dh == db && ch > cb)) best = h;
        }
        taken[best] = true;
        ordered_mask |= bit(best);
        search.order.push_back(best);
    }

    if (!search.place(0, 0)) return std::nullopt;
    return search.map;
}

bool is_embedding(const SmallGraph& host, const SmallGraph& pattern, const Embedding& map) {
    if (static_cast<int>(map.size()) != pattern.order()) return false;
    std::uint32_t used = 0;
    for (int g : map) {
        if (g < 0 || g >= host.order() || (used & bit(g))) return false;
        used |= bit(g);
    }
    for (auto [u, v] : pattern.edges())
        if (!host.has_edge(map[u], map[v])) return false;
    return true;
}

DegreeSequence degree_sequence_of(const SmallGraph& g) {
    std::vector<int> d(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) d[v] = g.degree(v);
    return DegreeSequence(std::move(d));
}

SmallGraph delete_vertex(const SmallGraph& g, int v) {
    if (v < 0 || v >= g.order()) {
        throw InputError("cannot delete vertex " + std::to_string(v) + " from a graph of order " +
                         std::to_string(g.order()));
    }
    SmallGraph out(g.order() - 1);
    auto renum = [v](int x) { return x < v ? x : x - 1; };
    for (auto [a, b] : g.edges())
        if (a != v && b != v) out.add_edge(renum(a), renum(b));
    return out;
}

SmallGraph relabel(const SmallGraph& g, const std::vector<int>& order) {
    const int n = g.order();
    if (static_cast<int>(order.size()) != n) throw InputError("relabeling has the wrong length");
    std::vector<int> position(n, -1);
    for (int i = 0; i < n; ++i) {
        const int v = order[i];
        if (v < 0 || v >= n || position[v] >= 0) throw InputError("relabeling is not a permutation");
        position[v] = i;
    }
    SmallGraph out(n);
    for (auto [a, b] : g.edges()) out.add_edge(position[a], position[b]);
    return out;
}

namespace {

// Iterated degree refinement. Colors are ranks of sorted signatures, so they
// do not depend on the vertex labels.
std::vector<int> refine_colors(const SmallGraph& g) {
    const int n = g.order();
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v) color[v] = g.degree(v);
    int classes = -1;
    while (true) {
        std::vector<std::vector<int>> sig(n);
        for (int v = 0; v < n; ++v) {
            sig[v].push_back(color[v]);
            std::vector<int> nbr;
            for (std::uint32_t m = g.neighbors(v); m; m &= m - 1) nbr.push_back(color[std::countr_zero(m)]);
            std::sort(nbr.begin(), nbr.end());
            sig[v].insert(sig[v].end(), nbr.begin(), nbr.end());
        }
        std::vector<std::vector<int>> uniq = sig;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        for (int v = 0; v < n; ++v) {
            color[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
        }
        if (static_cast<int>(uniq.size()) == classes) break;
        classes = static_cast<int>(uniq.size());
    }
    return color;
}

struct CanonicalSearch {
    const SmallGraph& g;
    int n;
    std::vector<int> cell_of_position;
    std::vector<int> color;
    std::vector<std::uint32_t> twins;  // twins[v]: vertices swappable with v by a transposition

    std::vector<int> perm;
    std::vector<std::uint32_t> cols;
    std::vector<int> best_perm;
    std::vector<std::uint32_t> best_cols;
    bool have_best = false;
    unsigned long improvements = 0;

    std::uint32_t column(int p, int v) const {
        std::uint32_t c = 0;
        for (int q = 0; q < p; ++q) c = (c << 1) | (g.has_edge(perm[q], v) ? 1u : 0u);
        return c;
    }

    // less: the current prefix is already strictly smaller than the best.
    void search(int p, std::uint32_t placed, bool less) {
        if (p == n) {
            if (!have_best || less) {
                best_perm = perm;
                best_cols = cols;
                have_best = true;
                ++improvements;
            }
            return;
        }
        std::uint32_t tried = 0;
        for (int v = 0; v < n; ++v) {
            if ((placed & bit(v)) || color[v] != cell_of_position[p]) continue;
            if (twins[v] & tried) continue;
            tried |= bit(v);
            const std::uint32_t c = column(p, v);
            bool child_less = less;
            if (have_best && !less) {
                if (c > best_cols[p]) continue;
                child_less = c < best_cols[p];
            }
            perm[p] = v;
            cols[p] = c;
            const unsigned long before = improvements;
            search(p + 1, placed | bit(v), child_less);
            // A new best found below shares this prefix, so later siblings compare as equal.
            if (improvements != before) less = false;
        }
    }
};

}  // namespace

std::vector<int> canonical_labeling(const SmallGraph& g, int vertex_limit) {
    const int n = g.order();
    if (n > vertex_limit) {
        throw ResourceError("canonical form requested for " + std::to_string(n) +
                            " vertices, above the limit " + std::to_string(vertex_limit));
    }
    CanonicalSearch s{g, n, {}, refine_colors(g), std::vector<std::uint32_t>(n, 0), std::vector<int>(n, -1),
                      std::vector<std::uint32_t>(n, 0), {}, {}, false, 0};
    std::vector<int> sorted_colors = s.color;
    std::sort(sorted_colors.begin(), sorted_colors.end());
    s.cell_of_position = sorted_colors;
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            if ((g.neighbors(u) & ~bit(v)) == (g.neighbors(v) & ~bit(u))) s.twins[u] |= bit(v);
        }
    }
    s.search(0, 0, false);
    return s.best_perm;
}

std::string canonical_form(const SmallGraph& g, int vertex_limit) {
    return to_graph6(relabel(g, canonical_labeling(g, vertex_limit)));
}

std::string to_graph6(const SmallGraph& g) {
    const int n = g.order();
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    int acc = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    return out;
}

SmallGraph from_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty graph6 string", 0);
    for (std::size_t i = 0; i < text.size(); ++i) {
        const unsigned char c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw ParseError("byte outside the graph6 range 63..126", i);
    }
    std::size_t pos = 0;
    long n = 0;
    if (text[0] != 126) {
        n = text[0] - 63;
        pos = 1;
    } else {
        if (text.size() < 4) throw ParseError("truncated graph6 size field", text.size());
        if (text[1] == 126) throw ParseError("graph6 order above 258047 is not supported", 1);
        n = ((text[1] - 63L) << 12) | ((text[2] - 63L) << 6) | (text[3] - 63L);
        pos = 4;
    }
    if (n > SmallGraph::kMaxVertices) {
        throw ParseError("graph6 order " + std::to_string(n) + " exceeds " +
                             std::to_string(SmallGraph::kMaxVertices),
                         0);
    }
    const long bits = n * (n - 1) / 2;
    const std::size_t expected = pos + static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() != expected) {
        throw ParseError("graph6 length " + std::to_string(text.size()) + " does not match order " +
                             std::to_string(n) + " (expected " + std::to_string(expected) + ")",
                         std::min(text.size(), expected));
    }
    SmallGraph g(static_cast<int>(n));
    long k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int byte = text[pos + static_cast<std::size_t>(k / 6)] - 63;
            if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    }
    if (k % 6 != 0) {
        const std::size_t last = pos + static_cast<std::size_t>(k / 6);
        const int pad_mask = (1 << (6 - k % 6)) - 1;
        if ((text[last] - 63) & pad_mask) throw ParseError("nonzero graph6 padding bits", last);
    }
    return g;
}

SmallGraph parse_edge_list(std::string_view text, int order) {
    std::vector<std::pair<int, int>> pairs;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && (text[pos] == ',' || text[pos] == ' ' || text[pos] == '\t' ||
                                     text[pos] == '\n' || text[pos] == '\r'))
            ++pos;
    };
    auto number = [&]() -> int {
        const std::size_t start = pos;
        long v = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            v = v * 10 + (text[pos] - '0');
            if (v > 1'000'000) throw ParseError("vertex id too large", start);
            ++pos;
        }
        if (pos == start) throw ParseError("expected a vertex id", start);
        return static_cast<int>(v);
    };
    skip();
    while (pos < text.size()) {
        const int u = number();
        if (pos >= text.size() || text[pos] != '-') throw ParseError("expected '-'", pos);
        ++pos;
        const int v = number();
        pairs.emplace_back(u, v);
        skip();
    }
    int n = order;
    if (n < 0) {
        n = 0;
        for (auto [u, v] : pairs) n = std::max({n, u + 1, v + 1});
    }
    SmallGraph g(n);
    for (auto [u, v] : pairs) {
        if (u >= n || v >= n) throw InputError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                               " outside vertex range");
        g.add_edge(u, v);
    }
    return g;
}

std::string format_edge_list(const SmallGraph& g) {
    std::string out;
    for (auto [u, v] : g.edges()) {
        if (!out.empty()) out += ',';
        out += std::to_string(u) + '-' + std::to_string(v);
    }
    return out;
}

}  // namespace potgraph
