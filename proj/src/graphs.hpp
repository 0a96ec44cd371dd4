#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sequences.hpp"

namespace potgraph {

// Simple undirected graph on at most 32 labeled vertices, one adjacency word
// per vertex.
class SmallGraph {
public:
    static constexpr int kMaxVertices = 32;

    SmallGraph() = default;
    explicit SmallGraph(int order);

    int order() const noexcept { return n_; }
    int size() const noexcept;

    bool has_edge(int u, int v) const { return (adj_[check(u)] >> check(v)) & 1u; }
    std::uint32_t neighbors(int v) const { return adj_[check(v)]; }
    int degree(int v) const;

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    // Edges as (u, v) with u < v, sorted.
    std::vector<std::pair<int, int>> edges() const;

    friend bool operator==(const SmallGraph& a, const SmallGraph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    int check(int v) const;

    int n_ = 0;
    std::array<std::uint32_t, kMaxVertices> adj_{};
};

// K_m minus the edges of a 4-cycle. Vertices 0..3 carry the two remaining
// cycle diagonals (0-2, 1-3); vertices 4..m-1 are adjacent to everything.
struct TargetPattern {
    int m = 0;
    SmallGraph pattern;
};

// Maps pattern vertex i to host vertex embedding[i].
using Embedding = std::vector<int>;

SmallGraph empty_graph(int n);
SmallGraph complete_graph(int k);
SmallGraph cycle_graph(int k);
// p pairwise disjoint edges on 2p vertices.
SmallGraph matching_graph(int p);

SmallGraph complement(const SmallGraph& g);
// Disjoint union plus every edge between the parts; g1's vertices come first.
SmallGraph join(const SmallGraph& g1, const SmallGraph& g2);
SmallGraph disjoint_union(const SmallGraph& g1, const SmallGraph& g2);

TargetPattern km_minus_c4(int m);

// Non-induced containment. Returns the first embedding found; search order is
// deterministic.
std::optional<Embedding> contains_subgraph(const SmallGraph& host, const SmallGraph& pattern);

bool is_embedding(const SmallGraph& host, const SmallGraph& pattern, const Embedding& map);

DegreeSequence degree_sequence_of(const SmallGraph& g);

// Induced subgraph on the remaining vertices, renumbered in order.
SmallGraph delete_vertex(const SmallGraph& g, int v);

// Vertex order[i] of g becomes vertex i of the result.
SmallGraph relabel(const SmallGraph& g, const std::vector<int>& order);

// Canonical labeling: order[i] is the vertex of g placed at position i.
// Minimizes the graph6 bit string over all orderings compatible with the
// color-refined degree partition.
std::vector<int> canonical_labeling(const SmallGraph& g, int vertex_limit = kDefaultVertexLimit);

// graph6 encoding of the canonically relabeled graph; equal strings iff
// isomorphic graphs.
std::string canonical_form(const SmallGraph& g, int vertex_limit = kDefaultVertexLimit);

std::string to_graph6(const SmallGraph& g);
SmallGraph from_graph6(std::string_view text);

// "0-1,1-2 2-3": pairs separated by commas and/or whitespace. When order is
// negative the vertex count is one more than the largest id seen.
SmallGraph parse_edge_list(std::string_view text, int order = -1);
std::string format_edge_list(const SmallGraph& g);

}  // namespace potgraph
