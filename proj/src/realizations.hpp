#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "graphs.hpp"
#include "sequences.hpp"

namespace potgraph {

struct SearchOptions {
    int vertex_limit = kDefaultVertexLimit;
    // Maximum number of isomorphism classes to visit; unset means unbounded.
    std::optional<long long> budget;
    // 0 keeps the lexicographic switch order; any other value shuffles it.
    std::uint64_t seed = 0;
};

struct ExploreStats {
    long long explored = 0;
    // True iff every realization class was visited.
    bool exhausted = false;
};

struct WitnessResult {
    bool verdict = false;
    std::optional<SmallGraph> witness;
    Embedding embedding;
    long long explored = 0;
    bool exhausted = false;
};

// Greedy layoff: the vertex with the largest residual degree (lowest index on
// ties) is joined to the next-largest residual vertices. Vertex i of the
// result has degree s[i]. Throws ContractError on non-graphical input.
SmallGraph havel_hakimi_realize(const DegreeSequence& s);

// Replaces edges ab, cd by ac, bd.
SmallGraph two_switch(const SmallGraph& g, int a, int b, int c, int d);

// Breadth-first closure of the Havel–Hakimi realization under 2-switches,
// one representative per isomorphism class. visit returns false to stop
// early (the stats then report exhausted = false).
ExploreStats explore_realizations(const DegreeSequence& s, const SearchOptions& options,
                                  const std::function<bool(const SmallGraph&)>& visit);

// All classes. Throws ResourceError carrying the partial count when the
// budget is hit.
std::vector<SmallGraph> enumerate_realizations(const DegreeSequence& s,
                                               const SearchOptions& options = {});

// Necessary condition for some realization of s to contain the pattern: the
// i-th largest term dominates the pattern's i-th largest degree and there are
// enough edges.
bool degrees_admit(const DegreeSequence& s, const SmallGraph& pattern);

WitnessResult is_potentially(const DegreeSequence& s, const TargetPattern& target,
                             const SearchOptions& options = {});

struct InterchangeVertices {
    int v1, v2, v3, v4, y1, y2, y3;
};

// Removes y1y3, v1v4, v2y2 and inserts y1v2, y3v1, y2v4. Requires
// {v1..v4} to induce a K_4; the result contains K_5 - C_4 on
// {v1, v2, v3, v4, y1}.
SmallGraph theorem2_interchange(const SmallGraph& g, const InterchangeVertices& v);

}  // namespace potgraph
