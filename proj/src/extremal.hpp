#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "graphs.hpp"
#include "realizations.hpp"
#include "sequences.hpp"

namespace potgraph {

struct SweepOptions {
    SearchOptions search;
    int parallelism = 1;
    // Receives one line per finished level; never used for results.
    std::function<void(const std::string&)> progress;
};

// (2m - 6)n - (m - 3)(m - 2) + 2, for n >= m >= 4.
long long sigma_lower_bound(int m, int n);

// K_{m-3} joined with an independent set of n - m + 3 vertices: the unique
// realization of ((n-1)^{m-3}, (m-3)^{n-m+3}), which has no K_m - C_4.
struct ExtremalWitness {
    SmallGraph graph;
    DegreeSequence sequence;
};

ExtremalWitness extremal_witness(int m, int n);

struct Theorem1Check {
    int m = 0;
    int n = 0;
    long long lower_bound = 0;
    long long witness_sum = 0;
    std::string witness_graph6;
    bool contains_pattern = true;
    long long realization_classes = 0;
    bool pass = false;
};

Theorem1Check verify_theorem1(int m, int n, const SearchOptions& options = {});

enum class Verdict { matches, exceeds, below, not_computed };

const char* to_string(Verdict v);

struct SigmaReport {
    int m = 0;
    int n = 0;
    long long lower_bound = 0;
    std::optional<long long> exact;
    // Non-potential sequences at the largest failing degree sum.
    std::vector<DegreeSequence> extremal_sequences;
    // One realization per extremal sequence, in the same order.
    std::vector<SmallGraph> extremal_realizations;
    long long conjecture_formula = 0;
    Verdict verdict = Verdict::not_computed;
    long long sequences_checked = 0;
};

// Lower bound only; exact stays empty.
SigmaReport sigma_bound_report(int m, int n);

// Scans degree-sum levels downward from n(n-1) until a level holds a
// sequence that is not potentially K_m - C_4-graphic; exact is that level
// plus two. A search cut short by the budget yields not_computed.
SigmaReport sigma_exact(int m, int n, const SweepOptions& options = {});

std::vector<SigmaReport> verify_conjecture(int m, int n_first, int n_last,
                                           const SweepOptions& options = {});

// Runs body(i) for i in [0, count) on up to `workers` threads. The first
// exception thrown by any body is rethrown.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& body);

}  // namespace potgraph
