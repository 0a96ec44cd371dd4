#pragma once

#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "extremal.hpp"
#include "graphs.hpp"
#include "realizations.hpp"
#include "sequences.hpp"

namespace potgraph {

// Constructive replay of the K_5 - C_4 induction: every n-term graphical
// sequence with degree sum at least 4n - 4 has a realization containing the
// bowtie, built step by step.

enum class ProofCase {
    edge_count,        // n = 5, at least 8 edges
    deletion,          // drop a minimum-degree vertex and recurse
    exceptional,       // one of the fixed n = 6, 7 sequences
    high_degree_pair,  // ((n-1)^1, 3^{n-1}), the d(v2) = 3 case
    interchange,       // three-edge exchange around a K_4
    direct_adjacency,  // the K_4 neighbourhood already holds the bowtie
    fallback,          // none of the above applied; exhaustive search used
};

const char* case_label(ProofCase c);

struct ProofStep {
    ProofCase kind;
    DegreeSequence sequence;
    std::string action;
    std::optional<SmallGraph> snapshot;
    int depth = 0;
};

struct ProofTrace {
    DegreeSequence input;
    std::vector<ProofStep> steps;
    SmallGraph witness;
    Embedding embedding;  // bowtie -> witness
    int deletions = 0;
    bool used_fallback = false;
};

class ReplayError : public Error {
public:
    ReplayError(const std::string& what, ProofTrace trace) : Error(what), trace_(std::move(trace)) {}
    const ProofTrace& trace() const noexcept { return trace_; }

private:
    ProofTrace trace_;
};

struct BaseCase {
    int n;
    DegreeSequence sequence;
};

// ((n-1)^1, 3^{n-1})
DegreeSequence high_degree_pair_sequence(int n);

// The six fixed sequences for n = 6, 7, followed by the high-degree-pair
// family at family_n when given.
std::vector<BaseCase> base_case_sequences(std::optional<int> family_n = std::nullopt);

struct BaseCaseResult {
    int n = 0;
    DegreeSequence sequence;
    bool potential = false;
    std::optional<SmallGraph> witness;
    Embedding embedding;
};

// Fixed cases plus the family for every n in [6, family_max], without repeats.
std::vector<BaseCaseResult> verify_base_cases(int family_max = 8, const SearchOptions& options = {});

// Throws InputError when the preconditions fail (not graphical, n < 5, or
// degree sum below 4n - 4) and ReplayError when no case of the argument
// produces a witness.
ProofTrace replay_theorem2(const DegreeSequence& s, const SearchOptions& options = {});

struct Theorem2Row {
    int n = 0;
    long long expected = 0;
    std::optional<long long> exact;
    long long replayed = 0;
    long long replay_failures = 0;
    long long disagreements = 0;
    long long fallbacks = 0;
    bool pass = false;
};

struct Theorem2Report {
    std::vector<Theorem2Row> rows;
    bool pass = false;
};

Theorem2Report verify_theorem2_range(int n_max, const SweepOptions& options = {});

}  // namespace potgraph
