#pragma once

#include <string>

#include <json.hpp>

#include "extremal.hpp"
#include "proof_replay.hpp"

namespace potgraph {

enum class ReportStatus { pass, fail, inconclusive };

// Rendered outcome of one front-end command. json holds a single JSON
// document, except for traces, which are JSON lines.
struct Report {
    ReportStatus status = ReportStatus::fail;
    std::string json;
    std::string text;
};

nlohmann::ordered_json sequence_json(const DegreeSequence& s);
nlohmann::ordered_json sigma_json(const SigmaReport& r);
nlohmann::ordered_json trace_step_json(const ProofStep& step);

Report graphical_report(const DegreeSequence& s);
Report realize_report(const DegreeSequence& s);
Report potential_report(const DegreeSequence& s, int m, const SearchOptions& options);
Report sigma_report(int m, int n, bool exact, const SweepOptions& options);
Report witness_report(int m, int n);
Report theorem1_report(int m, int n_max, const SearchOptions& options);
Report theorem2_report(int n_max, const SweepOptions& options);
Report conjecture_report(int m, int n_first, int n_last, const SweepOptions& options);
Report base_cases_report(int family_max, const SearchOptions& options);
Report replay_report(const DegreeSequence& s, const SearchOptions& options);

}  // namespace potgraph
