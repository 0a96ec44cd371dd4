#include "reports.hpp"

#include <sstream>

namespace potgraph {

using json = nlohmann::ordered_json;

namespace {

std::string pattern_name(int m) { return "K_" + std::to_string(m) + "-C_4"; }

json embedding_json(const Embedding& e) {
    json out = json::array();
    for (int v : e) out.push_back(v);
    return out;
}

ReportStatus status_of(bool ok) { return ok ? ReportStatus::pass : ReportStatus::fail; }

}  // namespace

json sequence_json(const DegreeSequence& s) {
    json out = json::array();
    for (int d : s.terms()) out.push_back(d);
    return out;
}

json sigma_json(const SigmaReport& r) {
    json out;
    out["m"] = r.m;
    out["n"] = r.n;
    out["lower_bound"] = r.lower_bound;
    out["exact"] = r.exact ? json(*r.exact) : json(nullptr);
    out["formula"] = r.conjecture_formula;
    out["verdict"] = to_string(r.verdict);
    json seqs = json::array();
    for (const auto& s : r.extremal_sequences) seqs.push_back(sequence_json(s));
    out["extremal_sequences"] = seqs;
    json wit = json::array();
    for (const auto& g : r.extremal_realizations) wit.push_back(to_graph6(g));
    out["witnesses"] = wit;
    return out;
}

json trace_step_json(const ProofStep& step) {
    json out;
    out["case"] = case_label(step.kind);
    out["sequence"] = sequence_json(step.sequence);
    out["action"] = step.action;
    out["graph6"] = step.snapshot ? json(to_graph6(*step.snapshot)) : json(nullptr);
    return out;
}

Report graphical_report(const DegreeSequence& s) {
    const bool ok = is_graphical(s);
    json j;
    j["sequence"] = sequence_json(s);
    j["sum"] = degree_sum(s);
    j["graphical"] = ok;
    return {status_of(ok), j.dump(),
            format_sequence_powers(s) + ": " + (ok ? "graphical" : "not graphical") + "\n"};
}

Report realize_report(const DegreeSequence& s) {
    json j;
    j["sequence"] = sequence_json(s);
    if (!is_graphical(s)) {
        j["graphical"] = false;
        j["graph6"] = nullptr;
        return {ReportStatus::fail, j.dump(), format_sequence_powers(s) + ": not graphical\n"};
    }
    const SmallGraph g = havel_hakimi_realize(s);
    j["graphical"] = true;
    j["graph6"] = to_graph6(g);
    j["edges"] = format_edge_list(g);
    return {ReportStatus::pass, j.dump(), to_graph6(g) + "\n"};
}

Report potential_report(const DegreeSequence& s, int m, const SearchOptions& options) {
    const TargetPattern target = km_minus_c4(m);
    json j;
    j["sequence"] = sequence_json(s);
    j["m"] = m;
    const std::string head = format_sequence_powers(s) + " vs " + pattern_name(m) + ": ";
    if (!is_graphical(s)) {
        j["graphical"] = false;
        j["verdict"] = false;
        j["exhausted"] = true;
        j["explored"] = 0;
        j["witness"] = nullptr;
        j["embedding"] = nullptr;
        return {ReportStatus::fail, j.dump(), head + "not graphical\n"};
    }
    const WitnessResult r = is_potentially(s, target, options);
    j["graphical"] = true;
    j["verdict"] = r.verdict;
    j["exhausted"] = r.exhausted;
    j["explored"] = r.explored;
    j["witness"] = r.witness ? json(to_graph6(*r.witness)) : json(nullptr);
    j["embedding"] = r.verdict ? embedding_json(r.embedding) : json(nullptr);

    std::ostringstream text;
    text << head;
    ReportStatus status;
    if (r.verdict) {
        status = ReportStatus::pass;
        text << "potentially graphic\nwitness " << to_graph6(*r.witness) << " (" << format_edge_list(*r.witness)
             << ")\n";
    } else if (r.exhausted) {
        status = ReportStatus::fail;
        text << "not potentially graphic (" << r.explored << " realization class(es) exhausted)\n";
    } else {
        status = ReportStatus::inconclusive;
        text << "inconclusive (budget reached after " << r.explored << " classes)\n";
    }
    return {status, j.dump(), text.str()};
}

Report sigma_report(int m, int n, bool exact, const SweepOptions& options) {
    const SigmaReport r = exact ? sigma_exact(m, n, options) : sigma_bound_report(m, n);
    std::ostringstream text;
    text << "sigma(" << pattern_name(m) << ", " << n << "): lower bound " << r.lower_bound;
    if (r.exact) text << ", exact " << *r.exact;
    text << ", formula " << r.conjecture_formula << ", verdict " << to_string(r.verdict) << "\n";
    for (std::size_t i = 0; i < r.extremal_sequences.size(); ++i) {
        text << "  not potential at sum " << degree_sum(r.extremal_sequences[i]) << ": "
             << format_sequence_powers(r.extremal_sequences[i]) << "  "
             << to_graph6(r.extremal_realizations[i]) << "\n";
    }
    ReportStatus status = ReportStatus::pass;
    if (exact) {
        if (r.verdict == Verdict::not_computed) {
            status = ReportStatus::inconclusive;
        } else {
            status = status_of(r.verdict == Verdict::matches);
        }
    }
    return {status, sigma_json(r).dump(), text.str()};
}

Report witness_report(int m, int n) {
    const ExtremalWitness w = extremal_witness(m, n);
    const bool contains = contains_subgraph(w.graph, km_minus_c4(m).pattern).has_value();
    json j;
    j["m"] = m;
    j["n"] = n;
    j["sequence"] = sequence_json(w.sequence);
    j["sum"] = degree_sum(w.sequence);
    j["lower_bound"] = sigma_lower_bound(m, n);
    j["graph6"] = to_graph6(w.graph);
    j["contains_pattern"] = contains;
    std::ostringstream text;
    text << to_graph6(w.graph) << "\n"
         << "K_" << m - 3 << " + empty_" << n - m + 3 << ": " << format_sequence_powers(w.sequence) << ", sum "
         << degree_sum(w.sequence) << ", lower bound " << sigma_lower_bound(m, n) << ", contains "
         << pattern_name(m) << ": " << (contains ? "yes" : "no") << "\n";
    return {status_of(!contains), j.dump(), text.str()};
}

Report theorem1_report(int m, int n_max, const SearchOptions& options) {
    if (n_max < m) throw InputError("n-max must be at least m");
    json rows = json::array();
    std::ostringstream text;
    bool pass = true;
    for (int n = m; n <= n_max; ++n) {
        const Theorem1Check c = verify_theorem1(m, n, options);
        json row;
        row["m"] = c.m;
        row["n"] = c.n;
        row["lower_bound"] = c.lower_bound;
        row["witness_sum"] = c.witness_sum;
        row["witness"] = c.witness_graph6;
        row["contains_pattern"] = c.contains_pattern;
        row["realization_classes"] = c.realization_classes;
        row["pass"] = c.pass;
        rows.push_back(row);
        pass = pass && c.pass;
        text << (c.pass ? "PASS" : "FAIL") << " m=" << m << " n=" << n << ": witness sum " << c.witness_sum
             << " = bound " << c.lower_bound << " - 2, " << c.realization_classes << " realization class(es), "
             << (c.contains_pattern ? "contains " : "no ") << pattern_name(m) << "\n";
    }
    json j;
    j["check"] = "theorem1";
    j["m"] = m;
    j["results"] = rows;
    j["pass"] = pass;
    return {status_of(pass), j.dump(), text.str()};
}

Report theorem2_report(int n_max, const SweepOptions& options) {
    const Theorem2Report r = verify_theorem2_range(n_max, options);
    json rows = json::array();
    std::ostringstream text;
    for (const Theorem2Row& row : r.rows) {
        json x;
        x["n"] = row.n;
        x["expected"] = row.expected;
        x["exact"] = row.exact ? json(*row.exact) : json(nullptr);
        x["sequences_replayed"] = row.replayed;
        x["replay_failures"] = row.replay_failures;
        x["disagreements"] = row.disagreements;
        x["fallbacks"] = row.fallbacks;
        x["pass"] = row.pass;
        rows.push_back(x);
        text << (row.pass ? "PASS" : "FAIL") << " n=" << row.n << ": sigma "
             << (row.exact ? std::to_string(*row.exact) : std::string("?")) << " (expected " << row.expected
             << "), " << row.replayed << " sequences replayed, " << row.replay_failures << " failures, "
             << row.disagreements << " disagreements, " << row.fallbacks << " fallbacks\n";
    }
    json j;
    j["check"] = "theorem2";
    j["m"] = 5;
    j["results"] = rows;
    j["pass"] = r.pass;
    return {status_of(r.pass), j.dump(), text.str()};
}

Report conjecture_report(int m, int n_first, int n_last, const SweepOptions& options) {
    const auto reports = verify_conjecture(m, n_first, n_last, options);
    json list = json::array();
    std::ostringstream text;
    bool all_match = true, any_unknown = false;
    for (const SigmaReport& r : reports) {
        list.push_back(sigma_json(r));
        all_match = all_match && r.verdict == Verdict::matches;
        any_unknown = any_unknown || r.verdict == Verdict::not_computed;
        text << "m=" << r.m << " n=" << r.n << ": exact "
             << (r.exact ? std::to_string(*r.exact) : std::string("?")) << ", formula " << r.conjecture_formula
             << " -> " << to_string(r.verdict) << "\n";
    }
    json j;
    j["check"] = "conjecture";
    j["m"] = m;
    j["reports"] = list;
    j["pass"] = all_match;
    const ReportStatus status = any_unknown ? ReportStatus::inconclusive : status_of(all_match);
    return {status, j.dump(), text.str()};
}

Report base_cases_report(int family_max, const SearchOptions& options) {
    const auto results = verify_base_cases(family_max, options);
    json rows = json::array();
    std::ostringstream text;
    bool pass = true;
    for (const BaseCaseResult& r : results) {
        json x;
        x["n"] = r.n;
        x["sequence"] = sequence_json(r.sequence);
        x["potential"] = r.potential;
        x["witness"] = r.witness ? json(to_graph6(*r.witness)) : json(nullptr);
        rows.push_back(x);
        pass = pass && r.potential;
        text << (r.potential ? "PASS " : "FAIL ") << format_sequence_powers(r.sequence) << "  "
             << (r.witness ? to_graph6(*r.witness) : std::string("-")) << "\n";
    }
    json j;
    j["check"] = "base_cases";
    j["results"] = rows;
    j["pass"] = pass;
    return {status_of(pass), j.dump(), text.str()};
}

namespace {

void render_trace(const ProofTrace& t, std::ostringstream& lines, std::ostringstream& text) {
    for (const ProofStep& step : t.steps) {
        lines << trace_step_json(step).dump() << "\n";
        text << std::string(static_cast<std::size_t>(2 * step.depth), ' ') << "[" << case_label(step.kind) << "] "
             << format_sequence_powers(step.sequence) << ": " << step.action;
        if (step.snapshot) text << "  " << to_graph6(*step.snapshot);
        text << "\n";
    }
}

}  // namespace

Report replay_report(const DegreeSequence& s, const SearchOptions& options) {
    std::ostringstream lines, text;
    try {
        const ProofTrace t = replay_theorem2(s, options);
        render_trace(t, lines, text);
        json outcome;
        outcome["case"] = "outcome";
        outcome["sequence"] = sequence_json(s);
        std::string action = "witness realizes the input; bowtie on vertices";
        for (int v : t.embedding) action += " " + std::to_string(v);
        outcome["action"] = action;
        outcome["graph6"] = to_graph6(t.witness);
        lines << outcome.dump() << "\n";
        text << "witness " << to_graph6(t.witness) << " (" << action << ")\n";
        return {ReportStatus::pass, lines.str(), text.str()};
    } catch (const ReplayError& e) {
        render_trace(e.trace(), lines, text);
        json failure;
        failure["case"] = "failure";
        failure["sequence"] = sequence_json(s);
        failure["action"] = e.what();
        failure["graph6"] = nullptr;
        lines << failure.dump() << "\n";
        text << "replay failed: " << e.what() << "\n";
        return {ReportStatus::fail, lines.str(), text.str()};
    }
}

}  // namespace potgraph
