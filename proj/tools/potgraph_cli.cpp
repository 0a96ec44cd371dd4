// Command-line front end. Talks to the library only through the C API.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "potgraph/potgraph.h"

namespace {

enum ExitCode { kPass = 0, kFail = 1, kInputError = 2, kInconclusive = 3 };

struct Options {
    bool json = false;
    std::string format = "text";
    int vertex_limit = 12;
    long long budget = -1;
    int jobs = 1;
    unsigned long long seed = 0;
    bool quiet = false;

    std::string sequence;
    int m = 0;
    int n = 0;
    int n_min = 0;
    int n_max = 0;
    bool exact = false;
    bool bound = false;
    std::string target;
};

struct ConfigDeleter {
    void operator()(potgraph_config* c) const { potgraph_config_free(c); }
};
struct SequenceDeleter {
    void operator()(potgraph_sequence* s) const { potgraph_sequence_free(s); }
};
struct ReportDeleter {
    void operator()(potgraph_report* r) const { potgraph_report_free(r); }
};

using ConfigPtr = std::unique_ptr<potgraph_config, ConfigDeleter>;
using SequencePtr = std::unique_ptr<potgraph_sequence, SequenceDeleter>;
using ReportPtr = std::unique_ptr<potgraph_report, ReportDeleter>;

int report_error(potgraph_status status) {
    std::cerr << "error: " << potgraph_status_name(status) << ": " << potgraph_last_error() << "\n";
    return status == POTGRAPH_RESOURCE_ERROR ? kInconclusive : kInputError;
}

void progress_to_stderr(const char* line, void*) { std::fprintf(stderr, "%s\n", line); }

int emit(potgraph_status status, potgraph_report* raw, bool json) {
    ReportPtr report(raw);
    if (status != POTGRAPH_OK) return report_error(status);
    std::string body = json ? potgraph_report_json(report.get()) : potgraph_report_text(report.get());
    if (body.empty() || body.back() != '\n') body += '\n';
    std::cout << body << std::flush;
    switch (potgraph_report_verdict(report.get())) {
        case POTGRAPH_VERDICT_PASS: return kPass;
        case POTGRAPH_VERDICT_FAIL: return kFail;
        case POTGRAPH_VERDICT_INCONCLUSIVE: return kInconclusive;
    }
    return kFail;
}

std::optional<int> env_vertex_limit() {
    const char* raw = std::getenv("POTGRAPH_VERTEX_LIMIT");
    if (!raw || !*raw) return std::nullopt;
    char* end = nullptr;
    const long v = std::strtol(raw, &end, 10);
    if (*end != '\0') return -1;
    return static_cast<int>(v);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Potentially K_m-C_4-graphic degree sequences: decisions, thresholds and verifications"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    if (auto env = env_vertex_limit()) o.vertex_limit = *env;

    app.add_flag("--json", o.json, "Shorthand for --format json");
    app.add_option("--format", o.format, "Output mode")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--vertex-limit", o.vertex_limit, "Largest n handled (env POTGRAPH_VERTEX_LIMIT)");
    app.add_option("--budget", o.budget, "Max realization classes explored per decision (default: unbounded)");
    app.add_option("-j,--jobs", o.jobs, "Worker threads for sweeps")->check(CLI::PositiveNumber);
    app.add_option("--seed", o.seed, "Seed for randomized switch order (0 = lexicographic)");
    app.add_flag("-q,--quiet", o.quiet, "Suppress progress on stderr");

    auto* graphical = app.add_subcommand("graphical", "Erdős–Gallai test");
    graphical->add_option("SEQ", o.sequence, "Degree sequence, e.g. 5,3,3,3,3,3 or 5^1,3^5")->required();

    auto* realize = app.add_subcommand("realize", "Havel–Hakimi realization as graph6");
    realize->add_option("SEQ", o.sequence, "Degree sequence")->required();

    auto* potential = app.add_subcommand("potential", "Decide whether SEQ is potentially K_m-C_4-graphic");
    potential->add_option("SEQ", o.sequence, "Degree sequence")->required();
    potential->add_option("--m", o.m, "Pattern size m >= 4")->required();

    auto* sigma = app.add_subcommand("sigma", "Threshold sigma(K_m-C_4, n)");
    sigma->add_option("--m", o.m, "Pattern size")->required();
    sigma->add_option("--n", o.n, "Sequence length")->required();
    auto* exact_flag = sigma->add_flag("--exact", o.exact, "Compute the exact value (default)");
    sigma->add_flag("--bound", o.bound, "Only the lower bound")->excludes(exact_flag);

    auto* witness = app.add_subcommand("witness", "Extremal witness graph K_{m-3} + empty_{n-m+3}");
    witness->add_option("--m", o.m, "Pattern size")->required();
    witness->add_option("--n", o.n, "Order")->required();

    auto* verify = app.add_subcommand("verify", "Run a verification sweep");
    verify->add_option("TARGET", o.target, "theorem1 | theorem2 | conjecture | base-cases")
        ->required()
        ->check(CLI::IsMember({"theorem1", "theorem2", "conjecture", "base-cases"}));
    verify->add_option("--m", o.m, "Pattern size (theorem2 requires 5)");
    verify->add_option("--n-max", o.n_max, "Largest n")->required();
    verify->add_option("--n-min", o.n_min, "Smallest n for conjecture (default m)");

    auto* replay = app.add_subcommand("replay", "Constructive K_5-C_4 replay with a step trace");
    replay->add_option("SEQ", o.sequence, "Degree sequence")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    const bool json = o.json || o.format == "json";
    ConfigPtr cfg(potgraph_config_new());
    if (!cfg) return report_error(POTGRAPH_RESOURCE_ERROR);
    if (auto s = potgraph_config_set_vertex_limit(cfg.get(), o.vertex_limit); s != POTGRAPH_OK) return report_error(s);
    potgraph_config_set_budget(cfg.get(), o.budget);
    potgraph_config_set_parallelism(cfg.get(), o.jobs);
    potgraph_config_set_seed(cfg.get(), o.seed);
    if (!o.quiet) potgraph_config_set_progress(cfg.get(), progress_to_stderr, nullptr);

    SequencePtr seq;
    if (!o.sequence.empty()) {
        potgraph_sequence* raw = nullptr;
        if (auto s = potgraph_sequence_parse(o.sequence.c_str(), &raw); s != POTGRAPH_OK) return report_error(s);
        seq.reset(raw);
    }

    potgraph_report* report = nullptr;
    potgraph_status status = POTGRAPH_OK;
    if (*graphical) {
        status = potgraph_query_graphical(seq.get(), &report);
    } else if (*realize) {
        status = potgraph_query_realize(seq.get(), &report);
    } else if (*potential) {
        status = potgraph_query_potential(cfg.get(), seq.get(), o.m, &report);
    } else if (*sigma) {
        status = potgraph_query_sigma(cfg.get(), o.m, o.n, o.bound ? 0 : 1, &report);
    } else if (*witness) {
        status = potgraph_query_witness(cfg.get(), o.m, o.n, &report);
    } else if (*verify) {
        if (o.target == "theorem1") {
            if (verify->count("--m") == 0) {
                std::cerr << "error: verify theorem1 needs --m\n";
                return kInputError;
            }
            status = potgraph_verify_theorem1(cfg.get(), o.m, o.n_max, &report);
        } else if (o.target == "theorem2") {
            if (verify->count("--m") != 0 && o.m != 5) {
                std::cerr << "error: the constructive replay covers m = 5 only\n";
                return kInputError;
            }
            status = potgraph_verify_theorem2(cfg.get(), o.n_max, &report);
        } else if (o.target == "conjecture") {
            if (verify->count("--m") == 0) {
                std::cerr << "error: verify conjecture needs --m\n";
                return kInputError;
            }
            const int first = verify->count("--n-min") ? o.n_min : o.m;
            status = potgraph_verify_conjecture(cfg.get(), o.m, first, o.n_max, &report);
        } else {
            status = potgraph_verify_base_cases(cfg.get(), o.n_max, &report);
        }
    } else if (*replay) {
        status = potgraph_replay(cfg.get(), seq.get(), &report);
    }
    return emit(status, report, json);
}
