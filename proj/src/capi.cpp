#include "potgraph/potgraph.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "errors.hpp"
#include "reports.hpp"

struct potgraph_config {
    potgraph::SweepOptions sweep;
    potgraph_progress_fn progress_fn = nullptr;
    void* progress_user = nullptr;
};

struct potgraph_sequence {
    potgraph::DegreeSequence value;
};

struct potgraph_graph {
    potgraph::SmallGraph value;
};

struct potgraph_report {
    potgraph::Report value;
};

namespace {

thread_local std::string last_error;

potgraph_status fail(potgraph_status status, const char* what) {
    last_error = what;
    return status;
}

template <class F>
potgraph_status guarded(F&& body) {
    try {
        body();
        last_error.clear();
        return POTGRAPH_OK;
    } catch (const potgraph::ParseError& e) {
        return fail(POTGRAPH_PARSE_ERROR, e.what());
    } catch (const potgraph::InputError& e) {
        return fail(POTGRAPH_INPUT_ERROR, e.what());
    } catch (const potgraph::ContractError& e) {
        return fail(POTGRAPH_CONTRACT_ERROR, e.what());
    } catch (const potgraph::ResourceError& e) {
        return fail(POTGRAPH_RESOURCE_ERROR, e.what());
    } catch (const std::bad_alloc&) {
        return fail(POTGRAPH_RESOURCE_ERROR, "out of memory");
    } catch (const std::exception& e) {
        return fail(POTGRAPH_INTERNAL_ERROR, e.what());
    } catch (...) {
        return fail(POTGRAPH_INTERNAL_ERROR, "unknown error");
    }
}

char* duplicate(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

potgraph::SweepOptions sweep_of(const potgraph_config* cfg) {
    static const potgraph_config defaults;
    return (cfg ? cfg : &defaults)->sweep;
}

template <class F>
potgraph_status make_report(potgraph_report** out, F&& build) {
    if (!out) return fail(POTGRAPH_INPUT_ERROR, "null output pointer");
    *out = nullptr;
    return guarded([&] { *out = new potgraph_report{build()}; });
}

#define POTGRAPH_REQUIRE(cond, msg) \
    if (!(cond)) return fail(POTGRAPH_INPUT_ERROR, msg)

}  // namespace

extern "C" {

const char* potgraph_version(void) { return "1.0.0"; }

const char* potgraph_last_error(void) { return last_error.c_str(); }

const char* potgraph_status_name(potgraph_status status) {
    switch (status) {
        case POTGRAPH_OK: return "ok";
        case POTGRAPH_INPUT_ERROR: return "input error";
        case POTGRAPH_PARSE_ERROR: return "parse error";
        case POTGRAPH_CONTRACT_ERROR: return "contract error";
        case POTGRAPH_RESOURCE_ERROR: return "resource limit";
        case POTGRAPH_INTERNAL_ERROR: return "internal error";
    }
    return "unknown";
}

void potgraph_string_free(char* s) { std::free(s); }

potgraph_config* potgraph_config_new(void) { return new (std::nothrow) potgraph_config(); }

void potgraph_config_free(potgraph_config* cfg) { delete cfg; }

potgraph_status potgraph_config_set_vertex_limit(potgraph_config* cfg, int limit) {
    POTGRAPH_REQUIRE(cfg, "null config");
    POTGRAPH_REQUIRE(limit >= 1 && limit <= potgraph::SmallGraph::kMaxVertices, "vertex limit must be in [1, 32]");
    cfg->sweep.search.vertex_limit = limit;
    return POTGRAPH_OK;
}

int potgraph_config_vertex_limit(const potgraph_config* cfg) {
    return cfg ? cfg->sweep.search.vertex_limit : potgraph::kDefaultVertexLimit;
}

potgraph_status potgraph_config_set_budget(potgraph_config* cfg, long long budget) {
    POTGRAPH_REQUIRE(cfg, "null config");
    if (budget < 0) {
        cfg->sweep.search.budget.reset();
    } else {
        cfg->sweep.search.budget = budget;
    }
    return POTGRAPH_OK;
}

potgraph_status potgraph_config_set_parallelism(potgraph_config* cfg, int workers) {
    POTGRAPH_REQUIRE(cfg, "null config");
    POTGRAPH_REQUIRE(workers >= 1, "parallelism must be at least 1");
    cfg->sweep.parallelism = workers;
    return POTGRAPH_OK;
}

potgraph_status potgraph_config_set_seed(potgraph_config* cfg, unsigned long long seed) {
    POTGRAPH_REQUIRE(cfg, "null config");
    cfg->sweep.search.seed = seed;
    return POTGRAPH_OK;
}

potgraph_status potgraph_config_set_progress(potgraph_config* cfg, potgraph_progress_fn fn, void* user) {
    POTGRAPH_REQUIRE(cfg, "null config");
    cfg->progress_fn = fn;
    cfg->progress_user = user;
    if (fn) {
        cfg->sweep.progress = [fn, user](const std::string& line) { fn(line.c_str(), user); };
    } else {
        cfg->sweep.progress = nullptr;
    }
    return POTGRAPH_OK;
}

potgraph_status potgraph_sequence_parse(const char* text, potgraph_sequence** out) {
    POTGRAPH_REQUIRE(text && out, "null argument");
    *out = nullptr;
    return guarded([&] { *out = new potgraph_sequence{potgraph::parse_sequence(text)}; });
}

potgraph_status potgraph_sequence_from_array(const int* values, size_t count, potgraph_sequence** out) {
    POTGRAPH_REQUIRE(out && (values || count == 0), "null argument");
    *out = nullptr;
    return guarded([&] {
        *out = new potgraph_sequence{potgraph::make_sequence(std::span<const int>(values, count))};
    });
}

void potgraph_sequence_free(potgraph_sequence* seq) { delete seq; }

size_t potgraph_sequence_length(const potgraph_sequence* seq) { return seq ? seq->value.size() : 0; }

int potgraph_sequence_term(const potgraph_sequence* seq, size_t index) {
    if (!seq || index >= seq->value.size()) return -1;
    return seq->value[index];
}

long long potgraph_sequence_sum(const potgraph_sequence* seq) {
    return seq ? potgraph::degree_sum(seq->value) : 0;
}

int potgraph_sequence_is_graphical(const potgraph_sequence* seq) {
    return seq && potgraph::is_graphical(seq->value) ? 1 : 0;
}

potgraph_status potgraph_sequence_format(const potgraph_sequence* seq, int powers, char** out) {
    POTGRAPH_REQUIRE(seq && out, "null argument");
    return guarded([&] {
        *out = duplicate(powers ? potgraph::format_sequence_powers(seq->value)
                                : potgraph::format_sequence(seq->value));
    });
}

potgraph_status potgraph_graph_from_graph6(const char* text, potgraph_graph** out) {
    POTGRAPH_REQUIRE(text && out, "null argument");
    *out = nullptr;
    return guarded([&] { *out = new potgraph_graph{potgraph::from_graph6(text)}; });
}

potgraph_status potgraph_graph_from_edge_list(const char* text, int order, potgraph_graph** out) {
    POTGRAPH_REQUIRE(text && out, "null argument");
    *out = nullptr;
    return guarded([&] { *out = new potgraph_graph{potgraph::parse_edge_list(text, order)}; });
}

void potgraph_graph_free(potgraph_graph* g) { delete g; }

int potgraph_graph_order(const potgraph_graph* g) { return g ? g->value.order() : 0; }

int potgraph_graph_size(const potgraph_graph* g) { return g ? g->value.size() : 0; }

int potgraph_graph_has_edge(const potgraph_graph* g, int u, int v) {
    if (!g || u < 0 || v < 0 || u >= g->value.order() || v >= g->value.order()) return 0;
    return g->value.has_edge(u, v) ? 1 : 0;
}

potgraph_status potgraph_graph_to_graph6(const potgraph_graph* g, char** out) {
    POTGRAPH_REQUIRE(g && out, "null argument");
    return guarded([&] { *out = duplicate(potgraph::to_graph6(g->value)); });
}

potgraph_status potgraph_graph_degree_sequence(const potgraph_graph* g, potgraph_sequence** out) {
    POTGRAPH_REQUIRE(g && out, "null argument");
    *out = nullptr;
    return guarded([&] { *out = new potgraph_sequence{potgraph::degree_sequence_of(g->value)}; });
}

potgraph_status potgraph_graph_contains_pattern(const potgraph_graph* g, int m, int* out) {
    POTGRAPH_REQUIRE(g && out, "null argument");
    return guarded([&] {
        *out = potgraph::contains_subgraph(g->value, potgraph::km_minus_c4(m).pattern) ? 1 : 0;
    });
}

potgraph_status potgraph_realize(const potgraph_sequence* seq, potgraph_graph** out) {
    POTGRAPH_REQUIRE(seq && out, "null argument");
    *out = nullptr;
    return guarded([&] { *out = new potgraph_graph{potgraph::havel_hakimi_realize(seq->value)}; });
}

potgraph_status potgraph_query_graphical(const potgraph_sequence* seq, potgraph_report** out) {
    POTGRAPH_REQUIRE(seq, "null sequence");
    return make_report(out, [&] { return potgraph::graphical_report(seq->value); });
}

potgraph_status potgraph_query_realize(const potgraph_sequence* seq, potgraph_report** out) {
    POTGRAPH_REQUIRE(seq, "null sequence");
    return make_report(out, [&] { return potgraph::realize_report(seq->value); });
}

potgraph_status potgraph_query_potential(const potgraph_config* cfg, const potgraph_sequence* seq, int m,
                                         potgraph_report** out) {
    POTGRAPH_REQUIRE(seq, "null sequence");
    return make_report(out, [&] { return potgraph::potential_report(seq->value, m, sweep_of(cfg).search); });
}

potgraph_status potgraph_query_sigma(const potgraph_config* cfg, int m, int n, int exact, potgraph_report** out) {
    return make_report(out, [&] { return potgraph::sigma_report(m, n, exact != 0, sweep_of(cfg)); });
}

potgraph_status potgraph_query_witness(const potgraph_config*, int m, int n, potgraph_report** out) {
    return make_report(out, [&] { return potgraph::witness_report(m, n); });
}

potgraph_status potgraph_verify_theorem1(const potgraph_config* cfg, int m, int n_max, potgraph_report** out) {
    return make_report(out, [&] { return potgraph::theorem1_report(m, n_max, sweep_of(cfg).search); });
}

potgraph_status potgraph_verify_theorem2(const potgraph_config* cfg, int n_max, potgraph_report** out) {
    return make_report(out, [&] { return potgraph::theorem2_report(n_max, sweep_of(cfg)); });
}

potgraph_status potgraph_verify_conjecture(const potgraph_config* cfg, int m, int n_first, int n_last,
                                           potgraph_report** out) {
    return make_report(out, [&] { return potgraph::conjecture_report(m, n_first, n_last, sweep_of(cfg)); });
}

potgraph_status potgraph_verify_base_cases(const potgraph_config* cfg, int family_max, potgraph_report** out) {
    return make_report(out, [&] { return potgraph::base_cases_report(family_max, sweep_of(cfg).search); });
}

potgraph_status potgraph_replay(const potgraph_config* cfg, const potgraph_sequence* seq, potgraph_report** out) {
    POTGRAPH_REQUIRE(seq, "null sequence");
    return make_report(out, [&] { return potgraph::replay_report(seq->value, sweep_of(cfg).search); });
}

void potgraph_report_free(potgraph_report* report) { delete report; }

potgraph_verdict potgraph_report_verdict(const potgraph_report* report) {
    if (!report) return POTGRAPH_VERDICT_FAIL;
    switch (report->value.status) {
        case potgraph::ReportStatus::pass: return POTGRAPH_VERDICT_PASS;
        case potgraph::ReportStatus::fail: return POTGRAPH_VERDICT_FAIL;
        case potgraph::ReportStatus::inconclusive: return POTGRAPH_VERDICT_INCONCLUSIVE;
    }
    return POTGRAPH_VERDICT_FAIL;
}

const char* potgraph_report_json(const potgraph_report* report) {
    return report ? report->value.json.c_str() : "";
}

const char* potgraph_report_text(const potgraph_report* report) {
    return report ? report->value.text.c_str() : "";
}

}  // extern "C"
