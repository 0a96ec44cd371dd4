#include <doctest.h>

#include <json.hpp>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "potgraph/potgraph.h"

namespace {

using json = nlohmann::json;

struct ConfigDeleter {
    void operator()(potgraph_config* c) const { potgraph_config_free(c); }
};
struct SequenceDeleter {
    void operator()(potgraph_sequence* s) const { potgraph_sequence_free(s); }
};
struct GraphDeleter {
    void operator()(potgraph_graph* g) const { potgraph_graph_free(g); }
};
struct ReportDeleter {
    void operator()(potgraph_report* r) const { potgraph_report_free(r); }
};

using Config = std::unique_ptr<potgraph_config, ConfigDeleter>;
using Sequence = std::unique_ptr<potgraph_sequence, SequenceDeleter>;
using Graph = std::unique_ptr<potgraph_graph, GraphDeleter>;
using Report = std::unique_ptr<potgraph_report, ReportDeleter>;

Sequence parse(const char* text) {
    potgraph_sequence* raw = nullptr;
    REQUIRE(potgraph_sequence_parse(text, &raw) == POTGRAPH_OK);
    return Sequence(raw);
}

std::string take(char* s) {
    std::string out = s ? s : "";
    potgraph_string_free(s);
    return out;
}

json report_json(const potgraph_report* r) { return json::parse(potgraph_report_json(r)); }

}  // namespace

TEST_CASE("version and status names") {
    CHECK(std::string(potgraph_version()).size() > 0);
    CHECK(std::string(potgraph_status_name(POTGRAPH_OK)) == "ok");
    CHECK(std::string(potgraph_status_name(POTGRAPH_PARSE_ERROR)) == "parse error");
}

TEST_CASE("config") {
    Config cfg(potgraph_config_new());
    REQUIRE(cfg);
    CHECK(potgraph_config_vertex_limit(cfg.get()) == 12);
    CHECK(potgraph_config_set_vertex_limit(cfg.get(), 10) == POTGRAPH_OK);
    CHECK(potgraph_config_vertex_limit(cfg.get()) == 10);
    CHECK(potgraph_config_set_vertex_limit(cfg.get(), 0) == POTGRAPH_INPUT_ERROR);
    CHECK(potgraph_config_set_vertex_limit(cfg.get(), 33) == POTGRAPH_INPUT_ERROR);
    CHECK(std::string(potgraph_last_error()).size() > 0);
    CHECK(potgraph_config_set_budget(cfg.get(), -1) == POTGRAPH_OK);
    CHECK(potgraph_config_set_parallelism(cfg.get(), 0) == POTGRAPH_INPUT_ERROR);
    CHECK(potgraph_config_set_parallelism(cfg.get(), 3) == POTGRAPH_OK);
    CHECK(potgraph_config_set_seed(cfg.get(), 5) == POTGRAPH_OK);
    CHECK(potgraph_config_set_progress(cfg.get(), nullptr, nullptr) == POTGRAPH_OK);
    CHECK(potgraph_config_set_budget(nullptr, 1) == POTGRAPH_INPUT_ERROR);
    potgraph_config_free(nullptr);
}

TEST_CASE("sequences") {
    Sequence s = parse("3,5,3,3,3,3");
    CHECK(potgraph_sequence_length(s.get()) == 6);
    CHECK(potgraph_sequence_term(s.get(), 0) == 5);
    CHECK(potgraph_sequence_term(s.get(), 6) == -1);
    CHECK(potgraph_sequence_sum(s.get()) == 20);
    CHECK(potgraph_sequence_is_graphical(s.get()) == 1);
    char* text = nullptr;
    REQUIRE(potgraph_sequence_format(s.get(), 1, &text) == POTGRAPH_OK);
    CHECK(take(text) == "5^1,3^5");
    REQUIRE(potgraph_sequence_format(s.get(), 0, &text) == POTGRAPH_OK);
    CHECK(take(text) == "5,3,3,3,3,3");

    potgraph_sequence* raw = nullptr;
    CHECK(potgraph_sequence_parse("5,,3", &raw) == POTGRAPH_PARSE_ERROR);
    CHECK(raw == nullptr);
    CHECK(std::string(potgraph_last_error()).find("byte") != std::string::npos);
    CHECK(potgraph_sequence_parse("2,-1", &raw) == POTGRAPH_INPUT_ERROR);
    CHECK(potgraph_sequence_parse(nullptr, &raw) == POTGRAPH_INPUT_ERROR);

    const int values[] = {1, 3, 3, 1};
    REQUIRE(potgraph_sequence_from_array(values, 4, &raw) == POTGRAPH_OK);
    Sequence arr(raw);
    CHECK(potgraph_sequence_is_graphical(arr.get()) == 0);
    CHECK(potgraph_sequence_term(arr.get(), 0) == 3);
}

TEST_CASE("graphs") {
    potgraph_graph* raw = nullptr;
    REQUIRE(potgraph_graph_from_graph6("C~", &raw) == POTGRAPH_OK);
    Graph k4(raw);
    CHECK(potgraph_graph_order(k4.get()) == 4);
    CHECK(potgraph_graph_size(k4.get()) == 6);
    CHECK(potgraph_graph_has_edge(k4.get(), 0, 3) == 1);
    int contains = -1;
    REQUIRE(potgraph_graph_contains_pattern(k4.get(), 4, &contains) == POTGRAPH_OK);
    CHECK(contains == 1);
    REQUIRE(potgraph_graph_contains_pattern(k4.get(), 5, &contains) == POTGRAPH_OK);
    CHECK(contains == 0);
    CHECK(potgraph_graph_contains_pattern(k4.get(), 3, &contains) == POTGRAPH_INPUT_ERROR);

    REQUIRE(potgraph_graph_from_edge_list("0-1,1-2,2-0,0-3,3-4,4-0", -1, &raw) == POTGRAPH_OK);
    Graph bowtie(raw);
    REQUIRE(potgraph_graph_contains_pattern(bowtie.get(), 5, &contains) == POTGRAPH_OK);
    CHECK(contains == 1);
    potgraph_sequence* seq = nullptr;
    REQUIRE(potgraph_graph_degree_sequence(bowtie.get(), &seq) == POTGRAPH_OK);
    Sequence degrees(seq);
    CHECK(potgraph_sequence_term(degrees.get(), 0) == 4);
    char* g6 = nullptr;
    REQUIRE(potgraph_graph_to_graph6(bowtie.get(), &g6) == POTGRAPH_OK);
    const std::string text = take(g6);
    REQUIRE(potgraph_graph_from_graph6(text.c_str(), &raw) == POTGRAPH_OK);
    Graph again(raw);
    CHECK(potgraph_graph_size(again.get()) == 6);

    CHECK(potgraph_graph_from_graph6("C~~", &raw) == POTGRAPH_PARSE_ERROR);
    CHECK(potgraph_graph_from_edge_list("0-", -1, &raw) == POTGRAPH_PARSE_ERROR);
    CHECK(potgraph_graph_from_edge_list("0-0", -1, &raw) == POTGRAPH_INPUT_ERROR);

    Sequence bad = parse("3,3,1,1");
    CHECK(potgraph_realize(bad.get(), &raw) == POTGRAPH_CONTRACT_ERROR);
    Sequence good = parse("3,3,2,2,2");
    REQUIRE(potgraph_realize(good.get(), &raw) == POTGRAPH_OK);
    Graph realized(raw);
    CHECK(potgraph_graph_size(realized.get()) == 6);
}

TEST_CASE("graphical and realize reports") {
    potgraph_report* raw = nullptr;
    Sequence s = parse("3,3,1,1");
    REQUIRE(potgraph_query_graphical(s.get(), &raw) == POTGRAPH_OK);
    Report r(raw);
    CHECK(potgraph_report_verdict(r.get()) == POTGRAPH_VERDICT_FAIL);
    const json j = report_json(r.get());
    CHECK(j["graphical"] == false);
    CHECK(j["sum"] == 8);

    Sequence t = parse("5^1,3^5");
    REQUIRE(potgraph_query_realize(t.get(), &raw) == POTGRAPH_OK);
    Report real(raw);
    CHECK(potgraph_report_verdict(real.get()) == POTGRAPH_VERDICT_PASS);
    const json rj = report_json(real.get());
    REQUIRE(rj["graph6"].is_string());
    potgraph_graph* g = nullptr;
    REQUIRE(potgraph_graph_from_graph6(rj["graph6"].get<std::string>().c_str(), &g) == POTGRAPH_OK);
    Graph graph(g);
    CHECK(potgraph_graph_size(graph.get()) == 10);
}

TEST_CASE("potential report") {
    Config cfg(potgraph_config_new());
    potgraph_report* raw = nullptr;
    Sequence yes = parse("5,3,3,3,3,3");
    REQUIRE(potgraph_query_potential(cfg.get(), yes.get(), 5, &raw) == POTGRAPH_OK);
    Report a(raw);
    CHECK(potgraph_report_verdict(a.get()) == POTGRAPH_VERDICT_PASS);
    const json ja = report_json(a.get());
    for (const char* key : {"sequence", "m", "graphical", "verdict", "exhausted", "explored", "witness", "embedding"})
        CHECK_MESSAGE(ja.contains(key), key);
    CHECK(ja["verdict"] == true);
    CHECK(ja["embedding"].size() == 5);

    Sequence no = parse("5,5,2,2,2,2");
    REQUIRE(potgraph_query_potential(cfg.get(), no.get(), 5, &raw) == POTGRAPH_OK);
    Report b(raw);
    CHECK(potgraph_report_verdict(b.get()) == POTGRAPH_VERDICT_FAIL);
    CHECK(report_json(b.get())["exhausted"] == true);

    // Budget-limited negatives are inconclusive.
    REQUIRE(potgraph_config_set_budget(cfg.get(), 1) == POTGRAPH_OK);
    Sequence split = parse("4,4,2,2,2,2");
    REQUIRE(potgraph_query_potential(cfg.get(), split.get(), 5, &raw) == POTGRAPH_OK);
    Report c(raw);
    CHECK(potgraph_report_verdict(c.get()) == POTGRAPH_VERDICT_INCONCLUSIVE);

    CHECK(potgraph_query_potential(cfg.get(), yes.get(), 3, &raw) == POTGRAPH_INPUT_ERROR);
    REQUIRE(potgraph_config_set_vertex_limit(cfg.get(), 5) == POTGRAPH_OK);
    CHECK(potgraph_query_potential(cfg.get(), yes.get(), 5, &raw) == POTGRAPH_RESOURCE_ERROR);
}

TEST_CASE("sigma and witness reports") {
    Config cfg(potgraph_config_new());
    potgraph_report* raw = nullptr;
    REQUIRE(potgraph_query_sigma(cfg.get(), 5, 6, 1, &raw) == POTGRAPH_OK);
    Report exact(raw);
    CHECK(potgraph_report_verdict(exact.get()) == POTGRAPH_VERDICT_PASS);
    const json j = report_json(exact.get());
    for (const char* key : {"m", "n", "lower_bound", "exact", "formula", "verdict", "extremal_sequences", "witnesses"})
        CHECK_MESSAGE(j.contains(key), key);
    CHECK(j["exact"] == 20);
    CHECK(j["lower_bound"] == 20);
    CHECK(j["verdict"] == "matches");
    CHECK(j["extremal_sequences"].size() == j["witnesses"].size());

    REQUIRE(potgraph_query_sigma(cfg.get(), 6, 8, 0, &raw) == POTGRAPH_OK);
    Report bound(raw);
    const json b = report_json(bound.get());
    CHECK(b["lower_bound"] == 38);
    CHECK(b["exact"].is_null());

    CHECK(potgraph_query_sigma(cfg.get(), 5, 13, 1, &raw) == POTGRAPH_RESOURCE_ERROR);
    CHECK(potgraph_query_sigma(cfg.get(), 5, 4, 1, &raw) == POTGRAPH_INPUT_ERROR);

    REQUIRE(potgraph_query_witness(cfg.get(), 5, 6, &raw) == POTGRAPH_OK);
    Report w(raw);
    const json wj = report_json(w.get());
    CHECK(wj["sum"] == 18);
    CHECK(wj["contains_pattern"] == false);
    CHECK(wj["sequence"] == json::array({5, 5, 2, 2, 2, 2}));
}

TEST_CASE("verification reports") {
    Config cfg(potgraph_config_new());
    potgraph_config_set_parallelism(cfg.get(), 2);
    potgraph_report* raw = nullptr;

    REQUIRE(potgraph_verify_theorem1(cfg.get(), 5, 8, &raw) == POTGRAPH_OK);
    Report t1(raw);
    CHECK(potgraph_report_verdict(t1.get()) == POTGRAPH_VERDICT_PASS);
    const json j1 = report_json(t1.get());
    CHECK(j1["check"] == "theorem1");
    CHECK(j1["results"].size() == 4);

    REQUIRE(potgraph_verify_theorem2(cfg.get(), 6, &raw) == POTGRAPH_OK);
    Report t2(raw);
    CHECK(potgraph_report_verdict(t2.get()) == POTGRAPH_VERDICT_PASS);
    CHECK(report_json(t2.get())["pass"] == true);

    REQUIRE(potgraph_verify_conjecture(cfg.get(), 6, 6, 7, &raw) == POTGRAPH_OK);
    Report conj(raw);
    const json jc = report_json(conj.get());
    CHECK(jc["check"] == "conjecture");
    CHECK(jc["reports"].size() == 2);

    REQUIRE(potgraph_verify_base_cases(cfg.get(), 8, &raw) == POTGRAPH_OK);
    Report base(raw);
    CHECK(potgraph_report_verdict(base.get()) == POTGRAPH_VERDICT_PASS);
    CHECK(report_json(base.get())["results"].size() == 7);

    CHECK(potgraph_verify_theorem2(cfg.get(), 4, &raw) == POTGRAPH_INPUT_ERROR);
}

TEST_CASE("progress callback") {
    Config cfg(potgraph_config_new());
    std::vector<std::string> lines;
    potgraph_config_set_progress(
        cfg.get(), [](const char* line, void* user) { static_cast<std::vector<std::string>*>(user)->push_back(line); },
        &lines);
    potgraph_report* raw = nullptr;
    REQUIRE(potgraph_query_sigma(cfg.get(), 5, 6, 1, &raw) == POTGRAPH_OK);
    potgraph_report_free(raw);
    CHECK_FALSE(lines.empty());
}

TEST_CASE("replay report is JSON lines") {
    Config cfg(potgraph_config_new());
    potgraph_report* raw = nullptr;
    Sequence s = parse("5,5,4,4,2,2,2");
    REQUIRE(potgraph_replay(cfg.get(), s.get(), &raw) == POTGRAPH_OK);
    Report r(raw);
    CHECK(potgraph_report_verdict(r.get()) == POTGRAPH_VERDICT_PASS);
    std::istringstream in(potgraph_report_json(r.get()));
    std::string line, last_case;
    int count = 0;
    while (std::getline(in, line)) {
        const json j = json::parse(line);
        for (const char* key : {"case", "sequence", "action", "graph6"}) CHECK(j.contains(key));
        last_case = j["case"].get<std::string>();
        ++count;
    }
    CHECK(count >= 3);
    CHECK(last_case == "outcome");

    Sequence small = parse("2,2,2,2,2,2");
    CHECK(potgraph_replay(cfg.get(), small.get(), &raw) == POTGRAPH_INPUT_ERROR);
}

TEST_CASE("reports are deterministic") {
    Config a(potgraph_config_new());
    Config b(potgraph_config_new());
    potgraph_config_set_parallelism(b.get(), 4);
    potgraph_report *ra = nullptr, *rb = nullptr;
    REQUIRE(potgraph_query_sigma(a.get(), 5, 7, 1, &ra) == POTGRAPH_OK);
    REQUIRE(potgraph_query_sigma(b.get(), 5, 7, 1, &rb) == POTGRAPH_OK);
    Report x(ra), y(rb);
    CHECK(std::string(potgraph_report_json(x.get())) == potgraph_report_json(y.get()));
    CHECK(std::string(potgraph_report_text(x.get())) == potgraph_report_text(y.get()));
}
