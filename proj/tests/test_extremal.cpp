#include <doctest.h>

#include <atomic>
#include <set>
#include <stdexcept>

#include "errors.hpp"
#include "extremal.hpp"
#include "oracles.hpp"

using namespace potgraph;

namespace {

// Largest failing degree sum plus two, read off the exhaustive labeled table.
long long oracle_sigma(int m, int n) {
    const auto table = oracle::potential_table(n, {km_minus_c4(m).pattern});
    long long worst = -2;
    for (const auto& [degrees, potential] : table) {
        if (potential) continue;
        long long sum = 0;
        for (int d : degrees) sum += d;
        worst = std::max(worst, sum);
    }
    return worst + 2;
}

}  // namespace

TEST_CASE("sigma_lower_bound values") {
    CHECK(sigma_lower_bound(5, 6) == 20);
    CHECK(sigma_lower_bound(5, 5) == 16);
    CHECK(sigma_lower_bound(4, 6) == 12);
    CHECK(sigma_lower_bound(6, 6) == 26);
    for (int n = 5; n <= 20; ++n) CHECK(sigma_lower_bound(5, n) == 4 * n - 4);
    for (int n = 4; n <= 20; ++n) CHECK(sigma_lower_bound(4, n) == 2 * n);
    CHECK_THROWS_AS(sigma_lower_bound(3, 6), InputError);
    CHECK_THROWS_AS(sigma_lower_bound(6, 5), InputError);
}

TEST_CASE("extremal_witness") {
    const ExtremalWitness a = extremal_witness(5, 6);
    CHECK(a.sequence == DegreeSequence{5, 5, 2, 2, 2, 2});
    CHECK(degree_sum(a.sequence) == 18);
    CHECK(a.graph == join(complete_graph(2), empty_graph(4)));

    CHECK(extremal_witness(4, 4).sequence == DegreeSequence{3, 1, 1, 1});
    CHECK(degree_sum(extremal_witness(4, 4).sequence) == 6);

    const ExtremalWitness c = extremal_witness(6, 6);
    CHECK(c.sequence == DegreeSequence{5, 5, 5, 3, 3, 3});
    CHECK(degree_sum(c.sequence) == 24);

    for (int m = 4; m <= 9; ++m) {
        for (int n = m; n <= 12; ++n) {
            const ExtremalWitness w = extremal_witness(m, n);
            CHECK(degree_sum(w.sequence) == sigma_lower_bound(m, n) - 2);
            CHECK_FALSE(contains_subgraph(w.graph, km_minus_c4(m).pattern));
        }
    }
    CHECK_THROWS_AS(extremal_witness(5, 4), InputError);
}

TEST_CASE("verify_theorem1 passes on the small range") {
    for (int m = 4; m <= 8; ++m) {
        for (int n = m; n <= 9; ++n) {
            const Theorem1Check c = verify_theorem1(m, n);
            CHECK_MESSAGE(c.pass, "m=" << m << " n=" << n);
            CHECK(c.realization_classes == 1);
            CHECK_FALSE(c.contains_pattern);
            CHECK(c.witness_sum + 2 == c.lower_bound);
            CHECK(c.witness_graph6 == to_graph6(extremal_witness(m, n).graph));
        }
    }
}

TEST_CASE("sigma_exact small values") {
    const SigmaReport a = sigma_exact(5, 6);
    REQUIRE(a.exact);
    CHECK(*a.exact == 20);
    CHECK(a.verdict == Verdict::matches);
    CHECK(a.lower_bound == 20);
    const std::set<DegreeSequence> ext(a.extremal_sequences.begin(), a.extremal_sequences.end());
    CHECK(ext.count({5, 5, 2, 2, 2, 2}) == 1);
    REQUIRE(a.extremal_realizations.size() == a.extremal_sequences.size());
    for (std::size_t i = 0; i < a.extremal_sequences.size(); ++i) {
        CHECK(degree_sum(a.extremal_sequences[i]) == 18);
        CHECK(degree_sequence_of(a.extremal_realizations[i]) == a.extremal_sequences[i]);
    }

    const SigmaReport b = sigma_exact(5, 5);
    REQUIRE(b.exact);
    CHECK(*b.exact == 16);

    const SigmaReport c = sigma_exact(4, 6);
    REQUIRE(c.exact);
    CHECK(*c.exact == 12);
}

TEST_CASE("sigma_exact agrees with the labeled-graph oracle (n <= 7)") {
    for (int m = 4; m <= 7; ++m) {
        for (int n = m; n <= 7; ++n) {
            const SigmaReport r = sigma_exact(m, n);
            REQUIRE(r.exact);
            CHECK_MESSAGE(*r.exact == oracle_sigma(m, n), "m=" << m << " n=" << n);
            CHECK(*r.exact >= r.lower_bound);
        }
    }
}

TEST_CASE("extremal witness sequence sits at the top failing level") {
    for (int m = 4; m <= 6; ++m) {
        for (int n = m; n <= 8; ++n) {
            const SigmaReport r = sigma_exact(m, n);
            REQUIRE(r.exact);
            if (*r.exact != r.lower_bound) continue;
            const std::set<DegreeSequence> ext(r.extremal_sequences.begin(), r.extremal_sequences.end());
            CHECK_MESSAGE(ext.count(extremal_witness(m, n).sequence) == 1, "m=" << m << " n=" << n);
        }
    }
}

TEST_CASE("sigma_exact is independent of parallelism and seed") {
    SweepOptions serial;
    SweepOptions wide;
    wide.parallelism = 4;
    wide.search.seed = 99;
    for (int n = 5; n <= 8; ++n) {
        const SigmaReport a = sigma_exact(5, n, serial);
        const SigmaReport b = sigma_exact(5, n, wide);
        CHECK(a.exact == b.exact);
        CHECK(a.extremal_sequences == b.extremal_sequences);
        CHECK(a.sequences_checked == b.sequences_checked);
    }
}

TEST_CASE("sigma_exact guards and budget") {
    CHECK_THROWS_AS(sigma_exact(5, 13), ResourceError);
    CHECK_THROWS_AS(sigma_exact(3, 6), InputError);
    CHECK_THROWS_AS(sigma_exact(7, 6), InputError);

    SweepOptions tight;
    tight.search.budget = 1;
    const SigmaReport r = sigma_exact(6, 8, tight);
    if (!r.exact) {
        CHECK(r.verdict == Verdict::not_computed);
        CHECK(r.extremal_sequences.empty());
    }

    int lines = 0;
    SweepOptions chatty;
    chatty.progress = [&](const std::string&) { ++lines; };
    sigma_exact(5, 6, chatty);
    CHECK(lines > 0);
}

TEST_CASE("sigma_bound_report") {
    const SigmaReport r = sigma_bound_report(6, 8);
    CHECK(r.lower_bound == 38);
    CHECK(r.conjecture_formula == 38);
    CHECK_FALSE(r.exact);
    CHECK(r.verdict == Verdict::not_computed);
    CHECK(std::string(to_string(Verdict::exceeds)) == "exceeds");
}

TEST_CASE("verify_conjecture for m = 6") {
    SweepOptions o;
    o.parallelism = 2;
    const auto reports = verify_conjecture(6, 6, 8, o);
    REQUIRE(reports.size() == 3);
    for (const auto& r : reports) {
        REQUIRE(r.exact);
        CHECK(*r.exact >= r.lower_bound);
        CHECK(r.verdict != Verdict::not_computed);
    }
    CHECK_THROWS_AS(verify_conjecture(6, 8, 7), InputError);
    CHECK_THROWS_AS(verify_conjecture(6, 6, 13), ResourceError);
}

TEST_CASE("parallel_for") {
    std::atomic<long long> total{0};
    parallel_for(1000, 4, [&](std::size_t i) { total += static_cast<long long>(i); });
    CHECK(total == 999 * 1000 / 2);
    CHECK_THROWS_AS(parallel_for(100, 3,
                                 [](std::size_t i) {
                                     if (i == 42) throw std::runtime_error("boom");
                                 }),
                    std::runtime_error);
    int calls = 0;
    parallel_for(0, 4, [&](std::size_t) { ++calls; });
    CHECK(calls == 0);
}

TEST_CASE("m = 7, n = 8: the 6-regular sequence sits above the lower bound without the pattern") {
    // Its only realization is K_8 minus a perfect matching.
    const DegreeSequence s(std::vector<int>(8, 6));
    const SmallGraph g = complement(matching_graph(4));
    CHECK(degree_sequence_of(g) == s);
    CHECK(enumerate_realizations(s).size() == 1);
    CHECK_FALSE(oracle::brute_contains(g, km_minus_c4(7).pattern));
    CHECK(degree_sum(s) >= sigma_lower_bound(7, 8));
    CHECK_FALSE(is_potentially(s, km_minus_c4(7)).verdict);

    const SigmaReport r = sigma_exact(7, 8);
    REQUIRE(r.exact);
    CHECK(*r.exact == 50);
    CHECK(r.verdict == Verdict::exceeds);
}
