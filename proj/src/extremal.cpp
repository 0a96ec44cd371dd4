#include "extremal.hpp"

#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

#include "errors.hpp"

namespace potgraph {

namespace {

void check_range(int m, int n) {
    if (m < 4) throw InputError("m must be at least 4, got " + std::to_string(m));
    if (n < m) {
        throw InputError("n must be at least m (n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")");
    }
}

}  // namespace

long long sigma_lower_bound(int m, int n) {
    check_range(m, n);
    const long long mm = m, nn = n;
    return (2 * mm - 6) * nn - (mm - 3) * (mm - 2) + 2;
}

ExtremalWitness extremal_witness(int m, int n) {
    check_range(m, n);
    SmallGraph g = join(complete_graph(m - 3), empty_graph(n - m + 3));
    DegreeSequence s = degree_sequence_of(g);
    return {std::move(g), std::move(s)};
}

Theorem1Check verify_theorem1(int m, int n, const SearchOptions& options) {
    Theorem1Check check;
    check.m = m;
    check.n = n;
    check.lower_bound = sigma_lower_bound(m, n);
    const ExtremalWitness w = extremal_witness(m, n);
    check.witness_sum = degree_sum(w.sequence);
    check.witness_graph6 = to_graph6(w.graph);
    check.contains_pattern = contains_subgraph(w.graph, km_minus_c4(m).pattern).has_value();
    check.realization_classes = static_cast<long long>(enumerate_realizations(w.sequence, options).size());
    check.pass = !check.contains_pattern && check.realization_classes == 1 &&
                 check.witness_sum + 2 == check.lower_bound;
    return check;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::matches: return "matches";
        case Verdict::exceeds: return "exceeds";
        case Verdict::below: return "below";
        case Verdict::not_computed: return "not_computed";
    }
    return "not_computed";
}

SigmaReport sigma_bound_report(int m, int n) {
    SigmaReport r;
    r.m = m;
    r.n = n;
    r.lower_bound = sigma_lower_bound(m, n);
    r.conjecture_formula = r.lower_bound;
    return r;
}

void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& body) {
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(count);
            }
        }
    };
    std::vector<std::jthread> threads;
    const std::size_t spawn = std::min<std::size_t>(static_cast<std::size_t>(workers), count);
    for (std::size_t t = 0; t < spawn; ++t) threads.emplace_back(work);
    threads.clear();
    if (failure) std::rethrow_exception(failure);
}

SigmaReport sigma_exact(int m, int n, const SweepOptions& options) {
    SigmaReport report = sigma_bound_report(m, n);
    if (n > options.search.vertex_limit) {
        throw ResourceError("n=" + std::to_string(n) + " exceeds the vertex limit " +
                            std::to_string(options.search.vertex_limit));
    }
    const TargetPattern target = km_minus_c4(m);

    std::map<long long, std::vector<DegreeSequence>, std::greater<>> levels;
    for_each_graphical_sequence(
        n, 0,
        [&](const DegreeSequence& s) {
            levels[degree_sum(s)].push_back(s);
            return true;
        },
        options.search.vertex_limit);

    enum class Outcome { potential, not_potential, inconclusive };
    for (const auto& [level, sequences] : levels) {
        std::vector<Outcome> outcomes(sequences.size());
        parallel_for(sequences.size(), options.parallelism, [&](std::size_t i) {
            const WitnessResult r = is_potentially(sequences[i], target, options.search);
            outcomes[i] = r.verdict ? Outcome::potential
                                    : (r.exhausted ? Outcome::not_potential : Outcome::inconclusive);
        });
        report.sequences_checked += static_cast<long long>(sequences.size());

        bool inconclusive = false;
        for (std::size_t i = 0; i < sequences.size(); ++i) {
            if (outcomes[i] == Outcome::not_potential) {
                report.extremal_sequences.push_back(sequences[i]);
                report.extremal_realizations.push_back(havel_hakimi_realize(sequences[i]));
            }
            inconclusive = inconclusive || outcomes[i] == Outcome::inconclusive;
        }
        if (options.progress) {
            options.progress("sigma m=" + std::to_string(m) + " n=" + std::to_string(n) + ": level " +
                             std::to_string(level) + ", " + std::to_string(sequences.size()) +
                             " sequences, " + std::to_string(report.extremal_sequences.size()) +
                             " not potential" + (inconclusive ? ", inconclusive" : ""));
        }
        // A level cannot be certified while any of its sequences is undecided.
        if (inconclusive) {
            report.extremal_sequences.clear();
            report.extremal_realizations.clear();
            report.verdict = Verdict::not_computed;
            return report;
        }
        if (!report.extremal_sequences.empty()) {
            report.exact = level + 2;
            break;
        }
    }
    if (!report.exact) throw Error("no failing degree-sum level found");
    if (*report.exact % 2 != 0) throw Error("computed threshold is odd");

    if (*report.exact == report.conjecture_formula) {
        report.verdict = Verdict::matches;
    } else if (*report.exact > report.conjecture_formula) {
        report.verdict = Verdict::exceeds;
    } else {
        report.verdict = Verdict::below;
    }
    return report;
}

std::vector<SigmaReport> verify_conjecture(int m, int n_first, int n_last, const SweepOptions& options) {
    if (n_first > n_last) throw InputError("empty n range");
    check_range(m, n_first);
    if (n_last > options.search.vertex_limit) {
        throw ResourceError("n=" + std::to_string(n_last) + " exceeds the vertex limit " +
                            std::to_string(options.search.vertex_limit));
    }
    std::vector<SigmaReport> reports;
    for (int n = n_first; n <= n_last; ++n) reports.push_back(sigma_exact(m, n, options));
    return reports;
}

}  // namespace potgraph
