#include "sequences.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "errors.hpp"

namespace potgraph {

DegreeSequence::DegreeSequence(std::vector<int> values) : terms_(std::move(values)) {
    for (int v : terms_) {
        if (v < 0) throw InputError("degree sequence term is negative: " + std::to_string(v));
    }
    std::sort(terms_.begin(), terms_.end(), std::greater<>());
}

DegreeSequence make_sequence(std::span<const int> values) {
    return DegreeSequence(std::vector<int>(values.begin(), values.end()));
}

long long degree_sum(const DegreeSequence& s) {
    return std::accumulate(s.terms().begin(), s.terms().end(), 0LL);
}

bool is_graphical(const DegreeSequence& s) {
    const auto d = s.terms();
    const long long n = static_cast<long long>(d.size());
    if (degree_sum(s) % 2 != 0) return false;
    if (!d.empty() && d.front() > n - 1) return false;

    long long left = 0;
    for (long long k = 1; k <= n; ++k) {
        left += d[k - 1];
        long long right = k * (k - 1);
        for (long long i = k; i < n; ++i) right += std::min<long long>(d[i], k);
        if (left > right) return false;
    }
    return true;
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

// Parses a (possibly signed) integer at text[pos], advancing pos.
long long parse_int(std::string_view text, std::size_t& pos) {
    while (pos < text.size() && is_space(text[pos])) ++pos;
    long long value = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) throw ParseError("expected an integer", pos);
    pos += static_cast<std::size_t>(ptr - first);
    while (pos < text.size() && is_space(text[pos])) ++pos;
    return value;
}

}  // namespace

DegreeSequence parse_sequence(std::string_view text) {
    std::vector<int> values;
    std::size_t pos = 0;
    if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) {
        throw ParseError("empty degree sequence", 0);
    }
    while (true) {
        const std::size_t start = pos;
        const long long value = parse_int(text, pos);
        long long copies = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            copies = parse_int(text, pos);
            if (copies < 0) throw ParseError("negative multiplicity", start);
        }
        if (value < 0) throw InputError("degree sequence term is negative: " + std::to_string(value));
        if (value > 1'000'000 || copies > 1'000'000) throw ParseError("value out of range", start);
        values.insert(values.end(), static_cast<std::size_t>(copies), static_cast<int>(value));
        if (pos == text.size()) break;
        if (text[pos] != ',') throw ParseError("expected ',' or '^'", pos);
        ++pos;
    }
    if (values.empty()) throw ParseError("empty degree sequence", 0);
    return DegreeSequence(std::move(values));
}

std::string format_sequence(const DegreeSequence& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s[i]);
    }
    return out;
}

std::string format_sequence_powers(const DegreeSequence& s) {
    std::string out;
    std::size_t i = 0;
    while (i < s.size()) {
        std::size_t j = i;
        while (j < s.size() && s[j] == s[i]) ++j;
        if (!out.empty()) out += ',';
        out += std::to_string(s[i]) + '^' + std::to_string(j - i);
        i = j;
    }
    return out;
}

namespace {

struct SequenceWalker {
    int n;
    long long min_sum;
    const std::function<bool(const DegreeSequence&)>& visit;
    std::vector<int> terms;

    // Returns false once the visitor asked to stop.
    bool walk(int pos, int bound, long long sum) {
        if (pos == n) {
            if (sum < min_sum || sum % 2 != 0) return true;
            DegreeSequence s(terms);
            if (!is_graphical(s)) return true;
            return visit(s);
        }
        const long long remaining = n - pos;
        for (int v = bound; v >= 0; --v) {
            // Values only decrease from here on, so the sum bound fails for all smaller v too.
            if (sum + remaining * v < min_sum) break;
            terms[pos] = v;
            if (!walk(pos + 1, v, sum + v)) return false;
        }
        return true;
    }
};

}  // namespace

void for_each_graphical_sequence(int n, long long min_sum,
                                 const std::function<bool(const DegreeSequence&)>& visit,
                                 int vertex_limit) {
    if (n < 1) throw InputError("sequence length must be at least 1");
    if (n > vertex_limit) {
        throw ResourceError("sequence length " + std::to_string(n) + " exceeds vertex limit " +
                            std::to_string(vertex_limit));
    }
    if (min_sum < 0 || min_sum > static_cast<long long>(n) * (n - 1)) {
        throw InputError("minimum degree sum out of range [0, n(n-1)]");
    }
    SequenceWalker walker{n, min_sum, visit, std::vector<int>(static_cast<std::size_t>(n), 0)};
    walker.walk(0, n - 1, 0);
}

std::vector<DegreeSequence> enumerate_graphical_sequences(int n, long long min_sum,
                                                          int vertex_limit) {
    std::vector<DegreeSequence> out;
    for_each_graphical_sequence(
        n, min_sum,
        [&](const DegreeSequence& s) {
            out.push_back(s);
            return true;
        },
        vertex_limit);
    return out;
}

}  // namespace potgraph
