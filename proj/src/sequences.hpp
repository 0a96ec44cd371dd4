#pragma once

#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace potgraph {

inline constexpr int kDefaultVertexLimit = 12;

// A degree sequence kept in nonincreasing order. Terms are not required to be
// graphical; use is_graphical() for that.
class DegreeSequence {
public:
    DegreeSequence() = default;
    explicit DegreeSequence(std::vector<int> values);
    DegreeSequence(std::initializer_list<int> values)
        : DegreeSequence(std::vector<int>(values)) {}

    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }
    int operator[](std::size_t i) const { return terms_[i]; }
    std::span<const int> terms() const noexcept { return terms_; }

    int max_term() const { return terms_.empty() ? 0 : terms_.front(); }
    int min_term() const { return terms_.empty() ? 0 : terms_.back(); }

    friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
    friend auto operator<=>(const DegreeSequence&, const DegreeSequence&) = default;

private:
    std::vector<int> terms_;
};

// Sorts values nonincreasing. Throws InputError on a negative value.
DegreeSequence make_sequence(std::span<const int> values);

long long degree_sum(const DegreeSequence& s);

// Erdős–Gallai test.
bool is_graphical(const DegreeSequence& s);

// Accepts "5,3,3,3" and the power form "5^1,3^5" (mixed is fine).
DegreeSequence parse_sequence(std::string_view text);

// "5,3,3,3,3,3"
std::string format_sequence(const DegreeSequence& s);
// "5^1,3^5"
std::string format_sequence_powers(const DegreeSequence& s);

// Calls visit for every graphical nonincreasing sequence of length n with
// sum >= min_sum, in lexicographically descending order. Returning false
// from visit stops the enumeration. Throws ResourceError if n > vertex_limit.
void for_each_graphical_sequence(int n, long long min_sum,
                                 const std::function<bool(const DegreeSequence&)>& visit,
                                 int vertex_limit = kDefaultVertexLimit);

std::vector<DegreeSequence> enumerate_graphical_sequences(
    int n, long long min_sum, int vertex_limit = kDefaultVertexLimit);

}  // namespace potgraph
