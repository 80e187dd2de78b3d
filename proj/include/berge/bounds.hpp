#pragma once

#include <berge/numeric.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace berge {

enum class BoundKind { exact, upper, lower, slope_upper, conditional_exact, interval };

std::string_view to_string(BoundKind kind);
BoundKind parse_bound_kind(std::string_view text);

/// One named quantity contributing to a bound (for example the construction
/// lower bound next to an upper bound).
struct BoundTerm {
    std::string name;
    BoundKind kind = BoundKind::upper;
    Rational value;
    bool valid_for_all_n = false;

    friend bool operator==(const BoundTerm&, const BoundTerm&) = default;
};

struct BoundResult {
    std::string theorem_id;
    bool applicable = false;
    std::string reason;
    BoundKind kind = BoundKind::upper;
    std::optional<Rational> value;      // present iff applicable; low end for intervals
    std::optional<Rational> value_high; // high end, intervals only
    std::vector<BoundTerm> terms;
    std::vector<std::string> hypotheses;
    bool valid_for_all_n = false;       // the main value bounds ex at every n, not only large n
    std::optional<Rational> formula_value; // closed form evaluated even outside the regime

    friend bool operator==(const BoundResult&, const BoundResult&) = default;
};

using ParamMap = std::map<std::string, std::int64_t>;

/// Parses "n=8,l=4,r=3". Throws MalformedInput.
ParamMap parse_params(std::string_view text);

/// Identifiers accepted by eval_bound, in a fixed order.
const std::vector<std::string>& theorem_ids();

/// Throws UnknownTheorem, MissingParam, or BadParameters for negative inputs.
BoundResult eval_bound(const std::string& theorem_id, const ParamMap& params);

/// Degree above which a vertex of an r-graph is the center of a Berge-S_l.
std::int64_t star_degree_threshold(std::int64_t l, std::int64_t r);

/// Smallest n0 >= 0 such that C(l, r-1)(n-l) + C(l, r) >= n C(l, r)/l for
/// every n >= n0, or nothing when the left side does not grow faster.
std::optional<std::int64_t> two_paths_crossover(std::int64_t l, std::int64_t r);

} // namespace berge
