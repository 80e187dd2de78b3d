#include <berge/bounds.hpp>
#include <berge/error.hpp>

#include <algorithm>
#include <cctype>
#include <functional>

namespace berge {

namespace {

const std::string large_n = "n sufficiently large (threshold unspecified)";

class Params {
public:
    explicit Params(const ParamMap& p) : p_(p)
    {
        for (const auto& [key, value] : p_)
            if (value < 0)
                throw Error(ErrorCode::bad_parameters, "parameter " + key + " must be non-negative");
    }

    std::int64_t operator[](const std::string& key) const
    {
        auto it = p_.find(key);
        if (it == p_.end())
            throw Error(ErrorCode::missing_param, "missing parameter '" + key + "'");
        return it->second;
    }

    bool has(const std::string& key) const { return p_.contains(key); }

private:
    const ParamMap& p_;
};

Rational q(const Integer& v) { return Rational(v); }
Rational q(std::int64_t v) { return Rational(Integer(v)); }
Integer C(std::int64_t a, std::int64_t b) { return binom_zero(a, b); }

BoundResult inapplicable(const std::string& id, std::string reason)
{
    BoundResult r;
    r.theorem_id = id;
    r.applicable = false;
    r.reason = std::move(reason);
    return r;
}

BoundResult applicable(const std::string& id, std::string reason, BoundKind kind, Rational value)
{
    BoundResult r;
    r.theorem_id = id;
    r.applicable = true;
    r.reason = std::move(reason);
    r.kind = kind;
    r.value = value;
    r.formula_value = value;
    return r;
}

// Upper bound (n/l)C(l, r) for Berge paths with l >= r+1 > 3.
BoundResult gkl_path_i(const Params& p)
{
    const auto n = p["n"], l = p["l"], r = p["r"];
    const std::string id = "gkl-path-i";
    if (l == 0)
        return inapplicable(id, "needs l >= r+1 > 3");
    const Rational value = q(n) * q(C(l, r)) / q(l);
    if (!(l >= r + 1 && r + 1 > 3)) {
        auto res = inapplicable(id, "needs l >= r+1 > 3");
        res.formula_value = value;
        return res;
    }
    auto res = applicable(id, "l >= r+1 > 3", BoundKind::upper, value);
    res.valid_for_all_n = true;
    if (n % l == 0) {
        res.kind = BoundKind::conditional_exact;
        res.hypotheses.push_back("l | n (sharpness by disjoint cliques)");
    }
    return res;
}

BoundResult gkl_path_ii(const Params& p)
{
    const auto n = p["n"], l = p["l"], r = p["r"];
    const std::string id = "gkl-path-ii";
    const Rational value = q(n) * q(l - 1) / q(r + 1);
    if (!(r >= l && l > 2)) {
        auto res = inapplicable(id, "needs r >= l > 2");
        res.formula_value = value;
        return res;
    }
    auto res = applicable(id, "r >= l > 2", BoundKind::upper, value);
    res.valid_for_all_n = true;
    if (n % (r + 1) == 0) {
        res.kind = BoundKind::conditional_exact;
        res.hypotheses.push_back("(r+1) | n");
    }
    return res;
}

BoundResult connected_path(const Params& p)
{
    const auto n = p["n"], l = p["l"], r = p["r"];
    const std::string id = "connected-path";
    const std::int64_t h = l >= 1 ? (l - 1) / 2 : 0;
    Integer value = C(h, r - 1) * Integer(n - h) + C(h, r);
    if (l % 2 == 0)
        value += C(h, r - 2);
    if (!(l >= 2 * r + 13 && 2 * r + 13 >= 18)) {
        auto res = inapplicable(id, "needs l >= 2r+13 >= 18");
        res.formula_value = q(value);
        return res;
    }
    auto res = applicable(id, "l >= 2r+13 >= 18", BoundKind::conditional_exact, q(value));
    res.hypotheses.push_back("n > N(l, r) (threshold unspecified)");
    res.hypotheses.push_back("connected host hypergraphs only");
    return res;
}

Integer hstar_count(std::int64_t n, std::int64_t l, std::int64_t k, std::int64_t r)
{
    const std::int64_t classes = (n - k + 1) / l;
    return (C(l + k - 1, r) - C(k - 1, r)) * Integer(classes) + C(n - l * classes, r);
}

BoundResult tree_stars(const Params& p)
{
    const auto n = p["n"], l = p["l"], k = p["k"], r = p["r"];
    const std::string id = "tree-stars";
    if (l < 1 || k < 2 || n < k - 1)
        return inapplicable(id, "needs k >= 2, l >= 1 and n >= k-1");
    const Integer head = C(l + k - 1, r) - C(k - 1, r);
    const Integer value = head * ceil_div(Integer(n - k + 1), Integer(l)) + C(k - 1, r);

    const bool main_regime = r >= 2 && r <= k + l - 1;
    const bool subtree_regime = l >= 5 && r >= 2 && r < l - 1;
    if (!main_regime && !subtree_regime) {
        auto res = inapplicable(id, "needs 2 <= r <= k+l-1, or l >= 5 and 2 <= r < l-1");
        res.formula_value = q(value);
        return res;
    }
    auto res = applicable(id, main_regime ? "2 <= r <= k+l-1" : "l >= 5 and 2 <= r < l-1", BoundKind::upper, q(value));
    if (main_regime)
        res.hypotheses.push_back("ex_p(n, Berge-T_l) <= C(l,p) n/l for 2 <= p <= r (Erdos-Sos type assumption)");
    else
        res.hypotheses.push_back("Erdos-Sos conjecture holds for T_l and all its subtrees");
    res.hypotheses.push_back(large_n);
    if ((n - k + 1) % l == 0) {
        res.kind = BoundKind::conditional_exact;
        res.hypotheses.push_back("l | n-k+1");
        res.hypotheses.push_back("forbidden family T_l + t S_l + (k-1-t) S_{l+1} with 0 <= t <= k-1");
    }
    res.terms.push_back({"construction", BoundKind::lower, q(hstar_count(n, l, k, r)), true});
    return res;
}

BoundResult matching_stars(const Params& p)
{
    const auto n = p["n"], k = p["k"], r = p["r"];
    const std::string id = "matching-stars";
    const Integer value = C(k - 1, r - 1) * Integer(n - k + 1) + C(k - 1, r);
    if (!(k >= 2 && r >= 2 && r <= k)) {
        auto res = inapplicable(id, "needs k >= 2 and 2 <= r <= k");
        res.formula_value = q(value);
        return res;
    }
    auto res = applicable(id, "k >= 2 and 2 <= r <= k", BoundKind::conditional_exact, q(value));
    res.hypotheses.push_back(large_n);
    res.hypotheses.push_back("forbidden family M_t + (k-t) S_2 with 1 <= t <= k");
    if (n >= k - 1)
        res.terms.push_back({"construction", BoundKind::lower, q(hstar_count(n, 1, k, r)), true});
    return res;
}

BoundResult path_stars_like(const Params& p, const std::string& id, bool large_r)
{
    const auto n = p["n"], l1 = p["l1"], l2 = p["l2"], k = p["k"], r = p["r"];
    const auto lmin = std::min(l1, l2), lmax = std::max(l1, l2);
    bool ok = k >= 2 && l1 >= 3 && l2 >= 2 && r >= l1 + l2 + k - 1;
    std::string regime = "k >= 2, l1 >= 3, l2 >= 2, r >= l1+l2+k-1";
    if (large_r) {
        ok = ok && r >= l1 * (l1 - 2);
        regime += ", r >= l1(l1-2)";
    }
    std::optional<Rational> lower;
    if (r - k + 2 > 0 && n >= k - 1)
        lower = q(Integer(lmin - 1) * floor_div(Integer(n - k + 1), Integer(r - k + 2)));
    if (!ok) {
        auto res = inapplicable(id, "needs " + regime);
        res.formula_value = lower;
        return res;
    }
    auto res = applicable(id, regime, BoundKind::lower, *lower);
    res.valid_for_all_n = true;
    res.terms.push_back({"construction", BoundKind::lower, *lower, true});
    res.terms.push_back({"slope", BoundKind::slope_upper, q(lmax - 1) / q(r - k + 2), false});
    res.hypotheses.push_back(large_n);
    res.hypotheses.push_back("upper bound is slope * n + O(1) with unspecified constant");
    if (large_r)
        res.hypotheses.push_back("the tree T_l1 is not the star S_l1");
    return res;
}

BoundResult star_matching(const Params& p)
{
    const auto n = p["n"], l = p["l"], k = p["k"], r = p["r"];
    const std::string id = "star-matching";
    if (l < 1)
        return inapplicable(id, "needs r > k >= 2 and l >= 2");
    const bool small_l = l <= r + 1;
    const Rational value = small_l ? q(floor_div(Integer(n) * (l - 1), Integer(r))) : q(n) * q(C(l, r)) / q(l);
    if (!(r > k && k >= 2 && l >= 2)) {
        auto res = inapplicable(id, "needs r > k >= 2 and l >= 2");
        res.formula_value = value;
        return res;
    }
    BoundResult res;
    if (small_l) {
        res = applicable(id, "r > k >= 2, 2 <= l <= r+1", BoundKind::conditional_exact, value);
    } else {
        res = applicable(id, "r > k >= 2, l > r+1", BoundKind::upper, value);
        if (n % l == 0) {
            res.kind = BoundKind::conditional_exact;
            res.hypotheses.push_back("l | n");
        }
    }
    res.hypotheses.push_back(large_n);
    return res;
}

BoundResult connected_linear_forest(const Params& p)
{
    const auto n = p["n"], r = p["r"];
    const std::string id = "connected-linear-forest";
    std::vector<std::int64_t> lengths;
    for (int i = 1; p.has("l" + std::to_string(i)); ++i)
        lengths.push_back(p["l" + std::to_string(i)]);
    if (lengths.size() < 2)
        p["l" + std::to_string(lengths.size() + 1)];
    std::int64_t total = 0;
    for (auto l : lengths)
        total += l + 1;
    if (total % 2 != 0)
        return inapplicable(id, "sum of (l_i + 1) is odd");
    const std::int64_t a = total / 2 - 1;
    const Integer value = C(a, r - 1) * Integer(n - a) + C(a, r);
    const bool all_odd = std::all_of(lengths.begin(), lengths.end(), [](auto l) { return l % 2 == 1; });
    if (!(all_odd && r >= 3 && r <= total / 2 - 7)) {
        auto res = inapplicable(id, "needs every l_i odd and 3 <= r <= S/2 - 7");
        res.formula_value = q(value);
        return res;
    }
    auto res = applicable(id, "every l_i odd and 3 <= r <= S/2 - 7", BoundKind::conditional_exact, q(value));
    res.hypotheses.push_back(large_n);
    res.hypotheses.push_back("connected host hypergraphs only");
    if (n > a)
        res.terms.push_back({"construction", BoundKind::lower, q(value), true});
    return res;
}

// max{ex_r(n, Berge-P_l), second}: exact when the path term is pinned down,
// otherwise an interval between the clique-block lower bound and the upper
// bound of the path term.
BoundResult two_paths_common(const std::string& id, std::string regime, std::int64_t n, std::int64_t l,
    std::int64_t r, const Integer& second)
{
    ParamMap sub{{"n", n}, {"l", l}, {"r", r}};
    auto path = gkl_path_i(Params(sub));
    const Integer path_high = floor_div(boost::multiprecision::numerator(*path.value),
        boost::multiprecision::denominator(*path.value));
    const Integer path_low = Integer(n / l) * C(l, r) + C(n % l, r);
    const Integer low = std::max(second, path_low);
    const Integer high = std::max(second, path_high);

    auto res = applicable(id, std::move(regime), BoundKind::conditional_exact, q(low));
    res.formula_value = q(high);
    res.hypotheses.push_back(large_n);
    res.terms.push_back({"path-term-low", BoundKind::lower, q(path_low), true});
    res.terms.push_back({"path-term-high", BoundKind::upper, q(path_high), true});
    res.terms.push_back({"construction", BoundKind::lower, q(second), true});
    if (low != high) {
        res.kind = BoundKind::interval;
        res.value_high = q(high);
        res.reason += "; path term known only within bounds";
    }
    return res;
}

BoundResult two_paths_i(const Params& p)
{
    const auto n = p["n"], l = p["l"], r = p["r"];
    const std::string id = "two-paths-i";
    if (!(r >= 3 && l % 2 == 1 && l >= 2 * r + 11))
        return inapplicable(id, "needs r >= 3, l odd and l >= 2r+11");
    const std::int64_t m = (l + 1) / 2;
    return two_paths_common(id, "r >= 3, l odd, l >= 2r+11", n, l, r, C(m, r - 1) * Integer(n - m) + C(m, r));
}

BoundResult two_paths_ii(const Params& p)
{
    const auto n = p["n"], l1 = p["l1"], l2 = p["l2"], r = p["r"];
    const std::string id = "two-paths-ii";
    if (!(r >= 3 && l1 % 2 == 1 && l2 % 2 == 1 && l1 >= l2 && l2 >= r + 6))
        return inapplicable(id, "needs r >= 3, l1 and l2 odd, l1 >= l2 >= r+6");
    const std::int64_t m = (l1 + l2) / 2;
    return two_paths_common(id, "r >= 3, l1, l2 odd, l1 >= l2 >= r+6", n, l1, r, C(m, r - 1) * Integer(n - m) + C(m, r));
}

BoundResult two_equal_paths(const Params& p)
{
    const auto n = p["n"], l = p["l"], r = p["r"];
    const std::string id = "two-equal-paths";
    const Integer value = C(l, r - 1) * Integer(n - l) + C(l, r);
    if (!(l % 2 == 1 && l >= r + 6 && r + 6 >= 9)) {
        auto res = inapplicable(id, "needs l odd and l >= r+6 >= 9");
        res.formula_value = q(value);
        return res;
    }
    auto res = applicable(id, "l odd, l >= r+6 >= 9", BoundKind::conditional_exact, q(value));
    res.hypotheses.push_back(large_n);
    if (auto n0 = two_paths_crossover(l, r))
        res.hypotheses.push_back("dominates the single-path term for n >= " + std::to_string(*n0));
    res.terms.push_back({"construction", BoundKind::lower, q(value), true});
    return res;
}

BoundResult berge_matching(const Params& p)
{
    const auto n = p["n"], k = p["k"], r = p["r"];
    const std::string id = "berge-matching";
    if (k < 1 || r < 2)
        return inapplicable(id, "needs k >= 1 and r >= 2");
    Integer value;
    std::string regime;
    if (r >= 2 * k - 1) {
        value = k - 1;
        regime = "r >= 2k-1";
    } else if (r > k) {
        value = C(2 * k - 1, r);
        regime = "k < r < 2k-1";
    } else if (r == k) {
        value = n - k + 1;
        regime = "r = k";
    } else {
        value = C(k - 1, r - 1) * Integer(n - k + 1) + C(k - 1, r);
        regime = "r <= k-1";
    }
    auto res = applicable(id, regime, BoundKind::conditional_exact, q(value));
    res.hypotheses.push_back(large_n);
    return res;
}

BoundResult erdos_sos(const Params& p)
{
    const auto n = p["n"], l = p["l"];
    auto res = applicable("erdos-sos", "graph case", BoundKind::upper, q(n) * q(l - 1) / q(2));
    res.hypotheses.push_back("Erdos-Sos conjecture holds for T_l (assumed, never asserted)");
    return res;
}

BoundResult star_free(const Params& p)
{
    const auto n = p["n"], l = p["l"], r = p["r"];
    const std::string id = "star-free";
    if (l < 1 || r < 2)
        return inapplicable(id, "needs l >= 1 and r >= 2");
    auto res = applicable(id, "every degree is at most the star threshold", BoundKind::upper,
        q(n) * q(star_degree_threshold(l, r)) / q(r));
    res.valid_for_all_n = true;
    return res;
}

using Evaluator = std::function<BoundResult(const Params&)>;

const std::vector<std::pair<std::string, Evaluator>>& registry()
{
    static const std::vector<std::pair<std::string, Evaluator>> table = {
        {"gkl-path-i", gkl_path_i},
        {"gkl-path-ii", gkl_path_ii},
        {"connected-path", connected_path},
        {"tree-stars", tree_stars},
        {"matching-stars", matching_stars},
        {"path-stars", [](const Params& p) { return path_stars_like(p, "path-stars", false); }},
        {"tree-stars-large-r", [](const Params& p) { return path_stars_like(p, "tree-stars-large-r", true); }},
        {"star-matching", star_matching},
        {"connected-linear-forest", connected_linear_forest},
        {"two-paths-i", two_paths_i},
        {"two-paths-ii", two_paths_ii},
        {"two-equal-paths", two_equal_paths},
        {"berge-matching", berge_matching},
        {"erdos-sos", erdos_sos},
        {"star-free", star_free},
    };
    return table;
}

} // namespace

std::string_view to_string(BoundKind kind)
{
    switch (kind) {
    case BoundKind::exact: return "exact";
    case BoundKind::upper: return "upper";
    case BoundKind::lower: return "lower";
    case BoundKind::slope_upper: return "slope_upper";
    case BoundKind::conditional_exact: return "conditional_exact";
    case BoundKind::interval: return "interval";
    }
    return "upper";
}

BoundKind parse_bound_kind(std::string_view text)
{
    for (auto kind : {BoundKind::exact, BoundKind::upper, BoundKind::lower, BoundKind::slope_upper,
             BoundKind::conditional_exact, BoundKind::interval})
        if (to_string(kind) == text)
            return kind;
    throw Error(ErrorCode::malformed_input, "unknown bound kind '" + std::string(text) + "'");
}

ParamMap parse_params(std::string_view text)
{
    ParamMap out;
    std::size_t pos = 0;
    auto fail = [&](const std::string& what) {
        throw Error(ErrorCode::malformed_input, what + " at position " + std::to_string(pos), pos);
    };
    while (pos < text.size()) {
        std::size_t eq = text.find('=', pos);
        if (eq == std::string_view::npos)
            fail("expected key=value");
        std::size_t end = std::min(text.find(',', eq), text.size());
        std::string key(text.substr(pos, eq - pos));
        std::string value(text.substr(eq + 1, end - eq - 1));
        auto trim = [](std::string& s) {
            s.erase(0, s.find_first_not_of(" \t"));
            s.erase(s.find_last_not_of(" \t") + 1);
        };
        trim(key);
        trim(value);
        if (key.empty())
            fail("empty parameter name");
        if (value.empty() || !std::all_of(value.begin(), value.end(), [](unsigned char c) { return std::isdigit(c) || c == '-'; }))
            fail("parameter '" + key + "' is not an integer");
        try {
            out[key] = std::stoll(value);
        } catch (const std::exception&) {
            fail("parameter '" + key + "' is not an integer");
        }
        pos = end + 1;
    }
    return out;
}

const std::vector<std::string>& theorem_ids()
{
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& [id, f] : registry())
            out.push_back(id);
        return out;
    }();
    return ids;
}

BoundResult eval_bound(const std::string& theorem_id, const ParamMap& params)
{
    for (const auto& [id, f] : registry())
        if (id == theorem_id)
            return f(Params(params));
    throw Error(ErrorCode::unknown_theorem, "unknown theorem id '" + theorem_id + "'");
}

std::int64_t star_degree_threshold(std::int64_t l, std::int64_t r)
{
    if (l < 1 || r < 2)
        throw Error(ErrorCode::bad_parameters, "star threshold needs l >= 1 and r >= 2");
    if (l > r)
        return to_int64(binom_zero(l - 1, r - 1));
    return l - 1;
}

std::optional<std::int64_t> two_paths_crossover(std::int64_t l, std::int64_t r)
{
    if (l < 1 || r < 2)
        throw Error(ErrorCode::bad_parameters, "crossover needs l >= 1 and r >= 2");
    // B(n) = C(l,r-1)(n-l) + C(l,r), A(n) = n C(l,r)/l.
    const Rational slope = q(C(l, r - 1)) - q(C(l, r)) / q(l);
    if (slope <= 0)
        return std::nullopt;
    const Rational offset = q(C(l, r - 1)) * q(l) - q(C(l, r));
    const Rational threshold = offset / slope;
    Integer n0 = ceil_div(boost::multiprecision::numerator(threshold), boost::multiprecision::denominator(threshold));
    return to_int64(std::max(n0, Integer(0)));
}

} // namespace berge
