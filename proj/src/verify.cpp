#include <berge/bounds.hpp>
#include <berge/constructions.hpp>
#include <berge/containment.hpp>
#include <berge/error.hpp>
#include <berge/io.hpp>
#include <berge/search.hpp>
#include <berge/verify.hpp>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <functional>
#include <random>
#include <set>

namespace berge {

namespace {

using Grid = std::map<std::string, std::vector<std::string>>;

class GridView {
public:
    GridView(const Grid& grid, std::set<std::string> allowed, const std::string& suite) : grid_(grid)
    {
        for (const auto& [key, values] : grid_)
            if (!allowed.contains(key))
                throw Error(ErrorCode::bad_parameters, "suite " + suite + " has no grid key '" + key + "'");
    }

    std::vector<int> ints(const std::string& key, std::vector<int> fallback) const
    {
        auto it = grid_.find(key);
        if (it == grid_.end())
            return fallback;
        std::vector<int> out;
        for (const auto& v : it->second) {
            try {
                std::size_t used = 0;
                out.push_back(std::stoi(v, &used));
                if (used != v.size())
                    throw std::invalid_argument(v);
            } catch (const std::exception&) {
                throw Error(ErrorCode::malformed_input, "grid value '" + v + "' for " + key + " is not an integer");
            }
        }
        return out;
    }

    std::vector<std::string> strings(const std::string& key, std::vector<std::string> fallback) const
    {
        auto it = grid_.find(key);
        return it == grid_.end() ? fallback : it->second;
    }

private:
    const Grid& grid_;
};

std::vector<int> range(int a, int b)
{
    std::vector<int> out;
    for (int i = a; i <= b; ++i)
        out.push_back(i);
    return out;
}

Json params_json(const ParamMap& params)
{
    Json out = Json::object();
    for (const auto& [k, v] : params)
        out[k] = v;
    return out;
}

// ----- constructions ------------------------------------------------------

ReportRow construction_row(const std::string& family, const ParamMap& params)
{
    ReportRow row;
    row.suite = "constructions";
    row.check = family;
    row.inputs = params_json(params);
    ConstructionReport report;
    try {
        report = construct(family, params);
    } catch (const Error& e) {
        row.verdict = Verdict::report;
        row.note = std::string(to_string(e.code())) + ": " + e.what();
        return row;
    }
    const auto count = static_cast<std::int64_t>(report.hypergraph.edge_count());
    row.expected = {{"count", report.predicted_count.str()}};
    row.observed = {{"count", std::to_string(count)}};
    bool ok = Integer(count) == report.predicted_count;
    if (report.freeness_target) {
        const bool found = BergeMatcher(*report.freeness_target).find(report.hypergraph).has_value();
        row.expected["contains"] = false;
        row.observed["contains"] = found;
        row.inputs["target"] = report.freeness_target->to_string();
        ok = ok && !found;
    }
    if (report.claims_connected) {
        const bool connected = is_connected(report.hypergraph);
        row.expected["connected"] = true;
        row.observed["connected"] = connected;
        ok = ok && connected;
    }
    if (family == "partition-regular") {
        const auto degrees = report.hypergraph.degrees();
        const auto d = params.at("d");
        const bool regular = std::all_of(degrees.begin(), degrees.end(), [&](int x) { return x == d; });
        row.expected["regular"] = true;
        row.observed["regular"] = regular;
        ok = ok && regular;
    }
    row.inputs["in_regime"] = report.in_regime;
    row.verdict = ok ? Verdict::pass : Verdict::fail;
    return row;
}

SuiteReport constructions_suite(const Grid& grid)
{
    GridView g(grid, {"family", "n", "l", "k", "r", "l1", "l2", "d"}, "constructions");
    SuiteReport out{"constructions", {}};
    const auto families = g.strings("family", {"hstar", "hhat", "htilde", "clique-blocks", "partition-regular"});
    for (const auto& family : families) {
        if (family == "hstar") {
            for (int n : g.ints("n", range(5, 12)))
                for (int l : g.ints("l", range(1, 3)))
                    for (int k : g.ints("k", {2, 3}))
                        for (int r : g.ints("r", {2, 3}))
                            out.rows.push_back(construction_row(family, {{"n", n}, {"l", l}, {"k", k}, {"r", r}}));
        } else if (family == "hhat") {
            for (int n : g.ints("n", {6, 7, 13, 20}))
                for (int l1 : g.ints("l1", {3, 4}))
                    for (int l2 : g.ints("l2", {2, 3}))
                        for (int k : g.ints("k", {2, 3}))
                            for (int r : g.ints("r", {6, 7, 8}))
                                out.rows.push_back(construction_row(
                                    family, {{"n", n}, {"l1", l1}, {"l2", l2}, {"k", k}, {"r", r}}));
        } else if (family == "htilde") {
            for (int n : g.ints("n", range(4, 9)))
                for (int l1 : g.ints("l1", {1, 3}))
                    for (int l2 : g.ints("l2", {1, 3}))
                        for (int r : g.ints("r", {2, 3}))
                            out.rows.push_back(construction_row(family, {{"n", n}, {"l1", l1}, {"l2", l2}, {"r", r}}));
        } else if (family == "clique-blocks") {
            for (int n : g.ints("n", range(4, 10)))
                for (int l : g.ints("l", range(1, 5)))
                    for (int r : g.ints("r", {2, 3}))
                        out.rows.push_back(construction_row(family, {{"n", n}, {"l", l}, {"r", r}}));
        } else if (family == "partition-regular") {
            for (int n : g.ints("n", {4, 6, 8}))
                for (int r : g.ints("r", {2, 3, 4}))
                    for (int d : g.ints("d", {1, 2, 3}))
                        if (n % r == 0)
                            out.rows.push_back(construction_row(family, {{"n", n}, {"r", r}, {"d", d}}));
        } else {
            throw Error(ErrorCode::bad_parameters, "unknown construction family '" + family + "'");
        }
    }
    return out;
}

// ----- lemma3.1 -----------------------------------------------------------

SuiteReport lemma31_suite(const Grid& grid, const VerifyOptions& opts)
{
    GridView g(grid, {"count", "n", "l", "r"}, "lemma3.1");
    SuiteReport out{"lemma3.1", {}};
    const int count = g.ints("count", {200}).front();
    const auto ns = g.ints("n", range(3, 8));
    const auto ls = g.ints("l", {2, 3, 4});
    const auto rs = g.ints("r", {3});
    std::mt19937_64 rng(opts.rng_seed);

    for (int i = 0; i < count; ++i) {
        const int r = rs[rng() % rs.size()];
        std::vector<int> feasible;
        for (int n : ns)
            if (n >= r)
                feasible.push_back(n);
        if (feasible.empty())
            throw Error(ErrorCode::bad_parameters, "no grid n is at least r");
        const int n = feasible[rng() % feasible.size()];
        const auto percent = 10 + rng() % 81;
        std::vector<VertexSet> edges;
        for_each_subset(VertexSet::range(0, n), r, [&](const VertexSet& s) {
            if (rng() % 100 < percent)
                edges.push_back(s);
            return true;
        });
        const Hypergraph h = Hypergraph::create(n, r, std::move(edges));
        const auto degrees = h.degrees();

        for (int l : ls) {
            const SkeletonGraph star = skeleton_graph(FamilySpec({Component::star(l)}));
            const auto threshold = star_degree_threshold(l, r);
            int above = 0, violations = 0, invalid = 0;
            for (Vertex v = 0; v < n; ++v) {
                auto w = find_berge_star(h, v, l);
                if (w && !validate_witness(h, star, *w).empty())
                    ++invalid;
                if (w && w->vertex_map.front() != v)
                    ++invalid;
                if (degrees[v] > threshold) {
                    ++above;
                    if (!w)
                        ++violations;
                }
            }
            ReportRow row;
            row.suite = "lemma3.1";
            row.check = "star-threshold";
            row.inputs = {{"sample", i}, {"n", n}, {"r", r}, {"edges", h.edge_count()}, {"l", l},
                {"threshold", threshold}};
            row.expected = {{"violations", 0}, {"invalid_witnesses", 0}};
            row.observed = {{"violations", violations}, {"invalid_witnesses", invalid}, {"vertices_above", above}};
            row.verdict = violations == 0 && invalid == 0 ? Verdict::pass : Verdict::fail;
            out.rows.push_back(std::move(row));
        }
    }
    return out;
}

// ----- bounds-vs-search ---------------------------------------------------

struct Shape {
    // Components as (kind, edges); Path(1) doubles as Star(1).
    std::vector<Component> parts;

    bool single_path() const { return parts.size() == 1 && parts[0].kind == ComponentKind::path; }
    bool single_star() const
    {
        return parts.size() == 1 && (parts[0].kind == ComponentKind::star || parts[0].size == 1);
    }
    bool is_star(const Component& c) const
    {
        return c.kind == ComponentKind::star || (c.kind == ComponentKind::path && c.size == 1);
    }
    bool is_edge(const Component& c) const { return c.kind == ComponentKind::path && c.size == 1; }
};

std::vector<std::pair<std::string, ParamMap>> related_bounds(const FamilySpec& f, int n, int r)
{
    std::vector<std::pair<std::string, ParamMap>> out;
    Shape s{f.components()};
    const auto& parts = s.parts;
    const int k = static_cast<int>(parts.size());
    const bool tree_first = parts[0].kind != ComponentKind::graph || is_tree(parts[0].edges);

    if (s.single_path()) {
        out.push_back({"gkl-path-i", {{"n", n}, {"l", parts[0].size}, {"r", r}}});
        out.push_back({"gkl-path-ii", {{"n", n}, {"l", parts[0].size}, {"r", r}}});
    }
    if (s.single_star())
        out.push_back({"star-free", {{"n", n}, {"l", parts[0].size}, {"r", r}}});
    if (std::all_of(parts.begin(), parts.end(), [&](const Component& c) { return s.is_edge(c); })) {
        out.push_back({"berge-matching", {{"n", n}, {"k", k}, {"r", r}}});
    }
    if (k >= 2 && tree_first) {
        const auto& rest = parts[1];
        const bool equal_stars = s.is_star(rest)
            && std::all_of(parts.begin() + 1, parts.end(), [&](const Component& c) { return c == rest; });
        if (equal_stars && rest.edge_count() <= parts[0].edge_count() + 1)
            out.push_back({"tree-stars", {{"n", n}, {"l", parts[0].edge_count()}, {"k", k}, {"r", r}}});
        if (equal_stars && parts[0].kind == ComponentKind::path)
            out.push_back({"path-stars",
                {{"n", n}, {"l1", parts[0].size}, {"l2", rest.edge_count()}, {"k", k}, {"r", r}}});
    }
    int edges = 0, s2 = 0;
    for (const auto& c : parts) {
        edges += s.is_edge(c);
        s2 += c.kind == ComponentKind::star && c.size == 2;
    }
    if (k >= 2 && edges >= 1 && edges + s2 == k)
        out.push_back({"matching-stars", {{"n", n}, {"k", k}, {"r", r}}});
    if (k >= 2 && parts[0].kind == ComponentKind::star && edges == k - 1)
        out.push_back({"star-matching", {{"n", n}, {"l", parts[0].size}, {"k", k}, {"r", r}}});
    if (k == 2 && parts[0].kind == ComponentKind::path && parts[1].kind == ComponentKind::path) {
        if (parts[1].size == 1)
            out.push_back({"two-paths-i", {{"n", n}, {"l", parts[0].size}, {"r", r}}});
        out.push_back({"two-paths-ii", {{"n", n}, {"l1", parts[0].size}, {"l2", parts[1].size}, {"r", r}}});
        if (parts[0] == parts[1])
            out.push_back({"two-equal-paths", {{"n", n}, {"l", parts[0].size}, {"r", r}}});
    }
    return out;
}

// Largest generated construction that is verified free of f.
std::pair<std::int64_t, std::string> best_free_construction(const FamilySpec& f, int n, int r)
{
    const BergeMatcher matcher(f);
    std::int64_t best = 0;
    std::string name = "empty";
    auto consider = [&](const std::function<ConstructionReport()>& make) {
        try {
            auto report = make();
            const auto e = static_cast<std::int64_t>(report.hypergraph.edge_count());
            if (e > best && !matcher.find(report.hypergraph)) {
                best = e;
                name = report.family;
                for (const auto& [k, v] : report.params)
                    name += " " + k + "=" + std::to_string(v);
            }
        } catch (const Error&) {
        }
    };
    for (int l = 1; l <= n; ++l)
        consider([&] { return clique_blocks(n, l, r); });
    for (int l = 1; l < n; ++l)
        for (int k = 2; k <= std::min(4, n + 1); ++k)
            consider([&] { return hstar(n, l, k, r); });
    for (int d = 1; d <= 3; ++d)
        if (n % r == 0)
            consider([&] { return partition_regular(n, r, d); });
    for (int l1 = 2; l1 <= 4; ++l1)
        for (int l2 = 2; l2 <= 4; ++l2)
            for (int k = 2; k <= 3; ++k)
                consider([&] { return hhat(n, l1, l2, k, r); });
    std::vector<int> lengths;
    for (const auto& c : f.components())
        if (c.kind == ComponentKind::path)
            lengths.push_back(c.size);
    if (lengths.size() == f.components().size())
        consider([&] { return htilde(n, lengths, r); });
    return {best, name};
}

SuiteReport bounds_vs_search_suite(const Grid& grid, const VerifyOptions& opts)
{
    GridView g(grid, {"n", "r", "f"}, "bounds-vs-search");
    SuiteReport out{"bounds-vs-search", {}};
    SearchOptions search;
    search.workers = opts.workers;
    search.time_limit_seconds = opts.search_time_limit;

    for (const auto& text : g.strings("f", {"P1", "P2", "P3", "S2", "S3", "M2", "P2+S2"})) {
        const FamilySpec f = FamilySpec::parse(text);
        for (int n : g.ints("n", range(5, 7))) {
            for (int r : g.ints("r", {2, 3})) {
                if (r < 2 || n < r)
                    continue;
                const Json inputs = {{"n", n}, {"r", r}, {"f", f.to_string()}};
                const auto outcome = turan_exact(n, r, f, search);
                const bool exact = outcome.status == SearchStatus::exact;
                const Rational ex(outcome.value);

                auto row = [&](std::string check, Json expected, bool holds, bool asserted, std::string note = {}) {
                    ReportRow rr;
                    rr.suite = "bounds-vs-search";
                    rr.check = std::move(check);
                    rr.inputs = inputs;
                    rr.expected = std::move(expected);
                    rr.observed = {{"search", outcome.value}, {"status", to_string(outcome.status)}};
                    if (asserted && exact)
                        rr.verdict = holds ? Verdict::pass : Verdict::fail;
                    else
                        rr.verdict = Verdict::report;
                    rr.note = std::move(note);
                    if (!exact)
                        rr.note += rr.note.empty() ? "search incomplete" : "; search incomplete";
                    out.rows.push_back(std::move(rr));
                };

                auto [lower, source] = best_free_construction(f, n, r);
                row("construction <= search", {{"construction", lower}, {"source", source}}, lower <= outcome.value,
                    true);

                for (const auto& [id, params] : related_bounds(f, n, r)) {
                    const auto b = eval_bound(id, params);
                    if (!b.applicable) {
                        row(id, {{"applicable", false}, {"reason", b.reason}}, true, false);
                        continue;
                    }
                    Json expected = {{"kind", to_string(b.kind)}, {"value", rational_to_json(*b.value)}};
                    if (b.value_high)
                        expected["value_high"] = rational_to_json(*b.value_high);
                    const bool upper_like = b.kind == BoundKind::upper || b.kind == BoundKind::conditional_exact;
                    if (b.valid_for_all_n && upper_like)
                        row(id + " upper", expected, ex <= *b.value, true);
                    else if (b.valid_for_all_n && b.kind == BoundKind::lower)
                        row(id + " lower", expected, *b.value <= ex, true);
                    if (b.kind == BoundKind::conditional_exact)
                        row(id + " equality", expected, ex == *b.value, false,
                            ex == *b.value ? "agrees at this n" : "differs at this n (hypotheses may not hold)");
                    else if (b.kind == BoundKind::interval)
                        row(id + " interval", expected, *b.value <= ex && ex <= *b.value_high, false);
                }
            }
        }
    }
    return out;
}

// ----- thm2.7-desk --------------------------------------------------------

SuiteReport thm27_suite(const Grid& grid, const VerifyOptions& opts)
{
    GridView g(grid, {"n", "r", "f", "k"}, "thm2.7-desk");
    SuiteReport out{"thm2.7-desk", {}};
    SearchOptions search;
    search.workers = opts.workers;
    search.time_limit_seconds = opts.search_time_limit;

    for (const auto& text : g.strings("f", {"S2", "P2"})) {
        const FamilySpec f = FamilySpec::parse(text);
        const auto sk = skeleton_graph(f);
        const auto deg = sk.degrees();
        const int w = static_cast<int>(std::count_if(deg.begin(), deg.end(), [](int d) { return d > 1; }));
        const bool matching = std::all_of(deg.begin(), deg.end(), [](int d) { return d <= 1; });
        const bool cyclic = !f.is_forest();
        for (int k : g.ints("k", {2})) {
            if (k < 2)
                throw Error(ErrorCode::bad_parameters, "k must be at least 2");
            std::vector<Component> parts = f.components();
            for (int i = 0; i < k - 1; ++i)
                parts.push_back(Component::path(1));
            const FamilySpec augmented(std::move(parts));
            for (int r : g.ints("r", {3})) {
                Json clauses = Json::array();
                if (!matching && r >= k + sk.vertex_count)
                    clauses.push_back("i");
                if (cyclic && r > k)
                    clauses.push_back("ii");
                if (w >= 1 && w <= r - 1 && r > k + w - 1)
                    clauses.push_back("iii");
                for (int n : g.ints("n", {5, 6})) {
                    if (n < r || r < 2)
                        continue;
                    const auto base = turan_exact(n, r, f, search);
                    const auto with = turan_exact(n, r, augmented, search);
                    ReportRow row;
                    row.suite = "thm2.7-desk";
                    row.check = "ex(F + M_{k-1}) = ex(F)";
                    row.inputs = {{"n", n}, {"r", r}, {"k", k}, {"f", f.to_string()},
                        {"augmented", augmented.to_string()}, {"clauses", clauses}};
                    row.expected = {{"ex_f", base.value}, {"status", to_string(base.status)}};
                    row.observed = {{"ex_augmented", with.value}, {"status", to_string(with.status)}};
                    row.verdict = Verdict::report;
                    row.note = base.value == with.value ? "equal at this n" : "differ at this n";
                    if (clauses.empty())
                        row.note += "; no clause hypothesis holds";
                    out.rows.push_back(std::move(row));
                }
            }
        }
    }
    return out;
}

} // namespace

std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::report: return "report";
    }
    return "report";
}

std::size_t SuiteReport::count(Verdict v) const
{
    return static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(), [v](const ReportRow& r) { return r.verdict == v; }));
}

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

} // namespace

Grid parse_grid(std::string_view text)
{
    Grid out;
    std::size_t pos = 0;
    auto fail = [&](const std::string& what) {
        throw Error(ErrorCode::malformed_input, what + " at position " + std::to_string(pos), pos);
    };
    while (pos < text.size()) {
        const std::size_t end = std::min(text.find(';', pos), text.size());
        const std::string_view item = text.substr(pos, end - pos);
        const std::size_t eq = item.find('=');
        if (eq == std::string_view::npos || trim(item.substr(0, eq)).empty())
            fail("expected key=values");
        const std::string key(trim(item.substr(0, eq)));
        const std::string_view values = trim(item.substr(eq + 1));
        std::vector<std::string> list;
        if (const auto dots = values.find(".."); dots != std::string_view::npos) {
            auto bound = [&](std::string_view part) {
                const std::string t(trim(part));
                std::size_t used = 0;
                int v = 0;
                try {
                    v = std::stoi(t, &used);
                } catch (const std::exception&) {
                    fail("bad range for " + key);
                }
                if (used != t.size())
                    fail("bad range for " + key);
                return v;
            };
            const int a = bound(values.substr(0, dots));
            const int b = bound(values.substr(dots + 2));
            if (b < a)
                fail("empty range for " + key);
            for (int i = a; i <= b; ++i)
                list.push_back(std::to_string(i));
        } else {
            std::size_t start = 0;
            while (true) {
                const std::size_t bar = values.find('|', start);
                list.emplace_back(trim(values.substr(start, bar == std::string_view::npos ? bar : bar - start)));
                if (list.back().empty())
                    fail("empty value for " + key);
                if (bar == std::string_view::npos)
                    break;
                start = bar + 1;
            }
        }
        if (out.contains(key))
            fail("repeated key " + key);
        out[key] = std::move(list);
        pos = end + 1;
    }
    return out;
}

const std::vector<std::string>& suite_ids()
{
    static const std::vector<std::string> ids = {"constructions", "lemma3.1", "bounds-vs-search", "thm2.7-desk"};
    return ids;
}

SuiteReport verify_suite(const std::string& suite, std::string_view grid_text, const VerifyOptions& opts)
{
    if (std::find(suite_ids().begin(), suite_ids().end(), suite) == suite_ids().end())
        throw Error(ErrorCode::unknown_suite, "unknown suite '" + suite + "'");
    const Grid grid = parse_grid(grid_text);
    if (suite == "constructions")
        return constructions_suite(grid);
    if (suite == "lemma3.1")
        return lemma31_suite(grid, opts);
    if (suite == "bounds-vs-search")
        return bounds_vs_search_suite(grid, opts);
    return thm27_suite(grid, opts);
}

std::string summary_table(const SuiteReport& report)
{
    std::string out;
    char line[512];
    std::snprintf(line, sizeof line, "%-18s %-28s %-7s %s\n", "suite", "check", "verdict", "inputs");
    out += line;
    for (const auto& row : report.rows) {
        std::snprintf(line, sizeof line, "%-18s %-28s %-7s ", row.suite.c_str(), row.check.c_str(),
            std::string(to_string(row.verdict)).c_str());
        out += line + row.inputs.dump() + "\n";
    }
    std::snprintf(line, sizeof line, "total %zu: %zu pass, %zu fail, %zu report\n", report.rows.size(),
        report.count(Verdict::pass), report.count(Verdict::fail), report.count(Verdict::report));
    out += line;
    return out;
}

} // namespace berge
