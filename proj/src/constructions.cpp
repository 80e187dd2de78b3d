#include <berge/constructions.hpp>
#include <berge/error.hpp>

#include <algorithm>
#include <set>

namespace berge {

namespace {

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw Error(ErrorCode::bad_parameters, what);
}

void require_vertex_count(int n)
{
    require(n >= 0 && n <= max_vertices,
        "vertex count " + std::to_string(n) + " outside 0.." + std::to_string(max_vertices));
}

void add_all_subsets(std::set<VertexSet>& out, const VertexSet& ground, int r)
{
    for_each_subset(ground, r, [&](const VertexSet& s) {
        out.insert(s);
        return true;
    });
}

Hypergraph build(int n, int r, const std::set<VertexSet>& edges)
{
    return Hypergraph::create(n, r, std::vector<VertexSet>(edges.begin(), edges.end()));
}

void check_count(const ConstructionReport& report)
{
    if (Integer(report.hypergraph.edge_count()) != report.predicted_count)
        throw Error(ErrorCode::bad_parameters,
            report.family + " produced " + std::to_string(report.hypergraph.edge_count()) + " edges, expected "
                + report.predicted_count.str());
}

FamilySpec tree_plus_stars(const Component& tree, int copies, int star)
{
    std::vector<Component> parts{tree};
    for (int i = 0; i < copies; ++i)
        parts.push_back(Component::star(star));
    return FamilySpec(std::move(parts));
}

// Lexicographically first perfect partition of `free` into r-sets avoiding
// `used`; blocks are appended to `blocks`.
bool next_partition(VertexSet free, int r, const std::set<VertexSet>& used, std::vector<VertexSet>& blocks)
{
    if (free.empty())
        return true;
    const Vertex anchor = free.first();
    VertexSet rest = free;
    rest.erase(anchor);
    bool found = false;
    for_each_subset(rest, r - 1, [&](VertexSet s) {
        s.insert(anchor);
        if (used.contains(s))
            return true;
        blocks.push_back(s);
        if (next_partition(free - s, r, used, blocks)) {
            found = true;
            return false;
        }
        blocks.pop_back();
        return true;
    });
    return found;
}

} // namespace

ConstructionReport hstar(int n, int l, int k, int r, std::optional<Component> tree)
{
    require(k >= 2 && l >= 1 && r >= 2 && n >= k - 1, "hstar needs k >= 2, l >= 1, r >= 2 and n >= k-1");
    require_vertex_count(n);
    const VertexSet core = VertexSet::range(0, k - 1);
    const int classes = (n - k + 1) / l;
    std::set<VertexSet> edges;
    for (int c = 0; c < classes; ++c)
        add_all_subsets(edges, core | VertexSet::range(k - 1 + c * l, k - 1 + (c + 1) * l), r);
    add_all_subsets(edges, core | VertexSet::range(k - 1 + classes * l, n), r);

    ConstructionReport report;
    report.family = "hstar";
    report.params = {{"n", n}, {"l", l}, {"k", k}, {"r", r}};
    report.in_regime = r <= k + l - 1;
    report.predicted_count = (binom_zero(l + k - 1, r) - binom_zero(k - 1, r)) * classes
        + binom_zero(n - static_cast<std::int64_t>(l) * classes, r);
    report.hypergraph = build(n, r, edges);
    report.freeness_target = tree_plus_stars(tree.value_or(Component::path(l)), k - 1, l);
    check_count(report);
    return report;
}

ConstructionReport hhat(int n, int l1, int l2, int k, int r, std::optional<Component> tree)
{
    require(k >= 2 && l1 >= 2 && l2 >= 2, "hhat needs k >= 2 and l1, l2 >= 2");
    require(r >= k, "hhat needs r >= k");
    require(n >= k - 1, "hhat needs n >= k-1");
    require_vertex_count(n);
    const int lmin = std::min(l1, l2);
    const int width = r - k + 2;
    require(lmin - 1 <= width, "hhat needs l_min - 1 <= r-k+2 subsets per class");
    const VertexSet core = VertexSet::range(0, k - 1);
    const int classes = (n - k + 1) / width;
    std::set<VertexSet> edges;
    for (int c = 0; c < classes; ++c) {
        int taken = 0;
        const VertexSet cls = VertexSet::range(k - 1 + c * width, k - 1 + (c + 1) * width);
        for_each_subset(cls, width - 1, [&](const VertexSet& s) {
            if (taken == lmin - 1)
                return false;
            edges.insert(s | core);
            ++taken;
            return true;
        });
    }

    ConstructionReport report;
    report.family = "hhat";
    report.params = {{"n", n}, {"l1", l1}, {"l2", l2}, {"k", k}, {"r", r}};
    report.in_regime = r >= l1 + l2 + k - 1;
    report.predicted_count = Integer(lmin - 1) * classes;
    report.hypergraph = build(n, r, edges);
    report.freeness_target = tree_plus_stars(tree.value_or(Component::path(l1)), k - 1, l2);
    check_count(report);
    return report;
}

ConstructionReport htilde(int n, const std::vector<int>& lengths, int r)
{
    require(!lengths.empty(), "htilde needs at least one path length");
    require(r >= 2, "htilde needs r >= 2");
    int total = 0;
    for (int l : lengths) {
        require(l >= 1, "path lengths must be positive");
        total += l + 1;
    }
    if (total % 2 != 0)
        throw Error(ErrorCode::odd_total, "sum of (l_i + 1) is " + std::to_string(total) + ", which is odd");
    const int a = total / 2 - 1;
    require(n > a, "htilde needs n > |A~| = " + std::to_string(a));
    require_vertex_count(n);
    const VertexSet core = VertexSet::range(0, a);
    std::set<VertexSet> edges;
    for (int u = a; u < n; ++u)
        add_all_subsets(edges, core | VertexSet{u}, r);

    ConstructionReport report;
    report.family = "htilde";
    report.params = {{"n", n}, {"r", r}};
    for (std::size_t i = 0; i < lengths.size(); ++i)
        report.params["l" + std::to_string(i + 1)] = lengths[i];
    const bool all_odd = std::all_of(lengths.begin(), lengths.end(), [](int l) { return l % 2 == 1; });
    report.in_regime = lengths.size() >= 2 && all_odd && r >= 3 && r <= total / 2 - 7;
    report.predicted_count = binom_zero(a, r - 1) * (n - a) + binom_zero(a, r);
    report.hypergraph = build(n, r, edges);
    std::vector<Component> paths;
    for (int l : lengths)
        paths.push_back(Component::path(l));
    report.freeness_target = FamilySpec(std::move(paths));
    report.claims_connected = a >= r - 1;
    check_count(report);
    return report;
}

ConstructionReport clique_blocks(int n, int l, int r)
{
    require(l >= 1 && r >= 1 && n >= 0, "clique_blocks needs l >= 1, r >= 1 and n >= 0");
    require_vertex_count(n);
    std::set<VertexSet> edges;
    for (int start = 0; start < n; start += l)
        add_all_subsets(edges, VertexSet::range(start, std::min(n, start + l)), r);

    ConstructionReport report;
    report.family = "clique-blocks";
    report.params = {{"n", n}, {"l", l}, {"r", r}};
    report.in_regime = l >= r + 1 && r + 1 > 3;
    report.predicted_count = Integer(n / l) * binom_zero(l, r) + binom_zero(n % l, r);
    report.hypergraph = build(n, r, edges);
    report.freeness_target = FamilySpec({Component::path(l)});
    check_count(report);
    return report;
}

ConstructionReport partition_regular(int n, int r, int d)
{
    require(r >= 1 && d >= 1 && n >= r, "partition_regular needs r >= 1, d >= 1 and n >= r");
    require(n % r == 0, std::to_string(r) + " does not divide " + std::to_string(n));
    require_vertex_count(n);

    std::set<VertexSet> edges;
    int found = 0;
    for (int shift = 0; shift < n && found < d; ++shift) {
        std::vector<VertexSet> blocks;
        for (int b = 0; b < n / r; ++b) {
            VertexSet block;
            for (int t = 0; t < r; ++t)
                block.insert((b * r + t + shift) % n);
            blocks.push_back(block);
        }
        if (std::none_of(blocks.begin(), blocks.end(), [&](const VertexSet& e) { return edges.contains(e); })) {
            edges.insert(blocks.begin(), blocks.end());
            ++found;
        }
    }
    while (found < d) {
        std::vector<VertexSet> blocks;
        if (!next_partition(VertexSet::range(0, n), r, edges, blocks))
            throw Error(ErrorCode::colliding_shifts,
                "only " + std::to_string(found) + " edge-disjoint partitions found, " + std::to_string(d) + " requested");
        edges.insert(blocks.begin(), blocks.end());
        ++found;
    }

    ConstructionReport report;
    report.family = "partition-regular";
    report.params = {{"n", n}, {"r", r}, {"d", d}};
    report.in_regime = true;
    report.predicted_count = Integer(d) * (n / r);
    report.hypergraph = build(n, r, edges);
    check_count(report);
    return report;
}

ConstructionReport construct(const std::string& family, const ParamMap& params)
{
    auto get = [&](const std::string& key) {
        auto it = params.find(key);
        if (it == params.end())
            throw Error(ErrorCode::missing_param, "missing parameter '" + key + "'");
        if (it->second < -1'000'000 || it->second > 1'000'000)
            throw Error(ErrorCode::bad_parameters, "parameter '" + key + "' out of range");
        return static_cast<int>(it->second);
    };
    if (family == "hstar")
        return hstar(get("n"), get("l"), get("k"), get("r"));
    if (family == "hhat")
        return hhat(get("n"), get("l1"), get("l2"), get("k"), get("r"));
    if (family == "htilde") {
        std::vector<int> lengths;
        for (int i = 1; params.contains("l" + std::to_string(i)); ++i)
            lengths.push_back(get("l" + std::to_string(i)));
        if (lengths.empty())
            get("l1");
        return htilde(get("n"), lengths, get("r"));
    }
    if (family == "clique-blocks")
        return clique_blocks(get("n"), get("l"), get("r"));
    if (family == "partition-regular")
        return partition_regular(get("n"), get("r"), get("d"));
    throw Error(ErrorCode::bad_parameters, "unknown construction family '" + family + "'");
}

} // namespace berge
