#include <berge/containment.hpp>

#include <algorithm>
#include <numeric>

namespace berge {

namespace {

struct SkeletonAdjacency {
    std::vector<std::vector<std::pair<int, int>>> out; // (neighbour, skeleton edge)
    std::vector<std::vector<int>> neighbours;          // sorted

    explicit SkeletonAdjacency(const SkeletonGraph& g) : out(g.vertex_count), neighbours(g.vertex_count)
    {
        for (int s = 0; s < static_cast<int>(g.edges.size()); ++s) {
            auto [u, v] = g.edges[s];
            out[u].emplace_back(v, s);
            out[v].emplace_back(u, s);
            neighbours[u].push_back(v);
            neighbours[v].push_back(u);
        }
        for (auto& n : neighbours)
            std::sort(n.begin(), n.end());
    }

    bool twins(int u, int w) const
    {
        if (neighbours[u] == neighbours[w])
            return true;
        auto closed = [&](int x) {
            auto c = neighbours[x];
            c.insert(std::lower_bound(c.begin(), c.end(), x), x);
            return c;
        };
        return closed(u) == closed(w);
    }
};

int part_of(const SkeletonGraph& g, int vertex)
{
    for (int p = 0; p < static_cast<int>(g.parts.size()); ++p)
        if (vertex >= g.parts[p].first_vertex && vertex < g.parts[p].first_vertex + g.parts[p].vertex_count)
            return p;
    return -1;
}

// Extends `order` over one component: seeds first, then repeatedly the
// unplaced vertex with the most placed neighbours (then highest degree, then
// lowest label).
void order_component(const SkeletonGraph& g, const SkeletonAdjacency& adj, const SkeletonGraph::Part& part,
    std::vector<int> seeds, std::vector<int>& order)
{
    std::vector<char> placed(g.vertex_count, 0);
    for (int s : seeds) {
        order.push_back(s);
        placed[s] = 1;
    }
    const int last = part.first_vertex + part.vertex_count;
    for (int step = static_cast<int>(seeds.size()); step < part.vertex_count; ++step) {
        int best = -1, best_links = -1, best_degree = -1;
        for (int v = part.first_vertex; v < last; ++v) {
            if (placed[v])
                continue;
            int links = 0;
            for (int w : adj.neighbours[v])
                links += placed[w];
            int degree = static_cast<int>(adj.neighbours[v].size());
            if (links > best_links || (links == best_links && degree > best_degree)) {
                best = v;
                best_links = links;
                best_degree = degree;
            }
        }
        order.push_back(best);
        placed[best] = 1;
    }
}

int max_degree_vertex(const SkeletonAdjacency& adj, const SkeletonGraph::Part& part)
{
    int best = part.first_vertex;
    for (int v = part.first_vertex; v < part.first_vertex + part.vertex_count; ++v)
        if (adj.neighbours[v].size() > adj.neighbours[best].size())
            best = v;
    return best;
}

BergeMatcher::Plan make_plan(const FamilySpec& family, const SkeletonGraph& g, const SkeletonAdjacency& adj, int forced)
{
    BergeMatcher::Plan plan;
    plan.forced = forced;
    plan.on_forced.assign(g.vertex_count, 0);
    int forced_part = -1;
    if (forced >= 0) {
        auto [a, b] = g.edges[forced];
        plan.on_forced[a] = plan.on_forced[b] = 1;
        forced_part = part_of(g, a);
        order_component(g, adj, g.parts[forced_part], {a, b}, plan.order);
    }
    for (int p = 0; p < static_cast<int>(g.parts.size()); ++p)
        if (p != forced_part)
            order_component(g, adj, g.parts[p], {max_degree_vertex(adj, g.parts[p])}, plan.order);

    std::vector<int> position(g.vertex_count);
    for (int i = 0; i < g.vertex_count; ++i)
        position[plan.order[i]] = i;
    plan.smaller_than.assign(g.vertex_count, {});

    // Twin transpositions that keep the forced edge in place: consecutive
    // members of a twin class (in placement order) must map increasingly.
    auto swap_allowed = [&](int u, int w) {
        if (forced < 0)
            return true;
        bool fu = plan.on_forced[u], fw = plan.on_forced[w];
        return (!fu && !fw) || (fu && fw);
    };
    for (int i = 0; i < g.vertex_count; ++i) {
        int u = plan.order[i];
        for (int j = i - 1; j >= 0; --j) {
            int w = plan.order[j];
            if (part_of(g, w) == part_of(g, u) && adj.twins(u, w) && swap_allowed(u, w)) {
                plan.smaller_than[i].push_back(w);
                break;
            }
        }
    }

    // Identical components (other than the forced one) are interchangeable;
    // their first placed vertices must map increasingly.
    const auto& comps = family.components();
    int previous = -1;
    for (int p = 0; p < static_cast<int>(comps.size()); ++p) {
        if (p == forced_part)
            continue;
        if (previous >= 0 && comps[previous] == comps[p]) {
            int root_prev = max_degree_vertex(adj, g.parts[previous]);
            int root = max_degree_vertex(adj, g.parts[p]);
            plan.smaller_than[position[root]].push_back(root_prev);
        }
        previous = p;
    }
    return plan;
}

// Representatives of skeleton-edge orbits under the symmetries the planner
// knows about (twin swaps, identical-component swaps, path reversal).
std::vector<int> edge_orbit_representatives(const FamilySpec& family, const SkeletonGraph& g, const SkeletonAdjacency& adj)
{
    const int m = static_cast<int>(g.edges.size());
    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    auto edge_index = [&](int u, int v) {
        for (auto [w, s] : adj.out[u])
            if (w == v)
                return s;
        return -1;
    };

    for (int u = 0; u < g.vertex_count; ++u) {
        for (int w = u + 1; w < g.vertex_count; ++w) {
            if (part_of(g, u) != part_of(g, w) || !adj.twins(u, w))
                continue;
            for (auto [x, s] : adj.out[u]) {
                int image = edge_index(w, x == w ? u : x);
                if (image >= 0)
                    unite(s, image);
            }
        }
    }
    const auto& comps = family.components();
    for (int p = 0; p < static_cast<int>(comps.size()); ++p) {
        const auto& part = g.parts[p];
        if (comps[p].kind == ComponentKind::path)
            for (int i = 0; i < part.edge_count; ++i)
                unite(part.first_edge + i, part.first_edge + part.edge_count - 1 - i);
        for (int q = p + 1; q < static_cast<int>(comps.size()); ++q)
            if (comps[p] == comps[q])
                for (int i = 0; i < part.edge_count; ++i)
                    unite(part.first_edge + i, g.parts[q].first_edge + i);
    }
    std::vector<int> reps;
    for (int s = 0; s < m; ++s)
        if (find(s) == s)
            reps.push_back(s);
    // Representative = smallest index of its class.
    std::vector<int> smallest(m, m);
    for (int s = 0; s < m; ++s)
        smallest[find(s)] = std::min(smallest[find(s)], s);
    reps.clear();
    for (int s = 0; s < m; ++s)
        if (smallest[find(s)] == s)
            reps.push_back(s);
    return reps;
}

class Embedder {
public:
    Embedder(const SkeletonGraph& g, const SkeletonAdjacency& adj, const BergeMatcher::Plan& plan, const Hypergraph& h,
        int must_use)
        : g_(g), adj_(adj), plan_(plan), h_(h), must_use_(must_use), n_(h.vertex_count()),
          host_edges_(static_cast<int>(h.edge_count())), incident_(n_), neighbours_(n_),
          image_(g.vertex_count, -1), match_row_(g.edges.size(), -1), match_col_(h.edge_count(), -1),
          seen_(h.edge_count(), 0)
    {
        for (int c = 0; c < host_edges_; ++c) {
            h.edge(c).for_each([&](Vertex x) {
                incident_[x].push_back(c);
                neighbours_[x] |= h.edge(c);
            });
        }
        for (int x = 0; x < n_; ++x)
            neighbours_[x].erase(x);
        skeleton_degree_.resize(g.vertex_count);
        for (int u = 0; u < g.vertex_count; ++u)
            skeleton_degree_[u] = static_cast<int>(adj.neighbours[u].size());
    }

    std::optional<BergeWitness> run()
    {
        if (static_cast<int>(g_.edges.size()) > host_edges_ || g_.vertex_count > n_)
            return std::nullopt;
        if (!place(0))
            return std::nullopt;
        return BergeWitness{image_, match_row_};
    }

private:
    bool compatible(int s, int c) const
    {
        if (s == plan_.forced)
            return c == must_use_;
        if (c == must_use_)
            return false;
        auto [a, b] = g_.edges[s];
        const auto& e = h_.edge(c);
        return (image_[a] < 0 || e.contains(image_[a])) && (image_[b] < 0 || e.contains(image_[b]));
    }

    bool augment(int s)
    {
        if (s == plan_.forced)
            return try_column(s, must_use_);
        auto [a, b] = g_.edges[s];
        int anchor = image_[a] >= 0 ? image_[a] : image_[b];
        if (image_[a] >= 0 && image_[b] >= 0 && incident_[image_[b]].size() < incident_[image_[a]].size())
            anchor = image_[b];
        for (int c : incident_[anchor])
            if (try_column(s, c))
                return true;
        return false;
    }

    bool try_column(int s, int c)
    {
        if (seen_[c] == stamp_ || !compatible(s, c))
            return false;
        seen_[c] = stamp_;
        if (match_col_[c] < 0 || augment(match_col_[c])) {
            match_row_[s] = c;
            match_col_[c] = s;
            return true;
        }
        return false;
    }

    bool place(int depth)
    {
        if (depth == g_.vertex_count)
            return true;
        const int u = plan_.order[depth];

        VertexSet candidates = VertexSet::range(0, n_) - used_;
        for (int w : adj_.neighbours[u])
            if (image_[w] >= 0)
                candidates &= neighbours_[image_[w]];
        if (plan_.on_forced[u])
            candidates &= h_.edge(must_use_);
        Vertex floor = -1;
        for (int w : plan_.smaller_than[depth])
            floor = std::max(floor, image_[w]);

        for (Vertex x = candidates.next(floor + 1); x != -1; x = candidates.next(x + 1)) {
            if (static_cast<int>(incident_[x].size()) < skeleton_degree_[u])
                continue;
            const auto saved_rows = match_row_;
            const auto saved_cols = match_col_;
            image_[u] = x;
            used_.insert(x);

            bool ok = true;
            for (auto [w, s] : adj_.out[u]) {
                int c = match_row_[s];
                if (c >= 0 && !compatible(s, c)) {
                    match_row_[s] = -1;
                    match_col_[c] = -1;
                }
            }
            for (auto [w, s] : adj_.out[u]) {
                if (match_row_[s] >= 0)
                    continue;
                ++stamp_;
                if (!augment(s)) {
                    ok = false;
                    break;
                }
            }
            if (ok && place(depth + 1))
                return true;

            used_.erase(x);
            image_[u] = -1;
            match_row_ = saved_rows;
            match_col_ = saved_cols;
        }
        return false;
    }

    const SkeletonGraph& g_;
    const SkeletonAdjacency& adj_;
    const BergeMatcher::Plan& plan_;
    const Hypergraph& h_;
    const int must_use_;
    const int n_;
    const int host_edges_;
    std::vector<std::vector<int>> incident_;
    std::vector<VertexSet> neighbours_;
    std::vector<int> skeleton_degree_;

    std::vector<Vertex> image_;
    VertexSet used_;
    std::vector<int> match_row_;
    std::vector<int> match_col_;
    std::vector<unsigned> seen_;
    unsigned stamp_ = 0;
};

} // namespace

BergeMatcher::BergeMatcher(const FamilySpec& family) : family_(family), skeleton_(skeleton_graph(family))
{
    SkeletonAdjacency adj(skeleton_);
    plans_.push_back(make_plan(family_, skeleton_, adj, -1));
    forced_edges_ = edge_orbit_representatives(family_, skeleton_, adj);
    for (int s : forced_edges_)
        plans_.push_back(make_plan(family_, skeleton_, adj, s));
}

std::optional<BergeWitness> BergeMatcher::find(const Hypergraph& h) const
{
    SkeletonAdjacency adj(skeleton_);
    return Embedder(skeleton_, adj, plans_[0], h, -1).run();
}

std::optional<BergeWitness> BergeMatcher::find_using(const Hypergraph& h, std::size_t must_use) const
{
    if (must_use >= h.edge_count())
        throw Error(ErrorCode::index_out_of_range,
            "edge index " + std::to_string(must_use) + " out of range for " + std::to_string(h.edge_count()) + " edges");
    SkeletonAdjacency adj(skeleton_);
    for (std::size_t i = 0; i < forced_edges_.size(); ++i) {
        auto w = Embedder(skeleton_, adj, plans_[1 + i], h, static_cast<int>(must_use)).run();
        if (w)
            return w;
    }
    return std::nullopt;
}

std::optional<BergeWitness> contains(const Hypergraph& h, const FamilySpec& f)
{
    return BergeMatcher(f).find(h);
}

std::optional<BergeWitness> contains_using(const Hypergraph& h, const FamilySpec& f, std::size_t must_use)
{
    return BergeMatcher(f).find_using(h, must_use);
}

std::optional<BergeWitness> find_berge_star(const Hypergraph& h, Vertex center, int l)
{
    if (center < 0 || center >= h.vertex_count())
        throw Error(ErrorCode::vertex_out_of_range, "center " + std::to_string(center) + " out of range");
    if (l < 1)
        throw Error(ErrorCode::bad_parameters, "star size must be at least 1");

    std::vector<int> through;
    for (int c = 0; c < static_cast<int>(h.edge_count()); ++c)
        if (h.edge(c).contains(center))
            through.push_back(c);
    if (static_cast<int>(through.size()) < l)
        return std::nullopt;

    // Kuhn's algorithm: edges through the center on the left, leaf vertices
    // on the right.
    std::vector<int> leaf_of(through.size(), -1);
    std::vector<int> owner(h.vertex_count(), -1);
    std::vector<int> seen(h.vertex_count(), -1);
    auto augment = [&](auto&& self, int i, int stamp) -> bool {
        VertexSet options = h.edge(through[i]);
        options.erase(center);
        for (Vertex x = options.first(); x != -1; x = options.next(x + 1)) {
            if (seen[x] == stamp)
                continue;
            seen[x] = stamp;
            if (owner[x] < 0 || self(self, owner[x], stamp)) {
                owner[x] = i;
                leaf_of[i] = x;
                return true;
            }
        }
        return false;
    };
    int matched = 0;
    for (int i = 0; i < static_cast<int>(through.size()) && matched < l; ++i)
        matched += augment(augment, i, i);
    if (matched < l)
        return std::nullopt;

    BergeWitness w;
    w.vertex_map.push_back(center);
    for (std::size_t i = 0; i < through.size() && static_cast<int>(w.edge_map.size()) < l; ++i) {
        if (leaf_of[i] < 0)
            continue;
        w.vertex_map.push_back(leaf_of[i]);
        w.edge_map.push_back(through[i]);
    }
    return w;
}

std::string validate_witness(const Hypergraph& h, const SkeletonGraph& g, const BergeWitness& w)
{
    if (static_cast<int>(w.vertex_map.size()) != g.vertex_count)
        return "vertex map has " + std::to_string(w.vertex_map.size()) + " entries, skeleton has "
            + std::to_string(g.vertex_count) + " vertices";
    if (w.edge_map.size() != g.edges.size())
        return "edge map has " + std::to_string(w.edge_map.size()) + " entries, skeleton has "
            + std::to_string(g.edges.size()) + " edges";
    VertexSet hit;
    for (Vertex x : w.vertex_map) {
        if (x < 0 || x >= h.vertex_count())
            return "vertex map leaves the host";
        if (hit.contains(x))
            return "vertex map is not injective at host vertex " + std::to_string(x);
        hit.insert(x);
    }
    std::vector<char> used(h.edge_count(), 0);
    for (std::size_t s = 0; s < g.edges.size(); ++s) {
        int c = w.edge_map[s];
        if (c < 0 || c >= static_cast<int>(h.edge_count()))
            return "edge map leaves the host";
        if (used[c])
            return "edge map is not injective at host edge " + std::to_string(c);
        used[c] = 1;
        auto [u, v] = g.edges[s];
        if (!h.edge(c).contains(w.vertex_map[u]) || !h.edge(c).contains(w.vertex_map[v]))
            return "host edge " + std::to_string(c) + " misses an endpoint of skeleton edge " + std::to_string(s);
    }
    return {};
}

} // namespace berge
