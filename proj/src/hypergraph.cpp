#include <berge/hypergraph.hpp>

#include <algorithm>
#include <map>
#include <string>
#include <unordered_set>

namespace berge {

namespace {

void check_shape(int n, int r)
{
    if (n < 0 || n > max_vertices)
        throw Error(ErrorCode::vertex_out_of_range,
            "vertex count " + std::to_string(n) + " outside 0.." + std::to_string(max_vertices));
    if (r < 1)
        throw Error(ErrorCode::bad_parameters, "uniformity must be at least 1");
}

void check_edge(int n, int r, const VertexSet& e)
{
    if (e.last() >= n)
        throw Error(ErrorCode::vertex_out_of_range,
            "vertex " + std::to_string(e.last()) + " not below n=" + std::to_string(n));
    if (e.size() != r)
        throw Error(ErrorCode::wrong_edge_size,
            "edge has " + std::to_string(e.size()) + " vertices, expected " + std::to_string(r));
}

} // namespace

Hypergraph Hypergraph::create(int n, int r, const std::vector<std::vector<Vertex>>& edges)
{
    check_shape(n, r);
    std::vector<VertexSet> sets;
    sets.reserve(edges.size());
    for (const auto& e : edges) {
        VertexSet s;
        for (Vertex v : e) {
            if (v < 0 || v >= n)
                throw Error(ErrorCode::vertex_out_of_range,
                    "vertex " + std::to_string(v) + " not below n=" + std::to_string(n));
            if (s.contains(v))
                throw Error(ErrorCode::wrong_edge_size, "edge lists vertex " + std::to_string(v) + " twice");
            s.insert(v);
        }
        sets.push_back(s);
    }
    return create(n, r, std::move(sets));
}

Hypergraph Hypergraph::create(int n, int r, std::vector<VertexSet> edges)
{
    check_shape(n, r);
    for (const auto& e : edges)
        check_edge(n, r, e);
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end()) {
        std::string list;
        for (auto v : dup->elements())
            list += (list.empty() ? "" : ",") + std::to_string(v);
        throw Error(ErrorCode::duplicate_edge, "duplicate edge {" + list + "}");
    }
    return Hypergraph(n, r, std::move(edges));
}

Hypergraph Hypergraph::empty(int n, int r)
{
    check_shape(n, r);
    return Hypergraph(n, r, {});
}

Hypergraph Hypergraph::complete(int n, int r)
{
    check_shape(n, r);
    std::vector<VertexSet> edges;
    for_each_subset(VertexSet::range(0, n), r, [&](const VertexSet& s) {
        edges.push_back(s);
        return true;
    });
    return Hypergraph(n, r, std::move(edges));
}

int Hypergraph::degree(Vertex v) const
{
    if (v < 0 || v >= n_)
        throw Error(ErrorCode::vertex_out_of_range, "vertex " + std::to_string(v) + " out of range");
    return static_cast<int>(std::count_if(edges_.begin(), edges_.end(),
        [v](const VertexSet& e) { return e.contains(v); }));
}

std::vector<int> Hypergraph::degrees() const
{
    std::vector<int> d(n_, 0);
    for (const auto& e : edges_)
        e.for_each([&](Vertex v) { ++d[v]; });
    return d;
}

int Hypergraph::find_edge(const VertexSet& e) const
{
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e)
        return -1;
    return static_cast<int>(it - edges_.begin());
}

Hypergraph Hypergraph::with_edge(const VertexSet& e) const
{
    check_edge(n_, r_, e);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e)
        throw Error(ErrorCode::duplicate_edge, "edge already present");
    std::vector<VertexSet> edges;
    edges.reserve(edges_.size() + 1);
    edges.insert(edges.end(), edges_.begin(), it);
    edges.push_back(e);
    edges.insert(edges.end(), it, edges_.end());
    return Hypergraph(n_, r_, std::move(edges));
}

Hypergraph Hypergraph::without_edge(std::size_t index) const
{
    if (index >= edges_.size())
        throw Error(ErrorCode::index_out_of_range, "edge index " + std::to_string(index) + " out of range");
    auto edges = edges_;
    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(index));
    return Hypergraph(n_, r_, std::move(edges));
}

Hypergraph Hypergraph::relabeled(std::span<const Vertex> perm) const
{
    if (static_cast<int>(perm.size()) != n_)
        throw Error(ErrorCode::bad_parameters, "permutation size differs from vertex count");
    VertexSet seen;
    for (Vertex v : perm) {
        if (v < 0 || v >= n_ || seen.contains(v))
            throw Error(ErrorCode::bad_parameters, "not a permutation of the vertex set");
        seen.insert(v);
    }
    std::vector<VertexSet> edges;
    edges.reserve(edges_.size());
    for (const auto& e : edges_) {
        VertexSet image;
        e.for_each([&](Vertex v) { image.insert(perm[v]); });
        edges.push_back(image);
    }
    std::sort(edges.begin(), edges.end());
    return Hypergraph(n_, r_, std::move(edges));
}

Hypergraph Hypergraph::induced(const VertexSet& keep) const
{
    std::vector<VertexSet> edges;
    std::copy_if(edges_.begin(), edges_.end(), std::back_inserter(edges),
        [&](const VertexSet& e) { return e.is_subset_of(keep); });
    return Hypergraph(n_, r_, std::move(edges));
}

Hypergraph link(const Hypergraph& h, Vertex v)
{
    if (v < 0 || v >= h.vertex_count())
        throw Error(ErrorCode::vertex_out_of_range, "vertex " + std::to_string(v) + " out of range");
    if (h.uniformity() < 2)
        throw Error(ErrorCode::bad_parameters, "link needs uniformity at least 2");
    std::vector<VertexSet> edges;
    for (const auto& e : h.edges()) {
        if (e.contains(v)) {
            auto rest = e;
            rest.erase(v);
            edges.push_back(rest);
        }
    }
    return Hypergraph::create(h.vertex_count(), h.uniformity() - 1, std::move(edges));
}

std::vector<VertexSet> components(const Hypergraph& h)
{
    std::vector<VertexSet> out;
    VertexSet unseen = VertexSet::range(0, h.vertex_count());
    while (!unseen.empty()) {
        VertexSet reach{unseen.first()};
        bool grew = true;
        while (grew) {
            grew = false;
            for (const auto& e : h.edges()) {
                if (e.intersects(reach) && !e.is_subset_of(reach)) {
                    reach |= e;
                    grew = true;
                }
            }
        }
        out.push_back(reach);
        unseen -= reach;
    }
    return out;
}

bool is_connected(const Hypergraph& h)
{
    if (h.vertex_count() <= 1)
        return true;
    return components(h).size() == 1;
}

TraceResult trace(const Hypergraph& h, const VertexSet& anchor, int j)
{
    if (anchor.last() >= h.vertex_count())
        throw Error(ErrorCode::vertex_out_of_range, "anchor vertex out of range");
    if (j < 1 || j > std::min(h.uniformity() - 1, anchor.size()))
        throw Error(ErrorCode::bad_intersection_size,
            "intersection size " + std::to_string(j) + " outside 1..min(r-1, |A|)");
    std::map<VertexSet, int> counts;
    for (const auto& e : h.edges())
        if ((e & anchor).size() == j)
            ++counts[e - anchor];
    std::vector<VertexSet> edges;
    std::vector<int> mult;
    for (const auto& [e, c] : counts) {
        edges.push_back(e);
        mult.push_back(c);
    }
    return {Hypergraph::create(h.vertex_count(), h.uniformity() - j, std::move(edges)), std::move(mult)};
}

std::vector<std::size_t> intersection_profile(const Hypergraph& h, const VertexSet& anchor)
{
    std::vector<std::size_t> counts(h.uniformity() + 1, 0);
    for (const auto& e : h.edges())
        ++counts[(e & anchor).size()];
    return counts;
}

std::pair<Hypergraph, std::vector<std::size_t>>
shrink_edges(const Hypergraph& h, const VertexSet& forbidden, int target)
{
    if (target < 1)
        throw Error(ErrorCode::bad_parameters, "target uniformity must be at least 1");
    if (target > h.uniformity())
        throw Error(ErrorCode::target_too_large, "target exceeds uniformity");
    for (const auto& e : h.edges())
        if ((e - forbidden).size() < target)
            throw Error(ErrorCode::target_too_large,
                "an edge keeps fewer than " + std::to_string(target) + " vertices outside the forbidden set");

    std::unordered_set<VertexSet, VertexSetHash> used;
    std::vector<VertexSet> out;
    std::vector<std::size_t> saturated;
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        bool placed = false;
        for_each_subset(h.edge(i) - forbidden, target, [&](const VertexSet& s) {
            if (used.contains(s))
                return true;
            used.insert(s);
            out.push_back(s);
            placed = true;
            return false;
        });
        if (!placed)
            saturated.push_back(i);
    }
    return {Hypergraph::create(h.vertex_count(), target, std::move(out)), std::move(saturated)};
}

} // namespace berge
