#include <berge/containment.hpp>

#include <vector>

namespace berge {

namespace {

struct Brute {
    const Hypergraph& h;
    const SkeletonGraph g;
    int forced_host = -1;

    std::vector<Vertex> image;
    std::vector<char> vertex_used;
    std::vector<char> edge_used;

    Brute(const Hypergraph& host, const FamilySpec& f, int must_use)
        : h(host), g(skeleton_graph(f)), forced_host(must_use), image(g.vertex_count, -1),
          vertex_used(host.vertex_count(), 0), edge_used(host.edge_count(), 0)
    {
    }

    bool assign_edges(std::size_t s, bool forced_hit)
    {
        if (s == g.edges.size())
            return forced_host < 0 || forced_hit;
        auto [u, v] = g.edges[s];
        for (std::size_t c = 0; c < h.edge_count(); ++c) {
            if (edge_used[c] || !h.edge(c).contains(image[u]) || !h.edge(c).contains(image[v]))
                continue;
            edge_used[c] = 1;
            bool ok = assign_edges(s + 1, forced_hit || static_cast<int>(c) == forced_host);
            edge_used[c] = 0;
            if (ok)
                return true;
        }
        return false;
    }

    bool map_vertices(int i)
    {
        if (i == g.vertex_count)
            return assign_edges(0, false);
        for (Vertex x = 0; x < h.vertex_count(); ++x) {
            if (vertex_used[x])
                continue;
            vertex_used[x] = 1;
            image[i] = x;
            bool ok = map_vertices(i + 1);
            vertex_used[x] = 0;
            if (ok)
                return true;
        }
        return false;
    }
};

} // namespace

bool oracle_contains(const Hypergraph& h, const FamilySpec& f)
{
    return Brute(h, f, -1).map_vertices(0);
}

bool oracle_contains_using(const Hypergraph& h, const FamilySpec& f, std::size_t must_use)
{
    if (must_use >= h.edge_count())
        throw Error(ErrorCode::index_out_of_range, "edge index " + std::to_string(must_use) + " out of range");
    return Brute(h, f, static_cast<int>(must_use)).map_vertices(0);
}

} // namespace berge
