#pragma once

#include <berge/error.hpp>
#include <berge/vertex_set.hpp>

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace berge {

/// An r-uniform hypergraph on vertices 0..n-1.
///
/// Edges are kept strictly increasing in lexicographic order, so two
/// hypergraphs with the same edge set compare (and serialize) equal. Values are
/// immutable once built.
class Hypergraph {
public:
    /// Validating constructor. Edge order in the input is irrelevant;
    /// duplicates are rejected, not merged.
    static Hypergraph create(int n, int r, const std::vector<std::vector<Vertex>>& edges);
    static Hypergraph create(int n, int r, std::vector<VertexSet> edges);

    /// The hypergraph with no edges.
    static Hypergraph empty(int n, int r);

    /// Every r-subset of 0..n-1.
    static Hypergraph complete(int n, int r);

    int vertex_count() const noexcept { return n_; }
    int uniformity() const noexcept { return r_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::span<const VertexSet> edges() const noexcept { return edges_; }
    const VertexSet& edge(std::size_t i) const { return edges_.at(i); }

    int degree(Vertex v) const;
    std::vector<int> degrees() const;

    /// Index of `e` in the edge list, or -1.
    int find_edge(const VertexSet& e) const;
    bool has_edge(const VertexSet& e) const { return find_edge(e) != -1; }

    /// Copy with one more edge. Throws DuplicateEdge / WrongEdgeSize /
    /// VertexOutOfRange like create().
    Hypergraph with_edge(const VertexSet& e) const;

    /// Copy with the edge at `index` removed.
    Hypergraph without_edge(std::size_t index) const;

    /// Relabel vertex v as perm[v]; perm must be a permutation of 0..n-1.
    Hypergraph relabeled(std::span<const Vertex> perm) const;

    /// Edges inside `keep`, on the same vertex universe.
    Hypergraph induced(const VertexSet& keep) const;

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    Hypergraph(int n, int r, std::vector<VertexSet> edges)
        : n_(n), r_(r), edges_(std::move(edges))
    {
    }

    int n_ = 0;
    int r_ = 1;
    std::vector<VertexSet> edges_;
};

/// {e \ {v} : v in e}, uniformity r-1.
Hypergraph link(const Hypergraph& h, Vertex v);

/// True iff n <= 1, or every vertex lies in an edge and the vertex-edge
/// incidence graph is connected.
bool is_connected(const Hypergraph& h);

/// Connected components of the incidence graph as vertex sets, ordered by
/// smallest vertex. Uncovered vertices form singleton components.
std::vector<VertexSet> components(const Hypergraph& h);

struct TraceResult {
    Hypergraph deduplicated;
    std::vector<int> multiplicities; // aligned with deduplicated.edges()
};

/// Remainders e \ A of the edges meeting `anchor` in exactly j vertices,
/// deduplicated into an (r-j)-uniform hypergraph with multiplicities.
/// Requires 1 <= j <= min(r-1, |A|).
TraceResult trace(const Hypergraph& h, const VertexSet& anchor, int j);

/// counts[j] = number of edges meeting `anchor` in exactly j vertices,
/// for j = 0..r.
std::vector<std::size_t> intersection_profile(const Hypergraph& h, const VertexSet& anchor);

/// Cuts every edge down to `target` vertices avoiding `forbidden`. Edges are
/// processed in stored order; each takes the lexicographically smallest
/// target-subset of e \ forbidden not already taken. Edges with every such
/// subset taken are omitted and their indices returned as saturated.
std::pair<Hypergraph, std::vector<std::size_t>>
shrink_edges(const Hypergraph& h, const VertexSet& forbidden, int target);

} // namespace berge
