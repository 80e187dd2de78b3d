#pragma once

#include <berge/family.hpp>
#include <berge/hypergraph.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace berge {

/// Proof that a host hypergraph contains a Berge copy of F: skeleton vertex i
/// sits at host vertex vertex_map[i], skeleton edge j is carried by host edge
/// edge_map[j]. Skeleton numbering is that of skeleton_graph(F).
struct BergeWitness {
    std::vector<Vertex> vertex_map;
    std::vector<int> edge_map;

    friend bool operator==(const BergeWitness&, const BergeWitness&) = default;
};

/// Returns an empty string if `w` is a valid Berge copy of `g` in `h`, else a
/// description of the first violated condition.
std::string validate_witness(const Hypergraph& h, const SkeletonGraph& g, const BergeWitness& w);

/// Reusable Berge-F finder. Precomputes the skeleton, its embedding order and
/// its symmetry-breaking constraints once, so repeated queries against many
/// hosts (as in the Turán search) do not redo that work.
///
/// The search places skeleton vertices one at a time (ascending host vertex
/// candidates) and keeps a bipartite matching from every skeleton edge with a
/// placed endpoint to a host edge containing its placed endpoint(s). A branch
/// dies as soon as that matching cannot saturate the skeleton side.
class BergeMatcher {
public:
    explicit BergeMatcher(const FamilySpec& family);

    const FamilySpec& family() const noexcept { return family_; }
    const SkeletonGraph& skeleton() const noexcept { return skeleton_; }

    std::optional<BergeWitness> find(const Hypergraph& h) const;

    /// Only witnesses whose edge map hits host edge `must_use`.
    std::optional<BergeWitness> find_using(const Hypergraph& h, std::size_t must_use) const;

    /// Placement order plus symmetry-breaking constraints for one query
    /// shape (unforced, or with one skeleton edge pinned to the must-use edge).
    struct Plan {
        std::vector<int> order;
        std::vector<std::vector<int>> smaller_than; // per order position: skeleton vertices whose image must be smaller
        std::vector<char> on_forced;                // per skeleton vertex: endpoint of the forced edge
        int forced = -1;
    };

private:
    FamilySpec family_;
    SkeletonGraph skeleton_;
    std::vector<Plan> plans_; // [0] unforced; [1 + i] forces representative edge forced_edges_[i]
    std::vector<int> forced_edges_;
};

std::optional<BergeWitness> contains(const Hypergraph& h, const FamilySpec& f);

/// Throws IndexOutOfRange if must_use >= e(h).
std::optional<BergeWitness> contains_using(const Hypergraph& h, const FamilySpec& f, std::size_t must_use);

/// A Berge-S_l centered at `center`: l edges through the center with distinct
/// leaves, found as a maximum matching between those edges and the other
/// vertices. Skeleton numbering: 0 is the center, leaves 1..l.
std::optional<BergeWitness> find_berge_star(const Hypergraph& h, Vertex center, int l);

/// Exhaustive reference answer: every injective vertex map, then every
/// injective edge assignment. Shares nothing with BergeMatcher beyond the
/// skeleton layout. Practical for e(h) <= 8 and |V(F)| <= 8.
bool oracle_contains(const Hypergraph& h, const FamilySpec& f);

/// Exhaustive reference for contains_using.
bool oracle_contains_using(const Hypergraph& h, const FamilySpec& f, std::size_t must_use);

} // namespace berge
