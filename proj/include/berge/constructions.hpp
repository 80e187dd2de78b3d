#pragma once

#include <berge/bounds.hpp>
#include <berge/family.hpp>
#include <berge/hypergraph.hpp>
#include <berge/numeric.hpp>

#include <optional>
#include <string>
#include <vector>

namespace berge {

struct ConstructionReport {
    std::string family;                      // generator name, e.g. "hstar"
    ParamMap params;
    bool in_regime = false;                  // parameters satisfy the matching theorem's hypotheses
    Integer predicted_count;
    Hypergraph hypergraph = Hypergraph::empty(0, 1);
    std::optional<FamilySpec> freeness_target;
    bool claims_connected = false;
};

/// Classes of size l (plus a remainder) over the vertices after the first
/// k-1; every r-subset of A* united with each class. `tree` replaces the
/// default Path(l) in the freeness target.
ConstructionReport hstar(int n, int l, int k, int r, std::optional<Component> tree = std::nullopt);

/// The first l_min - 1 (r-k+1)-subsets of each full class of size r-k+2,
/// each joined with the first k-1 vertices.
ConstructionReport hhat(int n, int l1, int l2, int k, int r, std::optional<Component> tree = std::nullopt);

/// All r-subsets of A~ + {u} for every vertex u outside A~, with
/// |A~| = sum(l_i + 1)/2 - 1. Requires n > |A~|.
ConstructionReport htilde(int n, const std::vector<int>& lengths, int r);

/// Disjoint complete r-graphs on blocks of l vertices (remainder block too).
ConstructionReport clique_blocks(int n, int l, int r);

/// d edge-disjoint partitions of the vertices into blocks of size r: cyclic
/// shifts of {0..r-1}, {r..2r-1}, ... that do not reuse an edge, topped up by
/// lexicographic search when the shifts run out.
ConstructionReport partition_regular(int n, int r, int d);

/// Dispatch by generator name ("hstar", "hhat", "htilde", "clique-blocks",
/// "partition-regular"). htilde reads lengths from l1, l2, ...
ConstructionReport construct(const std::string& family, const ParamMap& params);

} // namespace berge
