#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace berge {

using GraphEdge = std::pair<int, int>;

enum class ComponentKind { path, star, graph };

/// One connected piece of a forbidden graph. Paths and stars are indexed by
/// edge count: Path(3) has 4 vertices. `graph` holds an explicit simple edge
/// list on vertices 0..m-1 with every pair stored as (low, high), sorted.
struct Component {
    ComponentKind kind = ComponentKind::path;
    int size = 1;
    std::vector<GraphEdge> edges;

    int edge_count() const;
    int vertex_count() const;

    static Component path(int edges);
    static Component star(int edges);

    /// Validates a simple edge list and relabels its vertices onto a
    /// contiguous range (order preserving). A single edge becomes Path(1).
    static Component graph(std::vector<GraphEdge> edges);

    friend bool operator==(const Component&, const Component&) = default;
};

bool is_tree(const std::vector<GraphEdge>& edges);

/// A forbidden graph F as a disjoint union of components, kept normalized:
/// Star(1) is stored as Path(1) and components are sorted by (edge count
/// descending, kind, edge list).
class FamilySpec {
public:
    FamilySpec() = default;
    explicit FamilySpec(std::vector<Component> components);

    /// Parses the family DSL, e.g. "P3+2S2+M2" or "T:0-1,1-2,1-3".
    static FamilySpec parse(std::string_view text);

    const std::vector<Component>& components() const noexcept { return components_; }
    int edge_count() const;
    int vertex_count() const;
    bool is_forest() const;

    /// Canonical printer; consecutive Path(1) components print as "Mk".
    std::string to_string() const;

    /// Disjoint union.
    friend FamilySpec operator+(const FamilySpec& a, const FamilySpec& b);

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;

private:
    std::vector<Component> components_;
};

/// A concrete labeled copy of F. Components sit on consecutive vertex and
/// edge ranges in the order of FamilySpec::components().
struct SkeletonGraph {
    struct Part {
        int first_vertex = 0;
        int vertex_count = 0;
        int first_edge = 0;
        int edge_count = 0;
    };

    int vertex_count = 0;
    std::vector<GraphEdge> edges;
    std::vector<Part> parts;

    std::vector<int> degrees() const;
};

/// Path(l) is laid out as 0-1-...-l; Star(l) puts the center first.
SkeletonGraph skeleton_graph(const FamilySpec& spec);

} // namespace berge
