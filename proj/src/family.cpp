#include <berge/error.hpp>
#include <berge/family.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace berge {

namespace {

constexpr long max_literal = 1'000'000;

auto sort_key(const Component& c)
{
    return std::make_tuple(-c.edge_count(), static_cast<int>(c.kind), std::cref(c.edges));
}

int graph_vertex_count(const std::vector<GraphEdge>& edges)
{
    int m = 0;
    for (auto [u, v] : edges)
        m = std::max({m, u + 1, v + 1});
    return m;
}

bool graph_connected(const std::vector<GraphEdge>& edges, int vertices)
{
    if (vertices == 0)
        return true;
    std::vector<int> parent(vertices);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    int groups = vertices;
    for (auto [u, v] : edges) {
        int a = find(u), b = find(v);
        if (a != b) {
            parent[a] = b;
            --groups;
        }
    }
    return groups == 1;
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    FamilySpec parse()
    {
        std::vector<Component> out;
        term(out);
        while (peek() == '+') {
            ++pos_;
            term(out);
        }
        skip_space();
        if (pos_ != text_.size())
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return FamilySpec(std::move(out));
    }

private:
    char peek()
    {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    [[noreturn]] void fail(const std::string& what, ErrorCode code = ErrorCode::syntax_error)
    {
        throw Error(code, what + " at position " + std::to_string(pos_), pos_);
    }

    [[noreturn]] void fail_at(std::size_t at, const std::string& what, ErrorCode code)
    {
        pos_ = at;
        fail(what, code);
    }

    int integer()
    {
        skip_space();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail(pos_ >= text_.size() ? "expected a number, found end of input" : "expected a number");
        long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > max_literal)
                fail("number too large");
            ++pos_;
        }
        return static_cast<int>(value);
    }

    void term(std::vector<Component>& out)
    {
        std::size_t start = (skip_space(), pos_);
        int repeat = 1;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            repeat = integer();
            if (repeat == 0)
                fail_at(start, "multiplier must be positive", ErrorCode::zero_size);
        }
        std::size_t kind_at = (skip_space(), pos_);
        char kind = peek();
        std::vector<Component> parts;
        switch (kind) {
        case 'P':
        case 'S':
        case 'M': {
            ++pos_;
            int size = integer();
            if (size == 0)
                fail_at(kind_at, std::string(1, kind) + "0 has no edges", ErrorCode::zero_size);
            if (kind == 'P')
                parts.push_back(Component::path(size));
            else if (kind == 'S')
                parts.push_back(Component::star(size));
            else
                parts.assign(size, Component::path(1));
            break;
        }
        case 'T':
        case 'G': {
            ++pos_;
            if (peek() != ':')
                fail("expected ':' after '" + std::string(1, kind) + "'");
            ++pos_;
            auto edges = edge_list();
            if (kind == 'T' && !is_tree(edges))
                fail_at(kind_at, "edge list is not a tree", ErrorCode::not_a_tree);
            parts.push_back(Component::graph(std::move(edges)));
            break;
        }
        case '\0':
            fail("expected a component, found end of input");
        default:
            fail("expected one of P, S, M, T:, G:");
        }
        for (int i = 0; i < repeat; ++i)
            out.insert(out.end(), parts.begin(), parts.end());
    }

    std::vector<GraphEdge> edge_list()
    {
        std::vector<GraphEdge> edges;
        std::set<GraphEdge> seen;
        while (true) {
            std::size_t at = (skip_space(), pos_);
            int u = integer();
            if (peek() != '-')
                fail("expected '-'");
            ++pos_;
            int v = integer();
            if (u == v)
                fail_at(at, "loop " + std::to_string(u) + "-" + std::to_string(v), ErrorCode::loop);
            GraphEdge e{std::min(u, v), std::max(u, v)};
            if (!seen.insert(e).second)
                fail_at(at, "repeated edge " + std::to_string(e.first) + "-" + std::to_string(e.second),
                    ErrorCode::multi_edge);
            edges.push_back(e);
            if (peek() != ',')
                break;
            ++pos_;
        }
        return edges;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

int Component::edge_count() const
{
    return kind == ComponentKind::graph ? static_cast<int>(edges.size()) : size;
}

int Component::vertex_count() const
{
    return kind == ComponentKind::graph ? graph_vertex_count(edges) : size + 1;
}

Component Component::path(int edges)
{
    if (edges < 1)
        throw Error(ErrorCode::zero_size, "path needs at least one edge");
    return Component{ComponentKind::path, edges, {}};
}

Component Component::star(int edges)
{
    if (edges < 1)
        throw Error(ErrorCode::zero_size, "star needs at least one edge");
    if (edges == 1)
        return path(1);
    return Component{ComponentKind::star, edges, {}};
}

Component Component::graph(std::vector<GraphEdge> edges)
{
    if (edges.empty())
        throw Error(ErrorCode::zero_size, "explicit graph needs at least one edge");
    std::set<int> labels;
    std::set<GraphEdge> seen;
    for (auto& [u, v] : edges) {
        if (u < 0 || v < 0)
            throw Error(ErrorCode::bad_parameters, "negative vertex label");
        if (u == v)
            throw Error(ErrorCode::loop, "loop at vertex " + std::to_string(u));
        if (u > v)
            std::swap(u, v);
        if (!seen.insert({u, v}).second)
            throw Error(ErrorCode::multi_edge, "repeated edge " + std::to_string(u) + "-" + std::to_string(v));
        labels.insert(u);
        labels.insert(v);
    }
    std::map<int, int> relabel;
    for (int l : labels)
        relabel.emplace(l, static_cast<int>(relabel.size()));
    for (auto& [u, v] : edges) {
        u = relabel[u];
        v = relabel[v];
    }
    std::sort(edges.begin(), edges.end());
    if (edges.size() == 1)
        return path(1);
    return Component{ComponentKind::graph, static_cast<int>(edges.size()), std::move(edges)};
}

bool is_tree(const std::vector<GraphEdge>& edges)
{
    std::set<int> labels;
    for (auto [u, v] : edges) {
        labels.insert(u);
        labels.insert(v);
    }
    if (edges.size() + 1 != labels.size())
        return false;
    std::map<int, int> relabel;
    for (int l : labels)
        relabel.emplace(l, static_cast<int>(relabel.size()));
    std::vector<GraphEdge> dense;
    for (auto [u, v] : edges)
        dense.emplace_back(relabel[u], relabel[v]);
    return graph_connected(dense, static_cast<int>(labels.size()));
}

FamilySpec::FamilySpec(std::vector<Component> components) : components_(std::move(components))
{
    if (components_.empty())
        throw Error(ErrorCode::zero_size, "a family needs at least one component");
    for (auto& c : components_) {
        if (c.kind == ComponentKind::star && c.size == 1)
            c = Component::path(1);
        else if (c.kind == ComponentKind::graph)
            c = Component::graph(c.edges);
    }
    std::stable_sort(components_.begin(), components_.end(),
        [](const Component& a, const Component& b) { return sort_key(a) < sort_key(b); });
}

FamilySpec FamilySpec::parse(std::string_view text)
{
    return Parser(text).parse();
}

int FamilySpec::edge_count() const
{
    int total = 0;
    for (const auto& c : components_)
        total += c.edge_count();
    return total;
}

int FamilySpec::vertex_count() const
{
    int total = 0;
    for (const auto& c : components_)
        total += c.vertex_count();
    return total;
}

bool FamilySpec::is_forest() const
{
    return std::all_of(components_.begin(), components_.end(), [](const Component& c) {
        return c.kind != ComponentKind::graph || is_tree(c.edges);
    });
}

std::string FamilySpec::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < components_.size();) {
        std::size_t j = i;
        while (j < components_.size() && components_[j] == components_[i])
            ++j;
        const auto& c = components_[i];
        const auto count = j - i;
        if (!out.empty())
            out += "+";
        if (c.kind == ComponentKind::path && c.size == 1) {
            out += count == 1 ? "P1" : "M" + std::to_string(count);
        } else {
            if (count > 1)
                out += std::to_string(count);
            switch (c.kind) {
            case ComponentKind::path: out += "P" + std::to_string(c.size); break;
            case ComponentKind::star: out += "S" + std::to_string(c.size); break;
            case ComponentKind::graph: {
                out += is_tree(c.edges) ? "T:" : "G:";
                bool first = true;
                for (auto [u, v] : c.edges) {
                    if (!first)
                        out += ",";
                    out += std::to_string(u) + "-" + std::to_string(v);
                    first = false;
                }
                break;
            }
            }
        }
        i = j;
    }
    return out;
}

FamilySpec operator+(const FamilySpec& a, const FamilySpec& b)
{
    auto parts = a.components_;
    parts.insert(parts.end(), b.components_.begin(), b.components_.end());
    return FamilySpec(std::move(parts));
}

std::vector<int> SkeletonGraph::degrees() const
{
    std::vector<int> d(vertex_count, 0);
    for (auto [u, v] : edges) {
        ++d[u];
        ++d[v];
    }
    return d;
}

SkeletonGraph skeleton_graph(const FamilySpec& spec)
{
    SkeletonGraph g;
    for (const auto& c : spec.components()) {
        SkeletonGraph::Part part{g.vertex_count, c.vertex_count(), static_cast<int>(g.edges.size()), c.edge_count()};
        const int base = g.vertex_count;
        switch (c.kind) {
        case ComponentKind::path:
            for (int i = 0; i < c.size; ++i)
                g.edges.emplace_back(base + i, base + i + 1);
            break;
        case ComponentKind::star:
            for (int i = 1; i <= c.size; ++i)
                g.edges.emplace_back(base, base + i);
            break;
        case ComponentKind::graph:
            for (auto [u, v] : c.edges)
                g.edges.emplace_back(base + u, base + v);
            break;
        }
        g.vertex_count += part.vertex_count;
        g.parts.push_back(part);
    }
    return g;
}

} // namespace berge
