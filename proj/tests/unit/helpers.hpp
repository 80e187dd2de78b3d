#pragma once

#include <berge/error.hpp>
#include <berge/hypergraph.hpp>

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

namespace berge::test {

inline Hypergraph H(int n, int r, std::vector<std::vector<Vertex>> edges)
{
    return Hypergraph::create(n, r, edges);
}

template <typename F>
std::optional<ErrorCode> error_of(F&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return std::nullopt;
}

/// Uniformly random r-graph on n vertices with `m` distinct edges.
inline Hypergraph random_hypergraph(std::mt19937_64& rng, int n, int r, int m)
{
    const Hypergraph all = Hypergraph::complete(n, r);
    std::vector<VertexSet> pool(all.edges().begin(), all.edges().end());
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(std::min<std::size_t>(pool.size(), static_cast<std::size_t>(m)));
    return Hypergraph::create(n, r, pool);
}

inline std::vector<Vertex> random_permutation(std::mt19937_64& rng, int n)
{
    std::vector<Vertex> p(n);
    for (int i = 0; i < n; ++i)
        p[i] = i;
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

} // namespace berge::test
