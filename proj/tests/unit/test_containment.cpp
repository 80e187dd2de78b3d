#include "helpers.hpp"

#include <berge/bounds.hpp>
#include <berge/containment.hpp>

#include <doctest.h>

using namespace berge;
using berge::test::error_of;
using berge::test::H;

namespace {

FamilySpec F(const char* text)
{
    return FamilySpec::parse(text);
}

void require_valid(const Hypergraph& h, const FamilySpec& f, const std::optional<BergeWitness>& w)
{
    REQUIRE(w.has_value());
    CHECK(validate_witness(h, skeleton_graph(f), *w) == "");
}

const std::vector<const char*> fuzz_families{"P1", "P2", "P3", "S2", "S3", "M2", "M3", "P1+P2", "S2+M1",
    "G:0-1,1-2,2-0", "T:0-1,1-2,1-3,3-4", "P2+S2"};

// Picks l distinct edges through the center with distinct leaves by brute force.
bool star_assign(const std::vector<VertexSet>& through, Vertex center, int l, std::size_t from, VertexSet used_leaves)
{
    if (l == 0)
        return true;
    for (std::size_t i = from; i < through.size(); ++i) {
        bool found = false;
        (through[i] - used_leaves).for_each([&](Vertex x) {
            if (found || x == center)
                return;
            VertexSet next = used_leaves;
            next.insert(x);
            found = star_assign(through, center, l - 1, i + 1, next);
        });
        if (found)
            return true;
    }
    return false;
}

bool contains_star_oracle(const Hypergraph& h, Vertex center, int l)
{
    std::vector<VertexSet> through;
    for (const auto& e : h.edges())
        if (e.contains(center))
            through.push_back(e);
    return star_assign(through, center, l, 0, VertexSet{});
}

} // namespace

TEST_SUITE("contains")
{
    TEST_CASE("single edge")
    {
        auto h = H(3, 3, {{0, 1, 2}});
        require_valid(h, F("P1"), contains(h, F("P1")));
        CHECK_FALSE(contains(h, F("M2")));
        CHECK_FALSE(contains(h, F("P2")));
    }

    TEST_CASE("triangle in three triples")
    {
        auto h = H(4, 3, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}});
        require_valid(h, F("G:0-1,1-2,2-0"), contains(h, F("G:0-1,1-2,2-0")));
    }

    TEST_CASE("path through a chain of triples")
    {
        auto h = H(7, 3, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}});
        require_valid(h, F("P3"), contains(h, F("P3")));
        CHECK_FALSE(contains(h, F("P4")));
    }

    TEST_CASE("two overlapping triples carry M2")
    {
        auto h = H(4, 3, {{0, 1, 2}, {0, 1, 3}});
        require_valid(h, F("M2"), contains(h, F("M2")));
        CHECK(oracle_contains(h, F("M2")));
    }

    TEST_CASE("graphs are 2-uniform hosts")
    {
        auto k4 = Hypergraph::complete(4, 2);
        CHECK(contains(k4, F("P3")));
        CHECK(contains(k4, F("G:0-1,1-2,2-3,3-0")));
        CHECK_FALSE(contains(k4, F("P4")));
        CHECK_FALSE(contains(k4, F("S1+S2")));
    }

    TEST_CASE("agrees with the exhaustive oracle on random hosts")
    {
        std::mt19937_64 rng(20240601);
        int positives = 0;
        for (int trial = 0; trial < 1500; ++trial) {
            const int r = 2 + static_cast<int>(rng() % 3);
            const int n = r + 1 + static_cast<int>(rng() % 3);
            auto h = test::random_hypergraph(rng, n, r, 1 + static_cast<int>(rng() % 6));
            for (const char* name : fuzz_families) {
                auto f = F(name);
                auto w = contains(h, f);
                const bool expected = oracle_contains(h, f);
                CAPTURE(name);
                CAPTURE(trial);
                REQUIRE(w.has_value() == expected);
                if (w) {
                    ++positives;
                    REQUIRE(validate_witness(h, skeleton_graph(f), *w) == "");
                }
            }
        }
        CHECK(positives > 1000);
    }

    TEST_CASE("invariant under relabeling")
    {
        std::mt19937_64 rng(99);
        for (int trial = 0; trial < 300; ++trial) {
            auto h = test::random_hypergraph(rng, 7, 3, 1 + static_cast<int>(rng() % 6));
            auto g = h.relabeled(test::random_permutation(rng, 7));
            for (const char* name : fuzz_families)
                CHECK(contains(h, F(name)).has_value() == contains(g, F(name)).has_value());
        }
    }

    TEST_CASE("monotone under adding edges")
    {
        std::mt19937_64 rng(17);
        for (int trial = 0; trial < 200; ++trial) {
            auto h = test::random_hypergraph(rng, 7, 3, 1 + static_cast<int>(rng() % 6));
            auto all = Hypergraph::complete(7, 3);
            auto extra = all.edge(rng() % all.edge_count());
            if (h.has_edge(extra))
                continue;
            auto bigger = h.with_edge(extra);
            for (const char* name : fuzz_families)
                if (contains(h, F(name)))
                    CHECK(contains(bigger, F(name)));
        }
    }
}

TEST_SUITE("contains_using")
{
    TEST_CASE("examples")
    {
        auto a = H(6, 3, {{0, 1, 2}, {3, 4, 5}});
        auto wa = contains_using(a, F("M2"), 1);
        require_valid(a, F("M2"), wa);

        auto b = H(6, 3, {{0, 1, 2}, {3, 4, 5}, {0, 1, 3}});
        const int idx = b.find_edge(VertexSet{0, 1, 3});
        auto wb = contains_using(b, F("M2"), static_cast<std::size_t>(idx));
        require_valid(b, F("M2"), wb);
        CHECK(std::find(wb->edge_map.begin(), wb->edge_map.end(), idx) != wb->edge_map.end());

        auto c = H(4, 3, {{0, 1, 2}, {0, 1, 3}});
        require_valid(c, F("M2"), contains_using(c, F("M2"), 1));
    }

    TEST_CASE("forced edge must appear in the witness")
    {
        auto h = H(7, 3, {{0, 1, 2}, {0, 3, 4}, {4, 5, 6}});
        auto w = contains_using(h, F("P1"), 2);
        REQUIRE(w);
        CHECK(w->edge_map == std::vector<int>{2});
        CHECK_FALSE(contains_using(h, F("P3"), 0).has_value() != oracle_contains_using(h, F("P3"), 0));
    }

    TEST_CASE("index out of range")
    {
        auto h = H(3, 3, {{0, 1, 2}});
        CHECK(error_of([&] { contains_using(h, F("P1"), 1); }) == ErrorCode::index_out_of_range);
    }

    TEST_CASE("agrees with the exhaustive oracle")
    {
        std::mt19937_64 rng(4242);
        for (int trial = 0; trial < 600; ++trial) {
            const int r = 2 + static_cast<int>(rng() % 3);
            const int n = r + 1 + static_cast<int>(rng() % 3);
            auto h = test::random_hypergraph(rng, n, r, 1 + static_cast<int>(rng() % 6));
            const std::size_t e = rng() % h.edge_count();
            for (const char* name : fuzz_families) {
                auto f = F(name);
                auto w = contains_using(h, f, e);
                CAPTURE(name);
                REQUIRE(w.has_value() == oracle_contains_using(h, f, e));
                if (w) {
                    REQUIRE(validate_witness(h, skeleton_graph(f), *w) == "");
                    CHECK(std::find(w->edge_map.begin(), w->edge_map.end(), static_cast<int>(e)) != w->edge_map.end());
                }
            }
        }
    }

    TEST_CASE("incremental identity")
    {
        std::mt19937_64 rng(8);
        for (int trial = 0; trial < 300; ++trial) {
            auto h = test::random_hypergraph(rng, 6, 3, 2 + static_cast<int>(rng() % 5));
            const std::size_t e = rng() % h.edge_count();
            auto without = h.without_edge(e);
            for (const char* name : fuzz_families) {
                auto f = F(name);
                const bool whole = contains(h, f).has_value();
                const bool split = contains(without, f).has_value() || contains_using(h, f, e).has_value();
                CHECK(whole == split);
            }
        }
    }

    TEST_CASE("matcher reuse gives the same answers")
    {
        BergeMatcher m(F("P2+S2"));
        std::mt19937_64 rng(1);
        for (int trial = 0; trial < 100; ++trial) {
            auto h = test::random_hypergraph(rng, 7, 3, 1 + static_cast<int>(rng() % 7));
            CHECK(m.find(h).has_value() == contains(h, F("P2+S2")).has_value());
            CHECK(m.find_using(h, 0).has_value() == contains_using(h, F("P2+S2"), 0).has_value());
        }
    }
}

TEST_SUITE("berge stars")
{
    TEST_CASE("examples")
    {
        auto a = H(5, 3, {{0, 1, 2}, {0, 3, 4}});
        require_valid(a, F("S2"), find_berge_star(a, 0, 2));

        auto b = H(6, 3, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {0, 1, 5}});
        auto wb = find_berge_star(b, 0, 4);
        require_valid(b, F("S4"), wb);
        CHECK(wb->vertex_map[0] == 0);
        std::vector<Vertex> leaves(wb->vertex_map.begin() + 1, wb->vertex_map.end());
        std::sort(leaves.begin(), leaves.end());
        CHECK(std::adjacent_find(leaves.begin(), leaves.end()) == leaves.end());
        CHECK(std::find(leaves.begin(), leaves.end(), 0) == leaves.end());

        CHECK_FALSE(find_berge_star(H(3, 3, {{0, 1, 2}}), 0, 2));
    }

    TEST_CASE("errors")
    {
        auto h = H(3, 3, {{0, 1, 2}});
        CHECK(error_of([&] { find_berge_star(h, 3, 1); }) == ErrorCode::vertex_out_of_range);
        CHECK(error_of([&] { find_berge_star(h, 0, 0); }) == ErrorCode::bad_parameters);
    }

    TEST_CASE("degree above the threshold forces a star")
    {
        std::mt19937_64 rng(31);
        int forced = 0;
        for (int trial = 0; trial < 300; ++trial) {
            const int n = 4 + static_cast<int>(rng() % 5);
            auto h = test::random_hypergraph(rng, n, 3, static_cast<int>(rng() % 25));
            for (int l : {2, 3, 4}) {
                const auto t = star_degree_threshold(l, 3);
                for (Vertex v = 0; v < n; ++v) {
                    auto w = find_berge_star(h, v, l);
                    CHECK(w.has_value() == contains_star_oracle(h, v, l));
                    if (h.degree(v) > t) {
                        ++forced;
                        REQUIRE(w.has_value());
                    }
                    if (w)
                        CHECK(validate_witness(h, skeleton_graph(F(("S" + std::to_string(l)).c_str())), *w) == "");
                }
            }
        }
        CHECK(forced > 100);
    }
}

TEST_CASE("validate_witness rejects broken witnesses")
{
    auto h = H(5, 3, {{0, 1, 2}, {2, 3, 4}});
    auto g = skeleton_graph(F("P2"));
    BergeWitness ok{{0, 2, 3}, {0, 1}};
    CHECK(validate_witness(h, g, ok) == "");
    CHECK(validate_witness(h, g, BergeWitness{{0, 2, 2}, {0, 1}}) != "");
    CHECK(validate_witness(h, g, BergeWitness{{0, 2, 3}, {0, 0}}) != "");
    CHECK(validate_witness(h, g, BergeWitness{{0, 2, 3}, {1, 0}}) != "");
    CHECK(validate_witness(h, g, BergeWitness{{0, 2}, {0, 1}}) != "");
    CHECK(validate_witness(h, g, BergeWitness{{0, 2, 9}, {0, 1}}) != "");
    CHECK(validate_witness(h, g, BergeWitness{{0, 2, 3}, {0, 5}}) != "");
}
