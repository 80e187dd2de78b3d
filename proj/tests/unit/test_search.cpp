#include "helpers.hpp"

#include <berge/constructions.hpp>
#include <berge/containment.hpp>
#include <berge/search.hpp>

#include <doctest.h>

using namespace berge;
using berge::test::error_of;

namespace {

FamilySpec F(const char* text)
{
    return FamilySpec::parse(text);
}

void check_outcome(const SearchOutcome& s, int n, int r, const FamilySpec& f)
{
    if (!s.witness)
        return;
    CHECK(s.witness->vertex_count() == n);
    CHECK(s.witness->uniformity() == r);
    CHECK(static_cast<std::int64_t>(s.witness->edge_count()) == s.value);
    CHECK_FALSE(contains(*s.witness, f).has_value());
}

// Flat enumeration of every edge subset, for tiny cases only.
std::int64_t flat_turan(int n, int r, const FamilySpec& f, bool connected)
{
    const auto all = Hypergraph::complete(n, r);
    const std::size_t m = all.edge_count();
    std::int64_t best = -1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        const int bits = std::popcount(mask);
        if (bits <= best)
            continue;
        std::vector<VertexSet> edges;
        for (std::size_t i = 0; i < m; ++i)
            if (mask >> i & 1U)
                edges.push_back(all.edge(i));
        auto h = Hypergraph::create(n, r, edges);
        if (connected && !is_connected(h))
            continue;
        if (!oracle_contains(h, f))
            best = bits;
    }
    return best;
}

} // namespace

TEST_SUITE("turan_exact")
{
    TEST_CASE("values pinned by flat enumeration")
    {
        struct Case {
            int n, r;
            const char* f;
            std::int64_t value;
        };
        for (auto c : std::vector<Case>{{5, 3, "P1", 0}, {6, 3, "M2", 1}, {6, 3, "S2", 2}, {6, 2, "M1+S2", 6},
                 {6, 3, "S2+M1", 4}, {5, 3, "P2", 1}, {5, 3, "S2", 1}, {5, 3, "M2", 1}, {6, 3, "P3", 2},
                 {7, 3, "P3", 3}}) {
            CAPTURE(c.n);
            CAPTURE(c.f);
            auto s = turan_exact(c.n, c.r, F(c.f));
            CHECK(s.value == c.value);
            CHECK(s.status == SearchStatus::exact);
            CHECK_FALSE(s.connected);
            check_outcome(s, c.n, c.r, F(c.f));
        }
    }

    TEST_CASE("agrees with flat enumeration for n <= 5")
    {
        for (int n = 3; n <= 5; ++n)
            for (const char* name : {"P1", "P2", "S2", "M2"}) {
                CAPTURE(n);
                CAPTURE(name);
                CHECK(turan_exact(n, 3, F(name)).value == flat_turan(n, 3, F(name), false));
            }
    }

    TEST_CASE("options do not change the value")
    {
        for (const char* name : {"M2", "S2", "P3", "S2+M1"}) {
            const auto base = turan_exact(6, 3, F(name)).value;
            SearchOptions plain;
            plain.symmetry_fixing = false;
            SearchOptions iso;
            iso.isomorphism_pruning = true;
            SearchOptions par;
            par.workers = 4;
            par.split_depth = 2;
            CAPTURE(name);
            CHECK(turan_exact(6, 3, F(name), plain).value == base);
            CHECK(turan_exact(6, 3, F(name), iso).value == base);
            CHECK(turan_exact(6, 3, F(name), par).value == base);
        }
    }

    TEST_CASE("parallel determinism")
    {
        SearchOptions many;
        many.workers = 8;
        for (int rep = 0; rep < 5; ++rep) {
            auto a = turan_exact(6, 3, F("S2"));
            auto b = turan_exact(6, 3, F("S2"), many);
            CHECK(a.value == b.value);
            CHECK(a.status == b.status);
        }
    }

    TEST_CASE("monotone in n")
    {
        for (const char* name : {"P2", "S2", "M2", "P1+P2"}) {
            std::int64_t prev = 0;
            for (int n = 3; n <= 7; ++n) {
                auto v = turan_exact(n, 3, F(name)).value;
                CHECK(v >= prev);
                prev = v;
            }
        }
    }

    TEST_CASE("seeded runs keep the value")
    {
        auto seed = hstar(7, 2, 2, 3).hypergraph;
        REQUIRE_FALSE(contains(seed, F("P2+S2")));
        SearchOptions opts;
        opts.seed = seed;
        auto a = turan_exact(7, 3, F("P2+S2"), opts);
        auto b = turan_exact(7, 3, F("P2+S2"));
        CHECK(a.value >= static_cast<std::int64_t>(seed.edge_count()));
        CHECK(a.value == b.value);
    }

    TEST_CASE("bad seeds and parameters")
    {
        SearchOptions bad_seed;
        bad_seed.seed = Hypergraph::complete(6, 3);
        CHECK(error_of([&] { turan_exact(6, 3, F("P1"), bad_seed); }) == ErrorCode::bad_parameters);
        SearchOptions wrong_shape;
        wrong_shape.seed = Hypergraph::empty(5, 3);
        CHECK(error_of([&] { turan_exact(6, 3, F("P1"), wrong_shape); }) == ErrorCode::bad_parameters);
        CHECK(error_of([] { turan_exact(2, 3, F("P1")); }) == ErrorCode::bad_parameters);
        CHECK(error_of([] { turan_exact(5, 1, F("P1")); }) == ErrorCode::bad_parameters);
        SearchOptions zero;
        zero.workers = 0;
        CHECK(error_of([&] { turan_exact(5, 3, F("P1"), zero); }) == ErrorCode::bad_parameters);
    }

    TEST_CASE("time limit downgrades the status")
    {
        SearchOptions opts;
        opts.time_limit_seconds = 1e-9;
        auto s = turan_exact(9, 3, F("P3+P3"), opts);
        CHECK(s.status != SearchStatus::exact);
        check_outcome(s, 9, 3, F("P3+P3"));
    }
}

TEST_SUITE("turan_connected")
{
    TEST_CASE("examples")
    {
        auto a = turan_connected(4, 2, F("P3"));
        CHECK(a.value == 3);
        CHECK(a.connected);
        CHECK_FALSE(a.infeasible);
        REQUIRE(a.witness);
        CHECK(is_connected(*a.witness));

        auto b = turan_connected(3, 3, F("P1"));
        CHECK(b.value == 0);
        CHECK(b.infeasible);

        auto c = turan_connected(5, 3, F("P2"));
        CHECK(c.infeasible);
    }

    TEST_CASE("agrees with flat enumeration")
    {
        for (int n = 3; n <= 5; ++n)
            for (const char* name : {"P2", "P3", "S2", "S3", "M2"}) {
                CAPTURE(n);
                CAPTURE(name);
                const auto expected = flat_turan(n, 3, F(name), true);
                auto s = turan_connected(n, 3, F(name));
                CHECK(s.value == std::max<std::int64_t>(expected, 0));
                CHECK(s.infeasible == (expected < 0));
            }
    }

    TEST_CASE("seeded with the connected construction")
    {
        auto seed = htilde(8, {3, 3}, 3).hypergraph;
        SearchOptions opts;
        opts.seed = seed;
        opts.workers = 4;
        opts.time_limit_seconds = 20.0;
        auto s = turan_connected(8, 3, F("P3+P3"), opts);
        CHECK(s.value >= 16);
        CHECK(s.status != SearchStatus::timeout);
        check_outcome(s, 8, 3, F("P3+P3"));
    }
}

TEST_SUITE("local_lower_bound")
{
    TEST_CASE("examples")
    {
        auto seed = hstar(9, 2, 2, 3).hypergraph;
        SearchOptions opts;
        opts.seed = seed;
        opts.iterations = 200;
        auto a = local_lower_bound(9, 3, F("P2+S2"), opts);
        CHECK(a.value >= 4);
        CHECK(a.status == SearchStatus::lower_bound_only);
        check_outcome(a, 9, 3, F("P2+S2"));

        auto b = local_lower_bound(6, 3, F("P1"));
        CHECK(b.value == 0);
    }

    TEST_CASE("history never decreases and is reproducible")
    {
        SearchOptions opts;
        opts.iterations = 300;
        opts.rng_seed = 5;
        auto a = local_lower_bound(8, 3, F("P3"), opts);
        REQUIRE(a.history.size() == 300);
        CHECK(std::is_sorted(a.history.begin(), a.history.end()));
        CHECK(a.history.back() == a.value);
        CHECK(a.value <= turan_exact(8, 3, F("P3")).value);
        auto b = local_lower_bound(8, 3, F("P3"), opts);
        CHECK(a.value == b.value);
        CHECK(a.history == b.history);
    }
}

TEST_CASE("status names round trip")
{
    for (auto s : {SearchStatus::exact, SearchStatus::lower_bound_only, SearchStatus::timeout})
        CHECK(parse_search_status(to_string(s)) == s);
}
