#include <berge/vertex_set.hpp>

#include <doctest.h>

using namespace berge;

TEST_CASE("membership and size")
{
    VertexSet s{3, 1, 7};
    CHECK(s.size() == 3);
    CHECK(s.contains(1));
    CHECK_FALSE(s.contains(2));
    s.erase(1);
    CHECK(s.elements() == std::vector<Vertex>{3, 7});
    CHECK(VertexSet{}.empty());
}

TEST_CASE("range is half-open")
{
    CHECK(VertexSet::range(2, 5).elements() == std::vector<Vertex>{2, 3, 4});
    CHECK(VertexSet::range(4, 4).empty());
}

TEST_CASE("first, next and last")
{
    VertexSet s{0, 5, 63};
    CHECK(s.first() == 0);
    CHECK(s.next(1) == 5);
    CHECK(s.next(5) == 5);
    CHECK(s.next(6) == 63);
    CHECK(s.next(64) == -1);
    CHECK(s.last() == 63);
    CHECK(VertexSet{}.first() == -1);
    CHECK(VertexSet{}.last() == -1);
}

TEST_CASE("set algebra")
{
    VertexSet a{0, 1, 2}, b{1, 2, 3};
    CHECK((a & b) == VertexSet{1, 2});
    CHECK((a | b) == VertexSet{0, 1, 2, 3});
    CHECK((a - b) == VertexSet{0});
    CHECK((a ^ b) == VertexSet{0, 3});
    CHECK(VertexSet{1, 2}.is_subset_of(a));
    CHECK_FALSE(b.is_subset_of(a));
    CHECK(a.intersects(b));
    CHECK_FALSE(a.intersects(VertexSet{5}));
}

TEST_CASE("lexicographic order on sorted element lists")
{
    CHECK(VertexSet{0, 1, 2} < VertexSet{0, 1, 3});
    CHECK(VertexSet{0, 1, 3} < VertexSet{0, 2, 3});
    CHECK(VertexSet{0, 4, 5} < VertexSet{1, 2, 3});
    CHECK(VertexSet{0, 1} < VertexSet{0, 1, 2});
    CHECK_FALSE(VertexSet{0, 1, 2} < VertexSet{0, 1, 2});
    CHECK(VertexSet{2, 3} > VertexSet{1, 9});
}

TEST_CASE("for_each_subset enumerates in lexicographic order")
{
    std::vector<VertexSet> seen;
    for_each_subset(VertexSet{1, 3, 4, 6}, 2, [&](const VertexSet& s) {
        seen.push_back(s);
        return true;
    });
    REQUIRE(seen.size() == 6);
    CHECK(seen.front() == VertexSet{1, 3});
    CHECK(seen.back() == VertexSet{4, 6});
    CHECK(std::is_sorted(seen.begin(), seen.end()));

    int count = 0;
    for_each_subset(VertexSet::range(0, 6), 3, [&](const VertexSet&) { return ++count < 4; });
    CHECK(count == 4);

    count = 0;
    for_each_subset(VertexSet{1, 2}, 3, [&](const VertexSet&) { return ++count, true; });
    CHECK(count == 0);
}
