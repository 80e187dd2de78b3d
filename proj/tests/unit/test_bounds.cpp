#include "helpers.hpp"

#include <berge/bounds.hpp>
#include <berge/numeric.hpp>

#include <doctest.h>

using namespace berge;
using berge::test::error_of;

namespace {

BoundResult B(const std::string& id, const char* params)
{
    return eval_bound(id, parse_params(params));
}

} // namespace

TEST_CASE("path bounds for all n")
{
    auto a = B("gkl-path-i", "n=8,l=4,r=3");
    CHECK(a.applicable);
    CHECK(a.kind == BoundKind::conditional_exact);
    CHECK(a.value == Rational(8));
    CHECK(a.valid_for_all_n);
    CHECK_FALSE(a.hypotheses.empty());

    auto b = B("gkl-path-i", "n=8,l=3,r=3");
    CHECK_FALSE(b.applicable);
    CHECK_FALSE(b.value.has_value());
    CHECK(b.formula_value == Rational(8, 3));

    auto c = B("gkl-path-i", "n=9,l=4,r=3");
    CHECK(c.kind == BoundKind::upper);
    CHECK(c.value == Rational(9));

    auto d = B("gkl-path-ii", "n=8,l=3,r=3");
    CHECK(d.kind == BoundKind::conditional_exact);
    CHECK(d.value == Rational(4));

    auto e = B("gkl-path-ii", "n=9,l=3,r=3");
    CHECK(e.kind == BoundKind::upper);
    CHECK(e.value == Rational(9, 2));

    CHECK_FALSE(B("gkl-path-ii", "n=9,l=2,r=3").applicable);
}

TEST_CASE("connected path")
{
    auto a = B("connected-path", "n=100,l=9,r=3");
    CHECK_FALSE(a.applicable);
    CHECK(a.formula_value == Rational(580));

    auto b = B("connected-path", "n=100,l=40,r=3");
    CHECK(b.applicable);
    CHECK(b.kind == BoundKind::conditional_exact);
    // C(19,2)*81 + C(19,3) + C(19,1)
    CHECK(b.value == Rational(171 * 81 + 969 + 19));

    auto c = B("connected-path", "n=100,l=39,r=3");
    CHECK(c.value == Rational(171 * 81 + 969));
}

TEST_CASE("tree plus stars")
{
    auto a = B("tree-stars", "n=9,l=2,k=2,r=3");
    CHECK(a.kind == BoundKind::conditional_exact);
    CHECK(a.value == Rational(4));

    auto b = B("tree-stars", "n=10,l=2,k=2,r=3");
    CHECK(b.kind == BoundKind::upper);
    CHECK(b.value == Rational(5));

    auto c = B("tree-stars", "n=10,l=3,k=2,r=3");
    // (C(4,3) - C(1,3)) * ceil(9/3) + C(1,3)
    CHECK(c.value == Rational(12));
    CHECK(c.kind == BoundKind::conditional_exact);
}

TEST_CASE("matching plus stars")
{
    auto a = B("matching-stars", "n=10,k=4,r=3");
    CHECK(a.applicable);
    CHECK(a.value == Rational(22));
    auto b = B("matching-stars", "n=6,k=2,r=2");
    CHECK(b.value == Rational(5));
    CHECK_FALSE(B("matching-stars", "n=10,k=2,r=3").applicable);
}

TEST_CASE("path plus star, lower and slope")
{
    auto a = B("path-stars", "n=20,l1=3,l2=2,k=2,r=6");
    CHECK(a.applicable);
    CHECK(a.kind == BoundKind::lower);
    CHECK(a.value == Rational(3));
    bool saw_slope = false;
    for (const auto& t : a.terms)
        if (t.kind == BoundKind::slope_upper) {
            saw_slope = true;
            CHECK(t.value == Rational(1, 3));
        }
    CHECK(saw_slope);
    CHECK_FALSE(B("path-stars", "n=20,l1=3,l2=2,k=2,r=5").applicable);
    CHECK_FALSE(B("tree-stars-large-r", "n=20,l1=4,l2=2,k=2,r=7").applicable);
    CHECK(B("tree-stars-large-r", "n=20,l1=4,l2=2,k=2,r=8").applicable);
}

TEST_CASE("star plus matching")
{
    auto a = B("star-matching", "n=6,l=2,k=2,r=3");
    CHECK(a.value == Rational(2));
    auto b = B("star-matching", "n=10,l=5,k=2,r=3");
    CHECK(b.kind == BoundKind::conditional_exact);
    CHECK(b.value == Rational(20));
    auto c = B("star-matching", "n=11,l=5,k=2,r=3");
    CHECK(c.kind == BoundKind::upper);
    CHECK(c.value == Rational(22));
    CHECK_FALSE(B("star-matching", "n=6,l=2,k=3,r=3").applicable);
}

TEST_CASE("linear forests")
{
    auto a = B("connected-linear-forest", "n=20,l1=9,l2=9,r=3");
    CHECK(a.applicable);
    CHECK(a.value == Rational(36 * 11 + 84));
    CHECK(B("two-equal-paths", "n=20,l=9,r=3").value == a.value);
    CHECK_FALSE(B("connected-linear-forest", "n=20,l1=9,l2=8,r=3").applicable);
    CHECK_FALSE(B("connected-linear-forest", "n=20,l1=9,l2=9,r=4").applicable);
    CHECK_FALSE(B("two-equal-paths", "n=20,l=8,r=3").applicable);
}

TEST_CASE("two paths resolve to an interval without divisibility")
{
    auto a = B("two-paths-i", "n=50,l=17,r=3");
    CHECK(a.kind == BoundKind::interval);
    CHECK(a.value == Rational(1920));
    CHECK(a.value_high == Rational(2000));

    auto b = B("two-paths-i", "n=51,l=17,r=3");
    CHECK(b.kind == BoundKind::conditional_exact);
    CHECK(b.value == Rational(3 * 680));

    auto c = B("two-paths-ii", "n=50,l1=11,l2=9,r=3");
    CHECK(c.applicable);
    CHECK(c.value == Rational(45 * 40 + 120));
}

TEST_CASE("matching regimes")
{
    CHECK(B("berge-matching", "n=6,k=2,r=3").value == Rational(1));
    CHECK(B("berge-matching", "n=10,k=3,r=4").value == Rational(5));
    CHECK(B("berge-matching", "n=10,k=3,r=3").value == Rational(8));
    CHECK(B("berge-matching", "n=10,k=4,r=3").value == Rational(22));
}

TEST_CASE("graph and star-free bounds")
{
    CHECK(B("erdos-sos", "n=10,l=4").value == Rational(15));
    CHECK(B("star-free", "n=9,l=4,r=3").value == Rational(9));
    CHECK(B("star-free", "n=6,l=2,r=3").value == Rational(2));
}

TEST_CASE("star degree thresholds")
{
    CHECK(star_degree_threshold(4, 3) == 3);
    CHECK(star_degree_threshold(2, 3) == 1);
    CHECK(star_degree_threshold(3, 3) == 2);
    CHECK(star_degree_threshold(5, 3) == 6);
}

TEST_CASE("crossover point")
{
    auto n0 = two_paths_crossover(9, 3);
    REQUIRE(n0.has_value());
    CHECK(*n0 == 9);
    for (std::int64_t n = *n0; n < *n0 + 30; ++n)
        CHECK(Rational(binom_zero(9, 2) * (n - 9) + binom_zero(9, 3)) >= Rational(n * binom_zero(9, 3), 9));
}

TEST_CASE("every id evaluates and is pure")
{
    CHECK(theorem_ids().size() == 15);
    const ParamMap p{{"n", 30}, {"l", 5}, {"l1", 5}, {"l2", 3}, {"k", 2}, {"r", 3}};
    for (const auto& id : theorem_ids()) {
        CAPTURE(id);
        auto a = eval_bound(id, p);
        CHECK(a == eval_bound(id, p));
        CHECK(a.theorem_id == id);
        CHECK(a.applicable == a.value.has_value());
        if (a.kind == BoundKind::conditional_exact && a.applicable)
            CHECK_FALSE(a.hypotheses.empty());
    }
}

TEST_CASE("errors")
{
    CHECK(error_of([] { B("nope", "n=1"); }) == ErrorCode::unknown_theorem);
    CHECK(error_of([] { B("gkl-path-i", "n=8,l=4"); }) == ErrorCode::missing_param);
    CHECK(error_of([] { B("gkl-path-i", "n=-8,l=4,r=3"); }) == ErrorCode::bad_parameters);
    CHECK(error_of([] { parse_params("n=8,,l"); }) == ErrorCode::malformed_input);
    CHECK(error_of([] { parse_params("n=x"); }) == ErrorCode::malformed_input);
}

TEST_CASE("kind names round trip")
{
    for (auto k : {BoundKind::exact, BoundKind::upper, BoundKind::lower, BoundKind::slope_upper,
             BoundKind::conditional_exact, BoundKind::interval})
        CHECK(parse_bound_kind(to_string(k)) == k);
}
