#include "kkms/geometry.hpp"

#include "kkms/errors.hpp"
#include "oracles.hpp"

#include <doctest.h>
#include <random>

using namespace kkms;

TEST_CASE("exact inner products")
{
    CHECK(dot(rpoint_int({1, 0}), rpoint_int({0, 1})) == 0);
    CHECK(dot(rpoint({"1/2", "1/3"}), rpoint_int({2, 3})) == 2);
    CHECK(dot(rpoint_int({3, -4}), rpoint_int({3, -4})) == 25);
    CHECK_THROWS_AS(dot(rpoint_int({1}), rpoint_int({1, 2})), DimensionMismatch);
}

TEST_CASE("halfspace membership by kind")
{
    const RVector n = rpoint_int({1, 1});
    CHECK(Halfspace(n, HalfspaceKind::ClosedHalfspace).contains(rpoint_int({0, 0})));
    CHECK(Halfspace(n, HalfspaceKind::ClosedHalfspace).contains(rpoint_int({1, 2})));
    CHECK(!Halfspace(n, HalfspaceKind::OpenHalfspace).contains(rpoint_int({1, -1})));
    CHECK(Halfspace(n, HalfspaceKind::BoundaryHyperplane).contains(rpoint_int({1, -1})));
    CHECK_THROWS_AS(Halfspace(rpoint_int({0, 0}), HalfspaceKind::ClosedHalfspace), InvalidInput);
}

TEST_CASE("origin_in_hull certificates")
{
    SUBCASE("origin itself short-circuits")
    {
        const auto cert = origin_in_hull({rpoint_int({0, 0})});
        REQUIRE(cert.in_hull);
        CHECK(cert.weights(0) == 1);
    }
    SUBCASE("strict separation")
    {
        const auto cert = origin_in_hull({rpoint_int({1, 0}), rpoint_int({0, 1})});
        REQUIRE(!cert.in_hull);
        CHECK(dot(cert.separator, rpoint_int({1, 0})) > 0);
        CHECK(dot(cert.separator, rpoint_int({0, 1})) > 0);
    }
    SUBCASE("interior witness")
    {
        const auto cert =
            origin_in_hull({rpoint_int({1, 0}), rpoint_int({-1, 1}), rpoint_int({-1, -1})});
        REQUIRE(cert.in_hull);
        CHECK(cert.weights == rpoint({"1/2", "1/4", "1/4"}));
    }
    SUBCASE("empty input is rejected")
    {
        CHECK_THROWS_AS(origin_in_hull({}), InvalidInput);
    }
}

TEST_CASE("point_in_hull reduces to the origin test")
{
    const auto mid = point_in_hull(rpoint_int({1}), {rpoint_int({0}), rpoint_int({2})});
    REQUIRE(mid.in_hull);
    CHECK(mid.weights == rpoint({"1/2", "1/2"}));

    CHECK(!point_in_hull(rpoint_int({2}).eval(), {rpoint_int({0}), rpoint_int({1})}).in_hull);

    const auto bary = point_in_hull(
        rpoint({"1/3", "1/3"}), {rpoint_int({0, 0}), rpoint_int({1, 0}), rpoint_int({0, 1})});
    REQUIRE(bary.in_hull);
    CHECK(bary.weights == rpoint({"1/3", "1/3", "1/3"}));
}

TEST_CASE("positive scaling never changes hull membership of the origin")
{
    CHECK(scale_invariance_check({rpoint_int({1, 0}), rpoint_int({-1, 1}), rpoint_int({-1, -1})},
                                 {Rational(2), Rational(3), Rational(5)}));
    CHECK(scale_invariance_check({rpoint_int({1, 0}), rpoint_int({0, 1})},
                                 {Rational(7), Rational(1, 7)}));
    CHECK_THROWS_AS(scale_invariance_check({rpoint_int({1})}, {Rational(0)}), InvalidInput);

    std::mt19937_64 rng(777);
    auto coin = [&](int lo, int hi) { return static_cast<int>(rng() % (hi - lo + 1)) + lo; };
    for (int trial = 0; trial < 50; ++trial)
    {
        const int dim = coin(1, 3);
        const int n = coin(1, 5);
        std::vector<RVector> pts;
        std::vector<Rational> alphas;
        for (int i = 0; i < n; ++i)
        {
            RVector p(dim);
            for (int c = 0; c < dim; ++c)
                p(c) = Rational(coin(-6, 6), coin(1, 4));
            pts.push_back(p);
            alphas.emplace_back(coin(1, 9), coin(1, 9));
        }
        CHECK(scale_invariance_check(pts, alphas));

        // Cross-check both sides against the LP-free oracle.
        const RVector zero = RVector::Zero(dim);
        std::vector<RVector> scaled;
        for (int i = 0; i < n; ++i)
            scaled.push_back(alphas[static_cast<std::size_t>(i)] * pts[static_cast<std::size_t>(i)]);
        CHECK(origin_in_hull(pts).in_hull == oracles::hull_membership_bruteforce(zero, pts));
        CHECK(origin_in_hull(scaled).in_hull == oracles::hull_membership_bruteforce(zero, scaled));
    }
}
