#include "kkms/polytope.hpp"

#include "kkms/errors.hpp"

#include <doctest.h>
#include <map>

using namespace kkms;

namespace {

std::vector<RVector> square_vertices()
{
    return {rpoint_int({-1, -1}), rpoint_int({1, -1}), rpoint_int({-1, 1}), rpoint_int({1, 1})};
}

std::map<int, int> faces_by_dim(const Polytope& p)
{
    std::map<int, int> counts;
    for (const Face& f : p.faces())
        ++counts[f.dim];
    return counts;
}

int euler_sum(const Polytope& p)
{
    int s = 0;
    for (const Face& f : p.faces())
        s += (f.dim % 2 == 0) ? 1 : -1;
    return s;
}

}  // namespace

TEST_CASE("simplex lattice sizes")
{
    CHECK(Polytope::simplex(1).faces().size() == 3);
    CHECK(Polytope::simplex(2).faces().size() == 7);
    CHECK(Polytope::simplex(3).faces().size() == 15);
    CHECK(Polytope::simplex(0).faces().size() == 1);
    CHECK_THROWS_AS(Polytope::simplex(-1), InvalidInput);

    const Polytope d2 = Polytope::simplex(2);
    CHECK(d2.dim() == 2);
    CHECK(d2.ambient_dim() == 3);
    CHECK(d2.face(d2.full_face_id()).barycenter == rpoint({"1/3", "1/3", "1/3"}));
}

TEST_CASE("face lattice of a square")
{
    const Polytope sq = Polytope::from_vertices(square_vertices());
    CHECK(sq.faces().size() == 9);
    const auto counts = faces_by_dim(sq);
    CHECK(counts.at(0) == 4);
    CHECK(counts.at(1) == 4);
    CHECK(counts.at(2) == 1);
    CHECK(sq.contains(rpoint_int({0, 0})));
    CHECK(!sq.contains(rpoint_int({2, 0})));
}

TEST_CASE("face lattice matches the combinatorial simplex")
{
    const Polytope tri =
        Polytope::from_vertices({rpoint_int({0, 0}), rpoint_int({1, 0}), rpoint_int({0, 1})});
    const Polytope d2 = Polytope::simplex(2);
    REQUIRE(tri.faces().size() == d2.faces().size());
    for (std::size_t i = 0; i < tri.faces().size(); ++i)
        CHECK(tri.faces()[i].dim == d2.faces()[i].dim);
}

TEST_CASE("face lattice of a cube")
{
    std::vector<RVector> cube;
    for (long x : {-1, 1})
        for (long y : {-1, 1})
            for (long z : {-1, 1})
                cube.push_back(rpoint_int({x, y, z}));
    const Polytope p = Polytope::from_vertices(cube);
    CHECK(p.faces().size() == 27);
    const auto counts = faces_by_dim(p);
    CHECK(counts.at(0) == 8);
    CHECK(counts.at(1) == 12);
    CHECK(counts.at(2) == 6);
    CHECK(counts.at(3) == 1);
}

TEST_CASE("degenerate and non-vertex input is rejected")
{
    CHECK_THROWS_AS(
        Polytope::from_vertices({rpoint_int({0, 0}), rpoint_int({1, 0}), rpoint_int({2, 0})}),
        InvalidInput);
    auto pts = square_vertices();
    pts.push_back(rpoint_int({0, 0}));
    CHECK_THROWS_WITH_AS(Polytope::from_vertices(pts),
                         doctest::Contains("point 4"), InvalidInput);
}

TEST_CASE("support faces")
{
    const Polytope sq = Polytope::from_vertices(square_vertices());
    CHECK(sq.face(sq.support_face(rpoint({"1/3", "0"}))).dim == 2);
    const int edge = sq.support_face(rpoint_int({1, 0}));
    CHECK(sq.face(edge).dim == 1);
    CHECK(sq.face(edge).vertices == std::vector<int>{1, 3});
    const int corner = sq.support_face(rpoint_int({1, 1}));
    CHECK(sq.face(corner).dim == 0);
    CHECK(sq.face(corner).vertices == std::vector<int>{3});
    CHECK_THROWS_AS(sq.support_face(rpoint_int({2, 2})), InvalidInput);
}

TEST_CASE("support face of every face barycenter is that face")
{
    for (const Polytope& p : {Polytope::from_vertices(square_vertices()), Polytope::simplex(2),
                              Polytope::product(Polytope::simplex(1), 2)})
        for (const Face& f : p.faces())
            CHECK(p.support_face(f.barycenter) == f.id);
}

TEST_CASE("cone membership")
{
    const Polytope sq = Polytope::from_vertices(square_vertices());
    const int edge = sq.support_face(rpoint_int({1, 0}));
    CHECK(sq.cone_contains(edge, rpoint_int({5, 0})));
    CHECK(!sq.cone_contains(edge, rpoint_int({-1, 0})));
    const int corner = sq.support_face(rpoint_int({1, 1}));
    CHECK(sq.cone_contains(corner, rpoint_int({2, 2})));
    CHECK(!sq.cone_contains(corner, rpoint_int({2, 1})));
    CHECK_THROWS_AS(sq.cone_contains(edge, rpoint_int({0, 0})), InvalidInput);

    const auto scale = sq.cone_scale_to_face(edge, rpoint_int({5, 0}));
    REQUIRE(scale.has_value());
    CHECK(scale->second(0) == 1);

    // Every vertex of every face lies in that face's cone when 0 is interior.
    for (const Face& f : sq.faces())
        for (int v : f.vertices)
            CHECK(sq.cone_contains(f.id, sq.vertices()[static_cast<std::size_t>(v)]));

    // Cones are anchored at the origin: a simplex not containing 0 rejects.
    CHECK_THROWS_AS(Polytope::simplex(2).cone_contains(0, rpoint_int({1, 0, 0})),
                    HypothesisViolation);
}

TEST_CASE("products")
{
    CHECK(Polytope::product(Polytope::simplex(1), 2).faces().size() == 9);
    CHECK(Polytope::product(Polytope::simplex(1), 3).faces().size() == 27);
    CHECK(Polytope::product(Polytope::simplex(2), 2).faces().size() == 49);
    CHECK_THROWS_AS(Polytope::product(Polytope::simplex(1), 0), InvalidInput);

    const Polytope sq = Polytope::product(Polytope::simplex(1), 2);
    CHECK(sq.dim() == 2);
    CHECK(sq.ambient_dim() == 4);
    CHECK(sq.vertices().size() == 4);
    // Product barycenter concatenates the factor barycenters.
    CHECK(sq.face(sq.full_face_id()).barycenter == rpoint({"1/2", "1/2", "1/2", "1/2"}));
}

TEST_CASE("lattices are graded and satisfy the Euler relation")
{
    for (const Polytope& p :
         {Polytope::from_vertices(square_vertices()), Polytope::simplex(3),
          Polytope::product(Polytope::simplex(2), 2),
          Polytope::from_vertices({rpoint_int({2, 0}), rpoint_int({-2, 0}), rpoint_int({0, 2}),
                                   rpoint_int({0, -2})})})
    {
        CHECK(euler_sum(p) == 1);
        for (const Face& f : p.faces())
        {
            if (f.dim == 0)
                continue;
            bool has_chain = false;
            for (int sub : p.subfaces_of(f.id))
                has_chain = has_chain || (p.face(sub).dim == f.dim - 1 && sub != f.id);
            CHECK(has_chain);
        }
    }
}

TEST_CASE("face containment is vertex-set containment and meets exist")
{
    const Polytope p = Polytope::simplex(2);
    const auto meet = p.intersect_faces(p.face_by_vertex_set({0, 1}).value(),
                                        p.face_by_vertex_set({1, 2}).value());
    REQUIRE(meet.has_value());
    CHECK(p.face(*meet).vertices == std::vector<int>{1});
    CHECK(!p.intersect_faces(0, 1).has_value());
    CHECK(p.subfaces_of(p.full_face_id()).size() == p.faces().size());
}

TEST_CASE("translation preserves the lattice and shifts queries")
{
    const Polytope d2 = Polytope::simplex(2);
    const RVector shift = -d2.face(d2.full_face_id()).barycenter;
    const Polytope centered = d2.translated(shift);
    CHECK(centered.faces().size() == 7);
    CHECK(centered.contains(RVector::Zero(3)));
    // After centering, every proper face's barycenter sits in its own cone.
    for (const Face& f : centered.faces())
        if (f.id != centered.full_face_id())
            CHECK(centered.cone_contains(f.id, f.barycenter));
}

TEST_CASE("chart round-trips")
{
    const Polytope d2 = Polytope::simplex(2);
    const RVector x = rpoint({"1/6", "1/3", "1/2"});
    const auto u = d2.to_chart(x);
    REQUIRE(u.has_value());
    CHECK(d2.from_chart(*u) == x);
    CHECK(!d2.to_chart(rpoint_int({1, 1, 1})).has_value());
}
