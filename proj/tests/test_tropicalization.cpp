#include "doctest.h"

#include "loggw/errors.hpp"
#include "loggw/tropicalization.hpp"
#include "support.hpp"

using namespace loggw;
using namespace loggw::testing;

namespace {

LogSpaceSkeleton skeleton(const std::string& name) {
    return io::parse_skeleton(io::read_file(fixture(name + "/skeleton.json")));
}

SkeletonMap map_of(std::vector<int> point, std::vector<Mat> hom) { return SkeletonMap{std::move(point), std::move(hom)}; }

Mat empty_rows(std::size_t r) { return Mat(r, Vec{}); }

}  // namespace

TEST_CASE("an elliptic skeleton with a swap has monodromy") {
    LogSpaceSkeleton s = skeleton("elliptic_swap");
    ConeComplex c = build_trop(s);
    CHECK_FALSE(c.monodromy_free);
    CHECK_FALSE(is_monodromy_free(c));
    REQUIRE(c.witnesses.size() == 1);
    const auto& w = c.witnesses[0];
    CHECK(w.face.point == s.point_index("q1"));
    CHECK(w.face.rays.size() == 2);
    CHECK(w.permutation.size() == 2);
    CHECK(w.path.size() == 4);
}

TEST_CASE("the same skeleton without the swap is monodromy free") {
    LogSpaceSkeleton s = skeleton("elliptic_identity");
    ConeComplex c = build_trop(s);
    CHECK(c.monodromy_free);
    CHECK(c.witnesses.empty());
    // The two nodes glue along the common two-dimensional face of both components.
    int common = -1;
    for (const auto& [face, cls] : c.face_class)
        if (face.point == s.point_index("eta1") && face.rays.size() == 2) {
            FaceNode rep = c.class_representative[static_cast<std::size_t>(cls)];
            if (rep.point == s.point_index("q1")) common = cls;
        }
    CHECK(common >= 0);
}

TEST_CASE("cones and faces of a single orthant") {
    LogSpaceSkeleton s = skeleton("single_orthant");
    ConeComplex c = build_trop(s);
    CHECK(c.rays[0] == M({{0, 1}, {1, 0}}));
    CHECK(c.faces[0].size() == 4);
    CHECK(c.class_representative.size() == 4);
    CHECK(c.gluings.empty());
}

TEST_CASE("a forest of cones glues at the vertex") {
    LogSpaceSkeleton s = skeleton("forest");
    ConeComplex c = build_trop(s);
    CHECK(c.monodromy_free);
    // Origins of all three cones form one class; each ray is its own class.
    CHECK(c.class_representative.size() == 3);
}

TEST_CASE("skeleton validation") {
    LogSpaceSkeleton s = skeleton("p1_relative");
    validate_skeleton(s);
    CHECK(generization(s, 0, 1).has_value());
    CHECK_FALSE(generization(s, 1, 0).has_value());

    LogSpaceSkeleton bad = s;
    bad.specializations.push_back({1, 0, empty_rows(1)});
    CHECK_THROWS_AS(validate_skeleton(bad), ValidationError);  // cycle

    LogSpaceSkeleton nf = skeleton("single_orthant");
    nf.points.push_back({"generic", ToricMonoid::orthant(1)});
    nf.specializations.push_back({0, 1, M({{1, 1}})});  // not a face quotient
    CHECK_THROWS_AS(validate_skeleton(nf), ValidationError);
}

TEST_CASE("tropicalization is functorial") {
    LogSpaceSkeleton forest = skeleton("forest");
    LogSpaceSkeleton p1 = skeleton("p1_relative");
    int zero = p1.point_index("zero"), gen = p1.point_index("generic");
    SkeletonMap f = map_of({zero, gen, gen}, {M({{1}}), empty_rows(1), Mat{}});
    SkeletonMap g = map_of({zero, gen}, {M({{2}}), Mat{}});

    ComplexMap tf = trop_functor(f, forest, p1);
    ComplexMap tg = trop_functor(g, p1, p1);
    ComplexMap tgf = trop_functor(compose(g, f), forest, p1);
    CHECK(tgf.point == std::vector<int>{zero, gen, gen});
    for (std::size_t x = 0; x < forest.points.size(); ++x) {
        std::size_t y = static_cast<std::size_t>(tf.point[x]);
        CHECK(tgf.linear[x] == mul(tg.linear[y], tf.linear[x], cols(tf.linear[x], forest.points[x].stalk.ambient())));
    }
    CHECK(tgf.linear[0] == M({{2}}));

    ComplexMap id = trop_functor(identity_map(forest), forest, forest);
    for (std::size_t x = 0; x < forest.points.size(); ++x)
        CHECK(id.linear[x] == identity(forest.points[x].stalk.ambient()));

    // The generic point cannot land on a more special point than its specializations.
    SkeletonMap broken = map_of({gen, gen, zero}, {empty_rows(1), empty_rows(1), Mat{}});
    CHECK_THROWS_AS(trop_functor(broken, forest, p1), ValidationError);
}

TEST_CASE("tropicalization of a stable map into a relative line") {
    GhostCurve g = load_graph("squaremonoideg");
    MapType t = load_type("squaremonoideg", g);
    LogSpaceSkeleton p1 = skeleton("p1_relative");
    ConeComplex cx = build_trop(p1);
    int zero = p1.point_index("zero"), gen = p1.point_index("generic");

    SkeletonMap a;
    for (std::size_t i = 0; i < g.num_points(); ++i) {
        bool n = g.stalk(g.point(i)).ambient() == 1;
        a.point.push_back(n ? zero : gen);
        a.hom.push_back(n ? M({{1}}) : Mat{});
    }
    TropicalData d{M({{1}, {1}, {2}}), V({1, 1, 1, 1})};
    d.V.push_back(Vec{});
    d.V.push_back(Vec{});
    PlacedCurve pc = trop_of_stable_map(g, t, d, p1, cx, a);
    REQUIRE(pc.vertices.size() == 5);
    CHECK(pc.vertices[0].vector == V({1}));
    CHECK(pc.vertices[2].vector == V({2}));
    CHECK(pc.vertices[0].face_class != pc.vertices[3].face_class);
    CHECK(pc.vertices[3].face_class == face_class_of(cx, p1, gen, Vec{}));
    REQUIRE(pc.edges.size() == 4);
    CHECK(pc.edges[1].from == V({1}));
    CHECK(pc.edges[1].to == V({2}));
    CHECK(pc.legs[2].direction == V({2}));

    SkeletonMap wrong = a;
    wrong.hom[0] = M({{2}});
    CHECK_THROWS_AS(trop_of_stable_map(g, t, d, p1, cx, wrong), ValidationError);
}
