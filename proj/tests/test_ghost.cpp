#include "doctest.h"

#include "loggw/errors.hpp"
#include "loggw/ghost.hpp"
#include "support.hpp"

using namespace loggw;
using namespace loggw::testing;

namespace {

GhostCurve segment() {
    GhostCurve g;
    g.vertices.push_back({"a", ToricMonoid::orthant(1), std::nullopt});
    g.vertices.push_back({"b", ToricMonoid::orthant(1), std::nullopt});
    g.edges.push_back({"q", 0, 1, ToricMonoid::orthant(1), M({{1}}), M({{1}})});
    g.legs.push_back({"p", 1, ToricMonoid::orthant(1), M({{1}})});
    return g;
}

}  // namespace

TEST_CASE("valid curves pass validation") {
    CHECK(validate_ghost(segment()).empty());
    for (const char* name : {"ex1", "ex2", "ex3", "squaremonoideg", "twocomponent", "toric_conic"}) {
        CAPTURE(name);
        GhostCurve g = load_graph(name);
        CHECK(validate_ghost(g).empty());
        CHECK(validate_type(g, load_type(name, g)).empty());
    }
}

TEST_CASE("validation rejects bad generization maps") {
    GhostCurve g = segment();
    g.edges[0].chi1 = M({{-1}});  // not a monoid map
    CHECK_FALSE(validate_ghost(g).empty());
    CHECK_THROWS_AS(require_valid(g), ValidationError);

    g = segment();
    g.edges[0].chi2 = M({{1, 0}});  // wrong shape
    CHECK_FALSE(validate_ghost(g).empty());

    g = segment();
    g.vertices.push_back({"c", ToricMonoid::orthant(1), std::nullopt});  // disconnected
    CHECK_FALSE(validate_ghost(g).empty());
}

TEST_CASE("type validation checks shapes") {
    GhostCurve g = segment();
    MapType t;
    t.u_q = {V({1})};
    t.u_p = {V({1, 2})};
    CHECK_FALSE(validate_type(g, t).empty());
    t.u_p = {V({1})};
    CHECK(validate_type(g, t).empty());
    CHECK(t.determined());
    t.u_q = {std::nullopt};
    CHECK_FALSE(t.determined());
}

TEST_CASE("cycle rank and point addressing") {
    GhostCurve g = load_graph("toric_conic");
    CHECK(g.cycle_rank() == 0);
    GhostCurve ex = load_graph("ex1");
    CHECK(ex.cycle_rank() == 1);
    for (std::size_t i = 0; i < g.num_points(); ++i) CHECK(g.point_index(g.point(i)) == i);
    CHECK(g.vertex_index("v4") == 5);
    CHECK(g.edge_index("nope") == -1);
}

TEST_CASE("special points carry outward weights") {
    GhostCurve g = segment();
    MapType t;
    t.u_q = {V({3})};
    t.u_p = {V({2})};
    auto a = special_points(g, 0), b = special_points(g, 1);
    REQUIRE(a.size() == 1);
    REQUIRE(b.size() == 2);
    CHECK(flag_weight(t, a[0]) == V({3}));
    Vec sum = zero_vec(1);
    for (const auto& x : b) sum = add(sum, flag_weight(t, x));
    CHECK(sum == V({-1}));
}

TEST_CASE("colimit group of a vertex") {
    GhostCurve g = load_graph("twocomponent");
    ColimitGroup nd = colimit_group(g, 2);
    CHECK(nd.points.size() == 6);
    CHECK(nd.rank == 2);
    CHECK(nd.torsion.empty());
    // The same vector entered at two identified points is the same class.
    Vec z = sub(nd.embed(0, V({1, 0})), nd.embed(1, V({1, 0})));
    CHECK(nd.is_zero_class(z));
}

TEST_CASE("global sections of the ghost sheaf") {
    GhostCurve g = load_graph("twocomponent");
    GlobalSections s = global_sections(g);
    CHECK(s.ambient == 2 + 2 * 2 + 4 * 2);  // D3 and edges carry N^2; legs N^2
    CHECK(s.gamma.rank() == 2);
    CHECK(check_almost_generated(g, s).ok);

    GhostCurve sq = load_graph("squaremonoideg");
    GlobalSections ss = global_sections(sq);
    CHECK(ss.gamma.rank() == 1);
    CHECK(check_almost_generated(sq, ss).ok);

    // Two stalks N glued along N^2: the two coordinates are independent sections.
    GhostCurve split;
    split.vertices.push_back({"a", ToricMonoid::orthant(1), std::nullopt});
    split.vertices.push_back({"b", ToricMonoid::orthant(1), std::nullopt});
    split.edges.push_back({"q", 0, 1, ToricMonoid::orthant(2), M({{1, 0}}), M({{0, 1}})});
    GlobalSections sp = global_sections(split);
    CHECK(sp.gamma.rank() == 2);
    CHECK(check_almost_generated(split, sp).ok);
}

TEST_CASE("user-supplied section lattice is used in group-sections mode") {
    GhostCurve g = load_graph("toric_conic");
    REQUIRE(g.section_lattice.has_value());
    GlobalSections s = global_sections(g);
    SectionBasis b = section_basis(g, s, SectionMode::GroupSections);
    CHECK(b.rank == 2);
    CHECK(check_quasi_generated(g, s).ok);
}

TEST_CASE("induced type under generization") {
    MapType t;
    t.u_q = {V({1, 2})};
    t.u_p = {V({0, 3})};
    Specialization s;
    s.edges.push_back({PointKind::Edge, 0, M({{0, 1}, {1, 0}}), true});
    s.legs.push_back({PointKind::Leg, 0, M({{1, 0}, {0, 1}}), false});
    MapType r = induced_type_under_generization(t, s);
    REQUIRE(r.u_q.size() == 1);
    // pullback along the hom, sign flipped by the reversal
    CHECK(*r.u_q[0] == V({-2, -1}));
    CHECK(r.u_p[0] == V({0, 3}));
    Specialization twice = compose(s, s);
    MapType r2 = induced_type_under_generization(t, twice);
    CHECK(*r2.u_q[0] == V({1, 2}));
}
