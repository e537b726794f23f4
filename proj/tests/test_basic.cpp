#include "doctest.h"

#include "loggw/basic.hpp"
#include "support.hpp"

using namespace loggw;
using namespace loggw::testing;

namespace {

BasicResult basic_of(const std::string& name) {
    GhostCurve g = load_graph(name);
    return compute_basic_monoid(g, load_type(name, g));
}

bool same_monoid(const ToricMonoid& a, const ToricMonoid& b) {
    if (a.ambient() != b.ambient()) return false;
    for (const auto& x : a.generators())
        if (!b.contains(x)) return false;
    for (const auto& x : b.generators())
        if (!a.contains(x)) return false;
    return true;
}

}  // namespace

TEST_CASE("square monoid degeneration") {
    BasicResult r = basic_of("squaremonoideg");
    CHECK(r.Q.ambient() == 3);
    CHECK(r.Q.hilbert().size() == 4);
    CHECK(r.Q_relations == M({{1, -1, -1, 1}}));
    CHECK(r.prestable);
    CHECK(r.rho == M({{1, 0, 0}, {-1, 0, 1}, {0, -1, 1}, {0, 1, 0}}));
    CHECK(r.quotient.image_saturated);
}

TEST_CASE("a cycle with equal edge contacts leaves an edge length free") {
    BasicResult r = basic_of("ex1");
    CHECK(r.Q.ambient() == 2);
    CHECK(r.Q.hilbert() == M({{0, 1}, {1, 0}}));
    CHECK_FALSE(r.prestable);
    REQUIRE(r.prestable_witnesses.size() == 1);
    CHECK(r.prestable_witnesses[0] == "rho[q2] = 0");
}

TEST_CASE("unequal contacts give a non-saturated image") {
    BasicResult r = basic_of("ex2");
    CHECK_FALSE(r.quotient.image_saturated);
    CHECK(r.quotient.saturation_added == M({{0, 1}}));
    CHECK(r.Q.hilbert() == M({{0, 1}, {1, -6}}));
    CHECK(r.rho == M({{0, 3}, {0, 2}}));
    CHECK(r.prestable);
}

TEST_CASE("torsion in the relation lattice") {
    BasicResult r = basic_of("ex3");
    CHECK(r.quotient.torsion == Vec{Int(2)});
    CHECK(r.saturation_witness == M({{0, 0, 1, -1}}));
    CHECK_FALSE(r.Q.is_sharp());
    CHECK_FALSE(r.prestable);
}

TEST_CASE("two components on a toric surface give N") {
    BasicResult r = basic_of("twocomponent");
    CHECK(r.Q.ambient() == 1);
    CHECK(r.Q.hilbert() == M({{1}}));
    CHECK(r.rho == M({{1}, {1}}));
}

TEST_CASE("toric conic gives a free monoid of rank five") {
    BasicResult r = basic_of("toric_conic");
    CHECK(r.Q.ambient() == 5);
    CHECK(r.Q.hilbert().size() == 5);
    CHECK(r.Q_relations.empty());
    CHECK(r.prestable);
}

TEST_CASE("no edges: Q is the vertex stalk") {
    GhostCurve g = load_graph("empty_edge");
    BasicResult r = compute_basic_monoid(g, load_type("empty_edge", g));
    CHECK(r.Q.hilbert() == M({{1, 0}, {1, 1}, {1, 2}}));
    CHECK(r.Q_relations == M({{1, -2, 1}}));
}

TEST_CASE("the basic monoid is basic for itself") {
    for (const char* name : {"squaremonoideg", "twocomponent", "toric_conic", "ex2"}) {
        CAPTURE(name);
        GhostCurve g = load_graph(name);
        MapType t = load_type(name, g);
        BasicResult r = compute_basic_monoid(g, t);
        Factorization f = factor_through_basic(g, t, r, as_candidate(r));
        CHECK(f.ok);
        CHECK(f.map == identity(r.Q.ambient()));
        CHECK(is_basic(g, t, r, as_candidate(r)));
    }
}

TEST_CASE("a non-basic candidate factors but is not basic") {
    GhostCurve g = load_graph("twocomponent");
    MapType t = load_type("twocomponent", g);
    BasicResult r = compute_basic_monoid(g, t);
    Candidate c = as_candidate(r);
    c.Q = ToricMonoid::orthant(1);
    c.rho = M({{2}, {2}});
    for (auto& p : c.phi)
        for (auto& row : p) row = scale(Int(2), row);
    Factorization f = factor_through_basic(g, t, r, c);
    CHECK(f.ok);
    CHECK(f.map == M({{2}}));
    CHECK_FALSE(is_basic(g, t, r, c));
}

TEST_CASE("candidate violating the edge relation does not factor") {
    GhostCurve g = load_graph("twocomponent");
    MapType t = load_type("twocomponent", g);
    BasicResult r = compute_basic_monoid(g, t);
    Candidate c = as_candidate(r);
    c.rho = M({{1}, {2}});
    CHECK_FALSE(factor_through_basic(g, t, r, c).ok);
}

TEST_CASE("duality: the dual of Q is the dual basic cone (random curves)") {
    RandomCurveGen gen(2024);
    for (int it = 0; it < 60; ++it) {
        auto [g, t] = gen.instance();
        REQUIRE(validate_ghost(g).empty());
        BasicResult r = compute_basic_monoid(g, t);
        ToricMonoid dq = dual(r.Q);
        Mat pulled;
        for (const auto& h : dq.saturation_generators()) pulled.push_back(vec_mul(h, r.quotient.projection, r.layout.ambient));
        ToricMonoid lhs = ToricMonoid::from_generators(pulled, r.layout.ambient);
        CHECK(same_monoid(lhs, dual_basic_cone(g, t)));
    }
}
