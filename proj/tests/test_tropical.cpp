#include "doctest.h"

#include "loggw/errors.hpp"
#include "loggw/tropical.hpp"
#include "support.hpp"

using namespace loggw;
using namespace loggw::testing;

namespace {

// Sum of the dual Hilbert basis with positive weights: a local point of Q.
Vec interior_point(const ToricMonoid& Q, std::mt19937_64& rng) {
    ToricMonoid dq = dual(Q);
    Vec p = zero_vec(Q.ambient());
    for (const auto& h : dq.hilbert()) p = add(p, scale(Int(1 + static_cast<long long>(rng() % 4)), h));
    return p;
}

}  // namespace

TEST_CASE("tropical data round trip on the square degeneration") {
    GhostCurve g = load_graph("squaremonoideg");
    MapType t = load_type("squaremonoideg", g);
    BasicResult r = compute_basic_monoid(g, t);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 10; ++i) {
        Vec p = interior_point(r.Q, rng);
        TropicalData d = tropical_data_from_point(g, r, p);
        auto u = type_from_tropical_data(g, d);
        for (std::size_t e = 0; e < g.edges.size(); ++e) CHECK(same_functional(g.edges[e].stalk, u[e], *t.u_q[e]));
    }
    CHECK_THROWS_AS(tropical_data_from_point(g, r, zero_vec(3)), ValidationError);
}

TEST_CASE("component balancing") {
    GhostCurve g = load_graph("squaremonoideg");
    MapType t = load_type("squaremonoideg", g);
    for (std::size_t v = 0; v < g.vertices.size(); ++v) CHECK(check_component_balancing(g, t, static_cast<int>(v)).ok);
    MapType bad = t;
    bad.u_p[2] = V({1});
    CHECK_FALSE(check_component_balancing(g, bad, 2).ok);
}

TEST_CASE("relative contacts: only the prescribed tangency balances") {
    GhostCurve g = load_graph("basicrelative_11");
    auto tau = io::parse_tau(io::read_file(fixture("basicrelative_11/tau.json")), g);
    int hits = 0;
    for (int a = -5; a <= 5; ++a)
        for (int b = -5; b <= 5; ++b) {
            MapType t;
            t.u_p = {V({a}), V({b}), Vec{}};
            t.tau = tau;
            if (check_component_balancing(g, t, 0).ok) {
                ++hits;
                CHECK(a == 1);
                CHECK(b == 1);
            }
        }
    CHECK(hits == 1);
}

TEST_CASE("torsor degree") {
    std::vector<NodeSection> nodes{{Int(1), Int(0), Int(1)}, {Int(0), Int(4), Int(2)}};
    CHECK(torsor_degree(nodes, V({1, 1})) == Int(-1));
    CHECK(torsor_degree(nodes, Vec{}) == Int(1));
    nodes[1].e = 3;
    CHECK_THROWS_AS(torsor_degree(nodes, Vec{}), ValidationError);
}

TEST_CASE("tropical curve of the toric conic") {
    GhostCurve g = load_graph("toric_conic");
    MapType t = load_type("toric_conic", g);
    TropicalData d;
    auto pj = io::read_file(fixture("toric_conic/point.json"));
    for (const auto& v : g.vertices) d.V.push_back(io::parse_vec(pj["V"][v.name], v.name));
    for (const auto& e : g.edges) d.e.push_back(io::parse_int(pj["e"][e.name], e.name));
    TropicalCurve c = build_tropical_curve(g, t, d, SectionMode::GroupSections);
    CHECK(c.rank == 2);
    CHECK(c.vertices[0].position == V({5, 0}));
    CHECK(c.vertices[1].position == V({0, 3}));
    CHECK(check_tropical_balancing(c).all());
    CHECK(check_edge_geometry(c));
    for (const auto& l : c.legs) CHECK_FALSE(l.correction);
}

TEST_CASE("sections mode adds correction legs and keeps balancing") {
    GhostCurve g = load_graph("squaremonoideg");
    MapType t = load_type("squaremonoideg", g);
    BasicResult r = compute_basic_monoid(g, t);
    std::mt19937_64 rng(5);
    TropicalData d = tropical_data_from_point(g, r, interior_point(r.Q, rng));
    TropicalCurve c = build_tropical_curve(g, t, d, SectionMode::Sections);
    CHECK(c.rank == 1);
    CHECK(check_tropical_balancing(c).all());
    CHECK(check_edge_geometry(c));
    bool any_correction = false;
    for (const auto& l : c.legs) any_correction = any_correction || l.correction;
    CHECK(any_correction);
}

TEST_CASE("random prestable curves: the point is recovered from tropical data") {
    RandomCurveGen gen(99);
    std::mt19937_64 rng(1);
    int found = 0;
    for (int it = 0; it < 3000 && found < 25; ++it) {
        auto [g, t] = gen.instance();
        BasicResult r = compute_basic_monoid(g, t);
        if (!r.prestable || !r.Q.is_sharp() || r.Q.ambient() == 0) continue;
        ++found;
        Vec p = interior_point(r.Q, rng);
        TropicalData d = tropical_data_from_point(g, r, p);
        auto u = type_from_tropical_data(g, d);
        for (std::size_t e = 0; e < g.edges.size(); ++e) CHECK(same_functional(g.edges[e].stalk, u[e], *t.u_q[e]));
        Candidate c;
        c.Q = ToricMonoid::orthant(1);
        for (const auto& v : d.V) c.phi.push_back(Mat{v});
        for (const auto& e : d.e) c.rho.push_back(Vec{e});
        Factorization f = factor_through_basic(g, t, r, c);
        REQUIRE(f.ok);
        CHECK(f.map == Mat{p});
    }
    CHECK(found == 25);
}
