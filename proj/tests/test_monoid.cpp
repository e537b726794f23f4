#include "doctest.h"

#include "loggw/errors.hpp"
#include "loggw/monoid.hpp"

#include <random>

using namespace loggw;

namespace {

Mat M(std::initializer_list<std::initializer_list<long long>> rows) {
    Mat m;
    for (auto r : rows) {
        Vec v;
        for (auto x : r) v.push_back(Int(x));
        m.push_back(v);
    }
    return m;
}

Vec V(std::initializer_list<long long> xs) {
    Vec v;
    for (auto x : xs) v.push_back(Int(x));
    return v;
}

ToricMonoid quadric() { return ToricMonoid::from_generators(M({{1, 0, 0}, {0, 1, 0}, {1, 0, 1}, {0, 1, 1}}), 3); }

}  // namespace

TEST_CASE("saturation") {
    auto p = ToricMonoid::from_generators(M({{1, -6}, {1, 0}, {0, 3}, {0, 2}}), 2);
    CHECK_FALSE(p.is_saturated());
    CHECK_FALSE(p.contains(V({0, 1})));
    auto s = saturate(p);
    CHECK(s.contains(V({0, 1})));
    CHECK(s.is_saturated());
    CHECK(saturate(s) == s);
    auto ns = ToricMonoid::from_generators(M({{2}, {3}}), 1);
    CHECK_FALSE(ns.is_saturated());
    CHECK_FALSE(ns.contains(V({1})));
    CHECK(ns.contains(V({5})));
    CHECK(saturate(ns).generators() == M({{1}}));
    CHECK(saturate(ToricMonoid::orthant(2)) == ToricMonoid::orthant(2));
}

TEST_CASE("duals") {
    CHECK(dual(ToricMonoid::orthant(2)).generators() == M({{0, 1}, {1, 0}}));
    auto s2 = ToricMonoid::from_generators(M({{2, 0}, {0, 2}, {1, 1}}), 2);
    CHECK(s2.is_saturated());
    CHECK(s2.hilbert() == M({{0, 2}, {1, 1}, {2, 0}}));
    CHECK(dual(s2).generators() == M({{0, 1}, {1, 0}}));
    auto dq = dual(quadric());
    CHECK(dq.hilbert().size() == 4);
    CHECK(faces(dq).size() == 10);
}

TEST_CASE("dual of dual is the saturation for full-rank groups") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> d(-4, 4);
    int checked = 0;
    for (int it = 0; it < 200 && checked < 60; ++it) {
        std::size_t n = 2 + it % 2;
        Mat g(n + 1, Vec(n));
        for (auto& r : g)
            for (auto& x : r) x = d(rng);
        auto p = ToricMonoid::from_generators(g, n);
        if (!p.is_sharp() || p.rank() != n || p.group() != identity(n)) continue;
        ++checked;
        CHECK(dual(dual(p)) == saturate(p));
    }
    CHECK(checked > 20);
}

TEST_CASE("quotient by a subgroup") {
    auto n4 = ToricMonoid::orthant(4);
    auto q1 = quotient_by_subgroup_saturated(n4, M({{1, -1, 0, 0}, {1, -1, 0, 1}}));
    CHECK(is_zero(mul(q1.projection, unit_vec(4, 3))));
    auto q3 = quotient_by_subgroup_saturated(n4, M({{1, 0, 1, 0}, {0, -1, 1, 0}, {1, -1, 0, 2}}));
    CHECK(in_lattice(q3.relations, V({0, 0, 1, -1})));
    CHECK_FALSE(in_lattice(q3.relations_unsaturated, V({0, 0, 1, -1})));
    CHECK(q3.torsion == Vec{Int(2)});
    auto q0 = quotient_by_subgroup_saturated(n4, {});
    CHECK(q0.quotient == n4);
    CHECK(q0.projection == identity(4));
    auto q2 = quotient_by_subgroup_saturated(n4, M({{1, -1, 2, 0}, {1, -1, 0, 3}}), {2, 3});
    CHECK(q2.projection == M({{1, 1, 0, 0}, {-6, 0, 3, 2}}));
    CHECK_FALSE(q2.image_saturated);
    CHECK(q2.saturation_added == M({{0, 1}}));
}

TEST_CASE("locality") {
    auto n1 = ToricMonoid::orthant(1), n2 = ToricMonoid::orthant(2);
    CHECK(hom_is_local(MonoidHom{n1, n1, identity(1)}));
    CHECK_FALSE(hom_is_local(MonoidHom{n2, n1, M({{1, 0}})}));
    // the rho_{q2} factor of the degenerate two-node example
    auto q1 = quotient_by_subgroup_saturated(ToricMonoid::orthant(4), M({{1, -1, 0, 0}, {1, -1, 0, 1}}));
    Mat col;
    for (const auto& r : q1.projection) col.push_back(Vec{r[3]});
    CHECK_FALSE(hom_is_local(MonoidHom{n1, q1.quotient, col}));
}

TEST_CASE("node monoids") {
    auto n1 = ToricMonoid::orthant(1);
    auto se = node_monoid(n1, V({3}));
    CHECK(se.monoid.generators() == M({{0, 3}, {1, 1}, {3, 0}}));
    CHECK(se.monoid.is_sharp());
    CHECK(se.chi1.apply(V({3, 0})) == V({3}));
    CHECK(se.chi2.apply(V({3, 0})) == V({0}));
    CHECK(node_monoid(n1, V({1})).monoid.generators() == M({{0, 1}, {1, 0}}));
    CHECK_THROWS_AS(node_monoid(n1, V({0})), ValidationError);
    for (auto rho : {V({1, 0}), V({1, 1}), V({2, 1})}) {
        auto nm = node_monoid(ToricMonoid::orthant(2), rho);
        CHECK(nm.monoid.is_sharp());
        auto base = ToricMonoid::orthant(2);
        for (const auto& h : base.hilbert()) {
            Vec diag = concat(h, h);
            CHECK(nm.monoid.contains(diag));
            CHECK(nm.chi1.apply(diag) == h);
            CHECK(nm.chi2.apply(diag) == h);
        }
    }
}

TEST_CASE("faces and localization") {
    CHECK(faces(ToricMonoid::orthant(1)).size() == 2);
    CHECK(faces(ToricMonoid::orthant(2)).size() == 4);
    CHECK(faces(quadric()).size() == 10);
    auto id = localize_and_sharpen(ToricMonoid::orthant(2), {});
    CHECK(id.map == identity(2));
    auto pr = localize_and_sharpen(ToricMonoid::orthant(2), M({{1, 0}}));
    CHECK(pr.map == M({{0, 1}}));
    CHECK(pr.target == ToricMonoid::orthant(1));
    auto s2 = ToricMonoid::from_generators(M({{2, 0}, {0, 2}, {1, 1}}), 2);
    auto l = localize_and_sharpen(s2, M({{2, 0}}));
    CHECK(l.target.hilbert() == M({{1}}));
    CHECK(is_face_quotient(l));
    CHECK(is_face_quotient(pr));
    CHECK_FALSE(is_face_quotient(MonoidHom{ToricMonoid::orthant(1), ToricMonoid::orthant(1), M({{2}})}));
    CHECK_THROWS_AS(as_face(quadric(), M({{1, 0, 0}, {0, 1, 1}})), ValidationError);
}

TEST_CASE("locality of composites") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> d(0, 2);
    auto n2 = ToricMonoid::orthant(2);
    for (int it = 0; it < 50; ++it) {
        Mat f(2, Vec(2)), g(2, Vec(2));
        for (auto* m : {&f, &g})
            for (auto& r : *m)
                for (auto& x : r) x = d(rng);
        MonoidHom F{n2, n2, f}, G{n2, n2, g};
        if (hom_is_local(compose(G, F)) && hom_is_local(G) && determinant(g) != Int(0)) CHECK(hom_is_local(F));
    }
}
