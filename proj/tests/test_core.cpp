#include "doctest.h"

#include "loggw/cone.hpp"
#include "loggw/errors.hpp"
#include "loggw/hilbert.hpp"
#include "loggw/matrix.hpp"
#include "support.hpp"

#include <random>
#include <set>

using namespace loggw;

using namespace loggw::testing;

TEST_CASE("integer overflow promotes to big integers") {
    Int a = Int(INT64_MAX);
    Int b = a + Int(1);
    CHECK_FALSE(b.fits_int64());
    CHECK((b - Int(1)) == a);
    CHECK((b - Int(1)).fits_int64());
    Int c = a * a;
    CHECK(c / a == a);
    CHECK(floor_div(Int(-7), Int(2)) == Int(-4));
    CHECK(floor_mod(Int(-7), Int(2)) == Int(1));
    Int s, t;
    Int g = ext_gcd(Int(12), Int(-18), s, t);
    CHECK(g == Int(6));
    CHECK(s * Int(12) + t * Int(-18) == g);
    CHECK(Int::from_string("123456789012345678901234567890").str() == "123456789012345678901234567890");
}

TEST_CASE("hermite normal form") {
    HNFResult h = hermite_normal_form(M({{2, 4}, {1, 3}}), 2);
    CHECK(h.H == M({{1, 1}, {0, 2}}));
    CHECK(mul(h.U, M({{2, 4}, {1, 3}}), 2) == h.H);
    CHECK(abs(determinant(h.U)) == Int(1));
}

TEST_CASE("smith normal form") {
    SNFResult s = smith_normal_form(M({{2, 0}, {0, 3}}), 2);
    CHECK(s.diag == Vec{Int(1), Int(6)});
    CHECK(mul(mul(s.L, M({{2, 0}, {0, 3}}), 2), s.R, 2) == s.D);
}

TEST_CASE("random matrices: HNF and SNF invariants") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-6, 6);
    for (int it = 0; it < 200; ++it) {
        std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        Mat m(r, Vec(c));
        for (auto& row : m)
            for (auto& x : row) x = d(rng);
        HNFResult h = hermite_normal_form(m, c);
        CHECK(mul(h.U, m, c) == h.H);
        CHECK(abs(determinant(h.U)) == Int(1));
        CHECK(h.rank == rank(m, c));
        for (int i = 0; i < h.rank; ++i) {
            CHECK(h.H[i][h.pivots[i]].sign() > 0);
            for (int j = 0; j < i; ++j) {
                CHECK(h.H[j][h.pivots[i]].sign() >= 0);
                CHECK(h.H[j][h.pivots[i]] < h.H[i][h.pivots[i]]);
            }
        }
        SNFResult s = smith_normal_form(m, c);
        CHECK(mul(mul(s.L, m, c), s.R, c) == s.D);
        for (std::size_t i = 1; i < s.diag.size(); ++i) CHECK(divides(s.diag[i - 1], s.diag[i]));
        Mat K = integer_kernel(m, c);
        CHECK(K.size() + static_cast<std::size_t>(h.rank) == c);
        for (const auto& k : K) CHECK(is_zero(mul(m, k)));
        CHECK(lattice_is_saturated(K.empty() ? Mat{} : K, c));
        if (r == c && !determinant(m).is_zero()) {
            Int det = determinant(m);
            Mat adj = adjugate(m);
            Mat p = mul(m, adj, c);
            for (std::size_t i = 0; i < c; ++i)
                for (std::size_t j = 0; j < c; ++j) CHECK(p[i][j] == (i == j ? det : Int(0)));
        }
    }
}

TEST_CASE("double description of simple cones") {
    DDResult q = double_description(M({{1, 0}, {0, 1}}), 2);
    CHECK(q.lineality.empty());
    CHECK(q.rays == M({{0, 1}, {1, 0}}));
    DDResult h = double_description(M({{1, 0}}), 2);
    CHECK(h.lineality.size() == 1);
    CHECK(h.rays.size() == 1);
    DDResult z = double_description(M({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}), 2);
    CHECK(z.rays.empty());
    CHECK(z.lineality.empty());
    ConeHRep c = cone_hrep(M({{1, 0, 0}, {0, 1, 0}, {1, 1, 2}}), 3);
    CHECK(c.facets.size() == 3);
    CHECK(c.rays.size() == 3);
    CHECK(c.pointed());
}

TEST_CASE("Hilbert bases of classic cones") {
    CHECK(hilbert_basis(M({{1, 0}, {1, 2}}), 2).elements == M({{1, 0}, {1, 1}, {1, 2}}));
    CHECK(hilbert_basis(M({{0, 1}, {3, -2}}), 2).elements == M({{0, 1}, {1, 0}, {2, -1}, {3, -2}}));
    // cone over a square in Z^3: quadric cone
    auto q = hilbert_basis(M({{1, 0, 0}, {0, 1, 0}, {1, 0, 1}, {0, 1, 1}}), 3);
    CHECK(q.elements.size() == 4);
    auto hp = hilbert_basis(M({{1, 0}, {-1, 0}, {0, 1}}), 2);
    CHECK(hp.units == M({{1, 0}}));
    CHECK(hp.elements == M({{0, 1}}));
}

TEST_CASE("Hilbert basis agrees with brute force on random cones") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int it = 0; it < 60; ++it) {
        std::size_t n = 2 + it % 2;
        std::size_t g = n + rng() % 2;
        Mat gens(g, Vec(n));
        for (auto& row : gens)
            for (auto& x : row) x = d(rng);
        ConeHRep c = cone_hrep(gens, n);
        if (!c.pointed()) continue;
        auto hb = hilbert_basis(gens, n, Exec::Serial);
        Mat bf = brute_hilbert(c, n);
        CHECK_MESSAGE(hb.elements == bf, to_string(gens));
        CHECK(hilbert_basis(gens, n, Exec::Parallel).elements == hb.elements);
    }
}

TEST_CASE("serial and parallel reduction agree") {
    Mat rays = M({{1, 0, 0}, {0, 1, 0}, {1, 1, 5}});
    ConeHRep c = cone_hrep(rays, 3);
    auto simp = triangulate(c.rays, c.facets, 3);
    Mat cands = hilbert_candidates(c.rays, simp, 3, Exec::Serial);
    CHECK(reduce_candidates_serial(cands, c.facets) == reduce_candidates_parallel(cands, c.facets));
}

TEST_CASE("capacity limit on rank") {
    Mat g = identity(11);
    g.back() = Vec(11, Int(1));
    g.back().back() = 2;
    CHECK_THROWS_AS(hilbert_basis(g, 11), CapacityError);
    // Unimodular simplicial cones are exempt.
    CHECK(hilbert_basis(identity(15), 15).elements.size() == 15);
}

TEST_CASE("Hilbert basis of an inequality system in a sublattice") {
    // {x in 2Z x Z : x >= 0, y >= 0}
    auto hb = hilbert_basis_of_system(M({{2, 0}, {0, 1}}), M({{1, 0}, {0, 1}}), {}, 2);
    CHECK(hb.elements == M({{0, 1}, {2, 0}}));
}
