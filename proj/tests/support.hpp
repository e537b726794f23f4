#pragma once

#include "loggw/basic.hpp"
#include "loggw/cone.hpp"
#include "loggw/io.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

namespace loggw::testing {

inline Mat M(std::initializer_list<std::initializer_list<long long>> rows) {
    Mat m;
    for (auto r : rows) {
        Vec v;
        for (auto x : r) v.push_back(Int(x));
        m.push_back(v);
    }
    return m;
}

inline Vec V(std::initializer_list<long long> xs) {
    Vec v;
    for (auto x : xs) v.push_back(Int(x));
    return v;
}

inline std::string fixture(const std::string& rel) { return std::string(LOGGW_FIXTURES) + "/" + rel; }

inline GhostCurve load_graph(const std::string& name) { return io::parse_graph(io::read_file(fixture(name + "/graph.json"))); }

inline MapType load_type(const std::string& name, const GhostCurve& g, const std::string& file = "type.json") {
    return io::parse_type(io::read_file(fixture(name + "/" + file)), g);
}

// Hilbert basis of a pointed cone by exhaustive search. Every Hilbert element
// lies in the zonotope of the extreme rays, so the box Σ|r_i| is enough.
// Points are scanned by degree and kept when no kept element lies below them.
inline Mat brute_hilbert(const ConeHRep& c, std::size_t n) {
    Vec box = zero_vec(n);
    for (const auto& r : c.rays)
        for (std::size_t i = 0; i < n; ++i) box[i] += abs(r[i]);
    Vec grading = zero_vec(n);
    for (const auto& f : c.facets) grading = add(grading, f);
    std::vector<std::pair<Int, Vec>> pts;
    Vec x = neg(box);
    while (true) {
        if (!is_zero(x) && cone_contains(c, x)) pts.emplace_back(Int(0), x);
        std::size_t i = 0;
        for (; i < n; ++i) {
            x[i] += 1;
            if (x[i] <= box[i]) break;
            x[i] = -box[i];
        }
        if (i == n) break;
    }
    // Facet sums may vanish on lower-dimensional cones; any functional positive on the rays works.
    Vec pos = zero_vec(n);
    for (const auto& r : c.rays) pos = add(pos, r);
    for (auto& [d, p] : pts) d = c.facets.empty() ? dot(pos, p) : dot(grading, p);
    std::sort(pts.begin(), pts.end());
    Mat out;
    for (const auto& [d, p] : pts) {
        bool red = false;
        for (const auto& h : out)
            if (cone_contains(c, sub(p, h))) {
                red = true;
                break;
            }
        if (!red) out.push_back(p);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Random ghost curves: at most 4 vertices and 4 edges, stalks of rank at most 2,
// entries in [-3, 3]. Generization maps are identities, coordinate projections
// from a product, or the zero map.
struct RandomCurveGen {
    std::mt19937_64 rng;
    explicit RandomCurveGen(std::uint64_t seed) : rng(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

    ToricMonoid random_stalk() {
        switch (uniform(0, 3)) {
            case 0: return ToricMonoid::zero(0);
            case 1: return ToricMonoid::orthant(1);
            case 2: return ToricMonoid::orthant(2);
            default:
                while (true) {
                    Mat g{{Int(uniform(-3, 3)), Int(uniform(-3, 3))}, {Int(uniform(-3, 3)), Int(uniform(-3, 3))}};
                    if (!determinant(g).is_zero()) return ToricMonoid::from_generators(g, 2);
                }
        }
    }

    // Builds (curve, type); u_q entries are random in [-3, 3].
    std::pair<GhostCurve, MapType> instance() {
        while (true) {
            GhostCurve g;
            int nv = uniform(1, 4), ne = uniform(nv == 1 ? 0 : nv - 1, 4);
            for (int v = 0; v < nv; ++v) g.vertices.push_back({"v" + std::to_string(v + 1), random_stalk(), std::nullopt});
            bool ok = true;
            for (int e = 0; e < ne && ok; ++e) {
                // A spanning path first, then random extra edges (loops allowed).
                int a = e < nv - 1 ? e : uniform(0, nv - 1);
                int b = e < nv - 1 ? e + 1 : uniform(0, nv - 1);
                const ToricMonoid& A = g.vertices[static_cast<std::size_t>(a)].stalk;
                const ToricMonoid& B = g.vertices[static_cast<std::size_t>(b)].stalk;
                Edge E;
                E.name = "q" + std::to_string(e + 1);
                E.v1 = a;
                E.v2 = b;
                if (A == B) {
                    E.stalk = A;
                    E.chi1 = identity(A.ambient());
                    E.chi2 = identity(A.ambient());
                } else if (A.ambient() == 0 || B.ambient() == 0) {
                    const ToricMonoid& S = A.ambient() == 0 ? B : A;
                    E.stalk = S;
                    E.chi1 = A.ambient() == 0 ? Mat{} : identity(S.ambient());
                    E.chi2 = B.ambient() == 0 ? Mat{} : identity(S.ambient());
                } else if (A.ambient() == 1 && B.ambient() == 1) {
                    E.stalk = ToricMonoid::orthant(2);
                    E.chi1 = Mat{{Int(1), Int(0)}};
                    E.chi2 = Mat{{Int(0), Int(1)}};
                } else {
                    ok = false;
                    break;
                }
                g.edges.push_back(std::move(E));
            }
            if (!ok) continue;
            MapType t;
            for (const auto& E : g.edges) {
                Vec u;
                for (std::size_t i = 0; i < E.stalk.ambient(); ++i) u.push_back(Int(uniform(-3, 3)));
                t.u_q.push_back(u);
            }
            return {std::move(g), std::move(t)};
        }
    }

    // Same curves, but u_q comes from random tropical data so the type is realizable.
    std::pair<GhostCurve, MapType> realizable_instance() {
        auto [g, t] = instance();
        Mat V;
        for (const auto& v : g.vertices) {
            Vec x = zero_vec(v.stalk.ambient());
            ToricMonoid dv = dual(v.stalk);
            for (const auto& h : dv.hilbert()) x = add(x, scale(Int(uniform(0, 3)), h));
            V.push_back(x);
        }
        for (std::size_t e = 0; e < g.edges.size(); ++e) {
            const Edge& E = g.edges[e];
            std::size_t a = E.stalk.ambient();
            Vec diff = sub(vec_mul(V[static_cast<std::size_t>(E.v2)], E.chi2, a), vec_mul(V[static_cast<std::size_t>(E.v1)], E.chi1, a));
            Int len(uniform(1, 3));
            bool divisible = true;
            for (const auto& x : diff) divisible = divisible && divides(len, x);
            Vec u;
            for (const auto& x : diff) u.push_back(divisible ? x / len : x);
            t.u_q[e] = u;
        }
        return {std::move(g), std::move(t)};
    }
};

}  // namespace loggw::testing
