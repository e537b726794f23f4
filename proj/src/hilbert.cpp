#include "loggw/hilbert.hpp"

#include "loggw/cone.hpp"
#include "loggw/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace loggw {

namespace {

void check_rank(std::size_t k) {
    if (k > kMaxHilbertRank)
        throw CapacityError("Hilbert basis requested in rank " + std::to_string(k) + " (limit " +
                            std::to_string(kMaxHilbertRank) + ")");
}

void sort_unique(Mat& m) {
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
}

class Triangulator {
public:
    Triangulator(const Mat& rays, const Mat& facets, std::size_t d) : rays_(rays), d_(d) {
        for (const auto& f : facets) {
            std::vector<int> inc;
            for (std::size_t i = 0; i < rays.size(); ++i)
                if (dot(f, rays[i]).is_zero()) inc.push_back(static_cast<int>(i));
            incidence_.push_back(inc);
        }
    }

    std::vector<std::vector<int>> run() {
        std::vector<int> all(rays_.size());
        std::iota(all.begin(), all.end(), 0);
        return tri(all, d_);
    }

private:
    const std::vector<std::vector<int>>& tri(const std::vector<int>& face, std::size_t dim) {
        auto it = memo_.find(face);
        if (it != memo_.end()) return it->second;
        std::vector<std::vector<int>> out;
        if (face.size() == dim) {
            out.push_back(face);
        } else {
            int r0 = face.front();
            std::set<std::vector<int>> subs;
            for (const auto& inc : incidence_) {
                std::vector<int> t;
                std::set_intersection(face.begin(), face.end(), inc.begin(), inc.end(), std::back_inserter(t));
                if (t.size() == face.size() || t.size() + 1 < dim) continue;
                if (static_cast<std::size_t>(rank(select_rows(rays_, t), d_)) != dim - 1) continue;
                subs.insert(t);
            }
            for (const auto& t : subs) {
                if (std::binary_search(t.begin(), t.end(), r0)) continue;
                for (const auto& s : tri(t, dim - 1)) {
                    std::vector<int> simplex = s;
                    simplex.push_back(r0);
                    std::sort(simplex.begin(), simplex.end());
                    out.push_back(simplex);
                }
            }
        }
        return memo_.emplace(face, std::move(out)).first->second;
    }

    const Mat& rays_;
    std::size_t d_;
    std::vector<std::vector<int>> incidence_;
    std::map<std::vector<int>, std::vector<std::vector<int>>> memo_;
};

}  // namespace

std::vector<std::vector<int>> triangulate(const Mat& rays, const Mat& facets, std::size_t d) {
    if (rays.empty()) return {};
    Triangulator t(rays, facets, d);
    auto out = t.run();
    std::sort(out.begin(), out.end());
    return out;
}

Mat parallelepiped_points(const Mat& simplex_rays, std::size_t d) {
    Mat A = transpose(simplex_rays, d);  // columns are the rays
    Int det = determinant(A);
    if (det.is_zero()) throw InvariantError("degenerate simplicial cone");
    Int vol = abs(det);
    if (vol.is_one()) return {};
    if (vol > Int(static_cast<long long>(kMaxHilbertCandidates)))
        throw CapacityError("simplicial cone volume " + vol.str() + " exceeds the candidate limit");
    SNFResult snf = smith_normal_form(A, d);
    Mat Linv = unimodular_inverse(snf.L);
    Mat adj = adjugate(A);
    std::vector<Int> dims;
    for (std::size_t i = 0; i < d; ++i) dims.push_back(i < snf.diag.size() ? snf.diag[i] : Int(1));
    Mat out;
    Vec y = zero_vec(d);
    while (true) {
        Vec x = mul(Linv, y);
        Vec num = mul(adj, x);
        Vec fm(d);
        for (std::size_t i = 0; i < d; ++i) fm[i] = floor_mod(det.sign() > 0 ? num[i] : -num[i], vol);
        if (!is_zero(fm)) {
            Vec p = mul(A, fm);
            for (auto& v : p) v = v / vol;
            out.push_back(p);
        }
        std::size_t i = 0;
        for (; i < d; ++i) {
            y[i] += 1;
            if (y[i] < dims[i]) break;
            y[i] = 0;
        }
        if (i == d) break;
    }
    return out;
}

Mat hilbert_candidates(const Mat& rays, const std::vector<std::vector<int>>& simplices, std::size_t d, Exec exec) {
    Int total = 0;
    for (const auto& s : simplices) total += abs(determinant(select_rows(rays, s)));
    if (total > Int(static_cast<long long>(kMaxHilbertCandidates)))
        throw CapacityError("Hilbert basis candidate count " + total.str() + " exceeds the limit");
    std::vector<Mat> per(simplices.size());
    if (exec == Exec::Parallel) {
        std::vector<std::string> errors(simplices.size());
#pragma omp parallel for schedule(dynamic, 1)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(simplices.size()); ++i) {
            try {
                per[i] = parallelepiped_points(select_rows(rays, simplices[i]), d);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
        for (const auto& e : errors)
            if (!e.empty()) throw InvariantError(e);
    } else {
        for (std::size_t i = 0; i < simplices.size(); ++i)
            per[i] = parallelepiped_points(select_rows(rays, simplices[i]), d);
    }
    Mat cands = rays;
    for (auto& p : per) cands.insert(cands.end(), p.begin(), p.end());
    sort_unique(cands);
    return cands;
}

namespace {

struct Graded {
    std::vector<Vec> values;  // facet values per candidate
    std::vector<Int> degree;
    std::vector<std::size_t> order;
};

Graded grade(const Mat& cands, const Mat& facets) {
    Graded g;
    g.values.reserve(cands.size());
    for (const auto& c : cands) {
        Vec v = mul(facets, c);
        Int s = 0;
        for (const auto& x : v) s += x;
        g.values.push_back(std::move(v));
        g.degree.push_back(s);
    }
    g.order.resize(cands.size());
    std::iota(g.order.begin(), g.order.end(), 0);
    std::stable_sort(g.order.begin(), g.order.end(),
                     [&](std::size_t a, std::size_t b) { return g.degree[a] < g.degree[b]; });
    return g;
}

bool dominated(const Graded& g, std::size_t pos) {
    std::size_t i = g.order[pos];
    const Vec& vi = g.values[i];
    for (std::size_t q = 0; q < pos; ++q) {
        std::size_t j = g.order[q];
        if (!(g.degree[j] < g.degree[i])) break;
        const Vec& vj = g.values[j];
        bool ok = true;
        for (std::size_t k = 0; k < vi.size(); ++k)
            if (vj[k] > vi[k]) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return false;
}

Mat collect(const Mat& cands, const Graded& g, const std::vector<char>& reducible) {
    Mat out;
    for (std::size_t p = 0; p < g.order.size(); ++p)
        if (!reducible[p]) out.push_back(cands[g.order[p]]);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

Mat reduce_candidates_serial(const Mat& cands, const Mat& facets) {
    Graded g = grade(cands, facets);
    std::vector<char> red(cands.size(), 0);
    for (std::size_t p = 0; p < g.order.size(); ++p) red[p] = dominated(g, p) ? 1 : 0;
    return collect(cands, g, red);
}

Mat reduce_candidates_parallel(const Mat& cands, const Mat& facets) {
    Graded g = grade(cands, facets);
    std::vector<char> red(cands.size(), 0);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t p = 0; p < static_cast<std::ptrdiff_t>(g.order.size()); ++p)
        red[p] = dominated(g, static_cast<std::size_t>(p)) ? 1 : 0;
    return collect(cands, g, red);
}

Mat pointed_hilbert_basis(const Mat& rays, const Mat& facets, std::size_t d, Exec exec) {
    if (rays.empty()) return {};
    auto simplices = triangulate(rays, facets, d);
    Mat cands = hilbert_candidates(rays, simplices, d, exec);
    return exec == Exec::Parallel ? reduce_candidates_parallel(cands, facets)
                                  : reduce_candidates_serial(cands, facets);
}

namespace {

// Full-dimensional cone in Z^k, possibly with lineality.
HilbertBasis full_dim_basis(const Mat& gens, std::size_t k, Exec exec) {
    HilbertBasis hb;
    DDResult dual = double_description(gens, k);
    const Mat& F = dual.rays;
    Mat L = F.empty() ? identity(k) : integer_kernel(F, k);
    if (L.empty()) {
        DDResult primal = double_description(F, k);
        // A unimodular simplicial cone is its own Hilbert basis, in any rank.
        if (primal.rays.size() == k && abs(determinant(primal.rays)) == 1) {
            hb.elements = primal.rays;
            sort_unique(hb.elements);
            return hb;
        }
        check_rank(k);
        hb.elements = pointed_hilbert_basis(primal.rays, F, k, exec);
        return hb;
    }
    L = lattice_basis(L, k);
    hb.units = L;
    if (L.size() == k) return hb;
    Mat P = integer_kernel(L, k);  // quotient map Z^k -> Z^{k'}
    std::size_t kp = P.size();
    Mat Fq;
    for (const auto& f : F) {
        auto s = solve_in_lattice(P, f);
        if (!s) throw InvariantError("facet does not vanish on the lineality space");
        Fq.push_back(*s);
    }
    check_rank(kp);
    DDResult primal = double_description(Fq, kp);
    Mat Hq = pointed_hilbert_basis(primal.rays, Fq, kp, exec);
    Mat S = right_inverse(P, k);  // k x k'
    HNFResult lh = hermite_normal_form(L, k);
    for (const auto& h : Hq) hb.elements.push_back(reduce_mod_hnf(lh.H, lh.pivots, mul(S, h)));
    sort_unique(hb.elements);
    return hb;
}

}  // namespace

HilbertBasis hilbert_basis(const Mat& gens_in, std::size_t n, Exec exec) {
    Mat gens;
    for (const auto& g : gens_in) {
        if (g.size() != n) throw ValidationError("generator has wrong length");
        if (!is_zero(g)) gens.push_back(g);
    }
    HilbertBasis out;
    if (gens.empty()) return out;
    Mat B = saturate_lattice(gens, n);
    Mat coords;
    for (const auto& g : gens) coords.push_back(*solve_in_lattice(B, g));
    HilbertBasis hb = full_dim_basis(coords, B.size(), exec);
    for (const auto& h : hb.elements) out.elements.push_back(vec_mul(h, B, n));
    for (const auto& u : hb.units) out.units.push_back(vec_mul(u, B, n));
    if (!out.units.empty()) {
        out.units = lattice_basis(out.units, n);
        HNFResult uh = hermite_normal_form(out.units, n);
        for (auto& e : out.elements) e = reduce_mod_hnf(uh.H, uh.pivots, e);
    }
    sort_unique(out.elements);
    return out;
}

HilbertBasis hilbert_basis_of_system(const Mat& lattice, const Mat& ineqs, const Mat& eqs, std::size_t n,
                                     Exec exec) {
    Mat B = lattice_basis(lattice, n);
    if (!eqs.empty() && !B.empty()) {
        Mat EB = mul(eqs, transpose(B, n), B.size());  // eqs x k
        Mat K = integer_kernel(EB, B.size());
        B = lattice_basis(mul(K, B, n), n);
    }
    HilbertBasis out;
    std::size_t k = B.size();
    if (k == 0) return out;
    Mat A;
    for (const auto& a : ineqs) A.push_back(mul(B, a));
    DDResult dd = double_description(A, k);
    Mat gens = dd.rays;
    for (const auto& l : dd.lineality) {
        gens.push_back(l);
        gens.push_back(neg(l));
    }
    HilbertBasis hb = hilbert_basis(gens, k, exec);
    for (const auto& h : hb.elements) out.elements.push_back(vec_mul(h, B, n));
    for (const auto& u : hb.units) out.units.push_back(vec_mul(u, B, n));
    if (!out.units.empty()) {
        out.units = lattice_basis(out.units, n);
        HNFResult uh = hermite_normal_form(out.units, n);
        for (auto& e : out.elements) e = reduce_mod_hnf(uh.H, uh.pivots, e);
    }
    sort_unique(out.elements);
    return out;
}

HilbertBasis hilbert_basis_in_lattice(const Mat& gens, const Mat& lattice, std::size_t n, Exec exec) {
    ConeHRep h = cone_hrep(gens, n);
    return hilbert_basis_of_system(lattice, h.facets, h.equations, n, exec);
}

}  // namespace loggw
