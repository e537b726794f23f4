#include "loggw/cone.hpp"

#include "loggw/errors.hpp"

#include <algorithm>

namespace loggw {

namespace {

struct Bits {
    std::vector<uint64_t> w;
    void set(std::size_t i) {
        if (w.size() <= i / 64) w.resize(i / 64 + 1, 0);
        w[i / 64] |= uint64_t(1) << (i % 64);
    }
    Bits intersect(const Bits& o) const {
        Bits r;
        r.w.resize(std::min(w.size(), o.w.size()));
        for (std::size_t i = 0; i < r.w.size(); ++i) r.w[i] = w[i] & o.w[i];
        return r;
    }
    bool subset_of(const Bits& o) const {
        for (std::size_t i = 0; i < w.size(); ++i) {
            uint64_t ow = i < o.w.size() ? o.w[i] : 0;
            if (w[i] & ~ow) return false;
        }
        return true;
    }
};

struct Ray {
    Vec v;
    Bits zero;
};

Vec combine(const Int& s, const Vec& r, const Int& t, const Vec& l) {
    Vec out(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) out[i] = s * r[i] - t * l[i];
    return primitive(out);
}

}  // namespace

DDResult double_description(const Mat& ineqs, std::size_t d) {
    Mat lin = identity(d);
    std::vector<Ray> rays;
    for (std::size_t k = 0; k < ineqs.size(); ++k) {
        const Vec& a = ineqs[k];
        std::size_t li = lin.size();
        Int s;
        for (std::size_t i = 0; i < lin.size(); ++i) {
            s = dot(a, lin[i]);
            if (!s.is_zero()) {
                li = i;
                break;
            }
        }
        if (li < lin.size()) {
            Vec l0 = lin[li];
            if (s.sign() < 0) {
                l0 = neg(l0);
                s = -s;
            }
            Mat nl;
            for (std::size_t i = 0; i < lin.size(); ++i) {
                if (i == li) continue;
                Vec v = combine(s, lin[i], dot(a, lin[i]), l0);
                if (!is_zero(v)) nl.push_back(v);
            }
            for (auto& r : rays) {
                r.v = combine(s, r.v, dot(a, r.v), l0);
                r.zero.set(k);
            }
            Ray nr{primitive(l0), {}};
            for (std::size_t j = 0; j < k; ++j) nr.zero.set(j);
            rays.push_back(nr);
            lin = nl;
            continue;
        }
        std::vector<Int> val(rays.size());
        std::vector<int> pos, neg_, zer;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            val[i] = dot(a, rays[i].v);
            int sg = val[i].sign();
            if (sg > 0) pos.push_back(static_cast<int>(i));
            else if (sg < 0) neg_.push_back(static_cast<int>(i));
            else zer.push_back(static_cast<int>(i));
        }
        if (neg_.empty()) {
            for (int i : zer) rays[i].zero.set(k);
            continue;
        }
        std::vector<Ray> next;
        for (int i : pos) next.push_back(rays[i]);
        for (int i : zer) {
            next.push_back(rays[i]);
            next.back().zero.set(k);
        }
        for (int p : pos)
            for (int q : neg_) {
                Bits z = rays[p].zero.intersect(rays[q].zero);
                bool adjacent = true;
                for (std::size_t t = 0; t < rays.size() && adjacent; ++t) {
                    if (static_cast<int>(t) == p || static_cast<int>(t) == q) continue;
                    if (z.subset_of(rays[t].zero)) adjacent = false;
                }
                if (!adjacent) continue;
                Ray nr;
                nr.v = combine(val[p], rays[q].v, val[q], rays[p].v);
                nr.zero = z;
                nr.zero.set(k);
                next.push_back(nr);
            }
        rays = std::move(next);
    }
    DDResult res;
    res.lineality = lin.empty() ? Mat() : saturate_lattice(lin, d);
    for (auto& r : rays) res.rays.push_back(primitive(r.v));
    std::sort(res.rays.begin(), res.rays.end());
    res.rays.erase(std::unique(res.rays.begin(), res.rays.end()), res.rays.end());
    return res;
}

ConeHRep cone_hrep(const Mat& gens_in, std::size_t n) {
    ConeHRep c;
    c.ambient = n;
    Mat gens;
    for (const auto& g : gens_in) {
        if (g.size() != n) throw ValidationError("generator has wrong length");
        if (!is_zero(g)) gens.push_back(g);
    }
    if (gens.empty()) {
        c.equations = identity(n);
        c.dim = 0;
        return c;
    }
    c.span_basis = saturate_lattice(gens, n);
    std::size_t k = c.span_basis.size();
    c.dim = static_cast<int>(k);
    c.equations = integer_kernel(c.span_basis, n);
    Mat coords;
    for (const auto& g : gens) {
        auto s = solve_in_lattice(c.span_basis, g);
        if (!s) throw InvariantError("generator outside its own saturated span");
        coords.push_back(*s);
    }
    DDResult dual = double_description(coords, k);
    Mat fc = dual.rays;
    DDResult primal = double_description(fc, k);
    Mat S = right_inverse(c.span_basis, n);  // n x k
    HNFResult eh = hermite_normal_form(c.equations, n);
    Mat eq_basis(eh.H.begin(), eh.H.begin() + eh.rank);
    for (const auto& f : fc) {
        Vec fn = mul(S, f);
        fn = reduce_mod_hnf(eq_basis, eh.pivots, fn);
        c.facets.push_back(fn);
    }
    std::sort(c.facets.begin(), c.facets.end());
    for (const auto& l : primal.lineality) c.lineality.push_back(vec_mul(l, c.span_basis, n));
    if (!c.lineality.empty()) c.lineality = lattice_basis(c.lineality, n);
    for (const auto& r : primal.rays) c.rays.push_back(vec_mul(r, c.span_basis, n));
    std::sort(c.rays.begin(), c.rays.end());
    return c;
}

bool cone_contains(const ConeHRep& c, const Vec& x) {
    for (const auto& e : c.equations)
        if (!dot(e, x).is_zero()) return false;
    for (const auto& f : c.facets)
        if (dot(f, x).sign() < 0) return false;
    return true;
}

bool cone_interior(const ConeHRep& c, const Vec& x) {
    for (const auto& e : c.equations)
        if (!dot(e, x).is_zero()) return false;
    for (const auto& f : c.facets)
        if (dot(f, x).sign() <= 0) return false;
    return true;
}

}  // namespace loggw
