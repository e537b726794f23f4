#include "loggw/lp.hpp"

#include "loggw/errors.hpp"

#include <algorithm>
#include <set>

namespace loggw {

namespace {

struct Row {
    RVec a;
    Rat c;
    bool operator<(const Row& o) const {
        if (a != o.a) return a < o.a;
        return c < o.c;
    }
};

// Scale so that the first nonzero coefficient has absolute value 1.
Row normalize(Row r) {
    for (const auto& x : r.a)
        if (x != 0) {
            Rat s = abs(x);
            for (auto& y : r.a) y /= s;
            r.c /= s;
            break;
        }
    return r;
}

using System = std::vector<Row>;

// Returns false when a constant row is violated.
bool eliminate(const System& in, std::size_t j, System& out) {
    std::set<Row> rows;
    std::vector<const Row*> pos, neg;
    for (const auto& r : in) {
        int s = sgn(r.a[j]);
        if (s > 0) pos.push_back(&r);
        else if (s < 0) neg.push_back(&r);
        else rows.insert(r);
    }
    for (const Row* p : pos)
        for (const Row* n : neg) {
            Rat sp = p->a[j], sn = -n->a[j];
            Row r;
            r.a.resize(p->a.size());
            for (std::size_t k = 0; k < r.a.size(); ++k) r.a[k] = p->a[k] * sn + n->a[k] * sp;
            r.a[j] = 0;
            r.c = p->c * sn + n->c * sp;
            rows.insert(normalize(r));
            if (rows.size() > kMaxFourierMotzkinRows)
                throw CapacityError("Fourier-Motzkin elimination exceeded " + std::to_string(kMaxFourierMotzkinRows) + " rows");
        }
    out.clear();
    for (const auto& r : rows) {
        bool constant = std::all_of(r.a.begin(), r.a.end(), [](const Rat& x) { return x == 0; });
        if (constant) {
            if (r.c > 0) return false;
            continue;
        }
        out.push_back(r);
    }
    return true;
}

// chain[k] involves only x_0..x_{k-1}.
bool build_chain(const System& base, std::size_t d, std::vector<System>& chain) {
    chain.assign(d + 1, {});
    chain[d] = base;
    for (std::size_t k = d; k > 0; --k)
        if (!eliminate(chain[k], k - 1, chain[k - 1])) return false;
    return true;
}

struct Interval {
    std::optional<Rat> lo, hi;
};

Interval bounds(const System& s, std::size_t k, const RVec& x) {
    Interval iv;
    for (const auto& r : s) {
        Rat rest = r.c;
        for (std::size_t i = 0; i < k; ++i) rest -= r.a[i] * x[i];
        const Rat& ak = r.a[k];
        if (ak == 0) continue;
        Rat v = rest / ak;
        if (ak > 0) {
            if (!iv.lo || v > *iv.lo) iv.lo = v;
        } else {
            if (!iv.hi || v < *iv.hi) iv.hi = v;
        }
    }
    return iv;
}

System to_system(const Polyhedron& p) {
    System s;
    for (std::size_t i = 0; i < p.A.size(); ++i) s.push_back(normalize(Row{p.A[i], p.c[i]}));
    return s;
}

Int floor_rat(const Rat& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return Int(q);
}

Int ceil_rat(const Rat& r) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return Int(q);
}

}  // namespace

std::optional<RVec> feasible_point(const Polyhedron& p, const RMat& E, const RVec& f) {
    std::size_t d = p.dim;
    // Parametrize the affine solution set of E x = f as x = x0 + t N.
    RVec x0(d, Rat(0));
    RMat N;
    if (!E.empty()) {
        auto sol = solve_rational(E, f, d);
        if (!sol) return std::nullopt;
        x0 = sol->particular;
        N = sol->nullspace;
    } else {
        for (std::size_t i = 0; i < d; ++i) {
            RVec r(d, Rat(0));
            r[i] = 1;
            N.push_back(r);
        }
    }
    std::size_t k = N.size();
    Polyhedron q;
    q.dim = k;
    for (std::size_t i = 0; i < p.A.size(); ++i) {
        RVec a(k, Rat(0));
        Rat c = p.c[i];
        for (std::size_t j = 0; j < d; ++j) c -= p.A[i][j] * x0[j];
        for (std::size_t t = 0; t < k; ++t)
            for (std::size_t j = 0; j < d; ++j) a[t] += p.A[i][j] * N[t][j];
        q.add(a, c);
    }
    std::vector<System> chain;
    if (!build_chain(to_system(q), k, chain)) return std::nullopt;
    RVec t(k, Rat(0));
    for (std::size_t i = 0; i < k; ++i) {
        Interval iv = bounds(chain[i + 1], i, t);
        if (iv.lo && iv.hi) {
            if (*iv.lo > *iv.hi) return std::nullopt;
            t[i] = (*iv.lo + *iv.hi) / 2;
        } else if (iv.lo) {
            t[i] = *iv.lo + 1;
        } else if (iv.hi) {
            t[i] = *iv.hi - 1;
        } else {
            t[i] = 0;
        }
    }
    RVec x = x0;
    for (std::size_t s = 0; s < k; ++s)
        for (std::size_t j = 0; j < d; ++j) x[j] += t[s] * N[s][j];
    return x;
}

std::vector<Vec> lattice_points(const Polyhedron& p, std::size_t cap) {
    std::size_t d = p.dim;
    std::vector<Vec> out;
    std::vector<System> chain;
    if (!build_chain(to_system(p), d, chain)) return out;
    if (d == 0) {
        out.push_back({});
        return out;
    }
    RVec x(d, Rat(0));
    Vec xi(d);
    // Iterative depth-first walk over coordinates.
    std::vector<Int> lo(d), hi(d);
    auto range = [&](std::size_t i) {
        Interval iv = bounds(chain[i + 1], i, x);
        if (!iv.lo || !iv.hi) throw ValidationError("lattice point region is unbounded");
        lo[i] = ceil_rat(*iv.lo);
        hi[i] = floor_rat(*iv.hi);
    };
    std::size_t i = 0;
    range(0);
    xi[0] = lo[0];
    while (true) {
        if (xi[i] > hi[i]) {
            if (i == 0) break;
            --i;
            xi[i] += 1;
            continue;
        }
        x[i] = to_rat(xi[i]);
        if (i + 1 == d) {
            out.push_back(xi);
            if (out.size() > cap) throw EnumerationCapError("more than " + std::to_string(cap) + " lattice points");
            xi[i] += 1;
            continue;
        }
        ++i;
        range(i);
        xi[i] = lo[i];
    }
    return out;
}

std::optional<Vec> solve_integer(const Mat& A, const Vec& b, std::size_t n) {
    if (A.empty()) return zero_vec(n);
    SNFResult s = smith_normal_form(A, n);
    Vec Lb = mul(s.L, b);
    Vec y = zero_vec(n);
    for (std::size_t i = 0; i < Lb.size(); ++i) {
        if (i < s.diag.size()) {
            if (!divides(s.diag[i], Lb[i])) return std::nullopt;
            y[i] = Lb[i] / s.diag[i];
        } else if (!Lb[i].is_zero()) {
            return std::nullopt;
        }
    }
    return mul(s.R, y);
}

}  // namespace loggw
