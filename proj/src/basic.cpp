#include "loggw/basic.hpp"

#include "loggw/errors.hpp"

#include <algorithm>

namespace loggw {

BasicLayout basic_layout(const GhostCurve& g) {
    BasicLayout l;
    for (const auto& v : g.vertices) {
        l.vertex_offsets.push_back(l.ambient);
        l.ambient += v.stalk.ambient();
    }
    l.edge_offset = l.ambient;
    l.ambient += g.edges.size();
    return l;
}

namespace {

void add_block(Vec& z, std::size_t off, const Vec& x, int sign) {
    for (std::size_t i = 0; i < x.size(); ++i) z[off + i] += sign > 0 ? x[i] : -x[i];
}

Vec l1_normalized_key(const Vec& v) {
    Vec s = v;
    for (const auto& x : s)
        if (!x.is_zero()) {
            if (x.sign() < 0) s = neg(s);
            break;
        }
    return s;
}

Int l1(const Vec& v) {
    Int s = 0;
    for (const auto& x : v) s += abs(x);
    return s;
}

Mat saturation_witness(const Mat& R, const Mat& Rsat, std::size_t n) {
    if (Rsat.empty()) return {};
    std::size_t r = Rsat.size();
    HNFResult rh = hermite_normal_form(R, n);
    Mat rb(rh.H.begin(), rh.H.begin() + rh.rank);
    if (rb.size() == Rsat.size() && lattice_basis(rb, n) == Rsat) return {};
    int box = r <= 4 ? 2 : 1;
    std::optional<Vec> best;
    if (r <= 8) {
        Vec c(r, Int(-box));
        while (true) {
            Vec v = zero_vec(n);
            for (std::size_t i = 0; i < r; ++i)
                if (!c[i].is_zero()) v = add(v, scale(c[i], Rsat[i]));
            if (!is_zero(v) && !is_zero(reduce_mod_hnf(rb, rh.pivots, v))) {
                Vec key = l1_normalized_key(v);
                if (!best || l1(key) < l1(*best) || (l1(key) == l1(*best) && key < *best)) best = key;
            }
            std::size_t i = 0;
            for (; i < r; ++i) {
                c[i] += 1;
                if (c[i] <= Int(box)) break;
                c[i] = Int(-box);
            }
            if (i == r) break;
        }
    }
    if (!best) {
        Mat coords;
        for (const auto& x : rb) coords.push_back(*solve_in_lattice(Rsat, x));
        SNFResult s = smith_normal_form(coords, r);
        Mat Rinv = unimodular_inverse(s.R);
        for (std::size_t i = 0; i < r; ++i) {
            Int d = i < s.diag.size() ? s.diag[i] : Int(0);
            if (!d.is_one()) {
                best = l1_normalized_key(vec_mul(Rinv[i], Rsat, n));
                break;
            }
        }
    }
    return best ? Mat{*best} : Mat{};
}

}  // namespace

std::vector<RelationVector> relation_vectors(const GhostCurve& g, const MapType& t) {
    require_valid(g, t);
    BasicLayout l = basic_layout(g);
    std::vector<RelationVector> out;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const Edge& E = g.edges[e];
        for (const auto& m : E.stalk.hilbert()) {
            Vec z = zero_vec(l.ambient);
            add_block(z, l.vertex_offsets[E.v1], mul(E.chi1, m), +1);
            add_block(z, l.vertex_offsets[E.v2], mul(E.chi2, m), -1);
            z[l.edge_offset + e] = dot(*t.u_q[e], m);
            out.push_back({static_cast<int>(e), m, z});
        }
    }
    return out;
}

BasicResult compute_basic_monoid(const GhostCurve& g, const MapType& t) {
    BasicResult r;
    r.layout = basic_layout(g);
    r.relation_vectors = relation_vectors(g, t);
    std::size_t n = r.layout.ambient;
    Mat gens;
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        for (const auto& h : g.vertices[v].stalk.saturation_generators()) {
            Vec z = zero_vec(n);
            add_block(z, r.layout.vertex_offsets[v], h, +1);
            gens.push_back(z);
        }
    for (std::size_t e = 0; e < g.edges.size(); ++e) gens.push_back(unit_vec(n, r.layout.edge_offset + e));
    r.source = ToricMonoid::from_generators(gens, n);
    Mat R;
    for (const auto& rv : r.relation_vectors)
        if (!is_zero(rv.value)) R.push_back(rv.value);
    std::vector<int> priority;
    for (std::size_t e = 0; e < g.edges.size(); ++e) priority.push_back(static_cast<int>(r.layout.edge_offset + e));
    for (std::size_t c = 0; c < r.layout.edge_offset; ++c) priority.push_back(static_cast<int>(c));
    r.quotient = quotient_by_subgroup_saturated(r.source, R, priority);
    r.saturation_witness = saturation_witness(R, r.quotient.relations, n);
    r.Q = r.quotient.quotient;
    const Mat& pi = r.quotient.projection;
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        std::vector<int> cs;
        for (std::size_t i = 0; i < g.vertices[v].stalk.ambient(); ++i)
            cs.push_back(static_cast<int>(r.layout.vertex_offsets[v] + i));
        r.phi.push_back(select_cols(pi, cs));
    }
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        Vec col;
        for (const auto& row : pi) col.push_back(row[r.layout.edge_offset + e]);
        r.rho.push_back(col);
    }
    const Mat& H = r.Q.hilbert();
    if (!H.empty()) r.Q_relations = integer_kernel(transpose(H, r.Q.ambient()), H.size());
    PrestableReport pr = check_prestable_ghost(g, r);
    r.prestable = pr.ok;
    r.prestable_witnesses = pr.witnesses;
    return r;
}

PrestableReport check_prestable_ghost(const GhostCurve& g, const BasicResult& r) {
    PrestableReport out;
    auto fail = [&](std::string w) {
        out.ok = false;
        out.witnesses.push_back(std::move(w));
    };
    if (!r.Q.is_sharp()) fail("Q is not sharp");
    ToricMonoid n1 = ToricMonoid::orthant(1);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        if (is_zero(r.rho[e])) {
            fail("rho[" + g.edges[e].name + "] = 0");
            continue;
        }
        Mat col;
        for (const auto& x : r.rho[e]) col.push_back(Vec{x});
        if (!hom_is_local(MonoidHom{n1, r.Q, col})) fail("rho[" + g.edges[e].name + "] is invertible");
    }
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        if (!hom_is_local(MonoidHom{g.vertices[v].stalk, r.Q, r.phi[v]}))
            fail("phi[" + g.vertices[v].name + "] is not local");
    return out;
}

ToricMonoid dual_basic_cone(const GhostCurve& g, const MapType& t) {
    BasicLayout l = basic_layout(g);
    auto rv = relation_vectors(g, t);
    Mat eqs;
    for (const auto& r : rv)
        if (!is_zero(r.value)) eqs.push_back(r.value);
    Mat ineqs;
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        for (const auto& h : g.vertices[v].stalk.saturation_generators()) {
            Vec z = zero_vec(l.ambient);
            for (std::size_t i = 0; i < h.size(); ++i) z[l.vertex_offsets[v] + i] = h[i];
            ineqs.push_back(z);
        }
    for (std::size_t e = 0; e < g.edges.size(); ++e) ineqs.push_back(unit_vec(l.ambient, l.edge_offset + e));
    HilbertBasis hb = hilbert_basis_of_system(identity(l.ambient), ineqs, eqs, l.ambient);
    Mat gens = hb.elements;
    for (const auto& u : hb.units) {
        gens.push_back(u);
        gens.push_back(neg(u));
    }
    return ToricMonoid::from_generators(gens, l.ambient);
}

Candidate as_candidate(const BasicResult& r) { return Candidate{r.Q, r.phi, r.rho}; }

Factorization factor_through_basic(const GhostCurve& g, const MapType& t, const BasicResult& r, const Candidate& c) {
    Factorization f;
    std::size_t k2 = c.Q.ambient();
    if (c.phi.size() != g.vertices.size() || c.rho.size() != g.edges.size()) {
        f.failure = "candidate has the wrong number of structure maps";
        return f;
    }
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        if (c.phi[v].size() != k2 || cols(c.phi[v], g.vertices[v].stalk.ambient()) != g.vertices[v].stalk.ambient()) {
            f.failure = "phi[" + g.vertices[v].name + "] has the wrong shape";
            return f;
        }
        std::string err = check_hom(MonoidHom{g.vertices[v].stalk, c.Q, c.phi[v]});
        if (!err.empty()) {
            f.failure = "phi[" + g.vertices[v].name + "]: " + err;
            return f;
        }
    }
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const Edge& E = g.edges[e];
        if (c.rho[e].size() != k2 || !c.Q.contains(c.rho[e])) {
            f.failure = "rho[" + E.name + "] is not an element of the candidate monoid";
            return f;
        }
        for (const auto& m : E.stalk.hilbert()) {
            Vec lhs = sub(mul(c.phi[E.v2], mul(E.chi2, m)), mul(c.phi[E.v1], mul(E.chi1, m)));
            Vec rhs = scale(dot(*t.u_q[e], m), c.rho[e]);
            if (lhs != rhs) {
                f.failure = "node equation fails at " + E.name;
                return f;
            }
        }
    }
    std::size_t n = r.layout.ambient;
    Mat Psi = zero_mat(k2, n);
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        for (std::size_t i = 0; i < k2; ++i)
            for (std::size_t j = 0; j < g.vertices[v].stalk.ambient(); ++j)
                Psi[i][r.layout.vertex_offsets[v] + j] = c.phi[v][i][j];
    for (std::size_t e = 0; e < g.edges.size(); ++e)
        for (std::size_t i = 0; i < k2; ++i) Psi[i][r.layout.edge_offset + e] = c.rho[e][i];
    const Mat& pi = r.quotient.projection;
    std::size_t k = pi.size();
    Mat S = right_inverse(pi, n);  // n x k
    f.map = mul(Psi, S, k);
    std::string err = check_hom(MonoidHom{r.Q, c.Q, f.map});
    if (!err.empty()) {
        f.failure = "induced map does not send Q into the candidate: " + err;
        return f;
    }
    f.ok = true;
    return f;
}

bool is_basic(const GhostCurve& g, const MapType& t, const BasicResult& r, const Candidate& c) {
    Factorization f = factor_through_basic(g, t, r, c);
    if (!f.ok) return false;
    if (r.Q.rank() != c.Q.rank()) return false;
    Mat img;
    for (const auto& b : r.Q.group()) img.push_back(mul(f.map, b));
    if (img.empty()) return c.Q.rank() == 0;
    if (static_cast<std::size_t>(rank(img, c.Q.ambient())) != r.Q.rank()) return false;
    if (lattice_basis(img, c.Q.ambient()) != c.Q.group()) return false;
    Mat hs;
    for (const auto& h : r.Q.saturation_generators()) hs.push_back(mul(f.map, h));
    return ToricMonoid::from_generators(hs, c.Q.ambient()) == c.Q;
}

}  // namespace loggw
