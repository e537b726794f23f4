#include "loggw/tropical.hpp"

#include "loggw/errors.hpp"

namespace loggw {

TropicalData tropical_data_from_point(const GhostCurve& g, const BasicResult& r, const Vec& point) {
    if (point.size() != r.Q.ambient())
        throw ValidationError("point has length " + std::to_string(point.size()) + ", Q has ambient rank " +
                              std::to_string(r.Q.ambient()));
    if (!r.Q.units().empty()) throw ValidationError("Q is not sharp, so no local point exists");
    for (const auto& h : r.Q.hilbert())
        if (dot(point, h).sign() <= 0) throw ValidationError("point is not local: it vanishes or is negative on " + to_string(h));
    TropicalData d;
    for (std::size_t v = 0; v < g.vertices.size(); ++v) d.V.push_back(vec_mul(point, r.phi[v], g.vertices[v].stalk.ambient()));
    for (std::size_t e = 0; e < g.edges.size(); ++e) d.e.push_back(dot(point, r.rho[e]));
    return d;
}

bool same_functional(const ToricMonoid& P, const Vec& a, const Vec& b) {
    for (const auto& g : P.group())
        if (dot(a, g) != dot(b, g)) return false;
    return true;
}

std::vector<Vec> type_from_tropical_data(const GhostCurve& g, const TropicalData& d) {
    if (d.V.size() != g.vertices.size() || d.e.size() != g.edges.size())
        throw ValidationError("tropical data has the wrong number of entries");
    std::vector<Vec> out;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const Edge& E = g.edges[e];
        if (d.e[e].sign() <= 0) throw ValidationError("edge length of " + E.name + " is not positive");
        Vec diff = sub(vec_mul(d.V[E.v2], E.chi2, E.stalk.ambient()), vec_mul(d.V[E.v1], E.chi1, E.stalk.ambient()));
        const ToricMonoid& P = E.stalk;
        Vec vals;
        for (const auto& b : P.group()) {
            Int x = dot(diff, b);
            if (!divides(d.e[e], x))
                throw ValidationError("difference across " + E.name + " is not divisible by its length");
            vals.push_back(x / d.e[e]);
        }
        Mat Bt = transpose(P.group(), P.ambient());  // amb x rank
        std::optional<Vec> u = P.group().empty() ? std::optional<Vec>(zero_vec(P.ambient())) : solve_in_lattice(Bt, vals);
        if (!u) throw ValidationError("u at " + E.name + " is not representable in the ambient dual");
        if (!P.group().empty()) {
            HNFResult ah = hermite_normal_form(integer_kernel(P.group(), P.ambient()), P.ambient());
            Mat ann(ah.H.begin(), ah.H.begin() + ah.rank);
            *u = reduce_mod_hnf(ann, ah.pivots, *u);
        }
        out.push_back(*u);
    }
    return out;
}

Int torsor_degree(const std::vector<NodeSection>& nodes, const Vec& n_p) {
    Int s = 0;
    for (const auto& n : n_p) s -= n;
    for (const auto& q : nodes) {
        if (q.e.sign() <= 0) throw ValidationError("edge length must be positive");
        Int diff = q.b - q.a;
        if (!divides(q.e, diff)) throw ValidationError("b - a is not divisible by the edge length");
        s += diff / q.e;
    }
    return s;
}

BalanceReport check_component_balancing(const GhostCurve& g, const MapType& t, const ColimitGroup& nd) {
    BalanceReport r;
    Vec z = zero_vec(nd.total);
    for (std::size_t i = 0; i < nd.points.size(); ++i) {
        const auto& x = nd.points[i];
        Vec w = add(flag_weight(t, x), tau_at(t, nd.vertex, x, x.stalk->ambient()));
        z = add(z, nd.embed(i, w));
    }
    r.defect = nd.reduce(z);
    r.ok = is_zero(r.defect);
    (void)g;
    return r;
}

BalanceReport check_component_balancing(const GhostCurve& g, const MapType& t, int vertex) {
    for (const auto& x : special_points(g, vertex))
        if (x.kind == PointKind::Edge && !t.u_q[x.index]) throw ValidationError("undetermined u_q at " + g.edges[x.index].name);
    return check_component_balancing(g, t, colimit_group(g, vertex));
}

TropicalCurve build_tropical_curve(const GhostCurve& g, const MapType& t, const TropicalData& d, SectionMode mode) {
    require_valid(g, t);
    if (d.V.size() != g.vertices.size() || d.e.size() != g.edges.size())
        throw ValidationError("tropical data has the wrong number of entries");
    GlobalSections s = global_sections(g);
    if (mode == SectionMode::Sections) {
        auto c = check_almost_generated(g, s);
        if (!c.ok) throw ValidationError("sections mode needs an almost generated curve; fails at " + c.witness);
    } else {
        auto c = check_quasi_generated(g, s);
        if (!c.ok) throw ValidationError("group-sections mode needs a quasi-generated curve; fails at " + c.witness);
    }
    SectionBasis sb = section_basis(g, s, mode);
    TropicalCurve c;
    c.rank = sb.rank;
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        c.vertices.push_back({g.vertices[v].name, sb.push(g.point_index({PointKind::Vertex, static_cast<int>(v)}), d.V[v])});
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const Edge& E = g.edges[e];
        TEdge te;
        te.name = E.name;
        te.v1 = E.v1;
        te.v2 = E.v2;
        te.weight = sb.push(g.point_index({PointKind::Edge, static_cast<int>(e)}), *t.u_q[e]);
        te.length = d.e[e];
        te.contracted = is_zero(te.weight);
        c.edges.push_back(te);
    }
    for (std::size_t l = 0; l < g.legs.size(); ++l)
        c.legs.push_back({g.legs[l].name, g.legs[l].vertex,
                          sb.push(g.point_index({PointKind::Leg, static_cast<int>(l)}), t.u_p[l]), false});
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        Vec tau = zero_vec(sb.rank);
        for (const auto& x : special_points(g, static_cast<int>(v))) {
            std::size_t pi = g.point_index({x.kind, x.index});
            tau = add(tau, sb.push(pi, tau_at(t, static_cast<int>(v), x, x.stalk->ambient())));
        }
        if (!is_zero(tau)) c.legs.push_back({"tau[" + g.vertices[v].name + "]", static_cast<int>(v), tau, true});
    }
    return c;
}

bool CurveBalance::all() const {
    for (char b : balanced)
        if (!b) return false;
    return true;
}

CurveBalance check_tropical_balancing(const TropicalCurve& c) {
    Mat sums(c.vertices.size(), zero_vec(c.rank));
    for (const auto& e : c.edges) {
        sums[e.v1] = add(sums[e.v1], e.weight);
        sums[e.v2] = sub(sums[e.v2], e.weight);
    }
    for (const auto& l : c.legs) sums[l.vertex] = add(sums[l.vertex], l.direction);
    CurveBalance b;
    for (const auto& s : sums) b.balanced.push_back(is_zero(s));
    b.defects = sums;
    return b;
}

bool check_edge_geometry(const TropicalCurve& c) {
    for (const auto& e : c.edges)
        if (sub(c.vertices[e.v2].position, c.vertices[e.v1].position) != scale(e.length, e.weight)) return false;
    return true;
}

bool check_hyperplane(const TropicalCurve& c, const Vec& rho, const Int& b) {
    for (const auto& v : c.vertices)
        if (dot(v.position, rho) != b) return false;
    for (const auto& l : c.legs)
        if (!l.correction && !dot(l.direction, rho).is_zero()) return false;
    return true;
}

}  // namespace loggw
