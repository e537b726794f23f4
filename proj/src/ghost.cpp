#include "loggw/ghost.hpp"

#include "loggw/errors.hpp"

#include <numeric>

namespace loggw {

PointRef GhostCurve::point(std::size_t i) const {
    if (i < vertices.size()) return {PointKind::Vertex, static_cast<int>(i)};
    i -= vertices.size();
    if (i < edges.size()) return {PointKind::Edge, static_cast<int>(i)};
    i -= edges.size();
    return {PointKind::Leg, static_cast<int>(i)};
}

std::size_t GhostCurve::point_index(PointRef r) const {
    switch (r.kind) {
        case PointKind::Vertex: return static_cast<std::size_t>(r.index);
        case PointKind::Edge: return vertices.size() + r.index;
        case PointKind::Leg: return vertices.size() + edges.size() + r.index;
    }
    return 0;
}

const ToricMonoid& GhostCurve::stalk(PointRef r) const {
    switch (r.kind) {
        case PointKind::Vertex: return vertices[r.index].stalk;
        case PointKind::Edge: return edges[r.index].stalk;
        default: return legs[r.index].stalk;
    }
}

std::string GhostCurve::point_name(PointRef r) const {
    switch (r.kind) {
        case PointKind::Vertex: return vertices[r.index].name;
        case PointKind::Edge: return edges[r.index].name;
        default: return legs[r.index].name;
    }
}

namespace {
template <class T>
int find_named(const std::vector<T>& xs, const std::string& name) {
    for (std::size_t i = 0; i < xs.size(); ++i)
        if (xs[i].name == name) return static_cast<int>(i);
    return -1;
}
}  // namespace

int GhostCurve::vertex_index(const std::string& n) const { return find_named(vertices, n); }
int GhostCurve::edge_index(const std::string& n) const { return find_named(edges, n); }
int GhostCurve::leg_index(const std::string& n) const { return find_named(legs, n); }

std::size_t GhostCurve::cycle_rank() const {
    std::vector<int> parent(vertices.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t comps = vertices.size();
    for (const auto& e : edges) {
        int a = find(e.v1), b = find(e.v2);
        if (a != b) {
            parent[a] = b;
            --comps;
        }
    }
    return edges.size() + comps - vertices.size();
}

std::vector<Issue> validate_ghost(const GhostCurve& g) {
    std::vector<Issue> out;
    if (g.vertices.empty()) out.push_back({"graph", "no vertices"});
    int nv = static_cast<int>(g.vertices.size());
    for (const auto& v : g.vertices)
        if (!v.stalk.is_sharp()) out.push_back({v.name, "stalk is not sharp"});
    auto check_gen = [&](const std::string& where, const ToricMonoid& src, const ToricMonoid& dst, const Mat& chi) {
        MonoidHom h{src, dst, chi};
        std::string err = check_hom(h);
        if (!err.empty()) {
            out.push_back({where, err});
            return;
        }
        if (!is_face_quotient(h)) out.push_back({where, "generization is not a localization at a face followed by sharpening"});
    };
    for (const auto& e : g.edges) {
        if (e.v1 < 0 || e.v1 >= nv || e.v2 < 0 || e.v2 >= nv) {
            out.push_back({e.name, "endpoint is not a declared vertex"});
            continue;
        }
        if (!e.stalk.is_sharp()) out.push_back({e.name, "stalk is not sharp"});
        check_gen(e.name + " (side 1)", e.stalk, g.vertices[e.v1].stalk, e.chi1);
        check_gen(e.name + " (side 2)", e.stalk, g.vertices[e.v2].stalk, e.chi2);
    }
    for (const auto& l : g.legs) {
        if (l.vertex < 0 || l.vertex >= nv) {
            out.push_back({l.name, "anchor is not a declared vertex"});
            continue;
        }
        if (!l.stalk.is_sharp()) out.push_back({l.name, "stalk is not sharp"});
        check_gen(l.name, l.stalk, g.vertices[l.vertex].stalk, l.chi);
    }
    // connectivity
    if (nv > 0) {
        std::vector<char> seen(nv, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const auto& e : g.edges) {
                if (e.v1 < 0 || e.v2 < 0 || e.v1 >= nv || e.v2 >= nv) continue;
                int w = e.v1 == v ? e.v2 : (e.v2 == v ? e.v1 : -1);
                if (w >= 0 && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        for (int v = 0; v < nv; ++v)
            if (!seen[v]) out.push_back({g.vertices[v].name, "graph is not connected"});
    }
    if (g.section_lattice) {
        const auto& s = *g.section_lattice;
        if (s.vertices.size() != g.vertices.size() || s.edges.size() != g.edges.size() || s.legs.size() != g.legs.size()) {
            out.push_back({"section_lattice", "needs one matrix per vertex, edge and leg"});
        } else {
            auto shape_ok = [&](const Mat& m, std::size_t amb) {
                if (m.size() != amb) return false;
                for (const auto& r : m)
                    if (r.size() != s.rank) return false;
                return true;
            };
            for (std::size_t i = 0; i < g.num_points(); ++i) {
                PointRef r = g.point(i);
                const Mat& m = r.kind == PointKind::Vertex ? s.vertices[r.index]
                               : r.kind == PointKind::Edge ? s.edges[r.index]
                                                           : s.legs[r.index];
                if (!shape_ok(m, g.stalk(r).ambient())) {
                    out.push_back({"section_lattice", g.point_name(r) + ": wrong shape"});
                    continue;
                }
                for (std::size_t j = 0; j < s.rank; ++j) {
                    Vec col(m.size());
                    for (std::size_t k = 0; k < m.size(); ++k) col[k] = m[k][j];
                    if (!g.stalk(r).in_group(col))
                        out.push_back({"section_lattice", g.point_name(r) + ": section outside the stalk group"});
                }
            }
            if (out.empty()) {
                for (std::size_t e = 0; e < g.edges.size(); ++e) {
                    const auto& E = g.edges[e];
                    if (mul(E.chi1, s.edges[e], s.rank) != s.vertices[E.v1] ||
                        mul(E.chi2, s.edges[e], s.rank) != s.vertices[E.v2])
                        out.push_back({"section_lattice", E.name + ": sections do not generize compatibly"});
                }
                for (std::size_t l = 0; l < g.legs.size(); ++l)
                    if (mul(g.legs[l].chi, s.legs[l], s.rank) != s.vertices[g.legs[l].vertex])
                        out.push_back({"section_lattice", g.legs[l].name + ": sections do not generize compatibly"});
            }
        }
    }
    return out;
}

void require_valid(const GhostCurve& g) {
    auto issues = validate_ghost(g);
    if (!issues.empty()) throw ValidationError(issues[0].where + ": " + issues[0].message);
}

std::vector<SpecialPoint> special_points(const GhostCurve& g, int vertex) {
    std::vector<SpecialPoint> out;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const auto& E = g.edges[e];
        if (E.v1 == vertex) out.push_back({PointKind::Edge, static_cast<int>(e), 1, &E.chi1, &E.stalk});
        if (E.v2 == vertex) out.push_back({PointKind::Edge, static_cast<int>(e), 2, &E.chi2, &E.stalk});
    }
    for (std::size_t l = 0; l < g.legs.size(); ++l)
        if (g.legs[l].vertex == vertex)
            out.push_back({PointKind::Leg, static_cast<int>(l), 0, &g.legs[l].chi, &g.legs[l].stalk});
    return out;
}

bool MapType::determined() const {
    for (const auto& u : u_q)
        if (!u) return false;
    return true;
}

std::vector<Issue> validate_type(const GhostCurve& g, const MapType& t) {
    std::vector<Issue> out;
    if (t.u_q.size() != g.edges.size()) out.push_back({"type", "u_q needs one entry per edge"});
    if (t.u_p.size() != g.legs.size()) out.push_back({"type", "u_p needs one entry per leg"});
    if (!out.empty()) return out;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        if (!t.u_q[e]) {
            out.push_back({g.edges[e].name, "u_q is undetermined"});
            continue;
        }
        if (t.u_q[e]->size() != g.edges[e].stalk.ambient()) out.push_back({g.edges[e].name, "u_q has wrong length"});
    }
    for (std::size_t l = 0; l < g.legs.size(); ++l) {
        const auto& P = g.legs[l].stalk;
        if (t.u_p[l].size() != P.ambient()) {
            out.push_back({g.legs[l].name, "u_p has wrong length"});
            continue;
        }
        for (const auto& h : P.hilbert())
            if (dot(t.u_p[l], h).sign() < 0) {
                out.push_back({g.legs[l].name, "u_p is negative on the stalk"});
                break;
            }
    }
    for (const auto& tau : t.tau) {
        if (tau.vertex < 0 || tau.vertex >= static_cast<int>(g.vertices.size())) {
            out.push_back({"tau", "unknown vertex"});
            continue;
        }
        bool found = false;
        for (const auto& x : special_points(g, tau.vertex))
            if (x.kind == tau.kind && x.index == tau.index && (tau.side == 0 || tau.side == x.side)) {
                found = true;
                if (tau.value.size() != x.stalk->ambient())
                    out.push_back({"tau", "entry at " + g.vertices[tau.vertex].name + " has wrong length"});
                break;
            }
        if (!found) out.push_back({"tau", "entry at " + g.vertices[tau.vertex].name + " is not a special point there"});
    }
    return out;
}

void require_valid(const GhostCurve& g, const MapType& t) {
    auto issues = validate_type(g, t);
    if (!issues.empty()) throw ValidationError(issues[0].where + ": " + issues[0].message);
}

Vec flag_weight(const MapType& t, const SpecialPoint& x) {
    if (x.kind == PointKind::Leg) return t.u_p[x.index];
    const auto& u = t.u_q[x.index];
    if (!u) throw ValidationError("undetermined u_q");
    return x.side == 1 ? *u : neg(*u);
}

Vec tau_at(const MapType& t, int vertex, const SpecialPoint& x, std::size_t ambient) {
    Vec out = zero_vec(ambient);
    for (const auto& e : t.tau)
        if (e.vertex == vertex && e.kind == x.kind && e.index == x.index && (e.side == 0 || e.side == x.side))
            out = add(out, e.value);
    return out;
}

Vec ColimitGroup::embed(std::size_t point, const Vec& a) const {
    Vec z = zero_vec(total);
    for (std::size_t i = 0; i < a.size(); ++i) z[offsets[point] + i] = a[i];
    return z;
}

bool ColimitGroup::is_zero_class(const Vec& z) const { return is_zero(reduce(z)); }

ColimitGroup colimit_group(const GhostCurve& g, int vertex) {
    ColimitGroup c;
    c.vertex = vertex;
    c.points = special_points(g, vertex);
    for (const auto& x : c.points) {
        c.offsets.push_back(c.total);
        c.total += x.stalk->ambient();
    }
    std::size_t ne = g.vertices[vertex].stalk.ambient();
    Mat rel;
    for (std::size_t i = 0; i < c.points.size(); ++i) {
        const auto& x = c.points[i];
        Mat ann = integer_kernel(x.stalk->group(), x.stalk->ambient());
        for (const auto& a : ann) rel.push_back(c.embed(i, a));
        if (i == 0) continue;
        for (std::size_t k = 0; k < ne; ++k) {
            Vec a = unit_vec(ne, k);
            Vec z = sub(c.embed(i, vec_mul(a, *x.chi, x.stalk->ambient())),
                        c.embed(0, vec_mul(a, *c.points[0].chi, c.points[0].stalk->ambient())));
            if (!is_zero(z)) rel.push_back(z);
        }
    }
    if (!rel.empty()) {
        HNFResult h = hermite_normal_form(rel, c.total);
        c.relations.assign(h.H.begin(), h.H.begin() + h.rank);
        c.pivots = h.pivots;
        c.rank = c.total - h.rank;
        SNFResult s = smith_normal_form(c.relations, c.total);
        for (const auto& d : s.diag)
            if (!d.is_one()) c.torsion.push_back(d);
    } else {
        c.rank = c.total;
    }
    return c;
}

Mat GlobalSections::restrict_to(const Mat& rows, std::size_t point, std::size_t amb) const {
    Mat out;
    for (const auto& r : rows) out.emplace_back(r.begin() + offsets[point], r.begin() + offsets[point] + amb);
    return out;
}

GlobalSections global_sections(const GhostCurve& g) {
    GlobalSections s;
    std::size_t np = g.num_points();
    std::vector<std::size_t> coff(np);
    std::size_t ctotal = 0;
    for (std::size_t i = 0; i < np; ++i) {
        s.offsets.push_back(s.ambient);
        s.ambient += g.stalk(g.point(i)).ambient();
        coff[i] = ctotal;
        ctotal += g.stalk(g.point(i)).rank();
    }
    // Constraint chi * s_x - s_eta = 0 with s_x = c_x * B_x.
    Mat cons;
    auto add_generization = [&](std::size_t x, std::size_t eta, const Mat& chi) {
        const ToricMonoid& Px = g.stalk(g.point(x));
        const ToricMonoid& Pe = g.stalk(g.point(eta));
        Mat chiB = mul(chi, transpose(Px.group(), Px.ambient()), Px.rank());  // amb_eta x rank_x
        Mat Be = transpose(Pe.group(), Pe.ambient());                         // amb_eta x rank_eta
        for (std::size_t r = 0; r < Pe.ambient(); ++r) {
            Vec row = zero_vec(ctotal);
            for (std::size_t j = 0; j < Px.rank(); ++j) row[coff[x] + j] += chiB[r][j];
            for (std::size_t j = 0; j < Pe.rank(); ++j) row[coff[eta] + j] -= Be[r][j];
            if (!is_zero(row)) cons.push_back(row);
        }
    };
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        std::size_t xi = g.point_index({PointKind::Edge, static_cast<int>(e)});
        add_generization(xi, g.edges[e].v1, g.edges[e].chi1);
        add_generization(xi, g.edges[e].v2, g.edges[e].chi2);
    }
    for (std::size_t l = 0; l < g.legs.size(); ++l)
        add_generization(g.point_index({PointKind::Leg, static_cast<int>(l)}), g.legs[l].vertex, g.legs[l].chi);
    Mat K = cons.empty() ? identity(ctotal) : integer_kernel(cons, ctotal);
    // c -> s
    auto to_s = [&](const Vec& c) {
        Vec out = zero_vec(s.ambient);
        for (std::size_t i = 0; i < np; ++i) {
            const ToricMonoid& P = g.stalk(g.point(i));
            for (std::size_t j = 0; j < P.rank(); ++j)
                for (std::size_t k = 0; k < P.ambient(); ++k) out[s.offsets[i] + k] += c[coff[i] + j] * P.group()[j][k];
        }
        return out;
    };
    for (const auto& k : K) s.group_sections.push_back(to_s(k));
    if (!s.group_sections.empty()) s.group_sections = lattice_basis(s.group_sections, s.ambient);
    Mat ineqs;
    for (std::size_t i = 0; i < np; ++i) {
        const ToricMonoid& P = g.stalk(g.point(i));
        for (const auto& f : P.facets()) {
            Vec row = zero_vec(s.ambient);
            for (std::size_t k = 0; k < P.ambient(); ++k) row[s.offsets[i] + k] = f[k];
            ineqs.push_back(row);
        }
    }
    HilbertBasis hb = hilbert_basis_of_system(s.group_sections, ineqs, {}, s.ambient);
    Mat gens = hb.elements;
    for (const auto& u : hb.units) {
        gens.push_back(u);
        gens.push_back(neg(u));
    }
    s.gamma = ToricMonoid::from_generators(gens, s.ambient);
    s.gamma_group = s.gamma.group();
    return s;
}

namespace {

GenerationCheck span_check(const GhostCurve& g, const GlobalSections& s, const Mat& rows) {
    GenerationCheck out;
    for (std::size_t i = 0; i < g.num_points(); ++i) {
        PointRef r = g.point(i);
        const ToricMonoid& P = g.stalk(r);
        Mat res = s.restrict_to(rows, i, P.ambient());
        std::size_t rk = res.empty() ? 0 : static_cast<std::size_t>(rank(res, P.ambient()));
        if (rk != P.rank()) {
            out.ok = false;
            out.witness = g.point_name(r);
            return out;
        }
    }
    return out;
}

}  // namespace

GenerationCheck check_almost_generated(const GhostCurve& g, const GlobalSections& s) {
    return span_check(g, s, s.gamma.saturation_generators());
}

GenerationCheck check_quasi_generated(const GhostCurve& g, const GlobalSections& s) {
    if (g.section_lattice) {
        GenerationCheck out;
        const auto& sl = *g.section_lattice;
        for (std::size_t i = 0; i < g.num_points(); ++i) {
            PointRef r = g.point(i);
            const Mat& m = r.kind == PointKind::Vertex ? sl.vertices[r.index]
                           : r.kind == PointKind::Edge ? sl.edges[r.index]
                                                       : sl.legs[r.index];
            std::size_t rk = m.empty() ? 0 : static_cast<std::size_t>(rank(m, sl.rank));
            if (rk != g.stalk(r).rank()) {
                out.ok = false;
                out.witness = g.point_name(r);
                return out;
            }
        }
        return out;
    }
    return span_check(g, s, s.group_sections);
}

Vec SectionBasis::push(std::size_t point, const Vec& u) const {
    const Mat& E = restriction[point];
    return vec_mul(u, E, rank);
}

SectionBasis section_basis(const GhostCurve& g, const GlobalSections& s, SectionMode mode) {
    SectionBasis b;
    std::size_t np = g.num_points();
    if (mode == SectionMode::GroupSections && g.section_lattice) {
        const auto& sl = *g.section_lattice;
        b.rank = sl.rank;
        for (std::size_t i = 0; i < np; ++i) {
            PointRef r = g.point(i);
            b.restriction.push_back(r.kind == PointKind::Vertex ? sl.vertices[r.index]
                                    : r.kind == PointKind::Edge ? sl.edges[r.index]
                                                                : sl.legs[r.index]);
        }
        return b;
    }
    const Mat& basis = mode == SectionMode::Sections ? s.gamma_group : s.group_sections;
    b.rank = basis.size();
    for (std::size_t i = 0; i < np; ++i) {
        std::size_t amb = g.stalk(g.point(i)).ambient();
        b.restriction.push_back(transpose(s.restrict_to(basis, i, amb), amb));
    }
    if (mode == SectionMode::Sections)
        for (const auto& h : s.gamma.saturation_generators()) {
            auto c = solve_in_lattice(basis, h);
            if (!c) throw InvariantError("section outside its own group");
            b.cone_generators.push_back(*c);
        }
    return b;
}

MapType induced_type_under_generization(const MapType& generic, const Specialization& s) {
    MapType out;
    for (const auto& e : s.edges) {
        if (e.kind == PointKind::Vertex) {
            out.u_q.push_back(std::nullopt);
            continue;
        }
        if (e.kind != PointKind::Edge || e.index < 0 || e.index >= static_cast<int>(generic.u_q.size()))
            throw ValidationError("edge specializes to an unknown generic edge");
        const auto& u = generic.u_q[e.index];
        if (!u) {
            out.u_q.push_back(std::nullopt);
            continue;
        }
        Vec pulled = vec_mul(*u, e.hom);
        out.u_q.push_back(e.reversed ? neg(pulled) : pulled);
    }
    for (const auto& l : s.legs) {
        if (l.kind != PointKind::Leg || l.index < 0 || l.index >= static_cast<int>(generic.u_p.size()))
            throw ValidationError("leg specializes to an unknown generic leg");
        out.u_p.push_back(vec_mul(generic.u_p[l.index], l.hom));
    }
    return out;
}

Specialization compose(const Specialization& later, const Specialization& earlier) {
    Specialization out;
    for (const auto& e : earlier.edges) {
        if (e.kind == PointKind::Vertex) {
            out.edges.push_back(e);
            continue;
        }
        const auto& f = later.edges.at(e.index);
        SpecializationEntry c;
        c.kind = f.kind;
        c.index = f.index;
        c.reversed = e.reversed != f.reversed;
        if (f.kind != PointKind::Vertex) c.hom = mul(f.hom, e.hom, cols(e.hom));
        out.edges.push_back(c);
    }
    for (const auto& l : earlier.legs) {
        const auto& f = later.legs.at(l.index);
        out.legs.push_back({f.kind, f.index, mul(f.hom, l.hom, cols(l.hom)), false});
    }
    return out;
}

}  // namespace loggw
