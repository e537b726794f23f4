#include "loggw/io.hpp"

#include "loggw/errors.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace loggw::io {

namespace {

void require_object(const json& j, const std::string& where) {
    if (!j.is_object()) throw ValidationError(where + ": expected an object");
}

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
    require_object(j, where);
    for (const auto& [k, v] : j.items())
        if (!allowed.count(k)) throw ValidationError(where + ": unknown key '" + k + "'");
}

const json& need(const json& j, const std::string& key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) throw ValidationError(where + ": missing key '" + key + "'");
    return *it;
}

std::string parse_name(const json& j, const std::string& where) {
    if (!j.is_string()) throw ValidationError(where + ": expected a name");
    return j.get<std::string>();
}

// Reference by name or by index.
int resolve(const json& j, const std::vector<std::string>& names, const std::string& where) {
    if (j.is_number_integer()) {
        auto i = j.get<long long>();
        if (i < 0 || i >= static_cast<long long>(names.size())) throw ValidationError(where + ": index out of range");
        return static_cast<int>(i);
    }
    std::string n = parse_name(j, where);
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == n) return static_cast<int>(i);
    throw ValidationError(where + ": unknown name '" + n + "'");
}

std::vector<std::string> vertex_names(const GhostCurve& g) {
    std::vector<std::string> out;
    for (const auto& v : g.vertices) out.push_back(v.name);
    return out;
}
std::vector<std::string> edge_names(const GhostCurve& g) {
    std::vector<std::string> out;
    for (const auto& e : g.edges) out.push_back(e.name);
    return out;
}
std::vector<std::string> leg_names(const GhostCurve& g) {
    std::vector<std::string> out;
    for (const auto& l : g.legs) out.push_back(l.name);
    return out;
}

// Either a map keyed by name or a list in declaration order.
template <class F>
void per_name(const json& j, const std::vector<std::string>& names, const std::string& where, F&& f) {
    if (j.is_array()) {
        if (j.size() != names.size()) throw ValidationError(where + ": expected " + std::to_string(names.size()) + " entries");
        for (std::size_t i = 0; i < names.size(); ++i) f(i, j[i]);
        return;
    }
    require_object(j, where);
    for (const auto& [k, v] : j.items()) resolve(json(k), names, where);
    for (std::size_t i = 0; i < names.size(); ++i) {
        auto it = j.find(names[i]);
        if (it == j.end()) throw ValidationError(where + ": missing entry for '" + names[i] + "'");
        f(i, *it);
    }
}

}  // namespace

json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

Int parse_int(const json& j, const std::string& where) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) {
            auto u = j.get<unsigned long long>();
            return Int::from_string(std::to_string(u));
        }
        return Int(j.get<long long>());
    }
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
            throw ValidationError(where + ": '" + s + "' is not an integer");
        return Int::from_string(s[0] == '+' ? s.substr(1) : s);
    }
    throw ValidationError(where + ": expected an integer");
}

Vec parse_vec(const json& j, const std::string& where) {
    if (!j.is_array()) throw ValidationError(where + ": expected a list of integers");
    Vec v;
    for (const auto& x : j) v.push_back(parse_int(x, where));
    return v;
}

Mat parse_mat(const json& j, const std::string& where) {
    if (!j.is_array()) throw ValidationError(where + ": expected a matrix");
    Mat m;
    for (const auto& r : j) m.push_back(parse_vec(r, where));
    for (const auto& r : m)
        if (r.size() != m[0].size()) throw ValidationError(where + ": ragged matrix");
    return m;
}

ToricMonoid parse_monoid(const json& j, const std::string& where) {
    check_keys(j, {"ambient_rank", "generators"}, where);
    Int n = parse_int(need(j, "ambient_rank", where), where);
    if (n < 0 || n > 64) throw ValidationError(where + ": ambient_rank out of range");
    std::size_t amb = static_cast<std::size_t>(n.to_int64());
    Mat gens = parse_mat(need(j, "generators", where), where);
    for (const auto& gvec : gens)
        if (gvec.size() != amb) throw ValidationError(where + ": generator length differs from ambient_rank");
    return ToricMonoid::from_generators(gens, amb);
}

GhostCurve parse_graph(const json& j) {
    check_keys(j, {"vertices", "edges", "legs", "section_lattice"}, "graph");
    GhostCurve g;
    const json& vs = need(j, "vertices", "graph");
    if (!vs.is_array()) throw ValidationError("graph: vertices must be a list");
    for (std::size_t i = 0; i < vs.size(); ++i) {
        std::string w = "vertex " + std::to_string(i);
        check_keys(vs[i], {"name", "stalk", "genus"}, w);
        Vertex v;
        v.name = vs[i].contains("name") ? parse_name(vs[i]["name"], w) : "v" + std::to_string(i + 1);
        v.stalk = parse_monoid(need(vs[i], "stalk", w), w + " stalk");
        if (vs[i].contains("genus")) v.genus = static_cast<int>(parse_int(vs[i]["genus"], w).to_int64());
        g.vertices.push_back(std::move(v));
    }
    auto vnames = vertex_names(g);
    if (j.contains("edges")) {
        const json& es = j["edges"];
        if (!es.is_array()) throw ValidationError("graph: edges must be a list");
        for (std::size_t i = 0; i < es.size(); ++i) {
            std::string w = "edge " + std::to_string(i);
            check_keys(es[i], {"name", "ends", "stalk", "chi1", "chi2"}, w);
            Edge e;
            e.name = es[i].contains("name") ? parse_name(es[i]["name"], w) : "q" + std::to_string(i + 1);
            const json& ends = need(es[i], "ends", w);
            if (!ends.is_array() || ends.size() != 2) throw ValidationError(w + ": ends must have two entries");
            e.v1 = resolve(ends[0], vnames, w);
            e.v2 = resolve(ends[1], vnames, w);
            e.stalk = parse_monoid(need(es[i], "stalk", w), w + " stalk");
            e.chi1 = parse_mat(need(es[i], "chi1", w), w + " chi1");
            e.chi2 = parse_mat(need(es[i], "chi2", w), w + " chi2");
            g.edges.push_back(std::move(e));
        }
    }
    if (j.contains("legs")) {
        const json& ls = j["legs"];
        if (!ls.is_array()) throw ValidationError("graph: legs must be a list");
        for (std::size_t i = 0; i < ls.size(); ++i) {
            std::string w = "leg " + std::to_string(i);
            check_keys(ls[i], {"name", "vertex", "stalk", "chi"}, w);
            Leg l;
            l.name = ls[i].contains("name") ? parse_name(ls[i]["name"], w) : "p" + std::to_string(i + 1);
            l.vertex = resolve(need(ls[i], "vertex", w), vnames, w);
            l.stalk = parse_monoid(need(ls[i], "stalk", w), w + " stalk");
            l.chi = parse_mat(need(ls[i], "chi", w), w + " chi");
            g.legs.push_back(std::move(l));
        }
    }
    if (j.contains("section_lattice")) {
        const json& s = j["section_lattice"];
        check_keys(s, {"rank", "vertices", "edges", "legs"}, "section_lattice");
        SectionLattice sl;
        sl.rank = static_cast<std::size_t>(parse_int(need(s, "rank", "section_lattice"), "section_lattice").to_int64());
        auto fill = [&](const char* key, const std::vector<std::string>& names, std::vector<Mat>& out) {
            out.assign(names.size(), {});
            if (!s.contains(key)) {
                if (!names.empty()) throw ValidationError(std::string("section_lattice: missing '") + key + "'");
                return;
            }
            per_name(s[key], names, std::string("section_lattice ") + key,
                     [&](std::size_t i, const json& m) { out[i] = parse_mat(m, "section_lattice " + names[i]); });
        };
        fill("vertices", vnames, sl.vertices);
        fill("edges", edge_names(g), sl.edges);
        fill("legs", leg_names(g), sl.legs);
        g.section_lattice = std::move(sl);
    }
    require_valid(g);
    return g;
}

std::vector<TauEntry> parse_tau(const json& j, const GhostCurve& g) {
    const json* list = &j;
    if (j.is_object()) {
        check_keys(j, {"tau"}, "tau");
        list = &need(j, "tau", "tau");
    }
    if (!list->is_array()) throw ValidationError("tau: expected a list");
    std::vector<TauEntry> out;
    auto vn = vertex_names(g), en = edge_names(g), ln = leg_names(g);
    for (std::size_t i = 0; i < list->size(); ++i) {
        const json& e = (*list)[i];
        std::string w = "tau " + std::to_string(i);
        check_keys(e, {"vertex", "point", "side", "value"}, w);
        TauEntry t;
        t.vertex = resolve(need(e, "vertex", w), vn, w);
        std::string p = parse_name(need(e, "point", w), w);
        int li = g.leg_index(p), ei = g.edge_index(p);
        if (li >= 0) {
            t.kind = PointKind::Leg;
            t.index = li;
        } else if (ei >= 0) {
            t.kind = PointKind::Edge;
            t.index = ei;
        } else {
            throw ValidationError(w + ": unknown point '" + p + "'");
        }
        if (e.contains("side")) {
            Int s = parse_int(e["side"], w);
            if (s != 1 && s != 2) throw ValidationError(w + ": side must be 1 or 2");
            t.side = static_cast<int>(s.to_int64());
        }
        t.value = parse_vec(need(e, "value", w), w);
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<Vec> parse_contacts(const json& j, const GhostCurve& g) {
    const json* body = &j;
    if (j.is_object() && j.contains("u_p")) {
        check_keys(j, {"u_p"}, "contacts");
        body = &j["u_p"];
    }
    std::vector<Vec> out(g.legs.size());
    per_name(*body, leg_names(g), "contacts", [&](std::size_t i, const json& v) { out[i] = parse_vec(v, "u_p " + g.legs[i].name); });
    return out;
}

MapType parse_type(const json& j, const GhostCurve& g) {
    check_keys(j, {"u_q", "u_p", "tau"}, "type");
    MapType t;
    t.u_q.assign(g.edges.size(), std::nullopt);
    if (j.contains("u_q"))
        per_name(j["u_q"], edge_names(g), "u_q", [&](std::size_t i, const json& v) {
            if (!v.is_null()) t.u_q[i] = parse_vec(v, "u_q " + g.edges[i].name);
        });
    else if (!g.edges.empty())
        throw ValidationError("type: missing key 'u_q'");
    t.u_p.assign(g.legs.size(), {});
    if (j.contains("u_p"))
        per_name(j["u_p"], leg_names(g), "u_p", [&](std::size_t i, const json& v) { t.u_p[i] = parse_vec(v, "u_p " + g.legs[i].name); });
    else if (!g.legs.empty())
        throw ValidationError("type: missing key 'u_p'");
    if (j.contains("tau")) t.tau = parse_tau(j["tau"], g);
    return t;
}

LogSpaceSkeleton parse_skeleton(const json& j) {
    check_keys(j, {"points", "specializations"}, "skeleton");
    LogSpaceSkeleton s;
    const json& ps = need(j, "points", "skeleton");
    if (!ps.is_array()) throw ValidationError("skeleton: points must be a list");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        std::string w = "point " + std::to_string(i);
        check_keys(ps[i], {"name", "stalk"}, w);
        SkeletonPoint p;
        p.name = parse_name(need(ps[i], "name", w), w);
        p.stalk = parse_monoid(need(ps[i], "stalk", w), w + " stalk");
        names.push_back(p.name);
        s.points.push_back(std::move(p));
    }
    if (j.contains("specializations")) {
        const json& ss = j["specializations"];
        if (!ss.is_array()) throw ValidationError("skeleton: specializations must be a list");
        for (std::size_t i = 0; i < ss.size(); ++i) {
            std::string w = "specialization " + std::to_string(i);
            check_keys(ss[i], {"from", "to", "hom"}, w);
            SkeletonSpecialization sp;
            sp.from = resolve(need(ss[i], "from", w), names, w);
            sp.to = resolve(need(ss[i], "to", w), names, w);
            sp.hom = parse_mat(need(ss[i], "hom", w), w);
            s.specializations.push_back(std::move(sp));
        }
    }
    validate_skeleton(s);
    return s;
}

json emit(const Int& x) {
    if (x.fits_int64()) return json(static_cast<long long>(x.to_int64()));
    return json(x.str());
}

json emit(const Vec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(emit(x));
    return a;
}

json emit(const Mat& m) {
    json a = json::array();
    for (const auto& r : m) a.push_back(emit(r));
    return a;
}

json emit(const ToricMonoid& m) {
    return json{{"ambient_rank", m.ambient()}, {"generators", emit(m.hilbert())}};
}

json emit_type(const GhostCurve& g, const MapType& t) {
    json uq = json::object(), up = json::object();
    for (std::size_t e = 0; e < g.edges.size(); ++e) uq[g.edges[e].name] = t.u_q[e] ? emit(*t.u_q[e]) : json(nullptr);
    for (std::size_t l = 0; l < g.legs.size(); ++l) up[g.legs[l].name] = emit(t.u_p[l]);
    json tau = json::array();
    for (const auto& e : t.tau) {
        json x{{"vertex", g.vertices[static_cast<std::size_t>(e.vertex)].name},
               {"point", e.kind == PointKind::Leg ? g.legs[static_cast<std::size_t>(e.index)].name
                                                  : g.edges[static_cast<std::size_t>(e.index)].name},
               {"value", emit(e.value)}};
        if (e.side != 0) x["side"] = e.side;
        tau.push_back(std::move(x));
    }
    return json{{"u_q", uq}, {"u_p", up}, {"tau", tau}};
}

json emit_basic(const GhostCurve& g, const BasicResult& r) {
    json doc;
    doc["Q_ambient_rank"] = r.Q.ambient();
    doc["Q_hilbert_basis"] = emit(r.Q.hilbert());
    doc["Q_relations"] = emit(r.Q_relations);
    doc["relations"] = emit(r.quotient.relations);
    doc["relations_unsaturated"] = emit(r.quotient.relations_unsaturated);
    doc["torsion"] = emit(Vec(r.quotient.torsion.begin(), r.quotient.torsion.end()));
    doc["saturation_witness"] = emit(r.saturation_witness);
    doc["projection"] = emit(r.quotient.projection);
    doc["image_generators"] = emit(r.quotient.image_generators);
    doc["image_saturated"] = r.quotient.image_saturated;
    doc["saturation_added"] = emit(r.quotient.saturation_added);
    json phi = json::object(), rho = json::object();
    for (std::size_t v = 0; v < g.vertices.size(); ++v) phi[g.vertices[v].name] = emit(r.phi[v]);
    for (std::size_t e = 0; e < g.edges.size(); ++e) rho[g.edges[e].name] = emit(r.rho[e]);
    doc["phi"] = phi;
    doc["rho"] = rho;
    json rv = json::array();
    for (const auto& x : r.relation_vectors)
        rv.push_back(json{{"edge", g.edges[static_cast<std::size_t>(x.edge)].name}, {"m", emit(x.m)}, {"value", emit(x.value)}});
    doc["relation_vectors"] = rv;
    doc["prestable"] = r.prestable;
    doc["prestable_witnesses"] = r.prestable_witnesses;
    return doc;
}

json emit_tropical_curve(const TropicalCurve& c) {
    json vs = json::array(), es = json::array(), ls = json::array();
    for (const auto& v : c.vertices) vs.push_back(json{{"name", v.name}, {"position", emit(v.position)}});
    for (const auto& e : c.edges)
        es.push_back(json{{"name", e.name},
                          {"from", c.vertices[static_cast<std::size_t>(e.v1)].name},
                          {"to", c.vertices[static_cast<std::size_t>(e.v2)].name},
                          {"weight", emit(e.weight)},
                          {"length", emit(e.length)},
                          {"contracted", e.contracted}});
    for (const auto& l : c.legs)
        ls.push_back(json{{"name", l.name},
                          {"vertex", c.vertices[static_cast<std::size_t>(l.vertex)].name},
                          {"direction", emit(l.direction)},
                          {"correction", l.correction}});
    // Positions are integral already; the common denominator is recorded for plotting tools.
    return json{{"rank", c.rank}, {"denominator", 1}, {"vertices", vs}, {"edges", es}, {"legs", ls}};
}

json emit_complex(const LogSpaceSkeleton& s, const ConeComplex& c) {
    auto face_json = [&](const FaceNode& f) {
        Mat rays;
        for (int r : f.rays) rays.push_back(c.rays[static_cast<std::size_t>(f.point)][static_cast<std::size_t>(r)]);
        return json{{"point", s.points[static_cast<std::size_t>(f.point)].name}, {"rays", emit(rays)}};
    };
    json cones = json::array();
    for (std::size_t x = 0; x < s.points.size(); ++x)
        cones.push_back(json{{"point", s.points[x].name},
                             {"rays", emit(c.rays[x])},
                             {"hilbert_basis", emit(c.duals[x].hilbert())},
                             {"faces", c.faces[x].size()}});
    json classes = json::array();
    std::vector<json> members(c.class_representative.size(), json::array());
    for (const auto& [f, k] : c.face_class) members[static_cast<std::size_t>(k)].push_back(face_json(f));
    for (std::size_t k = 0; k < c.class_representative.size(); ++k) {
        const auto& rep = c.class_representative[k];
        classes.push_back(json{{"id", k}, {"dim", rep.rays.size()}, {"representative", face_json(rep)}, {"members", members[k]}});
    }
    json wit = json::array();
    for (const auto& w : c.witnesses) {
        const Mat& rays = c.rays[static_cast<std::size_t>(w.face.point)];
        auto label = [&](int r) {
            const Vec& v = rays[static_cast<std::size_t>(r)];
            std::size_t nz = 0, pos = 0;
            for (std::size_t i = 0; i < v.size(); ++i)
                if (!v[i].is_zero()) {
                    ++nz;
                    pos = i;
                }
            if (nz == 1 && v[pos] == 1) return "e" + std::to_string(pos + 1) + "*";
            return to_string(v);
        };
        json perm = json::array();
        std::vector<std::string> swaps;
        for (const auto& [a, b] : w.permutation) {
            perm.push_back(json{{"from", emit(rays[static_cast<std::size_t>(a)])}, {"to", emit(rays[static_cast<std::size_t>(b)])}});
            if (a < b && std::find(w.permutation.begin(), w.permutation.end(), std::make_pair(b, a)) != w.permutation.end())
            {
                std::string la = label(a), lb = label(b);
                if (lb < la) std::swap(la, lb);
                swaps.push_back(la + "<->" + lb);
            }
        }
        json path = json::array();
        for (int k : w.path) {
            const auto& sp = s.specializations[static_cast<std::size_t>(k)];
            path.push_back(s.points[static_cast<std::size_t>(sp.from)].name + "->" + s.points[static_cast<std::size_t>(sp.to)].name);
        }
        wit.push_back(json{{"face", face_json(w.face)}, {"permutation", perm}, {"swaps", swaps}, {"path", path}});
    }
    return json{{"cones", cones}, {"classes", classes}, {"monodromy_free", c.monodromy_free}, {"witnesses", wit}};
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace loggw::io
