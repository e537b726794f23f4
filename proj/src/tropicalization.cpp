#include "loggw/tropicalization.hpp"

#include "loggw/errors.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

namespace loggw {

int LogSpaceSkeleton::point_index(const std::string& name) const {
    for (std::size_t i = 0; i < points.size(); ++i)
        if (points[i].name == name) return static_cast<int>(i);
    return -1;
}

namespace {

std::size_t amb(const LogSpaceSkeleton& s, int i) { return s.points[static_cast<std::size_t>(i)].stalk.ambient(); }

bool same_matrix(const Mat& a, const Mat& b, std::size_t rows, std::size_t cols_) {
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            Int x = i < a.size() && j < a[i].size() ? a[i][j] : Int(0);
            Int y = i < b.size() && j < b[i].size() ? b[i][j] : Int(0);
            if (x != y) return false;
        }
    return true;
}

Mat shaped(const Mat& m, std::size_t rows, std::size_t cols_) {
    Mat out = zero_mat(rows, cols_);
    for (std::size_t i = 0; i < rows && i < m.size(); ++i)
        for (std::size_t j = 0; j < cols_ && j < m[i].size(); ++j) out[i][j] = m[i][j];
    return out;
}

// All composites from `from` to `to` along specialization chains.
void collect_paths(const LogSpaceSkeleton& s, int from, int to, const Mat& acc, std::vector<Mat>& out) {
    if (from == to) {
        out.push_back(acc);
        return;
    }
    for (const auto& sp : s.specializations)
        if (sp.from == from) {
            Mat next = mul(shaped(sp.hom, amb(s, sp.to), amb(s, sp.from)), acc, cols(acc, 0));
            collect_paths(s, sp.to, to, next, out);
        }
}

}  // namespace

void validate_skeleton(const LogSpaceSkeleton& s) {
    std::set<std::string> names;
    for (const auto& p : s.points) {
        if (!names.insert(p.name).second) throw ValidationError("duplicate skeleton point '" + p.name + "'");
        if (!p.stalk.is_sharp()) throw ValidationError("stalk at '" + p.name + "' is not sharp");
        if (p.stalk.rank() != p.stalk.ambient())
            throw ValidationError("stalk at '" + p.name + "' does not span its ambient lattice");
    }
    int n = static_cast<int>(s.points.size());
    std::vector<std::vector<int>> out(static_cast<std::size_t>(n));
    for (const auto& sp : s.specializations) {
        if (sp.from < 0 || sp.from >= n || sp.to < 0 || sp.to >= n)
            throw ValidationError("specialization refers to an unknown point");
        if (sp.from == sp.to) throw ValidationError("specialization from a point to itself");
        const auto& a = s.points[static_cast<std::size_t>(sp.from)];
        const auto& b = s.points[static_cast<std::size_t>(sp.to)];
        if (sp.hom.size() != b.stalk.ambient() ||
            std::any_of(sp.hom.begin(), sp.hom.end(), [&](const Vec& r) { return r.size() != a.stalk.ambient(); }))
            throw ValidationError("generization " + a.name + " -> " + b.name + " has the wrong shape");
        MonoidHom h{a.stalk, b.stalk, shaped(sp.hom, b.stalk.ambient(), a.stalk.ambient())};
        if (auto e = check_hom(h); !e.empty()) throw ValidationError("generization " + a.name + " -> " + b.name + ": " + e);
        if (!is_face_quotient(h))
            throw ValidationError("generization " + a.name + " -> " + b.name + " is not a face quotient");
        out[static_cast<std::size_t>(sp.from)].push_back(sp.to);
    }
    // Acyclicity.
    std::vector<int> state(static_cast<std::size_t>(n), 0);
    std::function<void(int)> dfs = [&](int v) {
        state[static_cast<std::size_t>(v)] = 1;
        for (int w : out[static_cast<std::size_t>(v)]) {
            if (state[static_cast<std::size_t>(w)] == 1) throw ValidationError("specializations contain a cycle");
            if (state[static_cast<std::size_t>(w)] == 0) dfs(w);
        }
        state[static_cast<std::size_t>(v)] = 2;
    };
    for (int v = 0; v < n; ++v)
        if (state[static_cast<std::size_t>(v)] == 0) dfs(v);
    // Composites along different chains must agree.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            std::vector<Mat> paths;
            collect_paths(s, a, b, identity(amb(s, a)), paths);
            for (std::size_t k = 1; k < paths.size(); ++k)
                if (!same_matrix(paths[k], paths[0], amb(s, b), amb(s, a)))
                    throw ValidationError("generizations from '" + s.points[static_cast<std::size_t>(a)].name + "' to '" +
                                          s.points[static_cast<std::size_t>(b)].name + "' do not compose consistently");
        }
}

std::optional<Mat> generization(const LogSpaceSkeleton& s, int from, int to) {
    std::vector<Mat> paths;
    collect_paths(s, from, to, identity(amb(s, from)), paths);
    if (paths.empty()) return std::nullopt;
    return shaped(paths[0], amb(s, to), amb(s, from));
}

ConeComplex build_trop(const LogSpaceSkeleton& s) {
    validate_skeleton(s);
    ConeComplex c;
    std::size_t n = s.points.size();
    c.rays.resize(n);
    c.faces.resize(n);
    for (std::size_t x = 0; x < n; ++x) {
        const auto& P = s.points[x].stalk;
        c.rays[x] = P.facets();
        c.duals.push_back(dual(P));
        std::set<std::vector<int>> seen;
        for (const auto& f : faces(P)) {
            std::vector<int> rs;
            for (std::size_t r = 0; r < c.rays[x].size(); ++r) {
                bool vanish = true;
                for (const auto& gen : f.generators)
                    if (!dot(c.rays[x][r], gen).is_zero()) {
                        vanish = false;
                        break;
                    }
                if (vanish) rs.push_back(static_cast<int>(r));
            }
            if (seen.insert(rs).second) c.faces[x].push_back(FaceNode{static_cast<int>(x), rs});
        }
        std::sort(c.faces[x].begin(), c.faces[x].end());
    }

    // Gluings: every face of σ_to is identified with its image in σ_from.
    for (std::size_t k = 0; k < s.specializations.size(); ++k) {
        const auto& sp = s.specializations[k];
        std::size_t from = static_cast<std::size_t>(sp.from), to = static_cast<std::size_t>(sp.to);
        std::vector<int> image(c.rays[to].size(), -1);
        for (std::size_t j = 0; j < c.rays[to].size(); ++j) {
            Vec v = vec_mul(c.rays[to][j], sp.hom, amb(s, sp.from));
            for (std::size_t i = 0; i < c.rays[from].size(); ++i)
                if (c.rays[from][i] == v) image[j] = static_cast<int>(i);
            if (image[j] < 0)
                throw ValidationError("generization " + s.points[from].name + " -> " + s.points[to].name +
                                      " does not embed the dual cone as a face");
        }
        for (const auto& f : c.faces[to]) {
            std::vector<std::pair<int, int>> pairs;
            for (int r : f.rays) pairs.push_back({image[static_cast<std::size_t>(r)], r});
            std::sort(pairs.begin(), pairs.end());
            FaceNode b{sp.from, {}};
            FaceGluing gl;
            gl.a = f;
            for (const auto& [ri, rj] : pairs) b.rays.push_back(ri);
            if (!std::binary_search(c.faces[from].begin(), c.faces[from].end(), b))
                throw ValidationError("generization " + s.points[from].name + " -> " + s.points[to].name +
                                      " does not map faces to faces");
            gl.b = b;
            for (int r : f.rays) gl.ray_map.push_back(image[static_cast<std::size_t>(r)]);
            gl.specialization = static_cast<int>(k);
            c.gluings.push_back(std::move(gl));
        }
    }

    // Equivalence classes by BFS over gluings, tracking ray transport.
    std::vector<FaceNode> nodes;
    for (const auto& fs : c.faces)
        for (const auto& f : fs) nodes.push_back(f);
    std::map<FaceNode, int> id;
    for (std::size_t i = 0; i < nodes.size(); ++i) id[nodes[i]] = static_cast<int>(i);
    struct Arc {
        int to;
        int gluing;
        bool forward;  // a -> b
    };
    std::vector<std::vector<Arc>> adj(nodes.size());
    for (std::size_t k = 0; k < c.gluings.size(); ++k) {
        int a = id[c.gluings[k].a], b = id[c.gluings[k].b];
        adj[static_cast<std::size_t>(a)].push_back({b, static_cast<int>(k), true});
        adj[static_cast<std::size_t>(b)].push_back({a, static_cast<int>(k), false});
    }
    // transport[node]: ray of the node -> ray of the class representative
    std::vector<std::map<int, int>> transport(nodes.size());
    std::vector<int> cls(nodes.size(), -1), parent_gluing(nodes.size(), -1), parent(nodes.size(), -1);
    auto path_to_root = [&](int v) {
        std::vector<int> p;
        while (parent[static_cast<std::size_t>(v)] >= 0) {
            p.push_back(c.gluings[static_cast<std::size_t>(parent_gluing[static_cast<std::size_t>(v)])].specialization);
            v = parent[static_cast<std::size_t>(v)];
        }
        return p;
    };
    // Transported map of the neighbour reached along an arc.
    auto carry = [&](const std::map<int, int>& t, const Arc& arc) {
        const auto& gl = c.gluings[static_cast<std::size_t>(arc.gluing)];
        std::map<int, int> out;
        for (std::size_t i = 0; i < gl.a.rays.size(); ++i) {
            int ra = gl.a.rays[i], rb = gl.ray_map[i];
            if (arc.forward) out[rb] = t.at(ra);
            else out[ra] = t.at(rb);
        }
        return out;
    };
    std::set<int> flagged;
    for (std::size_t root = 0; root < nodes.size(); ++root) {
        if (cls[root] >= 0) continue;
        int k = static_cast<int>(c.class_representative.size());
        c.class_representative.push_back(nodes[root]);
        cls[root] = k;
        for (int r : nodes[root].rays) transport[root][r] = r;
        std::deque<int> queue{static_cast<int>(root)};
        std::set<int> tree_gluings;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (const auto& arc : adj[static_cast<std::size_t>(v)]) {
                auto t = carry(transport[static_cast<std::size_t>(v)], arc);
                std::size_t w = static_cast<std::size_t>(arc.to);
                if (cls[w] < 0) {
                    cls[w] = k;
                    transport[w] = std::move(t);
                    parent[w] = v;
                    parent_gluing[w] = arc.gluing;
                    tree_gluings.insert(arc.gluing);
                    queue.push_back(arc.to);
                } else if (t != transport[w] && !flagged.count(k)) {
                    flagged.insert(k);
                    c.monodromy_free = false;
                    MonodromyWitness wit;
                    wit.face = nodes[root];
                    for (const auto& [r, rep] : t) {
                        int other = transport[w].at(r);
                        if (other != rep) wit.permutation.push_back({other, rep});
                    }
                    std::sort(wit.permutation.begin(), wit.permutation.end());
                    auto pv = path_to_root(v);
                    auto pw = path_to_root(arc.to);
                    std::reverse(pv.begin(), pv.end());
                    wit.path = pv;
                    wit.path.push_back(c.gluings[static_cast<std::size_t>(arc.gluing)].specialization);
                    wit.path.insert(wit.path.end(), pw.begin(), pw.end());
                    c.witnesses.push_back(std::move(wit));
                }
            }
        }
    }
    for (std::size_t i = 0; i < nodes.size(); ++i) c.face_class[nodes[i]] = cls[i];
    return c;
}

bool is_monodromy_free(const ConeComplex& c) { return c.monodromy_free; }

namespace {

void check_map_shape(const SkeletonMap& f, const LogSpaceSkeleton& src, const LogSpaceSkeleton& dst) {
    if (f.point.size() != src.points.size() || f.hom.size() != src.points.size())
        throw ValidationError("map must assign every source point");
    for (std::size_t x = 0; x < src.points.size(); ++x) {
        int y = f.point[x];
        if (y < 0 || static_cast<std::size_t>(y) >= dst.points.size())
            throw ValidationError("map sends '" + src.points[x].name + "' to an unknown point");
        MonoidHom h{dst.points[static_cast<std::size_t>(y)].stalk, src.points[x].stalk,
                    shaped(f.hom[x], src.points[x].stalk.ambient(), amb(dst, y))};
        if (auto e = check_hom(h); !e.empty())
            throw ValidationError("map at '" + src.points[x].name + "': " + e);
        if (!hom_is_local(h)) throw ValidationError("map at '" + src.points[x].name + "' is not local");
    }
}

}  // namespace

ComplexMap trop_functor(const SkeletonMap& f, const LogSpaceSkeleton& src, const LogSpaceSkeleton& dst) {
    check_map_shape(f, src, dst);
    for (const auto& sp : src.specializations) {
        std::size_t x = static_cast<std::size_t>(sp.from), xp = static_cast<std::size_t>(sp.to);
        auto psi = generization(dst, f.point[x], f.point[xp]);
        if (!psi)
            throw ValidationError("map does not respect the specialization " + src.points[x].name + " -> " +
                                  src.points[xp].name);
        std::size_t ay = amb(dst, f.point[x]);
        Mat lhs = mul(shaped(sp.hom, amb(src, sp.to), amb(src, sp.from)), shaped(f.hom[x], amb(src, sp.from), ay), ay);
        Mat rhs = mul(shaped(f.hom[xp], amb(src, sp.to), amb(dst, f.point[xp])), *psi, ay);
        if (!same_matrix(lhs, rhs, amb(src, sp.to), ay))
            throw ValidationError("map does not commute with the generization " + src.points[x].name + " -> " +
                                  src.points[xp].name);
    }
    ComplexMap out;
    out.point = f.point;
    for (std::size_t x = 0; x < src.points.size(); ++x)
        out.linear.push_back(transpose(shaped(f.hom[x], amb(src, static_cast<int>(x)), amb(dst, f.point[x])),
                                       amb(src, static_cast<int>(x))));
    return out;
}

SkeletonMap compose(const SkeletonMap& g, const SkeletonMap& f) {
    SkeletonMap out;
    for (std::size_t x = 0; x < f.point.size(); ++x) {
        std::size_t y = static_cast<std::size_t>(f.point[x]);
        out.point.push_back(g.point[y]);
        out.hom.push_back(mul(f.hom[x], g.hom[y], cols(g.hom[y], 0)));
    }
    return out;
}

SkeletonMap identity_map(const LogSpaceSkeleton& s) {
    SkeletonMap out;
    for (std::size_t x = 0; x < s.points.size(); ++x) {
        out.point.push_back(static_cast<int>(x));
        out.hom.push_back(identity(s.points[x].stalk.ambient()));
    }
    return out;
}

int face_class_of(const ConeComplex& c, const LogSpaceSkeleton& s, int point, const Vec& v) {
    const auto& P = s.points[static_cast<std::size_t>(point)].stalk;
    Mat zero_face;
    for (const auto& gen : P.hilbert()) {
        Int d = dot(v, gen);
        if (d < 0) throw ValidationError("vector " + to_string(v) + " is not in the cone of '" +
                                         s.points[static_cast<std::size_t>(point)].name + "'");
        if (d.is_zero()) zero_face.push_back(gen);
    }
    FaceNode node{point, {}};
    const Mat& rays = c.rays[static_cast<std::size_t>(point)];
    for (std::size_t r = 0; r < rays.size(); ++r)
        if (std::all_of(zero_face.begin(), zero_face.end(), [&](const Vec& g) { return dot(rays[r], g).is_zero(); }))
            node.rays.push_back(static_cast<int>(r));
    auto it = c.face_class.find(node);
    if (it == c.face_class.end()) throw InvariantError("face of " + to_string(v) + " not found");
    return it->second;
}

PlacedCurve trop_of_stable_map(const GhostCurve& g, const MapType& t, const TropicalData& d, const LogSpaceSkeleton& target,
                               const ConeComplex& complex, const SkeletonMap& assignment) {
    std::size_t np = g.num_points();
    if (assignment.point.size() != np || assignment.hom.size() != np)
        throw ValidationError("assignment must cover every point of the curve");
    if (!t.determined()) throw ValidationError("type must be complete");
    auto stalk_of = [&](std::size_t i) -> const ToricMonoid& { return g.stalk(g.point(i)); };
    std::vector<Mat> fl(np);
    for (std::size_t i = 0; i < np; ++i) {
        int y = assignment.point[i];
        if (y < 0 || static_cast<std::size_t>(y) >= target.points.size())
            throw ValidationError("point '" + g.point_name(g.point(i)) + "' is sent to an unknown target point");
        fl[i] = shaped(assignment.hom[i], stalk_of(i).ambient(), amb(target, y));
        MonoidHom h{target.points[static_cast<std::size_t>(y)].stalk, stalk_of(i), fl[i]};
        if (auto e = check_hom(h); !e.empty())
            throw ValidationError("map at '" + g.point_name(g.point(i)) + "': " + e);
    }
    // Commuting squares over each generization of the curve.
    auto check_square = [&](std::size_t special, std::size_t generic, const Mat& chi) {
        int ys = assignment.point[special], yg = assignment.point[generic];
        auto psi = generization(target, ys, yg);
        std::string what = g.point_name(g.point(special)) + " -> " + g.point_name(g.point(generic));
        if (!psi) throw ValidationError("map does not respect the specialization " + what);
        std::size_t ra = stalk_of(generic).ambient(), ca = amb(target, ys);
        Mat lhs = mul(shaped(chi, ra, stalk_of(special).ambient()), fl[special], ca);
        Mat rhs = mul(fl[generic], *psi, ca);
        if (!same_matrix(lhs, rhs, ra, ca)) throw ValidationError("map does not commute with the generization " + what);
    };
    std::size_t nv = g.vertices.size(), ne = g.edges.size();
    for (std::size_t q = 0; q < ne; ++q) {
        const auto& e = g.edges[q];
        check_square(nv + q, static_cast<std::size_t>(e.v1), e.chi1);
        check_square(nv + q, static_cast<std::size_t>(e.v2), e.chi2);
    }
    for (std::size_t p = 0; p < g.legs.size(); ++p)
        check_square(nv + ne + p, static_cast<std::size_t>(g.legs[p].vertex), g.legs[p].chi);

    auto push = [&](std::size_t i, const Vec& u) { return vec_mul(u, fl[i], amb(target, assignment.point[i])); };
    auto restrict = [&](std::size_t v, const Mat& chi, std::size_t amb_small) {
        return vec_mul(d.V[v], chi, amb_small);
    };
    PlacedCurve out;
    for (std::size_t v = 0; v < nv; ++v) {
        PlacedPoint pp;
        pp.point = assignment.point[v];
        pp.vector = push(v, d.V[v]);
        pp.face_class = face_class_of(complex, target, pp.point, pp.vector);
        out.vertices.push_back(std::move(pp));
    }
    for (std::size_t q = 0; q < ne; ++q) {
        const auto& e = g.edges[q];
        std::size_t i = nv + q;
        PlacedCurve::Segment seg;
        seg.point = assignment.point[i];
        seg.from = push(i, restrict(static_cast<std::size_t>(e.v1), e.chi1, e.stalk.ambient()));
        seg.to = push(i, restrict(static_cast<std::size_t>(e.v2), e.chi2, e.stalk.ambient()));
        seg.face_class = face_class_of(complex, target, seg.point, add(seg.from, seg.to));
        out.edges.push_back(std::move(seg));
    }
    for (std::size_t p = 0; p < g.legs.size(); ++p) {
        const auto& l = g.legs[p];
        std::size_t i = nv + ne + p;
        PlacedCurve::Ray ray;
        ray.point = assignment.point[i];
        ray.base = push(i, restrict(static_cast<std::size_t>(l.vertex), l.chi, l.stalk.ambient()));
        ray.direction = push(i, t.u_p[p]);
        ray.face_class = face_class_of(complex, target, ray.point, add(ray.base, ray.direction));
        out.legs.push_back(std::move(ray));
    }
    return out;
}

}  // namespace loggw
