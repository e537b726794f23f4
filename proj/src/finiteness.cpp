#include "loggw/finiteness.hpp"

#include "loggw/errors.hpp"
#include "loggw/lp.hpp"
#include "loggw/tropical.hpp"

#include <algorithm>

namespace loggw {

namespace {

Vec canonical_functional(const ToricMonoid& P, const Vec& u) {
    if (P.group().empty()) return zero_vec(P.ambient());
    HNFResult ah = hermite_normal_form(integer_kernel(P.group(), P.ambient()), P.ambient());
    Mat ann(ah.H.begin(), ah.H.begin() + ah.rank);
    return reduce_mod_hnf(ann, ah.pivots, u);
}

Int max_abs(const Vec& v) {
    Int m = 0;
    for (const auto& x : v) m = std::max(m, abs(x));
    return m;
}

}  // namespace

Int default_cycle_bound(const std::vector<Vec>& u_p, const std::vector<TauEntry>& tau) {
    Int mu = 0, mt = 0;
    for (const auto& u : u_p) mu = std::max(mu, max_abs(u));
    for (const auto& t : tau) mt = std::max(mt, max_abs(t.value));
    return Int(10) * (mu + mt);
}

std::vector<std::vector<Vec>> enumerate_contact_assignments(const GhostCurve& g, const std::vector<TauEntry>& tau,
                                                            std::size_t cap) {
    require_valid(g);
    MapType probe;
    probe.u_q.assign(g.edges.size(), std::nullopt);
    for (const auto& l : g.legs) probe.u_p.push_back(zero_vec(l.stalk.ambient()));
    probe.tau = tau;
    for (std::size_t e = 0; e < g.edges.size(); ++e) probe.u_q[e] = zero_vec(g.edges[e].stalk.ambient());
    require_valid(g, probe);

    GlobalSections s = global_sections(g);
    auto ag = check_almost_generated(g, s);
    if (!ag.ok) throw ValidationError("contact enumeration needs an almost generated curve; fails at " + ag.witness);
    SectionBasis sb = section_basis(g, s, SectionMode::Sections);
    std::size_t r = sb.rank;
    const Mat& gam = sb.cone_generators;
    if (r > 0) {
        ConeHRep kc = cone_hrep(gam, r);
        if (static_cast<std::size_t>(kc.dim) != r) throw ValidationError("the dual section cone is not strictly convex");
    }
    Vec target = zero_vec(r);
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        for (const auto& x : special_points(g, static_cast<int>(v))) {
            std::size_t pi = g.point_index({x.kind, x.index});
            target = sub(target, sb.push(pi, tau_at(probe, static_cast<int>(v), x, x.stalk->ambient())));
        }
    auto in_K = [&](const Vec& n) {
        for (const auto& h : gam)
            if (dot(h, n).sign() < 0) return false;
        return true;
    };
    if (!in_K(target)) throw ValidationError("the contact target " + to_string(target) + " lies outside the dual section cone");
    std::vector<std::vector<Vec>> out;
    std::size_t nl = g.legs.size();
    if (nl == 0) {
        if (is_zero(target)) out.push_back({});
        return out;
    }
    Polyhedron box;
    box.dim = r;
    for (const auto& h : gam) {
        box.add(to_rvec(h), Rat(0));
        box.add(to_rvec(neg(h)), -to_rat(dot(h, target)));
    }
    std::vector<Vec> pts = r == 0 ? std::vector<Vec>{Vec{}} : lattice_points(box, cap);
    // Liftable points per leg, with their lifts.
    std::vector<std::vector<std::pair<Vec, Vec>>> options(nl);
    for (std::size_t l = 0; l < nl; ++l) {
        const Leg& L = g.legs[l];
        std::size_t pi = g.point_index({PointKind::Leg, static_cast<int>(l)});
        for (const auto& n : pts) {
            std::optional<Vec> u;
            if (L.stalk.ambient() == 0) {
                if (is_zero(n)) u = Vec{};
            } else {
                u = solve_in_lattice(sb.restriction[pi], n);
            }
            if (!u) continue;
            Vec cu = canonical_functional(L.stalk, *u);
            bool nonneg = true;
            for (const auto& h : L.stalk.hilbert())
                if (dot(cu, h).sign() < 0) nonneg = false;
            if (nonneg) options[l].push_back({n, cu});
        }
    }
    std::vector<Vec> current(nl);
    std::vector<Vec> remaining(nl + 1);
    remaining[0] = target;
    std::vector<std::size_t> idx(nl, 0);
    std::size_t l = 0;
    while (true) {
        if (idx[l] >= options[l].size()) {
            if (l == 0) break;
            idx[l] = 0;
            --l;
            ++idx[l];
            continue;
        }
        const auto& [n, u] = options[l][idx[l]];
        Vec rest = sub(remaining[l], n);
        bool ok = l + 1 == nl ? is_zero(rest) : in_K(rest);
        if (!ok) {
            ++idx[l];
            continue;
        }
        current[l] = u;
        if (l + 1 == nl) {
            out.push_back(current);
            if (out.size() > cap) throw EnumerationCapError("more than " + std::to_string(cap) + " contact assignments");
            ++idx[l];
            continue;
        }
        remaining[l + 1] = rest;
        ++l;
        idx[l] = 0;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::pair<Mat, Vec>> dual_feasibility(const GhostCurve& g, const MapType& t) {
    BasicLayout l = basic_layout(g);
    std::size_t D = l.ambient;
    Polyhedron p;
    p.dim = D;
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        for (const auto& h : g.vertices[v].stalk.saturation_generators()) {
            RVec a(D, Rat(0));
            for (std::size_t i = 0; i < h.size(); ++i) a[l.vertex_offsets[v] + i] = to_rat(h[i]);
            p.add(a, Rat(0));
        }
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        RVec a(D, Rat(0));
        a[l.edge_offset + e] = 1;
        p.add(a, Rat(1));
    }
    RMat E;
    RVec f;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const Edge& Ed = g.edges[e];
        for (const auto& b : Ed.stalk.group()) {
            RVec a(D, Rat(0));
            Vec c2 = mul(Ed.chi2, b), c1 = mul(Ed.chi1, b);
            for (std::size_t i = 0; i < c2.size(); ++i) a[l.vertex_offsets[Ed.v2] + i] += to_rat(c2[i]);
            for (std::size_t i = 0; i < c1.size(); ++i) a[l.vertex_offsets[Ed.v1] + i] -= to_rat(c1[i]);
            a[l.edge_offset + e] -= to_rat(dot(*t.u_q[e], b));
            E.push_back(a);
            f.push_back(Rat(0));
        }
    }
    auto x = feasible_point(p, E, f);
    if (!x) return std::nullopt;
    Vec xi = clear_denominators(*x);
    // Positive rescaling keeps every constraint, and e_q stays >= 1.
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const Int& ev = xi[l.edge_offset + e];
        if (ev.sign() <= 0) throw InvariantError("feasible point lost positivity after scaling");
    }
    Mat V;
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        Vec blk(xi.begin() + l.vertex_offsets[v], xi.begin() + l.vertex_offsets[v] + g.vertices[v].stalk.ambient());
        V.push_back(blk);
    }
    Vec ev(xi.begin() + l.edge_offset, xi.end());
    return std::make_pair(V, ev);
}

EdgeTypeResult enumerate_edge_types(const GhostCurve& g, const std::vector<Vec>& u_p, const std::vector<TauEntry>& tau,
                                    const EnumerationConfig& cfg) {
    require_valid(g);
    MapType base;
    base.u_p = u_p;
    base.tau = tau;
    for (const auto& e : g.edges) base.u_q.push_back(zero_vec(e.stalk.ambient()));
    require_valid(g, base);

    std::vector<std::size_t> uoff;
    std::size_t nU = 0;
    for (const auto& e : g.edges) {
        uoff.push_back(nU);
        nU += e.stalk.ambient();
    }
    // Balancing at every vertex: C U + c = Rel^T λ.
    std::vector<ColimitGroup> nds;
    std::size_t nlam = 0;
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        nds.push_back(colimit_group(g, static_cast<int>(v)));
        nlam += nds.back().relations.size();
    }
    std::size_t nvars = nU + nlam;
    Mat A;
    Vec b;
    std::size_t lam = nU;
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        const ColimitGroup& nd = nds[v];
        Mat C = zero_mat(nd.total, nvars);
        Vec c = zero_vec(nd.total);
        for (std::size_t i = 0; i < nd.points.size(); ++i) {
            const auto& x = nd.points[i];
            std::size_t amb = x.stalk->ambient();
            Vec tv = tau_at(base, static_cast<int>(v), x, amb);
            for (std::size_t k = 0; k < amb; ++k) c[nd.offsets[i] + k] += tv[k];
            if (x.kind == PointKind::Leg) {
                for (std::size_t k = 0; k < amb; ++k) c[nd.offsets[i] + k] += u_p[x.index][k];
            } else {
                Int sg = x.side == 1 ? 1 : -1;
                for (std::size_t k = 0; k < amb; ++k) C[nd.offsets[i] + k][uoff[x.index] + k] += sg;
            }
        }
        for (std::size_t j = 0; j < nd.relations.size(); ++j, ++lam)
            for (std::size_t k = 0; k < nd.total; ++k) C[k][lam] = -nd.relations[j][k];
        for (std::size_t k = 0; k < nd.total; ++k) {
            A.push_back(C[k]);
            b.push_back(-c[k]);
        }
    }
    EdgeTypeResult res;
    res.bound = cfg.cycle_bound ? *cfg.cycle_bound : default_cycle_bound(u_p, tau);
    auto x0 = solve_integer(A, b, nvars);
    if (!x0) return res;  // balancing has no integral solution
    Mat ker = A.empty() ? identity(nvars) : integer_kernel(A, nvars);
    Vec u0(x0->begin(), x0->begin() + nU);
    Mat LU;
    for (const auto& k : ker) {
        Vec p(k.begin(), k.begin() + nU);
        if (!is_zero(p)) LU.push_back(p);
    }
    // Functionals vanishing on P_q^gp are invisible: quotient them out.
    Mat annU;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const ToricMonoid& P = g.edges[e].stalk;
        for (const auto& a : integer_kernel(P.group(), P.ambient())) {
            Vec z = zero_vec(nU);
            for (std::size_t k = 0; k < a.size(); ++k) z[uoff[e] + k] = a[k];
            annU.push_back(z);
        }
    }
    Mat piA = quotient_map(annU, nU);
    std::size_t kA = piA.size();
    Mat SA = kA == 0 ? Mat() : right_inverse(piA, nU);
    Vec y0 = mul(piA, u0);
    Mat Lq;
    for (const auto& l : LU) {
        Vec p = mul(piA, l);
        if (!is_zero(p)) Lq.push_back(p);
    }
    if (!Lq.empty()) Lq = lattice_basis(Lq, kA);
    res.free_rank = Lq.size();
    res.exact = Lq.empty();

    std::vector<Vec> coeffs;
    if (Lq.empty()) {
        coeffs.push_back({});
    } else {
        Int B = res.bound;
        mpz_class side = (B * Int(2) + Int(1)).to_mpz(), total = 1;
        for (std::size_t i = 0; i < Lq.size(); ++i) total *= side;
        if (total > mpz_class(static_cast<unsigned long>(cfg.cap)))
            throw EnumerationCapError("scan of " + total.get_str() + " edge-type candidates exceeds the cap of " +
                                      std::to_string(cfg.cap));
        Vec c(Lq.size(), -B);
        while (true) {
            coeffs.push_back(c);
            std::size_t i = 0;
            for (; i < c.size(); ++i) {
                c[i] += 1;
                if (c[i] <= B) break;
                c[i] = -B;
            }
            if (i == c.size()) break;
        }
    }
    res.scanned = coeffs.size();
    std::vector<std::optional<TypeCandidate>> found(coeffs.size());
    auto check = [&](std::size_t idx) {
        Vec y = y0;
        for (std::size_t i = 0; i < Lq.size(); ++i) y = add(y, scale(coeffs[idx][i], Lq[i]));
        Vec U = kA == 0 ? zero_vec(nU) : mul(SA, y);
        MapType t = base;
        for (std::size_t e = 0; e < g.edges.size(); ++e) {
            Vec u(U.begin() + uoff[e], U.begin() + uoff[e] + g.edges[e].stalk.ambient());
            t.u_q[e] = canonical_functional(g.edges[e].stalk, u);
        }
        auto cert = dual_feasibility(g, t);
        if (!cert) return;
        found[idx] = TypeCandidate{t, cert->first, cert->second};
    };
    if (cfg.exec == Exec::Parallel) {
        std::vector<std::string> errors(coeffs.size());
#pragma omp parallel for schedule(dynamic, 4)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(coeffs.size()); ++i) {
            try {
                check(static_cast<std::size_t>(i));
            } catch (const CapacityError& e) {
                errors[i] = std::string("C") + e.what();
            } catch (const std::exception& e) {
                errors[i] = std::string("I") + e.what();
            }
        }
        for (const auto& e : errors) {
            if (e.empty()) continue;
            if (e[0] == 'C') throw CapacityError(e.substr(1));
            throw InvariantError(e.substr(1));
        }
    } else {
        for (std::size_t i = 0; i < coeffs.size(); ++i) check(i);
    }
    for (auto& f : found)
        if (f) res.types.push_back(std::move(*f));
    auto key = [](const TypeCandidate& c) {
        Vec k;
        for (const auto& u : c.type.u_q) k.insert(k.end(), u->begin(), u->end());
        return k;
    };
    std::sort(res.types.begin(), res.types.end(), [&](const TypeCandidate& a, const TypeCandidate& b) { return key(a) < key(b); });
    for (const auto& t : res.types)
        for (std::size_t v = 0; v < g.vertices.size(); ++v)
            if (!check_component_balancing(g, t.type, nds[v]).ok)
                throw InvariantError("enumerated type fails balancing at " + g.vertices[v].name);
    return res;
}

TypesResult enumerate_types(const GhostCurve& g, const std::vector<TauEntry>& tau,
                            const std::optional<std::vector<Vec>>& contacts, const EnumerationConfig& cfg) {
    TypesResult out;
    if (contacts) {
        out.contacts.push_back(*contacts);
    } else {
        if (cfg.mode == EnumerationMode::QuasiGeneratedFixedContacts)
            throw ValidationError("quasi-generated mode needs the contact orders as input");
        out.contacts = enumerate_contact_assignments(g, tau, cfg.cap);
    }
    out.bound = 0;
    for (const auto& up : out.contacts) {
        EdgeTypeResult er = enumerate_edge_types(g, up, tau, cfg);
        out.exact = out.exact && er.exact;
        out.scanned += er.scanned;
        out.bound = er.bound;
        for (auto& c : er.types) {
            BasicResult br = compute_basic_monoid(g, c.type);
            if (!br.prestable) continue;
            out.types.push_back({std::move(c), std::move(br)});
        }
    }
    return out;
}

}  // namespace loggw
