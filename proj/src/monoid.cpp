#include "loggw/monoid.hpp"

#include "loggw/errors.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace loggw {

namespace {

void sort_unique(Mat& m) {
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
}

struct VecHash {
    std::size_t operator()(const Vec& v) const {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        for (const auto& x : v) h ^= x.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }
};

Int degree(const Mat& facets, const Vec& v) {
    Int s = 0;
    for (const auto& f : facets) s += dot(f, v);
    return s;
}

}  // namespace

ToricMonoid ToricMonoid::orthant(std::size_t n) { return from_generators(identity(n), n); }

ToricMonoid ToricMonoid::from_generators(const Mat& gens_in, std::size_t n) {
    ToricMonoid p;
    p.ambient_ = n;
    Mat gens;
    for (const auto& g : gens_in) {
        if (g.size() != n) throw ValidationError("generator of length " + std::to_string(g.size()) +
                                                 " in ambient rank " + std::to_string(n));
        if (!is_zero(g)) gens.push_back(g);
    }
    sort_unique(gens);
    p.hrep_ = cone_hrep(gens, n);
    HNFResult gh = hermite_normal_form(gens, n);
    p.group_.assign(gh.H.begin(), gh.H.begin() + gh.rank);
    p.group_pivots_ = gh.pivots;
    for (const auto& g : gens) {
        bool in_face = true;
        for (const auto& f : p.hrep_.facets)
            if (!dot(f, g).is_zero()) {
                in_face = false;
                break;
            }
        (in_face ? p.face_gens_ : p.outer_gens_).push_back(g);
    }
    if (!p.face_gens_.empty()) {
        HNFResult uh = hermite_normal_form(p.face_gens_, n);
        p.unit_group_.assign(uh.H.begin(), uh.H.begin() + uh.rank);
        p.unit_pivots_ = uh.pivots;
    }
    // Drop outer generators that are sums of others (degree strictly drops).
    std::vector<std::pair<Int, Vec>> by_deg;
    for (const auto& g : p.outer_gens_) by_deg.emplace_back(degree(p.hrep_.facets, g), g);
    std::sort(by_deg.begin(), by_deg.end());
    Mat kept;
    {
        ToricMonoid partial = p;
        partial.outer_gens_.clear();
        for (const auto& [d, g] : by_deg) {
            if (!partial.contains(g)) partial.outer_gens_.push_back(g);
        }
        kept = partial.outer_gens_;
    }
    p.outer_gens_ = kept;
    sort_unique(p.outer_gens_);
    p.gens_ = p.outer_gens_;
    p.gens_.insert(p.gens_.end(), p.face_gens_.begin(), p.face_gens_.end());
    sort_unique(p.gens_);

    HilbertBasis hb = p.group_.empty() ? HilbertBasis{} : hilbert_basis_in_lattice(p.gens_, p.group_, n);
    p.hilbert_ = hb.elements;
    p.units_ = hb.units;
    p.saturated_ = true;
    for (const auto& h : p.hilbert_)
        if (!p.contains(h)) {
            p.saturated_ = false;
            break;
        }
    if (p.saturated_)
        for (const auto& u : p.units_)
            if (!p.contains(u) || !p.contains(neg(u))) {
                p.saturated_ = false;
                break;
            }
    return p;
}

bool ToricMonoid::in_group(const Vec& v) const {
    if (v.size() != ambient_) return false;
    Vec r = reduce_mod_hnf(group_, group_pivots_, v);
    return is_zero(r);
}

bool ToricMonoid::contains(const Vec& v) const {
    if (v.size() != ambient_) return false;
    if (!in_cone(v) || !in_group(v)) return false;
    auto reduce = [&](const Vec& x) {
        return unit_group_.empty() ? x : reduce_mod_hnf(unit_group_, unit_pivots_, x);
    };
    std::unordered_set<Vec, VecHash> failed;
    // Depth-first search; every outer generator has positive degree.
    std::vector<Vec> stack{reduce(v)};
    std::unordered_set<Vec, VecHash> seen{stack.back()};
    while (!stack.empty()) {
        Vec x = stack.back();
        stack.pop_back();
        if (is_zero(x)) return true;
        bool face_only = true;
        for (const auto& f : hrep_.facets)
            if (!dot(f, x).is_zero()) {
                face_only = false;
                break;
            }
        if (face_only) {
            // x lies on the minimal face: reachable iff it is in the unit group.
            if (!unit_group_.empty() && is_zero(reduce_mod_hnf(unit_group_, unit_pivots_, x))) return true;
            continue;
        }
        for (const auto& g : outer_gens_) {
            Vec y = sub(x, g);
            if (!cone_contains(hrep_, y)) continue;
            y = reduce(y);
            if (seen.insert(y).second) stack.push_back(y);
        }
    }
    return false;
}

Mat ToricMonoid::saturation_generators() const {
    Mat out = hilbert_;
    for (const auto& u : units_) {
        out.push_back(u);
        out.push_back(neg(u));
    }
    sort_unique(out);
    return out;
}

std::string check_hom(const MonoidHom& h) {
    if (h.map.size() != h.target.ambient() || cols(h.map, h.source.ambient()) != h.source.ambient())
        return "map has shape " + std::to_string(h.map.size()) + "x" + std::to_string(cols(h.map)) +
               ", expected " + std::to_string(h.target.ambient()) + "x" + std::to_string(h.source.ambient());
    for (const auto& g : h.source.generators()) {
        Vec y = h.apply(g);
        if (!h.target.contains(y)) return "generator " + to_string(g) + " maps to " + to_string(y) +
                                           " outside the target monoid";
    }
    return {};
}

MonoidHom compose(const MonoidHom& g, const MonoidHom& f) {
    return MonoidHom{f.source, g.target, mul(g.map, f.map, f.source.ambient())};
}

Subgroup Subgroup::spanned_by(const Mat& rows, std::size_t n) {
    Subgroup s;
    s.ambient = n;
    s.basis = lattice_basis(rows, n);
    return s;
}

ToricMonoid saturate(const ToricMonoid& p) {
    if (p.is_saturated()) return p;
    return ToricMonoid::from_generators(p.saturation_generators(), p.ambient());
}

HilbertBasis hilbert_basis_of(const ToricMonoid& p) { return HilbertBasis{p.hilbert(), p.units()}; }

ToricMonoid dual(const ToricMonoid& p) {
    std::size_t n = p.ambient();
    HilbertBasis hb = hilbert_basis_of_system(identity(n), p.generators(), {}, n);
    Mat gens = hb.elements;
    for (const auto& u : hb.units) {
        gens.push_back(u);
        gens.push_back(neg(u));
    }
    return ToricMonoid::from_generators(gens, n);
}

Mat quotient_map(const Mat& L_in, std::size_t n, const std::vector<int>& priority) {
    Mat L = L_in.empty() ? Mat() : lattice_basis(L_in, n);
    if (L.empty()) return identity(n);
    std::vector<int> order = priority;
    {
        std::vector<char> used(n, 0);
        for (int c : order) used[c] = 1;
        for (std::size_t c = 0; c < n; ++c)
            if (!used[c]) order.push_back(static_cast<int>(c));
    }
    HNFResult h = hermite_normal_form(select_cols(L, order), n);
    bool unit_pivots = true;
    for (int i = 0; i < h.rank; ++i)
        if (!h.H[i][h.pivots[i]].is_one()) unit_pivots = false;
    if (unit_pivots) {
        std::vector<char> is_pivot(n, 0);
        for (int i = 0; i < h.rank; ++i) is_pivot[order[h.pivots[i]]] = 1;
        std::vector<int> free_cols;
        for (std::size_t c = 0; c < n; ++c)
            if (!is_pivot[c]) free_cols.push_back(static_cast<int>(c));
        std::size_t k = free_cols.size();
        Mat pi = zero_mat(k, n);
        for (std::size_t j = 0; j < k; ++j) pi[j][free_cols[j]] = 1;
        for (int i = 0; i < h.rank; ++i) {
            int pc = order[h.pivots[i]];
            for (std::size_t j = 0; j < k; ++j) {
                // position of free column j in the permuted order
                int pos = static_cast<int>(std::find(order.begin(), order.end(), free_cols[j]) - order.begin());
                pi[j][pc] = -h.H[i][pos];
            }
        }
        return pi;
    }
    Mat ann = integer_kernel(L, n);
    std::vector<int> rev(n);
    for (std::size_t c = 0; c < n; ++c) rev[c] = static_cast<int>(n - 1 - c);
    HNFResult ah = hermite_normal_form(select_cols(ann, rev), n);
    Mat pi;
    for (int i = ah.rank - 1; i >= 0; --i) pi.push_back(select_cols({ah.H[i]}, rev)[0]);
    return pi;
}

QuotientResult quotient_by_subgroup_saturated(const ToricMonoid& p, const Mat& R, const std::vector<int>& priority) {
    std::size_t n = p.ambient();
    QuotientResult q;
    Mat rows;
    for (const auto& r : R) {
        if (r.size() != n) throw ValidationError("relation vector has wrong length");
        if (!is_zero(r)) rows.push_back(r);
    }
    if (!rows.empty()) {
        q.relations_unsaturated = lattice_basis(rows, n);
        q.relations = saturate_lattice(rows, n);
        // R^sat / R torsion: express R in a basis of R^sat.
        Mat coords;
        for (const auto& r : q.relations_unsaturated) coords.push_back(*solve_in_lattice(q.relations, r));
        SNFResult s = smith_normal_form(coords, q.relations.size());
        for (const auto& d : s.diag)
            if (!d.is_one()) q.torsion.push_back(d);
    }
    q.projection = quotient_map(q.relations, n, priority);
    std::size_t k = q.projection.size();
    for (const auto& g : p.generators()) q.image_generators.push_back(mul(q.projection, g));
    ToricMonoid image = ToricMonoid::from_generators(q.image_generators, k);
    q.image_saturated = image.is_saturated();
    q.quotient = saturate(image);
    for (const auto& h : q.quotient.hilbert())
        if (!image.contains(h)) q.saturation_added.push_back(h);
    return q;
}

bool hom_is_local(const MonoidHom& h) {
    const Mat& tf = h.target.facets();
    for (const auto& x : h.source.hilbert()) {
        Vec y = h.apply(x);
        bool unit = true;
        for (const auto& f : tf)
            if (!dot(f, y).is_zero()) {
                unit = false;
                break;
            }
        if (unit) return false;
    }
    return true;
}

NodeMonoid node_monoid(const ToricMonoid& q, const Vec& rho) {
    std::size_t n = q.ambient();
    if (rho.size() != n) throw ValidationError("rho has wrong length");
    if (is_zero(rho)) throw ValidationError("rho = 0: the data is not pre-stable");
    if (!q.contains(rho)) throw ValidationError("rho " + to_string(rho) + " is not in the monoid");
    Mat lattice;
    for (const auto& g : q.group()) lattice.push_back(concat(g, g));
    lattice.push_back(concat(rho, zero_vec(n)));
    Mat ineqs;
    for (const auto& f : q.facets()) {
        ineqs.push_back(concat(f, zero_vec(n)));
        ineqs.push_back(concat(zero_vec(n), f));
    }
    HilbertBasis hb = hilbert_basis_of_system(lattice, ineqs, {}, 2 * n);
    Mat gens = hb.elements;
    for (const auto& u : hb.units) {
        gens.push_back(u);
        gens.push_back(neg(u));
    }
    NodeMonoid nm;
    nm.monoid = ToricMonoid::from_generators(gens, 2 * n);
    Mat p1 = zero_mat(n, 2 * n), p2 = zero_mat(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        p1[i][i] = 1;
        p2[i][n + i] = 1;
    }
    nm.chi1 = MonoidHom{nm.monoid, q, p1};
    nm.chi2 = MonoidHom{nm.monoid, q, p2};
    return nm;
}

std::vector<Face> faces(const ToricMonoid& p) {
    const Mat& H = p.hilbert();
    const Mat& F = p.facets();
    std::size_t n = p.ambient();
    // Face = set of Hilbert elements on which a set of facets vanishes.
    std::vector<std::vector<char>> inc(F.size(), std::vector<char>(H.size(), 0));
    for (std::size_t f = 0; f < F.size(); ++f)
        for (std::size_t i = 0; i < H.size(); ++i) inc[f][i] = dot(F[f], H[i]).is_zero();
    std::set<std::vector<char>> found;
    std::vector<std::vector<char>> frontier{std::vector<char>(H.size(), 1)};
    found.insert(frontier[0]);
    while (!frontier.empty()) {
        std::vector<std::vector<char>> next;
        for (const auto& s : frontier)
            for (std::size_t f = 0; f < F.size(); ++f) {
                std::vector<char> t(H.size());
                for (std::size_t i = 0; i < H.size(); ++i) t[i] = s[i] && inc[f][i];
                if (found.insert(t).second) next.push_back(t);
            }
        frontier = std::move(next);
    }
    std::vector<Face> out;
    for (const auto& s : found) {
        Face fc;
        for (std::size_t i = 0; i < H.size(); ++i)
            if (s[i]) fc.generators.push_back(H[i]);
        Mat span = fc.generators;
        span.insert(span.end(), p.units().begin(), p.units().end());
        fc.dim = span.empty() ? 0 : rank(span, n);
        fc.functional = zero_vec(n);
        for (std::size_t f = 0; f < F.size(); ++f) {
            bool vanish = true;
            for (const auto& g : fc.generators)
                if (!dot(F[f], g).is_zero()) vanish = false;
            if (vanish) fc.functional = add(fc.functional, F[f]);
        }
        out.push_back(std::move(fc));
    }
    std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.generators < b.generators;
    });
    return out;
}

Face as_face(const ToricMonoid& p, const Mat& face_gens) {
    std::size_t n = p.ambient();
    for (const auto& g : face_gens)
        if (!p.in_saturation(g)) throw ValidationError("face generator " + to_string(g) + " is not in the monoid");
    Face fc;
    fc.functional = zero_vec(n);
    for (const auto& f : p.facets()) {
        bool vanish = true;
        for (const auto& g : face_gens)
            if (!dot(f, g).is_zero()) vanish = false;
        if (vanish) fc.functional = add(fc.functional, f);
    }
    for (const auto& h : p.hilbert())
        if (dot(fc.functional, h).is_zero()) fc.generators.push_back(h);
    // Every Hilbert element on the face must lie in the cone of the given generators.
    Mat span = face_gens;
    span.insert(span.end(), p.units().begin(), p.units().end());
    ConeHRep c = cone_hrep(span, n);
    for (const auto& h : fc.generators)
        if (!cone_contains(c, h)) throw ValidationError("the given generators do not span a face");
    Mat all = fc.generators;
    all.insert(all.end(), p.units().begin(), p.units().end());
    fc.dim = all.empty() ? 0 : rank(all, n);
    return fc;
}

MonoidHom localize_and_sharpen(const ToricMonoid& p, const Mat& face_gens) {
    Face fc = as_face(p, face_gens);
    std::size_t n = p.ambient();
    Mat span = fc.generators;
    span.insert(span.end(), p.units().begin(), p.units().end());
    Mat pi = span.empty() ? identity(n) : quotient_map(saturate_lattice(span, n), n);
    Mat img;
    for (const auto& g : p.saturation_generators()) img.push_back(mul(pi, g));
    ToricMonoid target = ToricMonoid::from_generators(img, pi.size());
    return MonoidHom{p, target, pi};
}

bool is_face_quotient(const MonoidHom& h) {
    if (!check_hom(h).empty()) return false;
    const ToricMonoid& P = h.source;
    const ToricMonoid& T = h.target;
    std::size_t n = P.ambient();
    // Kernel face.
    Mat kernel_gens;
    for (const auto& x : P.hilbert())
        if (is_zero(h.apply(x))) kernel_gens.push_back(x);
    for (const auto& u : P.units())
        if (!is_zero(h.apply(u))) return false;  // units must die in a sharp quotient
    Mat span = kernel_gens;
    span.insert(span.end(), P.units().begin(), P.units().end());
    // Every element of P^gp killed by h lies in the span of the kernel face.
    Mat restricted;
    for (const auto& g : P.group()) restricted.push_back(mul(h.map, g));
    std::size_t killed = P.rank() - (restricted.empty() ? 0 : static_cast<std::size_t>(rank(restricted, T.ambient())));
    std::size_t face_dim = span.empty() ? 0 : static_cast<std::size_t>(rank(span, n));
    if (killed != face_dim) return false;
    // Image group and image cone coincide with the target.
    Mat img;
    for (const auto& g : P.saturation_generators()) img.push_back(h.apply(g));
    Mat ig = img.empty() ? Mat() : lattice_basis(img, T.ambient());
    if (ig != T.group()) return false;
    ConeHRep ic = cone_hrep(img, T.ambient());
    for (const auto& t : T.hilbert())
        if (!cone_contains(ic, t)) return false;
    return true;
}

}  // namespace loggw
