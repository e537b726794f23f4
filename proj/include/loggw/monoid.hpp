#pragma once

#include "loggw/cone.hpp"
#include "loggw/hilbert.hpp"
#include "loggw/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace loggw {

// Fine monoid embedded in Z^ambient, given by generators. Everything else is
// derived eagerly at construction.
class ToricMonoid {
public:
    ToricMonoid() = default;
    static ToricMonoid from_generators(const Mat& gens, std::size_t ambient);
    static ToricMonoid zero(std::size_t ambient) { return from_generators({}, ambient); }
    static ToricMonoid orthant(std::size_t n);

    std::size_t ambient() const { return ambient_; }
    const Mat& generators() const { return gens_; }   // minimal, sorted
    const Mat& hilbert() const { return hilbert_; }   // of the saturation, modulo units
    const Mat& units() const { return units_; }       // lattice basis of the units of the saturation
    const Mat& group() const { return group_; }       // HNF basis of p^gp
    const Mat& span_equations() const { return hrep_.equations; }
    const Mat& facets() const { return hrep_.facets; }
    const ConeHRep& cone() const { return hrep_; }
    std::size_t rank() const { return group_.size(); }
    bool is_saturated() const { return saturated_; }
    bool is_sharp() const { return hrep_.pointed(); }

    bool in_group(const Vec& v) const;
    bool in_cone(const Vec& v) const { return cone_contains(hrep_, v); }
    bool in_saturation(const Vec& v) const { return in_group(v) && in_cone(v); }
    bool contains(const Vec& v) const;
    // Generators of the saturation as a monoid: Hilbert elements plus +-units.
    Mat saturation_generators() const;

    friend bool operator==(const ToricMonoid& a, const ToricMonoid& b) {
        return a.ambient_ == b.ambient_ && a.gens_ == b.gens_;
    }

private:
    std::size_t ambient_ = 0;
    Mat gens_;
    Mat face_gens_;  // generators in the minimal face
    Mat outer_gens_; // the others
    Mat hilbert_;
    Mat units_;
    Mat group_;
    std::vector<int> group_pivots_;
    Mat unit_group_;  // HNF of the group generated by face_gens_
    std::vector<int> unit_pivots_;
    ConeHRep hrep_;
    bool saturated_ = true;
};

// y = map * x; rows = target ambient, columns = source ambient.
struct MonoidHom {
    ToricMonoid source;
    ToricMonoid target;
    Mat map;
    Vec apply(const Vec& x) const { return mul(map, x); }
};

// Empty string when well defined, otherwise a description of the failure.
std::string check_hom(const MonoidHom& h);
MonoidHom compose(const MonoidHom& g, const MonoidHom& f);  // g ∘ f

struct Subgroup {
    std::size_t ambient = 0;
    Mat basis;  // HNF rows
    static Subgroup spanned_by(const Mat& rows, std::size_t n);
    bool is_saturated() const { return lattice_is_saturated(basis, ambient); }
};

ToricMonoid saturate(const ToricMonoid& p);
ToricMonoid dual(const ToricMonoid& p);
HilbertBasis hilbert_basis_of(const ToricMonoid& p);

struct QuotientResult {
    Mat relations_unsaturated;  // HNF of R
    Mat relations;              // HNF of R^sat
    std::vector<Int> torsion;   // invariant factors > 1 of R^sat / R
    Mat projection;             // k x n, kernel R^sat, surjective
    Mat image_generators;       // projection of the generators of p
    bool image_saturated = true;
    Mat saturation_added;       // Hilbert elements of the quotient missing from the image
    ToricMonoid quotient;       // saturated image
};
// `priority` lists column indices to eliminate first; empty means natural order.
QuotientResult quotient_by_subgroup_saturated(const ToricMonoid& p, const Mat& R,
                                              const std::vector<int>& priority = {});
// Surjection Z^n -> Z^k with kernel the saturated lattice L, in canonical form.
Mat quotient_map(const Mat& L, std::size_t n, const std::vector<int>& priority = {});

bool hom_is_local(const MonoidHom& h);

struct NodeMonoid {
    ToricMonoid monoid;  // in Z^n x Z^n
    MonoidHom chi1, chi2;
};
NodeMonoid node_monoid(const ToricMonoid& q, const Vec& rho);

struct Face {
    Mat generators;  // Hilbert elements of p lying in the face, sorted
    int dim = 0;
    Vec functional;  // nonnegative on p, vanishing exactly on the face
};
std::vector<Face> faces(const ToricMonoid& p);
// Throws ValidationError when `face` is not a face of p.
Face as_face(const ToricMonoid& p, const Mat& face_gens);
MonoidHom localize_and_sharpen(const ToricMonoid& p, const Mat& face_gens);
// True when h is, up to an isomorphism of targets, the localize-and-sharpen
// quotient at h^{-1}(0).
bool is_face_quotient(const MonoidHom& h);

}  // namespace loggw
