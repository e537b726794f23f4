#pragma once

#include "loggw/ghost.hpp"
#include "loggw/tropical.hpp"

#include <map>
#include <string>
#include <vector>

namespace loggw {

struct SkeletonPoint {
    std::string name;
    ToricMonoid stalk;
};

// `from` specializes to `to`; hom: stalk(from) -> stalk(to).
struct SkeletonSpecialization {
    int from = 0, to = 0;
    Mat hom;
};

struct LogSpaceSkeleton {
    std::vector<SkeletonPoint> points;
    std::vector<SkeletonSpecialization> specializations;
    int point_index(const std::string& name) const;
};

void validate_skeleton(const LogSpaceSkeleton& s);
// Composite generization hom from `from` to `to` along any chain; identity when
// equal; nullopt when `from` does not specialize to `to`.
std::optional<Mat> generization(const LogSpaceSkeleton& s, int from, int to);

// Face of σ_x = Hom(P_x, R>=0), given by indices into the rays of σ_x.
struct FaceNode {
    int point = 0;
    std::vector<int> rays;
    bool operator<(const FaceNode& o) const {
        if (point != o.point) return point < o.point;
        return rays < o.rays;
    }
    bool operator==(const FaceNode& o) const { return point == o.point && rays == o.rays; }
};

struct FaceGluing {
    FaceNode a, b;              // a = face of the generic cone, b = its image in the special cone
    std::vector<int> ray_map;   // ray a.rays[i] -> ray b.rays[i] (positional)
    int specialization = 0;
};

struct MonodromyWitness {
    FaceNode face;
    std::vector<std::pair<int, int>> permutation;  // ray -> ray, non-identity
    std::vector<int> path;                         // specializations along the offending cycle
};

struct ConeComplex {
    std::vector<Mat> rays;          // per point, primitive rays of σ_x (sorted)
    std::vector<ToricMonoid> duals; // σ_x ∩ lattice as a monoid
    std::vector<std::vector<FaceNode>> faces;  // per point
    std::vector<FaceGluing> gluings;
    std::map<FaceNode, int> face_class;
    std::vector<FaceNode> class_representative;
    bool monodromy_free = true;
    std::vector<MonodromyWitness> witnesses;
};

ConeComplex build_trop(const LogSpaceSkeleton& s);
bool is_monodromy_free(const ConeComplex& c);

// Per source point: the image point and f♭: stalk(image) -> stalk(point).
struct SkeletonMap {
    std::vector<int> point;
    std::vector<Mat> hom;
};
struct ComplexMap {
    std::vector<int> point;   // image point of each cone
    std::vector<Mat> linear;  // σ_x -> σ_{f(x)}: the transpose of f♭
};
ComplexMap trop_functor(const SkeletonMap& f, const LogSpaceSkeleton& src, const LogSpaceSkeleton& dst);
SkeletonMap compose(const SkeletonMap& g, const SkeletonMap& f);  // g ∘ f
SkeletonMap identity_map(const LogSpaceSkeleton& s);

struct PlacedPoint {
    int point = 0;  // target point
    Vec vector;     // in σ_point
    int face_class = -1;
};
struct PlacedCurve {
    std::vector<PlacedPoint> vertices;
    struct Segment {
        int point;
        Vec from, to;
        int face_class;
    };
    std::vector<Segment> edges;
    struct Ray {
        int point;
        Vec base, direction;
        int face_class;
    };
    std::vector<Ray> legs;
};
// Assignment indexed by curve points (vertices, then edges, then legs).
PlacedCurve trop_of_stable_map(const GhostCurve& g, const MapType& t, const TropicalData& d, const LogSpaceSkeleton& target,
                               const ConeComplex& complex, const SkeletonMap& assignment);
// Class of the face of σ_point containing v in its relative interior.
int face_class_of(const ConeComplex& c, const LogSpaceSkeleton& s, int point, const Vec& v);

}  // namespace loggw
