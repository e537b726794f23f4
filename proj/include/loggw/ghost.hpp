#pragma once

#include "loggw/monoid.hpp"

#include <optional>
#include <string>
#include <vector>

namespace loggw {

struct Vertex {
    std::string name;
    ToricMonoid stalk;
    std::optional<int> genus;
};

// chi1, chi2: P_q -> P_{v1}, P_{v2} as matrices (rows = vertex ambient).
struct Edge {
    std::string name;
    int v1 = 0, v2 = 0;
    ToricMonoid stalk;
    Mat chi1, chi2;
    bool is_loop() const { return v1 == v2; }
};

struct Leg {
    std::string name;
    int vertex = 0;
    ToricMonoid stalk;
    Mat chi;
};

// A lattice M of global sections of the group sheaf, given by its restriction
// to every stalk (matrix rows = stalk ambient, columns = rank).
struct SectionLattice {
    std::size_t rank = 0;
    std::vector<Mat> vertices, edges, legs;
};

// Point addressing: vertices first, then edges, then legs.
enum class PointKind { Vertex, Edge, Leg };
struct PointRef {
    PointKind kind;
    int index;
};

struct GhostCurve {
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::vector<Leg> legs;
    std::optional<SectionLattice> section_lattice;

    std::size_t num_points() const { return vertices.size() + edges.size() + legs.size(); }
    PointRef point(std::size_t i) const;
    std::size_t point_index(PointRef r) const;
    const ToricMonoid& stalk(PointRef r) const;
    std::string point_name(PointRef r) const;
    int vertex_index(const std::string& name) const;
    int edge_index(const std::string& name) const;
    int leg_index(const std::string& name) const;
    std::size_t cycle_rank() const;  // first Betti number (graph is connected)
};

struct Issue {
    std::string where;
    std::string message;
};
std::vector<Issue> validate_ghost(const GhostCurve& g);
// Throws ValidationError naming the first issue.
void require_valid(const GhostCurve& g);

// A special point x of a vertex η: an edge side or a leg, with chi: P_x -> P_η.
struct SpecialPoint {
    PointKind kind;  // Edge or Leg
    int index;
    int side;        // 1 or 2 for edges, 0 for legs
    const Mat* chi;
    const ToricMonoid* stalk;
};
std::vector<SpecialPoint> special_points(const GhostCurve& g, int vertex);

struct TauEntry {
    int vertex = 0;
    PointKind kind = PointKind::Leg;
    int index = 0;
    int side = 0;  // for loops: which side of the edge
    Vec value;
};

struct MapType {
    std::vector<std::optional<Vec>> u_q;  // nullopt = undetermined
    std::vector<Vec> u_p;
    std::vector<TauEntry> tau;
    bool determined() const;
};
std::vector<Issue> validate_type(const GhostCurve& g, const MapType& t);
void require_valid(const GhostCurve& g, const MapType& t);
// Outward weight of a special point of a vertex: +u_q on side 1, -u_q on side 2, u_p on legs.
Vec flag_weight(const MapType& t, const SpecialPoint& x);
Vec tau_at(const MapType& t, int vertex, const SpecialPoint& x, std::size_t ambient);

// N_D = (⊕_x Z^{amb_x}) / (identifications + functionals vanishing on P_x^gp).
struct ColimitGroup {
    int vertex = 0;
    std::vector<SpecialPoint> points;
    std::vector<std::size_t> offsets;
    std::size_t total = 0;
    Mat relations;  // HNF
    std::vector<int> pivots;
    std::size_t rank = 0;
    std::vector<Int> torsion;

    Vec embed(std::size_t point, const Vec& a) const;
    Vec reduce(const Vec& z) const { return reduce_mod_hnf(relations, pivots, z); }
    bool is_zero_class(const Vec& z) const;
};
ColimitGroup colimit_group(const GhostCurve& g, int vertex);

// Sections of the ghost sheaf, embedded in ⊕_x Z^{amb_x} (point order as above).
struct GlobalSections {
    std::size_t ambient = 0;
    std::vector<std::size_t> offsets;
    ToricMonoid gamma;  // Γ
    Mat gamma_group;    // basis of Γ^gp
    Mat group_sections; // basis of sections of the group sheaf
    Mat restrict_to(const Mat& rows, std::size_t point, std::size_t amb) const;
};
GlobalSections global_sections(const GhostCurve& g);

struct GenerationCheck {
    bool ok = true;
    std::string witness;  // first failing point
};
GenerationCheck check_almost_generated(const GhostCurve& g, const GlobalSections& s);
GenerationCheck check_quasi_generated(const GhostCurve& g, const GlobalSections& s);

enum class SectionMode { Sections, GroupSections };
// Lattice M with per-point restriction matrices (amb_x x rank). Pushing a
// functional u on P_x gives E_x^T u in N = Hom(M, Z).
struct SectionBasis {
    std::size_t rank = 0;
    std::vector<Mat> restriction;  // indexed by point
    Vec push(std::size_t point, const Vec& u) const;
    Mat cone_generators;  // Γ expressed in M coordinates (sections mode)
};
SectionBasis section_basis(const GhostCurve& g, const GlobalSections& s, SectionMode mode);

// Generic-fibre data for every special point of a specialized curve.
struct SpecializationEntry {
    PointKind kind = PointKind::Edge;  // Edge or Leg of the generic curve; Vertex = node smoothed
    int index = 0;
    Mat hom;            // P_x -> P_{x'} (rows = generic ambient)
    bool reversed = false;  // edge orientation flips
};
struct Specialization {
    std::vector<SpecializationEntry> edges;
    std::vector<SpecializationEntry> legs;
};
MapType induced_type_under_generization(const MapType& generic, const Specialization& s);
Specialization compose(const Specialization& later, const Specialization& earlier);

}  // namespace loggw
