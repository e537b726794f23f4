#pragma once

#include "loggw/basic.hpp"

#include <string>
#include <vector>

namespace loggw {

struct TropicalData {
    Mat V;  // per vertex, functional on P_η (ambient coordinates)
    Vec e;  // per edge, positive
};

TropicalData tropical_data_from_point(const GhostCurve& g, const BasicResult& r, const Vec& point);
// Edge part of the type: u_q = (χ2^T V2 - χ1^T V1) / e_q as a functional on P_q^gp.
std::vector<Vec> type_from_tropical_data(const GhostCurve& g, const TropicalData& d);
// True when the two functionals agree on P^gp.
bool same_functional(const ToricMonoid& P, const Vec& a, const Vec& b);

struct NodeSection {
    Int a, b, e;
};
Int torsor_degree(const std::vector<NodeSection>& nodes, const Vec& n_p);

struct BalanceReport {
    bool ok = true;
    Vec defect;  // canonical representative of the sum in N_D
};
BalanceReport check_component_balancing(const GhostCurve& g, const MapType& t, int vertex);
BalanceReport check_component_balancing(const GhostCurve& g, const MapType& t, const ColimitGroup& nd);

struct TVertex {
    std::string name;
    Vec position;
};
struct TEdge {
    std::string name;
    int v1 = 0, v2 = 0;
    Vec weight;  // outward from v1
    Int length;
    bool contracted = false;
};
struct TLeg {
    std::string name;
    int vertex = 0;
    Vec direction;
    bool correction = false;
};
struct TropicalCurve {
    std::size_t rank = 0;
    std::vector<TVertex> vertices;
    std::vector<TEdge> edges;
    std::vector<TLeg> legs;
};

TropicalCurve build_tropical_curve(const GhostCurve& g, const MapType& t, const TropicalData& d, SectionMode mode);

struct CurveBalance {
    std::vector<char> balanced;  // per vertex
    Mat defects;
    bool all() const;
};
CurveBalance check_tropical_balancing(const TropicalCurve& c);
// Edge geometry: h(v2) - h(v1) = length * weight on every edge.
bool check_edge_geometry(const TropicalCurve& c);
// Every vertex at height b against rho and every marked leg orthogonal to rho.
bool check_hyperplane(const TropicalCurve& c, const Vec& rho, const Int& b);

}  // namespace loggw
