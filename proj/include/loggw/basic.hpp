#pragma once

#include "loggw/ghost.hpp"

#include <string>
#include <vector>

namespace loggw {

// Ambient of ∏ P_η^gp × ∏_q Z: vertex blocks in order, then one coordinate per edge.
struct BasicLayout {
    std::vector<std::size_t> vertex_offsets;
    std::size_t edge_offset = 0;
    std::size_t ambient = 0;
};
BasicLayout basic_layout(const GhostCurve& g);

struct RelationVector {
    int edge;
    Vec m;      // Hilbert element of P_q
    Vec value;  // a_q(m)
};
std::vector<RelationVector> relation_vectors(const GhostCurve& g, const MapType& t);

struct BasicResult {
    BasicLayout layout;
    std::vector<RelationVector> relation_vectors;
    ToricMonoid source;        // ∏ P_η × N^edges
    QuotientResult quotient;   // projection, R, R^sat, image data
    Mat saturation_witness;    // elements of R^sat missing from R
    ToricMonoid Q;
    std::vector<Mat> phi;      // per vertex, rank(Q ambient) x amb_η
    Mat rho;                   // per edge
    Mat Q_relations;           // integer relations among the Hilbert basis of Q
    bool prestable = true;
    std::vector<std::string> prestable_witnesses;
};

BasicResult compute_basic_monoid(const GhostCurve& g, const MapType& t);

struct PrestableReport {
    bool ok = true;
    std::vector<std::string> witnesses;
};
PrestableReport check_prestable_ghost(const GhostCurve& g, const BasicResult& r);

// {((V_η),(e_q)) : V_η ∈ P_η^∨, e_q >= 0, V·a_q(m) = 0}, in the dual of the basic ambient.
ToricMonoid dual_basic_cone(const GhostCurve& g, const MapType& t);

struct Candidate {
    ToricMonoid Q;
    std::vector<Mat> phi;  // per vertex: amb(Q') x amb_η
    Mat rho;               // per edge: element of Q'
};

struct Factorization {
    bool ok = false;
    Mat map;  // amb(Q') x amb(Q)
    std::string failure;
};
Factorization factor_through_basic(const GhostCurve& g, const MapType& t, const BasicResult& r, const Candidate& c);
bool is_basic(const GhostCurve& g, const MapType& t, const BasicResult& r, const Candidate& c);
Candidate as_candidate(const BasicResult& r);

}  // namespace loggw
