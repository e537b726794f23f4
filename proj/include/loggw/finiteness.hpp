#pragma once

#include "loggw/basic.hpp"
#include "loggw/hilbert.hpp"

#include <optional>
#include <string>
#include <vector>

namespace loggw {

enum class EnumerationMode { AlmostGenerated, QuasiGeneratedFixedContacts };

struct EnumerationConfig {
    EnumerationMode mode = EnumerationMode::AlmostGenerated;
    std::optional<Int> cycle_bound;  // default derived from the data
    std::size_t cap = 100000;
    Exec exec = Exec::Parallel;
};

// All (u_p) with pushed images in K = Γ^∨ summing to -Σ τ̃_η.
std::vector<std::vector<Vec>> enumerate_contact_assignments(const GhostCurve& g, const std::vector<TauEntry>& tau,
                                                            std::size_t cap = 100000);

struct TypeCandidate {
    MapType type;
    Mat certificate_V;  // integral point of the dual basic cone with all e_q >= 1
    Vec certificate_e;
};

struct EdgeTypeResult {
    std::vector<TypeCandidate> types;
    bool exact = true;          // no free directions in the balancing solution set
    std::size_t free_rank = 0;  // rank of the solution lattice modulo trivial functionals
    Int bound;                  // cycle bound actually used
    std::size_t scanned = 0;
};

EdgeTypeResult enumerate_edge_types(const GhostCurve& g, const std::vector<Vec>& u_p, const std::vector<TauEntry>& tau,
                                    const EnumerationConfig& cfg);

// Feasibility of a complete type: a point of the dual basic cone with e_q >= 1.
std::optional<std::pair<Mat, Vec>> dual_feasibility(const GhostCurve& g, const MapType& t);

struct EnumeratedType {
    TypeCandidate candidate;
    BasicResult basic;
};
struct TypesResult {
    std::vector<EnumeratedType> types;
    bool exact = true;
    std::vector<std::vector<Vec>> contacts;
    std::size_t scanned = 0;
    Int bound;
};
TypesResult enumerate_types(const GhostCurve& g, const std::vector<TauEntry>& tau,
                            const std::optional<std::vector<Vec>>& contacts, const EnumerationConfig& cfg);

Int default_cycle_bound(const std::vector<Vec>& u_p, const std::vector<TauEntry>& tau);

}  // namespace loggw
