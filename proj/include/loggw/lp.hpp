#pragma once

#include "loggw/matrix.hpp"

#include <optional>
#include <vector>

namespace loggw {

// Rows a·x >= c over Q^dim.
struct Polyhedron {
    std::size_t dim = 0;
    RMat A;
    RVec c;
    void add(const RVec& a, const Rat& b) {
        A.push_back(a);
        c.push_back(b);
    }
};

constexpr std::size_t kMaxFourierMotzkinRows = 50000;

// Fourier–Motzkin: a feasible point (midpoints of the back-substituted
// intervals), or nullopt when empty. Equalities E x = f are eliminated first.
std::optional<RVec> feasible_point(const Polyhedron& p, const RMat& E = {}, const RVec& f = {});

// All integer points of a bounded polyhedron, lexicographically sorted.
// Throws ValidationError when unbounded and EnumerationCapError beyond `cap`.
std::vector<Vec> lattice_points(const Polyhedron& p, std::size_t cap);

// Particular integer solution of A x = b, if any.
std::optional<Vec> solve_integer(const Mat& A, const Vec& b, std::size_t n);

}  // namespace loggw
