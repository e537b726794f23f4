#pragma once

#include "loggw/matrix.hpp"

namespace loggw {

// {x in Q^d : A x >= 0} as lineality basis plus extreme rays (taken modulo the
// lineality space). Rays are primitive integer vectors, sorted.
struct DDResult {
    Mat lineality;
    Mat rays;
};
DDResult double_description(const Mat& ineqs, std::size_t d);

// Cone generated by vectors in Z^n, in inequality form:
//   equations   E x = 0 cut out the rational span,
//   facets      F x >= 0 are the facet inequalities inside the span.
// Facet normals are primitive and sorted; equations are a Hermite basis.
struct ConeHRep {
    std::size_t ambient = 0;
    Mat span_basis;  // saturated basis of the span (Hermite form)
    Mat equations;
    Mat facets;
    Mat lineality;   // saturated basis of the lineality lattice
    Mat rays;        // extreme rays when pointed, rays modulo lineality otherwise
    int dim = 0;
    bool pointed() const { return lineality.empty(); }
};
ConeHRep cone_hrep(const Mat& gens, std::size_t n);

bool cone_contains(const ConeHRep& c, const Vec& x);
// Strictly positive on every facet inside the span (relative interior).
bool cone_interior(const ConeHRep& c, const Vec& x);

}  // namespace loggw
