#pragma once

#include "loggw/matrix.hpp"

#include <vector>

namespace loggw {

enum class Exec { Serial, Parallel };

constexpr std::size_t kMaxHilbertRank = 10;
constexpr std::size_t kMaxHilbertCandidates = 2'000'000;

// Minimal generators of a saturated affine monoid. `units` is a lattice basis
// of the invertible part (empty when the cone is pointed); `elements` are the
// remaining generators, reduced modulo the units, sorted lexicographically.
struct HilbertBasis {
    Mat elements;
    Mat units;
};

// Hilbert basis of cone(gens) ∩ Z^n.
HilbertBasis hilbert_basis(const Mat& gens, std::size_t n, Exec exec = Exec::Parallel);

// Hilbert basis of {x in L : A x >= 0, E x = 0}, L the row lattice of `lattice`.
HilbertBasis hilbert_basis_of_system(const Mat& lattice, const Mat& ineqs, const Mat& eqs, std::size_t n,
                                     Exec exec = Exec::Parallel);

// Hilbert basis of cone(gens) ∩ L.
HilbertBasis hilbert_basis_in_lattice(const Mat& gens, const Mat& lattice, std::size_t n,
                                      Exec exec = Exec::Parallel);

// Kernels below operate on a pointed full-dimensional cone in Z^d given by its
// extreme rays and facet normals. They are exposed for tests and benchmarks.
std::vector<std::vector<int>> triangulate(const Mat& rays, const Mat& facets, std::size_t d);
Mat parallelepiped_points(const Mat& simplex_rays, std::size_t d);
Mat hilbert_candidates(const Mat& rays, const std::vector<std::vector<int>>& simplices, std::size_t d, Exec exec);
Mat reduce_candidates_serial(const Mat& cands, const Mat& facets);
Mat reduce_candidates_parallel(const Mat& cands, const Mat& facets);
Mat pointed_hilbert_basis(const Mat& rays, const Mat& facets, std::size_t d, Exec exec);

}  // namespace loggw
