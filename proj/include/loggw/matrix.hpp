#pragma once

#include "loggw/integer.hpp"

#include <optional>
#include <string>
#include <vector>

namespace loggw {

using Vec = std::vector<Int>;
using Mat = std::vector<Vec>;  // row-major
using RVec = std::vector<Rat>;
using RMat = std::vector<RVec>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
Mat zero_mat(std::size_t r, std::size_t c);
Mat identity(std::size_t n);
std::size_t cols(const Mat& m, std::size_t fallback = 0);

Mat transpose(const Mat& m, std::size_t ncols = 0);
Mat mul(const Mat& a, const Mat& b, std::size_t bcols = 0);
Vec mul(const Mat& a, const Vec& x);      // a * x
Vec vec_mul(const Vec& y, const Mat& a, std::size_t acols = 0);  // y * a
Int dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Int& c, const Vec& a);
Vec neg(const Vec& a);
bool is_zero(const Vec& v);
Int content(const Vec& v);   // gcd of entries, 0 for the zero vector
Vec primitive(const Vec& v);
Vec concat(const Vec& a, const Vec& b);
Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);
Mat select_rows(const Mat& m, const std::vector<int>& idx);
Mat select_cols(const Mat& m, const std::vector<int>& idx);

std::string to_string(const Vec& v);
std::string to_string(const Mat& m);

// Row-style Hermite normal form: U * m = H with U unimodular. The nonzero rows
// of H come first, their pivot columns strictly increase, pivots are positive,
// and entries above a pivot lie in [0, pivot).
struct HNFResult {
    Mat H;
    Mat U;
    std::vector<int> pivots;
    int rank = 0;
};
HNFResult hermite_normal_form(const Mat& m, std::size_t ncols = 0);

// L * m * R = D, D diagonal with d_1 | d_2 | ... and nonnegative entries.
struct SNFResult {
    Mat D;
    Mat L;
    Mat R;
    std::vector<Int> diag;  // the nonzero invariant factors
};
SNFResult smith_normal_form(const Mat& m, std::size_t ncols = 0);

int rank(const Mat& m, std::size_t ncols = 0);
Int determinant(const Mat& m);
// Integer inverse of a unimodular matrix.
Mat unimodular_inverse(const Mat& m);
// Adjugate, so that m * adj = det * I.
Mat adjugate(const Mat& m);

// Canonical basis (HNF rows) of the lattice spanned by the rows.
Mat lattice_basis(const Mat& rows, std::size_t n);
// Basis of {x in Z^n : m x = 0}, in Hermite form.
Mat integer_kernel(const Mat& m, std::size_t n);
// Basis of (span_Q rows) ∩ Z^n, in Hermite form.
Mat saturate_lattice(const Mat& rows, std::size_t n);
bool lattice_is_saturated(const Mat& rows, std::size_t n);
// Coefficients c with c * basis = v, if v lies in the row lattice.
std::optional<Vec> solve_in_lattice(const Mat& basis, const Vec& v);
bool in_lattice(const Mat& basis, const Vec& v);
// Reduce v modulo a lattice given by HNF rows (canonical coset representative).
Vec reduce_mod_hnf(const Mat& hnf, const std::vector<int>& pivots, Vec v);
// S with basis * S = I for a basis whose rows span a saturated lattice.
Mat right_inverse(const Mat& basis, std::size_t n);

// Rational linear algebra.
RVec to_rvec(const Vec& v);
RMat to_rmat(const Mat& m);
struct RationalSolution {
    RVec particular;
    RMat nullspace;  // rows
};
std::optional<RationalSolution> solve_rational(const RMat& a, const RVec& b, std::size_t ncols);
int rank_rational(const RMat& m, std::size_t ncols);
// Clears denominators, returning a primitive integer vector on the same ray.
Vec clear_denominators(const RVec& v);

}  // namespace loggw
