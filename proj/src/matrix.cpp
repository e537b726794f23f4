#include "loggw/matrix.hpp"

#include "loggw/errors.hpp"

#include <algorithm>
#include <sstream>

namespace loggw {

Vec zero_vec(std::size_t n) { return Vec(n, Int(0)); }

Vec unit_vec(std::size_t n, std::size_t i) {
    Vec v(n, Int(0));
    v[i] = 1;
    return v;
}

Mat zero_mat(std::size_t r, std::size_t c) { return Mat(r, zero_vec(c)); }

Mat identity(std::size_t n) {
    Mat m = zero_mat(n, n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

std::size_t cols(const Mat& m, std::size_t fallback) { return m.empty() ? fallback : m[0].size(); }

Mat transpose(const Mat& m, std::size_t ncols) {
    std::size_t c = cols(m, ncols);
    Mat t = zero_mat(c, m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < c; ++j) t[j][i] = m[i][j];
    return t;
}

Mat mul(const Mat& a, const Mat& b, std::size_t bcols) {
    std::size_t c = cols(b, bcols);
    Mat r = zero_mat(a.size(), c);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < c; ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

Vec mul(const Mat& a, const Vec& x) {
    Vec r = zero_vec(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = dot(a[i], x);
    return r;
}

Vec vec_mul(const Vec& y, const Mat& a, std::size_t acols) {
    Vec r = zero_vec(cols(a, acols));
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (y[k].is_zero()) continue;
        for (std::size_t j = 0; j < r.size(); ++j) r[j] += y[k] * a[k][j];
    }
    return r;
}

Int dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw InvariantError("dot product of vectors with different lengths");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

Vec add(const Vec& a, const Vec& b) {
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec scale(const Int& c, const Vec& a) {
    Vec r = a;
    for (auto& x : r) x *= c;
    return r;
}

Vec neg(const Vec& a) {
    Vec r = a;
    for (auto& x : r) x = -x;
    return r;
}

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x.is_zero(); });
}

Int content(const Vec& v) {
    Int g = 0;
    for (const auto& x : v) {
        g = gcd(g, x);
        if (g.is_one()) break;
    }
    return g;
}

Vec primitive(const Vec& v) {
    Int g = content(v);
    if (g.is_zero() || g.is_one()) return v;
    Vec r = v;
    for (auto& x : r) x = x / g;
    return r;
}

Vec concat(const Vec& a, const Vec& b) {
    Vec r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

Mat hstack(const Mat& a, const Mat& b) {
    Mat r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i].insert(r[i].end(), b[i].begin(), b[i].end());
    return r;
}

Mat vstack(const Mat& a, const Mat& b) {
    Mat r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

Mat select_rows(const Mat& m, const std::vector<int>& idx) {
    Mat r;
    r.reserve(idx.size());
    for (int i : idx) r.push_back(m[i]);
    return r;
}

Mat select_cols(const Mat& m, const std::vector<int>& idx) {
    Mat r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (int j : idx) r[i].push_back(m[i][j]);
    return r;
}

std::string to_string(const Vec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

std::string to_string(const Mat& m) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << to_string(m[i]);
    os << "]";
    return os.str();
}

namespace {

// Rows i and j of both a and b are replaced by (s*Ri + t*Rj, u*Ri + v*Rj).
void row_combine(Mat& a, Mat& b, std::size_t i, std::size_t j, const Int& s, const Int& t, const Int& u,
                 const Int& v) {
    for (Mat* m : {&a, &b}) {
        Vec& ri = (*m)[i];
        Vec& rj = (*m)[j];
        for (std::size_t k = 0; k < ri.size(); ++k) {
            Int x = ri[k], y = rj[k];
            ri[k] = s * x + t * y;
            rj[k] = u * x + v * y;
        }
    }
}

void row_axpy(Mat& m, std::size_t dst, const Int& q, std::size_t src) {
    if (q.is_zero()) return;
    for (std::size_t k = 0; k < m[dst].size(); ++k) m[dst][k] -= q * m[src][k];
}

}  // namespace

HNFResult hermite_normal_form(const Mat& m, std::size_t ncols) {
    HNFResult res;
    res.H = m;
    std::size_t r = m.size(), n = cols(m, ncols);
    res.U = identity(r);
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < r; ++col) {
        for (std::size_t i = row + 1; i < r; ++i) {
            if (res.H[i][col].is_zero()) continue;
            Int a = res.H[row][col], b = res.H[i][col], s, t;
            Int g = ext_gcd(a, b, s, t);
            row_combine(res.H, res.U, row, i, s, t, -(b / g), a / g);
        }
        if (res.H[row][col].is_zero()) continue;
        if (res.H[row][col].sign() < 0) {
            for (auto& x : res.H[row]) x = -x;
            for (auto& x : res.U[row]) x = -x;
        }
        for (std::size_t i = 0; i < row; ++i) {
            Int q = floor_div(res.H[i][col], res.H[row][col]);
            row_axpy(res.H, i, q, row);
            row_axpy(res.U, i, q, row);
        }
        res.pivots.push_back(static_cast<int>(col));
        ++row;
    }
    res.rank = static_cast<int>(row);
    return res;
}

SNFResult smith_normal_form(const Mat& m, std::size_t ncols) {
    std::size_t r = m.size(), n = cols(m, ncols);
    SNFResult res;
    res.D = m;
    if (res.D.empty()) res.D = Mat();
    res.L = identity(r);
    res.R = identity(n);
    Mat& D = res.D;
    // Column operations are row operations on the transposes.
    auto col_combine = [&](std::size_t i, std::size_t j, const Int& s, const Int& t, const Int& u, const Int& v) {
        for (std::size_t k = 0; k < r; ++k) {
            Int x = D[k][i], y = D[k][j];
            D[k][i] = s * x + t * y;
            D[k][j] = u * x + v * y;
        }
        for (std::size_t k = 0; k < n; ++k) {
            Int x = res.R[k][i], y = res.R[k][j];
            res.R[k][i] = s * x + t * y;
            res.R[k][j] = u * x + v * y;
        }
    };
    std::size_t lim = std::min(r, n);
    for (std::size_t t = 0; t < lim; ++t) {
        // Bring some nonzero entry to (t,t).
        std::size_t pi = r, pj = n;
        for (std::size_t i = t; i < r && pi == r; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (!D[i][j].is_zero()) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == r) break;
        if (pi != t) {
            std::swap(D[pi], D[t]);
            std::swap(res.L[pi], res.L[t]);
        }
        if (pj != t) col_combine(t, pj, 0, 1, 1, 0);
        while (true) {
            for (std::size_t i = t + 1; i < r; ++i) {
                if (D[i][t].is_zero()) continue;
                Int a = D[t][t], b = D[i][t], s, u;
                Int g = ext_gcd(a, b, s, u);
                row_combine(D, res.L, t, i, s, u, -(b / g), a / g);
            }
            bool changed = false;
            for (std::size_t j = t + 1; j < n; ++j) {
                if (D[t][j].is_zero()) continue;
                Int a = D[t][t], b = D[t][j], s, u;
                Int g = ext_gcd(a, b, s, u);
                col_combine(t, j, s, u, -(b / g), a / g);
                changed = true;
            }
            if (changed) continue;
            bool fixed = false;
            for (std::size_t i = t + 1; i < r && !fixed; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (!divides(D[t][t], D[i][j])) {
                        for (std::size_t k = 0; k < n; ++k) D[t][k] += D[i][k];
                        for (std::size_t k = 0; k < r; ++k) res.L[t][k] += res.L[i][k];
                        fixed = true;
                        break;
                    }
            if (!fixed) break;
        }
        if (D[t][t].sign() < 0) {
            for (auto& x : D[t]) x = -x;
            for (auto& x : res.L[t]) x = -x;
        }
        res.diag.push_back(D[t][t]);
    }
    return res;
}

int rank(const Mat& m, std::size_t ncols) {
    return rank_rational(to_rmat(m), cols(m, ncols));
}

Int determinant(const Mat& m) {
    std::size_t n = m.size();
    if (n == 0) return 1;
    Mat a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t p = k + 1;
            while (p < n && a[p][k].is_zero()) ++p;
            if (p == n) return 0;
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

namespace {

std::optional<RMat> rational_inverse(const Mat& m) {
    std::size_t n = m.size();
    RMat a = to_rmat(m);
    RMat inv(n, RVec(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return std::nullopt;
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        Rat piv = a[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] /= piv;
            inv[c][j] /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

}  // namespace

Mat unimodular_inverse(const Mat& m) {
    auto inv = rational_inverse(m);
    if (!inv) throw InvariantError("matrix is singular");
    Mat r = zero_mat(m.size(), m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (!rat_is_integer((*inv)[i][j])) throw InvariantError("matrix is not unimodular");
            r[i][j] = rat_num((*inv)[i][j]);
        }
    return r;
}

Mat adjugate(const Mat& m) {
    Int det = determinant(m);
    if (det.is_zero()) throw InvariantError("adjugate of a singular matrix is not supported");
    auto inv = rational_inverse(m);
    Mat r = zero_mat(m.size(), m.size());
    Rat d = to_rat(det);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) r[i][j] = rat_num((*inv)[i][j] * d);
    return r;
}

Mat lattice_basis(const Mat& rows, std::size_t n) {
    HNFResult h = hermite_normal_form(rows, n);
    return Mat(h.H.begin(), h.H.begin() + h.rank);
}

Mat integer_kernel(const Mat& m, std::size_t n) {
    Mat t = transpose(m, n);  // n x r
    HNFResult h = hermite_normal_form(t, m.size());
    Mat k(h.U.begin() + h.rank, h.U.end());
    return lattice_basis(k, n);
}

Mat saturate_lattice(const Mat& rows, std::size_t n) {
    return integer_kernel(integer_kernel(rows, n), n);
}

bool lattice_is_saturated(const Mat& rows, std::size_t n) {
    return lattice_basis(rows, n) == saturate_lattice(rows, n);
}

std::optional<Vec> solve_in_lattice(const Mat& basis, const Vec& v) {
    std::size_t n = v.size();
    HNFResult h = hermite_normal_form(basis, n);
    Vec rest = v;
    Vec y = zero_vec(basis.size());
    for (int i = 0; i < h.rank; ++i) {
        int p = h.pivots[i];
        if (!divides(h.H[i][p], rest[p])) return std::nullopt;
        y[i] = rest[p] / h.H[i][p];
        for (std::size_t k = 0; k < n; ++k) rest[k] -= y[i] * h.H[i][k];
    }
    if (!is_zero(rest)) return std::nullopt;
    return vec_mul(y, h.U, basis.size());
}

bool in_lattice(const Mat& basis, const Vec& v) { return solve_in_lattice(basis, v).has_value(); }

Vec reduce_mod_hnf(const Mat& hnf, const std::vector<int>& pivots, Vec v) {
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        int p = pivots[i];
        Int q = floor_div(v[p], hnf[i][p]);
        if (q.is_zero()) continue;
        for (std::size_t k = 0; k < v.size(); ++k) v[k] -= q * hnf[i][k];
    }
    return v;
}

Mat right_inverse(const Mat& basis, std::size_t n) {
    std::size_t k = basis.size();
    Mat bt = transpose(basis, n);  // n x k
    HNFResult h = hermite_normal_form(bt, k);
    if (h.rank != static_cast<int>(k)) throw InvariantError("right inverse: rows are dependent");
    Mat top(h.H.begin(), h.H.begin() + k);
    Mat utop(h.U.begin(), h.U.begin() + k);
    Mat tinv = unimodular_inverse(top);
    return transpose(mul(tinv, utop, n), n);
}

RVec to_rvec(const Vec& v) {
    RVec r;
    r.reserve(v.size());
    for (const auto& x : v) r.push_back(to_rat(x));
    return r;
}

RMat to_rmat(const Mat& m) {
    RMat r;
    r.reserve(m.size());
    for (const auto& row : m) r.push_back(to_rvec(row));
    return r;
}

std::optional<RationalSolution> solve_rational(const RMat& a, const RVec& b, std::size_t ncols) {
    std::size_t r = a.size(), n = ncols;
    RMat m = a;
    RVec rhs = b;
    std::vector<int> pivcol;
    std::size_t row = 0;
    for (std::size_t c = 0; c < n && row < r; ++c) {
        std::size_t p = row;
        while (p < r && m[p][c] == 0) ++p;
        if (p == r) continue;
        std::swap(m[p], m[row]);
        std::swap(rhs[p], rhs[row]);
        Rat piv = m[row][c];
        for (std::size_t j = 0; j < n; ++j) m[row][j] /= piv;
        rhs[row] /= piv;
        for (std::size_t i = 0; i < r; ++i) {
            if (i == row || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (std::size_t j = 0; j < n; ++j) m[i][j] -= f * m[row][j];
            rhs[i] -= f * rhs[row];
        }
        pivcol.push_back(static_cast<int>(c));
        ++row;
    }
    for (std::size_t i = row; i < r; ++i)
        if (rhs[i] != 0) return std::nullopt;
    RationalSolution sol;
    sol.particular.assign(n, Rat(0));
    for (std::size_t i = 0; i < pivcol.size(); ++i) sol.particular[pivcol[i]] = rhs[i];
    std::vector<bool> is_piv(n, false);
    for (int c : pivcol) is_piv[c] = true;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_piv[f]) continue;
        RVec v(n, Rat(0));
        v[f] = 1;
        for (std::size_t i = 0; i < pivcol.size(); ++i) v[pivcol[i]] = -m[i][f];
        sol.nullspace.push_back(v);
    }
    return sol;
}

int rank_rational(const RMat& m, std::size_t ncols) {
    RMat a = m;
    std::size_t r = a.size(), row = 0;
    for (std::size_t c = 0; c < ncols && row < r; ++c) {
        std::size_t p = row;
        while (p < r && a[p][c] == 0) ++p;
        if (p == r) continue;
        std::swap(a[p], a[row]);
        for (std::size_t i = row + 1; i < r; ++i) {
            if (a[i][c] == 0) continue;
            Rat f = a[i][c] / a[row][c];
            for (std::size_t j = c; j < ncols; ++j) a[i][j] -= f * a[row][j];
        }
        ++row;
    }
    return static_cast<int>(row);
}

Vec clear_denominators(const RVec& v) {
    Int l = 1;
    for (const auto& x : v) l = lcm(l, rat_den(x));
    Vec r;
    r.reserve(v.size());
    for (const auto& x : v) r.push_back(rat_num(x * to_rat(l)));
    return primitive(r);
}

}  // namespace loggw
