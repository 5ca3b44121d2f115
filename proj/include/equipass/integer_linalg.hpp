#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace equipass {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;  // row-major
using RatVec = std::vector<Rat>;

inline IntMat int_identity(std::size_t n) {
    IntMat m(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline IntMat int_mul(const IntMat& a, const IntMat& b) {
    std::size_t rows = a.size(), inner = b.size(), cols = inner ? b[0].size() : 0;
    IntMat c(rows, IntVec(cols, 0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

inline IntVec int_mat_vec(const IntMat& a, const IntVec& x) {
    IntVec y(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
    return y;
}

/// Exact determinant by Bareiss fraction-free elimination.
inline Int int_determinant(IntMat a) {
    std::size_t n = a.size();
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

/// Row-style Hermite normal form: returns H (zero rows dropped) with
/// positive pivots, entries above each pivot reduced into [0, pivot).
/// The row space of H equals that of the input; the result is the
/// canonical basis of the generated lattice.
inline IntMat hermite_normal_form(IntMat a) {
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // Euclidean column sweep: make a[r][c] the gcd of the column below r.
        while (true) {
            std::size_t piv = rows;
            for (std::size_t i = r; i < rows; ++i)
                if (a[i][c] != 0 && (piv == rows || abs(a[i][c]) < abs(a[piv][c]))) piv = i;
            if (piv == rows) break;  // column is zero below r
            std::swap(a[r], a[piv]);
            bool cleared = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (a[i][c] == 0) continue;
                Int q = a[i][c] / a[r][c];
                for (std::size_t j = 0; j < cols; ++j) a[i][j] -= q * a[r][j];
                if (a[i][c] != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (a[r][c] == 0) continue;
        if (a[r][c] < 0)
            for (std::size_t j = 0; j < cols; ++j) a[r][j] = -a[r][j];
        for (std::size_t i = 0; i < r; ++i) {
            // floor division keeps entries above the pivot in [0, pivot)
            Int q = a[i][c] / a[r][c];
            if (a[i][c] - q * a[r][c] < 0) q -= 1;
            if (q != 0)
                for (std::size_t j = 0; j < cols; ++j) a[i][j] -= q * a[r][j];
        }
        ++r;
    }
    a.resize(r);
    return a;
}

/// True iff v lies in the lattice spanned by the rows of the HNF basis h.
inline bool hnf_lattice_contains(const IntMat& h, IntVec v) {
    std::size_t cols = v.size();
    std::size_t scanned = 0;
    for (const auto& row : h) {
        std::size_t p = 0;
        while (p < cols && row[p] == 0) ++p;
        if (p == cols) continue;
        for (; scanned < p; ++scanned)
            if (v[scanned] != 0) return false;
        if (v[p] != 0) {
            if (v[p] % row[p] != 0) return false;
            Int q = v[p] / row[p];
            for (std::size_t j = p; j < cols; ++j) v[j] -= q * row[j];
        }
    }
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

struct SmithResult {
    IntMat d;  // diagonal form, d[i][i] >= 0, d_i | d_{i+1}
    IntMat u;  // unimodular, u * a * v = d
    IntMat v;
    std::size_t rank = 0;
};

/// Smith normal form with transform matrices (U A V = D).
inline SmithResult smith_normal_form(IntMat a) {
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    SmithResult res;
    res.u = int_identity(rows);
    res.v = int_identity(cols);

    auto row_op = [&](std::size_t i, std::size_t k, const Int& q) {
        for (std::size_t j = 0; j < cols; ++j) a[i][j] -= q * a[k][j];
        for (std::size_t j = 0; j < rows; ++j) res.u[i][j] -= q * res.u[k][j];
    };
    auto col_op = [&](std::size_t j, std::size_t k, const Int& q) {
        for (std::size_t i = 0; i < rows; ++i) a[i][j] -= q * a[i][k];
        for (std::size_t i = 0; i < cols; ++i) res.v[i][j] -= q * res.v[i][k];
    };
    auto row_swap = [&](std::size_t i, std::size_t k) {
        std::swap(a[i], a[k]);
        std::swap(res.u[i], res.u[k]);
    };
    auto col_swap = [&](std::size_t j, std::size_t k) {
        for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][j], a[i][k]);
        for (std::size_t i = 0; i < cols; ++i) std::swap(res.v[i][j], res.v[i][k]);
    };

    std::size_t t = 0;
    while (t < rows && t < cols) {
        // find a nonzero pivot of minimal absolute value in the trailing block
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi == rows) break;
        row_swap(t, pi);
        col_swap(t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i)
                if (a[i][t] != 0) {
                    Int q = a[i][t] / a[t][t];
                    row_op(i, t, q);
                    if (a[i][t] != 0) {
                        row_swap(t, i);
                        clean = false;
                    }
                }
            for (std::size_t j = t + 1; j < cols; ++j)
                if (a[t][j] != 0) {
                    Int q = a[t][j] / a[t][t];
                    col_op(j, t, q);
                    if (a[t][j] != 0) {
                        col_swap(t, j);
                        clean = false;
                    }
                }
        }
        // enforce divisibility d_t | trailing entries
        bool divides = true;
        for (std::size_t i = t + 1; i < rows && divides; ++i)
            for (std::size_t j = t + 1; j < cols && divides; ++j)
                if (a[i][j] % a[t][t] != 0) {
                    for (std::size_t jj = 0; jj < cols; ++jj) a[t][jj] += a[i][jj];
                    for (std::size_t jj = 0; jj < rows; ++jj) res.u[t][jj] += res.u[i][jj];
                    divides = false;
                }
        if (!divides) continue;  // redo this pivot
        if (a[t][t] < 0) {
            for (std::size_t j = 0; j < cols; ++j) a[t][j] = -a[t][j];
            for (std::size_t j = 0; j < rows; ++j) res.u[t][j] = -res.u[t][j];
        }
        ++t;
    }
    res.rank = t;
    res.d = std::move(a);
    return res;
}

/// Canonical (HNF) basis of the integer kernel {x : A x = 0}.
inline IntMat integer_kernel(const IntMat& a) {
    std::size_t cols = a.empty() ? 0 : a[0].size();
    if (a.empty()) return int_identity(cols);
    SmithResult s = smith_normal_form(a);
    IntMat basis;
    for (std::size_t j = s.rank; j < cols; ++j) {
        IntVec col(cols);
        for (std::size_t i = 0; i < cols; ++i) col[i] = s.v[i][j];
        basis.push_back(std::move(col));
    }
    return hermite_normal_form(std::move(basis));
}

/// Exact solve of a square system A x = b over the rationals.
/// Throws if A is singular.
inline RatVec rational_solve(const IntMat& a, const IntVec& b) {
    std::size_t n = a.size();
    if (n == 0) return {};
    std::vector<RatVec> m(n, RatVec(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = Rat(a[i][j]);
        m[i][n] = Rat(b[i]);
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) throw std::invalid_argument("rational_solve: singular matrix");
        std::swap(m[c], m[piv]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m[i][c] == 0) continue;
            Rat f = m[i][c] / m[c][c];
            for (std::size_t j = c; j <= n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    RatVec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
    return x;
}

inline bool rat_is_integer(const Rat& r) { return denominator(r) == 1; }

}  // namespace equipass
