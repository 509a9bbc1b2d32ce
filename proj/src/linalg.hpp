// Small dense exact linear algebra over a field (KScalar or Rat):
// Gaussian elimination based solve/inverse/determinant/nullspace.
#pragma once

#include <vector>

#include "errors.hpp"

namespace a4ssl {

template <class F>
using Mat = std::vector<std::vector<F>>;

template <class F>
Mat<F> mat_identity(size_t n) {
    Mat<F> m(n, std::vector<F>(n, F()));
    for (size_t d = 0; d < n; ++d) m[d][d] = F(1);
    return m;
}

template <class F>
Mat<F> mat_mul(const Mat<F>& a, const Mat<F>& b) {
    size_t n = a.size(), k = b.size(), m = b[0].size();
    Mat<F> out(n, std::vector<F>(m, F()));
    for (size_t r = 0; r < n; ++r)
        for (size_t t = 0; t < k; ++t) {
            if (a[r][t] == F()) continue;
            for (size_t c = 0; c < m; ++c) out[r][c] += a[r][t] * b[t][c];
        }
    return out;
}

template <class F>
std::vector<F> mat_vec(const Mat<F>& a, const std::vector<F>& v) {
    std::vector<F> out(a.size(), F());
    for (size_t r = 0; r < a.size(); ++r)
        for (size_t c = 0; c < v.size(); ++c) out[r] += a[r][c] * v[c];
    return out;
}

// reduces [a | rhs] in place to echelon form; returns pivot columns
template <class F>
std::vector<size_t> row_reduce(Mat<F>& a, Mat<F>* rhs = nullptr) {
    size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && a[p][c] == F()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        if (rhs) std::swap((*rhs)[p], (*rhs)[r]);
        F inv_pivot = F(1) / a[r][c];
        for (size_t cc = 0; cc < cols; ++cc) a[r][cc] *= inv_pivot;
        if (rhs)
            for (auto& x : (*rhs)[r]) x *= inv_pivot;
        for (size_t rr = 0; rr < rows; ++rr) {
            if (rr == r || a[rr][c] == F()) continue;
            F factor = a[rr][c];
            for (size_t cc = 0; cc < cols; ++cc) a[rr][cc] -= factor * a[r][cc];
            if (rhs)
                for (size_t cc = 0; cc < (*rhs)[rr].size(); ++cc)
                    (*rhs)[rr][cc] -= factor * (*rhs)[r][cc];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class F>
Mat<F> inverse(const Mat<F>& a_in) {
    Mat<F> a = a_in;
    Mat<F> rhs = mat_identity<F>(a.size());
    auto pivots = row_reduce(a, &rhs);
    internal_check(pivots.size() == a.size(), "inverse of a singular matrix");
    return rhs;
}

template <class F>
std::vector<F> solve_square(const Mat<F>& a_in, const std::vector<F>& b) {
    Mat<F> a = a_in;
    Mat<F> rhs(b.size(), std::vector<F>(1));
    for (size_t r = 0; r < b.size(); ++r) rhs[r][0] = b[r];
    auto pivots = row_reduce(a, &rhs);
    internal_check(pivots.size() == a.size(), "solve with a singular matrix");
    std::vector<F> out(b.size());
    for (size_t r = 0; r < b.size(); ++r) out[r] = rhs[r][0];
    return out;
}

template <class F>
F determinant(const Mat<F>& a_in) {
    Mat<F> a = a_in;
    size_t n = a.size();
    F det(1);
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && a[p][c] == F()) ++p;
        if (p == n) return F();
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        F inv_pivot = F(1) / a[c][c];
        for (size_t rr = c + 1; rr < n; ++rr) {
            if (a[rr][c] == F()) continue;
            F factor = a[rr][c] * inv_pivot;
            for (size_t cc = c; cc < n; ++cc) a[rr][cc] -= factor * a[c][cc];
        }
    }
    return det;
}

// basis of the right nullspace of an m x n matrix
template <class F>
std::vector<std::vector<F>> nullspace(const Mat<F>& a_in) {
    Mat<F> a = a_in;
    size_t cols = a.empty() ? 0 : a[0].size();
    auto pivots = row_reduce(a);
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<F>> basis;
    for (size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<F> v(cols, F());
        v[free_col] = F(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace a4ssl
