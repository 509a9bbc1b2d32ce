#include "hnf.hpp"

namespace a4ssl {

namespace {

void col_axpy(IntMat& m, size_t dst, size_t src, const Int& q) {
    if (q == 0) return;
    for (auto& row : m) row[dst] -= q * row[src];
}

void col_swap(IntMat& m, size_t x, size_t y) {
    if (x == y) return;
    for (auto& row : m) std::swap(row[x], row[y]);
}

void col_negate(IntMat& m, size_t c) {
    for (auto& row : m) row[c] = -row[c];
}

}  // namespace

void hnf_columns(IntMat& m) {
    if (m.empty()) return;
    size_t rows = m.size(), cols = m[0].size();
    size_t c = 0;
    std::vector<size_t> pivot_row;
    for (size_t r = 0; r < rows && c < cols; ++r) {
        // gcd-eliminate row r across columns c..cols-1
        while (true) {
            size_t nz = cols;
            for (size_t k = c; k < cols; ++k) {
                if (m[r][k] != 0 && (nz == cols || abs(m[r][k]) < abs(m[r][nz]))) nz = k;
            }
            if (nz == cols) break;
            col_swap(m, c, nz);
            bool clean = true;
            for (size_t k = c + 1; k < cols; ++k) {
                if (m[r][k] == 0) continue;
                col_axpy(m, k, c, floor_div(m[r][k], abs(m[r][c])) * sgn(m[r][c]));
                if (m[r][k] != 0) clean = false;
            }
            if (clean) break;
        }
        if (m[r][c] == 0) continue;  // row r is zero on the remaining columns
        if (sgn(m[r][c]) < 0) col_negate(m, c);
        // reduce earlier columns in this pivot row into [0, pivot)
        for (size_t k = 0; k < c; ++k) col_axpy(m, k, c, floor_div(m[r][k], m[r][c]));
        pivot_row.push_back(r);
        ++c;
    }
}

IntMat hnf_square(const IntMat& m) {
    internal_check(m.size() == 4 && m[0].size() == 4, "hnf_square expects a 4x4 matrix");
    IntMat h = m;
    hnf_columns(h);
    for (size_t d = 0; d < 4; ++d)
        internal_check(h[d][d] > 0, "hnf_square: input matrix is singular");
    return h;
}

Int mat_det(const IntMat& m_in) {
    // Bareiss fraction-free elimination
    IntMat m = m_in;
    size_t n = m.size();
    Int prev(1);
    int sign = 1;
    for (size_t c = 0; c + 1 < n; ++c) {
        size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return Int(0);
        if (p != c) {
            std::swap(m[p], m[c]);
            sign = -sign;
        }
        for (size_t r = c + 1; r < n; ++r) {
            for (size_t k = c + 1; k < n; ++k) {
                m[r][k] = (m[r][k] * m[c][c] - m[r][c] * m[c][k]) / prev;
            }
            m[r][c] = 0;
        }
        prev = m[c][c];
    }
    return sign * m[n - 1][n - 1];
}

bool hnf_span_contains(const IntMat& hnf, const std::vector<Int>& v) {
    size_t rows = hnf.size(), cols = hnf[0].size();
    std::vector<Int> rem = v;
    size_t c = 0;
    for (size_t r = 0; r < rows; ++r) {
        const Int& pivot = c < cols ? hnf[r][c] : Int(0);
        if (c < cols && pivot != 0) {
            Int q = rem[r] / pivot;
            if (q * pivot != rem[r]) return false;
            for (size_t rr = r; rr < rows; ++rr) rem[rr] -= q * hnf[rr][c];
            ++c;
        } else if (rem[r] != 0) {
            return false;
        }
    }
    for (const Int& x : rem)
        if (x != 0) return false;
    return true;
}

IntMat mat_mul_int(const IntMat& a, const IntMat& b) {
    size_t n = a.size(), k = b.size(), m = b[0].size();
    IntMat out(n, std::vector<Int>(m, Int(0)));
    for (size_t r = 0; r < n; ++r)
        for (size_t t = 0; t < k; ++t) {
            if (a[r][t] == 0) continue;
            for (size_t c = 0; c < m; ++c) out[r][c] += a[r][t] * b[t][c];
        }
    return out;
}

IntMat mat_transpose(const IntMat& a) {
    size_t n = a.size(), m = a[0].size();
    IntMat out(m, std::vector<Int>(n));
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < m; ++c) out[c][r] = a[r][c];
    return out;
}

}  // namespace a4ssl
