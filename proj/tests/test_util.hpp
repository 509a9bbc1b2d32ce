// Shared test helpers: deterministic random generators for the algebraic
// types and a few independent oracles (brute-force routes kept separate from
// the implementation paths they check).
#pragma once

#include <array>
#include <random>
#include <vector>

#include "counting.hpp"
#include "icosian.hpp"
#include "linalg.hpp"
#include "quatk.hpp"

namespace a4ssl_test {

using namespace a4ssl;

struct Rng {
    std::mt19937_64 eng{0xA455CAFEull};

    long pick(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(eng);
    }
    GoldenInt golden(long range = 20) {
        return GoldenInt(Int(pick(-range, range)), Int(pick(-range, range)));
    }
    GoldenInt golden_nonzero(long range = 20) {
        GoldenInt g = golden(range);
        while (g.is_zero()) g = golden(range);
        return g;
    }
    KScalar kscalar(long range = 10, long den_max = 4) {
        return KScalar(golden(range), Int(pick(1, den_max)));
    }
    Quat quat(long range = 10, long den_max = 4) {
        return Quat(kscalar(range, den_max), kscalar(range, den_max), kscalar(range, den_max),
                    kscalar(range, den_max));
    }
    Icosian icosian(long range = 4) {
        return Icosian::from_coords({golden(range), golden(range), golden(range), golden(range)});
    }
    Icosian icosian_nonzero(long range = 4) {
        Icosian x = icosian(range);
        while (x.is_zero()) x = icosian(range);
        return x;
    }
};

// oracle for Z[tau] products: multiply as polynomials in t, reduce t^2 = t + 1
inline GoldenInt golden_mul_oracle(const GoldenInt& x, const GoldenInt& y) {
    Int c0 = x.a() * y.a();
    Int c1 = x.a() * y.b() + x.b() * y.a();
    Int c2 = x.b() * y.b();
    return GoldenInt(c0 + c2, c1 + c2);
}

// oracle for Hamilton products from the structure-constant table
inline Quat quat_mul_oracle(const Quat& x, const Quat& y) {
    static const int index[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    std::array<KScalar, 4> acc;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            KScalar term = x[a] * y[b];
            if (sign[a][b] < 0) term = -term;
            acc[index[a][b]] += term;
        }
    return Quat(acc[0], acc[1], acc[2], acc[3]);
}

// characteristic polynomial of an exact rational matrix (Faddeev-LeVerrier),
// coefficients lowest degree first, leading coefficient 1
inline std::vector<Rat> char_poly_oracle(const Mat<Rat>& m) {
    size_t n = m.size();
    std::vector<Rat> coeffs(n + 1);
    coeffs[n] = 1;
    Mat<Rat> mk = mat_identity<Rat>(n);
    for (size_t k = 1; k <= n; ++k) {
        mk = mat_mul(m, mk);
        Rat trace(0);
        for (size_t d = 0; d < n; ++d) trace += mk[d][d];
        Rat ck = -trace / Rat(static_cast<long>(k));
        coeffs[n - k] = ck;
        for (size_t d = 0; d < n; ++d) mk[d][d] += ck;
    }
    return coeffs;
}

// is m represented by k^2 + k l - l^2 with |k|, |l| <= 3 sqrt(m)?
inline bool norm_form_represents(long long m) {
    long long bound = 1;
    while (bound * bound < 9 * m) ++bound;
    for (long long k = -bound; k <= bound; ++k)
        for (long long l = -bound; l <= bound; ++l)
            if (k * k + k * l - l * l == m) return true;
    return false;
}

// classical count of index-n sublattices of Z^d via divisor sums
inline long long sublattice_count_oracle(int dim, long long n) {
    if (dim == 1) return 1;
    long long out = 0;
    for (long long a = 1; a <= n; ++a) {
        if (n % a) continue;
        long long apow = 1;
        for (int t = 0; t + 1 < dim; ++t) apow *= a;
        out += apow * sublattice_count_oracle(dim - 1, n / a);
    }
    return out;
}

inline Mat<Rat> rat_mat4(const RatMat4& m) {
    Mat<Rat> out(4, std::vector<Rat>(4));
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out[r][c] = m[r][c];
    return out;
}

// r in sI and s in rI (equality of the generated right ideals)
inline bool same_right_ideal(const Icosian& r, const Icosian& s) {
    Quat a = s.quat().inverse() * r.quat();
    Quat b = r.quat().inverse() * s.quat();
    return Icosian::try_from_quat(a).has_value() && Icosian::try_from_quat(b).has_value();
}

}  // namespace a4ssl_test
