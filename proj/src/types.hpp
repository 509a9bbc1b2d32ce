// Shared integer/rational types and a few exact-arithmetic helpers.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace a4ssl {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_gcd(const Int& x, const Int& y) {
    Int r;
    mpz_gcd(r.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return r;
}

inline Int isqrt_floor(const Int& x) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Int& x, Int* root = nullptr) {
    if (sgn(x) < 0) return false;
    Int r = isqrt_floor(x);
    if (r * r != x) return false;
    if (root) *root = r;
    return true;
}

// floor division, b > 0
inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// nearest integer to num/den (den > 0), ties rounded toward zero
inline Int round_nearest_tz(const Int& num, const Int& den) {
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    Int twice_r = 2 * abs(r);
    if (twice_r > den) q += sgn(num) * sgn(den);
    return q;
}

inline long long to_ll(const Int& x) {
    if (!x.fits_slong_p()) throw std::overflow_error("integer too large for int64 interface");
    return static_cast<long long>(x.get_si());
}

// number of worker threads: hardware concurrency capped by SSL_THREADS
unsigned worker_count();

// run fn(begin, end) over [0, total) in parallel chunks; fn must be thread-safe
void parallel_chunks(unsigned long long total,
                     const std::function<void(unsigned long long, unsigned long long)>& fn);

}  // namespace a4ssl
