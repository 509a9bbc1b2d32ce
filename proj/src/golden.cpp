#include "golden.hpp"

#include <algorithm>
#include <sstream>

namespace a4ssl {

int GoldenInt::sign_embedding(bool second) const {
    // image is ((2a+b) + s*b*sqrt5)/2 with s = +1 (first) or -1 (second)
    Int t = trace();
    Int s5 = second ? Int(-b_) : b_;
    int st = sgn(t), ss = sgn(s5);
    if (ss == 0) return st;
    if (st == 0) return ss;
    if (st == ss) return st;
    // opposite signs: compare t^2 with 5 b^2
    int cmp_val = cmp(t * t, 5 * s5 * s5);
    if (cmp_val == 0) return 0;  // impossible for nonzero elements (sqrt5 irrational)
    return cmp_val > 0 ? st : ss;
}

std::string GoldenInt::str() const {
    std::ostringstream os;
    os << a_.get_str();
    if (b_ != 0) {
        os << (sgn(b_) > 0 ? "+" : "-") << Int(abs(b_)).get_str() << "t";
    }
    return os.str();
}

UnitLog unit_log(const GoldenInt& x) {
    if (!x.is_unit()) throw NotAUnit();
    GoldenInt u = x;
    UnitLog out{+1, 0};
    if (u.sign_embedding(false) < 0) {
        out.sign = -1;
        u = -u;
    }
    static const GoldenInt tau = GoldenInt::tau();
    static const GoldenInt tau_inv(-1, 1);  // tau^-1 = tau - 1
    while (!(u == GoldenInt(1))) {
        if ((u - GoldenInt(1)).sign_embedding(false) > 0) {
            u *= tau_inv;
            ++out.exponent;
        } else {
            u *= tau;
            --out.exponent;
        }
    }
    return out;
}

std::pair<GoldenInt, GoldenInt> euclid_divmod(const GoldenInt& x, const GoldenInt& y) {
    if (y.is_zero()) throw DivideByZero();
    // exact field quotient x * conj(y) / N(y)
    GoldenInt num = x * y.conj();
    Int den = y.norm();
    if (sgn(den) < 0) {
        num = -num;
        den = -den;
    }
    GoldenInt q(round_nearest_tz(num.a(), den), round_nearest_tz(num.b(), den));
    GoldenInt r = x - q * y;
    return {q, r};
}

GoldenInt canonical_associate(const GoldenInt& g_in) {
    if (g_in.is_zero()) return GoldenInt();
    GoldenInt g = g_in;
    if (sgn(g.norm()) < 0) g *= GoldenInt::tau();  // N(tau) = -1 flips the norm sign
    if (g.sign_embedding(false) < 0) g = -g;       // now totally positive
    static const GoldenInt tau_sq(1, 1);      // tau^2
    static const GoldenInt tau_negsq(2, -1);  // tau^-2
    static const GoldenInt tau_4(2, 3);       // tau^4
    // g/g' >= 1 iff b >= 0; g/g' < tau^4 iff the first embedding of
    // g - tau^4 * conj(g) is negative
    while (sgn(g.b()) < 0) g *= tau_sq;
    while ((g - tau_4 * g.conj()).sign_embedding(false) >= 0) g *= tau_negsq;
    return g;
}

GoldenInt golden_gcd(const GoldenInt& x, const GoldenInt& y) {
    GoldenInt a = x, b = y;
    while (!b.is_zero()) {
        auto [q, r] = euclid_divmod(a, b);
        a = b;
        b = r;
    }
    return canonical_associate(a);
}

GoldenInt content(std::span<const GoldenInt> v) {
    GoldenInt g;
    bool any = false;
    for (const GoldenInt& x : v) {
        if (x.is_zero()) continue;
        any = true;
        g = g.is_zero() ? x : golden_gcd(g, x);
    }
    if (!any) throw ZeroVector();
    return canonical_associate(g);
}

std::vector<GoldenInt> norm_representatives(const Int& m) {
    if (m < 1) throw InvalidArgument("norm_representatives: m must be positive");
    // A totally positive alpha = a + b tau with 1 <= alpha/alpha' < tau^4 has
    // 0 <= b < sqrt(m); solve a from the discriminant 5 b^2 + 4 m.
    std::vector<GoldenInt> reps;
    Int bmax = isqrt_floor(m) + 1;
    for (Int b = 0; b <= bmax; ++b) {
        Int disc = 5 * b * b + 4 * m, s;
        if (!is_perfect_square(disc, &s)) continue;
        if (sgn((s - b) % 2) != 0) continue;
        GoldenInt alpha((s - b) / 2, b);
        internal_check(alpha.norm() == m, "norm_representatives: scan produced a wrong norm");
        GoldenInt red = canonical_associate(alpha);
        if (std::find(reps.begin(), reps.end(), red) == reps.end()) reps.push_back(red);
    }
    std::sort(reps.begin(), reps.end(), [](const GoldenInt& x, const GoldenInt& y) {
        return x.a() != y.a() ? x.a() < y.a() : x.b() < y.b();
    });
    return reps;
}

}  // namespace a4ssl
