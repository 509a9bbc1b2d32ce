// Exact arithmetic in Z[tau], the ring of integers of Q(sqrt(5)).
// tau = (1+sqrt(5))/2 is the golden ratio, a fundamental unit with
// tau^2 = tau + 1, conjugate tau' = 1 - tau, N(tau) = -1, Tr(tau) = 1.
#pragma once

#include <span>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "types.hpp"

namespace a4ssl {

class GoldenInt {
public:
    GoldenInt() : a_(0), b_(0) {}
    GoldenInt(long a) : a_(a), b_(0) {}  // NOLINT: implicit from plain integers is intended
    GoldenInt(Int a, Int b) : a_(std::move(a)), b_(std::move(b)) {}

    static GoldenInt tau() { return GoldenInt(0, 1); }

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }

    GoldenInt operator-() const { return GoldenInt(-a_, -b_); }
    GoldenInt operator+(const GoldenInt& o) const { return GoldenInt(a_ + o.a_, b_ + o.b_); }
    GoldenInt operator-(const GoldenInt& o) const { return GoldenInt(a_ - o.a_, b_ - o.b_); }
    GoldenInt operator*(const GoldenInt& o) const {
        // (a1 + b1 t)(a2 + b2 t) with t^2 = t + 1
        return GoldenInt(a_ * o.a_ + b_ * o.b_, a_ * o.b_ + b_ * o.a_ + b_ * o.b_);
    }
    GoldenInt& operator+=(const GoldenInt& o) { return *this = *this + o; }
    GoldenInt& operator-=(const GoldenInt& o) { return *this = *this - o; }
    GoldenInt& operator*=(const GoldenInt& o) { return *this = *this * o; }

    bool operator==(const GoldenInt& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const GoldenInt& o) const { return !(*this == o); }

    GoldenInt conj() const { return GoldenInt(a_ + b_, -b_); }
    Int norm() const { return a_ * a_ + a_ * b_ - b_ * b_; }
    Int trace() const { return 2 * a_ + b_; }

    bool is_unit() const {
        Int n = norm();
        return n == 1 || n == -1;
    }

    // sign of the image under the embedding tau -> (1 + sqrt5)/2 (first) or
    // tau -> (1 - sqrt5)/2 (second); decided exactly from (2a+b)^2 vs 5 b^2
    int sign_embedding(bool second = false) const;
    bool is_totally_positive() const { return sign_embedding(false) > 0 && sign_embedding(true) > 0; }

    std::string str() const;

private:
    Int a_, b_;
};

struct UnitLog {
    int sign;       // +1 or -1
    long exponent;  // x = sign * tau^exponent
};

// decomposes a unit as sign * tau^m; throws NotAUnit otherwise
UnitLog unit_log(const GoldenInt& x);

// x = q*y + r with |N(r)| < |N(y)|; nearest-integer rounding on both
// coordinates of the exact field quotient, ties toward zero
std::pair<GoldenInt, GoldenInt> euclid_divmod(const GoldenInt& x, const GoldenInt& y);

// the canonical representative of the associate class of g: totally positive
// with 1 <= g/g' < tau^4, i.e. one representative per tau^2-orbit (0 maps to 0)
GoldenInt canonical_associate(const GoldenInt& g);

// gcd in canonical associate form; gcd(0, 0) = 0
GoldenInt golden_gcd(const GoldenInt& x, const GoldenInt& y);

// canonical gcd of all entries; throws ZeroVector if all entries vanish
GoldenInt content(std::span<const GoldenInt> v);

// all totally positive alpha with N(alpha) = m, one per orbit under
// multiplication by tau^2, each reduced into 1 <= alpha/alpha' < tau^4;
// empty iff m is not a norm
std::vector<GoldenInt> norm_representatives(const Int& m);

}  // namespace a4ssl
