// The quaternion algebra H(K) over K = Q(sqrt5): Hamilton multiplication,
// conjugation, reduced trace/norm, the twist map (coordinate-wise algebraic
// conjugation composed with swapping the j and k coordinates), the matrix
// representation of x -> p x q, and the characteristic polynomial of
// similarity maps x -> alpha p x twist(p).
#pragma once

#include <array>
#include <optional>

#include "golden.hpp"

namespace a4ssl {

// Element of K = Q(sqrt5) as num/den with den > 0 and gcd(num.a, num.b, den) = 1.
class KScalar {
public:
    KScalar() : num_(), den_(1) {}
    KScalar(long v) : num_(v), den_(1) {}  // NOLINT: implicit
    KScalar(GoldenInt n) : num_(std::move(n)), den_(1) {}
    KScalar(GoldenInt n, Int d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    static KScalar tau() { return KScalar(GoldenInt::tau()); }

    const GoldenInt& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_rational() const { return num_.b() == 0; }
    bool is_golden_integer() const { return den_ == 1; }

    KScalar operator-() const { return KScalar(-num_, den_, nocheck_tag{}); }
    KScalar operator+(const KScalar& o) const {
        return KScalar(num_ * GoldenInt(o.den_, 0) + o.num_ * GoldenInt(den_, 0), den_ * o.den_);
    }
    KScalar operator-(const KScalar& o) const { return *this + (-o); }
    KScalar operator*(const KScalar& o) const { return KScalar(num_ * o.num_, den_ * o.den_); }
    KScalar operator/(const KScalar& o) const;
    KScalar& operator+=(const KScalar& o) { return *this = *this + o; }
    KScalar& operator-=(const KScalar& o) { return *this = *this - o; }
    KScalar& operator*=(const KScalar& o) { return *this = *this * o; }
    KScalar& operator/=(const KScalar& o) { return *this = *this / o; }

    bool operator==(const KScalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const KScalar& o) const { return !(*this == o); }

    KScalar conj() const { return KScalar(num_.conj(), den_, nocheck_tag{}); }

    // field trace and norm K -> Q
    Rat trace_to_rat() const { return Rat(num_.trace()) / Rat(den_); }
    Rat norm_to_rat() const { return Rat(num_.norm()) / Rat(den_ * den_); }

    int sign_embedding(bool second = false) const { return num_.sign_embedding(second); }

    // decomposition x = rat_part + tau_part * tau with rational parts
    Rat rat_part() const { return Rat(num_.a()) / Rat(den_); }
    Rat tau_part() const { return Rat(num_.b()) / Rat(den_); }

    Rat to_rat() const {  // requires is_rational()
        internal_check(is_rational(), "KScalar::to_rat on an irrational element");
        return rat_part();
    }
    static KScalar from_rat(const Rat& r) {
        return KScalar(GoldenInt(Int(r.get_num()), 0), Int(r.get_den()));
    }

    std::string str() const;

private:
    struct nocheck_tag {};
    KScalar(GoldenInt n, Int d, nocheck_tag) : num_(std::move(n)), den_(std::move(d)) {}
    void normalize();

    GoldenInt num_;
    Int den_;
};

// exact total order via the first real embedding
int compare_embedded(const KScalar& x, const KScalar& y);

class Quat {
public:
    Quat() = default;
    Quat(KScalar x0, KScalar x1, KScalar x2, KScalar x3)
        : c_{std::move(x0), std::move(x1), std::move(x2), std::move(x3)} {}

    static Quat one() { return Quat(1, 0, 0, 0); }
    static Quat i() { return Quat(0, 1, 0, 0); }
    static Quat j() { return Quat(0, 0, 1, 0); }
    static Quat k() { return Quat(0, 0, 0, 1); }

    const KScalar& operator[](int idx) const { return c_[idx]; }
    KScalar& operator[](int idx) { return c_[idx]; }

    bool is_zero() const;

    Quat operator-() const { return Quat(-c_[0], -c_[1], -c_[2], -c_[3]); }
    Quat operator+(const Quat& o) const;
    Quat operator-(const Quat& o) const;
    Quat operator*(const Quat& o) const;  // Hamilton product
    Quat operator*(const KScalar& s) const;
    Quat& operator+=(const Quat& o) { return *this = *this + o; }
    Quat& operator-=(const Quat& o) { return *this = *this - o; }
    Quat& operator*=(const Quat& o) { return *this = *this * o; }

    bool operator==(const Quat& o) const { return c_ == o.c_; }
    bool operator!=(const Quat& o) const { return !(*this == o); }

    Quat bar() const { return Quat(c_[0], -c_[1], -c_[2], -c_[3]); }
    KScalar tr() const { return c_[0] + c_[0]; }
    KScalar nr() const;
    Quat inverse() const;  // bar(x)/nr(x); DivideByZero on 0

    // algebraic conjugation of every coordinate + swap of the j,k coordinates
    Quat twist() const { return Quat(c_[0].conj(), c_[1].conj(), c_[3].conj(), c_[2].conj()); }

    std::string str() const;

private:
    std::array<KScalar, 4> c_;
};

inline Quat operator*(const KScalar& s, const Quat& q) { return q * s; }

// deterministic total order (lexicographic on coordinates via the first embedding)
bool quat_less(const Quat& x, const Quat& y);

using KMat4 = std::array<std::array<KScalar, 4>, 4>;
using RatMat4 = std::array<std::array<Rat, 4>, 4>;

// M(p,q) with M(p,q) * column(x) = column(p x q)
KMat4 matrix_rep(const Quat& p, const Quat& q);

KScalar kmat4_det(const KMat4& m);

enum class TwistParity { plus, minus, neither };
TwistParity twist_eigenspace_test(const Quat& x);

// checks the twist-map laws on the given inputs: additivity and semilinearity,
// anti-multiplicativity and involution, commutation with quaternion conjugation
bool twist_laws_check(const Quat& x, const Quat& y, const KScalar& alpha);

// Q-basis of the +1 eigenspace of the twist map (also a lattice basis of the
// A4 copy L inside the icosian ring)
const std::array<Quat, 4>& v_plus_basis();

// exact coordinates of x on v_plus_basis() (a K-basis of the algebra)
std::array<KScalar, 4> v_plus_coordinates(const Quat& x);

// matrix of x -> alpha * p * x * twist(p) on v_plus_basis(); throws
// NotRationalMap if any entry fails to be rational
RatMat4 similarity_matrix(const Rat& alpha, const Quat& p);

// characteristic polynomial of the same map in closed form, coefficients
// lowest degree first: [det, -B, A, -trace, 1]
std::array<Rat, 5> similarity_char_poly(const Rat& alpha, const Quat& p);

}  // namespace a4ssl
