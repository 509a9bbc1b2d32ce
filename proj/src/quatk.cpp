#include "quatk.hpp"

#include <sstream>

#include "linalg.hpp"

namespace a4ssl {

void KScalar::normalize() {
    if (den_ == 0) throw DivideByZero();
    if (sgn(den_) < 0) {
        den_ = -den_;
        num_ = -num_;
    }
    Int g = int_gcd(int_gcd(abs(num_.a()), abs(num_.b())), den_);
    if (g > 1) num_ = GoldenInt(num_.a() / g, num_.b() / g), den_ /= g;
}

KScalar KScalar::operator/(const KScalar& o) const {
    if (o.is_zero()) throw DivideByZero();
    // 1/(n/d) = d * conj(n) / N(n)
    return KScalar(num_ * o.num_.conj() * GoldenInt(o.den_, 0), den_ * o.num_.norm());
}

std::string KScalar::str() const {
    std::ostringstream os;
    os << num_.str();
    if (den_ != 1) os << "/" << den_.get_str();
    return os.str();
}

int compare_embedded(const KScalar& x, const KScalar& y) {
    return (x - y).sign_embedding(false);
}

bool Quat::is_zero() const {
    return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

Quat Quat::operator+(const Quat& o) const {
    return Quat(c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2], c_[3] + o.c_[3]);
}

Quat Quat::operator-(const Quat& o) const {
    return Quat(c_[0] - o.c_[0], c_[1] - o.c_[1], c_[2] - o.c_[2], c_[3] - o.c_[3]);
}

Quat Quat::operator*(const Quat& o) const {
    const KScalar &a0 = c_[0], &a1 = c_[1], &a2 = c_[2], &a3 = c_[3];
    const KScalar &b0 = o.c_[0], &b1 = o.c_[1], &b2 = o.c_[2], &b3 = o.c_[3];
    return Quat(a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
                a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
                a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
                a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0);
}

Quat Quat::operator*(const KScalar& s) const {
    return Quat(c_[0] * s, c_[1] * s, c_[2] * s, c_[3] * s);
}

KScalar Quat::nr() const {
    return c_[0] * c_[0] + c_[1] * c_[1] + c_[2] * c_[2] + c_[3] * c_[3];
}

Quat Quat::inverse() const {
    if (is_zero()) throw DivideByZero();
    KScalar n = nr();
    Quat b = bar();
    return Quat(b[0] / n, b[1] / n, b[2] / n, b[3] / n);
}

std::string Quat::str() const {
    std::ostringstream os;
    os << "(" << c_[0].str() << ", " << c_[1].str() << ", " << c_[2].str() << ", " << c_[3].str()
       << ")";
    return os.str();
}

bool quat_less(const Quat& x, const Quat& y) {
    for (int idx = 0; idx < 4; ++idx) {
        int c = compare_embedded(x[idx], y[idx]);
        if (c != 0) return c < 0;
    }
    return false;
}

KMat4 matrix_rep(const Quat& p, const Quat& q) {
    static const std::array<Quat, 4> basis = {Quat::one(), Quat::i(), Quat::j(), Quat::k()};
    KMat4 m;
    for (int col = 0; col < 4; ++col) {
        Quat image = p * basis[col] * q;
        for (int row = 0; row < 4; ++row) m[row][col] = image[row];
    }
    return m;
}

KScalar kmat4_det(const KMat4& m) {
    Mat<KScalar> a(4, std::vector<KScalar>(4));
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) a[r][c] = m[r][c];
    return determinant(a);
}

TwistParity twist_eigenspace_test(const Quat& x) {
    Quat t = x.twist();
    if (t == x) return TwistParity::plus;
    if (t == -x) return TwistParity::minus;
    return TwistParity::neither;
}

bool twist_laws_check(const Quat& x, const Quat& y, const KScalar& alpha) {
    bool additive = (x + y).twist() == x.twist() + y.twist();
    bool semilinear = (x * alpha).twist() == x.twist() * alpha.conj();
    bool anti = (x * y).twist() == y.twist() * x.twist();
    bool involution = x.twist().twist() == x;
    bool commutes_bar = x.bar().twist() == x.twist().bar();
    return additive && semilinear && anti && involution && commutes_bar;
}

const std::array<Quat, 4>& v_plus_basis() {
    static const KScalar half(GoldenInt(1), Int(2));
    static const KScalar tau = KScalar::tau();
    static const std::array<Quat, 4> basis = {
        Quat::one(),
        Quat(-half, half, half, half),
        -Quat::i(),
        Quat(0, half, (tau - KScalar(1)) * half, -(tau * half)),
    };
    return basis;
}

std::array<KScalar, 4> v_plus_coordinates(const Quat& x) {
    static const Mat<KScalar> inv = [] {
        const auto& basis = v_plus_basis();
        Mat<KScalar> m(4, std::vector<KScalar>(4));
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) m[r][c] = basis[c][r];
        return inverse(m);
    }();
    std::array<KScalar, 4> out;
    for (int r = 0; r < 4; ++r) {
        KScalar acc;
        for (int c = 0; c < 4; ++c) acc += inv[r][c] * x[c];
        out[r] = acc;
    }
    return out;
}

RatMat4 similarity_matrix(const Rat& alpha, const Quat& p) {
    const KScalar alpha_k = KScalar::from_rat(alpha);
    const Quat pt = p.twist();
    RatMat4 m;
    for (int col = 0; col < 4; ++col) {
        Quat image = (p * v_plus_basis()[col] * pt) * alpha_k;
        auto coords = v_plus_coordinates(image);
        for (int row = 0; row < 4; ++row) {
            if (!coords[row].is_rational()) throw NotRationalMap();
            m[row][col] = coords[row].to_rat();
        }
    }
    return m;
}

std::array<Rat, 5> similarity_char_poly(const Rat& alpha, const Quat& p) {
    similarity_matrix(alpha, p);  // rationality check on the fixed-space basis

    KScalar trp = p.tr();
    KScalar nrp = p.nr();
    Rat trace = alpha * trp.norm_to_rat();
    Rat a_coeff =
        alpha * alpha * ((trp * trp * nrp.conj()).trace_to_rat() - 2 * nrp.norm_to_rat());
    Rat b_coeff = alpha * alpha * alpha * (trp * nrp).norm_to_rat();
    Rat det = alpha * alpha * alpha * alpha * (nrp * nrp).norm_to_rat();
    return {det, -b_coeff, a_coeff, -trace, Rat(1)};
}

}  // namespace a4ssl
