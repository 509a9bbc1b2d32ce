// The icosian ring I (maximal order in H(K)), the lattices L, L[tau],
// calL = Z[tau]^4 and their index chains, order membership and primitivity,
// the H4/A4/H3 root systems, the theta map x -> x*twist(x), the
// classification of the ten twist maps preserving I, and the symmetry-group
// structure of the lattice orbit.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quatk.hpp"

namespace a4ssl {

// Quaternion known to lie in the icosian ring, carrying its Z[tau]-coordinates
// with respect to the order basis (1, i, (1+i+j+k)/2, ((1-tau)+tau*i+k)/2).
class Icosian {
public:
    Icosian() = default;  // the zero icosian
    static std::optional<Icosian> try_from_quat(const Quat& q);
    static Icosian from_quat(const Quat& q);  // throws NotInOrder
    static Icosian from_coords(const std::array<GoldenInt, 4>& coords);

    const Quat& quat() const { return quat_; }
    const std::array<GoldenInt, 4>& coords() const { return coords_; }

    // the 8 integer coordinates (a1, b1, ..., a4, b4) with c_k = a_k + b_k tau
    std::array<Int, 8> z_coords() const;

    bool is_zero() const { return quat_.is_zero(); }
    Icosian operator*(const Icosian& o) const { return from_quat(quat_ * o.quat_); }
    Icosian operator-() const;
    bool operator==(const Icosian& o) const { return coords_ == o.coords_; }
    bool operator!=(const Icosian& o) const { return !(*this == o); }

    GoldenInt content() const;  // throws ZeroVector on 0
    bool is_primitive() const { return content().is_unit(); }
    bool is_unit() const;  // N(nr) = +-1

    GoldenInt nr_golden() const;  // reduced norm, an element of Z[tau]

private:
    Quat quat_;
    std::array<GoldenInt, 4> coords_;
};

bool icosian_less(const Icosian& x, const Icosian& y);  // lexicographic on z_coords

// named Z- or Z[tau]-module bases inside H(K)
struct LatticeBasis {
    enum class Span { Z, ZTau };
    std::array<Quat, 4> vecs;
    Span span;
    std::string name;
};

const std::array<Quat, 4>& icosian_basis();
LatticeBasis basis_L();         // Z-span, the A4 copy (fixed points of the twist map)
LatticeBasis basis_L_tau();     // Z[tau]-span of the same vectors
LatticeBasis basis_calL();      // Z[tau]-span of 1, i, j, k
LatticeBasis basis_I();         // the icosian ring as a Z[tau]-module
LatticeBasis basis_L_tau_dual();  // Z[tau]-dual of L[tau] w.r.t. tr(x * bar(y))
LatticeBasis basis_scaled(const LatticeBasis& b, const Int& factor);

// Gram matrix of pairwise standard inner products <x|y> = tr(x * bar(y))/2
KMat4 lattice_gram(const LatticeBasis& b);

// index of sub in super as rank-8 Z-modules (both must be Z[tau]-spans);
// throws NotASubmodule when the change of basis is not integral
Int z_module_index(const LatticeBasis& sub, const LatticeBasis& super);

// exact membership of x in the Z[tau]-span (resp. Z-span) of a basis
bool span_contains(const LatticeBasis& b, const Quat& x);

const std::vector<Quat>& roots_H4();  // 120
const std::vector<Quat>& roots_A4();  // 20, the twist-fixed H4 roots
const std::vector<Quat>& roots_H3();  // 30, the pure (traceless) H4 roots

bool is_twist_fixed_in_L(const Quat& x);
LatticeBasis fixed_point_lattice();  // = basis_L()

// theta(x) = x * twist(x), lands in the twist-fixed space
Icosian theta(const Icosian& x);
const std::vector<Quat>& theta_fibre_group();  // the 6 solutions of eps*twist(eps) = 1
bool theta_image_check();  // theta maps the 120 H4 roots onto the 20 A4 roots, 6-to-1

// x -> a * twist(x) * a^(-1): an involutory K-semilinear anti-automorphism of
// H(K) preserving the icosian ring; a runs over positive A4 roots, and eps is
// a recorded (non-canonical) H4 root with theta(eps) = +-a
struct TwistMap {
    Quat root_a;
    Quat witness_eps;
    Quat apply(const Quat& x) const;
};

std::vector<TwistMap> classify_twist_maps();  // exactly 10
LatticeBasis twist_fixed_lattice(const TwistMap& d);

// the composition d1 o d2 is an inner automorphism T_eps; returns a primitive
// icosian unit eps realizing it (unique up to central units)
Quat twist_product_inner_witness(const TwistMap& d1, const TwistMap& d2);

// the 6 fixed roots of d among the pure roots; a hexagonal planar root system
std::vector<Quat> a2_subsystem(const TwistMap& d);

struct SymmetryReport {
    size_t group_order;           // conjugations by H4 roots together with the twist map
    bool has_order_four_element;  // rules out the direct-product extension
    Quat z;                       // order-3 rotation witness
    bool z_cubed_is_minus_one;
    size_t orbit_size;             // lattices a L b with a, b H4 roots
    size_t copies_containing_one;  // members of the orbit containing the quaternion 1
};

SymmetryReport symmetry_group_structure();

}  // namespace a4ssl
