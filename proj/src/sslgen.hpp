// Constructive enumeration of the similar sublattices of the A4 copy L:
// icosians of prescribed reduced norm by exact short-vector search in the
// rank-8 trace form, right-ideal class representatives modulo the unit group,
// sublattice basis matrices p L twist(p) in canonical Hermite normal form,
// and independent verification of each record.
#pragma once

#include <optional>
#include <vector>

#include "hnf.hpp"
#include "icosian.hpp"

namespace a4ssl {

// 4x4 integer matrix in canonical column HNF whose columns express a
// sublattice basis in the L-basis; determinant = index
struct SublatticeMatrix {
    IntMat z;
    Int index;
};

struct SslRecord {
    SublatticeMatrix matrix;
    Icosian generator;  // primitive p with the sublattice equal to scale * (p L twist(p))
    Int scale;          // d >= 1; d > 1 records are scalings of primitive ones
    Int m;              // sublattice index is m^2
};

// all x in the icosian ring with nr(x) = alpha (alpha totally positive),
// complete and duplicate-free, canonically ordered
std::vector<Icosian> icosians_with_reduced_norm(const GoldenInt& alpha);

// one canonical generator per right ideal pI with |N(nr(p))| = m
std::vector<Icosian> right_ideal_classes(const Int& m, bool primitive_only);

// columns = coordinates of d * p * b_i * twist(p) in the L-basis; this basis
// satisfies Z^T G Z = m G literally (the similarity scales inner products)
IntMat similarity_image_matrix(const Icosian& p, const Int& d);

// the record of d * (p L twist(p)) expressed in the L-basis
SslRecord ssl_matrix(const Icosian& p, const Int& d);

struct EnumerationBudget {
    Int max_m = 50;
};

// all (or all primitive) similar sublattices of index m^2, canonically sorted
std::vector<SslRecord> enumerate_ssls(const Int& m, bool primitive_only,
                                      const EnumerationBudget& budget = {});

enum class SslVerifyStatus {
    ok,
    bad_determinant,
    gram_mismatch,
    hnf_mismatch,
    primitivity_mismatch
};

struct SslVerifyResult {
    bool ok;
    SslVerifyStatus status;
    bool primitive;  // gcd of matrix entries is 1
};

// rebuilds the similarity image from the record's generator and scale, checks
// Z^T G Z = m G exactly on it, det = m^2, that its HNF reproduces the stored
// matrix, and the primitivity claim
SslVerifyResult verify_ssl(const SslRecord& rec);

// the integral A4 Gram matrix 2<b_i|b_j> of the L-basis
const IntMat& a4_gram_integral();

}  // namespace a4ssl
