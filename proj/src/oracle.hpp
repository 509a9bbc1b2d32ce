// Brute-force ground truth, independent of the quaternionic construction:
// enumerate every sublattice of a given index of an arbitrary positive
// definite Gram lattice in Hermite normal form, and decide similarity by
// exact Z-congruence testing (backtracking over prescribed inner products).
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hnf.hpp"
#include "linalg.hpp"

namespace a4ssl {

struct GramMatrix {
    size_t dim;
    Mat<Rat> g;  // symmetric positive definite, validated on construction
};

GramMatrix make_gram(Mat<Rat> entries);       // InvalidArgument if not SPD, dim 1..4
GramMatrix gram_preset(const std::string& name);  // a4 a4dual a2 fcc z2 z3 z4 rect23
GramMatrix dual_gram(const GramMatrix& g);    // exact inverse

// every sublattice of Z^d of index n exactly once, as canonical column HNF
void hnf_enumerate(size_t dim, const Int& n, const std::function<void(const IntMat&)>& visit);

// classical count of index-n sublattices of Z^d (coefficients of
// zeta(s) zeta(s-1) ... zeta(s-d+1)); the cardinality of hnf_enumerate
Int hnf_count(size_t dim, const Int& n);

// all v != 0 with v^T G v <= bound, one of +-v each
std::vector<std::vector<Int>> short_vectors(const GramMatrix& g, const Rat& bound);

// does Z describe a similar sublattice (Z^T G Z congruent to c G over Z)?
bool is_similar_sublattice(const GramMatrix& g, const IntMat& z);

struct OracleBudget {
    // default allows dimension 4 up to index 81 and lower dimensions up to 64
    unsigned long long max_index_by_dim[5] = {0, 4096, 64, 64, 81};
    unsigned long long max_estimated_hnf = 1'200'000;
};

struct BruteResult {
    Int total;
    Int primitive;
    std::vector<IntMat> matrices;  // filled only when collect was requested
};

// counts similar sublattices of index n (and the primitive ones) by filtering
// the HNF stream through the similarity test; throws BudgetExceeded with the
// estimate before starting work that would blow the budget
BruteResult brute_similar(const GramMatrix& g, const Int& n, const OracleBudget& budget = {},
                          bool collect = false);

}  // namespace a4ssl
