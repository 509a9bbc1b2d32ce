// Arithmetic-function layer: the Dirichlet character mod 5, Dedekind zeta
// coefficients of Q(sqrt5), the closed forms f / f^pr for the number of
// (primitive) similar sublattices of A4 of index m^2, their convolution and
// Euler-product cross-routes, ideal counts of the icosian ring, the possible
// index set, summatory asymptotics with the growth constant, and the series
// for the related lattices A1, A2, A3 and Z^2.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "types.hpp"

namespace a4ssl {

// 0 on multiples of 5, +1 on residues +-1, -1 on residues +-2
int chi(std::int64_t n);

struct CoeffSeq {
    enum class IndexVar { m, m_squared };  // which power of the index the series sums over
    std::vector<std::int64_t> values;      // values[n] for 1 <= n <= N; values[0] unused
    std::string label;
    IndexVar ivar = IndexVar::m;

    std::int64_t at(std::uint64_t n) const { return values.at(n); }
    std::uint64_t terms() const { return values.size() - 1; }
};

// number of ideals of Z[tau] of norm n (coefficients of the Dedekind zeta
// function of Q(sqrt5)); multiplicative, equal to sum of chi over divisors
CoeffSeq dedekind_zeta_K_coeffs(std::uint64_t n_max);

// multiplicative closed forms from the prime-power values
std::int64_t f_closed(std::uint64_t m);
std::int64_t fpr_closed(std::uint64_t m);

// f as the Dirichlet convolution route zeta_K(2s) zeta_K(2s-1) / L(4s, chi)
CoeffSeq f_via_convolution(std::uint64_t n_max);

// expands the Euler product factor by factor and compares with f_closed
bool euler_factor_check(std::uint64_t n_max);

// right ideals pI with |N(nr p)| = m (Z-module index m^4, reduced index m^2)
std::int64_t right_ideal_count(std::uint64_t m);
// two-sided ideals alpha*I with |N(alpha)| = m
std::int64_t two_sided_ideal_count(std::uint64_t m);

// ascending m <= n_max with f(m) > 0
std::vector<std::uint64_t> possible_indices(std::uint64_t n_max);

// F(x) = sum_{m <= x} f(m), by multiplicative sieve
Int summatory(std::uint64_t x);

// the growth constant (sqrt5 / 2) log(tau), properly rounded to `digits`
// decimals; computed with mpz fixed point (atanh series), no floating point
std::string rho_decimal(unsigned digits);

struct AsymptoticReport {
    std::uint64_t x;
    Int summatory_value;       // F(x)
    std::string rho;           // the constant, `digits` decimals
    std::string target;        // rho * x^2 / 2, 2 decimals
    std::string ratio;         // F(x) / (rho x^2 / 2), 6 decimals
    bool within_5_percent;     // 0.95 <= ratio <= 1.05, decided exactly
};

AsymptoticReport asymptotic_report(std::uint64_t x, unsigned digits = 12);

enum class RelatedLattice { A1, A2, A3, Zsquare };
RelatedLattice related_lattice_from_name(const std::string& name);  // InvalidArgument

// coefficient sequence of the named SSL Dirichlet series in the true
// sublattice index: A1 all ones; A2 Eisenstein ideal counts; Zsquare Gaussian
// ideal counts; A3 supported on cubes via the cubic Euler factors
CoeffSeq related_series(RelatedLattice lattice, std::uint64_t n_max);

}  // namespace a4ssl
