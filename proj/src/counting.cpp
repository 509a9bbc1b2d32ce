#include "counting.hpp"

#include <algorithm>

namespace a4ssl {

namespace {

// smallest prime factor table, cached up to the largest size requested
const std::vector<std::uint32_t>& spf_table(std::uint64_t n_max) {
    static std::vector<std::uint32_t> spf{0, 1};
    if (spf.size() <= n_max) {
        std::uint64_t n = std::max<std::uint64_t>(n_max, 2 * (spf.size() - 1));
        spf.assign(n + 1, 0);
        spf[1] = 1;
        for (std::uint64_t i = 2; i <= n; ++i) {
            if (spf[i] == 0)
                for (std::uint64_t j = i; j <= n; j += i)
                    if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
        }
    }
    return spf;
}

struct PrimePower {
    std::uint64_t p;
    unsigned r;
};

std::vector<PrimePower> factorize(std::uint64_t m) {
    std::vector<PrimePower> out;
    if (m < 2) return out;
    if (m < (1u << 21)) {
        const auto& spf = spf_table(m);
        while (m > 1) {
            std::uint64_t p = spf[m];
            unsigned r = 0;
            while (m % p == 0) m /= p, ++r;
            out.push_back({p, r});
        }
        return out;
    }
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        unsigned r = 0;
        while (m % p == 0) m /= p, ++r;
        out.push_back({p, r});
    }
    if (m > 1) out.push_back({m, 1});
    return out;
}

std::int64_t ipow(std::uint64_t p, unsigned r) {
    std::int64_t out = 1;
    while (r--) out *= static_cast<std::int64_t>(p);
    return out;
}

std::int64_t f_prime_power(std::uint64_t p, unsigned r) {
    if (p == 5) return (ipow(5, r + 1) - 1) / 4;
    std::int64_t pr = ipow(p, r);
    std::int64_t ip = static_cast<std::int64_t>(p);
    if (chi(static_cast<std::int64_t>(p)) == 1) {
        // (2 (1 - p^{r+1}) - (r+1)(1 - p^2) p^r) / (1-p)^2
        std::int64_t num = 2 * (1 - pr * ip) - static_cast<std::int64_t>(r + 1) * (1 - ip * ip) * pr;
        return num / ((1 - ip) * (1 - ip));
    }
    if (r % 2 != 0) return 0;
    return (2 - pr - pr * ip * ip) / (1 - ip * ip);
}

std::int64_t fpr_prime_power(std::uint64_t p, unsigned r) {
    if (p == 5) return 6 * ipow(5, r - 1);
    std::int64_t ip = static_cast<std::int64_t>(p);
    if (chi(static_cast<std::int64_t>(p)) == 1) {
        std::int64_t out = static_cast<std::int64_t>(r + 1) * ipow(p, r) +
                           2 * static_cast<std::int64_t>(r) * ipow(p, r - 1);
        if (r >= 2) out += static_cast<std::int64_t>(r - 1) * ipow(p, r - 2);
        return out;
    }
    if (r % 2 != 0) return 0;
    return ipow(p, r) + ipow(p, r - 2);
}

std::int64_t multiplicative(std::uint64_t m, std::int64_t (*pp)(std::uint64_t, unsigned)) {
    if (m == 0) throw InvalidArgument("argument must be positive");
    std::int64_t out = 1;
    for (const auto& [p, r] : factorize(m)) out *= pp(p, r);
    return out;
}

// Dirichlet convolution of integer sequences (1-indexed)
std::vector<std::int64_t> dirichlet_mul(const std::vector<std::int64_t>& a,
                                        const std::vector<std::int64_t>& b) {
    std::uint64_t n = a.size() - 1;
    std::vector<std::int64_t> out(n + 1, 0);
    for (std::uint64_t i = 1; i <= n; ++i) {
        if (a[i] == 0) continue;
        for (std::uint64_t j = 1; i * j <= n; ++j) out[i * j] += a[i] * b[j];
    }
    return out;
}

std::vector<std::int64_t> moebius_upto(std::uint64_t n) {
    std::vector<std::int64_t> mu(n + 1, 0);
    if (n >= 1) mu[1] = 1;
    const auto& spf = spf_table(std::max<std::uint64_t>(n, 2));
    for (std::uint64_t i = 2; i <= n; ++i) {
        std::uint64_t p = spf[i], q = i / p;
        mu[i] = (q % p == 0) ? 0 : -mu[q];
    }
    return mu;
}

}  // namespace

int chi(std::int64_t n) {
    if (n <= 0) throw InvalidArgument("chi is defined on positive integers");
    switch (n % 5) {
        case 0: return 0;
        case 1:
        case 4: return 1;
        default: return -1;
    }
}

CoeffSeq dedekind_zeta_K_coeffs(std::uint64_t n_max) {
    CoeffSeq seq;
    seq.label = "zeta_K";
    seq.ivar = CoeffSeq::IndexVar::m;
    seq.values.assign(n_max + 1, 0);
    for (std::uint64_t d = 1; d <= n_max; ++d) {
        int c = chi(static_cast<std::int64_t>(d));
        if (c == 0) continue;
        for (std::uint64_t n = d; n <= n_max; n += d) seq.values[n] += c;
    }
    return seq;
}

std::int64_t f_closed(std::uint64_t m) { return multiplicative(m, f_prime_power); }
std::int64_t fpr_closed(std::uint64_t m) { return multiplicative(m, fpr_prime_power); }

CoeffSeq f_via_convolution(std::uint64_t n_max) {
    CoeffSeq zk = dedekind_zeta_K_coeffs(n_max);
    std::vector<std::int64_t> shifted(n_max + 1, 0);
    for (std::uint64_t n = 1; n <= n_max; ++n)
        shifted[n] = zk.values[n] * static_cast<std::int64_t>(n);
    // inverse of the L(4s, chi) factor: mu(r) chi(r) supported on squares
    std::vector<std::int64_t> linv(n_max + 1, 0);
    auto mu = moebius_upto(isqrt_floor(Int(n_max)).get_ui());
    for (std::uint64_t r = 1; r * r <= n_max; ++r)
        linv[r * r] = mu[r] * chi(static_cast<std::int64_t>(r));

    CoeffSeq out;
    out.label = "D_A4 (index variable m, series in m^{2s})";
    out.ivar = CoeffSeq::IndexVar::m_squared;
    out.values = dirichlet_mul(dirichlet_mul(zk.values, shifted), linv);
    return out;
}

bool euler_factor_check(std::uint64_t n_max) {
    std::vector<std::int64_t> acc(n_max + 1, 0);
    acc[1] = 1;
    const auto& spf = spf_table(std::max<std::uint64_t>(n_max, 2));
    for (std::uint64_t p = 2; p <= n_max; ++p) {
        if (spf[p] != p) continue;  // not prime
        // local factor coefficients at p^e, in the series variable m^{2s}
        std::vector<std::int64_t> local = {1};
        std::uint64_t pe = 1;
        for (unsigned e = 1;; ++e) {
            if (pe > n_max / p) break;
            pe *= p;
            std::int64_t coeff;
            if (p == 5) {
                // 1 / ((1 - t)(1 - 5 t))
                coeff = (ipow(5, e + 1) - 1) / 4;
            } else if (chi(static_cast<std::int64_t>(p)) == 1) {
                // (1 + t) / ((1 - t)(1 - p t)^2): sum of (b+1) p^b over
                // a + b = e and over a + b = e - 1
                coeff = 0;
                for (unsigned b = 0; b <= e; ++b) {
                    coeff += static_cast<std::int64_t>(b + 1) * ipow(p, b);
                    if (b < e) coeff += static_cast<std::int64_t>(b + 1) * ipow(p, b);
                }
            } else if (e % 2 != 0) {
                coeff = 0;
            } else {
                // (1 + t^2) / ((1 - t^2)(1 - p^2 t^2)), at even exponents
                unsigned u = e / 2;
                coeff = 0;
                for (unsigned b = 0; b <= u; ++b) coeff += ipow(p, 2 * b);
                for (unsigned b = 0; b + 1 <= u; ++b) coeff += ipow(p, 2 * b);
            }
            local.push_back(coeff);
        }
        // multiply acc by the local factor
        std::vector<std::int64_t> next(n_max + 1, 0);
        for (std::uint64_t n = 1; n <= n_max; ++n) {
            if (acc[n] == 0) continue;
            std::uint64_t q = 1;
            for (unsigned e = 0; e < local.size() && n * q <= n_max; ++e, q *= p)
                next[n * q] += acc[n] * local[e];
        }
        acc.swap(next);
    }
    for (std::uint64_t m = 1; m <= n_max; ++m)
        if (acc[m] != f_closed(m)) return false;
    return true;
}

std::int64_t right_ideal_count(std::uint64_t m) {
    if (m == 0) throw InvalidArgument("right_ideal_count: m must be positive");
    CoeffSeq zk = dedekind_zeta_K_coeffs(m);
    std::int64_t out = 0;
    for (std::uint64_t d = 1; d <= m; ++d) {
        if (m % d != 0) continue;
        out += zk.values[d] * zk.values[m / d] * static_cast<std::int64_t>(m / d);
    }
    return out;
}

std::int64_t two_sided_ideal_count(std::uint64_t m) {
    if (m == 0) throw InvalidArgument("two_sided_ideal_count: m must be positive");
    std::int64_t out = 0;
    for (std::uint64_t d = 1; d <= m; ++d)
        if (m % d == 0) out += chi(static_cast<std::int64_t>(d));
    return out;
}

std::vector<std::uint64_t> possible_indices(std::uint64_t n_max) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t m = 1; m <= n_max; ++m)
        if (f_closed(m) > 0) out.push_back(m);
    return out;
}

Int summatory(std::uint64_t x) {
    if (x == 0) throw InvalidArgument("summatory: x must be positive");
    // multiplicative sieve: f(n) from f(n / p^r) * f(p^r) via smallest prime factors
    const auto& spf = spf_table(std::max<std::uint64_t>(x, 2));
    std::vector<std::int64_t> f(x + 1, 0);
    f[1] = 1;
    Int total(1);
    for (std::uint64_t n = 2; n <= x; ++n) {
        std::uint64_t p = spf[n], q = n, r = 0;
        while (q % p == 0) q /= p, ++r;
        f[n] = f[q] * f_prime_power(p, static_cast<unsigned>(r));
        total += f[n];
    }
    return total;
}

namespace {

// fixed-point value of (sqrt5 / 2) log(tau), scaled by 10^prec
Int rho_fixed(unsigned prec) {
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, prec);
    Int sqrt5 = isqrt_floor(5 * scale * scale);
    // log(tau) = 2 atanh(u) with u = (tau - 1)/(tau + 1) = sqrt5 - 2
    Int u = sqrt5 - 2 * scale;
    Int u2 = u * u / scale;
    Int term = u, acc(0);
    for (unsigned k = 0; term != 0; ++k) {
        acc += term / (2 * k + 1);
        term = term * u2 / scale;
    }
    Int log_tau = 2 * acc;
    return sqrt5 * log_tau / (2 * scale);
}

std::string fixed_to_decimal(const Int& value, unsigned prec, unsigned digits) {
    // round value / 10^prec to `digits` decimals
    internal_check(digits <= prec, "fixed_to_decimal: not enough precision");
    Int pow_keep;
    mpz_ui_pow_ui(pow_keep.get_mpz_t(), 10, prec - digits);
    Int rounded = (value + pow_keep / 2) / pow_keep;  // value >= 0 here
    Int pow_digits;
    mpz_ui_pow_ui(pow_digits.get_mpz_t(), 10, digits);
    Int whole = rounded / pow_digits, frac = rounded % pow_digits;
    std::string fs = frac.get_str();
    fs.insert(fs.begin(), digits - fs.size(), '0');
    return whole.get_str() + (digits ? "." + fs : "");
}

}  // namespace

std::string rho_decimal(unsigned digits) {
    if (digits == 0 || digits > 200) throw InvalidArgument("rho_decimal: digits out of range");
    unsigned prec = digits + 25;
    return fixed_to_decimal(rho_fixed(prec), prec, digits);
}

AsymptoticReport asymptotic_report(std::uint64_t x, unsigned digits) {
    AsymptoticReport rep;
    rep.x = x;
    rep.summatory_value = summatory(x);
    rep.rho = rho_decimal(digits);
    unsigned prec = digits + 25;
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, prec);
    Int rho_fix = rho_fixed(prec);
    Int xx(static_cast<unsigned long>(x));
    Int target_fix = rho_fix * xx * xx / 2;  // scaled by 10^prec
    rep.target = fixed_to_decimal(target_fix, prec, 2);
    // ratio = F(x) * 10^prec / target_fix, rendered with 6 decimals
    Int ratio_fix = rep.summatory_value * scale * 1000000 / target_fix;
    Int whole = ratio_fix / 1000000, frac = ratio_fix % 1000000;
    std::string fs = frac.get_str();
    fs.insert(fs.begin(), 6 - fs.size(), '0');
    rep.ratio = whole.get_str() + "." + fs;
    // 0.95 <= ratio <= 1.05 exactly: 19 * target <= 20 F(x) * 10^prec <= 21 * target
    Int lhs = 20 * rep.summatory_value * scale;
    rep.within_5_percent = (19 * target_fix <= lhs) && (lhs <= 21 * target_fix);
    return rep;
}

RelatedLattice related_lattice_from_name(const std::string& name) {
    if (name == "a1" || name == "A1") return RelatedLattice::A1;
    if (name == "a2" || name == "A2") return RelatedLattice::A2;
    if (name == "a3" || name == "A3" || name == "fcc") return RelatedLattice::A3;
    if (name == "z2" || name == "Z2" || name == "zsquare") return RelatedLattice::Zsquare;
    throw InvalidArgument("unknown lattice tag: " + name);
}

namespace {

// ideal counts by sieved divisor sums of the quadratic character mod 3 or 4
void character_ideal_counts(std::vector<std::int64_t>& values, int modulus) {
    std::uint64_t n_max = values.size() - 1;
    for (std::uint64_t d = 1; d <= n_max; ++d) {
        std::uint64_t v = d % static_cast<std::uint64_t>(modulus);
        int c = 0;
        if (modulus == 3) c = v == 1 ? 1 : (v == 2 ? -1 : 0);
        if (modulus == 4) c = v == 1 ? 1 : (v == 3 ? -1 : 0);
        if (c == 0) continue;
        for (std::uint64_t n = d; n <= n_max; n += d) values[n] += c;
    }
}

std::int64_t cubic_coeff(std::uint64_t j) {
    // multiplicative: 1 at powers of 2, (p^{r+1} + p^r - 2)/(p - 1) at odd p^r
    std::int64_t out = 1;
    for (const auto& [p, r] : factorize(j)) {
        if (p == 2) continue;
        out *= (ipow(p, r + 1) + ipow(p, r) - 2) / (static_cast<std::int64_t>(p) - 1);
    }
    return out;
}

}  // namespace

CoeffSeq related_series(RelatedLattice lattice, std::uint64_t n_max) {
    CoeffSeq seq;
    seq.ivar = CoeffSeq::IndexVar::m;
    seq.values.assign(n_max + 1, 0);
    switch (lattice) {
        case RelatedLattice::A1:
            seq.label = "D_A1 = zeta(s)";
            for (std::uint64_t n = 1; n <= n_max; ++n) seq.values[n] = 1;
            break;
        case RelatedLattice::A2:
            seq.label = "D_A2 = zeta_{Q(xi3)}(s)";
            character_ideal_counts(seq.values, 3);
            break;
        case RelatedLattice::Zsquare:
            seq.label = "D_Z2 = zeta_{Q(i)}(s)";
            character_ideal_counts(seq.values, 4);
            break;
        case RelatedLattice::A3:
            seq.label = "D_A3 = zeta(3s) Phi_cub(3s)";
            for (std::uint64_t j = 1; j * j * j <= n_max; ++j)
                seq.values[j * j * j] = cubic_coeff(j);
            break;
    }
    return seq;
}

}  // namespace a4ssl
