// Acceptance suite: runs every criterion at its stated tolerance and prints
// one PASS/FAIL line each. Exit status is the number of failed criteria.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "counting.hpp"
#include "icosian.hpp"
#include "oracle.hpp"
#include "sslgen.hpp"
#include "test_util.hpp"

using namespace a4ssl;
using namespace a4ssl_test;

namespace {

int failures = 0;

// time_budget_seconds <= 0 means no runtime requirement
void run(int number, const std::string& name, double time_budget_seconds,
         const std::function<bool()>& body) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (exception: ") + e.what() + ")";
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && time_budget_seconds > 0 && seconds > time_budget_seconds) {
        ok = false;
        note = " (over the runtime budget)";
    }
    std::printf("criterion %2d [%s]: %s (%.2fs)%s\n", number, name.c_str(),
                ok ? "PASS" : "FAIL", seconds, note.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

bool expect(bool cond, const char* what) {
    if (!cond) std::printf("    check failed: %s\n", what);
    return cond;
}

}  // namespace

int main() {
    run(1, "coefficient tables", 1.0, [] {
        const std::uint64_t ms[] = {1, 4, 5, 9, 11, 16, 19, 20, 25, 29, 31, 36};
        const std::int64_t fs[] = {1, 6, 6, 11, 24, 26, 40, 36, 31, 60, 64, 66};
        const std::int64_t fprs[] = {1, 5, 6, 10, 24, 20, 40, 30, 30, 60, 64, 50};
        bool ok = true;
        for (int idx = 0; idx < 12; ++idx) {
            ok &= expect(f_closed(ms[idx]) == fs[idx], "f(m) table value");
            ok &= expect(fpr_closed(ms[idx]) == fprs[idx], "f_pr(m) table value");
        }
        return ok;
    });

    run(2, "three-way agreement", 420.0, [] {
        bool ok = true;
        for (std::uint64_t m = 1; m <= 31; ++m) {
            if (f_closed(m) == 0) {
                ok &= expect(enumerate_ssls(Int(static_cast<long>(m)), false).empty(),
                             "impossible index must enumerate empty");
                continue;
            }
            size_t all = enumerate_ssls(Int(static_cast<long>(m)), false).size();
            size_t prim = enumerate_ssls(Int(static_cast<long>(m)), true).size();
            ok &= expect(all == static_cast<size_t>(f_closed(m)), "enumeration count vs f");
            ok &= expect(prim == static_cast<size_t>(fpr_closed(m)),
                         "primitive enumeration count vs f_pr");
        }
        GramMatrix a4 = gram_preset("a4");
        for (long m : {1L, 4L, 5L}) {
            BruteResult res = brute_similar(a4, Int(m) * Int(m));
            ok &= expect(res.total == f_closed(m), "oracle total vs f");
            ok &= expect(res.primitive == fpr_closed(m), "oracle primitive vs f_pr");
        }
        return ok;
    });

    run(3, "index 16 and 81 structure", 0, [] {
        bool ok = true;
        auto sixteen = enumerate_ssls(4, false);
        ok &= expect(sixteen.size() == 6, "6 sublattices of index 16");
        int scaled = 0;
        for (const SslRecord& rec : sixteen)
            if (rec.scale > 1) {
                ++scaled;
                ok &= expect(rec.scale == 2, "the imprimitive record is 2L");
                for (int r = 0; r < 4; ++r)
                    for (int c = 0; c < 4; ++c)
                        ok &= expect(rec.matrix.z[r][c] == (r == c ? 2 : 0), "2L matrix");
            }
        ok &= expect(scaled == 1, "exactly one scaled record at index 16");

        auto eightyone = enumerate_ssls(9, false);
        ok &= expect(eightyone.size() == 11, "11 sublattices of index 81");
        int imprimitive = 0;
        for (const SslRecord& rec : eightyone)
            if (rec.scale > 1) {
                ++imprimitive;
                for (int r = 0; r < 4; ++r)
                    for (int c = 0; c < 4; ++c)
                        ok &= expect(rec.matrix.z[r][c] == (r == c ? 3 : 0), "3L matrix");
            }
        ok &= expect(imprimitive == 1, "exactly one imprimitive record at index 81");
        return ok;
    });

    run(4, "possible index set", 0, [] {
        bool ok = true;
        auto idx = possible_indices(100);
        std::vector<std::uint64_t> brute;
        for (std::uint64_t m = 1; m <= 100; ++m)
            if (norm_form_represents(static_cast<long long>(m))) brute.push_back(m);
        ok &= expect(idx == brute, "f(m) > 0 set equals the norm-form set");
        std::vector<std::uint64_t> head(idx.begin(),
                                        idx.begin() + std::min<size_t>(12, idx.size()));
        ok &= expect(head == std::vector<std::uint64_t>{1, 4, 5, 9, 11, 16, 19, 20, 25, 29, 31,
                                                        36},
                     "first twelve possible indices");
        return ok;
    });

    run(5, "structure theorems", 60.0, [] {
        bool ok = true;
        ok &= expect(roots_H4().size() == 120, "120 H4 roots");
        ok &= expect(roots_A4().size() == 20, "20 A4 roots");
        ok &= expect(roots_H3().size() == 30, "30 H3 roots");
        ok &= expect(theta_image_check(), "theta is 6-to-1 onto the A4 roots");

        auto maps = classify_twist_maps();
        ok &= expect(maps.size() == 10, "10 twist maps");
        KMat4 lg = lattice_gram(basis_L());
        for (const TwistMap& d : maps) {
            KMat4 g = lattice_gram(twist_fixed_lattice(d));
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c)
                    ok &= expect(g[r][c] == lg[r][c], "fixed lattice Gram is A4");
        }

        SymmetryReport rep = symmetry_group_structure();
        ok &= expect(rep.z_cubed_is_minus_one, "z^3 = -1");
        ok &= expect(rep.group_order == 120, "conjugation/twist group order 120");
        ok &= expect(rep.has_order_four_element, "order-4 element present");
        ok &= expect(rep.orbit_size == 60, "60 congruent copies of L");
        ok &= expect(rep.copies_containing_one == 10, "10 copies contain 1");
        return ok;
    });

    run(6, "module index chains", 0, [] {
        bool ok = true;
        ok &= expect(z_module_index(basis_L_tau(), basis_I()) == 5, "[I : L[tau]] = 5");
        ok &= expect(z_module_index(basis_scaled(basis_L_tau(), 2), basis_L_tau()) == 256,
                     "first chain: 256");
        ok &= expect(z_module_index(basis_L_tau(), basis_I()) == 5, "first chain: 5");
        ok &= expect(z_module_index(basis_I(), basis_L_tau_dual()) == 5, "first chain: 5 (dual)");
        ok &= expect(z_module_index(basis_scaled(basis_L_tau(), 2), basis_scaled(basis_I(), 2)) ==
                         5,
                     "second chain: 5");
        ok &= expect(z_module_index(basis_scaled(basis_I(), 2), basis_calL()) == 16,
                     "second chain: 16");
        ok &= expect(z_module_index(basis_calL(), basis_I()) == 16, "second chain: 16 (top)");
        return ok;
    });

    run(7, "identity suite to 10^4", 30.0, [] {
        bool ok = true;
        const std::uint64_t n_max = 10000;
        CoeffSeq conv = f_via_convolution(n_max);
        for (std::uint64_t m = 1; m <= n_max && ok; ++m)
            ok &= expect(conv.values[m] == f_closed(m), "convolution route");
        ok &= expect(euler_factor_check(n_max), "euler product route");
        for (std::uint64_t m = 1; m <= n_max && ok; ++m) {
            std::int64_t sum = 0;
            for (std::uint64_t d = 1; d * d <= m; ++d)
                if (m % (d * d) == 0) sum += fpr_closed(m / (d * d));
            ok &= expect(f_closed(m) == sum, "f = sum of scaled f_pr");
        }
        for (std::uint64_t m = 2; m * m <= n_max && ok; ++m)
            for (std::uint64_t n = m + 1; m * n <= n_max && ok; ++n) {
                if (std::gcd(m, n) != 1) continue;
                std::int64_t product = f_closed(m) * f_closed(n);
                ok &= expect(f_closed(m * n) == product, "multiplicativity");
                ok &= expect(f_closed(m * n) >= product, "super-multiplicativity");
            }
        return ok;
    });

    run(8, "asymptotics", 30.0, [] {
        bool ok = expect(rho_decimal(6) == "0.538011", "rho to six decimals");
        AsymptoticReport rep = asymptotic_report(100000);
        std::printf("    F(1e5) = %s, ratio = %s\n", rep.summatory_value.get_str().c_str(),
                    rep.ratio.c_str());
        ok &= expect(rep.within_5_percent, "F(1e5) within 5% of rho x^2 / 2");
        return ok;
    });

    run(9, "related lattices", 0, [] {
        bool ok = true;
        GramMatrix a2 = gram_preset("a2");
        CoeffSeq series = related_series(RelatedLattice::A2, 13);
        for (long n = 1; n <= 13; ++n)
            ok &= expect(brute_similar(a2, n).total == series.values[n],
                         "A2 oracle vs Eisenstein ideal count");
        GramMatrix fcc = gram_preset("fcc");
        CoeffSeq a3 = related_series(RelatedLattice::A3, 8);
        ok &= expect(brute_similar(fcc, 8).total == a3.values[8], "A3 oracle at index 8");
        BruteResult primal = brute_similar(gram_preset("a4"), 16);
        BruteResult dual = brute_similar(gram_preset("a4dual"), 16);
        ok &= expect(primal.total == dual.total && primal.primitive == dual.primitive,
                     "dual lattice counts at index 16");
        return ok;
    });

    run(10, "algebraic property pack", 0, [] {
        bool ok = true;
        Rng rng;
        for (int trial = 0; trial < 100 && ok; ++trial)
            ok &= expect(twist_laws_check(rng.quat(), rng.quat(), rng.kscalar()),
                         "twist map laws");
        for (int trial = 0; trial < 100 && ok; ++trial) {
            Quat p = rng.icosian_nonzero().quat();
            Rat alpha(static_cast<long>(rng.pick(-3, 3)), static_cast<unsigned long>(rng.pick(1, 3)));
            alpha.canonicalize();
            auto closed = similarity_char_poly(alpha, p);
            auto direct = char_poly_oracle(rat_mat4(similarity_matrix(alpha, p)));
            for (int k = 0; k < 5; ++k)
                ok &= expect(closed[k] == direct[k], "char poly closed form vs direct");
        }
        const KScalar sqrt5 = KScalar::tau() + KScalar::tau() - KScalar(1);
        for (const Quat& e : icosian_basis())
            ok &= expect(span_contains(basis_calL(), e * KScalar(2)), "2I inside calL");
        for (const Quat& v : basis_calL().vecs)
            ok &= expect(span_contains(basis_L_tau(), v * sqrt5), "sqrt5 calL inside L[tau]");
        ok &= expect(icosians_with_reduced_norm(GoldenInt(1)).size() == 120,
                     "unit sphere of the order has 120 points");
        return ok;
    });

    std::printf("%s (%d criteria failed)\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
    return failures;
}
