#include "sslgen.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "shortvec.hpp"

namespace a4ssl {

namespace {

// the 8 Z-module generators of the icosian ring: e1..e4, tau*e1..tau*e4
const std::array<Quat, 8>& order_z_basis() {
    static const std::array<Quat, 8> basis = [] {
        std::array<Quat, 8> out;
        for (int idx = 0; idx < 4; ++idx) {
            out[idx] = icosian_basis()[idx];
            out[4 + idx] = icosian_basis()[idx] * KScalar::tau();
        }
        return out;
    }();
    return basis;
}

// Gram of the positive definite rank-8 form Q(x) = Tr(nr(x)) on that basis
const Mat<Rat>& trace_form_gram() {
    static const Mat<Rat> gram = [] {
        const auto& g = order_z_basis();
        Mat<Rat> a(8, std::vector<Rat>(8));
        for (int r = 0; r < 8; ++r) {
            for (int c = 0; c < 8; ++c) {
                KScalar t = (g[r] * g[c].bar()).tr();  // tr(g_r conj(g_c)) in Z[tau]
                a[r][c] = t.trace_to_rat() / 2;
                if (r == c) a[r][c] = g[r].nr().trace_to_rat();
            }
        }
        return a;
    }();
    return gram;
}

// nr(sum v_i g_i) over Z[tau]: diagonal nr(g_i) and cross terms tr(g_i conj(g_j))
struct NormForm {
    std::array<GoldenInt, 8> diag;
    std::array<std::array<GoldenInt, 8>, 8> cross;
};

const NormForm& norm_form() {
    static const NormForm form = [] {
        NormForm f;
        const auto& g = order_z_basis();
        for (int r = 0; r < 8; ++r) {
            KScalar n = g[r].nr();
            internal_check(n.is_golden_integer(), "order basis norms must be integral");
            f.diag[r] = n.num();
            for (int c = r + 1; c < 8; ++c) {
                KScalar t = (g[r] * g[c].bar()).tr();
                internal_check(t.is_golden_integer(), "order trace form must be integral");
                f.cross[r][c] = t.num();
            }
        }
        return f;
    }();
    return form;
}

GoldenInt norm_of_coords(const std::vector<long long>& v) {
    const NormForm& f = norm_form();
    GoldenInt acc;
    for (int r = 0; r < 8; ++r) {
        if (v[r] == 0) continue;
        Int vr(static_cast<long>(v[r]));
        acc += f.diag[r] * GoldenInt(vr * vr, 0);
        for (int c = r + 1; c < 8; ++c) {
            if (v[c] == 0) continue;
            acc += f.cross[r][c] * GoldenInt(vr * static_cast<long>(v[c]), 0);
        }
    }
    return acc;
}

Icosian icosian_from_z8(const std::vector<long long>& v) {
    std::array<GoldenInt, 4> coords;
    for (int idx = 0; idx < 4; ++idx)
        coords[idx] = GoldenInt(Int(static_cast<long>(v[idx])), Int(static_cast<long>(v[4 + idx])));
    return Icosian::from_coords(coords);
}

const std::vector<Icosian>& unit_sphere_icosians() {
    static const std::vector<Icosian> units = [] {
        std::vector<Icosian> out;
        for (const Quat& r : roots_H4()) out.push_back(Icosian::from_quat(r));
        return out;
    }();
    return units;
}

}  // namespace

std::vector<Icosian> icosians_with_reduced_norm(const GoldenInt& alpha) {
    if (!alpha.is_totally_positive())
        throw InvalidNorm("reduced norms of nonzero icosians are totally positive");
    Rat bound(alpha.trace());
    std::vector<Icosian> out;
    enumerate_short_vectors(trace_form_gram(), bound,
                            [&](const std::vector<long long>& v, const Rat&) {
                                if (norm_of_coords(v) != alpha) return;
                                Icosian x = icosian_from_z8(v);
                                out.push_back(-x);
                                out.push_back(std::move(x));
                            });
    std::sort(out.begin(), out.end(), icosian_less);
    return out;
}

std::vector<Icosian> right_ideal_classes(const Int& m, bool primitive_only) {
    if (m < 1) throw InvalidArgument("right_ideal_classes: m must be positive");
    std::vector<GoldenInt> reps = norm_representatives(m);
    std::vector<std::vector<Icosian>> per_alpha(reps.size());

    auto run_alpha = [&](size_t ai) {
        std::vector<Icosian> all = icosians_with_reduced_norm(reps[ai]);
        std::set<std::array<Int, 8>> pool;
        for (const Icosian& x : all) pool.insert(x.z_coords());
        internal_check(pool.size() == all.size(), "short-vector enumeration produced duplicates");
        std::vector<Icosian> classes;
        while (!pool.empty()) {
            // the lexicographically least remaining element is the canonical generator
            std::array<Int, 8> least = *pool.begin();
            std::array<GoldenInt, 4> coords;
            for (int idx = 0; idx < 4; ++idx)
                coords[idx] = GoldenInt(least[2 * idx], least[2 * idx + 1]);
            Icosian gen = Icosian::from_coords(coords);
            for (const Icosian& unit : unit_sphere_icosians()) {
                size_t erased = pool.erase((gen * unit).z_coords());
                internal_check(erased == 1, "unit orbit left the enumerated set");
            }
            classes.push_back(std::move(gen));
        }
        internal_check(all.size() == 120 * classes.size(),
                       "unit orbits must have exactly 120 elements");
        per_alpha[ai] = std::move(classes);
    };

    if (reps.size() > 1 && worker_count() > 1) {
        std::vector<std::thread> threads;
        for (size_t ai = 0; ai < reps.size(); ++ai) threads.emplace_back(run_alpha, ai);
        for (auto& t : threads) t.join();
    } else {
        for (size_t ai = 0; ai < reps.size(); ++ai) run_alpha(ai);
    }

    std::vector<Icosian> out;
    for (auto& chunk : per_alpha)
        for (Icosian& x : chunk) {
            if (primitive_only && !x.is_primitive()) continue;
            out.push_back(std::move(x));
        }
    return out;
}

const IntMat& a4_gram_integral() {
    static const IntMat gram = [] {
        KMat4 g = lattice_gram(basis_L());
        IntMat out(4, std::vector<Int>(4));
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) {
                KScalar doubled = g[r][c] + g[r][c];
                internal_check(doubled.is_rational() && doubled.is_golden_integer(),
                               "doubled L-Gram must be integral");
                out[r][c] = doubled.num().a();
            }
        // the standard A4 Gram with roots of squared length 2
        const long expected[4][4] = {
            {2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}};
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
                internal_check(out[r][c] == expected[r][c], "L-basis Gram mismatch");
        return out;
    }();
    return gram;
}

IntMat similarity_image_matrix(const Icosian& p, const Int& d) {
    if (p.is_zero()) throw InvalidArgument("similarity image: p must be nonzero");
    if (d < 1) throw InvalidArgument("similarity image: scale must be positive");
    const Quat pt = p.quat().twist();
    IntMat z(4, std::vector<Int>(4));
    for (int col = 0; col < 4; ++col) {
        Quat image = p.quat() * v_plus_basis()[col] * pt;
        auto coords = v_plus_coordinates(image);
        for (int row = 0; row < 4; ++row) {
            if (!coords[row].is_golden_integer() || coords[row].num().b() != 0)
                throw InternalError("p L twist(p) must be an integral sublattice of L");
            z[row][col] = coords[row].num().a() * d;
        }
    }
    return z;
}

SslRecord ssl_matrix(const Icosian& p, const Int& d) {
    SslRecord rec;
    rec.matrix.z = hnf_square(similarity_image_matrix(p, d));
    rec.matrix.index = mat_det(rec.matrix.z);
    rec.generator = p;
    rec.scale = d;
    rec.m = d * d * abs(p.nr_golden().norm());
    internal_check(rec.matrix.index == rec.m * rec.m, "sublattice index must equal m^2");
    return rec;
}

namespace {

bool record_less(const SslRecord& a, const SslRecord& b) {
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            if (a.matrix.z[r][c] != b.matrix.z[r][c]) return a.matrix.z[r][c] < b.matrix.z[r][c];
    return false;
}

bool record_equal_matrix(const SslRecord& a, const SslRecord& b) {
    return a.matrix.z == b.matrix.z;
}

std::vector<SslRecord> primitive_records(const Int& m) {
    std::vector<SslRecord> out;
    for (const Icosian& p : right_ideal_classes(m, true)) out.push_back(ssl_matrix(p, 1));
    std::sort(out.begin(), out.end(), record_less);
    for (size_t idx = 1; idx < out.size(); ++idx)
        internal_check(!record_equal_matrix(out[idx - 1], out[idx]),
                       "distinct primitive ideals produced equal sublattices");
    return out;
}

}  // namespace

std::vector<SslRecord> enumerate_ssls(const Int& m, bool primitive_only,
                                      const EnumerationBudget& budget) {
    if (m < 1) throw InvalidArgument("enumerate_ssls: m must be positive");
    if (m > budget.max_m)
        throw BudgetExceeded("enumerate_ssls: m exceeds the enumeration budget", 4,
                             m.get_ui(), 0, budget.max_m.get_ui());
    if (primitive_only) return primitive_records(m);

    std::vector<SslRecord> out;
    for (Int d = 1; d * d <= m; ++d) {
        if (m % (d * d) != 0) continue;
        for (SslRecord rec : primitive_records(m / (d * d))) {
            if (d > 1) {
                for (auto& row : rec.matrix.z)
                    for (Int& v : row) v *= d;
                rec.matrix.index *= d * d * d * d;
                rec.scale = d;
                rec.m = m;
            }
            out.push_back(std::move(rec));
        }
    }
    std::sort(out.begin(), out.end(), record_less);
    for (size_t idx = 1; idx < out.size(); ++idx)
        internal_check(!record_equal_matrix(out[idx - 1], out[idx]),
                       "scaled records must not collide");
    return out;
}

SslVerifyResult verify_ssl(const SslRecord& rec) {
    SslVerifyResult res{false, SslVerifyStatus::ok, false};
    Int g(0);
    for (const auto& row : rec.matrix.z)
        for (const Int& v : row) g = int_gcd(g, abs(v));
    res.primitive = (g == 1);

    if (mat_det(rec.matrix.z) != rec.m * rec.m || rec.matrix.index != rec.m * rec.m) {
        res.status = SslVerifyStatus::bad_determinant;
        return res;
    }
    // the similarity image scales every inner product by m
    IntMat image = similarity_image_matrix(rec.generator, rec.scale);
    const IntMat& gram = a4_gram_integral();
    IntMat lhs = mat_mul_int(mat_mul_int(mat_transpose(image), gram), image);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            if (lhs[r][c] != rec.m * gram[r][c]) {
                res.status = SslVerifyStatus::gram_mismatch;
                return res;
            }
    // the stored matrix must describe exactly that sublattice
    if (hnf_square(image) != rec.matrix.z) {
        res.status = SslVerifyStatus::hnf_mismatch;
        return res;
    }
    bool claims_primitive = (rec.scale == 1);
    if (claims_primitive != res.primitive) {
        res.status = SslVerifyStatus::primitivity_mismatch;
        return res;
    }
    res.ok = true;
    return res;
}

}  // namespace a4ssl
