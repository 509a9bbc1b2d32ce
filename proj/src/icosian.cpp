#include "icosian.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hnf.hpp"
#include "linalg.hpp"

namespace a4ssl {

namespace {

const KScalar kHalf(GoldenInt(1), Int(2));
const KScalar kTau = KScalar::tau();

Mat<KScalar> basis_matrix(const std::array<Quat, 4>& basis) {
    Mat<KScalar> m(4, std::vector<KScalar>(4));
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) m[r][c] = basis[c][r];
    return m;
}

// coordinates of x on the order basis, cached exact inverse
std::array<KScalar, 4> order_coords(const Quat& x) {
    static const Mat<KScalar> inv = inverse(basis_matrix(icosian_basis()));
    std::array<KScalar, 4> out;
    for (int r = 0; r < 4; ++r) {
        KScalar acc;
        for (int c = 0; c < 4; ++c) acc += inv[r][c] * x[c];
        out[r] = acc;
    }
    return out;
}

}  // namespace

const std::array<Quat, 4>& icosian_basis() {
    static const std::array<Quat, 4> basis = {
        Quat::one(),
        Quat::i(),
        Quat(kHalf, kHalf, kHalf, kHalf),
        Quat((KScalar(1) - kTau) * kHalf, kTau * kHalf, 0, kHalf),
    };
    return basis;
}

std::optional<Icosian> Icosian::try_from_quat(const Quat& q) {
    auto coords = order_coords(q);
    Icosian out;
    out.quat_ = q;
    for (int idx = 0; idx < 4; ++idx) {
        if (!coords[idx].is_golden_integer()) return std::nullopt;
        out.coords_[idx] = coords[idx].num();
    }
    return out;
}

Icosian Icosian::from_quat(const Quat& q) {
    auto r = try_from_quat(q);
    if (!r) throw NotInOrder();
    return *r;
}

Icosian Icosian::from_coords(const std::array<GoldenInt, 4>& coords) {
    Icosian out;
    out.coords_ = coords;
    Quat q;
    for (int idx = 0; idx < 4; ++idx) q += icosian_basis()[idx] * KScalar(coords[idx]);
    out.quat_ = q;
    return out;
}

std::array<Int, 8> Icosian::z_coords() const {
    std::array<Int, 8> out;
    for (int idx = 0; idx < 4; ++idx) {
        out[2 * idx] = coords_[idx].a();
        out[2 * idx + 1] = coords_[idx].b();
    }
    return out;
}

Icosian Icosian::operator-() const {
    Icosian out;
    out.quat_ = -quat_;
    for (int idx = 0; idx < 4; ++idx) out.coords_[idx] = -coords_[idx];
    return out;
}

GoldenInt Icosian::content() const {
    return a4ssl::content(std::span<const GoldenInt>(coords_.data(), 4));
}

bool Icosian::is_unit() const {
    if (is_zero()) return false;
    Int n = nr_golden().norm();
    return n == 1 || n == -1;
}

GoldenInt Icosian::nr_golden() const {
    KScalar n = quat_.nr();
    internal_check(n.is_golden_integer(), "icosian reduced norm must lie in Z[tau]");
    return n.num();
}

bool icosian_less(const Icosian& x, const Icosian& y) {
    return x.z_coords() < y.z_coords();
}

LatticeBasis basis_L() {
    return LatticeBasis{v_plus_basis(), LatticeBasis::Span::Z, "L"};
}

LatticeBasis basis_L_tau() {
    return LatticeBasis{v_plus_basis(), LatticeBasis::Span::ZTau, "L[tau]"};
}

LatticeBasis basis_calL() {
    return LatticeBasis{{Quat::one(), Quat::i(), Quat::j(), Quat::k()},
                        LatticeBasis::Span::ZTau,
                        "calL"};
}

LatticeBasis basis_I() {
    return LatticeBasis{icosian_basis(), LatticeBasis::Span::ZTau, "I"};
}

LatticeBasis basis_L_tau_dual() {
    // dual over Z[tau] with respect to the integral form tr(x * bar(y))
    const auto& b = v_plus_basis();
    Mat<KScalar> f(4, std::vector<KScalar>(4));
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) f[r][c] = (b[r] * b[c].bar()).tr();
    Mat<KScalar> g = inverse(f);
    std::array<Quat, 4> vecs;
    for (int r = 0; r < 4; ++r) {
        Quat acc;
        for (int c = 0; c < 4; ++c) acc += b[c] * g[r][c];
        vecs[r] = acc;
    }
    return LatticeBasis{vecs, LatticeBasis::Span::ZTau, "L[tau]*"};
}

LatticeBasis basis_scaled(const LatticeBasis& b, const Int& factor) {
    LatticeBasis out = b;
    KScalar s{GoldenInt(factor, 0)};
    for (auto& v : out.vecs) v = v * s;
    out.name = factor.get_str() + "*" + b.name;
    return out;
}

KMat4 lattice_gram(const LatticeBasis& b) {
    KMat4 g;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) g[r][c] = (b.vecs[r] * b.vecs[c].bar()).tr() * kHalf;
    return g;
}

namespace {

std::vector<Rat> quat_to_q8(const Quat& x) {
    std::vector<Rat> out(8);
    for (int idx = 0; idx < 4; ++idx) {
        out[2 * idx] = x[idx].rat_part();
        out[2 * idx + 1] = x[idx].tau_part();
    }
    return out;
}

Mat<Rat> rank8_generator_matrix(const LatticeBasis& b) {
    internal_check(b.span == LatticeBasis::Span::ZTau,
                   "rank-8 index computation requires Z[tau]-module bases");
    Mat<Rat> m(8, std::vector<Rat>(8));
    for (int g = 0; g < 4; ++g) {
        auto e1 = quat_to_q8(b.vecs[g]);
        auto e2 = quat_to_q8(b.vecs[g] * kTau);
        for (int r = 0; r < 8; ++r) {
            m[r][g] = e1[r];
            m[r][4 + g] = e2[r];
        }
    }
    return m;
}

}  // namespace

Int z_module_index(const LatticeBasis& sub, const LatticeBasis& super) {
    Mat<Rat> s = rank8_generator_matrix(super);
    Mat<Rat> b = rank8_generator_matrix(sub);
    Mat<Rat> x = mat_mul(inverse(s), b);
    for (const auto& row : x)
        for (const Rat& v : row)
            if (v.get_den() != 1) throw NotASubmodule();
    Rat d = determinant(x);
    internal_check(d != 0, "z_module_index: degenerate submodule");
    Int out(abs(d.get_num()));
    return out;
}

bool span_contains(const LatticeBasis& b, const Quat& x) {
    Mat<KScalar> m = basis_matrix(b.vecs);
    std::vector<KScalar> rhs = {x[0], x[1], x[2], x[3]};
    std::vector<KScalar> coords = solve_square(m, rhs);
    for (const KScalar& c : coords) {
        if (!c.is_golden_integer()) return false;
        if (b.span == LatticeBasis::Span::Z && c.num().b() != 0) return false;
    }
    return true;
}

namespace {

std::vector<std::array<int, 4>> even_permutations() {
    std::array<int, 4> p = {0, 1, 2, 3};
    std::vector<std::array<int, 4>> out;
    do {
        int inversions = 0;
        for (int x = 0; x < 4; ++x)
            for (int y = x + 1; y < 4; ++y)
                if (p[x] > p[y]) ++inversions;
        if (inversions % 2 == 0) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

void sort_dedupe(std::vector<Quat>& v) {
    std::sort(v.begin(), v.end(), quat_less);
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

const std::vector<Quat>& roots_H4() {
    static const std::vector<Quat> roots = [] {
        std::vector<Quat> seeds;
        seeds.emplace_back(Quat::one());
        seeds.emplace_back(-Quat::one());
        for (int mask = 0; mask < 16; ++mask) {
            Quat q;
            for (int idx = 0; idx < 4; ++idx) q[idx] = (mask >> idx) & 1 ? -kHalf : kHalf;
            seeds.push_back(q);
        }
        const KScalar tp = kTau.conj() * kHalf;  // tau'/2
        const KScalar t = kTau * kHalf;
        for (int mask = 0; mask < 8; ++mask) {
            Quat q(tp, t, 0, kHalf);
            if (mask & 1) q[0] = -q[0];
            if (mask & 2) q[1] = -q[1];
            if (mask & 4) q[3] = -q[3];
            seeds.push_back(q);
        }
        std::vector<Quat> all;
        for (const auto& perm : even_permutations()) {
            for (const Quat& s : seeds) {
                Quat q;
                for (int idx = 0; idx < 4; ++idx) q[perm[idx]] = s[idx];
                all.push_back(q);
            }
        }
        sort_dedupe(all);
        internal_check(all.size() == 120, "H4 root system must have 120 elements");
        return all;
    }();
    return roots;
}

const std::vector<Quat>& roots_A4() {
    static const std::vector<Quat> roots = [] {
        std::vector<Quat> out;
        for (const Quat& r : roots_H4())
            if (r.twist() == r) out.push_back(r);
        internal_check(out.size() == 20, "A4 root system must have 20 elements");
        return out;
    }();
    return roots;
}

const std::vector<Quat>& roots_H3() {
    static const std::vector<Quat> roots = [] {
        std::vector<Quat> out;
        for (const Quat& r : roots_H4())
            if (r[0].is_zero()) out.push_back(r);
        internal_check(out.size() == 30, "H3 root system must have 30 elements");
        return out;
    }();
    return roots;
}

bool is_twist_fixed_in_L(const Quat& x) { return x.twist() == x; }

LatticeBasis fixed_point_lattice() { return basis_L(); }

Icosian theta(const Icosian& x) {
    Icosian out = Icosian::from_quat(x.quat() * x.quat().twist());
    internal_check(is_twist_fixed_in_L(out.quat()), "theta image must be twist-fixed");
    return out;
}

const std::vector<Quat>& theta_fibre_group() {
    static const std::vector<Quat> fibre = [] {
        std::vector<Quat> out;
        for (const Quat& r : roots_H4())
            if (r * r.twist() == Quat::one()) out.push_back(r);
        internal_check(out.size() == 6, "theta fibre over 1 must have 6 elements");
        return out;
    }();
    return fibre;
}

bool theta_image_check() {
    std::map<std::string, int> hits;
    for (const Quat& r : roots_H4()) {
        Quat img = r * r.twist();
        hits[img.str()] += 1;
    }
    if (hits.size() != 20) return false;
    for (const auto& [key, count] : hits)
        if (count != 6) return false;
    std::set<std::string> a4;
    for (const Quat& r : roots_A4()) a4.insert(r.str());
    for (const auto& [key, count] : hits)
        if (!a4.count(key)) return false;
    return true;
}

Quat TwistMap::apply(const Quat& x) const {
    return root_a * x.twist() * root_a.inverse();
}

namespace {

bool is_positive_root(const Quat& r) {
    for (int idx = 0; idx < 4; ++idx) {
        int s = r[idx].sign_embedding(false);
        if (s != 0) return s > 0;
    }
    return false;
}

bool maps_agree_on_order_basis(const TwistMap& d1, const TwistMap& d2) {
    for (const Quat& e : icosian_basis())
        if (d1.apply(e) != d2.apply(e)) return false;
    return true;
}

}  // namespace

std::vector<TwistMap> classify_twist_maps() {
    static const std::vector<TwistMap> maps = [] {
        std::vector<TwistMap> out;
        for (const Quat& a : roots_A4()) {
            if (!is_positive_root(a)) continue;
            Quat eps;
            bool found = false;
            for (const Quat& e : roots_H4()) {
                if (e * e.twist() == a) {
                    eps = e;
                    found = true;
                    break;  // roots_H4 is canonically ordered, first hit is the witness
                }
            }
            internal_check(found, "every positive root must be a theta image");
            out.push_back(TwistMap{a, eps});
        }
        internal_check(out.size() == 10, "there must be exactly 10 twist maps");
        for (size_t x = 0; x < out.size(); ++x) {
            for (const Quat& e : icosian_basis()) {
                internal_check(out[x].apply(out[x].apply(e)) == e, "twist map must be an involution");
                internal_check(Icosian::try_from_quat(out[x].apply(e)).has_value(),
                               "twist map must preserve the icosian ring");
            }
            for (size_t y = x + 1; y < out.size(); ++y)
                internal_check(!maps_agree_on_order_basis(out[x], out[y]),
                               "twist maps must be pairwise distinct");
        }
        return out;
    }();
    return maps;
}

LatticeBasis twist_fixed_lattice(const TwistMap& d) {
    Quat eps_inv = d.witness_eps.inverse();
    LatticeBasis out;
    out.span = LatticeBasis::Span::Z;
    out.name = "T_eps(L)";
    const auto& lb = v_plus_basis();
    for (int idx = 0; idx < 4; ++idx) {
        out.vecs[idx] = d.witness_eps * lb[idx] * eps_inv;
        internal_check(d.apply(out.vecs[idx]) == out.vecs[idx],
                       "conjugated basis must be fixed by the twist map");
    }
    return out;
}

namespace {

// deterministic normalization of a nonzero icosian unit determined up to
// central units: strip the content, balance the tau-power of the reduced
// norm, fix the leading sign
Quat canonicalize_unit_witness(const Quat& q_in) {
    // clear denominators
    Int den(1);
    for (int idx = 0; idx < 4; ++idx)
        den = den / int_gcd(den, q_in[idx].den()) * q_in[idx].den();
    Icosian p = Icosian::from_quat(q_in * KScalar(GoldenInt(den, 0)));
    // raw gcd of the coordinates (any associate), then divide it out
    GoldenInt g;
    for (const GoldenInt& c : p.coords()) {
        if (c.is_zero()) continue;
        GoldenInt a = g, b = c;
        while (!b.is_zero()) {
            auto qr = euclid_divmod(a, b);
            a = b;
            b = qr.second;
        }
        g = a;
    }
    internal_check(!g.is_zero(), "zero witness");
    std::array<GoldenInt, 4> reduced;
    for (int idx = 0; idx < 4; ++idx) {
        auto qr = euclid_divmod(p.coords()[idx], g);
        internal_check(qr.second.is_zero(), "content must divide the coordinates");
        reduced[idx] = qr.first;
    }
    p = Icosian::from_coords(reduced);
    if (!p.is_unit()) throw NoInnerWitness();
    // balance nr(p) = +-tau^j so that j lands in {0, 1}
    UnitLog ul = unit_log(p.nr_golden());
    long fl = ul.exponent >= 0 ? ul.exponent / 2 : -((-ul.exponent + 1) / 2);
    long shift = -fl;
    KScalar tau_pow(1);
    for (long s = 0; s < (shift >= 0 ? shift : -shift); ++s)
        tau_pow = shift >= 0 ? tau_pow * kTau : tau_pow / kTau;
    Quat out = p.quat() * tau_pow;
    if (!is_positive_root(out)) out = -out;
    return out;
}

}  // namespace

Quat twist_product_inner_witness(const TwistMap& d1, const TwistMap& d2) {
    // solve m(x) q = q x on the order basis, m = d1 o d2 (K-linear)
    Mat<KScalar> stacked(16, std::vector<KScalar>(4));
    for (int bi = 0; bi < 4; ++bi) {
        const Quat& x = icosian_basis()[bi];
        Quat mx = d1.apply(d2.apply(x));
        KMat4 lhs = matrix_rep(mx, Quat::one());  // left multiplication by m(x)
        KMat4 rhs = matrix_rep(Quat::one(), x);   // right multiplication by x
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) stacked[4 * bi + r][c] = lhs[r][c] - rhs[r][c];
    }
    auto kernel = nullspace(stacked);
    if (kernel.empty()) throw NoInnerWitness();
    Quat q(kernel[0][0], kernel[0][1], kernel[0][2], kernel[0][3]);
    Quat eps = canonicalize_unit_witness(q);
    // verify on the basis and a sample of products of basis elements
    std::vector<Quat> samples(icosian_basis().begin(), icosian_basis().end());
    for (int x = 0; x < 4; ++x)
        for (int y = x; y < 4 && samples.size() < 14; ++y)
            samples.push_back(icosian_basis()[x] * icosian_basis()[y]);
    for (const Quat& x : samples)
        if (d1.apply(d2.apply(x)) * eps != eps * x) throw NoInnerWitness();
    return eps;
}

std::vector<Quat> a2_subsystem(const TwistMap& d) {
    std::vector<Quat> fixed;
    for (const Quat& r : roots_H3())
        if (d.apply(r) == r) fixed.push_back(r);
    internal_check(fixed.size() == 6, "each twist map must fix a hexagon of pure roots");
    // hexagon shape: per root one antipode (-2), two neighbours at +1, two at -1
    for (const Quat& x : fixed) {
        int minus2 = 0, plus1 = 0, minus1 = 0;
        for (const Quat& y : fixed) {
            if (x == y) continue;
            KScalar ip = (x * y.bar()).tr();
            internal_check(ip.is_rational(), "root inner products must be rational");
            Rat v = ip.to_rat();
            if (v == -2) ++minus2;
            else if (v == 1) ++plus1;
            else if (v == -1) ++minus1;
        }
        internal_check(minus2 == 1 && plus1 == 2 && minus1 == 2,
                       "fixed pure roots must form a hexagon");
    }
    return fixed;
}

namespace {

using Mat8Key = std::array<long long, 64>;

Mat8Key to_key(const IntMat& m) {
    Mat8Key k{};
    for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c) k[8 * r + c] = to_ll(m[r][c]);
    return k;
}

// 8x8 integer matrix of a Q-linear map preserving I, on the Z-basis
// (e1..e4, tau*e1..tau*e4)
IntMat matrix_on_order(const std::function<Quat(const Quat&)>& map) {
    IntMat m(8, std::vector<Int>(8));
    for (int g = 0; g < 8; ++g) {
        Quat src = icosian_basis()[g % 4];
        if (g >= 4) src = src * kTau;
        Icosian img = Icosian::from_quat(map(src));
        for (int idx = 0; idx < 4; ++idx) {
            m[idx][g] = img.coords()[idx].a();
            m[4 + idx][g] = img.coords()[idx].b();
        }
    }
    return m;
}

}  // namespace

SymmetryReport symmetry_group_structure() {
    SymmetryReport rep;

    std::vector<IntMat> gens;
    gens.push_back(matrix_on_order([](const Quat& x) { return x.twist(); }));
    for (const Quat& e : roots_H4()) {
        if (!is_positive_root(e)) continue;  // T_e = T_{-e}
        Quat einv = e.inverse();
        gens.push_back(matrix_on_order([&](const Quat& x) { return e * x * einv; }));
    }

    std::map<Mat8Key, IntMat> group;
    IntMat id(8, std::vector<Int>(8, Int(0)));
    for (int d = 0; d < 8; ++d) id[d][d] = 1;
    group.emplace(to_key(id), id);
    std::vector<IntMat> work = {id};
    while (!work.empty()) {
        IntMat cur = std::move(work.back());
        work.pop_back();
        for (const IntMat& g : gens) {
            IntMat prod = mat_mul_int(g, cur);
            auto key = to_key(prod);
            if (group.emplace(key, prod).second) work.push_back(std::move(prod));
        }
    }
    rep.group_order = group.size();

    rep.has_order_four_element = false;
    for (const auto& [key, m] : group) {
        IntMat sq = mat_mul_int(m, m);
        if (to_key(sq) == to_key(id)) continue;
        if (to_key(mat_mul_int(sq, sq)) == to_key(id)) {
            rep.has_order_four_element = true;
            break;
        }
    }

    // order-3 rotation: the Coxeter element of the planar hexagon, given by
    // the (negated, halved) product of its two basis roots
    Quat u = Quat::i();
    Quat v(0, KScalar(1), kTau - KScalar(1), -kTau);
    v = v * kHalf;
    rep.z = -(u * v);
    rep.z_cubed_is_minus_one = (rep.z * rep.z * rep.z == -Quat::one());

    // orbit of L under (a, b) -> a L b; signs of a, b do not matter
    std::map<std::array<long long, 32>, bool> orbit;  // key -> contains 1
    std::vector<Int> one_coords(8, Int(0));
    one_coords[0] = 1;
    for (const Quat& a : roots_H4()) {
        if (!is_positive_root(a)) continue;
        for (const Quat& b : roots_H4()) {
            if (!is_positive_root(b)) continue;
            IntMat m(8, std::vector<Int>(4));
            for (int c = 0; c < 4; ++c) {
                Icosian img = Icosian::from_quat(a * v_plus_basis()[c] * b);
                for (int idx = 0; idx < 4; ++idx) {
                    m[2 * idx][c] = img.coords()[idx].a();
                    m[2 * idx + 1][c] = img.coords()[idx].b();
                }
            }
            hnf_columns(m);
            std::array<long long, 32> key{};
            for (int r = 0; r < 8; ++r)
                for (int c = 0; c < 4; ++c) key[4 * r + c] = to_ll(m[r][c]);
            auto it = orbit.find(key);
            if (it == orbit.end()) orbit.emplace(key, hnf_span_contains(m, one_coords));
        }
    }
    rep.orbit_size = orbit.size();
    rep.copies_containing_one = 0;
    for (const auto& [key, has_one] : orbit)
        if (has_one) ++rep.copies_containing_one;

    return rep;
}

}  // namespace a4ssl
