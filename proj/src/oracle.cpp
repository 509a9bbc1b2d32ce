#include "oracle.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "shortvec.hpp"

namespace a4ssl {

GramMatrix make_gram(Mat<Rat> entries) {
    size_t d = entries.size();
    if (d < 1 || d > 4) throw InvalidArgument("gram matrices of dimension 1..4 supported");
    for (const auto& row : entries)
        if (row.size() != d) throw InvalidArgument("gram matrix must be square");
    for (size_t r = 0; r < d; ++r)
        for (size_t c = 0; c < d; ++c)
            if (entries[r][c] != entries[c][r]) throw InvalidArgument("gram matrix must be symmetric");
    // positive definiteness by leading principal minors
    for (size_t k = 1; k <= d; ++k) {
        Mat<Rat> sub(k, std::vector<Rat>(k));
        for (size_t r = 0; r < k; ++r)
            for (size_t c = 0; c < k; ++c) sub[r][c] = entries[r][c];
        if (sgn(determinant(sub)) <= 0)
            throw InvalidArgument("gram matrix must be positive definite");
    }
    return GramMatrix{d, std::move(entries)};
}

GramMatrix gram_preset(const std::string& name) {
    auto from_int = [](std::vector<std::vector<long>> rows) {
        Mat<Rat> g(rows.size(), std::vector<Rat>(rows.size()));
        for (size_t r = 0; r < rows.size(); ++r)
            for (size_t c = 0; c < rows.size(); ++c) g[r][c] = Rat(rows[r][c]);
        return g;
    };
    if (name == "a4") {
        Mat<Rat> g = from_int({{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}});
        for (auto& row : g)
            for (Rat& v : row) v /= 2;
        return make_gram(g);
    }
    if (name == "a4dual") return dual_gram(gram_preset("a4"));
    if (name == "a2") return make_gram(from_int({{2, -1}, {-1, 2}}));
    if (name == "fcc" || name == "a3")
        return make_gram(from_int({{2, 1, 1}, {1, 2, 1}, {1, 1, 2}}));
    if (name == "z2") return make_gram(from_int({{1, 0}, {0, 1}}));
    if (name == "z3") return make_gram(from_int({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    if (name == "z4")
        return make_gram(from_int({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
    if (name == "rect23") return make_gram(from_int({{4, 0}, {0, 9}}));
    throw InvalidArgument("unknown gram preset: " + name);
}

GramMatrix dual_gram(const GramMatrix& g) { return make_gram(inverse(g.g)); }

namespace {

std::vector<Int> sorted_divisors(const Int& n) {
    std::vector<Int> out;
    for (Int d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        if (d * d != n) out.push_back(n / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ordered factorizations of n into dim positive factors (the HNF diagonals)
void diagonal_tuples(size_t dim, const Int& n, std::vector<Int>& cur,
                     const std::function<void(const std::vector<Int>&)>& visit) {
    if (cur.size() + 1 == dim) {
        cur.push_back(n);
        visit(cur);
        cur.pop_back();
        return;
    }
    for (const Int& d : sorted_divisors(n)) {
        cur.push_back(d);
        diagonal_tuples(dim, n / d, cur, visit);
        cur.pop_back();
    }
}

// per-diagonal number of below-diagonal fillings: prod h_i^i (0-indexed)
Int fillings(const std::vector<Int>& diag) {
    Int out(1);
    for (size_t i = 0; i < diag.size(); ++i)
        for (size_t j = 0; j < i; ++j) out *= diag[i];
    return out;
}

}  // namespace

void hnf_enumerate(size_t dim, const Int& n,
                   const std::function<void(const IntMat&)>& visit) {
    if (n < 1) throw InvalidArgument("hnf_enumerate: index must be positive");
    std::vector<Int> cur;
    diagonal_tuples(dim, n, cur, [&](const std::vector<Int>& diag) {
        IntMat z(dim, std::vector<Int>(dim, Int(0)));
        for (size_t i = 0; i < dim; ++i) z[i][i] = diag[i];
        // odometer over the below-diagonal entries
        std::vector<std::pair<size_t, size_t>> slots;
        for (size_t i = 0; i < dim; ++i)
            for (size_t j = 0; j < i; ++j)
                if (diag[i] > 1) slots.emplace_back(i, j);
        while (true) {
            visit(z);
            size_t s = 0;
            for (; s < slots.size(); ++s) {
                auto [i, j] = slots[s];
                if (++z[i][j] < diag[i]) break;
                z[i][j] = 0;
            }
            if (s == slots.size()) break;
        }
    });
}

Int hnf_count(size_t dim, const Int& n) {
    // Dirichlet convolution identity: c_d = c_{d-1} * Id^{d-1}
    if (dim == 1) return Int(1);
    Int out(0);
    for (const Int& a : sorted_divisors(n)) {
        Int apow(1);
        for (size_t t = 0; t + 1 < dim; ++t) apow *= a;
        out += apow * hnf_count(dim - 1, n / a);
    }
    return out;
}

std::vector<std::vector<Int>> short_vectors(const GramMatrix& g, const Rat& bound) {
    std::vector<std::vector<Int>> out;
    enumerate_short_vectors(g.g, bound, [&](const std::vector<long long>& v, const Rat&) {
        std::vector<Int> w(v.size());
        for (size_t idx = 0; idx < v.size(); ++idx) w[idx] = static_cast<long>(v[idx]);
        out.push_back(std::move(w));
    });
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

using I128 = __int128;

struct CongruenceTester {
    // target Gram R (= scaled integral G), d x d
    std::vector<std::vector<long long>> r;
    size_t dim;
    long long max_diag;

    explicit CongruenceTester(const std::vector<std::vector<long long>>& target)
        : r(target), dim(target.size()) {
        max_diag = 0;
        for (size_t i = 0; i < dim; ++i) max_diag = std::max(max_diag, r[i][i]);
    }

    // does the lattice with Gram f have a basis with Gram exactly r?
    bool congruent(const std::vector<std::vector<long long>>& f) const {
        // candidate images: vectors of each required diagonal norm
        Mat<Rat> fq(dim, std::vector<Rat>(dim));
        for (size_t a = 0; a < dim; ++a)
            for (size_t b = 0; b < dim; ++b) fq[a][b] = Rat(static_cast<long>(f[a][b]));
        std::vector<std::vector<long long>> cands;
        std::vector<long long> cand_norm;
        enumerate_short_vectors(fq, Rat(static_cast<long>(max_diag)),
                                [&](const std::vector<long long>& v, const Rat& value) {
                                    internal_check(value.get_den() == 1,
                                                   "integral form produced a fractional norm");
                                    for (long long x : v)
                                        internal_check(std::abs(x) < (1LL << 30),
                                                       "candidate coordinate out of range");
                                    cands.push_back(v);
                                    cand_norm.push_back(static_cast<long long>(value.get_num().get_si()));
                                });
        // rarest norms first
        std::map<long long, size_t> norm_freq;
        for (long long nv : cand_norm) ++norm_freq[nv];
        std::vector<size_t> order(dim);
        for (size_t i = 0; i < dim; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            size_t fa = norm_freq.count(r[a][a]) ? norm_freq.at(r[a][a]) : 0;
            size_t fb = norm_freq.count(r[b][b]) ? norm_freq.at(r[b][b]) : 0;
            return fa != fb ? fa < fb : a < b;
        });

        std::vector<std::vector<long long>> chosen(dim);
        return dfs(0, order, cands, cand_norm, f, chosen);
    }

private:
    static I128 dot(const std::vector<long long>& u,
                    const std::vector<std::vector<long long>>& f,
                    const std::vector<long long>& v) {
        I128 acc = 0;
        for (size_t a = 0; a < u.size(); ++a) {
            if (u[a] == 0) continue;
            I128 row = 0;
            for (size_t b = 0; b < v.size(); ++b) row += static_cast<I128>(f[a][b]) * v[b];
            acc += static_cast<I128>(u[a]) * row;
        }
        return acc;
    }

    bool dfs(size_t depth, const std::vector<size_t>& order,
             const std::vector<std::vector<long long>>& cands,
             const std::vector<long long>& cand_norm,
             const std::vector<std::vector<long long>>& f,
             std::vector<std::vector<long long>>& chosen) const {
        if (depth == dim) return true;
        size_t pos = order[depth];
        for (size_t ci = 0; ci < cands.size(); ++ci) {
            if (cand_norm[ci] != r[pos][pos]) continue;
            for (int sign = +1; sign >= -1; sign -= 2) {
                std::vector<long long> v = cands[ci];
                if (sign < 0)
                    for (long long& x : v) x = -x;
                bool ok = true;
                for (size_t prev = 0; prev < depth && ok; ++prev) {
                    size_t q = order[prev];
                    ok = dot(v, f, chosen[q]) == static_cast<I128>(r[pos][q]);
                }
                if (!ok) continue;
                chosen[pos] = std::move(v);
                if (dfs(depth + 1, order, cands, cand_norm, f, chosen)) return true;
            }
        }
        return false;
    }
};

struct ScaledGram {
    std::vector<std::vector<long long>> g;  // integral, scaled by lcm of denominators
    size_t dim;
    long long max_abs = 0;
};

// every intermediate of the int64 similarity path must stay below 2^62
void check_integer_range(const ScaledGram& g, const Int& index) {
    Int worst = Int(static_cast<long>(g.dim * g.dim)) * index * index *
                Int(static_cast<long>(g.max_abs));
    Int limit(1);
    limit <<= 62;
    if (worst >= limit)
        throw InvalidArgument("index too large for the oracle's exact integer range");
}

ScaledGram scale_gram(const GramMatrix& g) {
    Int lcm(1);
    for (const auto& row : g.g)
        for (const Rat& v : row) {
            Int d(v.get_den());
            lcm = lcm / int_gcd(lcm, d) * d;
        }
    ScaledGram out;
    out.dim = g.dim;
    out.g.assign(g.dim, std::vector<long long>(g.dim));
    for (size_t r = 0; r < g.dim; ++r)
        for (size_t c = 0; c < g.dim; ++c) {
            Int v = Int(g.g[r][c].get_num()) * (lcm / Int(g.g[r][c].get_den()));
            if (abs(v) > Int(1000000))
                throw InvalidArgument("gram entries too large for the oracle");
            out.g[r][c] = to_ll(v);
            out.max_abs = std::max(out.max_abs, std::abs(out.g[r][c]));
        }
    return out;
}

// c with c^{dim/2} = n, or 0 if none
long long similarity_scale(size_t dim, const Int& n) {
    Int c;
    switch (dim) {
        case 1: c = n * n; break;
        case 2: c = n; break;
        case 3: {
            Int sq = n * n;
            mpz_root(c.get_mpz_t(), sq.get_mpz_t(), 3);
            if (c * c * c != sq) return 0;
            break;
        }
        case 4:
            if (!is_perfect_square(n, &c)) return 0;
            break;
        default: return 0;
    }
    return to_ll(c);
}

// F = Z^T G Z for a lower-triangular candidate; aborts early when an entry
// fails the necessary divisibility by c
bool form_of_candidate(const std::vector<std::vector<long long>>& g,
                       const std::vector<std::vector<long long>>& z, long long c,
                       std::vector<std::vector<long long>>& f_over_c) {
    size_t d = g.size();
    // gz = G * Z
    long long gz[4][4];
    for (size_t r = 0; r < d; ++r)
        for (size_t col = 0; col < d; ++col) {
            I128 acc = 0;
            for (size_t k = col; k < d; ++k) acc += static_cast<I128>(g[r][k]) * z[k][col];
            gz[r][col] = static_cast<long long>(acc);
        }
    for (size_t r = 0; r < d; ++r)
        for (size_t col = r; col < d; ++col) {
            I128 acc = 0;
            for (size_t k = r; k < d; ++k) acc += static_cast<I128>(z[k][r]) * gz[k][col];
            if (acc % c != 0) return false;
            long long v = static_cast<long long>(acc / c);
            f_over_c[r][col] = v;
            f_over_c[col][r] = v;
        }
    return true;
}

}  // namespace

bool is_similar_sublattice(const GramMatrix& g, const IntMat& z) {
    ScaledGram sg = scale_gram(g);
    internal_check(z.size() == g.dim, "matrix dimension must match the gram dimension");
    Int det = abs(mat_det(z));
    if (det == 0) return false;
    check_integer_range(sg, det);
    long long c = similarity_scale(g.dim, det);
    if (c == 0) return false;
    std::vector<std::vector<long long>> zl(g.dim, std::vector<long long>(g.dim));
    for (size_t r = 0; r < g.dim; ++r)
        for (size_t col = 0; col < g.dim; ++col) zl[r][col] = to_ll(z[r][col]);
    // the candidate need not be triangular here; compute Z^T G Z directly
    std::vector<std::vector<long long>> f(g.dim, std::vector<long long>(g.dim));
    for (size_t r = 0; r < g.dim; ++r)
        for (size_t col = 0; col < g.dim; ++col) {
            I128 acc = 0;
            for (size_t a = 0; a < g.dim; ++a)
                for (size_t b = 0; b < g.dim; ++b)
                    acc += static_cast<I128>(zl[a][r]) * sg.g[a][b] * zl[b][col];
            if (acc % c != 0) return false;
            f[r][col] = static_cast<long long>(acc / c);
        }
    CongruenceTester tester(sg.g);
    return tester.congruent(f);
}

BruteResult brute_similar(const GramMatrix& g, const Int& n, const OracleBudget& budget,
                          bool collect) {
    if (n < 1) throw InvalidArgument("brute_similar: index must be positive");
    Int estimate = hnf_count(g.dim, n);
    unsigned long long est = estimate.fits_ulong_p() ? estimate.get_ui() : ~0ull;
    if (n > Int(static_cast<unsigned long>(budget.max_index_by_dim[g.dim])) ||
        est > budget.max_estimated_hnf) {
        throw BudgetExceeded("oracle budget exceeded (estimated " + estimate.get_str() +
                                 " sublattices of index " + n.get_str() + " in dimension " +
                                 std::to_string(g.dim) + ")",
                             static_cast<unsigned>(g.dim), n.get_ui(), est,
                             budget.max_estimated_hnf);
    }

    ScaledGram sg = scale_gram(g);
    check_integer_range(sg, n);
    long long c = similarity_scale(g.dim, n);
    BruteResult result{Int(0), Int(0), {}};
    if (c == 0) return result;

    // linearize (diagonal, filling) pairs for deterministic parallel chunks
    std::vector<std::vector<Int>> diags;
    std::vector<unsigned long long> fill_count;
    std::vector<unsigned long long> prefix = {0};
    {
        std::vector<Int> cur;
        diagonal_tuples(g.dim, n, cur, [&](const std::vector<Int>& diag) {
            diags.push_back(diag);
            Int f = fillings(diag);
            fill_count.push_back(f.get_ui());
            prefix.push_back(prefix.back() + f.get_ui());
        });
    }
    internal_check(prefix.back() == est, "HNF stream size must match the divisor formula");

    std::mutex merge_mutex;
    CongruenceTester tester(sg.g);
    size_t d = g.dim;

    parallel_chunks(prefix.back(), [&](unsigned long long begin, unsigned long long end) {
        Int local_total(0), local_primitive(0);
        std::vector<IntMat> local_mats;
        std::vector<std::vector<long long>> z(d, std::vector<long long>(d, 0));
        std::vector<std::vector<long long>> f(d, std::vector<long long>(d, 0));
        size_t di = static_cast<size_t>(
            std::upper_bound(prefix.begin(), prefix.end(), begin) - prefix.begin() - 1);
        for (unsigned long long idx = begin; idx < end;) {
            while (idx >= prefix[di + 1]) ++di;
            const auto& diag = diags[di];
            unsigned long long local = idx - prefix[di];
            // decode the below-diagonal odometer
            for (size_t i = 0; i < d; ++i) {
                for (size_t j = 0; j < d; ++j) z[i][j] = 0;
                z[i][i] = to_ll(diag[i]);
            }
            for (size_t i = 0; i < d; ++i) {
                long long hi = to_ll(diag[i]);
                for (size_t j = 0; j < i; ++j) {
                    if (hi > 1) {
                        z[i][j] = static_cast<long long>(local % hi);
                        local /= hi;
                    }
                }
            }
            if (form_of_candidate(sg.g, z, c, f) && tester.congruent(f)) {
                local_total += 1;
                long long gcd_entries = 0;
                for (size_t i = 0; i < d; ++i)
                    for (size_t j = 0; j <= i; ++j)
                        gcd_entries = std::gcd(gcd_entries, z[i][j] < 0 ? -z[i][j] : z[i][j]);
                if (gcd_entries == 1) local_primitive += 1;
                if (collect) {
                    IntMat m(d, std::vector<Int>(d));
                    for (size_t i = 0; i < d; ++i)
                        for (size_t j = 0; j < d; ++j) m[i][j] = static_cast<long>(z[i][j]);
                    local_mats.push_back(std::move(m));
                }
            }
            ++idx;
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        result.total += local_total;
        result.primitive += local_primitive;
        for (auto& m : local_mats) result.matrices.push_back(std::move(m));
    });

    std::sort(result.matrices.begin(), result.matrices.end());
    return result;
}

}  // namespace a4ssl
