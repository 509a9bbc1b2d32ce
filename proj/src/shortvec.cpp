#include "shortvec.hpp"

#include <cmath>

namespace a4ssl {

namespace {

// largest integer n with n <= c + sqrt(t), t >= 0; double seed, exact fixup
long long floor_center_plus_sqrt(const Rat& c, const Rat& t) {
    double seed = c.get_d() + std::sqrt(std::max(0.0, t.get_d()));
    if (seed > 1e15) seed = 1e15;
    if (seed < -1e15) seed = -1e15;
    long long n = static_cast<long long>(std::floor(seed));
    auto ok = [&](long long candidate) {
        Rat d = Rat(static_cast<long>(candidate)) - c;
        if (sgn(d) <= 0) return true;
        return d * d <= t;
    };
    while (ok(n + 1)) ++n;
    while (!ok(n)) --n;
    return n;
}

struct Enumerator {
    const Mat<Rat>& u;
    const std::vector<Rat>& d;
    const std::function<void(const std::vector<long long>&, const Rat&)>& visit;
    Rat bound;
    int n;
    std::vector<long long> v;

    void rec(int level, const Rat& rem, bool leading) {
        if (level < 0) {
            visit(v, bound - rem);
            return;
        }
        Rat center(0);
        for (int j = level + 1; j < n; ++j) {
            if (v[j] != 0) center += u[level][j] * static_cast<long>(v[j]);
        }
        Rat t = rem / d[level];
        long long hi = floor_center_plus_sqrt(-center, t);
        long long lo = -floor_center_plus_sqrt(center, t);
        if (leading && lo < 0) lo = 0;
        for (long long x = lo; x <= hi; ++x) {
            Rat offset = Rat(static_cast<long>(x)) + center;
            Rat term = d[level] * offset * offset;
            if (term > rem) continue;
            v[level] = x;
            bool sub_leading = leading && x == 0;
            if (level == 0 && sub_leading) {
                v[level] = 0;
                continue;  // skip the zero vector
            }
            rec(level - 1, rem - term, sub_leading);
        }
        v[level] = 0;
    }
};

}  // namespace

void enumerate_short_vectors(
    const Mat<Rat>& gram, const Rat& bound,
    const std::function<void(const std::vector<long long>&, const Rat&)>& visit) {
    int n = static_cast<int>(gram.size());
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (gram[r][c] != gram[c][r]) throw InvalidArgument("gram matrix must be symmetric");

    // A = U^T D U with unit upper-triangular U
    Mat<Rat> u = mat_identity<Rat>(n);
    std::vector<Rat> d(n);
    for (int i = 0; i < n; ++i) {
        Rat di = gram[i][i];
        for (int k = 0; k < i; ++k) di -= d[k] * u[k][i] * u[k][i];
        if (sgn(di) <= 0) throw InvalidArgument("gram matrix must be positive definite");
        d[i] = di;
        for (int j = i + 1; j < n; ++j) {
            Rat s = gram[i][j];
            for (int k = 0; k < i; ++k) s -= d[k] * u[k][i] * u[k][j];
            u[i][j] = s / di;
        }
    }

    if (sgn(bound) < 0) return;
    Enumerator en{u, d, visit, bound, n, std::vector<long long>(n, 0)};
    en.rec(n - 1, bound, true);
}

}  // namespace a4ssl
