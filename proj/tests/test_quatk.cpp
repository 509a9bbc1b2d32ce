#include <doctest.h>

#include "quatk.hpp"
#include "test_util.hpp"

using namespace a4ssl;
using namespace a4ssl_test;

namespace {
const KScalar half(GoldenInt(1), Int(2));
const KScalar tau = KScalar::tau();
}

TEST_CASE("hamilton relations") {
    CHECK(Quat::i() * Quat::j() == Quat::k());
    CHECK(Quat::j() * Quat::i() == -Quat::k());
    CHECK(Quat::i() * Quat::i() == -Quat::one());
    Quat h(half, half, half, half);
    CHECK(h * h == Quat(-half, half, half, half));

    Rng rng;
    for (int trial = 0; trial < 100; ++trial) {
        Quat x = rng.quat(), y = rng.quat(), z = rng.quat();
        CHECK(x * y == quat_mul_oracle(x, y));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
    }
}

TEST_CASE("bar, trace, norm, inverse") {
    Quat h(half, half, half, half);
    CHECK(h.nr() == KScalar(1));
    CHECK(Quat(1, 2, 3, 4).tr() == KScalar(2));
    Quat root(tau.conj() * half, tau * half, 0, half);
    CHECK(root.nr() == KScalar(1));

    CHECK_THROWS_AS(Quat().inverse(), DivideByZero);

    Rng rng;
    for (int trial = 0; trial < 50; ++trial) {
        Quat x = rng.quat();
        if (x.is_zero()) continue;
        CHECK(x * x.inverse() == Quat::one());
        Quat y = rng.quat();
        CHECK((x * y).nr() == x.nr() * y.nr());
        // the trace is central: tr(xy) = tr(yx)
        CHECK((x * y).tr() == (y * x).tr());
    }
}

TEST_CASE("twist map") {
    CHECK(Quat::one().twist() == Quat::one());
    CHECK(Quat::j().twist() == Quat::k());
    CHECK(Quat(tau, 0, 0, 0).twist() == Quat(tau.conj(), 0, 0, 0));

    Rng rng;
    for (int trial = 0; trial < 100; ++trial) {
        Quat x = rng.quat(), y = rng.quat();
        CHECK(twist_laws_check(x, y, rng.kscalar()));
        CHECK(x.twist().nr() == x.nr().conj());
    }
}

TEST_CASE("twist eigenspaces split the algebra") {
    CHECK(twist_eigenspace_test(Quat::i()) == TwistParity::plus);
    CHECK(twist_eigenspace_test(Quat::j() - Quat::k()) == TwistParity::minus);
    CHECK(twist_eigenspace_test(Quat::j()) == TwistParity::neither);

    const KScalar sqrt5 = tau + tau - KScalar(1);  // 2 tau - 1
    Rng rng;
    for (int trial = 0; trial < 50; ++trial) {
        Quat x = rng.quat();
        Quat plus = (x + x.twist()) * half;
        Quat minus = (x - x.twist()) * half;
        CHECK(plus + minus == x);
        if (!plus.is_zero()) {
            CHECK(twist_eigenspace_test(plus) == TwistParity::plus);
            CHECK(twist_eigenspace_test(plus * sqrt5) == TwistParity::minus);
        }
        if (!minus.is_zero()) CHECK(twist_eigenspace_test(minus) == TwistParity::minus);
    }
}

TEST_CASE("matrix representation of x -> p x q") {
    KMat4 id = matrix_rep(Quat::one(), Quat::one());
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) CHECK(id[r][c] == KScalar(r == c ? 1 : 0));

    // left multiplication by i permutes the basis with signs
    KMat4 li = matrix_rep(Quat::i(), Quat::one());
    const int expect[4][4] = {{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) CHECK(li[r][c] == KScalar(expect[r][c]));

    Rng rng;
    for (int trial = 0; trial < 20; ++trial) {
        Quat p = rng.quat(4), q = rng.quat(4);
        KMat4 m = matrix_rep(p, q);
        for (int probe = 0; probe < 5; ++probe) {
            Quat x = rng.quat(6);
            Quat direct = p * x * q;
            for (int r = 0; r < 4; ++r) {
                KScalar acc;
                for (int c = 0; c < 4; ++c) acc += m[r][c] * x[c];
                CHECK(acc == direct[r]);
            }
        }
        KScalar d = p.nr() * q.nr();
        CHECK(kmat4_det(m) == d * d);
    }
}

TEST_CASE("similarity characteristic polynomial") {
    auto poly = similarity_char_poly(Rat(1), Quat::one());
    CHECK(poly == std::array<Rat, 5>{Rat(1), Rat(-4), Rat(6), Rat(-4), Rat(1)});
    poly = similarity_char_poly(Rat(1), Quat(2, 0, 0, 0));
    CHECK(poly == std::array<Rat, 5>{Rat(256), Rat(-256), Rat(96), Rat(-16), Rat(1)});

    Rng rng;
    for (int trial = 0; trial < 100; ++trial) {
        Quat p = rng.icosian_nonzero().quat();
        Rat alpha(rng.pick(-3, 3), rng.pick(1, 3));
        alpha.canonicalize();
        auto closed = similarity_char_poly(alpha, p);
        auto direct = char_poly_oracle(rat_mat4(similarity_matrix(alpha, p)));
        for (int k = 0; k < 5; ++k) CHECK(closed[k] == direct[k]);
    }
}
