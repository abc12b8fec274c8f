#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "eph/hyper.hpp"

using namespace eph;

namespace {
const AlgebraKind kKinds[3] = {AlgebraKind::Elliptic, AlgebraKind::Parabolic,
                               AlgebraKind::Hyperbolic};

std::mt19937 rng(20240917);

Hyper random_hyper(AlgebraKind k, double span = 2.0) {
    std::uniform_real_distribution<double> d(-span, span);
    return {d(rng), d(rng), k};
}
} // namespace

TEST_CASE("multiplication rules of the three units") {
    const Hyper i = Hyper::unit(AlgebraKind::Elliptic);
    const Hyper p = Hyper::unit(AlgebraKind::Parabolic);
    CHECK(approx_eq(mul(i, i), Hyper::real(-1, AlgebraKind::Elliptic), 0.0));
    CHECK(approx_eq(mul(p, p), Hyper::real(0, AlgebraKind::Parabolic), 0.0));
    // (1+h)(1-h) = 0: zero divisors
    const Hyper a{1, 1, AlgebraKind::Hyperbolic};
    const Hyper b{1, -1, AlgebraKind::Hyperbolic};
    CHECK(approx_eq(mul(a, b), Hyper::real(0, AlgebraKind::Hyperbolic), 0.0));
    CHECK_THROWS_AS(mul(i, p), KindMismatch);
}

TEST_CASE("commutativity, associativity, modulus multiplicativity") {
    for (AlgebraKind k : kKinds) {
        for (int it = 0; it < 10000; ++it) {
            const Hyper a = random_hyper(k), b = random_hyper(k), c = random_hyper(k);
            CHECK(approx_eq(mul(a, b), mul(b, a), 1e-12));
            CHECK(approx_eq(mul(mul(a, b), c), mul(a, mul(b, c)), 1e-12));
            CHECK(std::abs(modulus_sq(mul(a, b)) - modulus_sq(a) * modulus_sq(b)) < 1e-12);
        }
    }
}

TEST_CASE("exp_unit closed forms and homomorphism") {
    for (AlgebraKind k : kKinds) CHECK(approx_eq(exp_unit(0.0, k), Hyper::real(1, k), 0.0));
    CHECK(approx_eq(exp_unit(2.0, AlgebraKind::Parabolic), Hyper{1, 2, AlgebraKind::Parabolic}, 0.0));
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    for (AlgebraKind k : kKinds) {
        for (int it = 0; it < 200; ++it) {
            const double s = d(rng), t = d(rng);
            CHECK(approx_eq(exp_unit(s + t, k), mul(exp_unit(s, k), exp_unit(t, k)), 1e-12));
            CHECK(approx_eq(mul(exp_unit(t, k), conj(exp_unit(t, k))), Hyper::real(1, k), 1e-12));
        }
    }
}

TEST_CASE("inversion") {
    CHECK(approx_eq(invert(Hyper::unit(AlgebraKind::Elliptic)),
                    Hyper{0, -1, AlgebraKind::Elliptic}, 0.0));
    const Hyper x{2, 3, AlgebraKind::Parabolic};
    CHECK(approx_eq(invert(x), Hyper{0.5, -0.75, AlgebraKind::Parabolic}, 1e-15));
    CHECK(approx_eq(mul(x, invert(x)), Hyper::real(1, AlgebraKind::Parabolic), 1e-15));
    CHECK_THROWS_AS(invert(Hyper{1, 1, AlgebraKind::Hyperbolic}), ZeroDivisor);
    CHECK_THROWS_AS(invert(Hyper{0, 2, AlgebraKind::Parabolic}), ZeroDivisor);
    for (AlgebraKind k : kKinds) {
        for (int it = 0; it < 500; ++it) {
            const Hyper a = random_hyper(k);
            if (std::abs(modulus_sq(a)) < 1e-3) continue;
            CHECK(approx_eq(mul(a, invert(a)), Hyper::real(1, k), 1e-13));
        }
    }
}

TEST_CASE("argument and polar decomposition") {
    const Hyper d{2, 6, AlgebraKind::Parabolic};
    CHECK(argument(d) == doctest::Approx(3.0));
    const Polar pd = polar(d);
    CHECK(pd.modulus == doctest::Approx(2.0));
    CHECK(pd.argument == doctest::Approx(3.0));

    CHECK(argument(Hyper{1, 0, AlgebraKind::Elliptic}) == doctest::Approx(0.0));
    CHECK_THROWS_AS(argument(Hyper{1, 1, AlgebraKind::Hyperbolic}), ArgumentUndefined);
    CHECK_THROWS_AS(argument(Hyper{0, 1, AlgebraKind::Parabolic}), ArgumentUndefined);

    // modulus * exp_unit(argument) reconstructs the element on each chart
    for (AlgebraKind k : kKinds) {
        for (int it = 0; it < 500; ++it) {
            Hyper a = random_hyper(k);
            if (k == AlgebraKind::Parabolic && std::abs(a.u) < 1e-3) continue;
            if (k == AlgebraKind::Hyperbolic && std::abs(a.u) <= std::abs(a.v) + 1e-3) continue;
            if (k == AlgebraKind::Elliptic && std::hypot(a.u, a.v) < 1e-6) continue;
            const Polar pl = polar(a);
            CHECK(approx_eq(scale(pl.modulus, exp_unit(pl.argument, k)), a, 1e-10));
        }
    }
}

TEST_CASE("parabolic rotation") {
    const Hyper one = Hyper::real(1, AlgebraKind::Parabolic);
    CHECK(approx_eq(parabolic_rotation(1.0, one), Hyper{1, 1, AlgebraKind::Parabolic}, 0.0));
    for (int it = 0; it < 200; ++it) {
        const Hyper a = random_hyper(AlgebraKind::Parabolic);
        std::uniform_real_distribution<double> d(-2.0, 2.0);
        const double x = d(rng);
        CHECK(approx_eq(parabolic_rotation(0.0, a), a, 0.0));
        CHECK(approx_eq(parabolic_rotation(x, a),
                        mul(exp_unit(x, AlgebraKind::Parabolic), a), 1e-13));
    }
    CHECK_THROWS_AS(parabolic_rotation(1.0, Hyper::real(1, AlgebraKind::Elliptic)), KindMismatch);
}

TEST_CASE("dual-complex block algebra") {
    using Cx = std::complex<double>;
    const DualComplex e(1.0);
    const DualComplex pw{Cx{0, 0}, Cx{1, 0}};
    CHECK(dc_seminorm(dc_sub(dc_mul(e, e), e)) == 0.0);
    // p-block nilpotency: (p w)(p w') = 0 exactly
    const DualComplex prod = dc_mul(pw, DualComplex{Cx{0, 0}, Cx{2, 3}});
    CHECK(prod.z == Cx{0, 0});
    CHECK(prod.w == Cx{0, 0});

    std::uniform_real_distribution<double> d(-2.0, 2.0);
    for (int it = 0; it < 500; ++it) {
        const DualComplex a{Cx{d(rng), d(rng)}, Cx{d(rng), d(rng)}};
        const DualComplex b{Cx{d(rng), d(rng)}, Cx{d(rng), d(rng)}};
        const DualComplex c{Cx{d(rng), d(rng)}, Cx{d(rng), d(rng)}};
        const DualComplex l = dc_mul(dc_mul(a, b), c);
        const DualComplex r = dc_mul(a, dc_mul(b, c));
        CHECK(std::abs(l.z - r.z) < 1e-12);
        CHECK(std::abs(l.w - r.w) < 1e-12);
        // conjugation respects products
        const DualComplex cl = dc_conj(dc_mul(a, b));
        const DualComplex cr = dc_mul(dc_conj(a), dc_conj(b));
        CHECK(std::abs(cl.z - cr.z) < 1e-12);
        CHECK(std::abs(cl.w - cr.w) < 1e-12);
        CHECK(dc_seminorm(a) == std::abs(a.z));
    }
}

TEST_CASE("split numbers") {
    const Split h{0, 1};
    const Split one = h * h;
    CHECK(one.a == 1.0);
    CHECK(one.b == 0.0);
    const Split e = split_exp(0.3) * split_exp(-0.3);
    CHECK(e.a == doctest::Approx(1.0));
    CHECK(e.b == doctest::Approx(0.0));
}
