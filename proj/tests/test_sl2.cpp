#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "eph/sl2.hpp"

using namespace eph;
using Cx = std::complex<double>;

namespace {
std::mt19937 rng(7151);

Mat2 random_sl2(double span = 0.8) {
    std::uniform_real_distribution<double> d(-span, span);
    // product of one-parameter elements stays in SL(2,R) exactly enough
    return subgroup_element(SubgroupId::A, d(rng)) * subgroup_element(SubgroupId::N, d(rng)) *
           subgroup_element(SubgroupId::K, d(rng));
}

Hyper random_uhp(AlgebraKind k) {
    std::uniform_real_distribution<double> du(-1.5, 1.5);
    std::uniform_real_distribution<double> dv(0.3, 2.5);
    return {du(rng), dv(rng), k};
}
} // namespace

TEST_CASE("subgroup elements: closed forms and one-parameter property") {
    const Mat2 kq = subgroup_element(SubgroupId::K, M_PI / 2);
    CHECK(approx_eq(kq, Mat2{0, 1, -1, 0}, 1e-15));
    CHECK(approx_eq(subgroup_element(SubgroupId::A, 0.0), Mat2::identity(), 0.0));

    std::uniform_real_distribution<double> d(-1.0, 1.0);
    for (SubgroupId id : {SubgroupId::A, SubgroupId::N, SubgroupId::K, SubgroupId::Nprime,
                          SubgroupId::Aprime}) {
        for (int it = 0; it < 100; ++it) {
            const double s = d(rng), t = d(rng);
            CHECK(approx_eq(subgroup_element(id, s) * subgroup_element(id, t),
                            subgroup_element(id, s + t), 1e-12));
            CHECK(subgroup_element(id, t).det() == doctest::Approx(1.0).epsilon(1e-14));
        }
    }
    // N' is the (0,-1;1,0)-conjugate of N (parameter reversed under j . j^-1)
    const double nu = 0.7;
    const Mat2 j{0, -1, 1, 0};
    CHECK(approx_eq(subgroup_element(SubgroupId::Nprime, nu),
                    j * subgroup_element(SubgroupId::N, -nu) * j.inverse(), 1e-14));
}

TEST_CASE("moebius action: quotient and component formulas agree") {
    const AlgebraKind kinds[3] = {AlgebraKind::Elliptic, AlgebraKind::Parabolic,
                                  AlgebraKind::Hyperbolic};
    for (AlgebraKind k : kinds) {
        for (int it = 0; it < 10000; ++it) {
            const Mat2 g = random_sl2();
            const Hyper w = random_uhp(k);
            Hyper a, b;
            try {
                a = moebius(g, w);
                b = moebius_components(g, w);
            } catch (const NonInvertibleDenominator&) {
                continue;
            }
            const double sc = std::max({1.0, std::abs(a.u), std::abs(a.v)});
            CHECK(approx_eq(a, b, 1e-12 * sc));
        }
    }
    const Hyper w{0.3, 1.2, AlgebraKind::Elliptic};
    CHECK(approx_eq(moebius(Mat2::identity(), w), w, 0.0));
}

TEST_CASE("moebius is a left action") {
    for (AlgebraKind k : {AlgebraKind::Elliptic, AlgebraKind::Parabolic, AlgebraKind::Hyperbolic}) {
        for (int it = 0; it < 2000; ++it) {
            const Mat2 g1 = random_sl2(), g2 = random_sl2();
            const Hyper w = random_uhp(k);
            try {
                const Hyper lhs = moebius(g1, moebius(g2, w));
                const Hyper rhs = moebius(g1 * g2, w);
                const double sc = std::max({1.0, std::abs(rhs.u), std::abs(rhs.v)});
                CHECK(approx_eq(lhs, rhs, 1e-10 * sc));
            } catch (const NonInvertibleDenominator&) {
            }
        }
    }
}

TEST_CASE("isotropy of the unit under K, N', A'") {
    std::uniform_real_distribution<double> d(-1.4, 1.4);
    for (int it = 0; it < 32; ++it) {
        const double t = d(rng);
        const Hyper i = Hyper::unit(AlgebraKind::Elliptic);
        CHECK(approx_eq(moebius(subgroup_element(SubgroupId::K, t), i), i, 1e-12));

        // N' fixes every point p v0 on the vertical axis
        const double v0 = 0.25 + std::abs(d(rng));
        const Hyper pv{0.0, v0, AlgebraKind::Parabolic};
        CHECK(approx_eq(moebius(subgroup_element(SubgroupId::Nprime, t), pv), pv, 1e-12));

        const Hyper h = Hyper::unit(AlgebraKind::Hyperbolic);
        CHECK(approx_eq(moebius(subgroup_element(SubgroupId::Aprime, t), h), h, 1e-12));
    }
}

TEST_CASE("orbits: dilations, shifts, conic invariants") {
    std::vector<double> ts;
    for (int i = 0; i <= 40; ++i) ts.push_back(-1.0 + i * 0.05);

    const Hyper w0{0.4, 1.3, AlgebraKind::Elliptic};
    auto orbA = orbit(SubgroupId::A, w0, ts);
    for (size_t i = 0; i < ts.size(); ++i)
        CHECK(approx_eq(orbA[i], scale(std::exp(-ts[i]), w0), 1e-12));

    auto orbN = orbit(SubgroupId::N, w0, ts);
    for (size_t i = 0; i < ts.size(); ++i)
        CHECK(approx_eq(orbN[i], add(w0, Hyper::real(ts[i], w0.kind)), 1e-12));

    // K-orbits: circle / parabola / hyperbola via the implicit invariant
    for (AlgebraKind k : {AlgebraKind::Elliptic, AlgebraKind::Parabolic, AlgebraKind::Hyperbolic}) {
        const Hyper start{0.0, 0.45, k};
        const double inv0 = k_orbit_invariant(start);
        for (double t : ts) {
            const Hyper w = moebius(subgroup_element(SubgroupId::K, t), start);
            CHECK(std::abs(k_orbit_invariant(w) - inv0) < 1e-8);
        }
    }

    // K fixes the elliptic unit, so that orbit is constant
    auto orbK = orbit(SubgroupId::K, Hyper::unit(AlgebraKind::Elliptic), ts);
    for (const Hyper& w : orbK) CHECK(approx_eq(w, Hyper::unit(AlgebraKind::Elliptic), 1e-12));
}

TEST_CASE("iwasawa decomposition") {
    const Iwasawa id_dec = iwasawa(Mat2::identity());
    CHECK(approx_eq(id_dec.gA, Mat2::identity(), 1e-14));
    CHECK(approx_eq(id_dec.gN, Mat2::identity(), 1e-14));
    CHECK(approx_eq(id_dec.gK, Mat2::identity(), 1e-14));

    for (int it = 0; it < 2000; ++it) {
        const Mat2 g = random_sl2(1.2);
        const Iwasawa dec = iwasawa(g);
        CHECK(approx_eq(dec.gA * dec.gN * dec.gK, g, 1e-10));
        CHECK(dec.gA.b == 0.0);
        CHECK(dec.gA.c == 0.0);
        CHECK(dec.gN.a == 1.0);
        CHECK(dec.gN.c == 0.0);
        CHECK(std::abs(dec.gK.a - dec.gK.d) < 1e-12);
        CHECK(std::abs(dec.gK.b + dec.gK.c) < 1e-12);
    }
    const Mat2 k0 = subgroup_element(SubgroupId::K, 0.9);
    const Iwasawa dk = iwasawa(k0);
    CHECK(approx_eq(dk.gA, Mat2::identity(), 1e-12));
    CHECK(approx_eq(dk.gN, Mat2::identity(), 1e-12));
    CHECK(approx_eq(dk.gK, k0, 1e-12));
}

TEST_CASE("section and r-map") {
    CHECK(approx_eq(section_s(0, 1), Mat2::identity(), 1e-15));
    CHECK_THROWS_AS(section_s(0.0, -1.0), DomainError);
    CHECK_THROWS_AS(map_r(Mat2::identity(), SubgroupId::A), DomainError);

    for (int it = 0; it < 500; ++it) {
        const Mat2 g = random_sl2();
        // K chart: closed form for r
        const Mat2 rk = map_r(g, SubgroupId::K);
        const double r = std::hypot(g.c, g.d);
        CHECK(approx_eq(rk, Mat2{g.d / r, -g.c / r, g.c / r, g.d / r}, 1e-12));
        // decomposition identity g = s(p(g)) r(g) on every chart
        for (SubgroupId id : {SubgroupId::K, SubgroupId::Nprime, SubgroupId::Aprime}) {
            Mat2 rm;
            try {
                rm = map_r(g, id);
            } catch (const Error&) {
                continue; // point left the chart (A' second sheet etc.)
            }
            const Hyper w = moebius(g, Hyper::unit(isotropy_kind(id)));
            CHECK(approx_eq(section_s(w.u, w.v) * rm, g, 1e-10));
            // r lands in the subgroup
            if (id == SubgroupId::Nprime) {
                CHECK(rm.a == doctest::Approx(1.0).epsilon(1e-10));
                CHECK(std::abs(rm.b) < 1e-10);
            }
            if (id == SubgroupId::Aprime) {
                CHECK(std::abs(rm.a - rm.d) < 1e-10);
                CHECK(std::abs(rm.b - rm.c) < 1e-10);
            }
        }
    }
}

namespace {
UHPFunction gaussian_uhp(AlgebraKind plane, double u0, double v0, double width) {
    UHPFunction f;
    f.plane = plane;
    f.eval = [u0, v0, width](double u, double v) {
        const double r2 = (u - u0) * (u - u0) + (v - v0) * (v - v0);
        return DualComplex{Cx{std::exp(-r2 / (width * width)), 0.0}, Cx{0, 0}};
    };
    return f;
}
} // namespace

TEST_CASE("induced actions are homomorphisms on sample points") {
    struct Probe {
        RepChoice rep;
        AlgebraKind plane;
    };
    const Probe probes[] = {
        {RepChoice::discrete_k(1), AlgebraKind::Elliptic},
        {RepChoice::discrete_k(2, false), AlgebraKind::Elliptic},
        {RepChoice::complex_n(0.8), AlgebraKind::Parabolic},
        {RepChoice::dual_n(0.8), AlgebraKind::Parabolic},
    };
    for (const Probe& pr : probes) {
        UHPFunction f = gaussian_uhp(pr.plane, 0.2, 1.5, 1.0);
        if (pr.rep.which == RepChoice::Which::DualN) f.dual_valued = true;
        for (int it = 0; it < 40; ++it) {
            const Mat2 g1 = random_sl2(0.5), g2 = random_sl2(0.5);
            const UHPFunction lhs = sl2_rep_action(pr.rep, g1, sl2_rep_action(pr.rep, g2, f));
            const UHPFunction rhs = sl2_rep_action(pr.rep, g1 * g2, f);
            for (int s = 0; s < 64; ++s) {
                const Hyper w = random_uhp(pr.plane);
                DualComplex a, b;
                try {
                    a = lhs(w.u, w.v);
                    b = rhs(w.u, w.v);
                } catch (const NonInvertibleDenominator&) {
                    continue;
                }
                CHECK(std::abs(a.z - b.z) < 1e-10);
                CHECK(std::abs(a.w - b.w) < 1e-10);
            }
        }
        // identity acts trivially
        const UHPFunction idf = sl2_rep_action(pr.rep, Mat2::identity(), f);
        const Hyper w = random_uhp(pr.plane);
        CHECK(std::abs(idf(w.u, w.v).z - f(w.u, w.v).z) < 1e-14);
    }
}

TEST_CASE("dual-number action is linear over the p block") {
    // f and f + p g transform consistently: the p block of the image of f+pg
    // equals (image of f).w + (image of g).z scaled by the same cocycle
    UHPFunction f = gaussian_uhp(AlgebraKind::Parabolic, 0.0, 1.2, 0.9);
    f.dual_valued = true;
    UHPFunction g = gaussian_uhp(AlgebraKind::Parabolic, -0.4, 1.8, 1.3);
    UHPFunction fpg;
    fpg.plane = AlgebraKind::Parabolic;
    fpg.dual_valued = true;
    fpg.eval = [f, g](double u, double v) {
        return DualComplex{f.eval(u, v).z, g.eval(u, v).z};
    };
    const RepChoice rep = RepChoice::dual_n(0.6);
    for (int it = 0; it < 25; ++it) {
        const Mat2 m = random_sl2(0.5);
        const UHPFunction a = sl2_rep_action(rep, m, fpg);
        const UHPFunction af = sl2_rep_action(rep, m, f);
        const UHPFunction ag = sl2_rep_action(rep, m, g);
        const Hyper w = random_uhp(AlgebraKind::Parabolic);
        const DualComplex va = a(w.u, w.v);
        const DualComplex vf = af(w.u, w.v);
        const DualComplex vg = ag(w.u, w.v);
        CHECK(std::abs(va.z - vf.z) < 1e-12);
        // p-linearity: p-block of image(f+pg) = p-block of image(f) + main of image(g)
        CHECK(std::abs(va.w - (vf.w + vg.z)) < 1e-12);
    }
}

TEST_CASE("invariant inner product on the half-plane") {
    UHPFunction zero;
    zero.plane = AlgebraKind::Parabolic;
    zero.eval = [](double, double) { return DualComplex{}; };
    UHPFunction f1 = gaussian_uhp(AlgebraKind::Parabolic, 0.0, 2.0, 0.5);
    UHPFunction f2 = gaussian_uhp(AlgebraKind::Parabolic, 0.3, 1.7, 0.6);

    const DualComplex z = uhp_inner_product(zero, f1);
    CHECK(std::abs(z.z) < 1e-14);

    // conjugate symmetry
    const DualComplex ab = uhp_inner_product(f1, f2);
    const DualComplex ba = uhp_inner_product(f2, f1);
    CHECK(std::abs(ab.z - std::conj(ba.z)) < 1e-12);

    // unitarity of the complex-valued N-induced action
    const RepChoice rep = RepChoice::complex_n(0.9);
    const Mat2 gs[] = {subgroup_element(SubgroupId::N, 0.3),
                       subgroup_element(SubgroupId::A, 0.25),
                       subgroup_element(SubgroupId::Nprime, 0.2),
                       random_sl2(0.25)};
    const DualComplex base = uhp_inner_product(f1, f2);
    for (const Mat2& g : gs) {
        const DualComplex moved =
            uhp_inner_product(sl2_rep_action(rep, g, f1), sl2_rep_action(rep, g, f2));
        CHECK(std::abs(moved.z - base.z) < 1e-4);
    }

    // dual-valued variant: same invariance, value reported in dual numbers
    const RepChoice drep = RepChoice::dual_n(0.9);
    UHPFunction d1 = f1, d2 = f2;
    d1.dual_valued = d2.dual_valued = true;
    const DualComplex dbase = uhp_inner_product(d1, d2);
    for (const Mat2& g : gs) {
        const DualComplex moved =
            uhp_inner_product(sl2_rep_action(drep, g, d1), sl2_rep_action(drep, g, d2));
        CHECK(std::abs(moved.z - dbase.z) < 1e-4);
        CHECK(std::abs(moved.w - dbase.w) < 1e-4);
    }
}

TEST_CASE("unitary line form of the weight-1 action") {
    auto f = [](double x) { return Cx{std::exp(-x * x / 2.0), 0.0}; };
    const Mat2 g = random_sl2(0.6);
    auto gf = line_rep_action(g, f);
    auto norm2 = [](const std::function<Cx(double)>& u) {
        return simpson_real_line([&](double x) { return std::norm(u(x)); }, 4000);
    };
    CHECK(norm2(gf) == doctest::Approx(norm2(f)).epsilon(1e-6));
}
