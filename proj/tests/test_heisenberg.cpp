#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "eph/heisenberg.hpp"
#include "eph/reps.hpp"

using namespace eph;

namespace {
std::mt19937 rng(4242);
double rnd(double span = 2.0) {
    std::uniform_real_distribution<double> d(-span, span);
    return d(rng);
}
HElem random_elem(double span = 2.0) { return {rnd(span), rnd(span), rnd(span)}; }

bool helem_eq(const HElem& a, const HElem& b, double tol) {
    return std::abs(a.s - b.s) <= tol && std::abs(a.x - b.x) <= tol && std::abs(a.y - b.y) <= tol;
}
} // namespace

TEST_CASE("group law") {
    CHECK(helem_eq(h_mul({0, 1, 0}, {0, 0, 1}), {0.5, 1, 1}, 0.0));
    CHECK(helem_eq(h_mul({0, 0, 1}, {0, 1, 0}), {-0.5, 1, 1}, 0.0));
    for (int it = 0; it < 10000; ++it) {
        const HElem a = random_elem(), b = random_elem(), c = random_elem();
        CHECK(helem_eq(h_mul(h_mul(a, b), c), h_mul(a, h_mul(b, c)), 1e-14));
        CHECK(helem_eq(h_mul(a, h_inv(a)), {0, 0, 0}, 1e-15));
        // centre commutes with everything
        const HElem z{rnd(), 0, 0};
        CHECK(helem_eq(h_mul(z, a), h_mul(a, z), 0.0));
    }
}

TEST_CASE("symplectic automorphisms") {
    const Mat2 j{0, 1, -1, 0};
    const HElem g{0.3, 0.7, -1.1};
    CHECK(helem_eq(sp_action(j, g), {0.3, -1.1, -0.7}, 0.0));
    CHECK(helem_eq(sp_action(Mat2::identity(), g), g, 0.0));

    std::uniform_real_distribution<double> d(-0.9, 0.9);
    for (int it = 0; it < 2000; ++it) {
        const Mat2 m = subgroup_element(SubgroupId::A, d(rng)) *
                       subgroup_element(SubgroupId::N, d(rng)) *
                       subgroup_element(SubgroupId::K, d(rng));
        const HElem a = random_elem(), b = random_elem();
        CHECK(helem_eq(sp_action(m, h_mul(a, b)), h_mul(sp_action(m, a), sp_action(m, b)), 1e-12));
        // the symplectic form is preserved
        const double w1 = symplectic_form(a.x, a.y, b.x, b.y);
        const HElem ma = sp_action(m, a), mb = sp_action(m, b);
        CHECK(std::abs(symplectic_form(ma.x, ma.y, mb.x, mb.y) - w1) < 1e-12);
        // centre fixed pointwise
        CHECK(helem_eq(sp_action(m, {a.s, 0, 0}), {a.s, 0, 0}, 0.0));
    }
}

TEST_CASE("invariant vector fields") {
    auto fs = [](const HElem& g) { return g.s; };
    CHECK(invariant_field(FieldName::S, FieldSide::Left, fs, {0.2, -0.4, 1.0}) ==
          doctest::Approx(1.0));
    auto fx = [](const HElem& g) { return g.x; };
    CHECK(invariant_field(FieldName::X, FieldSide::Left, fx, {0, 1, 2}) == doctest::Approx(1.0));
    CHECK(invariant_field(FieldName::X, FieldSide::Right, fx, {0, 1, 2}) == doctest::Approx(-1.0));

    // [X^l, Y^l] = S^l on smooth test functions, nested differences
    auto test_fn = [](const HElem& g) {
        return std::exp(-(g.x * g.x + g.y * g.y) / 2.0) * (1.0 + g.s * g.s + 0.5 * g.x * g.y);
    };
    for (FieldSide side : {FieldSide::Left, FieldSide::Right}) {
        for (int it = 0; it < 20; ++it) {
            const HElem at = random_elem(1.0);
            auto yf = [&](const HElem& g) {
                return invariant_field(FieldName::Y, side, test_fn, g, 1e-5);
            };
            auto xf = [&](const HElem& g) {
                return invariant_field(FieldName::X, side, test_fn, g, 1e-5);
            };
            const double xy = invariant_field(FieldName::X, side, yf, at, 1e-3);
            const double yx = invariant_field(FieldName::Y, side, xf, at, 1e-3);
            const double sf = invariant_field(FieldName::S, side, test_fn, at, 1e-5);
            const double scale = std::max(1.0, std::abs(sf));
            CHECK(std::abs((xy - yx) - sf) / scale < 1e-6);
        }
    }
}

namespace {
KernelGrid gaussian_grid(AlgebraKind kind, double h, double L, int n, double ax, double ay,
                         double phase_x = 0.0) {
    return sample_kernel(kind, h, L, n, [=](double x, double y) {
        const double env = std::exp(-ax * x * x - ay * y * y + phase_x * x);
        return Hyper::real(env, kind);
    });
}
} // namespace

TEST_CASE("reduced composition: discrete delta is the unit") {
    for (AlgebraKind k : {AlgebraKind::Elliptic, AlgebraKind::Parabolic, AlgebraKind::Hyperbolic}) {
        const KernelGrid k1 = gaussian_grid(k, 1.0, 4.0, 32, 1.0, 1.2);
        const KernelGrid dlt = delta_kernel(k1, 0.0, 0.0);
        const KernelGrid comp = reduced_composition(k1, dlt);
        CHECK(grid_max_abs(grid_sub(comp, k1)) < 1e-12);
    }
}

TEST_CASE("reduced composition is bilinear") {
    const AlgebraKind k = AlgebraKind::Elliptic;
    const KernelGrid a = gaussian_grid(k, 1.0, 4.0, 24, 1.0, 0.8);
    const KernelGrid b = gaussian_grid(k, 1.0, 4.0, 24, 0.7, 1.1);
    const KernelGrid c = gaussian_grid(k, 1.0, 4.0, 24, 1.3, 0.9);
    KernelGrid apb = a;
    for (size_t i = 0; i < apb.values.size(); ++i)
        apb.values[i] = add(a.values[i], scale(2.0, b.values[i]));
    const KernelGrid lhs = reduced_composition(apb, c);
    KernelGrid rhs = reduced_composition(a, c);
    const KernelGrid bc = reduced_composition(b, c);
    for (size_t i = 0; i < rhs.values.size(); ++i)
        rhs.values[i] = add(rhs.values[i], scale(2.0, bc.values[i]));
    CHECK(grid_max_abs(grid_sub(lhs, rhs)) < 1e-10 * grid_max_abs(lhs));
}

TEST_CASE("reduced commutator: antisymmetry and self-commutator") {
    for (AlgebraKind k : {AlgebraKind::Elliptic, AlgebraKind::Parabolic, AlgebraKind::Hyperbolic}) {
        const KernelGrid a = gaussian_grid(k, 1.0, 4.0, 24, 1.0, 0.8, 0.3);
        const KernelGrid b = gaussian_grid(k, 1.0, 4.0, 24, 0.7, 1.1);
        CHECK(grid_max_abs(reduced_commutator(a, a)) == 0.0);
        const KernelGrid ab = reduced_commutator(a, b);
        const KernelGrid ba = reduced_commutator(b, a);
        KernelGrid sum = ab;
        for (size_t i = 0; i < sum.values.size(); ++i)
            sum.values[i] = add(ab.values[i], ba.values[i]);
        CHECK(grid_max_abs(sum) < 1e-12 * std::max(1.0, grid_max_abs(ab)));
    }
}

TEST_CASE("elliptic commutator equals the composition difference") {
    const KernelGrid a = gaussian_grid(AlgebraKind::Elliptic, 1.0, 4.0, 32, 1.0, 0.8, 0.4);
    const KernelGrid b = gaussian_grid(AlgebraKind::Elliptic, 1.0, 4.0, 32, 0.7, 1.1);
    const KernelGrid direct = reduced_commutator(a, b);
    const KernelGrid diff = grid_sub(reduced_composition(a, b), reduced_composition(b, a));
    CHECK(grid_max_abs(grid_sub(direct, diff)) < 1e-6 * std::max(1.0, grid_max_abs(direct)));
}

TEST_CASE("parabolic commutator equals the area-weighted convolution") {
    // symbolic small-grid check: p-part of [k1,k2] must match the h*(x y'-y x')
    // weighted plain convolution of the real kernels
    const double h = 1.0;
    const KernelGrid a = gaussian_grid(AlgebraKind::Parabolic, h, 3.0, 12, 1.0, 0.9, 0.2);
    const KernelGrid b = gaussian_grid(AlgebraKind::Parabolic, h, 3.0, 12, 0.8, 1.2);
    const KernelGrid comm = reduced_commutator(a, b);
    KernelGrid expected = comm;
    const int off = (a.nx - 1) / 2;
    for (int j = 0; j < a.ny; ++j)
        for (int i = 0; i < a.nx; ++i) {
            double acc = 0.0;
            for (int jj = 0; jj < a.ny; ++jj)
                for (int ii = 0; ii < a.nx; ++ii) {
                    const int i2 = i - ii + off, j2 = j - jj + off;
                    if (i2 < 0 || i2 >= a.nx || j2 < 0 || j2 >= a.ny) continue;
                    const double w = symplectic_form(a.x_at(i), a.y_at(j), a.x_at(ii), a.y_at(jj));
                    acc += h * w * a.at(ii, jj).u * b.at(i2, j2).u;
                }
            expected.at(i, j) = Hyper{0.0, acc * a.dx * a.dy, AlgebraKind::Parabolic};
        }
    CHECK(grid_max_abs(grid_sub(comm, expected)) < 1e-12 * std::max(1.0, grid_max_abs(comm)));
}

TEST_CASE("elliptic commutator tends to the parabolic one as h shrinks") {
    // Richardson-style: deviation between sin- and linear-kernel commutators
    // scales like h^2
    auto deviation = [](double h) {
        const KernelGrid a = gaussian_grid(AlgebraKind::Elliptic, h, 4.0, 24, 1.0, 0.8, 0.3);
        const KernelGrid b = gaussian_grid(AlgebraKind::Elliptic, h, 4.0, 24, 0.7, 1.1);
        const KernelGrid ell = reduced_commutator(a, b);
        const KernelGrid ap = gaussian_grid(AlgebraKind::Parabolic, h, 4.0, 24, 1.0, 0.8, 0.3);
        const KernelGrid bp = gaussian_grid(AlgebraKind::Parabolic, h, 4.0, 24, 0.7, 1.1);
        const KernelGrid par = reduced_commutator(ap, bp);
        // compare i-part of the elliptic against p-part of the parabolic
        double dev = 0.0, scale = 0.0;
        for (size_t i = 0; i < ell.values.size(); ++i) {
            dev = std::max(dev, std::abs(ell.values[i].v - par.values[i].v));
            scale = std::max(scale, std::abs(par.values[i].v));
        }
        return dev / scale;
    };
    const double d1 = deviation(0.4);
    const double d2 = deviation(0.2);
    CHECK(d1 / d2 > 3.0); // ~4 for O(h^2)
    CHECK(d1 / d2 < 5.0);
}

TEST_CASE("composition matches the operator product through the phase-space action") {
    const PlanckParams pp(1.0 / (2.0 * M_PI)); // h = 1
    const KernelGrid k1 = gaussian_grid(AlgebraKind::Elliptic, pp.h, 4.0, 32, 1.0, 0.8);
    const KernelGrid k2 = gaussian_grid(AlgebraKind::Elliptic, pp.h, 4.0, 32, 0.9, 1.1);
    PhaseState f = [](double q, double p) {
        return Cx{std::exp(-(q * q + p * p) / 2.0), 0.0};
    };
    const PhaseState lhs = weyl_quantize(pp, reduced_composition(k1, k2), f);
    const PhaseState rhs = weyl_quantize(pp, k1, weyl_quantize(pp, k2, f));
    for (double q : {-0.8, 0.0, 0.7})
        for (double p : {-0.5, 0.3}) {
            const Cx a = lhs(q, p), b = rhs(q, p);
            CHECK(std::abs(a - b) < 1e-3 * (std::abs(a) + std::abs(b) + 1.0));
        }
}
