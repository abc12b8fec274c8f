#pragma once

#include <array>
#include <functional>
#include <vector>

#include "eph/hyper.hpp"
#include "eph/quadrature.hpp"

namespace eph {

/// Real 2x2 matrix with unit determinant, checked on construction.
struct Mat2 {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

    Mat2() = default;
    Mat2(double a_, double b_, double c_, double d_);

    static Mat2 identity() { return {}; }
    double det() const { return a * d - b * c; }
    Mat2 inverse() const { return {d, -b, -c, a}; }
};

Mat2 operator*(const Mat2& g, const Mat2& h);
bool approx_eq(const Mat2& g, const Mat2& h, double tol);

enum class SubgroupId { A, N, K, Nprime, Aprime };

const char* subgroup_name(SubgroupId id);

/// One-parameter subgroup element; K angles are wrapped into (-pi, pi].
Mat2 subgroup_element(SubgroupId id, double t);

/// Hypercomplex unit matching the plane on which the subgroup acts as the
/// isotropy group of the unit.
AlgebraKind isotropy_kind(SubgroupId id);

/// w -> (a w + b)/(c w + d) in the algebra of w.
Hyper moebius(const Mat2& g, const Hyper& w);

/// The same action through the explicit component formula
///   u' = ((au+b)(cu+d) - sigma c a v^2) / D,  v' = v / D,
///   D  = (cu+d)^2 - sigma (cv)^2.
Hyper moebius_components(const Mat2& g, const Hyper& w);

std::vector<Hyper> orbit(SubgroupId id, const Hyper& w0, const std::vector<double>& ts);

/// Residual of the K-orbit implicit equation (u^2 - sigma v^2 + 1)/v = const.
double k_orbit_invariant(const Hyper& w);

struct Iwasawa {
    Mat2 gA, gN, gK;
};

/// g = gA * gN * gK with gA diagonal, gN upper unitriangular, gK a rotation.
Iwasawa iwasawa(const Mat2& g);

/// s(u,v) = (1/sqrt(v)) [[v, u], [0, 1]], v > 0.
Mat2 section_s(double u, double v);

/// r(g) = s(p(g))^{-1} g for the isotropy subgroup chart of `id`
/// (K, N' or A'); p(g) is the Moebius image of the base point `unit`.
Mat2 map_r(const Mat2& g, SubgroupId id);

// ---------------------------------------------------------------------------
// Induced representations on the upper half-plane.

/// Function on an upper half-plane with values in the 1,i (+ optionally p,ip)
/// blocks; `dual_valued` marks genuinely dual-number-valued functions.
struct UHPFunction {
    AlgebraKind plane = AlgebraKind::Elliptic;
    bool dual_valued = false;
    std::function<DualComplex(double u, double v)> eval;

    DualComplex operator()(double u, double v) const {
        if (v <= 0.0) throw DomainError("upper half-plane evaluation needs v > 0");
        return eval(u, v);
    }
};

struct RepChoice {
    enum class Which { DiscreteK, ComplexN, DualN } which = Which::DiscreteK;
    // DiscreteK: integer weight k; when analytic_form the |cw+d|^k factor is
    // stripped (the paper's common practice), otherwise kept.
    int k = 1;
    bool analytic_form = true;
    // ComplexN / DualN: character parameter tau.
    double tau = 1.0;

    static RepChoice discrete_k(int k, bool analytic = true) {
        RepChoice r;
        r.which = Which::DiscreteK;
        r.k = k;
        r.analytic_form = analytic;
        return r;
    }
    static RepChoice complex_n(double tau) {
        RepChoice r;
        r.which = Which::ComplexN;
        r.tau = tau;
        return r;
    }
    static RepChoice dual_n(double tau) {
        RepChoice r;
        r.which = Which::DualN;
        r.tau = tau;
        return r;
    }
};

/// [rho(g) f](w) = chi(r(g^{-1} s(w))) f(g^{-1}.w) for the three explicit
/// induced realisations.
UHPFunction sl2_rep_action(const RepChoice& which, const Mat2& g, const UHPFunction& f);

/// rho_1 on the real line: f -> (cx+d)^{-1} f((ax+b)/(cx+d)), entries of
/// g^{-1}; unitary in L^2(R).
std::function<std::complex<double>(double)> line_rep_action(
    const Mat2& g, const std::function<std::complex<double>(double)>& f);

struct UHPQuadrature {
    double ulim = 8.0;   // u in [-ulim, ulim]
    double vmin = 1e-2;  // v in [vmin, vmax]
    double vmax = 8.0;
    int nu = 256;
    int nv = 256;
};

/// Integral of f1 * conj(f2) du dv / v^2 over the truncated half-plane;
/// conjugation and products are taken in the value algebra.
DualComplex uhp_inner_product(const UHPFunction& f1, const UHPFunction& f2,
                              const UHPQuadrature& quad = {});

} // namespace eph
