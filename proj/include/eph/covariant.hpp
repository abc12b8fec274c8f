#pragma once

#include <functional>
#include <string>
#include <vector>

#include "eph/reps.hpp"
#include "eph/sl2.hpp"

namespace eph {

/// Mother wavelet (vacuum state) for the covariant transform.
struct MotherWavelet {
    enum class Group { H1, SL2 } group = Group::H1;
    std::function<Cx(double)> eval;

    /// Gaussian e^{-c q^2 / 2} on the line (H1 case).
    static MotherWavelet gaussian(double c);
    /// f_plus(t) = 1/(t + i) or its conjugate (SL2 case).
    static MotherWavelet cauchy(bool upper = true);
};

/// Transform samples over a homogeneous-space window, along with the
/// on-demand evaluator used by the finite-difference residuals.
struct TransformGrid {
    std::string section; // the section map the grid was sampled through
    double xmin = 0.0, ymin = 0.0;
    double dx = 0.0, dy = 0.0;
    int nx = 0, ny = 0;
    std::vector<Cx> samples; // row-major, samples[j*nx + i]
    std::function<Cx(double, double)> evaluator;

    double x_at(int i) const { return xmin + dx * i; }
    double y_at(int j) const { return ymin + dy * j; }
    const Cx& at(int i, int j) const { return samples[static_cast<size_t>(j) * nx + i]; }
};

struct GridWindow {
    double xmin = -4.0, xmax = 4.0;
    double ymin = -4.0, ymax = 4.0;
    int nx = 64, ny = 64;
};

/// Induced wavelet transform over H1/Z with section s(x,y) = (0,x,y):
/// v~(x,y) = <v, rho(0,x,y) f> through the Schrodinger action.
TransformGrid covariant_transform_h1(const PlanckParams& pp, const ConfState& v,
                                     const MotherWavelet& f, const GridWindow& window,
                                     double qlim = 7.0, int nq = 800);

/// Induced wavelet transform over SL2/K with the upper half-plane section:
/// v~(u+iv) = (1/2pi) <v, rho_1(s(w)) f>, the Cauchy integral for f_plus.
TransformGrid covariant_transform_sl2(const ConfState& v, const MotherWavelet& f,
                                      const GridWindow& window, int nt = 4000);

/// Relative L2 residual of the right-invariant annihilator
///   (hbar c/2 pi) d_x + i d_y + (hbar/2)(2 pi x + i hbar c y)
/// on the transform image of the Gaussian with width parameter c.
double fsb_annihilator_residual(const TransformGrid& tg, const PlanckParams& pp, double c);

/// Discrete Cauchy-Riemann residual of v~(x+iy)/sqrt(y) (holomorphy of the
/// Hardy-space image); `conjugate` checks the anti-holomorphic variant.
double hardy_holomorphy_residual(const TransformGrid& tg, bool conjugate = false);

// ---------------------------------------------------------------------------
// Dispersions and the uncertainty relation on the line.

struct LineQuadrature {
    enum class Kind { Compact, RealLine } kind = Kind::Compact;
    double L = 10.0;
    int n = 4000;
};

Cx line_inner(const ConfState& a, const ConfState& b, const LineQuadrature& quad);

ConfState apply_line_op(const OpExpr<Cx>& A, const ConfState& phi);

/// Delta^2(A) = ||(A - <A>) phi||^2 for a normalized phi.
double dispersion(const OpExpr<Cx>& A, const ConfState& phi, const LineQuadrature& quad);

struct UncertaintyResult {
    double lhs = 0.0; // Delta(A) Delta(B)
    double rhs = 0.0; // |<[A,B] phi, phi>| / 2
};

UncertaintyResult uncertainty_check(const OpExpr<Cx>& A, const OpExpr<Cx>& B,
                                    const ConfState& phi, const LineQuadrature& quad);

/// Coordinate and momentum observables q and (hbar/i) d/dq.
OpExpr<Cx> coordinate_observable();
OpExpr<Cx> momentum_observable(const PlanckParams& pp);

/// Derived operators of the weight-1 line action.
OpExpr<Cx> line_sl2_op(LieGen which);

/// Dispersion product and commutator bound for the Killing-normalized
/// observables i sqrt(2) d rho1(A), i sqrt(2) d rho1(B).
UncertaintyResult sl2_line_uncertainty(const ConfState& phi, const LineQuadrature& quad = {
                                           LineQuadrature::Kind::RealLine, 0.0, 8000});

// ---------------------------------------------------------------------------
// Contravariant transform and reconstruction.

/// M_psi(k)(q) = hbar Int k(x,y) [rho(0,x,y) psi](q) dx dy; the hbar factor is
/// the Plancherel normalization of the (x,y) measure for the hbar-character.
ConfState contravariant_transform(const PlanckParams& pp, const TransformGrid& k,
                                  const MotherWavelet& psi);

/// || M_phi W_phi v - <phi,phi> v || / ||v|| over a central evaluation window.
double reconstruction_check(const PlanckParams& pp, const ConfState& v, const MotherWavelet& phi,
                            const GridWindow& window, double qlim = 7.0, int nq = 800);

// ---------------------------------------------------------------------------
// Equivalence of minimal dispersion and image analyticity.

/// Delta-derivative kernels on a symmetric grid representing the Lie algebra
/// directions X and Y through the integrated action.
KernelGrid delta_derivative_kernel_x(const KernelGrid& like);
KernelGrid delta_derivative_kernel_y(const KernelGrid& like);

struct EquivalenceReport {
    double dispersion_gap = 0.0;       // |Delta Delta - bound|
    double annihilation_residual = 0.0; // FSB-image residual with the matched r
    double recovered_r = 0.0;           // from the dispersion side
};

/// Both sides of the equivalence for the observables encoded by the two
/// delta-derivative kernels, evaluated at the mother wavelet f = e^{-c q^2/2}
/// (or any line state); c_fit is the Gaussian width used to match r = 1/(2 c hbar).
EquivalenceReport uncertainty_analyticity_equivalence(const KernelGrid& k1, const KernelGrid& k2,
                                                      const ConfState& f, double c_fit,
                                                      const PlanckParams& pp);

} // namespace eph
