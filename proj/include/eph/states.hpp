#pragma once

#include <functional>
#include <vector>

#include "eph/reps.hpp"

namespace eph {

/// Minimal-uncertainty Gaussian with phase-space mean (a,b) for the
/// oscillator of mass m and frequency k.
struct GaussianState {
    double a = 0.0, b = 0.0;
    double m = 1.0, k = 1.0;
    PlanckParams pp;

    GaussianState(double a_, double b_, double m_, double k_, const PlanckParams& pp_);
    double operator()(double q, double p) const;
};

/// Far-from-minimal rational (Lorentzian-product) state.
struct RationalState {
    double a = 0.0, b = 0.0;
    double m = 1.0, k = 1.0;
    PlanckParams pp;

    RationalState(double a_, double b_, double m_, double k_, const PlanckParams& pp_);
    double operator()(double q, double p) const;
};

/// Compactly supported C^2 bump (1-t^2)^3 product, for the classical
/// disjoint-support checks.
struct BumpState {
    double a = 0.0, b = 0.0, width = 1.0;

    double operator()(double q, double p) const;
    double dq(double q, double p) const;
    double dp(double q, double p) const;
};

enum class ProbabilityMode { Quantum, Hyperbolic, Classical };

const char* probability_mode_name(ProbabilityMode m);

/// State kernel l(s,x,y) = <v, rho(s,x,y) v> over the Heisenberg group.
struct StateKernel {
    ProbabilityMode mode = ProbabilityMode::Quantum;
    PlanckParams pp;
    std::function<Cx(double s, double x, double y)> eval;

    explicit StateKernel(const PlanckParams& pp_) : pp(pp_) {}
};

/// Closed form of the Gaussian self-kernel (prefactor 4/hbar).
StateKernel gauss_kernel(const GaussianState& st);

/// Cross kernel <v_{(a,b)}, rho(s,x,y) v_{(a',b')}> in closed form.
std::function<Cx(double, double, double)> gauss_cross_kernel(const GaussianState& s1,
                                                             const GaussianState& s2);

/// Quadrature of the defining inner product through the phase-space action
/// (oracle for the closed forms).
Cx gauss_kernel_quadrature(const GaussianState& s1, const GaussianState& s2, const HElem& g,
                           double L = 8.0, int n = 400);

/// Measurement of the position observable at q = c on a state kernel:
/// (hbar/4) Int e^{-2 pi i x c} l(0,x,0) dx.
double measure_position(double c, const StateKernel& l, double xlim = 14.0, int nx = 4096);

/// Closed form sqrt(2km/hbar) exp(-2 pi k m (c-a)^2 / hbar) for Gaussians.
double gauss_measure_closed_form(double c, const GaussianState& st);

struct StatePair {
    enum class Family { Gaussian, Rational, Bump } family = Family::Gaussian;
    // means; both states share (m, k) and widths
    double a1 = 0.0, b1 = 0.0, a2 = 0.0, b2 = 0.0;
    double m = 1.0, k = 1.0;
    double bump_width = 0.6;
};

/// Measurement of X_c on the superposed state v1 + v2 in the chosen mode:
/// m1 + m2 + cross, with the cross term per mode/family.
double superposition_measurement(const StatePair& pair, double c, ProbabilityMode mode,
                                 const PlanckParams& pp);

/// The c-resolved interference cross term alone.
double interference_cross_term(const StatePair& pair, double c, ProbabilityMode mode,
                               const PlanckParams& pp);

/// l1 + l2 + 2 A sqrt(l1 l2) with the mode range check on A:
/// elliptic |A|<=1 (cosine), hyperbolic |A|>=1 (hyperbolic cosine),
/// parabolic A in {-1, +1}.
double probability_addition(double l1, double l2, double A, ProbabilityMode mode);

struct InterferenceRow {
    double c = 0.0;
    double sum = 0.0;          // without interaction
    double interference = 0.0; // with the cross term
};

std::vector<InterferenceRow> interference_curve(const StatePair& pair,
                                                const std::vector<double>& cs,
                                                ProbabilityMode mode, const PlanckParams& pp);

/// Interior local extrema of the interference column (noise-thresholded).
int count_interior_extrema(const std::vector<InterferenceRow>& rows, double rel_tol = 1e-9);

/// Direct 3-D quadrature of the measurement (coarse oracle for the partial
/// Fourier route).
double measure_position_direct(const StatePair& pair, double c, const PlanckParams& pp);

} // namespace eph
