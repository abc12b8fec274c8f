#pragma once

#include <functional>
#include <vector>

#include "eph/heisenberg.hpp"
#include "eph/reps.hpp"

namespace eph {

struct Hamiltonian {
    enum class Kind { Harmonic, Unharmonic } kind = Kind::Harmonic;
    double m = 1.0;      // mass
    double k = 1.0;      // frequency
    double lambda = 0.0; // cubic coupling

    static Hamiltonian harmonic(double m, double k);
    static Hamiltonian unharmonic(double m, double k, double lambda);

    /// H(q,p) = m k^2 q^2/2 (+ lambda q^3/6) + p^2/(2m) as a polynomial.
    PolyQP<double> polynomial() const;
};

enum class DynamicsMode { Quantum, Hyperbolic, Classical };

const char* dynamics_mode_name(DynamicsMode m);

/// Real samples of a phase-space function on a uniform (q,p) grid.
struct PhaseGrid {
    PlanckParams pp;
    double qmin = 0.0, pmin = 0.0;
    double dq = 0.0, dp = 0.0;
    int nq = 0, np = 0;
    std::vector<double> values; // row-major, values[j*nq + i] at (q_i, p_j)

    explicit PhaseGrid(const PlanckParams& pp_) : pp(pp_) {}
    double q_at(int i) const { return qmin + dq * i; }
    double p_at(int j) const { return pmin + dp * j; }
    double at(int i, int j) const { return values[static_cast<size_t>(j) * nq + i]; }
    double& at(int i, int j) { return values[static_cast<size_t>(j) * nq + i]; }
};

PhaseGrid make_phase_grid(const PlanckParams& pp, double L, int n,
                          const std::function<double(double, double)>& f);

/// Max |f| on the outer three-cell frame (the d^3 stencil margin).
double boundary_mass(const PhaseGrid& f);

/// Right-hand side of the dynamic equation in the chosen mode:
///   harmonic:   m k^2 q f_p - p/m f_q (all modes agree),
///   unharmonic: + (lambda/6)(3 q^2 f_p -+ (hbar^2/4) f_ppp)   (quantum/hyperbolic)
///               or the transport form (m k^2 q + lambda q^2/2) f_p - p/m f_q.
PhaseGrid rhs(DynamicsMode mode, const Hamiltonian& H, const PhaseGrid& f);

/// Character-reduced dynamic equation on the (x,y) kernel side:
///   m k^2 y f_x - x/m f_y + (lambda/6)(3 y f_xx + (y^3/4) c^2 f)
/// with c^2 = (i h)^2, (h_unit h)^2 or (p h)^2 per the grid's character.
KernelGrid p_dynamic_rhs(const Hamiltonian& H, const KernelGrid& fxy);

struct EvolveOptions {
    double dt = 0.0;   // 0: choose from the stability guard
    bool conserve_check = false;
};

/// Classical RK4 in time; throws StabilityViolation when dt breaks the
/// CFL-style guard dt * max_speed < 0.5 * min(dq,dp).
PhaseGrid evolve(DynamicsMode mode, const Hamiltonian& H, const PhaseGrid& f0, double dt,
                 int steps);

double l2_norm(const PhaseGrid& f);
double l2_distance(const PhaseGrid& a, const PhaseGrid& b);

enum class AnalyticDomain { PhaseSpace, KernelSide };

/// Closed-form harmonic flow: pullback along the rotation-with-scaling, on
/// the (q,p) side (consistent with rhs) or the (x,y) side.
std::function<double(double, double)> harmonic_analytic(
    const Hamiltonian& H, const std::function<double(double, double)>& f0, double t,
    AnalyticDomain domain = AnalyticDomain::PhaseSpace);

} // namespace eph
