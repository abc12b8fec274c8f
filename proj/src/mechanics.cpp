#include "eph/mechanics.hpp"

#include <cmath>

namespace eph {

Hamiltonian Hamiltonian::harmonic(double m, double k) {
    if (m <= 0.0 || k <= 0.0) throw DomainError("mass and frequency must be positive");
    return {Kind::Harmonic, m, k, 0.0};
}

Hamiltonian Hamiltonian::unharmonic(double m, double k, double lambda) {
    if (m <= 0.0 || k <= 0.0) throw DomainError("mass and frequency must be positive");
    return {Kind::Unharmonic, m, k, lambda};
}

PolyQP<double> Hamiltonian::polynomial() const {
    PolyQP<double> H = PolyQP<double>::monomial(0.5 * m * k * k, 2, 0) +
                       PolyQP<double>::monomial(0.5 / m, 0, 2);
    if (kind == Kind::Unharmonic) H = H + PolyQP<double>::monomial(lambda / 6.0, 3, 0);
    return H;
}

const char* dynamics_mode_name(DynamicsMode m) {
    switch (m) {
        case DynamicsMode::Quantum: return "quantum";
        case DynamicsMode::Hyperbolic: return "hyperbolic";
        case DynamicsMode::Classical: return "classical";
    }
    return "?";
}

PhaseGrid make_phase_grid(const PlanckParams& pp, double L, int n,
                          const std::function<double(double, double)>& f) {
    if (n < 8) throw GridMismatch("phase grid too small");
    PhaseGrid g(pp);
    g.nq = g.np = n;
    g.qmin = g.pmin = -L;
    g.dq = g.dp = 2.0 * L / (n - 1);
    g.values.resize(static_cast<size_t>(n) * n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) g.at(i, j) = f(g.q_at(i), g.p_at(j));
    return g;
}

double boundary_mass(const PhaseGrid& f) {
    double m = 0.0;
    for (int j = 0; j < f.np; ++j)
        for (int i = 0; i < f.nq; ++i)
            if (i < 3 || j < 3 || i >= f.nq - 3 || j >= f.np - 3)
                m = std::max(m, std::abs(f.at(i, j)));
    return m;
}

namespace {

// 4th-order central stencils on grid data; zero outside the stencil margin.
struct GridDeriv {
    const PhaseGrid& f;

    double dq(int i, int j) const {
        if (i < 2 || i >= f.nq - 2) return 0.0;
        return (f.at(i - 2, j) - 8.0 * f.at(i - 1, j) + 8.0 * f.at(i + 1, j) - f.at(i + 2, j)) /
               (12.0 * f.dq);
    }
    double dp(int i, int j) const {
        if (j < 2 || j >= f.np - 2) return 0.0;
        return (f.at(i, j - 2) - 8.0 * f.at(i, j - 1) + 8.0 * f.at(i, j + 1) - f.at(i, j + 2)) /
               (12.0 * f.dp);
    }
    double dp3(int i, int j) const {
        if (j < 3 || j >= f.np - 3) return 0.0;
        return (0.125 * f.at(i, j - 3) - f.at(i, j - 2) + 1.625 * f.at(i, j - 1) -
                1.625 * f.at(i, j + 1) + f.at(i, j + 2) - 0.125 * f.at(i, j + 3)) /
               (f.dp * f.dp * f.dp);
    }
};

PhaseGrid rhs_impl(DynamicsMode mode, const Hamiltonian& H, const PhaseGrid& f) {
    PhaseGrid out = f;
    const GridDeriv d{f};
    const double mk2 = H.m * H.k * H.k;
    const double invm = 1.0 / H.m;
    const bool cubic = H.kind == Hamiltonian::Kind::Unharmonic;
    const double hbar2_4 = f.pp.hbar * f.pp.hbar / 4.0;
    for (int j = 0; j < f.np; ++j) {
        const double p = f.p_at(j);
        for (int i = 0; i < f.nq; ++i) {
            const double q = f.q_at(i);
            const double fq = d.dq(i, j);
            const double fp = d.dp(i, j);
            double v = mk2 * q * fp - invm * p * fq;
            if (cubic) {
                switch (mode) {
                    case DynamicsMode::Quantum:
                        v += (H.lambda / 6.0) * (3.0 * q * q * fp - hbar2_4 * d.dp3(i, j));
                        break;
                    case DynamicsMode::Hyperbolic:
                        v += (H.lambda / 6.0) * (3.0 * q * q * fp + hbar2_4 * d.dp3(i, j));
                        break;
                    case DynamicsMode::Classical:
                        v += (H.lambda / 2.0) * q * q * fp;
                        break;
                }
            }
            out.at(i, j) = v;
        }
    }
    return out;
}

} // namespace

PhaseGrid rhs(DynamicsMode mode, const Hamiltonian& H, const PhaseGrid& f) {
    if (boundary_mass(f) > 1e-6) throw BoundaryUnderflowViolation();
    return rhs_impl(mode, H, f);
}

KernelGrid p_dynamic_rhs(const Hamiltonian& H, const KernelGrid& fxy) {
    const double mk2 = H.m * H.k * H.k;
    const double invm = 1.0 / H.m;
    const double h = fxy.planck_h;
    // character square of the centre direction
    double c2 = 0.0;
    switch (fxy.kind) {
        case AlgebraKind::Elliptic: c2 = -h * h; break;
        case AlgebraKind::Hyperbolic: c2 = h * h; break;
        case AlgebraKind::Parabolic: c2 = 0.0; break;
    }
    KernelGrid out = fxy;
    auto val = [&](int i, int j) -> const Hyper& { return fxy.at(i, j); };
    for (int j = 0; j < fxy.ny; ++j) {
        const double y = fxy.y_at(j);
        for (int i = 0; i < fxy.nx; ++i) {
            const double x = fxy.x_at(i);
            Hyper fx = Hyper::real(0.0, fxy.kind);
            Hyper fy = fx, fxx = fx;
            if (i >= 2 && i < fxy.nx - 2) {
                fx = scale(1.0 / (12.0 * fxy.dx),
                           add(sub(val(i - 2, j), scale(8.0, val(i - 1, j))),
                               sub(scale(8.0, val(i + 1, j)), val(i + 2, j))));
                fxx = scale(1.0 / (12.0 * fxy.dx * fxy.dx),
                            add(add(neg(val(i - 2, j)), scale(16.0, val(i - 1, j))),
                                add(add(scale(-30.0, val(i, j)), scale(16.0, val(i + 1, j))),
                                    neg(val(i + 2, j)))));
            }
            if (j >= 2 && j < fxy.ny - 2) {
                fy = scale(1.0 / (12.0 * fxy.dy),
                           add(sub(val(i, j - 2), scale(8.0, val(i, j - 1))),
                               sub(scale(8.0, val(i, j + 1)), val(i, j + 2))));
            }
            Hyper v = sub(scale(mk2 * y, fx), scale(invm * x, fy));
            if (H.kind == Hamiltonian::Kind::Unharmonic) {
                v = add(v, scale(H.lambda / 6.0,
                                 add(scale(3.0 * y, fxx),
                                     scale(0.25 * y * y * y * c2, val(i, j)))));
            }
            out.at(i, j) = v;
        }
    }
    return out;
}

PhaseGrid evolve(DynamicsMode mode, const Hamiltonian& H, const PhaseGrid& f0, double dt,
                 int steps) {
    if (steps < 0) throw DomainError("negative step count");
    // stability guard: transport speed against the grid step
    const double qmax = std::max(std::abs(f0.qmin), std::abs(f0.q_at(f0.nq - 1)));
    const double pmax = std::max(std::abs(f0.pmin), std::abs(f0.p_at(f0.np - 1)));
    double speed = std::max(H.m * H.k * H.k * qmax, pmax / H.m);
    if (H.kind == Hamiltonian::Kind::Unharmonic)
        speed += 0.5 * std::abs(H.lambda) * qmax * qmax;
    if (steps > 0 && !(dt * speed < 0.5 * std::min(f0.dq, f0.dp))) throw StabilityViolation();

    PhaseGrid f = f0;
    for (int s = 0; s < steps; ++s) {
        const PhaseGrid k1 = rhs(mode, H, f);
        PhaseGrid tmp = f;
        for (size_t i = 0; i < tmp.values.size(); ++i)
            tmp.values[i] = f.values[i] + 0.5 * dt * k1.values[i];
        const PhaseGrid k2 = rhs_impl(mode, H, tmp);
        for (size_t i = 0; i < tmp.values.size(); ++i)
            tmp.values[i] = f.values[i] + 0.5 * dt * k2.values[i];
        const PhaseGrid k3 = rhs_impl(mode, H, tmp);
        for (size_t i = 0; i < tmp.values.size(); ++i)
            tmp.values[i] = f.values[i] + dt * k3.values[i];
        const PhaseGrid k4 = rhs_impl(mode, H, tmp);
        for (size_t i = 0; i < f.values.size(); ++i)
            f.values[i] += (dt / 6.0) * (k1.values[i] + 2.0 * k2.values[i] + 2.0 * k3.values[i] +
                                         k4.values[i]);
    }
    return f;
}

double l2_norm(const PhaseGrid& f) {
    double s = 0.0;
    for (double v : f.values) s += v * v;
    return std::sqrt(s * f.dq * f.dp);
}

double l2_distance(const PhaseGrid& a, const PhaseGrid& b) {
    double s = 0.0;
    for (size_t i = 0; i < a.values.size(); ++i) {
        const double d = a.values[i] - b.values[i];
        s += d * d;
    }
    return std::sqrt(s * a.dq * a.dp);
}

std::function<double(double, double)> harmonic_analytic(
    const Hamiltonian& H, const std::function<double(double, double)>& f0, double t,
    AnalyticDomain domain) {
    const double mk = H.m * H.k;
    const double c = std::cos(H.k * t), s = std::sin(H.k * t);
    if (domain == AnalyticDomain::KernelSide) {
        // f(t; x, y) = f0(x cos kt + m k y sin kt, -(x / m k) sin kt + y cos kt)
        return [f0, mk, c, s](double x, double y) {
            return f0(x * c + mk * y * s, -(x / mk) * s + y * c);
        };
    }
    // transport along q' = -p/m, p' = m k^2 q; the pullback rotates the
    // arguments the opposite way
    return [f0, mk, c, s](double q, double p) {
        return f0(q * c - (p / mk) * s, mk * q * s + p * c);
    };
}

} // namespace eph
