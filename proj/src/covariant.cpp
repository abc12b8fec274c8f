#include "eph/covariant.hpp"

#include <cmath>

namespace eph {

namespace {
const Cx kI{0.0, 1.0};
}

MotherWavelet MotherWavelet::gaussian(double c) {
    if (c <= 0.0) throw DomainError("gaussian width must be positive");
    MotherWavelet f;
    f.group = Group::H1;
    f.eval = [c](double q) { return Cx{std::exp(-c * q * q / 2.0), 0.0}; };
    return f;
}

MotherWavelet MotherWavelet::cauchy(bool upper) {
    MotherWavelet f;
    f.group = Group::SL2;
    f.eval = [upper](double t) { return 1.0 / Cx{t, upper ? 1.0 : -1.0}; };
    return f;
}

TransformGrid covariant_transform_h1(const PlanckParams& pp, const ConfState& v,
                                     const MotherWavelet& f, const GridWindow& window,
                                     double qlim, int nq) {
    if (f.group != MotherWavelet::Group::H1) throw ValueAlgebraMismatch("H1 mother expected");
    const auto fe = f.eval;
    const double hbar = pp.hbar;
    auto evaluator = [fe, v, hbar, qlim, nq](double x, double y) {
        // <v, rho(0,x,y) f> with the configuration-space action
        auto integrand = [&](double q) {
            const Cx moved = std::exp(kI * (-M_PI * hbar * x * y + 2.0 * M_PI * x * q)) *
                             fe(q - hbar * y);
            return v(q) * std::conj(moved);
        };
        return simpson(integrand, -qlim, qlim, nq);
    };
    TransformGrid tg;
    tg.section = "s(x,y) = (0,x,y)";
    tg.nx = window.nx;
    tg.ny = window.ny;
    tg.xmin = window.xmin;
    tg.ymin = window.ymin;
    tg.dx = (window.xmax - window.xmin) / (window.nx - 1);
    tg.dy = (window.ymax - window.ymin) / (window.ny - 1);
    tg.samples.resize(static_cast<size_t>(tg.nx) * tg.ny);
    for (int j = 0; j < tg.ny; ++j)
        for (int i = 0; i < tg.nx; ++i)
            tg.samples[static_cast<size_t>(j) * tg.nx + i] = evaluator(tg.x_at(i), tg.y_at(j));
    tg.evaluator = evaluator;
    return tg;
}

TransformGrid covariant_transform_sl2(const ConfState& v, const MotherWavelet& f,
                                      const GridWindow& window, int nt) {
    if (f.group != MotherWavelet::Group::SL2) throw ValueAlgebraMismatch("SL2 mother expected");
    if (window.ymin <= 0.0) throw DomainError("upper half-plane window needs y > 0");
    const auto fe = f.eval;
    auto evaluator = [fe, v, nt](double u, double w) {
        // (1/2 pi) <v, rho_1(s(u+iw)) f> via the weight-1 line action
        auto integrand = [&](double t) {
            const Cx moved = fe((t - u) / w) / std::sqrt(w);
            return v(t) * std::conj(moved);
        };
        return (1.0 / (2.0 * M_PI)) * simpson_real_line(integrand, nt);
    };
    TransformGrid tg;
    tg.section = "s(u+iv) = v^{-1/2} [[v,u],[0,1]]";
    tg.nx = window.nx;
    tg.ny = window.ny;
    tg.xmin = window.xmin;
    tg.ymin = window.ymin;
    tg.dx = (window.xmax - window.xmin) / (window.nx - 1);
    tg.dy = (window.ymax - window.ymin) / (window.ny - 1);
    tg.samples.resize(static_cast<size_t>(tg.nx) * tg.ny);
    for (int j = 0; j < tg.ny; ++j)
        for (int i = 0; i < tg.nx; ++i)
            tg.samples[static_cast<size_t>(j) * tg.nx + i] = evaluator(tg.x_at(i), tg.y_at(j));
    tg.evaluator = evaluator;
    return tg;
}

namespace {

Cx fd_xy(const std::function<Cx(double, double)>& f, double x, double y, bool along_y,
         double step = 1e-2) {
    auto g = [&](double t) { return along_y ? f(x, t) : f(t, y); };
    return fd_derivative(g, along_y ? y : x, 1, step);
}

} // namespace

double fsb_annihilator_residual(const TransformGrid& tg, const PlanckParams& pp, double c) {
    if (!tg.evaluator) throw QuadratureDomainError("transform grid has no evaluator");
    const double hbar = pp.hbar;
    double num = 0.0, den = 0.0;
    for (int j = 1; j + 1 < tg.ny; ++j)
        for (int i = 1; i + 1 < tg.nx; ++i) {
            const double x = tg.x_at(i), y = tg.y_at(j);
            const Cx vx = fd_xy(tg.evaluator, x, y, false);
            const Cx vy = fd_xy(tg.evaluator, x, y, true);
            const Cx val = tg.at(i, j);
            // right shifts generated by the centre act as -2 pi i hbar here,
            // which fixes the sign of the multiplication part
            const Cx t1 = (hbar * c / (2.0 * M_PI)) * vx;
            const Cx t2 = kI * vy;
            const Cx t3 = (hbar / 2.0) * (2.0 * M_PI * x + kI * hbar * c * y) * val;
            num += std::norm(t1 + t2 + t3);
            den += std::norm(t1) + std::norm(t2) + std::norm(t3);
        }
    return std::sqrt(num / std::max(den, 1e-300));
}

double hardy_holomorphy_residual(const TransformGrid& tg, bool conjugate) {
    if (!tg.evaluator) throw QuadratureDomainError("transform grid has no evaluator");
    auto scaled = [&](double x, double y) { return tg.evaluator(x, y) / std::sqrt(y); };
    double num = 0.0, den = 0.0;
    for (int j = 1; j + 1 < tg.ny; ++j)
        for (int i = 1; i + 1 < tg.nx; ++i) {
            const double x = tg.x_at(i), y = tg.y_at(j);
            const Cx vx = fd_xy(scaled, x, y, false);
            const Cx vy = fd_xy(scaled, x, y, true);
            const Cx r = conjugate ? vx - kI * vy : vx + kI * vy;
            num += std::norm(r);
            den += std::norm(vx) + std::norm(vy);
        }
    return std::sqrt(num / std::max(den, 1e-300));
}

// ---------------------------------------------------------------------------

Cx line_inner(const ConfState& a, const ConfState& b, const LineQuadrature& quad) {
    auto f = [&](double q) { return a(q) * std::conj(b(q)); };
    if (quad.kind == LineQuadrature::Kind::RealLine) return simpson_real_line(f, quad.n);
    return simpson(f, -quad.L, quad.L, quad.n);
}

ConfState apply_line_op(const OpExpr<Cx>& A, const ConfState& phi) {
    StateFn<Cx> f2 = [phi](double q, double) { return phi(q); };
    auto applied = A.applied(f2);
    return [applied](double q) { return applied(q, 0.0); };
}

double dispersion(const OpExpr<Cx>& A, const ConfState& phi, const LineQuadrature& quad) {
    const double norm2 = line_inner(phi, phi, quad).real();
    const ConfState Aphi = apply_line_op(A, phi);
    const Cx mean = line_inner(Aphi, phi, quad) / norm2;
    auto shifted = [Aphi, phi, mean](double q) { return Aphi(q) - mean * phi(q); };
    return line_inner(shifted, shifted, quad).real() / norm2;
}

UncertaintyResult uncertainty_check(const OpExpr<Cx>& A, const OpExpr<Cx>& B,
                                    const ConfState& phi, const LineQuadrature& quad) {
    UncertaintyResult r;
    r.lhs = std::sqrt(std::max(dispersion(A, phi, quad), 0.0) *
                      std::max(dispersion(B, phi, quad), 0.0));
    const double norm2 = line_inner(phi, phi, quad).real();
    const OpExpr<Cx> comm = op_commutator(A, B);
    const ConfState cphi = apply_line_op(comm, phi);
    r.rhs = 0.5 * std::abs(line_inner(cphi, phi, quad)) / norm2;
    return r;
}

OpExpr<Cx> coordinate_observable() {
    return OpExpr<Cx>::multiplication(PolyQP<Cx>::monomial(Cx{1, 0}, 1, 0));
}

OpExpr<Cx> momentum_observable(const PlanckParams& pp) {
    return OpExpr<Cx>::derivative(Cx{0.0, -pp.hbar}, 1, 0);
}

OpExpr<Cx> line_sl2_op(LieGen which) {
    using P = PolyQP<Cx>;
    OpExpr<Cx> op;
    switch (which) {
        case LieGen::A:
            op.terms = {OpTerm<Cx>{P::constant(Cx{0.5, 0}), 0, 0},
                        OpTerm<Cx>{P::monomial(Cx{1, 0}, 1, 0), 1, 0}};
            return op;
        case LieGen::B:
            op.terms = {OpTerm<Cx>{P::monomial(Cx{0.5, 0}, 1, 0), 0, 0},
                        OpTerm<Cx>{P::monomial(Cx{0.5, 0}, 2, 0), 1, 0},
                        OpTerm<Cx>{P::constant(Cx{-0.5, 0}), 1, 0}};
            return op;
        case LieGen::Z:
            op.terms = {OpTerm<Cx>{P::monomial(Cx{-1, 0}, 1, 0), 0, 0},
                        OpTerm<Cx>{P::monomial(Cx{-1, 0}, 2, 0), 1, 0},
                        OpTerm<Cx>{P::constant(Cx{-1, 0}), 1, 0}};
            return op;
        default:
            throw NotAGeneratorCase("line action carries the sl2 part only");
    }
}

UncertaintyResult sl2_line_uncertainty(const ConfState& phi, const LineQuadrature& quad) {
    const Cx is2 = kI * std::sqrt(2.0); // Killing-normalized observables
    const OpExpr<Cx> A = is2 * line_sl2_op(LieGen::A);
    const OpExpr<Cx> B = is2 * line_sl2_op(LieGen::B);
    return uncertainty_check(A, B, phi, quad);
}

// ---------------------------------------------------------------------------

ConfState contravariant_transform(const PlanckParams& pp, const TransformGrid& k,
                                  const MotherWavelet& psi) {
    if (psi.group != MotherWavelet::Group::H1) throw ValueAlgebraMismatch("H1 mother expected");
    const auto pe = psi.eval;
    const double hbar = pp.hbar;
    const TransformGrid grid = k;
    return [grid, pe, hbar](double q) {
        Cx acc{0, 0};
        for (int j = 0; j < grid.ny; ++j) {
            const double y = grid.y_at(j);
            const double wy = trapezoid_weight(j, grid.ny);
            for (int i = 0; i < grid.nx; ++i) {
                const double x = grid.x_at(i);
                const double w = wy * trapezoid_weight(i, grid.nx);
                const Cx moved = std::exp(kI * (-M_PI * hbar * x * y + 2.0 * M_PI * x * q)) *
                                 pe(q - hbar * y);
                acc += w * grid.at(i, j) * moved;
            }
        }
        // hbar dx dy: the Plancherel-normalized invariant measure
        return acc * (hbar * grid.dx * grid.dy);
    };
}

double reconstruction_check(const PlanckParams& pp, const ConfState& v, const MotherWavelet& phi,
                            const GridWindow& window, double qlim, int nq) {
    const TransformGrid tg = covariant_transform_h1(pp, v, phi, window, qlim, nq);
    const ConfState back = contravariant_transform(pp, tg, phi);
    const LineQuadrature quad{LineQuadrature::Kind::Compact, qlim, nq};
    auto phic = phi.eval;
    const Cx phiphi = line_inner([phic](double q) { return phic(q); },
                                 [phic](double q) { return phic(q); }, quad);
    double num = 0.0, den = 0.0;
    for (double q = -1.5; q <= 1.5 + 1e-12; q += 0.125) {
        num += std::norm(back(q) - phiphi * v(q));
        den += std::norm(phiphi * v(q));
    }
    return std::sqrt(num / std::max(den, 1e-300));
}

// ---------------------------------------------------------------------------

KernelGrid delta_derivative_kernel_x(const KernelGrid& like) {
    KernelGrid g = like;
    for (auto& v : g.values) v = Hyper::real(0.0, g.kind);
    const int i0 = (g.nx - 1) / 2, j0 = (g.ny - 1) / 2;
    // central difference of delta kernels: Int k(x,y) rho(0,x,y) dx dy -> d rho(X)
    g.at(i0 + 1, j0) = Hyper::real(1.0 / (2.0 * g.dx * g.dx * g.dy), g.kind);
    g.at(i0 - 1, j0) = Hyper::real(-1.0 / (2.0 * g.dx * g.dx * g.dy), g.kind);
    return g;
}

KernelGrid delta_derivative_kernel_y(const KernelGrid& like) {
    KernelGrid g = like;
    for (auto& v : g.values) v = Hyper::real(0.0, g.kind);
    const int i0 = (g.nx - 1) / 2, j0 = (g.ny - 1) / 2;
    g.at(i0, j0 + 1) = Hyper::real(1.0 / (2.0 * g.dy * g.dx * g.dy), g.kind);
    g.at(i0, j0 - 1) = Hyper::real(-1.0 / (2.0 * g.dy * g.dx * g.dy), g.kind);
    return g;
}

EquivalenceReport uncertainty_analyticity_equivalence(const KernelGrid& k1, const KernelGrid& k2,
                                                      const ConfState& f, double c_fit,
                                                      const PlanckParams& pp) {
    // the kernels must be the +-delta' pairs along x and y
    auto is_delta_derivative = [](const KernelGrid& k, bool along_x) {
        const int i0 = (k.nx - 1) / 2, j0 = (k.ny - 1) / 2;
        int nonzero = 0;
        for (const auto& v : k.values)
            if (v.u != 0.0 || v.v != 0.0) ++nonzero;
        if (nonzero != 2) return false;
        if (along_x) return k.at(i0 + 1, j0).u > 0.0 && k.at(i0 - 1, j0).u < 0.0;
        return k.at(i0, j0 + 1).u > 0.0 && k.at(i0, j0 - 1).u < 0.0;
    };
    if (!is_delta_derivative(k1, true) || !is_delta_derivative(k2, false))
        throw GridMismatch("expected the delta-derivative kernels along x and y");

    EquivalenceReport rep;
    // dispersion side with the self-adjoint forms of d rho(X), d rho(Y)
    OpExpr<Cx> K1 = OpExpr<Cx>::multiplication(PolyQP<Cx>::monomial(Cx{2.0 * M_PI, 0}, 1, 0));
    OpExpr<Cx> K2 = OpExpr<Cx>::derivative(Cx{0.0, pp.hbar}, 1, 0);
    const LineQuadrature quad{LineQuadrature::Kind::Compact, 9.0, 3000};
    const UncertaintyResult ur = uncertainty_check(K1, K2, f, quad);
    rep.dispersion_gap = std::abs(ur.lhs - ur.rhs);
    rep.recovered_r = 1.0 / (2.0 * c_fit * pp.hbar);

    // analyticity side: annihilator residual of the transform image
    GridWindow window;
    window.xmin = -2.2;
    window.xmax = 2.2;
    window.ymin = -2.2;
    window.ymax = 2.2;
    window.nx = window.ny = 40;
    MotherWavelet mother;
    mother.group = MotherWavelet::Group::H1;
    mother.eval = f;
    const TransformGrid tg = covariant_transform_h1(pp, f, mother, window);
    rep.annihilation_residual = fsb_annihilator_residual(tg, pp, c_fit);
    return rep;
}

} // namespace eph
