#include "eph/reps.hpp"

#include <cmath>

namespace eph {

const char* variant_name(RepVariant v) {
    switch (v) {
        case RepVariant::Schrodinger: return "schrodinger";
        case RepVariant::FSB: return "fsb";
        case RepVariant::Dual: return "dual";
        case RepVariant::Double: return "double";
    }
    return "?";
}

namespace {
const Cx kI{0.0, 1.0};
}

DerivedFamily<Cx> schrodinger_family(const PlanckParams& pp) {
    using P = PolyQP<Cx>;
    using O = OpExpr<Cx>;
    DerivedFamily<Cx> F;
    F.of(LieGen::X) = O::multiplication(P::monomial(2.0 * M_PI * kI, 1, 0));
    F.of(LieGen::Y) = O::derivative(Cx{-pp.hbar, 0.0}, 1, 0);
    F.of(LieGen::S) = O::multiplication(P::constant(2.0 * M_PI * kI * pp.hbar));
    // A = -q d/dq / 2 - 1/4
    F.of(LieGen::A).terms = {OpTerm<Cx>{P::monomial(Cx{-0.5, 0.0}, 1, 0), 1, 0},
                             OpTerm<Cx>{P::constant(Cx{-0.25, 0.0}), 0, 0}};
    // B = -(hbar i / 8 pi) d^2 - (pi i / 2 hbar) q^2
    F.of(LieGen::B).terms = {
        OpTerm<Cx>{P::constant(-pp.hbar * kI / (8.0 * M_PI)), 2, 0},
        OpTerm<Cx>{P::monomial(-M_PI * kI / (2.0 * pp.hbar), 2, 0), 0, 0}};
    // Z = (hbar i / 4 pi) d^2 - (pi i / hbar) q^2
    F.of(LieGen::Z).terms = {
        OpTerm<Cx>{P::constant(pp.hbar * kI / (4.0 * M_PI)), 2, 0},
        OpTerm<Cx>{P::monomial(-M_PI * kI / pp.hbar, 2, 0), 0, 0}};
    return F;
}

DerivedFamily<Cx> fsb_family(const PlanckParams& pp) {
    using P = PolyQP<Cx>;
    using O = OpExpr<Cx>;
    DerivedFamily<Cx> F;
    F.of(LieGen::X).terms = {OpTerm<Cx>{P::monomial(-2.0 * M_PI * kI, 1, 0), 0, 0},
                             OpTerm<Cx>{P::constant(Cx{pp.hbar / 2.0, 0.0}), 0, 1}};
    F.of(LieGen::Y).terms = {OpTerm<Cx>{P::monomial(-2.0 * M_PI * kI, 0, 1), 0, 0},
                             OpTerm<Cx>{P::constant(Cx{-pp.hbar / 2.0, 0.0}), 1, 0}};
    F.of(LieGen::S) = O::multiplication(P::constant(-2.0 * M_PI * kI * pp.hbar));
    // A = (p d_p - q d_q)/2, B = -(p d_q + q d_p)/2, Z = p d_q - q d_p
    F.of(LieGen::A).terms = {OpTerm<Cx>{P::monomial(Cx{0.5, 0.0}, 0, 1), 0, 1},
                             OpTerm<Cx>{P::monomial(Cx{-0.5, 0.0}, 1, 0), 1, 0}};
    F.of(LieGen::B).terms = {OpTerm<Cx>{P::monomial(Cx{-0.5, 0.0}, 0, 1), 1, 0},
                             OpTerm<Cx>{P::monomial(Cx{-0.5, 0.0}, 1, 0), 0, 1}};
    F.of(LieGen::Z).terms = {OpTerm<Cx>{P::monomial(Cx{1.0, 0.0}, 0, 1), 1, 0},
                             OpTerm<Cx>{P::monomial(Cx{-1.0, 0.0}, 1, 0), 0, 1}};
    return F;
}

DerivedFamily<DualComplex> dual_family(const PlanckParams& pp) {
    using D = DualComplex;
    using P = PolyQP<D>;
    using O = OpExpr<D>;
    const D i{Cx{0.0, 1.0}, Cx{0.0, 0.0}};
    const D ip{Cx{0.0, 0.0}, Cx{0.0, 1.0}}; // i p
    DerivedFamily<D> F;
    F.of(LieGen::X).terms = {OpTerm<D>{P::monomial(-2.0 * M_PI * i, 1, 0), 0, 0},
                             OpTerm<D>{P::constant((pp.hbar / 2.0) * ip), 0, 1}};
    F.of(LieGen::Y).terms = {OpTerm<D>{P::monomial(-2.0 * M_PI * i, 0, 1), 0, 0},
                             OpTerm<D>{P::constant((-pp.hbar / 2.0) * ip), 1, 0}};
    F.of(LieGen::S) = O::multiplication(P::constant(D{Cx{0, 0}, Cx{pp.h, 0.0}}));
    F.of(LieGen::A).terms = {OpTerm<D>{P::monomial(D(0.5), 0, 1), 0, 1},
                             OpTerm<D>{P::monomial(D(-0.5), 1, 0), 1, 0}};
    F.of(LieGen::B).terms = {OpTerm<D>{P::monomial(D(-0.5), 0, 1), 1, 0},
                             OpTerm<D>{P::monomial(D(-0.5), 1, 0), 0, 1}};
    F.of(LieGen::Z).terms = {OpTerm<D>{P::monomial(D(1.0), 0, 1), 1, 0},
                             OpTerm<D>{P::monomial(D(-1.0), 1, 0), 0, 1}};
    return F;
}

DerivedFamily<Split> double_family(const PlanckParams& pp) {
    using P = PolyQP<Split>;
    using O = OpExpr<Split>;
    const Split hu{0.0, 1.0}; // the hyperbolic unit
    const double H = pp.h;
    DerivedFamily<Split> F;
    F.of(LieGen::X) = O::multiplication(P::monomial(hu, 1, 0));
    F.of(LieGen::Y) = O::derivative(Split{-H, 0.0}, 1, 0);
    F.of(LieGen::S) = O::multiplication(P::constant(Split{0.0, H}));
    F.of(LieGen::A).terms = {OpTerm<Split>{P::monomial(Split(-0.5), 1, 0), 1, 0},
                             OpTerm<Split>{P::constant(Split(-0.25)), 0, 0}};
    // B = (hu H / 4) d^2 - (hu / 4H) q^2, Z = -(hu H / 2) d^2 - (hu / 2H) q^2
    F.of(LieGen::B).terms = {OpTerm<Split>{P::constant((H / 4.0) * hu), 2, 0},
                             OpTerm<Split>{P::monomial((-1.0 / (4.0 * H)) * hu, 2, 0), 0, 0}};
    F.of(LieGen::Z).terms = {OpTerm<Split>{P::constant((-H / 2.0) * hu), 2, 0},
                             OpTerm<Split>{P::monomial((-1.0 / (2.0 * H)) * hu, 2, 0), 0, 0}};
    return F;
}

// ---------------------------------------------------------------------------

namespace {

template <class S>
std::vector<RelationCheck> table_check_impl(const DerivedFamily<S>& F,
                                            const std::vector<StateFn<S>>& tests,
                                            const std::vector<std::pair<double, double>>& pts) {
    const auto& T = structure_constants();
    std::vector<RelationCheck> out;
    for (int i = 0; i < kLieDim; ++i)
        for (int j = i + 1; j < kLieDim; ++j) {
            OpExpr<S> expected = OpExpr<S>::zero();
            bool nonzero = false;
            for (int k = 0; k < kLieDim; ++k)
                if (T[i][j][k] != 0.0) {
                    expected = expected + scalar_from_real<S>(T[i][j][k]) *
                                              F.ops[k];
                    nonzero = true;
                }
            // also check that commutators expected to vanish do vanish
            const OpExpr<S> comm = op_commutator(F.ops[i], F.ops[j]);
            const OpExpr<S> diff = (comm - expected).normalized(1e-14);
            double res = 0.0;
            for (const auto& f : tests)
                for (const auto& [q, p] : pts) {
                    const double d = scalar_abs(diff.apply(f, q, p));
                    const double scale =
                        scalar_abs(comm.apply(f, q, p)) + scalar_abs(expected.apply(f, q, p)) + 1.0;
                    res = std::max(res, d / scale);
                }
            RelationCheck rc;
            rc.relation = std::string("[") + lie_gen_name(static_cast<LieGen>(i)) + "," +
                          lie_gen_name(static_cast<LieGen>(j)) + "]" + (nonzero ? "" : "=0");
            rc.residual = res;
            out.push_back(rc);
        }
    return out;
}

std::vector<std::pair<double, double>> config_points() {
    std::vector<std::pair<double, double>> pts;
    for (double q : {-1.5, -0.9, -0.3, 0.4, 1.0, 1.6}) pts.push_back({q, 0.0});
    return pts;
}

std::vector<std::pair<double, double>> phase_points() {
    std::vector<std::pair<double, double>> pts;
    for (double q : {-1.1, 0.3, 1.2})
        for (double p : {-1.2, 0.2, 0.9}) pts.push_back({q, p});
    return pts;
}

} // namespace

std::vector<StateFn<Cx>> test_states_config_cx() {
    std::vector<StateFn<Cx>> fs;
    for (double w : {0.8, 1.0, 1.25})
        for (int m = 0; m <= 3; ++m)
            fs.push_back([w, m](double q, double) {
                return Cx{std::pow(q, m) * std::exp(-q * q / (2.0 * w * w)), 0.0};
            });
    return fs;
}

std::vector<StateFn<Cx>> test_states_phase_cx() {
    std::vector<StateFn<Cx>> fs;
    const int mn[12][2] = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2},
                           {3, 0}, {2, 1}, {1, 2}, {0, 3}, {4, 0}, {0, 4}};
    for (const auto& d : mn) {
        const int m = d[0], n = d[1];
        fs.push_back([m, n](double q, double p) {
            return Cx{std::pow(q, m) * std::pow(p, n) * std::exp(-(q * q + p * p) / 2.0), 0.0};
        });
    }
    return fs;
}

std::vector<StateFn<DualComplex>> test_states_phase_dual() {
    std::vector<StateFn<DualComplex>> fs;
    for (const auto& f : test_states_phase_cx())
        fs.push_back([f](double q, double p) { return DualComplex{f(q, p), 0.3 * f(q, p)}; });
    return fs;
}

std::vector<StateFn<Split>> test_states_config_split() {
    std::vector<StateFn<Split>> fs;
    for (double w : {0.8, 1.0, 1.25})
        for (int m = 0; m <= 3; ++m)
            fs.push_back([w, m](double q, double) {
                const double v = std::pow(q, m) * std::exp(-q * q / (2.0 * w * w));
                return Split{v, 0.25 * v};
            });
    return fs;
}

std::vector<RelationCheck> commutator_table_check(RepVariant variant, const PlanckParams& pp) {
    switch (variant) {
        case RepVariant::Schrodinger:
            return table_check_impl(schrodinger_family(pp), test_states_config_cx(),
                                    config_points());
        case RepVariant::FSB:
            return table_check_impl(fsb_family(pp), test_states_phase_cx(), phase_points());
        case RepVariant::Dual:
            return table_check_impl(dual_family(pp), test_states_phase_dual(), phase_points());
        case RepVariant::Double:
            return table_check_impl(double_family(pp), test_states_config_split(),
                                    config_points());
    }
    throw UnknownVariant();
}

namespace {

template <class S>
double relation_residual(const OpExpr<S>& lhs, const OpExpr<S>& rhs,
                         const std::vector<StateFn<S>>& tests,
                         const std::vector<std::pair<double, double>>& pts) {
    const OpExpr<S> diff = (lhs - rhs).normalized(1e-14);
    double res = 0.0;
    for (const auto& f : tests)
        for (const auto& [q, p] : pts) {
            const double d = scalar_abs(diff.apply(f, q, p));
            const double scale = scalar_abs(lhs.apply(f, q, p)) + scalar_abs(rhs.apply(f, q, p)) + 1.0;
            res = std::max(res, d / scale);
        }
    return res;
}

} // namespace

std::vector<RelationCheck> quadratic_relations_check(RepVariant variant, const PlanckParams& pp) {
    std::vector<RelationCheck> out;
    if (variant == RepVariant::Schrodinger) {
        const auto F = schrodinger_family(pp);
        const auto tests = test_states_config_cx();
        const auto pts = config_points();
        const auto& X = F.of(LieGen::X);
        const auto& Y = F.of(LieGen::Y);
        const Cx cA = -kI / (8.0 * M_PI * pp.hbar);
        const Cx cB = kI / (8.0 * M_PI * pp.hbar);
        const Cx cZ = kI / (4.0 * M_PI * pp.hbar);
        out.push_back({"SW(A)=-(i/8 pi hbar)(XY+YX)",
                       relation_residual(F.of(LieGen::A),
                                         cA * (compose(X, Y) + compose(Y, X)), tests, pts)});
        out.push_back({"SW(B)=(i/8 pi hbar)(X^2-Y^2)",
                       relation_residual(F.of(LieGen::B),
                                         cB * (compose(X, X) - compose(Y, Y)), tests, pts)});
        out.push_back({"SW(Z)=(i/4 pi hbar)(X^2+Y^2)",
                       relation_residual(F.of(LieGen::Z),
                                         cZ * (compose(X, X) + compose(Y, Y)), tests, pts)});
        return out;
    }
    if (variant == RepVariant::Double) {
        const auto F = double_family(pp);
        const auto tests = test_states_config_split();
        const auto pts = config_points();
        const auto& X = F.of(LieGen::X);
        const auto& Y = F.of(LieGen::Y);
        const Split hu{0.0, 1.0};
        const Split cA = (1.0 / (4.0 * pp.h)) * hu;
        const Split cB = (-1.0 / (4.0 * pp.h)) * hu;
        const Split cZ = (-1.0 / (2.0 * pp.h)) * hu;
        out.push_back({"SW(A)=(h_u/4h)(XY+YX)",
                       relation_residual(F.of(LieGen::A),
                                         cA * (compose(X, Y) + compose(Y, X)), tests, pts)});
        out.push_back({"SW(B)=-(h_u/4h)(X^2-Y^2)",
                       relation_residual(F.of(LieGen::B),
                                         cB * (compose(X, X) - compose(Y, Y)), tests, pts)});
        out.push_back({"SW(Z)=-(h_u/2h)(X^2+Y^2)",
                       relation_residual(F.of(LieGen::Z),
                                         cZ * (compose(X, X) + compose(Y, Y)), tests, pts)});
        return out;
    }
    throw UnknownVariant("quadratic relations exist for the Schrodinger and Double variants");
}

DualCommutatorReport dual_commutator_check(const PlanckParams& pp) {
    const auto F = dual_family(pp);
    const OpExpr<DualComplex> comm =
        op_commutator(F.of(LieGen::X), F.of(LieGen::Y)).normalized(0.0);
    DualCommutatorReport rep;
    // expect one multiplication term whose only surviving entry is the
    // constant p*h; the 1,i block must cancel identically
    double main = 0.0, dev = 1e300, stray = 0.0;
    for (const auto& t : comm.terms) {
        for (const auto& v : t.coeff.c) main = std::max(main, std::abs(v.z));
        if (t.dq == 0 && t.dp == 0) {
            dev = std::abs(t.coeff.at(0, 0).w - Cx{pp.h, 0.0});
            for (int m = 0; m <= t.coeff.nq; ++m)
                for (int n = 0; n <= t.coeff.np; ++n)
                    if (m != 0 || n != 0) stray = std::max(stray, std::abs(t.coeff.at(m, n).w));
        } else {
            for (const auto& v : t.coeff.c) stray = std::max(stray, std::abs(v.w));
        }
    }
    rep.main_block_max = main;
    rep.pblock_deviation = std::max(dev, stray);
    rep.exact = (main == 0.0) && (rep.pblock_deviation < 1e-12 * pp.h);
    return rep;
}

// ---------------------------------------------------------------------------

ConfState schrodinger_rep(const PlanckParams& pp, const HElem& g, const ConfState& f) {
    const double hbar = pp.hbar;
    return [hbar, g, f](double q) {
        const Cx phase = std::exp(kI * (2.0 * M_PI * hbar * (g.s - g.x * g.y / 2.0) +
                                        2.0 * M_PI * g.x * q));
        return phase * f(q - hbar * g.y);
    };
}

PhaseState fsb_rep(const PlanckParams& pp, const HElem& g, const PhaseState& f) {
    const double hbar = pp.hbar;
    return [hbar, g, f](double q, double p) {
        const Cx phase = std::exp(-kI * 2.0 * M_PI * (hbar * g.s + q * g.x + p * g.y));
        return phase * f(q - hbar * g.y / 2.0, p + hbar * g.x / 2.0);
    };
}

PhaseState commutative_rep(const HElem& g, const PhaseState& f) {
    return [g, f](double q, double p) {
        const Cx phase = std::exp(-kI * 2.0 * M_PI * (q * g.x + p * g.y));
        return phase * f(q, p);
    };
}

DualPhaseState dual_rep(const PlanckParams& pp, const HElem& g, const DualPhaseState& f) {
    if (!f.main || !f.main_q || !f.main_p)
        throw ValueAlgebraMismatch("dual_rep needs the main block and its analytic partials");
    const double hbar = pp.hbar;
    const HElem gg = g;
    auto phase = [gg](double q, double p) {
        return std::exp(-kI * 2.0 * M_PI * (q * gg.x + p * gg.y));
    };
    DualPhaseState out;
    out.main = [phase, f](double q, double p) { return phase(q, p) * f.main(q, p); };
    const PhaseState fp = f.pblock;
    out.pblock = [phase, f, fp, gg, hbar](double q, double p) {
        const Cx extra = hbar * (2.0 * M_PI * gg.s * f.main(q, p) -
                                 kI * (gg.y / 2.0) * f.main_q(q, p) +
                                 kI * (gg.x / 2.0) * f.main_p(q, p));
        const Cx base = fp ? fp(q, p) : Cx{0.0, 0.0};
        return phase(q, p) * (base + extra);
    };
    out.main_q = [phase, f, gg](double q, double p) {
        return phase(q, p) * (f.main_q(q, p) - kI * 2.0 * M_PI * gg.x * f.main(q, p));
    };
    out.main_p = [phase, f, gg](double q, double p) {
        return phase(q, p) * (f.main_p(q, p) - kI * 2.0 * M_PI * gg.y * f.main(q, p));
    };
    return out;
}

SplitPhaseState double_rep(const PlanckParams& pp, const HElem& g, const SplitPhaseState& f) {
    const double H = pp.h;
    return [H, g, f](double q, double p) {
        const Split phase = split_exp(-(H * g.s + q * g.x + p * g.y));
        return phase * f(q - H * g.y / 2.0, p + H * g.x / 2.0);
    };
}

PhaseState weyl_quantize(const PlanckParams& pp, const KernelGrid& Hhat, const PhaseState& f) {
    if (Hhat.kind != AlgebraKind::Elliptic)
        throw ValueAlgebraMismatch("weyl quantization integrates the elliptic action");
    const double hbar = pp.hbar;
    const KernelGrid K = Hhat;
    return [K, hbar, f](double q, double p) {
        Cx acc{0.0, 0.0};
        for (int j = 0; j < K.ny; ++j) {
            const double y = K.y_at(j);
            const double wy = trapezoid_weight(j, K.ny);
            for (int i = 0; i < K.nx; ++i) {
                const Hyper& kv = K.at(i, j);
                if (kv.u == 0.0 && kv.v == 0.0) continue;
                const double x = K.x_at(i);
                const double w = wy * trapezoid_weight(i, K.nx);
                const Cx phase = std::exp(-kI * 2.0 * M_PI * (q * x + p * y));
                acc += w * Cx{kv.u, kv.v} * phase * f(q - hbar * y / 2.0, p + hbar * x / 2.0);
            }
        }
        return acc * (K.dx * K.dy);
    };
}

OpExpr<DualComplex> classical_operator(const PolyQP<double>& H, const PlanckParams& pp) {
    using D = DualComplex;
    // lift the real polynomial into the algebra
    auto lift = [](const PolyQP<double>& r, const D& unit) {
        PolyQP<D> out;
        out.nq = r.nq;
        out.np = r.np;
        out.c.assign(r.c.size(), D{});
        for (size_t i = 0; i < r.c.size(); ++i) out.c[i] = r.c[i] * unit;
        return out;
    };
    const D one(1.0);
    const D ph{Cx{0, 0}, Cx{pp.h / 2.0, 0.0}}; // p h / 2
    OpExpr<D> out;
    out.terms.push_back(OpTerm<D>{lift(H, one), 0, 0});
    out.terms.push_back(OpTerm<D>{lift(H.dp(), ph), 1, 0});
    out.terms.push_back(OpTerm<D>{lift(H.dq(), D{Cx{0, 0}, Cx{-pp.h / 2.0, 0.0}}), 0, 1});
    return out.normalized();
}

std::vector<Split> hyperbolic_fourier(const std::function<double(double)>& f,
                                      const std::vector<double>& qs, double L, int n) {
    double qmax = 0.0;
    for (double q : qs) qmax = std::max(qmax, std::abs(q));
    for (double edge : {-L, L})
        if (std::abs(f(edge)) * std::exp(qmax * L) > 1e-8)
            throw DivergentIntegrand("kernel growth reaches the truncation boundary");
    std::vector<Split> out;
    out.reserve(qs.size());
    for (double q : qs) {
        const double even = simpson([&](double x) { return f(x) * std::cosh(q * x); }, -L, L, n);
        const double odd = simpson([&](double x) { return f(x) * std::sinh(q * x); }, -L, L, n);
        out.push_back(Split{even, -odd});
    }
    return out;
}

} // namespace eph
