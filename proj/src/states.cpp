#include "eph/states.hpp"

#include <cmath>
#include <memory>

namespace eph {

namespace {
const Cx kI{0.0, 1.0};

double bump_profile(double t) {
    const double u = 1.0 - t * t;
    return u > 0.0 ? u * u * u : 0.0;
}
double bump_profile_d(double t) {
    const double u = 1.0 - t * t;
    return u > 0.0 ? -6.0 * t * u * u : 0.0;
}
} // namespace

GaussianState::GaussianState(double a_, double b_, double m_, double k_, const PlanckParams& pp_)
    : a(a_), b(b_), m(m_), k(k_), pp(pp_) {
    if (m <= 0.0 || k <= 0.0) throw DomainError("mass and frequency must be positive");
}

double GaussianState::operator()(double q, double p) const {
    const double cq = 2.0 * M_PI * k * m / pp.hbar;
    const double cp = 2.0 * M_PI / (pp.hbar * k * m);
    return std::exp(-cq * (q - a) * (q - a) - cp * (p - b) * (p - b));
}

RationalState::RationalState(double a_, double b_, double m_, double k_, const PlanckParams& pp_)
    : a(a_), b(b_), m(m_), k(k_), pp(pp_) {
    if (m <= 0.0 || k <= 0.0) throw DomainError("mass and frequency must be positive");
}

double RationalState::operator()(double q, double p) const {
    const double gq = pp.hbar / (k * m);
    const double gp = pp.hbar * k * m;
    return pp.hbar * pp.hbar / (((q - a) * (q - a) + gq) * ((p - b) * (p - b) + gp));
}

double BumpState::operator()(double q, double p) const {
    return bump_profile((q - a) / width) * bump_profile((p - b) / width);
}
double BumpState::dq(double q, double p) const {
    return bump_profile_d((q - a) / width) / width * bump_profile((p - b) / width);
}
double BumpState::dp(double q, double p) const {
    return bump_profile((q - a) / width) * bump_profile_d((p - b) / width) / width;
}

const char* probability_mode_name(ProbabilityMode m) {
    switch (m) {
        case ProbabilityMode::Quantum: return "quantum";
        case ProbabilityMode::Hyperbolic: return "hyperbolic";
        case ProbabilityMode::Classical: return "classical";
    }
    return "?";
}

std::function<Cx(double, double, double)> gauss_cross_kernel(const GaussianState& s1,
                                                             const GaussianState& s2) {
    if (s1.m != s2.m || s1.k != s2.k || s1.pp.hbar != s2.pp.hbar)
        throw ValueAlgebraMismatch("cross kernel needs matching oscillator parameters");
    const double hbar = s1.pp.hbar, km = s1.k * s1.m;
    const double a = s1.a, b = s1.b, ap = s2.a, bp = s2.b;
    return [=](double s, double x, double y) {
        const double phase = M_PI * (2.0 * s * hbar + x * (a + ap) + y * (b + bp));
        const double ex =
            -(M_PI / (hbar * km)) * ((b - bp + hbar * x / 2.0) * (b - bp + hbar * x / 2.0) +
                                     (hbar * x / 2.0) * (hbar * x / 2.0)) -
            (M_PI * km / hbar) * ((a - ap - hbar * y / 2.0) * (a - ap - hbar * y / 2.0) +
                                  (hbar * y / 2.0) * (hbar * y / 2.0));
        return (4.0 / hbar) * std::exp(ex) * std::exp(kI * phase);
    };
}

StateKernel gauss_kernel(const GaussianState& st) {
    StateKernel l(st.pp);
    l.mode = ProbabilityMode::Quantum;
    l.eval = gauss_cross_kernel(st, st);
    return l;
}

Cx gauss_kernel_quadrature(const GaussianState& s1, const GaussianState& s2, const HElem& g,
                           double L, int n) {
    // FSB-normalized inner product (16/hbar^2) Int v1 conj(rho(g) v2); the
    // normalization makes the plain Gaussian quadrature reproduce the 4/hbar
    // closed-form prefactor.
    const PlanckParams pp = s1.pp;
    const PhaseState v2 = [s2](double q, double p) { return Cx{s2(q, p), 0.0}; };
    const PhaseState moved = fsb_rep(pp, g, v2);
    auto inner = [&](double q) {
        return simpson([&](double p) { return s1(q, p) * std::conj(moved(q, p)); }, -L, L, n);
    };
    const Cx raw = simpson(inner, -L, L, n);
    return (16.0 / (pp.hbar * pp.hbar)) * raw;
}

double measure_position(double c, const StateKernel& l, double xlim, int nx) {
    if (!(xlim > 0.0)) throw QuadratureDomainError();
    auto integrand = [&](double x) {
        return std::exp(-kI * 2.0 * M_PI * x * c) * l.eval(0.0, x, 0.0);
    };
    const Cx v = simpson(integrand, -xlim, xlim, nx);
    return (l.pp.hbar / 4.0) * v.real();
}

double gauss_measure_closed_form(double c, const GaussianState& st) {
    const double km = st.k * st.m;
    return std::sqrt(2.0 * km / st.pp.hbar) *
           std::exp(-2.0 * M_PI * km * (c - st.a) * (c - st.a) / st.pp.hbar);
}

// ---------------------------------------------------------------------------
// Measurements through the partial transform u^(q, X), X = 2(q-c)/hbar:
//   m_12(c) = (1/2) Int |u1^ + u2^|^2 dq,
// where the p-mean b enters as the pure phase e^{-2 pi i b X} on the centered
// transform. The hyperbolic mode continues that phase into the double numbers
// (cosh cross term); for Gaussian states the hyperbolic measurement coincides
// with the quantum one.

namespace {

struct SeparableTransform {
    std::function<double(double)> qpart;    // |u-hat| q-factor, state-centered
    std::function<double(double)> pprofile; // centered p-transform, even in X
    // closed-form branch used by the hyperbolic phase continuation, where
    // quadrature tail noise would be amplified by cosh; absent for families
    // without an analytic continuation
    std::function<double(double)> pprofile_analytic;
    double xlim = 8.0; // transform-variable window
    int nq = 1601;
};

std::function<double(double)> tabulated_even(std::function<double(double)> f, double Xmax,
                                             int n) {
    auto table = std::make_shared<std::vector<double>>();
    table->resize(n + 1);
    const double dX = Xmax / n;
    for (int i = 0; i <= n; ++i) (*table)[i] = f(i * dX);
    return [table, dX, Xmax, n](double X) -> double {
        const double ax = std::abs(X);
        if (ax >= Xmax) return 0.0;
        const double t = ax / dX;
        const int i = static_cast<int>(t);
        const double w = t - i;
        return (*table)[i] * (1.0 - w) + (*table)[std::min(i + 1, n)] * w;
    };
}

SeparableTransform transform_for(const StatePair& pair, bool first, const PlanckParams& pp) {
    const double a = first ? pair.a1 : pair.a2;
    const double km = pair.k * pair.m;
    SeparableTransform t;
    switch (pair.family) {
        case StatePair::Family::Gaussian: {
            const double cq = 2.0 * M_PI * km / pp.hbar;
            const double beta = 2.0 * M_PI / (pp.hbar * km);
            t.qpart = [cq, a](double q) { return std::exp(-cq * (q - a) * (q - a)); };
            t.pprofile = [beta](double X) {
                return std::sqrt(M_PI / beta) * std::exp(-M_PI * M_PI * X * X / beta);
            };
            t.pprofile_analytic = t.pprofile;
            // Gaussian transform width in X
            t.xlim = 10.0 * std::sqrt(beta) / M_PI;
            t.nq = 1600;
            return t;
        }
        case StatePair::Family::Rational: {
            const double gq = pp.hbar / km;
            const double gp = pp.hbar * km;
            const double h2 = pp.hbar * pp.hbar;
            t.qpart = [h2, gq, a](double q) { return h2 / ((q - a) * (q - a) + gq); };
            // centered Lorentzian transform by quadrature ([-40,40], 4096
            // panels), tabulated once over the decay window
            const double gamma0 = std::sqrt(gp);
            t.pprofile = tabulated_even(
                [gp](double X) {
                    return simpson(
                        [gp, X](double p) { return std::cos(2.0 * M_PI * p * X) / (p * p + gp); },
                        -40.0, 40.0, 4096);
                },
                7.0 / gamma0, 4800);
            // pole-derived decaying exponential, the analytic branch of the
            // same transform
            const double gamma = gamma0;
            t.pprofile_analytic = [gamma](double X) {
                return (M_PI / gamma) * std::exp(-2.0 * M_PI * gamma * std::abs(X));
            };
            t.xlim = 7.0 / gamma;
            t.nq = 3200;
            return t;
        }
        case StatePair::Family::Bump: {
            const double w = pair.bump_width;
            t.qpart = [w, a](double q) { return bump_profile((q - a) / w); };
            t.pprofile = tabulated_even(
                [w](double X) {
                    return simpson(
                        [w, X](double p) {
                            return bump_profile(p / w) * std::cos(2.0 * M_PI * p * X);
                        },
                        -w, w, 512);
                },
                12.0, 4800);
            t.xlim = 11.0;
            t.nq = 2400;
            return t;
        }
    }
    throw UnknownVariant();
}

/// The integrands are concentrated where the p-transform lives, so the
/// quadrature runs in the transform variable X = 2(q-c)/hbar; the |X| kink of
/// the Lorentzian transform sits at 0 and the integral is split there.
template <class F>
double split_simpson_x(F&& f, double U, int n) {
    return simpson(f, -U, 0.0, n / 2) + simpson(f, 0.0, U, n / 2);
}

double single_from_transform(const SeparableTransform& t, double c, double hbar) {
    auto integrand = [&](double u) {
        const double q = c + hbar * u / 2.0;
        const double e = t.qpart(q) * t.pprofile(u);
        return e * e;
    };
    // dq = hbar/2 du
    return (4.0 / hbar) * split_simpson_x(integrand, t.xlim, t.nq);
}

double cross_from_transforms(const SeparableTransform& t1, const SeparableTransform& t2,
                             double db, double c, double hbar, bool hyperbolic_phase) {
    if (hyperbolic_phase && (!t1.pprofile_analytic || !t2.pprofile_analytic))
        throw QuadratureDomainError("no analytic continuation for this state family");
    auto p1 = hyperbolic_phase ? t1.pprofile_analytic : t1.pprofile;
    auto p2 = hyperbolic_phase ? t2.pprofile_analytic : t2.pprofile;
    auto integrand = [&](double u) {
        const double q = c + hbar * u / 2.0;
        const double e = t1.qpart(q) * p1(u) * t2.qpart(q) * p2(u);
        if (e == 0.0) return 0.0;
        const double osc = hyperbolic_phase ? std::cosh(2.0 * M_PI * db * u)
                                            : std::cos(2.0 * M_PI * db * u);
        return e * osc;
    };
    const double U = std::min(t1.xlim, t2.xlim);
    const int n = std::max(t1.nq, t2.nq);
    return (8.0 / hbar) * split_simpson_x(integrand, U, n);
}

double classical_marginal_product(const StatePair& pair, double c, bool same1, bool same2,
                                  const PlanckParams& pp) {
    auto eval = [&](bool first, double q, double p) -> double {
        const double a = first ? pair.a1 : pair.a2;
        const double b = first ? pair.b1 : pair.b2;
        switch (pair.family) {
            case StatePair::Family::Gaussian:
                return GaussianState(a, b, pair.m, pair.k, pp)(q, p);
            case StatePair::Family::Rational:
                return RationalState(a, b, pair.m, pair.k, pp)(q, p);
            case StatePair::Family::Bump:
                return BumpState{a, b, pair.bump_width}(q, p);
        }
        return 0.0;
    };
    const double L = pair.family == StatePair::Family::Bump
                         ? std::max(std::abs(pair.b1), std::abs(pair.b2)) + pair.bump_width + 0.5
                         : 40.0;
    const int n = pair.family == StatePair::Family::Bump ? 800 : 4000;
    return simpson([&](double p) { return eval(same1, c, p) * eval(same2, c, p); }, -L, L, n);
}

bool uses_hyperbolic_phase(const StatePair& pair, ProbabilityMode mode) {
    return mode == ProbabilityMode::Hyperbolic && pair.family != StatePair::Family::Gaussian;
}

void check_hyperbolic_convergence(const StatePair& pair, const PlanckParams& pp) {
    const double gamma = std::sqrt(pp.hbar * pair.k * pair.m);
    if (!(std::abs(pair.b1 - pair.b2) < 2.0 * gamma))
        throw QuadratureDomainError(
            "hyperbolic continuation diverges: |b1-b2| must stay below 2 sqrt(hbar k m)");
}

} // namespace

double interference_cross_term(const StatePair& pair, double c, ProbabilityMode mode,
                               const PlanckParams& pp) {
    if (mode == ProbabilityMode::Classical)
        return 2.0 * classical_marginal_product(pair, c, true, false, pp);
    const bool hyp = uses_hyperbolic_phase(pair, mode);
    if (hyp) check_hyperbolic_convergence(pair, pp);
    const SeparableTransform t1 = transform_for(pair, true, pp);
    const SeparableTransform t2 = transform_for(pair, false, pp);
    return cross_from_transforms(t1, t2, pair.b1 - pair.b2, c, pp.hbar, hyp);
}

double superposition_measurement(const StatePair& pair, double c, ProbabilityMode mode,
                                 const PlanckParams& pp) {
    if (mode == ProbabilityMode::Classical)
        return classical_marginal_product(pair, c, true, true, pp) +
               classical_marginal_product(pair, c, false, false, pp) +
               interference_cross_term(pair, c, mode, pp);
    const bool hyp = uses_hyperbolic_phase(pair, mode);
    if (hyp) check_hyperbolic_convergence(pair, pp);
    const SeparableTransform t1 = transform_for(pair, true, pp);
    const SeparableTransform t2 = transform_for(pair, false, pp);
    return single_from_transform(t1, c, pp.hbar) + single_from_transform(t2, c, pp.hbar) +
           cross_from_transforms(t1, t2, pair.b1 - pair.b2, c, pp.hbar, hyp);
}

double probability_addition(double l1, double l2, double A, ProbabilityMode mode) {
    if (l1 < 0.0 || l2 < 0.0) throw DomainError("probabilities must be nonnegative");
    switch (mode) {
        case ProbabilityMode::Quantum:
            if (std::abs(A) > 1.0) throw PhaseDomainError("elliptic phase needs |A| <= 1");
            break;
        case ProbabilityMode::Hyperbolic:
            if (std::abs(A) < 1.0) throw PhaseDomainError("hyperbolic phase needs |A| >= 1");
            break;
        case ProbabilityMode::Classical:
            if (std::abs(std::abs(A) - 1.0) > 1e-12)
                throw PhaseDomainError("parabolic cosine takes only the values +-1");
            break;
    }
    return l1 + l2 + 2.0 * A * std::sqrt(l1 * l2);
}

std::vector<InterferenceRow> interference_curve(const StatePair& pair,
                                                const std::vector<double>& cs,
                                                ProbabilityMode mode, const PlanckParams& pp) {
    std::vector<InterferenceRow> rows;
    rows.reserve(cs.size());
    if (mode == ProbabilityMode::Classical) {
        for (double c : cs) {
            InterferenceRow r;
            r.c = c;
            r.sum = classical_marginal_product(pair, c, true, true, pp) +
                    classical_marginal_product(pair, c, false, false, pp);
            r.interference = r.sum + 2.0 * classical_marginal_product(pair, c, true, false, pp);
            rows.push_back(r);
        }
        return rows;
    }
    const bool hyp = uses_hyperbolic_phase(pair, mode);
    if (hyp) check_hyperbolic_convergence(pair, pp);
    const SeparableTransform t1 = transform_for(pair, true, pp);
    const SeparableTransform t2 = transform_for(pair, false, pp);
    for (double c : cs) {
        InterferenceRow r;
        r.c = c;
        r.sum = single_from_transform(t1, c, pp.hbar) + single_from_transform(t2, c, pp.hbar);
        r.interference =
            r.sum + cross_from_transforms(t1, t2, pair.b1 - pair.b2, c, pp.hbar, hyp);
        rows.push_back(r);
    }
    return rows;
}

int count_interior_extrema(const std::vector<InterferenceRow>& rows, double rel_tol) {
    if (rows.size() < 3) return 0;
    double lo = rows[0].interference, hi = lo;
    for (const auto& r : rows) {
        lo = std::min(lo, r.interference);
        hi = std::max(hi, r.interference);
    }
    const double tol = rel_tol * std::max(hi - lo, 1e-300);
    int count = 0;
    for (size_t i = 1; i + 1 < rows.size(); ++i) {
        const double dl = rows[i].interference - rows[i - 1].interference;
        const double dr = rows[i + 1].interference - rows[i].interference;
        if (dl > tol && dr < -tol) ++count;
        if (dl < -tol && dr > tol) ++count;
    }
    return count;
}

double measure_position_direct(const StatePair& pair, double c, const PlanckParams& pp) {
    auto state = [&](bool first, double q, double p) -> double {
        const double a = first ? pair.a1 : pair.a2;
        const double b = first ? pair.b1 : pair.b2;
        switch (pair.family) {
            case StatePair::Family::Gaussian:
                return GaussianState(a, b, pair.m, pair.k, pp)(q, p);
            case StatePair::Family::Rational:
                return RationalState(a, b, pair.m, pair.k, pp)(q, p);
            case StatePair::Family::Bump:
                return BumpState{a, b, pair.bump_width}(q, p);
        }
        return 0.0;
    };
    auto v = [&](double q, double p) { return state(true, q, p) + state(false, q, p); };
    // m(c) = (hbar/4) Re Int dx e^{-2 pi i x c} Int Int v(q,p) v(q, p + hbar x/2)
    //        e^{2 pi i q x} dq dp    (coarse 3-D quadrature)
    // the reduced kernel decays like e^{-4 pi |x|}, so a short x-window with
    // a well-resolved q-oscillation is the accurate regime
    const double XL = 2.5, QL = 18.0, PL = 18.0;
    const int nx = 100, nq = 800, np = 300;
    auto outer = [&](double x) {
        auto iq = [&](double q) {
            auto ip = [&](double p) { return v(q, p) * v(q, p + pp.hbar * x / 2.0); };
            const double inner = simpson(ip, -PL, PL, np);
            return inner * std::exp(kI * 2.0 * M_PI * q * x);
        };
        const Cx qint = simpson(iq, -QL, QL, nq);
        return (std::exp(-kI * 2.0 * M_PI * x * c) * qint).real();
    };
    return (4.0 / pp.hbar) * simpson(outer, -XL, XL, nx);
}

} // namespace eph
