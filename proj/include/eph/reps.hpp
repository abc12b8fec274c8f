#pragma once

#include <complex>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "eph/heisenberg.hpp"
#include "eph/hyper.hpp"
#include "eph/lie.hpp"
#include "eph/quadrature.hpp"

namespace eph {

using Cx = std::complex<double>;

struct PlanckParams {
    double hbar = 0.0;
    double h = 0.0; // h = 2 pi hbar

    explicit PlanckParams(double hbar_) : hbar(hbar_), h(2.0 * M_PI * hbar_) {
        if (!(hbar_ > 0.0)) throw DomainError("hbar must be positive");
    }
};

// ---------------------------------------------------------------------------
// Scalar helpers for the three value algebras.

template <class S> S scalar_from_real(double);
template <> inline double scalar_from_real<double>(double x) { return x; }
template <> inline Cx scalar_from_real<Cx>(double x) { return {x, 0.0}; }
template <> inline DualComplex scalar_from_real<DualComplex>(double x) { return DualComplex(x); }
template <> inline Split scalar_from_real<Split>(double x) { return Split(x); }

inline double scalar_abs(const Cx& x) { return std::abs(x); }
inline double scalar_abs(const DualComplex& x) { return std::abs(x.z) + std::abs(x.w); }
inline double scalar_abs(const Split& x) { return split_abs(x); }

// ---------------------------------------------------------------------------
// Polynomials in (q,p) with scalar coefficients.

template <class S>
struct PolyQP {
    int nq = 0, np = 0;          // degrees
    std::vector<S> c;            // (nq+1)*(np+1), c[m*(np+1)+n] multiplies q^m p^n

    PolyQP() : c(1, scalar_from_real<S>(0.0)) {}

    static PolyQP constant(const S& v) {
        PolyQP r;
        r.c[0] = v;
        return r;
    }
    static PolyQP monomial(const S& v, int m, int n) {
        PolyQP r;
        r.nq = m;
        r.np = n;
        r.c.assign(static_cast<size_t>(m + 1) * (n + 1), scalar_from_real<S>(0.0));
        r.c[static_cast<size_t>(m) * (n + 1) + n] = v;
        return r;
    }

    const S& at(int m, int n) const { return c[static_cast<size_t>(m) * (np + 1) + n]; }
    S& at(int m, int n) { return c[static_cast<size_t>(m) * (np + 1) + n]; }

    S eval(double q, double p) const {
        S acc = scalar_from_real<S>(0.0);
        double qm = 1.0;
        for (int m = 0; m <= nq; ++m) {
            double pn = 1.0;
            for (int n = 0; n <= np; ++n) {
                acc = acc + (qm * pn) * at(m, n);
                pn *= p;
            }
            qm *= q;
        }
        return acc;
    }

    PolyQP resized(int mq, int mp) const {
        PolyQP r;
        r.nq = mq;
        r.np = mp;
        r.c.assign(static_cast<size_t>(mq + 1) * (mp + 1), scalar_from_real<S>(0.0));
        for (int m = 0; m <= nq; ++m)
            for (int n = 0; n <= np; ++n) r.at(m, n) = at(m, n);
        return r;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& v : c) m = std::max(m, scalar_abs(v));
        return m;
    }

    PolyQP dq() const {
        if (nq == 0) return PolyQP();
        PolyQP r;
        r.nq = nq - 1;
        r.np = np;
        r.c.assign(static_cast<size_t>(nq) * (np + 1), scalar_from_real<S>(0.0));
        for (int m = 1; m <= nq; ++m)
            for (int n = 0; n <= np; ++n) r.at(m - 1, n) = static_cast<double>(m) * at(m, n);
        return r;
    }
    PolyQP dp() const {
        if (np == 0) return PolyQP();
        PolyQP r;
        r.nq = nq;
        r.np = np - 1;
        r.c.assign(static_cast<size_t>(nq + 1) * np, scalar_from_real<S>(0.0));
        for (int m = 0; m <= nq; ++m)
            for (int n = 1; n <= np; ++n) r.at(m, n - 1) = static_cast<double>(n) * at(m, n);
        return r;
    }
};

template <class S>
PolyQP<S> operator+(const PolyQP<S>& a, const PolyQP<S>& b) {
    const int mq = std::max(a.nq, b.nq), mp = std::max(a.np, b.np);
    PolyQP<S> r = a.resized(mq, mp);
    for (int m = 0; m <= b.nq; ++m)
        for (int n = 0; n <= b.np; ++n) r.at(m, n) = r.at(m, n) + b.at(m, n);
    return r;
}

template <class S>
PolyQP<S> operator-(const PolyQP<S>& a, const PolyQP<S>& b) {
    const int mq = std::max(a.nq, b.nq), mp = std::max(a.np, b.np);
    PolyQP<S> r = a.resized(mq, mp);
    for (int m = 0; m <= b.nq; ++m)
        for (int n = 0; n <= b.np; ++n) r.at(m, n) = r.at(m, n) - b.at(m, n);
    return r;
}

template <class S>
PolyQP<S> operator*(const PolyQP<S>& a, const PolyQP<S>& b) {
    PolyQP<S> r;
    r.nq = a.nq + b.nq;
    r.np = a.np + b.np;
    r.c.assign(static_cast<size_t>(r.nq + 1) * (r.np + 1), scalar_from_real<S>(0.0));
    for (int m = 0; m <= a.nq; ++m)
        for (int n = 0; n <= a.np; ++n)
            for (int mm = 0; mm <= b.nq; ++mm)
                for (int nn = 0; nn <= b.np; ++nn)
                    r.at(m + mm, n + nn) = r.at(m + mm, n + nn) + a.at(m, n) * b.at(mm, nn);
    return r;
}

template <class S>
PolyQP<S> operator*(const S& s, const PolyQP<S>& a) {
    PolyQP<S> r = a;
    for (auto& v : r.c) v = s * v;
    return r;
}

// ---------------------------------------------------------------------------
// First/second-order differential operators with polynomial coefficients.
// Compositions and commutators are expanded symbolically (Leibniz), so no
// nested numerical differentiation is ever needed.

template <class S>
struct OpTerm {
    PolyQP<S> coeff;
    int dq = 0, dp = 0;
};

template <class S>
using StateFn = std::function<S(double, double)>;

template <class S>
struct OpExpr {
    std::vector<OpTerm<S>> terms;

    static OpExpr zero() { return {}; }
    static OpExpr multiplication(const PolyQP<S>& c) { return {{OpTerm<S>{c, 0, 0}}}; }
    static OpExpr derivative(const S& c, int dq, int dp) {
        return {{OpTerm<S>{PolyQP<S>::constant(c), dq, dp}}};
    }

    int max_order() const {
        int m = 0;
        for (const auto& t : terms) m = std::max(m, t.dq + t.dp);
        return m;
    }

    /// Merge equal-derivative terms and drop zero coefficients.
    OpExpr normalized(double drop_tol = 0.0) const {
        OpExpr r;
        for (const auto& t : terms) {
            bool merged = false;
            for (auto& u : r.terms)
                if (u.dq == t.dq && u.dp == t.dp) {
                    u.coeff = u.coeff + t.coeff;
                    merged = true;
                    break;
                }
            if (!merged) r.terms.push_back(t);
        }
        OpExpr out;
        for (const auto& t : r.terms)
            if (t.coeff.max_abs() > drop_tol) out.terms.push_back(t);
        return out;
    }

    S apply(const StateFn<S>& f, double q, double p) const {
        S acc = scalar_from_real<S>(0.0);
        for (const auto& t : terms) {
            // steps scale with the evaluation point so polynomial-coefficient
            // terms stay accurate on rational tails
            const double sq = fd_default_step(t.dq) * (1.0 + std::abs(q));
            const double sp = fd_default_step(t.dp) * (1.0 + std::abs(p));
            const S d = fd_mixed(f, q, p, t.dq, t.dp, sq, sp);
            acc = acc + t.coeff.eval(q, p) * d;
        }
        return acc;
    }

    StateFn<S> applied(const StateFn<S>& f) const {
        OpExpr self = *this;
        return [self, f](double q, double p) { return self.apply(f, q, p); };
    }
};

template <class S>
OpExpr<S> operator+(const OpExpr<S>& a, const OpExpr<S>& b) {
    OpExpr<S> r = a;
    r.terms.insert(r.terms.end(), b.terms.begin(), b.terms.end());
    return r.normalized();
}

template <class S>
OpExpr<S> operator-(const OpExpr<S>& a, const OpExpr<S>& b) {
    OpExpr<S> r = a;
    for (auto t : b.terms) {
        t.coeff = scalar_from_real<S>(-1.0) * t.coeff;
        r.terms.push_back(t);
    }
    return r.normalized();
}

template <class S>
OpExpr<S> operator*(const S& s, const OpExpr<S>& a) {
    OpExpr<S> r = a;
    for (auto& t : r.terms) t.coeff = s * t.coeff;
    return r;
}

namespace detail {
inline long binom(int n, int k) {
    long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}
} // namespace detail

/// a . b as operators: Leibniz expansion of derivatives through coefficients.
template <class S>
OpExpr<S> compose(const OpExpr<S>& a, const OpExpr<S>& b) {
    OpExpr<S> r;
    for (const auto& ta : a.terms)
        for (const auto& tb : b.terms) {
            for (int j = 0; j <= ta.dq; ++j)
                for (int k = 0; k <= ta.dp; ++k) {
                    PolyQP<S> c = tb.coeff;
                    for (int d = 0; d < ta.dq - j; ++d) c = c.dq();
                    for (int d = 0; d < ta.dp - k; ++d) c = c.dp();
                    if (c.max_abs() == 0.0) continue;
                    const double w = static_cast<double>(detail::binom(ta.dq, j)) *
                                     static_cast<double>(detail::binom(ta.dp, k));
                    OpTerm<S> t;
                    t.coeff = scalar_from_real<S>(w) * (ta.coeff * c);
                    t.dq = tb.dq + j;
                    t.dp = tb.dp + k;
                    r.terms.push_back(t);
                }
        }
    return r.normalized();
}

template <class S>
OpExpr<S> op_commutator(const OpExpr<S>& a, const OpExpr<S>& b) {
    return (compose(a, b) - compose(b, a)).normalized();
}

// ---------------------------------------------------------------------------
// Derived operator families for the four representation variants. Each family
// satisfies the structure-constant table of eph::structure_constants().

template <class S>
struct DerivedFamily {
    OpExpr<S> ops[kLieDim]; // indexed by LieGen

    const OpExpr<S>& of(LieGen g) const { return ops[static_cast<int>(g)]; }
    OpExpr<S>& of(LieGen g) { return ops[static_cast<int>(g)]; }
};

enum class RepVariant { Schrodinger, FSB, Dual, Double };

const char* variant_name(RepVariant v);

DerivedFamily<Cx> schrodinger_family(const PlanckParams& pp);
DerivedFamily<Cx> fsb_family(const PlanckParams& pp);
DerivedFamily<DualComplex> dual_family(const PlanckParams& pp);
DerivedFamily<Split> double_family(const PlanckParams& pp);

struct RelationCheck {
    std::string relation;
    double residual = 0.0;
};

/// Relative residual of every nonzero structure-constant relation applied to
/// the 12-function Gaussian-times-monomial test set.
std::vector<RelationCheck> commutator_table_check(RepVariant variant, const PlanckParams& pp);

/// Quadratic relations between the symplectic derived operators and the
/// Heisenberg ones (Schrodinger and Double variants).
std::vector<RelationCheck> quadratic_relations_check(RepVariant variant, const PlanckParams& pp);

/// Symbolic p-block commutator check: [X,Y] = p h exactly for the dual family.
struct DualCommutatorReport {
    double main_block_max = 0.0;    // must be exactly 0
    double pblock_deviation = 0.0;  // |coeff - h|
    bool exact = false;
};
DualCommutatorReport dual_commutator_check(const PlanckParams& pp);

// ---------------------------------------------------------------------------
// Group actions as evaluator wrappers (prefactor times argument shift).

using ConfState = std::function<Cx(double)>;
using PhaseState = StateFn<Cx>;
using SplitPhaseState = StateFn<Split>;

/// [rho(s,x,y) f](q) = e^{2 pi i hbar (s - x y/2) + 2 pi i x q} f(q - hbar y)
ConfState schrodinger_rep(const PlanckParams& pp, const HElem& g, const ConfState& f);

/// [rho(s,x,y) f](q,p) = e^{-2 pi i (hbar s + q x + p y)} f(q - hbar y/2, p + hbar x/2)
PhaseState fsb_rep(const PlanckParams& pp, const HElem& g, const PhaseState& f);

/// hbar = 0 limit: pure modulation, no shift.
PhaseState commutative_rep(const HElem& g, const PhaseState& f);

/// Phase-space state with values in the 1,i + p,ip algebra; analytic partials
/// of the main block keep the nilpotent action exact under iteration.
struct DualPhaseState {
    PhaseState main;
    PhaseState pblock;            // may be null (zero)
    PhaseState main_q, main_p;    // analytic partials of main (required)
};

DualPhaseState dual_rep(const PlanckParams& pp, const HElem& g, const DualPhaseState& f);

/// Hyperbolic phase-space action e^{-h_unit(h s + q x + p y)} f(q - h y/2, p + h x/2).
SplitPhaseState double_rep(const PlanckParams& pp, const HElem& g, const SplitPhaseState& f);

/// Integrated representation of a character-reduced kernel through the
/// phase-space action (trapezoid over the kernel grid).
PhaseState weyl_quantize(const PlanckParams& pp, const KernelGrid& Hhat, const PhaseState& f);

/// First-order classical integrated operator H + (p h/2)(H_p d_q - H_q d_p).
OpExpr<DualComplex> classical_operator(const PolyQP<double>& H, const PlanckParams& pp);

/// k(q) = int k(x) e^{-h_unit q x} dx as (cosh, -sinh) component pair; rejects
/// integrands whose growth reaches the truncation boundary.
std::vector<Split> hyperbolic_fourier(const std::function<double(double)>& f,
                                      const std::vector<double>& qs, double L = 20.0,
                                      int n = 4000);

// Standard test sets (Gaussian times monomials up to degree 4).
std::vector<StateFn<Cx>> test_states_config_cx();
std::vector<StateFn<Cx>> test_states_phase_cx();
std::vector<StateFn<DualComplex>> test_states_phase_dual();
std::vector<StateFn<Split>> test_states_config_split();

} // namespace eph
