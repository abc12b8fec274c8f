#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "eph/errors.hpp"

namespace eph {

/// Composite Simpson rule on [a,b]; n is rounded up to an even panel count.
template <class F>
auto simpson(F&& f, double a, double b, int n) -> decltype(f(a)) {
    if (!(b > a) || n < 2) throw QuadratureDomainError("bad Simpson interval");
    if (n % 2 != 0) ++n;
    const double h = (b - a) / n;
    auto acc = f(a) + f(b);
    for (int i = 1; i < n; ++i) {
        const double w = (i % 2 == 1) ? 4.0 : 2.0;
        acc = acc + w * f(a + i * h);
    }
    return (h / 3.0) * acc;
}

/// Tangent-substitution Simpson over the whole real line for integrands with
/// at least 1/x^2 decay: x = tan(theta), dx = sec^2(theta) dtheta.
template <class F>
auto simpson_real_line(F&& f, int n) -> decltype(f(0.0)) {
    const double lo = -M_PI / 2 + 1e-9, hi = M_PI / 2 - 1e-9;
    auto g = [&](double th) {
        const double c = std::cos(th);
        const double x = std::tan(th);
        return (1.0 / (c * c)) * f(x);
    };
    return simpson(g, lo, hi, n);
}

struct GridSpec1D {
    double lo = 0.0;
    double step = 0.0;
    int n = 0;

    double at(int i) const { return lo + step * i; }
};

inline GridSpec1D make_grid(double lo, double hi, int n) {
    if (n < 2 || !(hi > lo)) throw GridMismatch("bad 1-D grid");
    return {lo, (hi - lo) / (n - 1), n};
}

/// Trapezoid weight for node i of an n-node uniform grid.
inline double trapezoid_weight(int i, int n) { return (i == 0 || i == n - 1) ? 0.5 : 1.0; }

// ---------------------------------------------------------------------------
// Central finite differences, 4th order. Orders 1..4. The step defaults keep
// truncation and rounding balanced for each order.

inline double fd_default_step(int order) {
    switch (order) {
        case 1: return 1e-4;
        case 2: return 1e-4;
        case 3: return 4e-3;
        default: return 8e-3;
    }
}

template <class F>
auto fd_derivative(F&& f, double x, int order, double step = 0.0) -> decltype(f(x)) {
    const double d = step > 0.0 ? step : fd_default_step(order);
    using R = decltype(f(x));
    switch (order) {
        case 0:
            return f(x);
        case 1:
            return (1.0 / (12.0 * d)) *
                   (R(f(x - 2 * d)) - 8.0 * f(x - d) + 8.0 * f(x + d) - f(x + 2 * d));
        case 2:
            return (1.0 / (12.0 * d * d)) *
                   (-R(f(x - 2 * d)) + 16.0 * f(x - d) - 30.0 * f(x) + 16.0 * f(x + d) -
                    f(x + 2 * d));
        case 3:
            return (1.0 / (d * d * d)) *
                   (0.125 * R(f(x - 3 * d)) - f(x - 2 * d) + 1.625 * f(x - d) -
                    1.625 * f(x + d) + f(x + 2 * d) - 0.125 * f(x + 3 * d));
        case 4:
            return (1.0 / (d * d * d * d)) *
                   (-(1.0 / 6.0) * R(f(x - 3 * d)) + 2.0 * f(x - 2 * d) - 6.5 * f(x - d) +
                    (28.0 / 3.0) * f(x) - 6.5 * f(x + d) + 2.0 * f(x + 2 * d) -
                    (1.0 / 6.0) * f(x + 3 * d));
        default:
            throw DomainError("finite differences support orders 0..4");
    }
}

/// Mixed partial d^a/dq^a d^b/dp^b of f(q,p) by nested central stencils.
template <class F>
auto fd_mixed(F&& f, double q, double p, int aq, int bp, double step_q = 0.0,
              double step_p = 0.0) -> decltype(f(q, p)) {
    if (bp == 0) {
        auto g = [&](double x) { return f(x, p); };
        return fd_derivative(g, q, aq, step_q);
    }
    auto inner = [&](double x) {
        auto g = [&](double y) { return f(x, y); };
        return fd_derivative(g, p, bp, step_p);
    };
    return fd_derivative(inner, q, aq, step_q);
}

} // namespace eph
