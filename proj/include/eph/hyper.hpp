#pragma once

#include <cmath>
#include <complex>
#include <ostream>

#include "eph/errors.hpp"

namespace eph {

/// The three two-dimensional real algebras, classified by sigma = unit^2.
enum class AlgebraKind { Elliptic, Parabolic, Hyperbolic };

inline int sigma_of(AlgebraKind k) {
    switch (k) {
        case AlgebraKind::Elliptic: return -1;
        case AlgebraKind::Parabolic: return 0;
        case AlgebraKind::Hyperbolic: return 1;
    }
    return 0;
}

inline const char* kind_name(AlgebraKind k) {
    switch (k) {
        case AlgebraKind::Elliptic: return "elliptic";
        case AlgebraKind::Parabolic: return "parabolic";
        case AlgebraKind::Hyperbolic: return "hyperbolic";
    }
    return "?";
}

/// A number u + iota*v with iota^2 = sigma(kind).
struct Hyper {
    double u = 0.0;
    double v = 0.0;
    AlgebraKind kind = AlgebraKind::Elliptic;

    Hyper() = default;
    Hyper(double u_, double v_, AlgebraKind k) : u(u_), v(v_), kind(k) {}

    static Hyper real(double x, AlgebraKind k) { return {x, 0.0, k}; }
    static Hyper unit(AlgebraKind k) { return {0.0, 1.0, k}; }
};

inline void require_same_kind(const Hyper& a, const Hyper& b) {
    if (a.kind != b.kind) throw KindMismatch();
}

inline Hyper add(const Hyper& a, const Hyper& b) {
    require_same_kind(a, b);
    return {a.u + b.u, a.v + b.v, a.kind};
}

inline Hyper sub(const Hyper& a, const Hyper& b) {
    require_same_kind(a, b);
    return {a.u - b.u, a.v - b.v, a.kind};
}

inline Hyper neg(const Hyper& a) { return {-a.u, -a.v, a.kind}; }

inline Hyper scale(double s, const Hyper& a) { return {s * a.u, s * a.v, a.kind}; }

/// (u1 + iota v1)(u2 + iota v2) = (u1 u2 + sigma v1 v2) + iota (u1 v2 + u2 v1)
inline Hyper mul(const Hyper& a, const Hyper& b) {
    require_same_kind(a, b);
    const double s = static_cast<double>(sigma_of(a.kind));
    return {a.u * b.u + s * a.v * b.v, a.u * b.v + a.v * b.u, a.kind};
}

inline Hyper conj(const Hyper& a) { return {a.u, -a.v, a.kind}; }

inline double modulus_sq(const Hyper& a) {
    return a.u * a.u - static_cast<double>(sigma_of(a.kind)) * a.v * a.v;
}

inline bool is_zero_divisor(const Hyper& a) { return modulus_sq(a) == 0.0; }

inline Hyper invert(const Hyper& a) {
    const double m = modulus_sq(a);
    if (m == 0.0) throw ZeroDivisor();
    return {a.u / m, -a.v / m, a.kind};
}

inline Hyper div(const Hyper& a, const Hyper& b) { return mul(a, invert(b)); }

/// exp(iota t): cos/1/cosh + unit * sin/t/sinh depending on the algebra.
inline Hyper exp_unit(double t, AlgebraKind k) {
    switch (k) {
        case AlgebraKind::Elliptic: return {std::cos(t), std::sin(t), k};
        case AlgebraKind::Parabolic: return {1.0, t, k};
        case AlgebraKind::Hyperbolic: return {std::cosh(t), std::sinh(t), k};
    }
    return {1.0, 0.0, k};
}

/// atan2(v,u) / v/u / atanh(v/u); undefined outside each chart.
inline double argument(const Hyper& a) {
    switch (a.kind) {
        case AlgebraKind::Elliptic:
            if (a.u == 0.0 && a.v == 0.0) throw ArgumentUndefined("argument of elliptic zero");
            return std::atan2(a.v, a.u);
        case AlgebraKind::Parabolic:
            if (a.u == 0.0) throw ArgumentUndefined("parabolic argument needs u != 0");
            return a.v / a.u;
        case AlgebraKind::Hyperbolic:
            if (std::abs(a.u) <= std::abs(a.v))
                throw ArgumentUndefined("hyperbolic argument needs |u| > |v|");
            return std::atanh(a.v / a.u);
    }
    throw ArgumentUndefined();
}

struct Polar {
    double modulus = 0.0;
    double argument = 0.0;
};

/// Polar pair with modulus * exp_unit(argument) reconstructing the element
/// (parabolic case returns (u, v/u) following the dual-number convention).
inline Polar polar(const Hyper& a) {
    const double arg = argument(a);
    switch (a.kind) {
        case AlgebraKind::Elliptic: return {std::sqrt(a.u * a.u + a.v * a.v), arg};
        case AlgebraKind::Parabolic: return {a.u, arg};
        case AlgebraKind::Hyperbolic: {
            const double m = std::sqrt(a.u * a.u - a.v * a.v);
            return {a.u >= 0.0 ? m : -m, arg};
        }
    }
    return {0.0, 0.0};
}

/// e^{p x}: a + p b -> a + p(a x + b).
inline Hyper parabolic_rotation(double x, const Hyper& a) {
    if (a.kind != AlgebraKind::Parabolic) throw KindMismatch("parabolic rotation on non-dual number");
    return {a.u, a.u * x + a.v, a.kind};
}

inline bool approx_eq(const Hyper& a, const Hyper& b, double tol) {
    return a.kind == b.kind && std::abs(a.u - b.u) <= tol && std::abs(a.v - b.v) <= tol;
}

inline std::ostream& operator<<(std::ostream& os, const Hyper& a) {
    const char* unit = a.kind == AlgebraKind::Elliptic ? "i" : (a.kind == AlgebraKind::Parabolic ? "p" : "h");
    return os << a.u << (a.v < 0 ? "" : "+") << a.v << unit;
}

// ---------------------------------------------------------------------------
// The four-dimensional algebra spanned by {1, i, p, ip}: z + p*w with complex
// z, w and p^2 = 0.

struct DualComplex {
    std::complex<double> z{0.0, 0.0}; // 1, i block
    std::complex<double> w{0.0, 0.0}; // p, ip block

    DualComplex() = default;
    DualComplex(std::complex<double> z_, std::complex<double> w_) : z(z_), w(w_) {}
    explicit DualComplex(double x) : z(x, 0.0) {}
};

inline DualComplex dc_add(const DualComplex& a, const DualComplex& b) { return {a.z + b.z, a.w + b.w}; }
inline DualComplex dc_sub(const DualComplex& a, const DualComplex& b) { return {a.z - b.z, a.w - b.w}; }
inline DualComplex dc_neg(const DualComplex& a) { return {-a.z, -a.w}; }

/// (z + p w)(z' + p w') = z z' + p(z w' + w z'), the p^2 = 0 truncation.
inline DualComplex dc_mul(const DualComplex& a, const DualComplex& b) {
    return {a.z * b.z, a.z * b.w + a.w * b.z};
}

/// Conjugation in i only; p is untouched.
inline DualComplex dc_conj(const DualComplex& a) { return {std::conj(a.z), std::conj(a.w)}; }

inline double dc_seminorm(const DualComplex& a) { return std::abs(a.z); }

inline DualComplex operator+(const DualComplex& a, const DualComplex& b) { return dc_add(a, b); }
inline DualComplex operator-(const DualComplex& a, const DualComplex& b) { return dc_sub(a, b); }
inline DualComplex operator-(const DualComplex& a) { return dc_neg(a); }
inline DualComplex operator*(const DualComplex& a, const DualComplex& b) { return dc_mul(a, b); }
inline DualComplex operator*(double s, const DualComplex& a) { return {s * a.z, s * a.w}; }
inline DualComplex operator*(std::complex<double> s, const DualComplex& a) { return {s * a.z, s * a.w}; }

// ---------------------------------------------------------------------------
// Compile-time double (split-complex) numbers a + h b with h^2 = +1, used by
// the hyperbolic representations where the algebra is known statically.

struct Split {
    double a = 0.0; // cosh component
    double b = 0.0; // sinh component

    Split() = default;
    Split(double a_, double b_) : a(a_), b(b_) {}
    explicit Split(double x) : a(x) {}
};

inline Split operator+(const Split& x, const Split& y) { return {x.a + y.a, x.b + y.b}; }
inline Split operator-(const Split& x, const Split& y) { return {x.a - y.a, x.b - y.b}; }
inline Split operator-(const Split& x) { return {-x.a, -x.b}; }
inline Split operator*(const Split& x, const Split& y) {
    return {x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a};
}
inline Split operator*(double s, const Split& x) { return {s * x.a, s * x.b}; }
inline Split split_conj(const Split& x) { return {x.a, -x.b}; }
/// e^{h t} = cosh t + h sinh t
inline Split split_exp(double t) { return {std::cosh(t), std::sinh(t)}; }
inline double split_abs(const Split& x) { return std::abs(x.a) + std::abs(x.b); }

} // namespace eph
