#include "eph/sl2.hpp"

#include <cmath>

namespace eph {

namespace {
constexpr double kDetTol = 1e-10;

double wrap_angle(double t) {
    // into (-pi, pi]
    t = std::fmod(t, 2.0 * M_PI);
    if (t <= -M_PI) t += 2.0 * M_PI;
    if (t > M_PI) t -= 2.0 * M_PI;
    return t;
}
} // namespace

Mat2::Mat2(double a_, double b_, double c_, double d_) : a(a_), b(b_), c(c_), d(d_) {
    if (std::abs(det() - 1.0) > kDetTol) throw DomainError("matrix determinant is not 1");
}

Mat2 operator*(const Mat2& g, const Mat2& h) {
    return {g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d,
            g.c * h.a + g.d * h.c, g.c * h.b + g.d * h.d};
}

bool approx_eq(const Mat2& g, const Mat2& h, double tol) {
    return std::abs(g.a - h.a) <= tol && std::abs(g.b - h.b) <= tol &&
           std::abs(g.c - h.c) <= tol && std::abs(g.d - h.d) <= tol;
}

const char* subgroup_name(SubgroupId id) {
    switch (id) {
        case SubgroupId::A: return "A";
        case SubgroupId::N: return "N";
        case SubgroupId::K: return "K";
        case SubgroupId::Nprime: return "Nprime";
        case SubgroupId::Aprime: return "Aprime";
    }
    return "?";
}

Mat2 subgroup_element(SubgroupId id, double t) {
    switch (id) {
        case SubgroupId::A:
            return {std::exp(-t / 2.0), 0.0, 0.0, std::exp(t / 2.0)};
        case SubgroupId::N:
            return {1.0, t, 0.0, 1.0};
        case SubgroupId::K: {
            const double w = wrap_angle(t);
            return {std::cos(w), std::sin(w), -std::sin(w), std::cos(w)};
        }
        case SubgroupId::Nprime:
            return {1.0, 0.0, t, 1.0};
        case SubgroupId::Aprime:
            return {std::cosh(t), std::sinh(t), std::sinh(t), std::cosh(t)};
    }
    return Mat2::identity();
}

AlgebraKind isotropy_kind(SubgroupId id) {
    switch (id) {
        case SubgroupId::K: return AlgebraKind::Elliptic;
        case SubgroupId::Nprime: return AlgebraKind::Parabolic;
        case SubgroupId::Aprime: return AlgebraKind::Hyperbolic;
        case SubgroupId::A: return AlgebraKind::Hyperbolic;
        case SubgroupId::N: return AlgebraKind::Parabolic;
    }
    return AlgebraKind::Elliptic;
}

Hyper moebius(const Mat2& g, const Hyper& w) {
    const AlgebraKind k = w.kind;
    const Hyper num = add(scale(g.a, w), Hyper::real(g.b, k));
    const Hyper den = add(scale(g.c, w), Hyper::real(g.d, k));
    if (is_zero_divisor(den)) throw NonInvertibleDenominator();
    return mul(num, invert(den));
}

Hyper moebius_components(const Mat2& g, const Hyper& w) {
    const double s = static_cast<double>(sigma_of(w.kind));
    const double cu_d = g.c * w.u + g.d;
    const double D = cu_d * cu_d - s * (g.c * w.v) * (g.c * w.v);
    if (D == 0.0) throw NonInvertibleDenominator();
    const double up = ((g.a * w.u + g.b) * cu_d - s * g.c * g.a * w.v * w.v) / D;
    const double vp = w.v / D;
    return {up, vp, w.kind};
}

std::vector<Hyper> orbit(SubgroupId id, const Hyper& w0, const std::vector<double>& ts) {
    std::vector<Hyper> out;
    out.reserve(ts.size());
    for (double t : ts) {
        try {
            out.push_back(moebius(subgroup_element(id, t), w0));
        } catch (const NonInvertibleDenominator&) {
            throw NonInvertibleDenominator("orbit hits a zero-divisor denominator at t = " +
                                           std::to_string(t));
        }
    }
    return out;
}

double k_orbit_invariant(const Hyper& w) {
    const double s = static_cast<double>(sigma_of(w.kind));
    if (w.v == 0.0) throw DomainError("orbit invariant needs v != 0");
    return (w.u * w.u - s * w.v * w.v + 1.0) / w.v;
}

Iwasawa iwasawa(const Mat2& g) {
    const double r = std::hypot(g.c, g.d);
    const double t = std::atan2(-g.c, g.d);
    const Mat2 gK = subgroup_element(SubgroupId::K, t);
    const double nu = g.a * g.c + g.b * g.d;
    Iwasawa out;
    out.gA = Mat2{1.0 / r, 0.0, 0.0, r};
    out.gN = Mat2{1.0, nu, 0.0, 1.0};
    out.gK = gK;
    return out;
}

Mat2 section_s(double u, double v) {
    if (v <= 0.0) throw DomainError("section needs v > 0");
    const double rv = std::sqrt(v);
    return {rv, u / rv, 0.0, 1.0 / rv};
}

Mat2 map_r(const Mat2& g, SubgroupId id) {
    AlgebraKind kind;
    switch (id) {
        case SubgroupId::K: kind = AlgebraKind::Elliptic; break;
        case SubgroupId::Nprime: kind = AlgebraKind::Parabolic; break;
        case SubgroupId::Aprime: kind = AlgebraKind::Hyperbolic; break;
        default:
            throw DomainError("map_r is defined for the isotropy subgroups K, N', A'");
    }
    const Hyper base = Hyper::unit(kind);
    const Hyper w = moebius(g, base);
    if (w.v <= 0.0) throw DomainError("point left the upper half-plane chart");
    return section_s(w.u, w.v).inverse() * g;
}

// ---------------------------------------------------------------------------

namespace {

using Cx = std::complex<double>;

Cx cx_pow_int(Cx z, int k) {
    Cx r{1.0, 0.0};
    const Cx base = k >= 0 ? z : 1.0 / z;
    int n = k >= 0 ? k : -k;
    while (n-- > 0) r *= base;
    return r;
}

} // namespace

UHPFunction sl2_rep_action(const RepChoice& which, const Mat2& g, const UHPFunction& f) {
    const Mat2 gi = g.inverse();
    UHPFunction out;
    out.plane = f.plane;
    out.dual_valued = f.dual_valued || which.which == RepChoice::Which::DualN;

    if (which.which == RepChoice::Which::DiscreteK) {
        if (f.plane != AlgebraKind::Elliptic)
            throw ValueAlgebraMismatch("discrete-series action lives on the elliptic half-plane");
        const int k = which.k;
        const bool analytic = which.analytic_form;
        auto base = f;
        out.eval = [gi, k, analytic, base](double u, double v) {
            const Cx w{u, v};
            const Cx den = gi.c * w + gi.d;
            if (std::abs(den) == 0.0) throw NonInvertibleDenominator();
            const Cx wp = (gi.a * w + gi.b) / den;
            Cx factor = cx_pow_int(den, -k);
            if (!analytic) factor *= std::pow(std::abs(den), k);
            const DualComplex val = base(wp.real(), wp.imag());
            return DualComplex{factor * val.z, factor * val.w};
        };
        return out;
    }

    if (f.plane != AlgebraKind::Parabolic)
        throw ValueAlgebraMismatch("N-induced actions live on the parabolic half-plane");
    const double tau = which.tau;
    const bool dual = which.which == RepChoice::Which::DualN;
    auto base = f;
    out.eval = [gi, tau, dual, base](double u, double v) {
        const double den = gi.c * u + gi.d;
        if (den == 0.0) throw NonInvertibleDenominator();
        // parabolic Moebius image: u' = (au+b)/(cu+d), v' = v/(cu+d)^2
        const double up = (gi.a * u + gi.b) / den;
        const double vp = v / (den * den);
        const double t = tau * gi.c * v / den;
        const DualComplex val = base(up, vp);
        if (dual) {
            // multiply by 1 + p t in the dual scalars
            return DualComplex{val.z, val.w + t * val.z};
        }
        const Cx phase = std::exp(Cx{0.0, t});
        return DualComplex{phase * val.z, phase * val.w};
    };
    return out;
}

std::function<Cx(double)> line_rep_action(const Mat2& g, const std::function<Cx(double)>& f) {
    const Mat2 gi = g.inverse();
    return [gi, f](double x) -> Cx {
        const double den = gi.c * x + gi.d;
        if (den == 0.0) return Cx{0.0, 0.0};
        return f((gi.a * x + gi.b) / den) / den;
    };
}

DualComplex uhp_inner_product(const UHPFunction& f1, const UHPFunction& f2,
                              const UHPQuadrature& quad) {
    if (f1.plane != f2.plane) throw ValueAlgebraMismatch("half-plane kinds differ");
    if (!(quad.vmax > quad.vmin) || quad.vmin <= 0.0)
        throw QuadratureDomainError("bad half-plane quadrature window");
    // Dual-number-valued functions conjugate in p as well (w-bar = x - p y);
    // complex-valued ones in i only.
    const bool dual = f1.dual_valued || f2.dual_valued;
    // Shifted arguments can hit the measure-zero line cu+d = 0 at a node;
    // for decaying integrands the limit there is 0.
    auto inner_v = [&](double u) {
        auto h = [&](double v) -> DualComplex {
            try {
                const DualComplex a = f1(u, v);
                DualComplex b = dc_conj(f2(u, v));
                if (dual) b.w = -b.w;
                return (1.0 / (v * v)) * dc_mul(a, b);
            } catch (const NonInvertibleDenominator&) {
                return DualComplex{};
            }
        };
        return simpson(h, quad.vmin, quad.vmax, quad.nv);
    };
    return simpson(inner_v, -quad.ulim, quad.ulim, quad.nu);
}

} // namespace eph
