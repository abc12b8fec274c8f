#include "eph/heisenberg.hpp"

#include <cmath>

namespace eph {

namespace {

HElem field_direction(FieldName which) {
    switch (which) {
        case FieldName::S: return {1, 0, 0};
        case FieldName::X: return {0, 1, 0};
        case FieldName::Y: return {0, 0, 1};
    }
    return {};
}

} // namespace

double invariant_field(FieldName which, FieldSide side,
                       const std::function<double(const HElem&)>& f, const HElem& at,
                       double step) {
    const HElem dir = field_direction(which);
    auto along = [&](double t) {
        const HElem e{t * dir.s, t * dir.x, t * dir.y};
        // left-invariant fields generate right translations; right-invariant
        // ones act by exp(-tX) on the left
        return side == FieldSide::Left ? f(h_mul(at, e)) : f(h_mul(HElem{-e.s, -e.x, -e.y}, at));
    };
    return (along(-2 * step) - 8.0 * along(-step) + 8.0 * along(step) - along(2 * step)) /
           (12.0 * step);
}

KernelGrid make_kernel_grid(AlgebraKind kind, double planck_h, double L, int n_cells) {
    if (planck_h <= 0.0) throw DomainError("character parameter h must be positive");
    if (n_cells < 4 || L <= 0.0) throw GridMismatch("kernel grid too small");
    if (n_cells % 2 != 0) ++n_cells; // keep the origin on the lattice
    KernelGrid g;
    g.kind = kind;
    g.planck_h = planck_h;
    g.nx = g.ny = n_cells + 1;
    g.xmin = g.ymin = -L;
    g.dx = g.dy = 2.0 * L / n_cells;
    g.values.assign(static_cast<size_t>(g.nx) * g.ny, Hyper::real(0.0, kind));
    return g;
}

KernelGrid sample_kernel(AlgebraKind kind, double planck_h, double L, int n_cells,
                         const std::function<Hyper(double, double)>& f) {
    KernelGrid g = make_kernel_grid(kind, planck_h, L, n_cells);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            Hyper v = f(g.x_at(i), g.y_at(j));
            if (v.kind != kind) throw KindMismatch("kernel sample kind");
            g.at(i, j) = v;
        }
    return g;
}

KernelGrid delta_kernel(const KernelGrid& like, double x0, double y0) {
    KernelGrid g = like;
    for (auto& v : g.values) v = Hyper::real(0.0, g.kind);
    const int i = static_cast<int>(std::lround((x0 - g.xmin) / g.dx));
    const int j = static_cast<int>(std::lround((y0 - g.ymin) / g.dy));
    if (i < 0 || i >= g.nx || j < 0 || j >= g.ny) throw GridMismatch("delta node off the grid");
    g.at(i, j) = Hyper::real(1.0 / (g.dx * g.dy), g.kind);
    return g;
}

bool grids_compatible(const KernelGrid& a, const KernelGrid& b) {
    return a.kind == b.kind && a.planck_h == b.planck_h && a.nx == b.nx && a.ny == b.ny &&
           a.xmin == b.xmin && a.ymin == b.ymin && a.dx == b.dx && a.dy == b.dy;
}

namespace {

/// Even (composition) or odd (commutator) character weight of the symplectic
/// area w.
Hyper character_weight(bool odd, AlgebraKind kind, double h, double w) {
    if (!odd) {
        switch (kind) {
            case AlgebraKind::Elliptic: return exp_unit(h * w / 2.0, kind);
            case AlgebraKind::Parabolic: return exp_unit(h * w / 2.0, kind);
            case AlgebraKind::Hyperbolic: return exp_unit(h * w, kind);
        }
    }
    switch (kind) {
        case AlgebraKind::Elliptic: return Hyper{0.0, 2.0 * std::sin(h * w / 2.0), kind};
        case AlgebraKind::Parabolic: return Hyper{0.0, h * w, kind};
        case AlgebraKind::Hyperbolic: return Hyper::real(std::sinh(h * w), kind);
    }
    return Hyper::real(0.0, kind);
}

KernelGrid twisted_convolution(const KernelGrid& k1, const KernelGrid& k2, bool odd) {
    if (!grids_compatible(k1, k2)) throw GridMismatch();
    KernelGrid out = k1;
    for (auto& v : out.values) v = Hyper::real(0.0, out.kind);
    // x - x' stays on the lattice because the grid is symmetric around 0
    const int offx = (k1.nx - 1) / 2;
    const int offy = (k1.ny - 1) / 2;
    const double wxy = k1.dx * k1.dy;
    for (int j = 0; j < out.ny; ++j) {
        const double y = out.y_at(j);
        for (int i = 0; i < out.nx; ++i) {
            const double x = out.x_at(i);
            Hyper acc = Hyper::real(0.0, out.kind);
            for (int jj = 0; jj < k1.ny; ++jj) {
                const int j2 = j - jj + offy;
                if (j2 < 0 || j2 >= k2.ny) continue;
                const double yp = k1.y_at(jj);
                for (int ii = 0; ii < k1.nx; ++ii) {
                    const int i2 = i - ii + offx;
                    if (i2 < 0 || i2 >= k2.nx) continue;
                    const double xp = k1.x_at(ii);
                    const Hyper phase =
                        character_weight(odd, k1.kind, k1.planck_h, symplectic_form(x, y, xp, yp));
                    if (!odd) {
                        const Hyper& a = k1.at(ii, jj);
                        if (a.u == 0.0 && a.v == 0.0) continue;
                        acc = add(acc, mul(phase, mul(a, k2.at(i2, j2))));
                        continue;
                    }
                    // odd weight: fold each node with its area-mirror so the
                    // self-commutator cancels term by term
                    if (jj > j2 || (jj == j2 && ii >= i2)) continue;
                    const Hyper pair =
                        sub(mul(k1.at(ii, jj), k2.at(i2, j2)), mul(k1.at(i2, j2), k2.at(ii, jj)));
                    acc = add(acc, mul(phase, pair));
                }
            }
            out.at(i, j) = scale(wxy, acc);
        }
    }
    return out;
}

} // namespace

KernelGrid reduced_composition(const KernelGrid& k1, const KernelGrid& k2) {
    return twisted_convolution(k1, k2, false);
}

KernelGrid reduced_commutator(const KernelGrid& k1, const KernelGrid& k2) {
    return twisted_convolution(k1, k2, true);
}

KernelGrid grid_sub(const KernelGrid& a, const KernelGrid& b) {
    if (!grids_compatible(a, b)) throw GridMismatch();
    KernelGrid out = a;
    for (size_t i = 0; i < out.values.size(); ++i) out.values[i] = sub(a.values[i], b.values[i]);
    return out;
}

double grid_max_abs(const KernelGrid& a) {
    double m = 0.0;
    for (const auto& v : a.values) m = std::max(m, std::max(std::abs(v.u), std::abs(v.v)));
    return m;
}

} // namespace eph
