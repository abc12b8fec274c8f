#pragma once

#include <functional>
#include <vector>

#include "eph/hyper.hpp"
#include "eph/sl2.hpp"

namespace eph {

/// Element (s,x,y) of the one-dimensional Heisenberg group.
struct HElem {
    double s = 0.0, x = 0.0, y = 0.0;
};

inline double symplectic_form(double x, double y, double xp, double yp) {
    return x * yp - xp * y;
}

inline HElem h_mul(const HElem& g1, const HElem& g2) {
    return {g1.s + g2.s + 0.5 * symplectic_form(g1.x, g1.y, g2.x, g2.y), g1.x + g2.x,
            g1.y + g2.y};
}

inline HElem h_inv(const HElem& g) { return {-g.s, -g.x, -g.y}; }

/// Symplectic automorphism (s,x,y) -> (s, ax+by, cx+dy).
inline HElem sp_action(const Mat2& g, const HElem& h) {
    return {h.s, g.a * h.x + g.b * h.y, g.c * h.x + g.d * h.y};
}

enum class FieldName { S, X, Y };
enum class FieldSide { Left, Right };

/// Left-/right-invariant vector field applied to an evaluator on the group,
/// by 4th-order central differences (step 1e-5).
double invariant_field(FieldName which, FieldSide side,
                       const std::function<double(const HElem&)>& f, const HElem& at,
                       double step = 1e-5);

// ---------------------------------------------------------------------------
// Character-reduced kernels: samples of the partial Fourier transform of a
// convolution kernel on a uniform (x,y) grid, with the centre handled by the
// character (kind, h).

struct KernelGrid {
    AlgebraKind kind = AlgebraKind::Elliptic;
    double planck_h = 1.0; // h = 2 pi hbar > 0
    double xmin = 0.0, ymin = 0.0;
    double dx = 0.0, dy = 0.0;
    int nx = 0, ny = 0;
    std::vector<Hyper> values; // row-major, values[j*nx + i] at (x_i, y_j)

    double x_at(int i) const { return xmin + dx * i; }
    double y_at(int j) const { return ymin + dy * j; }
    const Hyper& at(int i, int j) const { return values[static_cast<size_t>(j) * nx + i]; }
    Hyper& at(int i, int j) { return values[static_cast<size_t>(j) * nx + i]; }
};

/// Uniform symmetric grid [-L,L]^2 with n+1 nodes per axis (n even keeps 0 and
/// differences on the lattice).
KernelGrid make_kernel_grid(AlgebraKind kind, double planck_h, double L, int n_cells);

KernelGrid sample_kernel(AlgebraKind kind, double planck_h, double L, int n_cells,
                         const std::function<Hyper(double, double)>& f);

/// Discrete delta at the nearest node to (x0,y0): 1/(dx dy) there, 0 elsewhere.
KernelGrid delta_kernel(const KernelGrid& like, double x0, double y0);

bool grids_compatible(const KernelGrid& a, const KernelGrid& b);

/// Twisted convolution with the character phase:
///   elliptic   e^{ i h w/2 },  parabolic  1 + p h w/2,  hyperbolic  e^{h_unit h w},
/// where w = x y' - y x' pairs the output point with the integration variable.
KernelGrid reduced_composition(const KernelGrid& k1, const KernelGrid& k2);

/// Twisted convolution with the odd part of the character:
///   elliptic 2 i sin(h w / 2), parabolic p h w, hyperbolic sinh(h w).
KernelGrid reduced_commutator(const KernelGrid& k1, const KernelGrid& k2);

KernelGrid grid_sub(const KernelGrid& a, const KernelGrid& b);
double grid_max_abs(const KernelGrid& a);

} // namespace eph
