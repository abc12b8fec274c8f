#pragma once

#include <array>
#include <string>
#include <vector>

#include "eph/hyper.hpp"

namespace eph {

/// Basis of the six-dimensional algebra h x| sl2: S central, [X,Y]=S,
/// sl2 = span{A,B,Z} acting on span{X,Y} through the symplectic action.
enum class LieGen { S = 0, X = 1, Y = 2, A = 3, B = 4, Z = 5 };

constexpr int kLieDim = 6;

const char* lie_gen_name(LieGen g);

/// c[i][j][k]: [e_i, e_j] = sum_k c[i][j][k] e_k. All entries are dyadic
/// rationals, so double arithmetic on them is exact.
const std::array<std::array<std::array<double, kLieDim>, kLieDim>, kLieDim>& structure_constants();

/// Vector in the six-dimensional algebra with coefficients in one algebra.
struct LieVec {
    AlgebraKind kind = AlgebraKind::Elliptic;
    std::array<Hyper, kLieDim> c;

    explicit LieVec(AlgebraKind k = AlgebraKind::Elliptic);

    static LieVec basis(LieGen g, AlgebraKind k);
    Hyper& operator[](LieGen g) { return c[static_cast<int>(g)]; }
    const Hyper& operator[](LieGen g) const { return c[static_cast<int>(g)]; }
    bool is_zero(double tol = 0.0) const;
};

LieVec add(const LieVec& a, const LieVec& b);
LieVec sub(const LieVec& a, const LieVec& b);
LieVec scale(const Hyper& s, const LieVec& a);
LieVec scale(double s, const LieVec& a);
bool approx_eq(const LieVec& a, const LieVec& b, double tol);

LieVec bracket(const LieVec& a, const LieVec& b);

/// Max residual of [a,[b,c]] - [[a,b],c] - [b,[a,c]] over the coefficients.
double jacobi_residual(const LieVec& a, const LieVec& b, const LieVec& c);

/// Killing form on the sl2 part, via trace of ad.ad over {A,B,Z}.
double killing_sl2(const LieVec& x, const LieVec& y);

// ---------------------------------------------------------------------------
// Ladder solving.

enum class LadderGenerator { Z, BminusHalfZ, TwoB };
enum class LadderBasis { Sl2, Heisenberg };

const char* ladder_generator_name(LadderGenerator g);

LieVec ladder_generator_vec(LadderGenerator g, AlgebraKind kind);

struct QuadraticRoots {
    std::vector<Hyper> roots;
    bool parametric = false; // dual family lambda = +-p t, reported at t = 1
};

/// All lambda = u + iota v with lambda^2 = c in the given algebra.
QuadraticRoots hyper_quadratic_roots(double c, AlgebraKind kind);

struct LadderSolution {
    Hyper lambda;
    LieVec vector;
    bool parametric = false;
};

/// Eigenvectors of ad(generator) over the chosen scalar ring, normalized to
/// the published closed forms; every solution satisfies
/// bracket(generator, vector) = lambda * vector exactly.
std::vector<LadderSolution> solve_ladder(LadderGenerator generator, AlgebraKind scalars,
                                         LadderBasis basis);

/// Eigenvalue after applying the ladder operator: eigen0 + lambda.
Hyper ladder_shift_check(LadderGenerator generator, const LadderSolution& sol,
                         const Hyper& eigen0);

struct LadderPropertiesReport {
    LieVec Y;                     // the normalized partner of X
    double generator_scale = 1.0; // X/scale makes the commutation relations exact
    double y_from_ax_residual = 0.0;
    double x_from_ay_residual = 0.0;
    double killing_value = 0.0;
    double eigen_residual = 0.0;      // [X/scale, L+-] - (+-iota) L+-
    double pair_comm_residual = 0.0;  // [L-, L+] - 2 iota (X/scale)
    bool pass = false;
};

/// Verifies the raising/lowering characterization for X in {Z, B-Z/2, B}
/// with the matching unit: Y ~ [A,X], X ~ [A,Y], K(X,Y)=0 and the ladder
/// commutation relations for L+- = +-iota A + Y.
LadderPropertiesReport ladder_properties_check(const LieVec& X);

} // namespace eph
