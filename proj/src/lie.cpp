#include "eph/lie.hpp"

#include <cmath>

namespace eph {

const char* lie_gen_name(LieGen g) {
    switch (g) {
        case LieGen::S: return "S";
        case LieGen::X: return "X";
        case LieGen::Y: return "Y";
        case LieGen::A: return "A";
        case LieGen::B: return "B";
        case LieGen::Z: return "Z";
    }
    return "?";
}

namespace {

using Table = std::array<std::array<std::array<double, kLieDim>, kLieDim>, kLieDim>;

constexpr int iS = 0, iX = 1, iY = 2, iA = 3, iB = 4, iZ = 5;

Table build_table() {
    Table t{};
    auto set = [&](int i, int j, int k, double v) {
        t[i][j][k] = v;
        t[j][i][k] = -v;
    };
    // Heisenberg part
    set(iX, iY, iS, 1.0);
    // sl2 part
    set(iZ, iA, iB, 2.0);
    set(iZ, iB, iA, -2.0);
    set(iA, iB, iZ, -0.5);
    // symplectic action of sl2 on span{X,Y}; A-row signs follow the action
    // (x,y) -> g(x,y), which is the Jacobi-consistent orientation
    set(iA, iX, iX, -0.5);
    set(iA, iY, iY, 0.5);
    set(iB, iX, iY, -0.5);
    set(iB, iY, iX, -0.5);
    set(iZ, iX, iY, 1.0);
    set(iZ, iY, iX, -1.0);
    return t;
}

} // namespace

const Table& structure_constants() {
    static const Table t = build_table();
    return t;
}

LieVec::LieVec(AlgebraKind k) : kind(k) {
    for (auto& h : c) h = Hyper::real(0.0, k);
}

LieVec LieVec::basis(LieGen g, AlgebraKind k) {
    LieVec v(k);
    v[g] = Hyper::real(1.0, k);
    return v;
}

bool LieVec::is_zero(double tol) const {
    for (const auto& h : c)
        if (std::abs(h.u) > tol || std::abs(h.v) > tol) return false;
    return true;
}

LieVec add(const LieVec& a, const LieVec& b) {
    if (a.kind != b.kind) throw KindMismatch();
    LieVec out(a.kind);
    for (int i = 0; i < kLieDim; ++i) out.c[i] = eph::add(a.c[i], b.c[i]);
    return out;
}

LieVec sub(const LieVec& a, const LieVec& b) {
    if (a.kind != b.kind) throw KindMismatch();
    LieVec out(a.kind);
    for (int i = 0; i < kLieDim; ++i) out.c[i] = eph::sub(a.c[i], b.c[i]);
    return out;
}

LieVec scale(const Hyper& s, const LieVec& a) {
    if (s.kind != a.kind) throw KindMismatch();
    LieVec out(a.kind);
    for (int i = 0; i < kLieDim; ++i) out.c[i] = mul(s, a.c[i]);
    return out;
}

LieVec scale(double s, const LieVec& a) {
    LieVec out(a.kind);
    for (int i = 0; i < kLieDim; ++i) out.c[i] = eph::scale(s, a.c[i]);
    return out;
}

bool approx_eq(const LieVec& a, const LieVec& b, double tol) {
    if (a.kind != b.kind) return false;
    for (int i = 0; i < kLieDim; ++i)
        if (!approx_eq(a.c[i], b.c[i], tol)) return false;
    return true;
}

LieVec bracket(const LieVec& a, const LieVec& b) {
    if (a.kind != b.kind) throw KindMismatch();
    const Table& t = structure_constants();
    LieVec out(a.kind);
    for (int i = 0; i < kLieDim; ++i) {
        if (a.c[i].u == 0.0 && a.c[i].v == 0.0) continue;
        for (int j = 0; j < kLieDim; ++j) {
            if (b.c[j].u == 0.0 && b.c[j].v == 0.0) continue;
            const Hyper prod = mul(a.c[i], b.c[j]);
            for (int k = 0; k < kLieDim; ++k) {
                const double s = t[i][j][k];
                if (s != 0.0) out.c[k] = eph::add(out.c[k], eph::scale(s, prod));
            }
        }
    }
    return out;
}

double jacobi_residual(const LieVec& a, const LieVec& b, const LieVec& c) {
    const LieVec lhs = bracket(a, bracket(b, c));
    const LieVec rhs = add(bracket(bracket(a, b), c), bracket(b, bracket(a, c)));
    const LieVec d = sub(lhs, rhs);
    double m = 0.0;
    for (const auto& h : d.c) m = std::max(m, std::max(std::abs(h.u), std::abs(h.v)));
    return m;
}

double killing_sl2(const LieVec& x, const LieVec& y) {
    if (x.kind != y.kind) throw KindMismatch();
    // trace of ad(x) ad(y) restricted to span{A,B,Z}; coefficients must be real
    const Table& t = structure_constants();
    const int gens[3] = {iA, iB, iZ};
    double tr = 0.0;
    for (int e : gens) {
        // ad(y) e
        std::array<double, kLieDim> ye{};
        for (int j = 0; j < kLieDim; ++j)
            for (int k = 0; k < kLieDim; ++k)
                if (t[j][e][k] != 0.0) ye[k] += y.c[j].u * t[j][e][k];
        // ad(x) (ad(y) e), component along e
        double comp = 0.0;
        for (int j = 0; j < kLieDim; ++j)
            for (int m = 0; m < kLieDim; ++m)
                if (ye[m] != 0.0 && t[j][m][e] != 0.0) comp += x.c[j].u * ye[m] * t[j][m][e];
        tr += comp;
    }
    return tr;
}

// ---------------------------------------------------------------------------

const char* ladder_generator_name(LadderGenerator g) {
    switch (g) {
        case LadderGenerator::Z: return "Z";
        case LadderGenerator::BminusHalfZ: return "B-Z/2";
        case LadderGenerator::TwoB: return "2B";
    }
    return "?";
}

LieVec ladder_generator_vec(LadderGenerator g, AlgebraKind kind) {
    LieVec v(kind);
    switch (g) {
        case LadderGenerator::Z:
            v[LieGen::Z] = Hyper::real(1.0, kind);
            break;
        case LadderGenerator::BminusHalfZ:
            v[LieGen::B] = Hyper::real(1.0, kind);
            v[LieGen::Z] = Hyper::real(-0.5, kind);
            break;
        case LadderGenerator::TwoB:
            v[LieGen::B] = Hyper::real(2.0, kind);
            break;
    }
    return v;
}

QuadraticRoots hyper_quadratic_roots(double c, AlgebraKind kind) {
    // (u + iota v)^2 = u^2 + sigma v^2 + 2 u v iota = c
    QuadraticRoots out;
    const int s = sigma_of(kind);
    if (c == 0.0) {
        out.roots.push_back(Hyper::real(0.0, kind));
        if (kind == AlgebraKind::Parabolic) {
            // every p t squares to zero; report the t = 1 family members
            out.parametric = true;
            out.roots.push_back(Hyper::unit(kind));
            out.roots.push_back(neg(Hyper::unit(kind)));
        }
        return out;
    }
    // v = 0 branch: u^2 = c
    if (c > 0.0) {
        const double r = std::sqrt(c);
        out.roots.push_back(Hyper::real(r, kind));
        out.roots.push_back(Hyper::real(-r, kind));
    }
    // u = 0 branch: sigma v^2 = c
    if (s != 0 && c * s > 0.0) {
        const double r = std::sqrt(c * s);
        out.roots.push_back(Hyper{0.0, r, kind});
        out.roots.push_back(Hyper{0.0, -r, kind});
    }
    return out;
}

namespace {

/// Back-substituted eigenvector for each generator/basis, normalized to the
/// published closed forms.
LieVec ladder_vector(LadderGenerator gen, LadderBasis basis, const Hyper& lambda) {
    const AlgebraKind k = lambda.kind;
    LieVec v(k);
    if (basis == LadderBasis::Sl2) {
        switch (gen) {
            case LadderGenerator::Z: // L = (lambda/2) A + B
                v[LieGen::A] = scale(0.5, lambda);
                v[LieGen::B] = Hyper::real(1.0, k);
                break;
            case LadderGenerator::TwoB: // L = lambda A + Z
                v[LieGen::A] = lambda;
                v[LieGen::Z] = Hyper::real(1.0, k);
                break;
            case LadderGenerator::BminusHalfZ: // L = lambda A - B + Z/2
                v[LieGen::A] = lambda;
                v[LieGen::B] = Hyper::real(-1.0, k);
                v[LieGen::Z] = Hyper::real(0.5, k);
                break;
        }
        return v;
    }
    switch (gen) {
        case LadderGenerator::Z: // L = X + (1/lambda) Y, lambda invertible
            v[LieGen::X] = Hyper::real(1.0, k);
            v[LieGen::Y] = invert(lambda);
            break;
        case LadderGenerator::TwoB: // L = X - lambda Y
            v[LieGen::X] = Hyper::real(1.0, k);
            v[LieGen::Y] = neg(lambda);
            break;
        case LadderGenerator::BminusHalfZ: // L = -lambda X + Y
            v[LieGen::X] = neg(lambda);
            v[LieGen::Y] = Hyper::real(1.0, k);
            break;
    }
    return v;
}

double compatibility_rhs(LadderGenerator gen, LadderBasis basis) {
    if (basis == LadderBasis::Sl2) {
        switch (gen) {
            case LadderGenerator::Z: return -4.0;
            case LadderGenerator::TwoB: return 4.0;
            case LadderGenerator::BminusHalfZ: return 0.0;
        }
    }
    switch (gen) {
        case LadderGenerator::Z: return -1.0;
        case LadderGenerator::TwoB: return 1.0;
        case LadderGenerator::BminusHalfZ: return 0.0;
    }
    return 0.0;
}

} // namespace

std::vector<LadderSolution> solve_ladder(LadderGenerator generator, AlgebraKind scalars,
                                         LadderBasis basis) {
    const double c = compatibility_rhs(generator, basis);
    const QuadraticRoots roots = hyper_quadratic_roots(c, scalars);
    const LieVec gen = ladder_generator_vec(generator, scalars);

    std::vector<LadderSolution> out;
    for (const Hyper& lambda : roots.roots) {
        const bool zero_lambda = lambda.u == 0.0 && lambda.v == 0.0;
        if (zero_lambda && generator != LadderGenerator::BminusHalfZ)
            continue; // lambda = 0 solves lambda^2 = c only when c = 0
        LadderSolution sol;
        sol.lambda = lambda;
        sol.parametric = roots.parametric && !zero_lambda;
        sol.vector = ladder_vector(generator, basis, lambda);
        // exactness guard: [gen, L] = lambda L in structure-constant arithmetic
        const LieVec lhs = bracket(gen, sol.vector);
        const LieVec rhs = scale(lambda, sol.vector);
        if (!approx_eq(lhs, rhs, 0.0))
            throw Error("ladder back-substitution failed the bracket identity");
        out.push_back(sol);
    }
    return out;
}

Hyper ladder_shift_check(LadderGenerator, const LadderSolution& sol, const Hyper& eigen0) {
    return add(eigen0, sol.lambda);
}

LadderPropertiesReport ladder_properties_check(const LieVec& X) {
    const AlgebraKind kind = X.kind;
    // classify X among the generators of K, N', A'
    LadderGenerator gen;
    const double tol = 1e-12;
    if (approx_eq(X, ladder_generator_vec(LadderGenerator::Z, kind), tol)) {
        if (kind != AlgebraKind::Elliptic) throw NotAGeneratorCase("Z pairs with the elliptic unit");
        gen = LadderGenerator::Z;
    } else if (approx_eq(X, ladder_generator_vec(LadderGenerator::BminusHalfZ, kind), tol)) {
        if (kind != AlgebraKind::Parabolic)
            throw NotAGeneratorCase("B-Z/2 pairs with the parabolic unit");
        gen = LadderGenerator::BminusHalfZ;
    } else {
        LieVec b(kind);
        b[LieGen::B] = Hyper::real(1.0, kind);
        if (!approx_eq(X, b, tol)) throw NotAGeneratorCase();
        if (kind != AlgebraKind::Hyperbolic)
            throw NotAGeneratorCase("B pairs with the hyperbolic unit");
        gen = LadderGenerator::TwoB; // X = B generates A'(tau) = exp(2 tau B)
    }

    LadderPropertiesReport rep;
    const LieVec A = LieVec::basis(LieGen::A, kind);
    const LieVec AX = bracket(A, X);

    // Y is [A,X] up to a real factor, normalized so L+- = +-iota A + Y are
    // exact eigenvectors of ad(X/scale).
    double yscale = 1.0;
    switch (gen) {
        case LadderGenerator::Z: yscale = -0.5; rep.generator_scale = 2.0; break;
        case LadderGenerator::TwoB: yscale = -1.0; rep.generator_scale = 1.0; break;
        case LadderGenerator::BminusHalfZ: yscale = -1.0; rep.generator_scale = 1.0; break;
    }
    rep.Y = scale(yscale, AX);

    // Y ~ [A,X]: exact by construction; record the residual of the rescale.
    {
        const LieVec diff = sub(scale(1.0 / yscale, rep.Y), AX);
        double m = 0.0;
        for (const auto& h : diff.c) m = std::max(m, std::max(std::abs(h.u), std::abs(h.v)));
        rep.y_from_ax_residual = m;
    }
    // X ~ [A,Y] up to a real factor
    {
        const LieVec AY = bracket(A, rep.Y);
        double best = 1e300;
        for (double s : {1.0, -1.0, 2.0, -2.0, 0.5, -0.5}) {
            const LieVec diff = sub(scale(s, AY), X);
            double m = 0.0;
            for (const auto& h : diff.c) m = std::max(m, std::max(std::abs(h.u), std::abs(h.v)));
            best = std::min(best, m);
        }
        rep.x_from_ay_residual = best;
    }
    rep.killing_value = killing_sl2(X, rep.Y);

    const Hyper iota = Hyper::unit(kind);
    const LieVec Xhat = scale(1.0 / rep.generator_scale, X);
    const LieVec Lp = add(scale(iota, A), rep.Y);
    const LieVec Lm = add(scale(neg(iota), A), rep.Y);

    double eig = 0.0;
    {
        const LieVec d1 = sub(bracket(Xhat, Lp), scale(iota, Lp));
        const LieVec d2 = sub(bracket(Xhat, Lm), scale(neg(iota), Lm));
        for (const auto& h : d1.c) eig = std::max(eig, std::max(std::abs(h.u), std::abs(h.v)));
        for (const auto& h : d2.c) eig = std::max(eig, std::max(std::abs(h.u), std::abs(h.v)));
    }
    rep.eigen_residual = eig;

    {
        const LieVec lhs = bracket(Lm, Lp);
        const LieVec rhs = scale(mul(Hyper::real(2.0, kind), iota), Xhat);
        const LieVec diff = sub(lhs, rhs);
        double m = 0.0;
        for (const auto& h : diff.c) m = std::max(m, std::max(std::abs(h.u), std::abs(h.v)));
        rep.pair_comm_residual = m;
    }

    rep.pass = rep.y_from_ax_residual == 0.0 && rep.x_from_ay_residual == 0.0 &&
               rep.killing_value == 0.0 && rep.eigen_residual == 0.0 &&
               rep.pair_comm_residual == 0.0;
    return rep;
}

} // namespace eph
