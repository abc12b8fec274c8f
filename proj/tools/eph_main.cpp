#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "eph/covariant.hpp"
#include "eph/lie.hpp"
#include "eph/mechanics.hpp"
#include "eph/states.hpp"
#include "eph/verify.hpp"

using json = nlohmann::json;
using namespace eph;

namespace {

// 17 significant digits keep the CSV byte-stable across runs
std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open output file: " + path);
    return os;
}


struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void write(const std::string& path, const std::string& format) const {
        auto os = open_out(path);
        if (format == "json") {
            json arr = json::array();
            for (const auto& r : rows) {
                json obj;
                for (size_t i = 0; i < columns.size(); ++i) obj[columns[i]] = r[i];
                arr.push_back(obj);
            }
            os << arr.dump(2) << '\n';
            return;
        }
        for (size_t i = 0; i < columns.size(); ++i)
            os << columns[i] << (i + 1 < columns.size() ? ',' : '\n');
        for (const auto& r : rows)
            for (size_t i = 0; i < r.size(); ++i) os << r[i] << (i + 1 < r.size() ? ',' : '\n');
    }
};

AlgebraKind parse_kind(const std::string& s) {
    if (s == "elliptic") return AlgebraKind::Elliptic;
    if (s == "parabolic") return AlgebraKind::Parabolic;
    if (s == "hyperbolic") return AlgebraKind::Hyperbolic;
    throw CLI::ValidationError("--kind", "unknown kind: " + s);
}

SubgroupId parse_subgroup(const std::string& s) {
    if (s == "A") return SubgroupId::A;
    if (s == "N") return SubgroupId::N;
    if (s == "K") return SubgroupId::K;
    if (s == "Nprime") return SubgroupId::Nprime;
    if (s == "Aprime") return SubgroupId::Aprime;
    throw CLI::ValidationError("--subgroup", "unknown subgroup: " + s);
}

int cmd_orbits(const std::string& out, const std::string& format, const std::string& subgroup,
               const std::string& kind, double u0, double v0, double tmin, double tmax, int n) {
    const SubgroupId id = parse_subgroup(subgroup);
    const AlgebraKind k = parse_kind(kind);
    Table trace;
    trace.columns = {"t", "u", "v", "kind", "subgroup"};
    Table derived;
    derived.columns = {"t", "u", "v", "du", "dv", "kind", "subgroup"};
    if (n > 0 && tmax >= tmin) {
        std::vector<double> ts;
        for (int i = 0; i < n; ++i) ts.push_back(tmin + (tmax - tmin) * i / std::max(n - 1, 1));
        const Hyper w0{u0, v0, k};
        const auto orb = orbit(id, w0, ts);
        const double eps = 1e-6;
        for (size_t i = 0; i < ts.size(); ++i) {
            trace.rows.push_back({fmt(ts[i]), fmt(orb[i].u), fmt(orb[i].v), kind_name(k),
                                  subgroup_name(id)});
            try {
                const Hyper wp = moebius(subgroup_element(id, ts[i] + eps), w0);
                const Hyper wm = moebius(subgroup_element(id, ts[i] - eps), w0);
                derived.rows.push_back({fmt(ts[i]), fmt(orb[i].u), fmt(orb[i].v),
                                        fmt((wp.u - wm.u) / (2 * eps)),
                                        fmt((wp.v - wm.v) / (2 * eps)), kind_name(k),
                                        subgroup_name(id)});
            } catch (const NonInvertibleDenominator&) {
            }
        }
    }
    trace.write(out, format);
    derived.write(out + ".derived.csv", format);
    return 0;
}

int cmd_rotations(const std::string& out, const std::string& format, const std::string& kind,
                  double tmax, int n) {
    const AlgebraKind k = parse_kind(kind);
    Table table;
    table.columns = {"t", "u", "v", "kind", "r0"};
    for (double r0 : {0.5, 1.0, 1.5}) {
        for (int i = 0; i < n; ++i) {
            const double t = -tmax + 2.0 * tmax * i / std::max(n - 1, 1);
            const Hyper w = mul(exp_unit(t, k), Hyper::real(r0, k));
            table.rows.push_back({fmt(t), fmt(w.u), fmt(w.v), kind_name(k), fmt(r0)});
        }
    }
    table.write(out, format);
    return 0;
}

int cmd_dynamics(const std::string& out, const std::string& format, const std::string& ham,
                 const std::string& mode_s, double t, int steps, int grid, double domain,
                 double m, double k, double lambda, double hbar) {
    const PlanckParams pp(hbar);
    const Hamiltonian H = (ham == "harmonic") ? Hamiltonian::harmonic(m, k)
                                              : Hamiltonian::unharmonic(m, k, lambda);
    DynamicsMode mode = DynamicsMode::Quantum;
    if (mode_s == "classical") mode = DynamicsMode::Classical;
    else if (mode_s == "hyperbolic") mode = DynamicsMode::Hyperbolic;
    else if (mode_s != "quantum") throw CLI::ValidationError("--mode", "unknown mode: " + mode_s);

    auto f0fun = [](double q, double p) {
        return std::exp(-q * q / (2 * 1.05 * 1.05) - p * p / (2 * 0.8 * 0.8));
    };
    PhaseGrid f = make_phase_grid(pp, domain, grid, f0fun);
    const double n0 = l2_norm(f);
    const double dt = t / steps;
    Table table;
    table.columns = {"t", "L2_mass", "rel_err_vs_analytic"};
    const int report_every = std::max(steps / 32, 1);
    for (int s = 0; s <= steps; s += report_every) {
        if (s > 0) f = evolve(mode, H, f, dt, report_every);
        const double tt = s * dt;
        std::string err;
        if (H.kind == Hamiltonian::Kind::Harmonic) {
            const PhaseGrid ex = make_phase_grid(pp, domain, grid,
                                                 harmonic_analytic(H, f0fun, tt));
            err = fmt(l2_distance(f, ex) / n0);
        }
        table.rows.push_back({fmt(tt), fmt(l2_norm(f)), err});
    }
    table.write(out, format);
    return 0;
}

int cmd_interference(const std::string& out, const std::string& format,
                     const std::string& mode_s, const std::string& family, double a, double b,
                     double m, double k, double hbar, double cmin, double cmax, int n,
                     const CLI::App* sub) {
    ProbabilityMode mode = ProbabilityMode::Quantum;
    if (mode_s == "hyperbolic") mode = ProbabilityMode::Hyperbolic;
    else if (mode_s == "classical") mode = ProbabilityMode::Classical;
    else if (mode_s != "quantum") throw CLI::ValidationError("--mode", "unknown mode: " + mode_s);

    StatePair pair;
    if (family == "gaussian") pair.family = StatePair::Family::Gaussian;
    else if (family == "rational") pair.family = StatePair::Family::Rational;
    else if (family == "bump") pair.family = StatePair::Family::Bump;
    else throw CLI::ValidationError("--family", "unknown family: " + family);

    // the rational figures need the resolved fringe-band regime; keep those
    // defaults unless the user pinned the parameters
    if (pair.family == StatePair::Family::Rational && sub->count("--k") == 0 &&
        sub->count("--hbar") == 0 && sub->count("--b") == 0) {
        k = 0.056;
        hbar = 0.02;
        b = 0.005;
    }
    pair.a1 = pair.a2 = a;
    pair.b1 = b;
    pair.b2 = -b;
    pair.m = m;
    pair.k = k;
    if (pair.family == StatePair::Family::Bump) {
        pair.a1 = a - 1.0;
        pair.a2 = a + 1.0;
        pair.bump_width = 0.6;
    }
    const PlanckParams pp(hbar);
    std::vector<double> cs;
    for (int i = 0; i < n; ++i) cs.push_back(cmin + (cmax - cmin) * i / std::max(n - 1, 1));
    const auto rows = interference_curve(pair, cs, mode, pp);
    Table table;
    table.columns = {"c", "sum", "interference", "mode", "state_family"};
    for (const auto& r : rows)
        table.rows.push_back({fmt(r.c), fmt(r.sum), fmt(r.interference),
                              probability_mode_name(mode), family});
    table.write(out, format);
    return 0;
}

int cmd_wavelet(const std::string& out, const std::string& which, double hbar, int grid) {
    json report;
    auto os = open_out(out);
    os << "x,y,re,im\n";
    if (which == "h1") {
        const PlanckParams pp(hbar);
        const double c = 2.0 * M_PI;
        const MotherWavelet f = MotherWavelet::gaussian(c);
        ConfState v = [](double q) { return Cx{std::exp(-3.0 * q * q) * (1.0 + 0.4 * q), 0.0}; };
        GridWindow w;
        w.xmin = w.ymin = -2.0;
        w.xmax = w.ymax = 2.0;
        w.nx = w.ny = grid;
        const TransformGrid tg = covariant_transform_h1(pp, v, f, w);
        for (int j = 0; j < tg.ny; ++j)
            for (int i = 0; i < tg.nx; ++i)
                os << fmt(tg.x_at(i)) << ',' << fmt(tg.y_at(j)) << ',' << fmt(tg.at(i, j).real())
                   << ',' << fmt(tg.at(i, j).imag()) << '\n';
        report["transform"] = "h1";
        report["fsb_annihilator_residual"] = fsb_annihilator_residual(tg, pp, c);
        report["threshold"] = 1e-4;
    } else if (which == "sl2") {
        const MotherWavelet fp = MotherWavelet::cauchy(true);
        ConfState v = [](double t) { return 1.0 / Cx{t, 1.0}; };
        GridWindow w;
        w.xmin = -2.0;
        w.xmax = 2.0;
        w.ymin = 0.4;
        w.ymax = 3.0;
        w.nx = w.ny = grid;
        const TransformGrid tg = covariant_transform_sl2(v, fp, w);
        for (int j = 0; j < tg.ny; ++j)
            for (int i = 0; i < tg.nx; ++i)
                os << fmt(tg.x_at(i)) << ',' << fmt(tg.y_at(j)) << ',' << fmt(tg.at(i, j).real())
                   << ',' << fmt(tg.at(i, j).imag()) << '\n';
        report["transform"] = "sl2";
        report["hardy_cr_residual"] = hardy_holomorphy_residual(tg);
        report["threshold"] = 1e-4;
    } else {
        throw CLI::ValidationError("--transform", "unknown transform: " + which);
    }
    auto rs = open_out(out + ".report.json");
    rs << report.dump(2) << '\n';
    return 0;
}

json ladder_solution_dump() {
    json arr = json::array();
    const char* kinds[] = {"elliptic", "parabolic", "hyperbolic"};
    const AlgebraKind ks[] = {AlgebraKind::Elliptic, AlgebraKind::Parabolic,
                              AlgebraKind::Hyperbolic};
    for (LadderGenerator g : {LadderGenerator::Z, LadderGenerator::BminusHalfZ,
                              LadderGenerator::TwoB})
        for (int i = 0; i < 3; ++i)
            for (LadderBasis basis : {LadderBasis::Sl2, LadderBasis::Heisenberg})
                for (const auto& s : solve_ladder(g, ks[i], basis)) {
                    json coeffs;
                    for (int gi = 0; gi < kLieDim; ++gi) {
                        const Hyper& h = s.vector.c[gi];
                        if (h.u != 0.0 || h.v != 0.0)
                            coeffs[lie_gen_name(static_cast<LieGen>(gi))] = {h.u, h.v};
                    }
                    arr.push_back({{"generator", ladder_generator_name(g)},
                                   {"scalars", kinds[i]},
                                   {"basis", basis == LadderBasis::Sl2 ? "sl2" : "heisenberg"},
                                   {"lambda", {s.lambda.u, s.lambda.v}},
                                   {"coefficients", coeffs},
                                   {"parametric", s.parametric}});
                }
    return arr;
}

json reps_relation_dump() {
    const PlanckParams pp(1.0 / (2.0 * M_PI));
    json arr = json::array();
    for (RepVariant v : {RepVariant::Schrodinger, RepVariant::FSB, RepVariant::Dual,
                         RepVariant::Double})
        for (const auto& c : commutator_table_check(v, pp))
            arr.push_back({{"variant", variant_name(v)},
                           {"relation", c.relation},
                           {"max_residual", c.residual},
                           {"test_set_size", 12}});
    return arr;
}

int cmd_verify(const std::string& out, const std::string& only, unsigned seed, bool inject) {
    VerifyOptions opts;
    opts.only = only;
    opts.seed = seed;
    opts.inject_sign_error = inject;
    const auto checks = run_verification(opts);
    json report;
    report["checks"] = json::array();
    bool all = true;
    for (const auto& c : checks) {
        report["checks"].push_back(
            {{"name", c.name}, {"residual", c.residual}, {"threshold", c.threshold},
             {"pass", c.pass}});
        all = all && c.pass;
    }
    if (only.empty() || std::string("ladder").find(only) != std::string::npos)
        report["ladder_solutions"] = ladder_solution_dump();
    if (only.empty() || std::string("reps").find(only) != std::string::npos)
        report["reps_relations"] = reps_relation_dump();
    report["pass"] = all;
    report["seed"] = seed;
    if (out.empty()) {
        std::cout << report.dump(2) << std::endl;
    } else {
        auto os = open_out(out);
        os << report.dump(2) << '\n';
    }
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hypercomplex mechanics toolkit: Moebius geometry, Heisenberg-group "
                 "representations, bracket dynamics, interference and wavelet transforms"};
    app.require_subcommand(1);
    app.set_config("--config");

    std::string out = "out.csv", format = "csv";
    double hbar = 1.0, m = 1.0, k = 1.0;
    unsigned seed = 20240917;

    // orbits
    auto* orb = app.add_subcommand("orbits", "Moebius orbit traces of a one-parameter subgroup");
    std::string subgroup = "K", kind = "elliptic";
    double u0 = 0.0, v0 = 0.5, tmin = -1.4, tmax = 1.4;
    int norb = 81;
    orb->add_option("--subgroup", subgroup, "A|N|K|Nprime|Aprime");
    orb->add_option("--kind", kind, "elliptic|parabolic|hyperbolic");
    orb->add_option("--u0", u0);
    orb->add_option("--v0", v0);
    orb->add_option("--tmin", tmin);
    orb->add_option("--tmax", tmax);
    orb->add_option("--n", norb);
    orb->add_option("--out", out);
    orb->add_option("--format", format, "csv|json");

    // rotations
    auto* rot = app.add_subcommand("rotations", "Wheel rotations e^{unit t} per algebra");
    std::string rkind = "elliptic";
    double rtmax = 1.0;
    int nrot = 161;
    rot->add_option("--kind", rkind);
    rot->add_option("--tmax", rtmax);
    rot->add_option("--n", nrot);
    rot->add_option("--out", out);
    rot->add_option("--format", format, "csv|json");

    // dynamics
    auto* dyn = app.add_subcommand("dynamics", "Oscillator dynamics time series");
    std::string ham = "harmonic", dmode = "quantum";
    double duration = 6.2832, lambda = 0.4, domain = 6.0;
    int steps = 2000, grid = 128;
    dyn->add_option("--H", ham, "harmonic|unharmonic");
    dyn->add_option("--mode", dmode, "quantum|classical|hyperbolic");
    dyn->add_option("--t", duration);
    dyn->add_option("--steps", steps);
    dyn->add_option("--grid", grid);
    dyn->add_option("--domain", domain);
    dyn->add_option("--m", m);
    dyn->add_option("--k", k);
    dyn->add_option("--lambda", lambda);
    dyn->add_option("--hbar", hbar);
    dyn->add_option("--out", out);
    dyn->add_option("--format", format, "csv|json");

    // interference
    auto* inter = app.add_subcommand("interference", "Position-measurement interference curves");
    std::string imode = "quantum", family = "gaussian";
    double a = 0.0, b = 1.0, cmin = -2.0, cmax = 2.0;
    int nc = 161;
    inter->add_option("--mode", imode, "quantum|hyperbolic|classical");
    inter->add_option("--family", family, "gaussian|rational|bump");
    inter->add_option("--a", a);
    inter->add_option("--b", b);
    inter->add_option("--m", m);
    inter->add_option("--k", k);
    inter->add_option("--hbar", hbar);
    inter->add_option("--cmin", cmin);
    inter->add_option("--cmax", cmax);
    inter->add_option("--n", nc);
    inter->add_option("--out", out);
    inter->add_option("--format", format, "csv|json");

    // wavelet
    auto* wav = app.add_subcommand("wavelet", "Covariant transform grids and residual report");
    std::string transform = "h1";
    int wgrid = 48;
    wav->add_option("--transform", transform, "h1|sl2");
    wav->add_option("--grid", wgrid);
    wav->add_option("--hbar", hbar);
    wav->add_option("--out", out);

    // verify
    auto* ver = app.add_subcommand("verify", "Run the verification suites, report JSON");
    std::string only, vout;
    bool inject = false;
    ver->add_option("--only", only, "substring filter on check names");
    ver->add_option("--seed", seed, "seed for randomized property checks");
    ver->add_option("--out", vout, "write the JSON report here instead of stdout");
    ver->add_flag("--inject-sign-error", inject)->group(""); // hidden test hook

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (orb->parsed()) return cmd_orbits(out, format, subgroup, kind, u0, v0, tmin, tmax, norb);
        if (rot->parsed()) return cmd_rotations(out, format, rkind, rtmax, nrot);
        if (dyn->parsed())
            return cmd_dynamics(out, format, ham, dmode, duration, steps, grid, domain, m, k, lambda, hbar);
        if (inter->parsed())
            return cmd_interference(out, format, imode, family, a, b, m, k, hbar, cmin, cmax, nc, inter);
        if (wav->parsed()) return cmd_wavelet(out, transform, hbar, wgrid);
        if (ver->parsed()) return cmd_verify(vout, only, seed, inject);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << std::endl;
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    }
    return 2;
}
