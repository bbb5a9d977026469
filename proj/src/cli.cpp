#include "lvhp/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "lvhp/compactification.hpp"
#include "lvhp/ec_analysis.hpp"
#include "lvhp/equilibria.hpp"
#include "lvhp/fibers.hpp"
#include "lvhp/integrator.hpp"
#include "lvhp/lv_model.hpp"
#include "lvhp/verification.hpp"

namespace lvhp::cli {

using nlohmann::json;

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

// Output sink: either the --out file or the caller's stream.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary | std::ios::trunc);
            if (!file_) throw std::invalid_argument("cannot open output file '" + path + "'");
        }
        stream_ = path.empty() ? &fallback : &file_;
    }
    std::ostream& get() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

void csv_row(std::ostream& os, std::initializer_list<double> values) {
    bool first = true;
    for (double v : values) {
        if (!first) os << ',';
        os << format_number(v);
        first = false;
    }
    os << '\n';
}

json envelope(const std::string& subcommand, json config, const std::vector<CheckResult>& results) {
    const bool pass = std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
    return json{{"subcommand", subcommand}, {"config", std::move(config)}, {"results", results}, {"pass", pass}};
}

int emit(Sink& sink, const json& report) {
    sink.get() << report.dump(2) << '\n';
    return report.at("pass").get<bool>() ? kExitOk : kExitCheckFailed;
}

json state_json(const State& p) { return json::array({p.x(), p.y(), p.z()}); }

struct Options {
    std::string out;

    // simulate
    std::vector<double> ic{1.0, 2.0, 3.0};
    double t_end = 0.2;
    bool adaptive = false;
    double tol = 1e-10;
    double dt = 1e-3;
    double blow_up_norm = 1e8;
    long max_steps = 10'000'000;

    // verify
    long samples = 100000;
    std::uint64_t seed = 42;

    // equilibria
    std::string family = "E1";
    double m = 1.0;

    // compactify
    std::string chart = "U1";
    std::vector<double> chart_ic{0.5, 0.5, 1.0};
    std::vector<double> from_state;
    double compact_t_end = 3.0;
    double compact_tol = 1e-12;
    double check_tol = 1e-6;
    bool infinity = false;
    int grid_n = 21;
    std::vector<double> range{-0.5, 1.5};

    // ec / fiber
    double h = 0.0;
    double c = 0.0;
    double snap_tol = 0.0;
    std::vector<double> ec_range{-5.0, 5.0};
    int ec_n = 101;
    double box = 6.0;
    int cells = 161;
    double thickness = 1.0;
    unsigned workers = 0;
};

int cmd_simulate(const Options& o, std::ostream& out, std::ostream& err) {
    IntegratorSettings s = o.adaptive ? IntegratorSettings::adaptive(o.tol) : IntegratorSettings::fixed(o.dt);
    s.blow_up_norm = o.blow_up_norm;
    s.max_steps = o.max_steps;
    const State p0(o.ic[0], o.ic[1], o.ic[2]);
    const Trajectory traj = integrate(lv_field, p0, o.t_end, s);
    Sink sink(o.out, out);
    auto& os = sink.get();
    os << "t,x,y,z,H,C,f,g\n";
    for (const auto& smp : traj.samples)
        csv_row(os, {smp.t, smp.state.x(), smp.state.y(), smp.state.z(), smp.inv.h, smp.inv.c, smp.inv.f, smp.inv.g});
    if (traj.termination != Termination::completed) {
        err << "termination: " << to_string(traj.termination);
        if (traj.blow_up_time) err << " at t=" << format_number(*traj.blow_up_time);
        err << '\n';
    }
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    VerifyConfig cfg;
    cfg.samples = o.samples;
    cfg.seed = o.seed;
    cfg.dt = o.dt;
    if (cfg.samples <= 0) throw std::invalid_argument("--samples must be positive");
    const auto results = run_verification(cfg);
    Sink sink(o.out, out);
    return emit(sink, envelope("verify", {{"samples", cfg.samples}, {"seed", cfg.seed}, {"dt", cfg.dt}}, results));
}

int cmd_equilibria(const Options& o, std::ostream& out) {
    const Family fam = parse_family(o.family);
    const StabilityReport r = stability_report(fam, o.m);
    const State e = equilibrium(fam, o.m);
    const double field_norm = norm_inf(lv_field(e));
    const double expected[3] = {-2.0 * std::abs(o.m), 0.0, 2.0 * std::abs(o.m)};
    double spectrum_err = 0.0;
    for (int k = 0; k < 3; ++k) spectrum_err = std::max(spectrum_err, std::abs(r.eigenvalues[k] - expected[k]));

    std::vector<CheckResult> results{
        check_at_most("equilibrium", "families of equilibria", field_norm, 0.0),
        check_at_most("spectrum", "p(lambda) = (2M - lambda) lambda (2M + lambda)", spectrum_err,
                      1e-9 * std::max(1.0, std::abs(o.m))),
    };
    json report = envelope("equilibria", {{"family", o.family}, {"M", o.m}}, results);
    report["report"] = {{"family", to_string(r.family)},
                        {"M", r.m},
                        {"point", state_json(e)},
                        {"eigenvalues", r.eigenvalues},
                        {"char_poly", {1.0, r.char_poly.a2, r.char_poly.a1, r.char_poly.a0}},
                        {"verdict", r.unstable ? "unstable" : "stable"},
                        {"hyperbolic", r.hyperbolic},
                        {"justification", to_string(r.justification)}};
    Sink sink(o.out, out);
    return emit(sink, report);
}

int cmd_compactify(const Options& o, std::ostream& out) {
    Sink sink(o.out, out);
    auto& os = sink.get();
    if (o.infinity) {
        os << "z1,z2,dz1,dz2\n";
        for (const auto& row : infinity_field_grid(o.range[0], o.range[1], o.grid_n))
            csv_row(os, {row.z1, row.z2, row.dz1, row.dz2});
        return kExitOk;
    }
    const Chart chart = parse_chart(o.chart);
    const ChartState cs0 = o.from_state.empty()
                               ? ChartState{o.chart_ic[0], o.chart_ic[1], o.chart_ic[2]}
                               : to_chart(chart, State(o.from_state[0], o.from_state[1], o.from_state[2]));
    const FlowConstants fc = fit_constants(cs0);
    const bool reversed = chart == Chart::V1 || chart == Chart::V2 || chart == Chart::V3;
    const VectorField field = [chart](const State& s) { return chart_field(chart, {s.x(), s.y(), s.z()}); };
    const Trajectory traj = integrate(field, State(cs0.vec()), o.compact_t_end,
                                      IntegratorSettings::adaptive(o.compact_tol));
    os << "t,z1,z2,z3,z1_exact,z2_exact,z3_exact,max_abs_err\n";
    double worst = 0.0;
    for (const auto& smp : traj.samples) {
        const ChartState ex = closed_form_flow(fc, reversed ? -smp.t : smp.t);
        const double e = norm_inf(smp.state.vec() - ex.vec());
        worst = std::max(worst, e);
        csv_row(os, {smp.t, smp.state.x(), smp.state.y(), smp.state.z(), ex.z1, ex.z2, ex.z3, e});
    }
    if (traj.termination != Termination::completed) return kExitCheckFailed;
    return worst <= o.check_tol ? kExitOk : kExitCheckFailed;
}

int cmd_ec_classify(const Options& o, std::ostream& out) {
    const ECValue raw{o.h, o.c};
    const ECValue v = snap(raw, o.snap_tol);
    const StratumLabel s = classify(v);
    json report = envelope("ec classify", {{"h", o.h}, {"c", o.c}, {"snap", o.snap_tol}}, {});
    report["stratum"] = to_string(s);
    report["leaf"] = to_string(leaf_type(v.c).kind);
    Sink sink(o.out, out);
    return emit(sink, report);
}

int cmd_ec_grid(const Options& o, std::ostream& out) {
    if (o.ec_n < 2 || !(o.ec_range[1] > o.ec_range[0]))
        throw std::invalid_argument("ec grid: need --n >= 2 and an increasing --range");
    Sink sink(o.out, out);
    auto& os = sink.get();
    os << "h,c,stratum\n";
    const double step = (o.ec_range[1] - o.ec_range[0]) / (o.ec_n - 1);
    for (int a = 0; a < o.ec_n; ++a)
        for (int b = 0; b < o.ec_n; ++b) {
            const ECValue v{o.ec_range[0] + a * step, o.ec_range[0] + b * step};
            os << format_number(v.h) << ',' << format_number(v.c) << ',' << to_string(classify(snap(v, o.snap_tol)))
               << '\n';
        }
    return kExitOk;
}

int cmd_fiber(const Options& o, std::ostream& out) {
    FiberGridOptions g{o.box, o.cells, o.thickness, o.workers};
    const ECValue v{o.h, o.c};
    const FiberReport r = fiber_report(v, g);
    json eqs = json::array();
    for (const auto& e : r.equilibria_on_fiber) eqs.push_back(state_json(e));
    std::vector<CheckResult> results{
        check_at_most("level_set_components", "fiber classification tables",
                      std::abs(r.level_set_components - r.expected.level_set_components), 0.0),
        check_at_most("equilibria_on_fiber", "fiber classification tables",
                      std::abs(static_cast<int>(r.equilibria_on_fiber.size()) - r.expected.equilibria), 0.0),
    };
    // workers does not change the result, so it is left out of the config
    json report = envelope("fiber",
                           {{"h", o.h}, {"c", o.c}, {"box", o.box}, {"grid", o.cells}, {"thickness", o.thickness}},
                           results);
    report["stratum"] = to_string(r.stratum);
    report["level_set_components"] = r.level_set_components;
    report["orbit_count"] = r.orbit_count;
    report["equilibria"] = eqs;
    report["expected"] = {{"level_set_components", r.expected.level_set_components},
                          {"orbit_count", r.expected.orbit_count},
                          {"equilibria", r.expected.equilibria}};
    report["agrees"] = r.agrees;
    Sink sink(o.out, out);
    return emit(sink, report);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hamilton-Poisson analysis of a 3D Lotka-Volterra system", "lvhp"};
    app.require_subcommand(1);
    Options o;
    std::function<int()> action;

    auto add_out = [&](CLI::App* sub) { sub->add_option("--out", o.out, "Output file (default: stdout)"); };

    auto* sim = app.add_subcommand("simulate", "Integrate the flow and write a trajectory CSV");
    sim->add_option("--ic", o.ic, "Initial condition x,y,z")->delimiter(',')->expected(3);
    sim->add_option("--t-end", o.t_end, "Final time")->check(CLI::PositiveNumber);
    sim->add_flag("--adaptive", o.adaptive, "Dormand-Prince 5(4) instead of fixed-step RK4");
    sim->add_option("--tol", o.tol, "Adaptive tolerance (relative and absolute)");
    sim->add_option("--dt", o.dt, "Fixed step")->check(CLI::PositiveNumber);
    sim->add_option("--blow-up-norm", o.blow_up_norm, "Max-norm at which integration stops");
    sim->add_option("--max-steps", o.max_steps, "Step limit");
    add_out(sim);
    sim->callback([&] { action = [&] { return cmd_simulate(o, out, err); }; });

    auto* ver = app.add_subcommand("verify", "Check all structural identities on random samples");
    ver->add_option("--samples", o.samples, "Random points per identity");
    ver->add_option("--seed", o.seed, "PRNG seed");
    ver->add_option("--dt", o.dt, "RK4 step of the drift check")->check(CLI::PositiveNumber);
    add_out(ver);
    ver->callback([&] { action = [&] { return cmd_verify(o, out); }; });

    auto* eq = app.add_subcommand("equilibria", "Stability report of an equilibrium");
    eq->add_option("--family", o.family, "E1, E2 or E3");
    eq->add_option("--m", o.m, "Family parameter M");
    add_out(eq);
    eq->callback([&] { action = [&] { return cmd_equilibria(o, out); }; });

    auto* cmp = app.add_subcommand("compactify", "Chart flow: numeric vs closed form, or the infinity grid");
    cmp->add_option("--chart", o.chart, "U1..U3, V1..V3");
    cmp->add_option("--ic", o.chart_ic, "Chart initial condition z1,z2,z3")->delimiter(',')->expected(3);
    cmp->add_option("--from-state", o.from_state, "Initial state x,y,z mapped into the chart")
        ->delimiter(',')
        ->expected(3);
    cmp->add_option("--t-end", o.compact_t_end, "Final (rescaled) time")->check(CLI::PositiveNumber);
    cmp->add_option("--tol", o.compact_tol, "Adaptive tolerance");
    cmp->add_option("--check-tol", o.check_tol, "Allowed numeric vs closed-form deviation");
    cmp->add_flag("--infinity", o.infinity, "Emit the vector field on the sphere at infinity");
    cmp->add_option("--grid", o.grid_n, "Grid points per axis for --infinity");
    cmp->add_option("--range", o.range, "Grid range lo,hi for --infinity")->delimiter(',')->expected(2);
    add_out(cmp);
    cmp->callback([&] { action = [&] { return cmd_compactify(o, out); }; });

    auto* ecc = app.add_subcommand("ec", "Energy-Casimir strata");
    ecc->require_subcommand(1);
    auto* cls = ecc->add_subcommand("classify", "Stratum of a value (h, c)");
    cls->set_help_flag("--help", "Print this help message and exit");
    cls->add_option("--h", o.h)->required();
    cls->add_option("--c", o.c)->required();
    cls->add_option("--snap", o.snap_tol, "Snap |h|, |c|, |c+h| below this to zero");
    add_out(cls);
    cls->callback([&] { action = [&] { return cmd_ec_classify(o, out); }; });
    auto* grid = ecc->add_subcommand("grid", "Stratum membership on a square grid (CSV)");
    grid->add_option("--range", o.ec_range, "lo,hi for both h and c")->delimiter(',')->expected(2);
    grid->add_option("--n", o.ec_n, "Points per axis");
    grid->add_option("--snap", o.snap_tol, "Snap tolerance");
    add_out(grid);
    grid->callback([&] { action = [&] { return cmd_ec_grid(o, out); }; });

    auto* fib = app.add_subcommand("fiber", "Topological report of the fiber over (h, c)");
    fib->set_help_flag("--help", "Print this help message and exit");
    fib->add_option("--h", o.h)->required();
    fib->add_option("--c", o.c)->required();
    fib->add_option("--box", o.box, "Half-width of the sampling box");
    fib->add_option("--grid", o.cells, "Cells per axis");
    fib->add_option("--thickness", o.thickness, "Marking threshold in cell diagonals");
    fib->add_option("--workers", o.workers, "Marking threads (0 = all cores)");
    add_out(fib);
    fib->callback([&] { action = [&] { return cmd_fiber(o, out); }; });

    std::vector<std::string> rev(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(rev.begin(), rev.end());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    }

    try {
        return action();
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
    }
    return kExitInvalidInput;
}

}  // namespace lvhp::cli
