#include "dglab/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <limits>
#include <sstream>

#include "json.hpp"

#include "dglab/degiorgi.hpp"
#include "dglab/geometry.hpp"
#include "dglab/holder.hpp"
#include "dglab/io.hpp"

namespace dglab {

namespace {

using njson = nlohmann::ordered_json;
constexpr double kInf = std::numeric_limits<double>::infinity();

const njson& require(const njson& o, const char* key) {
    auto it = o.find(key);
    if (it == o.end()) throw ConfigError(std::string("missing config key: ") + key);
    return *it;
}

double num_or(const njson& o, const char* key, double def) {
    auto it = o.find(key);
    return it == o.end() ? def : it->get<double>();
}

FuncSpec parse_func(const njson& j) {
    FuncSpec f;
    if (j.is_number()) {
        f.kind = "constant";
        f.value = j.get<double>();
        return f;
    }
    f.kind = require(j, "kind").get<std::string>();
    if (f.kind == "constant") {
        f.value = require(j, "value").get<double>();
    } else if (f.kind == "step") {
        f.before = require(j, "before").get<double>();
        f.after = require(j, "after").get<double>();
        f.t_jump = require(j, "t_jump").get<double>();
    } else if (f.kind == "bump") {
        f.value = num_or(j, "value", 1.0);
        f.center = require(j, "center").get<double>();
        f.radius = require(j, "radius").get<double>();
        f.width = require(j, "width").get<double>();
    } else if (f.kind == "linear") {
        f.v_lo = require(j, "v_lo").get<double>();
        f.v_hi = require(j, "v_hi").get<double>();
    } else if (f.kind == "sin_pi" || f.kind == "gaussian" || f.kind == "one_plus_cos_pi") {
        f.value = num_or(j, "value", 1.0);
    } else {
        throw ConfigError("unknown boundary function kind: " + f.kind);
    }
    return f;
}

std::function<double(double)> make_func(const Grid& g, const FuncSpec& f) {
    double x_lo = g.x_lo, len = g.x_hi - g.x_lo;
    if (f.kind == "constant") {
        double v = f.value;
        return [v](double) { return v; };
    }
    if (f.kind == "step") {
        double b = f.before, a = f.after, tj = f.t_jump;
        return [b, a, tj](double t) { return t < tj - 1e-12 ? b : a; };
    }
    if (f.kind == "bump") {
        double v = f.value, c = f.center, r = f.radius, w = f.width;
        return [v, c, r, w](double x) {
            double d = std::abs(x - c);
            if (d <= r) return v;
            if (d >= r + w) return 0.0;
            return v * (1.0 - (d - r) / w);
        };
    }
    if (f.kind == "linear") {
        double lo = f.v_lo, hi = f.v_hi;
        return [lo, hi, x_lo, len](double x) { return lo + (hi - lo) * (x - x_lo) / len; };
    }
    if (f.kind == "sin_pi") {
        double v = f.value;
        return [v, x_lo, len](double x) {
            return v * std::sin(M_PI * (x - x_lo) / len);
        };
    }
    if (f.kind == "gaussian") {
        double v = f.value;
        return [v](double x) { return v * std::exp(-x * x / 4.0); };
    }
    if (f.kind == "one_plus_cos_pi") {
        double v = f.value;
        return [v](double x) { return v * (1.0 + std::cos(M_PI * x)); };
    }
    throw ConfigError("unknown boundary function kind: " + f.kind);
}

Regime parse_regime(const std::string& s) {
    if (s == "homogeneous") return Regime::homogeneous;
    if (s == "elliptic_parabolic") return Regime::elliptic_parabolic;
    if (s == "forward_backward") return Regime::forward_backward;
    throw ConfigError("unknown regime: " + s);
}

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::homogeneous: return "homogeneous";
        case Regime::elliptic_parabolic: return "elliptic_parabolic";
        case Regime::forward_backward: return "forward_backward";
    }
    return "?";
}

std::string join_path(const std::string& dir, const std::string& leaf) {
    return (std::filesystem::path(dir) / leaf).string();
}

void write_json(const std::string& path, const njson& j) {
    std::ofstream f(path);
    if (!f) throw ReportError("cannot write " + path);
    f << j.dump(2) << '\n';
}

// Shared state across stages within one CLI invocation.
struct RunContext {
    const Scenario& sc;
    WeightField weight;
    EquationCoefficients coeffs;
    BoundaryData bdata;
    std::vector<int> excluded;
    ScalarField u;
    std::vector<ScalarField> family;   // elliptic-parabolic sweep
    std::vector<double> eps_list;
    ConvergenceReport conv;
    ForwardBackwardInfo fbinfo;
    bool solved = false;
    bool have_conv = false;

    explicit RunContext(const Scenario& s)
        : sc(s), weight(build_weight(s)), coeffs(build_coefficients(s)),
          bdata(build_boundary(s)), excluded(discontinuity_slices(s)) {}
};

NodeSet build_target_set(const Grid& g, const RegionPartition& part,
                         const TargetSetConfig& cfg) {
    NodeSet s(g, NodeSet::Kind::spacetime);
    int ja = g.nearest_slice(std::max(0.0, cfg.t0 - cfg.r));
    int jb = g.nearest_slice(std::min(g.t_hi, cfg.t0 + cfg.r));
    for (int jt = ja; jt <= jb; ++jt) {
        for (int i = 0; i < g.nx; ++i) {
            if (std::abs(g.x(i) - cfg.x0) >= cfg.r - 1e-12) continue;
            if (cfg.region != 0 && part.label(i, jt) != (Region)cfg.region) continue;
            s.add(i, jt);
        }
    }
    return s;
}

void ensure_solution(RunContext& ctx) {
    if (ctx.solved) return;
    const Scenario& sc = ctx.sc;
    const Grid& g = sc.grid;
    if (sc.solution_kind == "gaussian_kernel") {
        ctx.u = ScalarField(g);
        for (int j = 0; j < g.nt; ++j)
            for (int i = 0; i < g.nx; ++i) {
                double x = g.x(i), s = g.t(j) + 1.0;
                ctx.u.at(i, j) = std::exp(-x * x / (4.0 * s)) / std::sqrt(s);
            }
    } else if (sc.regime == Regime::homogeneous) {
        ctx.u = solve_parabolic(g, ctx.coeffs, ctx.weight.rho, ctx.bdata,
                                sc.conservative);
    } else if (sc.regime == Regime::elliptic_parabolic) {
        ctx.eps_list.clear();
        for (int k = 0; k <= sc.eps_kmax; ++k) ctx.eps_list.push_back(std::pow(2.0, -k));
        std::vector<double> rho0(g.n_nodes(), sc.rho0);
        ctx.family = solve_elliptic_parabolic(g, ctx.coeffs, ctx.weight, rho0,
                                              ctx.bdata, ctx.eps_list);
        std::vector<NodeSet> targets;
        for (const auto& tcfg : sc.target_sets)
            targets.push_back(build_target_set(g, ctx.weight.part, tcfg));
        ctx.conv = convergence_report(g, ctx.family, ctx.eps_list, targets);
        ctx.have_conv = true;
        ctx.u = ctx.conv.limit;
    } else {
        ctx.u = solve_forward_backward(g, ctx.coeffs, ctx.weight, sc.eps_strip,
                                       ctx.bdata, &ctx.fbinfo);
    }
    ctx.solved = true;
}

void stage_solve(RunContext& ctx, const std::string& outdir) {
    ensure_solution(ctx);
    const Scenario& sc = ctx.sc;
    write_field_bin(join_path(outdir, "solution.bin"), ctx.u);
    write_field_csv(join_path(outdir, "solution.csv"), sc.grid, ctx.u);
    njson j;
    j["scenario"] = sc.name;
    j["regime"] = regime_name(sc.regime);
    j["solution_kind"] = sc.solution_kind;
    j["grid"] = {{"x_lo", sc.grid.x_lo}, {"x_hi", sc.grid.x_hi},
                 {"t_hi", sc.grid.t_hi}, {"nx", sc.grid.nx}, {"nt", sc.grid.nt}};
    j["conservative"] = sc.conservative;
    if (sc.regime == Regime::elliptic_parabolic) {
        j["eps_list"] = ctx.eps_list;
        j["family_size"] = ctx.family.size();
    }
    if (sc.regime == Regime::forward_backward) {
        j["eps_strip"] = sc.eps_strip;
        j["elliptic_rows"] = ctx.fbinfo.elliptic_rows;
        j["strip_nodes"] = ctx.fbinfo.strip_nodes;
        j["boundary_strip_flag"] = ctx.fbinfo.boundary_strip_flag;
    }
    double umin = kInf, umax = -kInf;
    for (double v : ctx.u.v) {
        umin = std::min(umin, v);
        umax = std::max(umax, v);
    }
    j["u_min"] = umin;
    j["u_max"] = umax;
    write_json(join_path(outdir, "solve.json"), j);
}

void stage_weights(RunContext& ctx, const std::string& outdir) {
    const Scenario& sc = ctx.sc;
    WeightClassReport rep = check_hypotheses(ctx.weight, sc.kappa, sc.delta, sc.R_bar,
                                             sc.weight_probes, ctx.excluded);
    auto cons = verify_consequences(ctx.weight, rep, sc.weight_probes);

    njson j;
    j["scenario"] = sc.name;
    j["c_rho"] = rep.c_rho;
    j["K1"] = rep.K1;
    j["q"] = rep.q;
    j["K2"] = rep.K2;
    j["varsigma"] = rep.varsigma;
    j["b"] = rep.b;
    j["kappa"] = rep.kappa;
    j["kappa_max"] = rep.kappa_max;
    j["delta"] = rep.delta;
    j["delta_max"] = rep.delta_max;
    j["R_bar"] = rep.R_bar;
    j["L_continuity"] = rep.L_continuity;
    j["L_supinf"] = rep.L_supinf;
    j["h1_pass"] = rep.h1_pass;
    j["h2_pass"] = rep.h2_pass;
    j["h3_pass"] = rep.h3_pass;
    j["h4_pass"] = rep.h4_pass;
    j["ainfty_in_class"] = rep.ainfty_in_class;
    njson jc = njson::array();
    for (const auto& c : cons)
        jc.push_back({{"name", c.name}, {"worst_margin", c.worst_margin},
                      {"pass", c.pass}});
    j["consequences"] = jc;

    // Waiting-time identities per probe where the doubled window fits.
    njson ji = njson::array();
    for (const auto& pr : sc.weight_probes) {
        njson e;
        e["x0"] = pr.x0;
        e["t0"] = pr.t0;
        e["r"] = pr.r;
        try {
            WaitingTimeIdentityReport idr =
                waiting_time_identities(ctx.weight, pr.x0, pr.t0, pr.r, 2.0 * pr.r,
                                        sc.kappa);
            e["residual_back"] = {idr.residual_back[1], idr.residual_back[2]};
            e["residual_forward"] = {idr.residual_forward[1], idr.residual_forward[2]};
            e["scaling_holds"] = idr.scaling_holds;
            e["admissible"] = true;
        } catch (const ProbeError& ex) {
            e["admissible"] = false;
            e["reason"] = ex.what();
        }
        ji.push_back(e);
    }
    j["waiting_time_identities"] = ji;
    write_json(join_path(outdir, "weights.json"), j);

    std::vector<std::vector<double>> rows;
    for (const auto& m : rep.margins)
        rows.push_back({m.probe.x0, m.probe.t0, m.probe.r, (double)m.j, m.h2_rho_ratio,
                        m.h2_chi_ratio, m.h3_rho_osc, m.h3_chi_osc, m.rho_ball_t0,
                        m.leb_ball});
    write_csv(join_path(outdir, "weights.csv"),
              {"x0", "t0", "r", "j", "h2_rho_ratio", "h2_chi_ratio", "h3_rho_osc",
               "h3_chi_osc", "rho_ball_t0", "leb_ball"},
              rows);
}

void stage_degiorgi(RunContext& ctx, const std::string& outdir) {
    ensure_solution(ctx);
    const Scenario& sc = ctx.sc;
    const Grid& g = sc.grid;
    WeightField wabs = ctx.weight;
    for (double& v : wabs.rho) v = std::abs(v);

    struct BoxPair {
        IndexBox inner, outer;
    };
    IndexBox outer{g.nx / 8, g.nx - 1 - g.nx / 8, g.nt / 8, g.nt - 1};
    std::vector<BoxPair> pairs = {
        {{g.nx / 4, g.nx - 1 - g.nx / 4, g.nt / 4, g.nt - 1}, outer},
        {{g.nx / 3, g.nx - 1 - g.nx / 3, g.nt / 3, g.nt - 1}, outer},
        {{3 * g.nx / 8, g.nx - 1 - 3 * g.nx / 8, 3 * g.nt / 8, g.nt - 1}, outer},
    };

    std::vector<std::vector<double>> rows;
    njson je = njson::array();
    for (std::size_t ci = 0; ci < pairs.size(); ++ci) {
        Cutoff zeta = make_cutoff(g, pairs[ci].inner, pairs[ci].outer);
        for (double k : sc.degiorgi_levels) {
            EnergyReport er = energy_sides(g, ctx.u, wabs, zeta, k,
                                           pairs[ci].outer.j_lo, g.nt - 1,
                                           TruncationSign::plus);
            rows.push_back({(double)ci, k, er.lhs_energy, er.lhs_energy_max,
                            er.lhs_gradient, er.rhs_t1, er.term_dzeta, er.term_zeta_t,
                            er.term_zeta, er.term_level, er.gamma_required,
                            er.gamma_required_max});
            je.push_back({{"cutoff", ci},
                          {"k", k},
                          {"lhs_energy", er.lhs_energy},
                          {"lhs_gradient", er.lhs_gradient},
                          {"rhs_t1", er.rhs_t1},
                          {"gamma_required", er.gamma_required},
                          {"gamma_required_max", er.gamma_required_max}});
        }
    }
    write_csv(join_path(outdir, "energy.csv"),
              {"cutoff", "k", "lhs_energy", "lhs_energy_max", "lhs_gradient", "rhs_t1",
               "term_dzeta", "term_zeta_t", "term_zeta", "term_level",
               "gamma_required", "gamma_required_max"},
              rows);
    njson j;
    j["scenario"] = sc.name;
    j["levels"] = sc.degiorgi_levels;
    j["entries"] = je;
    write_json(join_path(outdir, "energy.json"), j);
}

double case_code(const std::string& tag) {
    if (tag == "i") return 1.0;
    if (tag == "ii") return 2.0;
    if (tag == "iii") return 3.0;
    return 0.0;
}

void stage_harnack(RunContext& ctx, const std::string& outdir, int parallel) {
    ensure_solution(ctx);
    const Scenario& sc = ctx.sc;

    std::vector<RegimeReport> reports;
    if (parallel > 1 && sc.harnack_probes.size() > 1) {
        int nchunk = std::min<int>(parallel, (int)sc.harnack_probes.size());
        std::vector<std::future<std::vector<RegimeReport>>> futs;
        for (int c = 0; c < nchunk; ++c) {
            std::size_t lo = sc.harnack_probes.size() * c / nchunk;
            std::size_t hi = sc.harnack_probes.size() * (c + 1) / nchunk;
            std::vector<HarnackProbe> chunk(sc.harnack_probes.begin() + lo,
                                            sc.harnack_probes.begin() + hi);
            futs.push_back(std::async(std::launch::async, [&ctx, &sc, chunk]() {
                return regime_harnack(ctx.u, ctx.weight, chunk, sc.regime, sc.R_bar,
                                      ctx.excluded);
            }));
        }
        for (auto& f : futs) {
            auto part = f.get();
            reports.insert(reports.end(), part.begin(), part.end());
        }
    } else {
        reports = regime_harnack(ctx.u, ctx.weight, sc.harnack_probes, sc.regime,
                                 sc.R_bar, ctx.excluded);
    }

    std::vector<std::vector<double>> rows;
    njson jr = njson::array();
    for (std::size_t k = 0; k < reports.size(); ++k) {
        const auto& r = reports[k];
        rows.push_back({(double)k, r.probe.x0, r.probe.t0, r.probe.r, (double)r.probe.j,
                        case_code(r.case_tag), r.excluded ? 1.0 : 0.0,
                        r.interface_hit ? 1.0 : 0.0, r.center, r.sup_lhs, r.inf_rhs,
                        r.ratio_sup, r.ratio_inf, r.slice_rounding_error});
        jr.push_back({{"index", k},
                      {"x0", r.probe.x0},
                      {"t0", r.probe.t0},
                      {"r", r.probe.r},
                      {"j", r.probe.j},
                      {"case", r.case_tag},
                      {"excluded", r.excluded},
                      {"interface_hit", r.interface_hit},
                      {"center", r.center},
                      {"sup_lhs", r.sup_lhs},
                      {"inf_rhs", r.inf_rhs},
                      {"ratio_sup", r.ratio_sup},
                      {"ratio_inf", r.ratio_inf},
                      {"x1", r.x1},
                      {"t1", r.t1},
                      {"rho_bar", r.rho_bar},
                      {"slice_rounding_error", r.slice_rounding_error}});
    }
    write_csv(join_path(outdir, "harnack.csv"),
              {"index", "x0", "t0", "r", "j", "case", "excluded", "interface_hit",
               "center", "sup_lhs", "inf_rhs", "ratio_sup", "ratio_inf",
               "slice_rounding_error"},
              rows);

    njson j;
    j["scenario"] = sc.name;
    j["regime"] = regime_name(sc.regime);
    j["probes"] = jr;
    if (sc.expansion.enabled) {
        double h_level = sc.expansion.h_level;
        if (!(h_level > 0.0)) {
            // Auto level: the measured minimum of u over the base ball at t0.
            const Grid& g = sc.grid;
            int jt0 = g.nearest_slice(sc.expansion.t0);
            int i0 = g.nearest_x(sc.expansion.x0);
            Region lab = ctx.weight.part.label(i0, jt0);
            int jreg = lab == Region::region2 ? 2 : 1;
            NodeSet base = ball_region(g, ctx.weight.part, sc.expansion.x0,
                                       sc.expansion.r, jt0, jreg);
            double vmin = kInf;
            base.for_each([&](int i, int jj) { vmin = std::min(vmin, ctx.u.at(i, jj)); });
            h_level = vmin;
        }
        ExpansionReport er = expansion_check(ctx.u, ctx.weight, sc.expansion.x0,
                                             sc.expansion.t0, sc.expansion.r, h_level,
                                             sc.expansion.theta_grid);
        j["expansion"] = {{"lambda", er.lambda_measured},
                          {"theta", er.theta_measured},
                          {"theta_grid", er.theta_grid},
                          {"lambda_per_theta", er.lambda_per_theta},
                          {"sublevel_fraction_max", er.sublevel_fraction_max},
                          {"wall_flag", er.wall_flag}};
    }
    write_json(join_path(outdir, "harnack.json"), j);
}

void stage_holder(RunContext& ctx, const std::string& outdir) {
    ensure_solution(ctx);
    const Scenario& sc = ctx.sc;

    std::vector<std::vector<double>> rows;
    njson jp = njson::array();
    for (std::size_t k = 0; k < sc.holder_probes.size(); ++k) {
        const auto& pr = sc.holder_probes[k];
        OscillationTrace tr = holder_fit(ctx.u, ctx.weight, pr.x0, pr.t0, pr.radii);
        for (std::size_t m = 0; m < tr.radii.size(); ++m)
            rows.push_back({(double)k, tr.radii[m], tr.osc[m]});
        jp.push_back({{"index", k},
                      {"x0", pr.x0},
                      {"t0", pr.t0},
                      {"alpha", tr.alpha},
                      {"residual", tr.residual},
                      {"zero_oscillation", tr.zero_oscillation}});
    }
    write_csv(join_path(outdir, "holder.csv"), {"probe", "radius", "osc"}, rows);

    njson j;
    j["scenario"] = sc.name;
    j["probes"] = jp;
    if (sc.interface_check.enabled) {
        InterfaceExampleReport rep = interface_example_check(
            ctx.u, ctx.weight, sc.interface_check.x_disc, sc.interface_check.t_disc,
            sc.interface_check.probes, sc.interface_check.radii);
        njson jc = njson::array();
        for (const auto& p : rep.continuity_probes)
            jc.push_back({{"x0", p.x0}, {"t0", p.t0}, {"alpha", p.alpha},
                          {"zero_oscillation", p.zero_oscillation}, {"pass", p.pass}});
        j["interface_check"] = {{"jump", rep.jump},
                                {"box_osc", rep.box_osc},
                                {"discontinuity_confirmed", rep.discontinuity_confirmed},
                                {"continuity_probes", jc},
                                {"pass", rep.pass}};
    }
    write_json(join_path(outdir, "holder.json"), j);
}

void stage_sweep(RunContext& ctx, const std::string& outdir) {
    const Scenario& sc = ctx.sc;
    const Grid& g = sc.grid;
    njson j;
    j["scenario"] = sc.name;
    j["regime"] = regime_name(sc.regime);
    std::vector<std::vector<double>> rows;

    if (sc.regime == Regime::elliptic_parabolic) {
        ensure_solution(ctx);
        const ConvergenceReport& cr = ctx.conv;
        for (std::size_t k = 0; k + 1 < ctx.eps_list.size(); ++k)
            rows.push_back({ctx.eps_list[k + 1], cr.l2_diff[k], cr.h1_diff[k]});
        j["eps_list"] = cr.eps_list;
        j["l2_diff"] = cr.l2_diff;
        j["h1_diff"] = cr.h1_diff;
        j["diffs_decreasing"] = cr.diffs_decreasing;
        njson jt = njson::array();
        for (const auto& tc : cr.target_checks)
            jt.push_back({{"inf_limit", tc.inf_limit},
                          {"sup_limit", tc.sup_limit},
                          {"inf_seq", tc.inf_seq},
                          {"sup_seq", tc.sup_seq},
                          {"limsup_inf", tc.limsup_inf},
                          {"liminf_sup", tc.liminf_sup},
                          {"inf_check", tc.inf_check},
                          {"sup_check", tc.sup_check}});
        j["target_checks"] = jt;
    } else if (sc.regime == Regime::forward_backward) {
        std::vector<double> strips = {0.0, g.dx, 2.0 * g.dx, 3.0 * g.dx, 4.0 * g.dx};
        std::vector<ScalarField> fields;
        for (double s : strips)
            fields.push_back(solve_forward_backward(g, ctx.coeffs, ctx.weight, s,
                                                    ctx.bdata, nullptr));
        std::vector<double> diffs;
        for (std::size_t k = 0; k + 1 < fields.size(); ++k) {
            double d = l2_distance(g, fields[k], fields[k + 1]);
            diffs.push_back(d);
            rows.push_back({strips[k + 1], d, h1_distance(g, fields[k], fields[k + 1])});
        }
        j["strip_widths"] = strips;
        j["l2_diff"] = diffs;
    } else {
        j["note"] = "no regularization parameter in this regime";
    }
    write_csv(join_path(outdir, "sweep.csv"), {"eps", "l2_diff", "h1_diff"}, rows);
    write_json(join_path(outdir, "sweep.json"), j);
}

// Tiny CSV reader for the plot stage (numeric cells, first row is the header).
std::vector<std::vector<double>> read_csv_rows(const std::string& path, int& ncols) {
    std::ifstream f(path);
    if (!f) throw ReportError("missing report file " + path);
    std::string line;
    std::vector<std::vector<double>> rows;
    bool first = true;
    ncols = 0;
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (first) {
            ncols = (int)cells.size();
            first = false;
            continue;
        }
        std::vector<double> row;
        for (const auto& c : cells) {
            if (c == "inf")
                row.push_back(kInf);
            else if (c == "-inf")
                row.push_back(-kInf);
            else if (c == "nan")
                row.push_back(std::numeric_limits<double>::quiet_NaN());
            else
                row.push_back(std::stod(c));
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace

void emit_plots(const std::string& outdir) {
    int ncols = 0;

    // Oscillation decay, one series per probe, log-log axes.
    auto hrows = read_csv_rows(join_path(outdir, "holder.csv"), ncols);
    std::vector<PlotSeries> hseries;
    for (const auto& row : hrows) {
        std::size_t p = (std::size_t)row[0];
        if (hseries.size() <= p) hseries.resize(p + 1);
        hseries[p].x.push_back(row[1]);
        hseries[p].y.push_back(row[2]);
    }
    write_svg_plot(join_path(outdir, "osc_loglog.svg"), "oscillation decay", "radius",
                   "osc", hseries, true);

    // Harnack ratios against probe index.
    auto arows = read_csv_rows(join_path(outdir, "harnack.csv"), ncols);
    PlotSeries sup_s, inf_s;
    for (const auto& row : arows) {
        if (std::isfinite(row[11])) {
            sup_s.x.push_back(row[0]);
            sup_s.y.push_back(row[11]);
        }
        if (std::isfinite(row[12])) {
            inf_s.x.push_back(row[0]);
            inf_s.y.push_back(row[12]);
        }
    }
    write_svg_plot(join_path(outdir, "ratio_probe.svg"), "harnack ratios",
                   "probe index", "ratio", {sup_s, inf_s}, false);

    // Regularization sweep, log-log.
    auto srows = read_csv_rows(join_path(outdir, "sweep.csv"), ncols);
    PlotSeries sw;
    for (const auto& row : srows) {
        sw.x.push_back(row[0]);
        sw.y.push_back(row[1]);
    }
    write_svg_plot(join_path(outdir, "eps_convergence.svg"), "regularization sweep",
                   "eps", "l2 diff", {sw}, true);
}

Scenario load_scenario(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot open config " + path);
    njson j;
    try {
        j = njson::parse(f);
    } catch (const nlohmann::json::exception& ex) {
        throw ConfigError(std::string("config parse error: ") + ex.what());
    }

    Scenario sc;
    try {
        sc.name = require(j, "name").get<std::string>();
        const njson& jg = require(j, "grid");
        sc.grid = Grid::make(require(jg, "x_lo").get<double>(),
                             require(jg, "x_hi").get<double>(),
                             require(jg, "t_hi").get<double>(),
                             require(jg, "nx").get<int>(), require(jg, "nt").get<int>());
        const njson& ji = require(j, "interface");
        sc.iface_m = require(ji, "m").get<double>();
        sc.iface_q = require(ji, "q").get<double>();

        const njson& jw = require(j, "weight");
        sc.weight_kind = require(jw, "kind").get<std::string>();
        if (sc.weight_kind == "constant") {
            sc.weight_value = require(jw, "value").get<double>();
        } else if (sc.weight_kind == "abs_x") {
            sc.weight_value = num_or(jw, "scale", 1.0);
        } else if (sc.weight_kind == "piecewise_region") {
            sc.weight_region1 = require(jw, "region1").get<double>();
            sc.weight_region2 = require(jw, "region2").get<double>();
        } else {
            throw ConfigError("unknown weight kind: " + sc.weight_kind);
        }

        sc.regime = parse_regime(require(j, "regime").get<std::string>());
        if (j.contains("coefficients")) {
            const njson& jc = j["coefficients"];
            sc.coeff_a = num_or(jc, "a", 1.0);
            sc.coeff_b = num_or(jc, "b", 0.0);
            sc.coeff_c = num_or(jc, "c", 0.0);
            if (!(sc.coeff_a > 0.0)) throw ConfigError("coefficient a must be positive");
        }
        sc.conservative = j.value("conservative", false);
        sc.solution_kind = j.value("solution", njson::object()).is_object()
                               ? j.value("solution", njson::object())
                                     .value("kind", std::string("solve"))
                               : std::string("solve");
        if (sc.solution_kind != "solve" && sc.solution_kind != "gaussian_kernel")
            throw ConfigError("unknown solution kind: " + sc.solution_kind);

        if (j.contains("boundary")) {
            const njson& jb = j["boundary"];
            if (jb.contains("left")) sc.bc_left = parse_func(jb["left"]);
            if (jb.contains("right")) sc.bc_right = parse_func(jb["right"]);
            if (jb.contains("initial")) sc.bc_initial = parse_func(jb["initial"]);
            if (jb.contains("final")) {
                sc.bc_final = parse_func(jb["final"]);
                sc.has_final = true;
            }
        } else if (sc.solution_kind == "solve") {
            throw ConfigError("boundary data required when solving");
        }
        if (sc.regime == Regime::forward_backward && !sc.has_final &&
            sc.solution_kind == "solve")
            throw ConfigError("forward-backward regime requires final-time data");

        sc.eps_kmax = (int)num_or(j, "eps_kmax", 10);
        if (sc.eps_kmax < 2) throw ConfigError("eps_kmax must be >= 2");
        sc.eps_strip = num_or(j, "eps_strip", 0.0);
        sc.rho0 = num_or(j, "rho0", 1.0);
        sc.R_bar = num_or(j, "R_bar", 1.0);
        sc.kappa = num_or(j, "kappa", 0.2);
        sc.delta = num_or(j, "delta", 0.1);
        sc.q_exponent = num_or(j, "q_exponent", 4.0);
        if (!(sc.kappa > 0.0 && sc.kappa <= 0.5))
            throw ConfigError("kappa must lie in (0, 1/2]");
        if (!(sc.delta > 0.0)) throw ConfigError("delta must be positive");
        if (!(sc.R_bar > 0.0)) throw ConfigError("R_bar must be positive");
        if (!(sc.q_exponent > 2.0)) throw ConfigError("q_exponent must exceed 2");

        if (j.contains("discontinuity_times"))
            sc.discontinuity_times = j["discontinuity_times"].get<std::vector<double>>();

        if (j.contains("weight_probes"))
            for (const auto& p : j["weight_probes"])
                sc.weight_probes.push_back({require(p, "x0").get<double>(),
                                            require(p, "t0").get<double>(),
                                            require(p, "r").get<double>()});
        if (j.contains("harnack_probes"))
            for (const auto& p : j["harnack_probes"]) {
                HarnackProbe hp;
                hp.x0 = require(p, "x0").get<double>();
                hp.t0 = require(p, "t0").get<double>();
                hp.r = require(p, "r").get<double>();
                hp.j = (int)num_or(p, "j", 0);
                hp.regime = sc.regime;
                sc.harnack_probes.push_back(hp);
            }
        if (j.contains("holder_probes"))
            for (const auto& p : j["holder_probes"]) {
                HolderProbeConfig hc;
                hc.x0 = require(p, "x0").get<double>();
                hc.t0 = require(p, "t0").get<double>();
                hc.radii = require(p, "radii").get<std::vector<double>>();
                sc.holder_probes.push_back(hc);
            }
        if (j.contains("expansion")) {
            const njson& je = j["expansion"];
            sc.expansion.enabled = true;
            sc.expansion.x0 = require(je, "x0").get<double>();
            sc.expansion.t0 = require(je, "t0").get<double>();
            sc.expansion.r = require(je, "r").get<double>();
            sc.expansion.h_level = num_or(je, "h_level", 0.0);
            sc.expansion.theta_grid = require(je, "theta_grid").get<std::vector<double>>();
        }
        if (j.contains("target_sets"))
            for (const auto& p : j["target_sets"])
                sc.target_sets.push_back({require(p, "x0").get<double>(),
                                          require(p, "t0").get<double>(),
                                          require(p, "r").get<double>(),
                                          (int)num_or(p, "region", 0)});
        if (j.contains("interface_check")) {
            const njson& jc = j["interface_check"];
            sc.interface_check.enabled = true;
            sc.interface_check.x_disc = require(jc, "x_disc").get<double>();
            sc.interface_check.t_disc = require(jc, "t_disc").get<double>();
            for (const auto& p : require(jc, "probes"))
                sc.interface_check.probes.emplace_back(p.at(0).get<double>(),
                                                       p.at(1).get<double>());
            sc.interface_check.radii = require(jc, "radii").get<std::vector<double>>();
        }
        if (j.contains("degiorgi"))
            sc.degiorgi_levels = require(j["degiorgi"], "levels").get<std::vector<double>>();
    } catch (const nlohmann::json::exception& ex) {
        throw ConfigError(std::string("config type error: ") + ex.what());
    }

    // The partition must exist on this grid (throws NonPartitioned otherwise).
    RegionPartition::from_line(sc.grid, sc.iface_m, sc.iface_q);
    return sc;
}

WeightField build_weight(const Scenario& sc) {
    WeightField f;
    f.grid = sc.grid;
    f.part = RegionPartition::from_line(sc.grid, sc.iface_m, sc.iface_q);
    f.rho.resize(sc.grid.n_nodes(), 0.0);
    for (int j = 0; j < sc.grid.nt; ++j) {
        for (int i = 0; i < sc.grid.nx; ++i) {
            double v;
            if (sc.weight_kind == "constant") {
                v = sc.weight_value;
            } else if (sc.weight_kind == "abs_x") {
                v = sc.weight_value * std::abs(sc.grid.x(i));
            } else {
                // Interface nodes take the region-1 value (closure convention).
                v = f.part.label(i, j) == Region::region2 ? sc.weight_region2
                                                          : sc.weight_region1;
            }
            f.at(i, j) = v;
        }
    }
    return f;
}

EquationCoefficients build_coefficients(const Scenario& sc) {
    return EquationCoefficients::constants(sc.grid, sc.coeff_a, sc.coeff_b, sc.coeff_c);
}

BoundaryData build_boundary(const Scenario& sc) {
    BoundaryData b;
    b.left = make_func(sc.grid, sc.bc_left);
    b.right = make_func(sc.grid, sc.bc_right);
    b.initial = make_func(sc.grid, sc.bc_initial);
    b.final_ = sc.has_final ? make_func(sc.grid, sc.bc_final)
                            : make_func(sc.grid, sc.bc_initial);
    return b;
}

std::vector<int> discontinuity_slices(const Scenario& sc) {
    std::vector<int> out;
    for (double t : sc.discontinuity_times) {
        int j = sc.grid.nearest_slice(t);
        for (int d = -1; d <= 1; ++d)
            if (j + d >= 0 && j + d < sc.grid.nt) out.push_back(j + d);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void run_scenario(const Scenario& sc, const std::string& outdir,
                  const std::vector<std::string>& stages, int parallel) {
    std::filesystem::create_directories(outdir);
    std::vector<std::string> list;
    for (const auto& s : stages) {
        if (s == "all") {
            for (const char* t :
                 {"solve", "weights", "degiorgi", "harnack", "holder", "sweep-eps",
                  "plots"})
                list.push_back(t);
        } else {
            list.push_back(s);
        }
    }

    RunContext ctx(sc);
    // Admissibility of every probe is established before any solve.
    for (const auto& p : sc.harnack_probes) validate_probe(ctx.weight, p, sc.R_bar);

    for (const auto& s : list) {
        if (s == "solve")
            stage_solve(ctx, outdir);
        else if (s == "weights")
            stage_weights(ctx, outdir);
        else if (s == "degiorgi")
            stage_degiorgi(ctx, outdir);
        else if (s == "harnack")
            stage_harnack(ctx, outdir, parallel);
        else if (s == "holder")
            stage_holder(ctx, outdir);
        else if (s == "sweep-eps")
            stage_sweep(ctx, outdir);
        else if (s == "plots")
            emit_plots(outdir);
        else
            throw ConfigError("unknown stage: " + s);
    }
}

} // namespace dglab
