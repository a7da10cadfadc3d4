#include "dglab/harnack.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dglab {

namespace {

constexpr double kSnap = 1e-12;
constexpr double kInf = std::numeric_limits<double>::infinity();

int region_of(const WeightField& f, double x0, double t0, int fallback = 1) {
    int i0 = f.grid.nearest_x(x0);
    int j0 = f.grid.nearest_slice(t0);
    Region lab = f.part.label(i0, j0);
    if (lab == Region::region1) return 1;
    if (lab == Region::region2) return 2;
    return fallback;
}

struct Extreme {
    double value = 0.0;
    double rounding = 0.0;
    bool found = false;
};

// sup or inf of u over the region-restricted ball at the two slices bracketing
// target_time; the worse value (larger sup / smaller inf) is reported.
Extreme eval_extreme(const ScalarField& u, const WeightField& f, double x0, double r,
                     double target_time, int j, bool want_sup) {
    const Grid& g = f.grid;
    if (target_time < -kSnap || target_time > g.t_hi + kSnap)
        throw CylinderExceedsDomain("target slice outside [0,T]");
    double pos = target_time / g.dt;
    int jf = (int)std::floor(pos + kSnap);
    int jc = (int)std::ceil(pos - kSnap); // == jf when the target is on a slice
    jf = std::clamp(jf, 0, g.nt - 1);
    jc = std::clamp(jc, 0, g.nt - 1);
    Extreme e;
    e.value = want_sup ? -kInf : kInf;
    double best_round = kInf;
    for (int jt : {jf, jc}) {
        NodeSet s = ball_region(g, f.part, x0, r, jt, j);
        if (s.empty()) continue;
        double v = want_sup ? -kInf : kInf;
        s.for_each([&](int i, int jj) {
            v = want_sup ? std::max(v, u.at(i, jj)) : std::min(v, u.at(i, jj));
        });
        e.found = true;
        e.value = want_sup ? std::max(e.value, v) : std::min(e.value, v);
        best_round = std::min(best_round, std::abs(target_time - g.t(jt)));
        if (jf == jc) break;
    }
    e.rounding = e.found ? best_round : 0.0;
    return e;
}

double set_min(const ScalarField& u, const NodeSet& s) {
    double v = kInf;
    s.for_each([&](int i, int j) { v = std::min(v, u.at(i, j)); });
    return v;
}
double set_max(const ScalarField& u, const NodeSet& s) {
    double v = -kInf;
    s.for_each([&](int i, int j) { v = std::max(v, u.at(i, j)); });
    return v;
}

double safe_ratio(double num, double den) {
    if (den <= 0.0) return kInf;
    return num / den;
}

} // namespace

void validate_probe(const WeightField& f, const HarnackProbe& p, double R_bar) {
    const Grid& g = f.grid;
    if (!(p.r > 0.0)) throw ProbeInadmissible("radius must be positive");
    if (5.0 * p.r > R_bar * (1.0 + kSnap))
        throw ProbeInadmissible("5r <= R_bar violated (intrinsic-geometry hypothesis)");
    if (p.x0 - 5.0 * p.r < g.x_lo - kSnap || p.x0 + 5.0 * p.r > g.x_hi + kSnap)
        throw ProbeInadmissible("B_{5r}(x0) not contained in Omega");
    double R5 = 5.0 * p.r;
    if (p.t0 - R5 * R5 < -kSnap || p.t0 + R5 * R5 > g.t_hi + kSnap)
        throw ProbeInadmissible(
            "waiting-time window at radius 5r leaves (0,T) (cylinder containment)");
    WaitingTimes wt = waiting_times(f, p.x0, p.t0, R5);
    if (p.t0 - R5 * R5 * wt.h_past_max < -kSnap ||
        p.t0 + R5 * R5 * wt.h_future_max > g.t_hi + kSnap)
        throw ProbeInadmissible(
            "intrinsic cylinder B_{5r} x (t0 - (5r)^2 h, t0 + (5r)^2 h) leaves (0,T)");
}

HarnackReport harnack_probe(const ScalarField& u, const WeightField& f,
                            const HarnackProbe& probe, double R_bar) {
    const Grid& g = f.grid;
    validate_probe(f, probe, R_bar);
    HarnackReport rep;
    rep.probe = probe;
    rep.h_times = waiting_times(f, probe.x0, probe.t0, probe.r);
    int j = probe.j != 0 ? probe.j : region_of(f, probe.x0, probe.t0);
    rep.j = j;

    rep.center_value = u.at(g.nearest_x(probe.x0), g.nearest_slice(probe.t0));

    double r2 = probe.r * probe.r;
    Extreme sup_p = eval_extreme(u, f, probe.x0, probe.r,
                                 probe.t0 - r2 * rep.h_times.h_past[j], REGION_FULL, true);
    Extreme inf_f = eval_extreme(u, f, probe.x0, probe.r,
                                 probe.t0 + r2 * rep.h_times.h_future[j], j, false);
    if (!inf_f.found)
        throw EmptyTargetSet("future target slice misses region " + std::to_string(j));
    NodeSet parab = paraboloid(g, f.part, probe.x0, probe.t0, probe.r,
                               rep.h_times.h_future[j], j, TimeDirection::future);
    double inf_p = parab.empty() ? kInf : set_min(u, parab);

    double scale = std::max({1.0, std::abs(rep.center_value), std::abs(sup_p.value)});
    if (sup_p.value < -1e-12 * scale || inf_f.value < -1e-12 * scale)
        throw NegativeSolution("u must be nonnegative on the probe sets");

    rep.sup_past = sup_p.value;
    rep.inf_future = inf_f.value;
    rep.inf_paraboloid = inf_p;
    rep.ratio_c = safe_ratio(rep.center_value, rep.inf_future);
    rep.ratio_hat = safe_ratio(rep.sup_past, rep.inf_future);
    rep.ratio_paraboloid = safe_ratio(rep.center_value, inf_p);
    rep.slice_rounding_error = std::max(sup_p.rounding, inf_f.rounding);
    return rep;
}

ExpansionReport expansion_check(const ScalarField& u, const WeightField& f, double x0,
                                double t0, double r, double h_level,
                                const std::vector<double>& theta_grid) {
    const Grid& g = f.grid;
    if (!(h_level > 0.0)) throw PreconditionUnmet("h_level must be positive");
    int j = region_of(f, x0, t0);
    int jt0 = g.nearest_slice(t0);
    NodeSet base = ball_region(g, f.part, x0, r, jt0, j);
    if (base.empty()) throw PreconditionUnmet("B_r^j(x0;t0) is empty");
    if (set_min(u, base) < h_level * (1.0 - 1e-12))
        throw PreconditionUnmet("u < h_level somewhere on B_r^j(x0;t0)");

    double R4 = 4.0 * r;
    WaitingTimes wt = waiting_times(f, x0, t0, R4);
    double h = wt.h_future[j];
    ExpansionReport rep;
    rep.theta_grid = theta_grid;
    double best_lambda = 0.0, best_theta = theta_grid.empty() ? 0.0 : theta_grid.front();
    for (double theta : theta_grid) {
        double ta = t0 + rep.theta_hat_fraction * theta * R4 * R4 * h;
        double tb = t0 + theta * R4 * R4 * h;
        if (tb > g.t_hi + kSnap) {
            rep.lambda_per_theta.push_back(0.0);
            continue;
        }
        int ja = g.nearest_slice(ta), jb = g.nearest_slice(tb);
        double vmin = kInf;
        bool any = false;
        for (int jt = ja; jt <= jb; ++jt) {
            NodeSet s = ball_region(g, f.part, x0, 2.0 * r, jt, j);
            if (s.empty()) continue;
            any = true;
            vmin = std::min(vmin, set_min(u, s));
        }
        double lam = any ? std::max(0.0, vmin / h_level) : 0.0;
        rep.lambda_per_theta.push_back(lam);
        if (lam > best_lambda) {
            best_lambda = lam;
            best_theta = theta;
        }
    }
    rep.lambda_measured = best_lambda;
    rep.theta_measured = best_theta;
    rep.wall_flag = !(best_lambda > 0.0);

    // Sublevel-mass fractions of {u < lambda h} in B_4r over the chosen window.
    if (best_lambda > 0.0) {
        double ta = t0 + rep.theta_hat_fraction * best_theta * R4 * R4 * h;
        double tb = t0 + best_theta * R4 * R4 * h;
        int ja = g.nearest_slice(ta), jb = g.nearest_slice(tb);
        for (int jt = ja; jt <= jb; ++jt) {
            NodeSet s = ball_region(g, f.part, x0, R4, jt, j);
            if (s.empty()) continue;
            double num = 0.0, den = 0.0;
            s.for_each([&](int i, int jj) {
                double w = std::abs(f.at(i, jj));
                den += w;
                if (u.at(i, jj) < best_lambda * h_level) num += w;
            });
            if (den > 0.0)
                rep.sublevel_fraction_max = std::max(rep.sublevel_fraction_max, num / den);
        }
    }
    return rep;
}

ShrinkReport sublevel_shrink_check(const ScalarField& u, const WeightField& f,
                                   const HarnackProbe& probe, double mu, double omega,
                                   double sigma, double a) {
    const Grid& g = f.grid;
    int j = probe.j != 0 ? probe.j : region_of(f, probe.x0, probe.t0);
    WaitingTimes wt_s = waiting_times(f, probe.x0, probe.t0, probe.r);
    double rt = 2.0 * probe.r;
    WaitingTimes wt_b = waiting_times(f, probe.x0, probe.t0, rt);
    NodeSet q_small = cylinder(g, f.part, probe.x0, probe.t0, probe.r, 1.0,
                               wt_s.h_past[j], TimeDirection::past, j);
    NodeSet q_big = cylinder(g, f.part, probe.x0, probe.t0, rt, 1.0, wt_b.h_past[j],
                             TimeDirection::past, j);
    ShrinkReport rep;
    try {
        q_big = enlarge(g, f.part, q_big, probe.x0, probe.r,
                        rt * rt * wt_b.h_past[j] * 0.25, j, TimeDirection::past);
    } catch (const ProbeError&) {
        rep.enlargement_clipped = true;
    }
    if (q_big.empty() || q_small.empty())
        throw EmptyTargetSet("shrink-check cylinders are empty");

    rep.mu_eff = std::max(mu, set_max(u, q_big));
    rep.omega = omega;
    rep.sigma = sigma;
    rep.a = a;
    double level = rep.mu_eff - sigma * omega;
    double cnt = 0.0, cnt_over = 0.0, rho_all = 0.0, rho_over = 0.0;
    q_big.for_each([&](int i, int jj) {
        double w = std::abs(f.at(i, jj));
        cnt += 1.0;
        rho_all += w;
        if (u.at(i, jj) > level) {
            cnt_over += 1.0;
            rho_over += w;
        }
    });
    rep.fraction_lebesgue = cnt > 0.0 ? cnt_over / cnt : 0.0;
    rep.fraction_rho = rho_all > 0.0 ? rho_over / rho_all : 0.0;
    rep.fraction_sum = rep.fraction_lebesgue + rep.fraction_rho;
    rep.sup_small = set_max(u, q_small);
    rep.conclusion_bound = rep.mu_eff - a * sigma * omega;
    rep.conclusion_holds = rep.sup_small <= rep.conclusion_bound + 1e-12;
    rep.nu_flip = rep.conclusion_holds ? kInf : rep.fraction_sum;
    return rep;
}

namespace {

// First radius at which the region-j paraboloid from (x0,t0) meets Gamma.
bool paraboloid_hits_interface(const WeightField& f, double x0, double t0, double r,
                               double h, TimeDirection dir, double& x1, double& t1,
                               double& rho_bar) {
    const Grid& g = f.grid;
    int m_max = (int)std::floor(r / g.dx + kSnap);
    double sgn = dir == TimeDirection::future ? 1.0 : -1.0;
    for (int m = 1; m <= m_max; ++m) {
        double rho = m * g.dx;
        double tt = t0 + sgn * rho * rho * h;
        if (tt < -kSnap || tt > g.t_hi + kSnap) break;
        int jt = g.nearest_slice(tt);
        double xg = f.part.interface_x(jt);
        if (std::abs(x0 - xg) < rho - kSnap) {
            x1 = xg;
            t1 = g.t(jt);
            rho_bar = std::abs(x0 - xg);
            return true;
        }
    }
    return false;
}

} // namespace

std::vector<RegimeReport> regime_harnack(const ScalarField& u, const WeightField& f,
                                         const std::vector<HarnackProbe>& probes,
                                         Regime regime, double R_bar,
                                         const std::vector<int>& excluded_slices) {
    const Grid& g = f.grid;
    std::vector<RegimeReport> out;
    for (const auto& p : probes) {
        RegimeReport rep;
        rep.probe = p;
        int jt0 = g.nearest_slice(p.t0);
        if (std::find(excluded_slices.begin(), excluded_slices.end(), jt0) !=
            excluded_slices.end()) {
            rep.excluded = true;
            out.push_back(rep);
            continue;
        }
        validate_probe(f, p, R_bar);
        int i0 = g.nearest_x(p.x0);
        Region lab = f.part.label(i0, jt0);
        rep.center = u.at(i0, jt0);
        WaitingTimes wt = waiting_times(f, p.x0, p.t0, p.r);
        double r2 = p.r * p.r;

        if (regime == Regime::homogeneous) {
            HarnackReport hr = harnack_probe(u, f, p, R_bar);
            rep.case_tag = "i";
            rep.sup_lhs = hr.sup_past;
            rep.inf_rhs = hr.inf_future;
            rep.ratio_sup = safe_ratio(rep.sup_lhs, rep.inf_rhs);
            rep.ratio_inf = hr.ratio_c;
            rep.slice_rounding_error = hr.slice_rounding_error;
            out.push_back(rep);
            continue;
        }

        const bool fb = regime == Regime::forward_backward;
        if (lab == Region::interface_) {
            rep.case_tag = "i";
            Extreme sup1 = eval_extreme(u, f, p.x0, p.r, p.t0 - r2 * wt.h_past[1], 1, true);
            Extreme sup2 = fb ? eval_extreme(u, f, p.x0, p.r, p.t0 + r2 * wt.h_future[2],
                                             2, true)
                              : eval_extreme(u, f, p.x0, p.r, p.t0, 2, true);
            Extreme inf1 = eval_extreme(u, f, p.x0, p.r, p.t0 + r2 * wt.h_future[1], 1,
                                        false);
            Extreme inf2 = fb ? eval_extreme(u, f, p.x0, p.r, p.t0 - r2 * wt.h_past[2],
                                             2, false)
                              : eval_extreme(u, f, p.x0, p.r, p.t0, 2, false);
            if (!(sup1.found || sup2.found) || !(inf1.found || inf2.found))
                throw EmptyTargetSet("interface probe: target sets are empty");
            rep.sup_lhs = std::max(sup1.found ? sup1.value : -kInf,
                                   sup2.found ? sup2.value : -kInf);
            rep.inf_rhs = std::min(inf1.found ? inf1.value : kInf,
                                   inf2.found ? inf2.value : kInf);
            rep.ratio_sup = fb ? safe_ratio(rep.sup_lhs, rep.center)
                               : safe_ratio(rep.sup_lhs, rep.inf_rhs);
            rep.ratio_inf = safe_ratio(rep.center, rep.inf_rhs);
            rep.slice_rounding_error =
                std::max({sup1.rounding, sup2.rounding, inf1.rounding, inf2.rounding});
        } else if (lab == Region::region1) {
            rep.case_tag = "ii";
            Extreme inf1 = eval_extreme(u, f, p.x0, p.r, p.t0 + r2 * wt.h_future[1], 1,
                                        false);
            double inf_other = kInf;
            double x1, t1, rb;
            rep.interface_hit = paraboloid_hits_interface(
                f, p.x0, p.t0, p.r, wt.h_future[1], TimeDirection::future, x1, t1, rb);
            if (rep.interface_hit && p.r - rb > g.dx) {
                rep.x1 = x1;
                rep.t1 = t1;
                rep.rho_bar = rb;
                Extreme e = eval_extreme(u, f, x1, p.r - rb, t1, 2, false);
                if (e.found) inf_other = e.value;
            }
            if (!inf1.found && !std::isfinite(inf_other))
                throw EmptyTargetSet("region-1 probe: target sets are empty");
            rep.inf_rhs = std::min(inf1.found ? inf1.value : kInf, inf_other);
            rep.sup_lhs = rep.center;
            rep.ratio_inf = safe_ratio(rep.center, rep.inf_rhs);
            rep.ratio_sup = rep.ratio_inf;
            rep.slice_rounding_error = inf1.rounding;
        } else {
            rep.case_tag = "iii";
            double x1 = f.part.interface_x(jt0);
            double rb = std::abs(p.x0 - x1);
            double inf_own, inf_other = kInf;
            if (fb) {
                Extreme inf2 = eval_extreme(u, f, p.x0, p.r, p.t0 - r2 * wt.h_past[2], 2,
                                            false);
                if (!inf2.found) throw EmptyTargetSet("region-2 probe: empty past target");
                inf_own = inf2.value;
                double px1, pt1, prb;
                rep.interface_hit = paraboloid_hits_interface(
                    f, p.x0, p.t0, p.r, wt.h_past[2], TimeDirection::past, px1, pt1, prb);
                if (rep.interface_hit && p.r - prb > g.dx) {
                    rep.x1 = px1;
                    rep.t1 = pt1;
                    rep.rho_bar = prb;
                    Extreme e = eval_extreme(u, f, px1, p.r - prb, pt1, 1, false);
                    if (e.found) inf_other = e.value;
                }
                rep.slice_rounding_error = inf2.rounding;
            } else {
                Extreme inf2 = eval_extreme(u, f, p.x0, p.r, p.t0, 2, false);
                if (!inf2.found) throw EmptyTargetSet("region-2 probe: empty slice target");
                inf_own = inf2.value;
                rep.interface_hit = rb < p.r - kSnap;
                if (rep.interface_hit && p.r - rb > g.dx) {
                    rep.x1 = x1;
                    rep.t1 = g.t(jt0);
                    rep.rho_bar = rb;
                    double rr = p.r - rb;
                    WaitingTimes wt1 = waiting_times(f, x1, p.t0, p.r);
                    Extreme e = eval_extreme(u, f, x1, rr, p.t0 + rr * rr * wt1.h_future[1],
                                             1, false);
                    if (e.found) inf_other = e.value;
                }
            }
            rep.inf_rhs = std::min(inf_own, inf_other);
            rep.sup_lhs = rep.center;
            rep.ratio_inf = safe_ratio(rep.center, rep.inf_rhs);
            rep.ratio_sup = rep.ratio_inf;
        }
        out.push_back(rep);
    }
    return out;
}

} // namespace dglab
