#include "dglab/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dglab {

namespace {

constexpr double kSnap = 1e-12;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Strict-ball node index range [i_lo, i_hi] (degenerate radius -> nearest node).
std::pair<int, int> ball_range(const Grid& g, double x0, double r) {
    if (x0 - r < g.x_lo - kSnap || x0 + r > g.x_hi + kSnap)
        throw BallExceedsDomain("B_r(x0) not contained in the spatial domain");
    int lo = g.nx, hi = -1;
    for (int i = 0; i < g.nx; ++i) {
        if (std::abs(g.x(i) - x0) < r - kSnap) {
            lo = std::min(lo, i);
            hi = std::max(hi, i);
        }
    }
    if (hi < 0) lo = hi = g.nearest_x(x0);
    return {lo, hi};
}

double weight_of(const WeightField& f, int i, int j, Restriction restr, int region) {
    switch (restr) {
        case Restriction::rho:
            return f.at(i, j);
        case Restriction::rho_j:
            return f.in_region(i, j, region) && region != REGION_FULL ? f.at(i, j) : 0.0;
        case Restriction::chi_j:
            return f.in_region(i, j, region) && region != REGION_FULL ? 1.0 : 0.0;
        case Restriction::lebesgue:
            return 1.0;
    }
    return 0.0;
}

// Slice integrals over a ball index range.
double slice_sum(const WeightField& f, int jt, int i_lo, int i_hi, Restriction restr,
                 int region) {
    double s = 0.0;
    for (int i = i_lo; i <= i_hi; ++i) s += weight_of(f, i, jt, restr, region);
    return s * f.grid.dx;
}

} // namespace

double measure(const WeightField& f, const NodeSet& set, Restriction restr, int j) {
    double s = 0.0;
    set.for_each([&](int i, int jt) { s += weight_of(f, i, jt, restr, j); });
    return s * set.cell_volume();
}

WaitingTimes waiting_times(const WeightField& f, double x0, double t0, double r) {
    const Grid& g = f.grid;
    if (t0 - r * r < -kSnap || t0 + r * r > g.t_hi + kSnap)
        throw CylinderExceedsDomain("waiting-time window outside [0,T]");
    auto [i_lo, i_hi] = ball_range(g, x0, r);
    int j_mid = g.nearest_slice(t0);
    int j_lo = g.nearest_slice(t0 - r * r);
    int j_hi = g.nearest_slice(t0 + r * r);

    WaitingTimes wt;
    for (int region = 1; region <= 2; ++region) {
        for (int half = 0; half < 2; ++half) {
            int ja = half == 0 ? j_lo : j_mid;
            int jb = half == 0 ? j_mid : j_hi;
            double sum = 0.0;
            long cnt = 0;
            for (int jt = ja; jt <= jb; ++jt) {
                for (int i = i_lo; i <= i_hi; ++i) {
                    if (f.in_region(i, jt, region)) {
                        sum += std::abs(f.at(i, jt));
                        cnt += 1;
                    }
                }
            }
            double h = cnt == 0 ? 0.0 : sum / (double)cnt;
            if (half == 0)
                wt.h_past[region] = h;
            else
                wt.h_future[region] = h;
        }
    }
    wt.h_past_max = std::max(wt.h_past[1], wt.h_past[2]);
    wt.h_future_max = std::max(wt.h_future[1], wt.h_future[2]);
    return wt;
}

WaitingTimeIdentityReport waiting_time_identities(const WeightField& f, double x0,
                                                  double t0, double r, double r_tilde,
                                                  double kappa) {
    WaitingTimeIdentityReport rep;
    WaitingTimes at_t0 = waiting_times(f, x0, t0, r);
    WaitingTimes at_back = waiting_times(f, x0, t0 - r * r, r);
    WaitingTimes at_fwd = waiting_times(f, x0, t0 + r * r, r);
    WaitingTimes big = waiting_times(f, x0, t0, r_tilde);
    double factor = (1.0 / (2.0 * kappa)) * std::pow(r_tilde / r, 3.0); // n+2 with n=1
    for (int j = 1; j <= 2; ++j) {
        rep.past_at_t0[j] = at_t0.h_past[j];
        rep.future_at_t0_minus_r2[j] = at_back.h_future[j];
        rep.residual_back[j] = at_t0.h_past[j] - at_back.h_future[j];
        rep.future_at_t0[j] = at_t0.h_future[j];
        rep.past_at_t0_plus_r2[j] = at_fwd.h_past[j];
        rep.residual_forward[j] = at_t0.h_future[j] - at_fwd.h_past[j];
        rep.scaling_lhs[j] = at_t0.h_past[j];
        rep.scaling_rhs[j] = factor * big.h_past[j];
        if (rep.scaling_lhs[j] > rep.scaling_rhs[j] * (1.0 + 1e-12))
            rep.scaling_holds = false;
    }
    return rep;
}

double doubling_constant(const WeightField& f, int t_index,
                         const std::vector<double>& centers,
                         const std::vector<double>& radii) {
    double worst = 0.0;
    for (double c : centers) {
        for (double r : radii) {
            auto [a_lo, a_hi] = ball_range(f.grid, c, r);
            auto [b_lo, b_hi] = ball_range(f.grid, c, 2.0 * r);
            double small = slice_sum(f, t_index, a_lo, a_hi, Restriction::rho, 0);
            double big = slice_sum(f, t_index, b_lo, b_hi, Restriction::rho, 0);
            if (small <= 0.0)
                throw DegenerateMeasure("doubling denominator vanishes");
            worst = std::max(worst, big / small);
        }
    }
    return worst;
}

std::vector<IntervalSample> default_ainfty_plan(const Grid& g) {
    std::vector<IntervalSample> plan;
    double len = g.x_hi - g.x_lo;
    const double center_fracs[] = {0.3, 0.5, 0.7};
    const double radius_fracs[] = {0.25, 0.125, 0.0625};
    const double sub_fracs[] = {0.5, 0.25, 0.125};
    for (double cf : center_fracs) {
        double c = g.x_lo + cf * len;
        for (double rf : radius_fracs) {
            double r = rf * len;
            if (c - r < g.x_lo || c + r > g.x_hi) continue;
            if (r < 8.0 * g.dx) continue;
            for (double sf : sub_fracs)
                for (int align = 0; align < 3; ++align)
                    plan.push_back({c, r, sf, align});
        }
    }
    return plan;
}

AinftyFit fit_Ainfty(const WeightField& f, int t_index,
                     const std::vector<IntervalSample>& plan) {
    AinftyFit fit;
    struct Pair {
        double wr, lr;
    };
    std::vector<Pair> pairs;
    for (const auto& s : plan) {
        auto [i_lo, i_hi] = ball_range(f.grid, s.center, s.radius);
        long n = i_hi - i_lo + 1;
        long m = std::max<long>(1, (long)std::floor(s.fraction * (double)n + 0.5));
        if (m >= n) continue;
        int s_lo;
        if (s.align == 0)
            s_lo = i_lo;
        else if (s.align == 2)
            s_lo = (int)(i_hi - m + 1);
        else
            s_lo = (int)(i_lo + (n - m) / 2);
        int s_hi = (int)(s_lo + m - 1);
        double wB = slice_sum(f, t_index, i_lo, i_hi, Restriction::rho, 0);
        double wS = slice_sum(f, t_index, s_lo, s_hi, Restriction::rho, 0);
        if (wB <= 0.0) throw DegenerateMeasure("A_infty: weight of ball vanishes");
        double wr = wS / wB;
        double lr = (double)m / (double)n;
        if (wr <= 0.0) {
            fit.in_class = false; // zero plateau: no lower exponent exists
            continue;
        }
        pairs.push_back({wr, lr});
    }
    if (pairs.empty()) {
        fit.in_class = false;
        return fit;
    }
    // Exponent: binding log-ratio over the sampled pairs, capped at 1.
    double varsigma = kInf;
    for (const auto& p : pairs)
        varsigma = std::min(varsigma, std::log(p.wr) / std::log(p.lr));
    if (!(varsigma > 0.0)) fit.in_class = false;
    varsigma = std::min(varsigma, 1.0);
    fit.varsigma = varsigma;
    double K2 = 1.0;
    for (const auto& p : pairs) K2 = std::max(K2, p.wr / std::pow(p.lr, varsigma));
    fit.K2 = K2;
    double b = 1.0;
    for (const auto& p : pairs) b = std::max(b, std::log(K2 * p.wr) / std::log(p.lr));
    fit.b = b;
    for (const auto& p : pairs) {
        if (p.wr > K2 * std::pow(p.lr, varsigma) * (1.0 + 1e-12)) fit.violations++;
        if (std::pow(p.lr, b) > K2 * p.wr * (1.0 + 1e-12)) fit.violations++;
    }
    return fit;
}

std::vector<ConcentricPair> default_concentric_plan(const Grid& g) {
    std::vector<ConcentricPair> plan;
    double len = g.x_hi - g.x_lo;
    const double center_fracs[] = {0.3, 0.5, 0.7};
    const double outer_fracs[] = {0.25, 0.125};
    const double ratios[] = {0.75, 0.5, 0.25};
    for (double cf : center_fracs) {
        double c = g.x_lo + cf * len;
        for (double of : outer_fracs) {
            double rho = of * len;
            if (c - rho < g.x_lo || c + rho > g.x_hi) continue;
            if (rho < 16.0 * g.dx) continue;
            for (double q : ratios) plan.push_back({c, q * rho, rho});
        }
    }
    return plan;
}

double fit_B2q(const WeightField& f, int t_index, double q,
               const std::vector<ConcentricPair>& plan) {
    if (!(q > 2.0)) throw ConfigError("B^1_{2,q} requires q > 2");
    double K1 = 0.0;
    for (const auto& p : plan) {
        auto [a_lo, a_hi] = ball_range(f.grid, p.center, p.r);
        auto [b_lo, b_hi] = ball_range(f.grid, p.center, p.rho);
        double w_in = slice_sum(f, t_index, a_lo, a_hi, Restriction::rho, 0);
        double w_out = slice_sum(f, t_index, b_lo, b_hi, Restriction::rho, 0);
        if (w_out <= 0.0) throw DegenerateMeasure("B^1_{2,q}: outer weight vanishes");
        long n_in = a_hi - a_lo + 1, n_out = b_hi - b_lo + 1;
        double val = (p.r / p.rho) * std::pow(w_in / w_out, 1.0 / q) *
                     std::pow((double)n_in / (double)n_out, -0.5);
        K1 = std::max(K1, val);
    }
    return K1;
}

namespace {

std::vector<int> relevant_regions(const WeightField& f, int i0, int jt) {
    Region lab = f.part.label(i0, jt);
    if (lab == Region::region1) return {1};
    if (lab == Region::region2) return {2};
    return {1, 2};
}

bool slice_excluded(int jt, const std::vector<int>& excluded) {
    return std::find(excluded.begin(), excluded.end(), jt) != excluded.end();
}

// max - min of rho_j(t)(B) and chi_j(t)(B) over a slice window.
void window_oscillation(const WeightField& f, int i_lo, int i_hi, int ja, int jb,
                        int region, double& rho_osc, double& chi_osc,
                        const std::vector<int>& excluded) {
    double rmin = kInf, rmax = -kInf, cmin = kInf, cmax = -kInf;
    for (int jt = ja; jt <= jb; ++jt) {
        if (slice_excluded(jt, excluded)) continue;
        double rv = slice_sum(f, jt, i_lo, i_hi, Restriction::rho_j, region);
        double cv = slice_sum(f, jt, i_lo, i_hi, Restriction::chi_j, region);
        rmin = std::min(rmin, rv);
        rmax = std::max(rmax, rv);
        cmin = std::min(cmin, cv);
        cmax = std::max(cmax, cv);
    }
    rho_osc = (rmax >= rmin) ? rmax - rmin : 0.0;
    chi_osc = (cmax >= cmin) ? cmax - cmin : 0.0;
}

double tent_h1_norm(const Grid& g, const std::vector<double>& v) {
    double l2 = 0.0, grad = 0.0;
    for (int i = 0; i < g.nx; ++i) {
        l2 += v[i] * v[i];
        double dv;
        if (i == 0)
            dv = (v[1] - v[0]) / g.dx;
        else if (i == g.nx - 1)
            dv = (v[i] - v[i - 1]) / g.dx;
        else
            dv = (v[i + 1] - v[i - 1]) / (2.0 * g.dx);
        grad += dv * dv;
    }
    return std::sqrt((l2 + grad) * g.dx);
}

double estimate_h1_bound(const WeightField& f, const std::vector<int>& excluded) {
    const Grid& g = f.grid;
    int w = std::max(4, g.nx / 16);
    std::vector<int> centers;
    for (int c : {w + 1, g.nx / 4, g.nx / 2, 3 * g.nx / 4, g.nx - 2 - w})
        if (c - w >= 0 && c + w < g.nx) centers.push_back(c);
    std::sort(centers.begin(), centers.end());
    centers.erase(std::unique(centers.begin(), centers.end()), centers.end());
    auto tent = [&](int c) {
        std::vector<double> v(g.nx, 0.0);
        for (int i = std::max(0, c - w); i <= std::min(g.nx - 1, c + w); ++i)
            v[i] = 1.0 - std::abs(i - c) / (double)w;
        return v;
    };
    double L = 0.0;
    for (std::size_t a = 0; a < centers.size(); ++a) {
        for (std::size_t bidx = a; bidx < std::min(centers.size(), a + 2); ++bidx) {
            std::vector<double> v = tent(centers[a]);
            std::vector<double> wv = tent(centers[bidx]);
            double norm = tent_h1_norm(g, v) * tent_h1_norm(g, wv);
            if (norm <= 0.0) continue;
            double prev = 0.0;
            bool have_prev = false;
            for (int jt = 0; jt < g.nt; ++jt) {
                double F = 0.0;
                for (int i = 0; i < g.nx; ++i) F += v[i] * wv[i] * f.at(i, jt);
                F *= g.dx;
                if (have_prev && !slice_excluded(jt, excluded) &&
                    !slice_excluded(jt - 1, excluded))
                    L = std::max(L, std::abs(F - prev) / g.dt / norm);
                prev = F;
                have_prev = true;
            }
        }
    }
    return L;
}

} // namespace

WeightClassReport check_hypotheses(const WeightField& f, double kappa, double delta,
                                   double R_bar, const std::vector<WeightProbe>& probes,
                                   const std::vector<int>& excluded_slices) {
    const Grid& g = f.grid;
    WeightClassReport rep;
    rep.kappa = kappa;
    rep.delta = delta;
    rep.R_bar = R_bar;

    double kappa_max = 0.5;
    bool h2_ok = true, h3_ok = true;

    for (const auto& pr : probes) {
        if (pr.r > R_bar * (1.0 + kSnap))
            throw CylinderExceedsDomain("probe radius exceeds R_bar");
        int jt0 = g.nearest_slice(pr.t0);
        auto [i_lo, i_hi] = ball_range(g, pr.x0, pr.r);
        double rho_ball = slice_sum(f, jt0, i_lo, i_hi, Restriction::rho, 0);
        double leb = slice_sum(f, jt0, i_lo, i_hi, Restriction::lebesgue, 0);
        if (rho_ball <= 0.0) throw DegenerateMeasure("probe ball has zero rho-measure");
        int ja = g.nearest_slice(std::max(0.0, pr.t0 - delta));
        int jb = g.nearest_slice(std::min(g.t_hi, pr.t0 + delta));
        for (int region : relevant_regions(f, g.nearest_x(pr.x0), jt0)) {
            ProbeMargin m;
            m.probe = pr;
            m.j = region;
            m.rho_ball_t0 = rho_ball;
            m.leb_ball = leb;
            double rho_j = slice_sum(f, jt0, i_lo, i_hi, Restriction::rho_j, region);
            double chi_j = slice_sum(f, jt0, i_lo, i_hi, Restriction::chi_j, region);
            m.h2_rho_ratio = rho_j / rho_ball;
            m.h2_chi_ratio = chi_j / leb;
            window_oscillation(f, i_lo, i_hi, ja, jb, region, m.h3_rho_osc, m.h3_chi_osc,
                               excluded_slices);
            if (m.h2_rho_ratio < 2.0 * kappa - 1e-12) h2_ok = false;
            if (m.h2_chi_ratio < 2.0 * kappa - 1e-12) h2_ok = false;
            if (m.h3_rho_osc > kappa * rho_ball + 1e-12) h3_ok = false;
            if (m.h3_chi_osc > kappa * leb + 1e-12) h3_ok = false;
            kappa_max = std::min(kappa_max,
                                 0.5 * std::min(m.h2_rho_ratio, m.h2_chi_ratio));
            rep.margins.push_back(m);
        }
    }
    rep.kappa_max = kappa_max;
    rep.h2_pass = h2_ok;
    rep.h3_pass = h3_ok;

    // Largest admissible delta at the given kappa: per probe/region, precompute
    // the slice curves rho_j(t)(B) and chi_j(t)(B), then widen the window.
    int best_m = g.nt - 1;
    for (const auto& pr : probes) {
        int jt0 = g.nearest_slice(pr.t0);
        auto [i_lo, i_hi] = ball_range(g, pr.x0, pr.r);
        double rho_ball = slice_sum(f, jt0, i_lo, i_hi, Restriction::rho, 0);
        double leb = slice_sum(f, jt0, i_lo, i_hi, Restriction::lebesgue, 0);
        for (int region : relevant_regions(f, g.nearest_x(pr.x0), jt0)) {
            std::vector<double> rv(g.nt), cv(g.nt);
            for (int jt = 0; jt < g.nt; ++jt) {
                rv[jt] = slice_sum(f, jt, i_lo, i_hi, Restriction::rho_j, region);
                cv[jt] = slice_sum(f, jt, i_lo, i_hi, Restriction::chi_j, region);
            }
            double rmin = rv[jt0], rmax = rv[jt0], cmin = cv[jt0], cmax = cv[jt0];
            int probe_m = g.nt - 1;
            for (int mstep = 1; mstep < g.nt; ++mstep) {
                for (int jt : {jt0 - mstep, jt0 + mstep}) {
                    if (jt < 0 || jt >= g.nt || slice_excluded(jt, excluded_slices))
                        continue;
                    rmin = std::min(rmin, rv[jt]);
                    rmax = std::max(rmax, rv[jt]);
                    cmin = std::min(cmin, cv[jt]);
                    cmax = std::max(cmax, cv[jt]);
                }
                if (rmax - rmin > kappa * rho_ball + 1e-12 ||
                    cmax - cmin > kappa * leb + 1e-12) {
                    probe_m = mstep - 1;
                    break;
                }
            }
            best_m = std::min(best_m, probe_m);
        }
    }
    if (probes.empty()) best_m = 0;
    rep.delta_max = best_m * g.dt;

    rep.L_continuity = estimate_h1_bound(f, excluded_slices);
    rep.h1_pass = std::isfinite(rep.L_continuity);

    // Slice-wise weight-class fits (H.4) and the doubling constant.
    std::vector<int> fit_slices = {0, g.nt / 4, g.nt / 2, 3 * g.nt / 4, g.nt - 1};
    auto aplan = default_ainfty_plan(g);
    auto cplan = default_concentric_plan(g);
    double K1 = 0.0, K2 = 1.0, vs = 1.0, bexp = 1.0, c_rho = 1.0;
    bool in_class = true;
    for (int jt : fit_slices) {
        if (slice_excluded(jt, excluded_slices)) continue;
        try {
            AinftyFit af = fit_Ainfty(f, jt, aplan);
            K2 = std::max(K2, af.K2);
            vs = std::min(vs, af.varsigma);
            bexp = std::max(bexp, af.b);
            in_class = in_class && af.in_class && af.violations == 0;
            K1 = std::max(K1, fit_B2q(f, jt, rep.q, cplan));
        } catch (const DegenerateMeasure&) {
            // Weight vanishes on a sampled ball: not in the class.
            in_class = false;
            K1 = kInf;
        }
        std::vector<double> centers, radii;
        for (const auto& pr : probes) {
            if (pr.x0 - 2.0 * pr.r >= g.x_lo && pr.x0 + 2.0 * pr.r <= g.x_hi) {
                centers.push_back(pr.x0);
                radii.push_back(pr.r);
            }
        }
        if (!centers.empty()) {
            // probe-specific pairs, evaluated one at a time
            for (std::size_t k = 0; k < centers.size(); ++k)
                c_rho = std::max(c_rho, doubling_constant(f, jt, {centers[k]},
                                                          {radii[k]}));
        }
    }
    rep.K1 = K1;
    rep.K2 = K2;
    rep.varsigma = vs;
    rep.b = bexp;
    rep.ainfty_in_class = in_class;
    rep.c_rho = c_rho;
    rep.h4_pass = in_class && std::isfinite(K1) && K1 > 0.0;

    // Global-sup vs windowed-inf constant over the probe plan.
    double Lsi = 1.0;
    for (const auto& pr : probes) {
        int jt0 = g.nearest_slice(pr.t0);
        auto [i_lo, i_hi] = ball_range(g, pr.x0, pr.r);
        double glob_sup = 0.0, win_inf = kInf;
        int ja = g.nearest_slice(std::max(0.0, pr.t0 - delta));
        int jb = g.nearest_slice(std::min(g.t_hi, pr.t0 + delta));
        for (int jt = 0; jt < g.nt; ++jt) {
            if (slice_excluded(jt, excluded_slices)) continue;
            double v = slice_sum(f, jt, i_lo, i_hi, Restriction::rho, 0);
            glob_sup = std::max(glob_sup, v);
            if (jt >= ja && jt <= jb) win_inf = std::min(win_inf, v);
        }
        (void)jt0;
        if (win_inf > 0.0 && std::isfinite(win_inf))
            Lsi = std::max(Lsi, glob_sup / win_inf);
    }
    rep.L_supinf = Lsi;
    return rep;
}

std::vector<ConsequenceResult> verify_consequences(const WeightField& f,
                                                   const WeightClassReport& report,
                                                   const std::vector<WeightProbe>& probes) {
    const Grid& g = f.grid;
    const double kappa = report.kappa;
    const double delta = report.delta;
    const double c_rho = report.c_rho;
    const double c_rho_j = c_rho / (2.0 * kappa);
    const double Lsi = report.L_supinf;

    auto result = [](const char* name) {
        ConsequenceResult r;
        r.name = name;
        r.worst_margin = kInf;
        return r;
    };
    ConsequenceResult c2 = result("C2.doubling");
    ConsequenceResult c3 = result("C3.rho_j_lower");
    ConsequenceResult c4 = result("C4.chi_j_lower");
    ConsequenceResult c5 = result("C5.window_supinf");
    ConsequenceResult c6 = result("C6.global_sup");
    ConsequenceResult c7 = result("C7.restricted_doubling");
    ConsequenceResult c8 = result("C8.rho_j_vs_rho");
    ConsequenceResult c9 = result("C9.cylinder_compare");
    ConsequenceResult c10 = result("C10.spacetime_ainfty");

    auto update = [](ConsequenceResult& c, double lhs, double rhs) {
        double margin = rhs - lhs;
        if (margin < c.worst_margin) c.worst_margin = margin;
        if (margin < -1e-9 * std::max(1.0, std::abs(rhs))) c.pass = false;
    };

    for (const auto& pr : probes) {
        int jt0 = g.nearest_slice(pr.t0);
        auto [i_lo, i_hi] = ball_range(g, pr.x0, pr.r);
        double rho_ball = slice_sum(f, jt0, i_lo, i_hi, Restriction::rho, 0);
        double leb = slice_sum(f, jt0, i_lo, i_hi, Restriction::lebesgue, 0);
        int ja = g.nearest_slice(std::max(0.0, pr.t0 - delta));
        int jb = g.nearest_slice(std::min(g.t_hi, pr.t0 + delta));
        bool fits2r = pr.x0 - 2.0 * pr.r >= g.x_lo - kSnap &&
                      pr.x0 + 2.0 * pr.r <= g.x_hi + kSnap;

        if (fits2r) {
            auto [b_lo, b_hi] = ball_range(g, pr.x0, 2.0 * pr.r);
            double rho_2 = slice_sum(f, jt0, b_lo, b_hi, Restriction::rho, 0);
            update(c2, rho_2, c_rho * rho_ball);
            for (int region : relevant_regions(f, g.nearest_x(pr.x0), jt0)) {
                double rj = slice_sum(f, jt0, i_lo, i_hi, Restriction::rho_j, region);
                double rj2 = slice_sum(f, jt0, b_lo, b_hi, Restriction::rho_j, region);
                double cj = slice_sum(f, jt0, i_lo, i_hi, Restriction::chi_j, region);
                double cj2 = slice_sum(f, jt0, b_lo, b_hi, Restriction::chi_j, region);
                update(c7, rj2, c_rho_j * rj);
                update(c7, cj2, (1.0 / kappa) * cj); // 2^{n-1}/kappa with n = 1
            }
        }

        double glob_sup = 0.0, win_inf_rho = kInf;
        for (int jt = 0; jt < g.nt; ++jt) {
            double v = slice_sum(f, jt, i_lo, i_hi, Restriction::rho, 0);
            glob_sup = std::max(glob_sup, v);
            if (jt >= ja && jt <= jb) win_inf_rho = std::min(win_inf_rho, v);
        }
        update(c6, glob_sup, Lsi * win_inf_rho);

        for (int region : relevant_regions(f, g.nearest_x(pr.x0), jt0)) {
            double sup_rj = 0.0, inf_rj = kInf, sup_cj = 0.0, inf_cj = kInf;
            for (int jt = ja; jt <= jb; ++jt) {
                double rj = slice_sum(f, jt, i_lo, i_hi, Restriction::rho_j, region);
                double cj = slice_sum(f, jt, i_lo, i_hi, Restriction::chi_j, region);
                double rho_t = slice_sum(f, jt, i_lo, i_hi, Restriction::rho, 0);
                update(c3, kappa * rho_ball, rj);
                update(c4, kappa * leb, cj);
                update(c8, (kappa / Lsi) * rho_t, rj);
                sup_rj = std::max(sup_rj, rj);
                inf_rj = std::min(inf_rj, rj);
                sup_cj = std::max(sup_cj, cj);
                inf_cj = std::min(inf_cj, cj);
            }
            update(c5, sup_rj, ((1.0 + kappa) / kappa) * inf_rj);
            update(c5, sup_cj, ((1.0 + kappa) / kappa) * inf_cj);

            // C9: past cylinders at radii r and 2r sharing the waiting time at r.
            try {
                WaitingTimes wt = waiting_times(f, pr.x0, pr.t0, pr.r);
                double h = wt.h_past[region];
                double rt = 2.0 * pr.r;
                if (fits2r && pr.t0 - rt * rt * h >= -kSnap && h > 0.0) {
                    NodeSet q_small = cylinder(g, f.part, pr.x0, pr.t0, pr.r, 1.0, h,
                                               TimeDirection::past, region);
                    NodeSet q_big = cylinder(g, f.part, pr.x0, pr.t0, rt, 1.0, h,
                                             TimeDirection::past, region);
                    double rho_s = measure(f, q_small, Restriction::rho);
                    double rho_b = measure(f, q_big, Restriction::rho);
                    double leb_s = q_small.measure();
                    double leb_b = q_big.measure();
                    double ratio = rt / pr.r;
                    double C_rho_j = ((1.0 + kappa) / kappa) * c_rho_j * ratio * ratio *
                                     ratio; // (r~/r)(theta~/theta)(r~/r)^2, theta ratio 1
                    double C_chi = (1.0 / kappa) * std::pow(ratio, 3.0);
                    if (rho_s > 0.0) update(c9, rho_b, C_rho_j * rho_s);
                    if (leb_s > 0.0) update(c9, leb_b, C_chi * leb_s);
                }
            } catch (const ProbeError&) {
                // probe does not admit the 2r cylinder; skip
            }
        }

        // C10: space-time A_infty comparison on sub-boxes of B_r x (t0-r^2, t0).
        if (pr.t0 - pr.r * pr.r >= -kSnap) {
            int jlo = g.nearest_slice(pr.t0 - pr.r * pr.r);
            int n_sl = jt0 - jlo + 1;
            long n_sp = i_hi - i_lo + 1;
            double rho_box = 0.0;
            for (int jt = jlo; jt <= jt0; ++jt)
                rho_box += slice_sum(f, jt, i_lo, i_hi, Restriction::rho, 0);
            double leb_box = (double)n_sl * (double)n_sp;
            if (rho_box > 0.0 && n_sl >= 2 && n_sp >= 2) {
                for (int half_x = 0; half_x < 2; ++half_x) {
                    for (int half_t = 0; half_t < 2; ++half_t) {
                        int s_ilo = half_x == 0 ? i_lo : i_lo + (int)n_sp / 2;
                        int s_ihi = half_x == 0 ? i_lo + (int)n_sp / 2 - 1 : i_hi;
                        int s_jlo = half_t == 0 ? jlo : jlo + n_sl / 2;
                        int s_jhi = half_t == 0 ? jlo + n_sl / 2 - 1 : jt0;
                        double rho_s = 0.0;
                        long cnt = 0;
                        for (int jt = s_jlo; jt <= s_jhi; ++jt) {
                            rho_s += slice_sum(f, jt, s_ilo, s_ihi, Restriction::rho, 0);
                            cnt += s_ihi - s_ilo + 1;
                        }
                        double lr = (double)cnt / leb_box;
                        double wr = rho_s / rho_box;
                        update(c10, std::pow(lr, report.b), Lsi * report.K2 * wr);
                        update(c10, wr, Lsi * report.K2 * std::pow(lr, report.varsigma));
                    }
                }
            }
        }
    }

    return {c2, c3, c4, c5, c6, c7, c8, c9, c10};
}

SobolevCheck weighted_sobolev_check(const WeightField& f, int t_index,
                                    const std::vector<double>& u_slice, double x0,
                                    double r, double q) {
    const Grid& g = f.grid;
    auto [i_lo, i_hi] = ball_range(g, x0, r);
    // Compact support in B_r or zero weighted mean.
    bool compact = true;
    for (int i = 0; i < g.nx; ++i) {
        if ((i < i_lo || i > i_hi) && std::abs(u_slice[i]) > 1e-14) {
            compact = false;
            break;
        }
    }
    if (!compact) {
        double mean = 0.0, wsum = 0.0;
        for (int i = i_lo; i <= i_hi; ++i) {
            mean += u_slice[i] * f.at(i, t_index);
            wsum += f.at(i, t_index);
        }
        if (wsum <= 0.0 || std::abs(mean / wsum) > 1e-10)
            throw SupportViolation("u must have compact support in B_r or zero weighted mean");
    }
    double wB = slice_sum(f, t_index, i_lo, i_hi, Restriction::rho, 0);
    if (wB <= 0.0) throw DegenerateMeasure("weight vanishes on B_r");
    double lebB = (double)(i_hi - i_lo + 1) * g.dx;
    double num = 0.0, grad = 0.0;
    for (int i = i_lo; i <= i_hi; ++i) {
        num += std::pow(std::abs(u_slice[i]), q) * f.at(i, t_index) * g.dx;
        double du;
        if (i == 0)
            du = (u_slice[1] - u_slice[0]) / g.dx;
        else if (i == g.nx - 1)
            du = (u_slice[i] - u_slice[i - 1]) / g.dx;
        else
            du = (u_slice[i + 1] - u_slice[i - 1]) / (2.0 * g.dx);
        grad += du * du * g.dx;
    }
    SobolevCheck out;
    out.lhs = std::pow(num / wB, 1.0 / q);
    out.rhs_gradient = r * std::sqrt(grad / lebB);
    out.gamma_required = out.lhs <= 0.0 ? 0.0
                         : out.rhs_gradient > 0.0 ? out.lhs / out.rhs_gradient
                                                  : kInf;
    return out;
}

LevelSeparation level_separation_check(const WeightField& f, int t_index,
                                       const std::vector<double>& v_slice, double x0,
                                       double r, double k, double l, double p,
                                       double beta) {
    if (!(k < l) || !(p > 1.0) || !(p <= 2.0))
        throw ConfigError("level separation requires k < l and p in (1,2]");
    const Grid& g = f.grid;
    auto [i_lo, i_hi] = ball_range(g, x0, r);
    double eta_below = 0.0, eta_above = 0.0, eta_ball = 0.0, grad_p = 0.0;
    double lebB = (double)(i_hi - i_lo + 1) * g.dx;
    for (int i = i_lo; i <= i_hi; ++i) {
        double w = f.at(i, t_index) * g.dx;
        eta_ball += w;
        if (v_slice[i] < k) eta_below += w;
        if (v_slice[i] > l) eta_above += w;
        if (v_slice[i] > k && v_slice[i] < l) {
            double dv;
            if (i == 0)
                dv = (v_slice[1] - v_slice[0]) / g.dx;
            else if (i == g.nx - 1)
                dv = (v_slice[i] - v_slice[i - 1]) / g.dx;
            else
                dv = (v_slice[i + 1] - v_slice[i - 1]) / (2.0 * g.dx);
            grad_p += std::pow(std::abs(dv), p) * g.dx;
        }
    }
    LevelSeparation out;
    out.lhs = (l - k) * eta_below * eta_above;
    out.rhs = 2.0 * beta * r * eta_ball * eta_ball * std::pow(grad_p / lebB, 1.0 / p);
    return out;
}

} // namespace dglab
