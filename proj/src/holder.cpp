#include "dglab/holder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dglab/geometry.hpp"

namespace dglab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Intrinsic symmetric cylinder on the region-j side: past and future
// waiting-time cylinders glued at t0 (degenerate waiting time -> single slice).
NodeSet intrinsic_cylinder(const WeightField& f, double x0, double t0, double r, int j) {
    const Grid& g = f.grid;
    WaitingTimes wt = waiting_times(f, x0, t0, r);
    NodeSet past = cylinder(g, f.part, x0, t0, r, 1.0,
                            std::min(wt.h_past[j], std::max(0.0, t0) / (r * r)),
                            TimeDirection::past, j);
    double h_fwd = std::min(wt.h_future[j], std::max(0.0, g.t_hi - t0) / (r * r));
    NodeSet fut = cylinder(g, f.part, x0, t0, r, 1.0, h_fwd, TimeDirection::future, j);
    past.unite(fut);
    return past;
}

struct FitResult {
    double alpha = 0.0;
    double residual = 0.0;
    bool zero = false;
};

FitResult fit_loglog(const std::vector<double>& radii, const std::vector<double>& osc) {
    FitResult res;
    std::vector<double> lx, ly;
    for (std::size_t k = 0; k < radii.size(); ++k) {
        if (osc[k] > 1e-14) {
            lx.push_back(std::log(radii[k]));
            ly.push_back(std::log(osc[k]));
        }
    }
    if (lx.size() < 2) {
        res.zero = true;
        res.alpha = kInf;
        return res;
    }
    double n = (double)lx.size(), sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t k = 0; k < lx.size(); ++k) {
        sx += lx[k];
        sy += ly[k];
        sxx += lx[k] * lx[k];
        sxy += lx[k] * ly[k];
    }
    double denom = n * sxx - sx * sx;
    if (std::abs(denom) < 1e-30) {
        res.zero = true;
        res.alpha = kInf;
        return res;
    }
    res.alpha = (n * sxy - sx * sy) / denom;
    double b0 = (sy - res.alpha * sx) / n;
    for (std::size_t k = 0; k < lx.size(); ++k)
        res.residual = std::max(res.residual, std::abs(ly[k] - (res.alpha * lx[k] + b0)));
    return res;
}

} // namespace

double oscillation(const ScalarField& u, const NodeSet& set) {
    if (set.empty()) throw EmptySet("oscillation over an empty set");
    double lo = kInf, hi = -kInf;
    set.for_each([&](int i, int j) {
        lo = std::min(lo, u.at(i, j));
        hi = std::max(hi, u.at(i, j));
    });
    return hi - lo;
}

OscillationTrace holder_fit(const ScalarField& u, const WeightField& f, double x0,
                            double t0, const std::vector<double>& radii) {
    const Grid& g = f.grid;
    int i0 = g.nearest_x(x0);
    int jt0 = g.nearest_slice(t0);
    Region lab = f.part.label(i0, jt0);
    std::vector<int> sides;
    if (lab == Region::region1)
        sides = {1};
    else if (lab == Region::region2)
        sides = {2};
    else
        sides = {1, 2};

    OscillationTrace best;
    bool first = true;
    for (int j : sides) {
        OscillationTrace tr;
        for (double r : radii) {
            NodeSet s = intrinsic_cylinder(f, x0, t0, r, j);
            if (s.empty()) continue;
            tr.radii.push_back(r);
            tr.osc.push_back(oscillation(u, s));
        }
        if (tr.radii.empty()) continue;
        FitResult fit = fit_loglog(tr.radii, tr.osc);
        tr.alpha = fit.alpha;
        tr.residual = fit.residual;
        tr.zero_oscillation = fit.zero;
        if (first || tr.alpha < best.alpha) {
            best = tr;
            first = false;
        }
    }
    if (first) throw CylinderExceedsDomain("no admissible cylinder at any radius");
    return best;
}

InterfaceExampleReport interface_example_check(
    const ScalarField& u_limit, const WeightField& f, double x_disc, double t_disc,
    const std::vector<std::pair<double, double>>& continuity_probes,
    const std::vector<double>& fit_radii, double alpha_threshold) {
    const Grid& g = f.grid;
    InterfaceExampleReport rep;
    int id = g.nearest_x(x_disc);
    int jd = g.nearest_slice(t_disc);
    if (jd <= 0 || jd >= g.nt - 1)
        throw ScenarioMissing("discontinuity probe must be interior in time");
    rep.jump = std::abs(u_limit.at(id, jd + 1) - u_limit.at(id, jd - 1));

    rep.discontinuity_confirmed = true;
    for (double s : {0.4, 0.3, 0.2, 0.1}) {
        double half_t = std::max(s * s, 2.0 * g.dt);
        double a = std::max(g.x_lo, x_disc - s), b = std::min(g.x_hi, x_disc + s);
        NodeSet box(g, NodeSet::Kind::spacetime);
        int ja = g.nearest_slice(std::max(0.0, t_disc - half_t));
        int jb = g.nearest_slice(std::min(g.t_hi, t_disc + half_t));
        for (int jt = ja; jt <= jb; ++jt)
            for (int i = 0; i < g.nx; ++i)
                if (g.x(i) >= a && g.x(i) <= b) box.add(i, jt);
        double osc = oscillation(u_limit, box);
        rep.box_osc.push_back(osc);
        if (osc < 0.9 * rep.jump) rep.discontinuity_confirmed = false;
    }

    bool all_pass = rep.discontinuity_confirmed && rep.jump > 1e-6;
    for (const auto& [px, pt] : continuity_probes) {
        OscillationTrace tr = holder_fit(u_limit, f, px, pt, fit_radii);
        InterfaceProbeResult r;
        r.x0 = px;
        r.t0 = pt;
        r.alpha = tr.alpha;
        r.zero_oscillation = tr.zero_oscillation;
        r.pass = tr.zero_oscillation || tr.alpha > alpha_threshold;
        all_pass = all_pass && r.pass;
        rep.continuity_probes.push_back(r);
    }
    rep.pass = all_pass;
    return rep;
}

} // namespace dglab
