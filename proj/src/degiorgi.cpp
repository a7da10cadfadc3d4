#include "dglab/degiorgi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dglab {

Cutoff make_cutoff(const Grid& g, const IndexBox& inner, const IndexBox& outer) {
    if (inner.i_lo < outer.i_lo || inner.i_hi > outer.i_hi || inner.j_lo < outer.j_lo ||
        inner.j_hi > outer.j_hi || inner.i_lo > inner.i_hi || inner.j_lo > inner.j_hi)
        throw ConfigError("cutoff boxes must be nested");
    if (inner.i_lo == outer.i_lo || inner.i_hi == outer.i_hi)
        throw DegenerateGap("inner box touches the outer spatial boundary");
    if (outer.i_lo < 0 || outer.i_hi > g.nx - 1 || outer.j_lo < 0 || outer.j_hi > g.nt - 1)
        throw ConfigError("outer box leaves the grid");

    Cutoff c;
    c.inner = inner;
    c.outer = outer;
    c.zeta = ScalarField(g);
    auto ramp = [](double pos, double lo_out, double lo_in, double hi_in, double hi_out) {
        if (pos <= lo_out || pos >= hi_out) return 0.0;
        if (pos >= lo_in && pos <= hi_in) return 1.0;
        if (pos < lo_in) return (pos - lo_out) / (lo_in - lo_out);
        return (hi_out - pos) / (hi_out - hi_in);
    };
    // Temporal profile: 0 before the outer start, ramp to 1 at the inner start,
    // 1 afterwards (so zeta_t >= 0 everywhere).
    auto tprof = [&](int j) {
        if (j >= inner.j_lo) return 1.0;
        if (inner.j_lo == outer.j_lo) return j >= inner.j_lo ? 1.0 : 0.0;
        if (j <= outer.j_lo) return j == outer.j_lo ? 0.0 : 0.0;
        return (double)(j - outer.j_lo) / (double)(inner.j_lo - outer.j_lo);
    };
    for (int j = 0; j < g.nt; ++j) {
        double st = (j < outer.j_lo) ? 0.0 : tprof(j);
        for (int i = 0; i < g.nx; ++i) {
            double sx = ramp((double)i, (double)outer.i_lo, (double)inner.i_lo,
                             (double)inner.i_hi, (double)outer.i_hi);
            c.zeta.at(i, j) = sx * st;
        }
    }
    for (int j = 0; j < g.nt; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            if (i + 1 < g.nx)
                c.sup_dzeta = std::max(
                    c.sup_dzeta, std::abs(c.zeta.at(i + 1, j) - c.zeta.at(i, j)) / g.dx);
            if (j + 1 < g.nt) {
                double zt = (c.zeta.at(i, j + 1) - c.zeta.at(i, j)) / g.dt;
                c.sup_zeta_t = std::max(c.sup_zeta_t, zt);
            }
        }
    }
    return c;
}

EnergyReport energy_sides(const Grid& g, const ScalarField& u, const WeightField& weight,
                          const Cutoff& zeta, double k, int t1, int t2,
                          TruncationSign sign, bool include_level_term) {
    if (t1 >= t2 || t1 < 0 || t2 > g.nt - 1)
        throw ConfigError("energy window requires grid slices t1 < t2");
    EnergyReport rep;
    auto trunc = [&](int i, int j) {
        double d = u.at(i, j) - k;
        if (sign == TruncationSign::plus) return d > 0.0 ? d : 0.0;
        return d < 0.0 ? -d : 0.0;
    };
    auto in_level = [&](int i, int j) {
        return sign == TruncationSign::plus ? u.at(i, j) > k : u.at(i, j) < k;
    };
    auto slice_energy = [&](int j) {
        double s = 0.0;
        for (int i = 0; i < g.nx; ++i) {
            double w = trunc(i, j);
            double z = zeta.zeta.at(i, j);
            s += w * w * z * z * weight.at(i, j);
        }
        return s * g.dx;
    };

    rep.lhs_energy = slice_energy(t2);
    rep.rhs_t1 = slice_energy(t1);
    rep.lhs_energy_max = 0.0;
    for (int j = t1; j <= t2; ++j) rep.lhs_energy_max = std::max(rep.lhs_energy_max,
                                                                 slice_energy(j));

    const double dA = g.dx * g.dt;
    for (int j = t1; j <= t2; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            double w = trunc(i, j);
            double z = zeta.zeta.at(i, j);
            double dw, dz;
            if (i == 0) {
                dw = (trunc(1, j) - trunc(0, j)) / g.dx;
                dz = (zeta.zeta.at(1, j) - zeta.zeta.at(0, j)) / g.dx;
            } else if (i == g.nx - 1) {
                dw = (trunc(i, j) - trunc(i - 1, j)) / g.dx;
                dz = (zeta.zeta.at(i, j) - zeta.zeta.at(i - 1, j)) / g.dx;
            } else {
                dw = (trunc(i + 1, j) - trunc(i - 1, j)) / (2.0 * g.dx);
                dz = (zeta.zeta.at(i + 1, j) - zeta.zeta.at(i - 1, j)) / (2.0 * g.dx);
            }
            rep.lhs_gradient += dw * dw * z * z * dA;
            rep.term_dzeta += w * w * dz * dz * dA;
            rep.term_zeta += w * w * z * z * dA;
            if (include_level_term && in_level(i, j))
                rep.term_level += k * k * (z * z + dz * dz) * dA;
        }
    }
    // zeta zeta_t rho on staggered half-steps (forward-difference zeta_t).
    for (int j = t1; j < t2; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            double w2 = 0.5 * (trunc(i, j) * trunc(i, j) + trunc(i, j + 1) * trunc(i, j + 1));
            double zbar = 0.5 * (zeta.zeta.at(i, j) + zeta.zeta.at(i, j + 1));
            double zt = (zeta.zeta.at(i, j + 1) - zeta.zeta.at(i, j)) / g.dt;
            double rbar = 0.5 * (weight.at(i, j) + weight.at(i, j + 1));
            rep.term_zeta_t += w2 * zbar * zt * rbar * dA;
        }
    }

    double denom = rep.term_dzeta + rep.term_zeta_t + rep.term_zeta + rep.term_level;
    auto gamma_for = [&](double lhs_e) {
        double num = lhs_e + rep.lhs_gradient - rep.rhs_t1;
        if (num <= 0.0) return 0.0;
        if (denom <= 0.0) return std::numeric_limits<double>::infinity();
        return 2.0 * num / denom;
    };
    rep.gamma_required = gamma_for(rep.lhs_energy);
    rep.gamma_required_max = gamma_for(rep.lhs_energy_max);
    return rep;
}

GiustiResult giusti_iterate(double y0, double c, double b, double alpha, int max_h) {
    if (!(c > 0.0) || !(alpha > 0.0) || !(b > 1.0) || y0 < 0.0 || max_h < 1)
        throw ConfigError("giusti iteration requires c,alpha>0, b>1, y0>=0");
    GiustiResult res;
    res.threshold = std::pow(c, -1.0 / alpha) * std::pow(b, -1.0 / (alpha * alpha));
    double y = y0;
    res.sequence.push_back(y);
    for (int h = 0; h < max_h; ++h) {
        y = c * std::pow(b, (double)h) * std::pow(y, 1.0 + alpha);
        if (!std::isfinite(y) || y > 1e100) {
            res.converged = false;
            res.sequence.push_back(std::numeric_limits<double>::infinity());
            return res;
        }
        res.sequence.push_back(y);
    }
    res.converged = res.sequence.back() < 1e-12;
    return res;
}

} // namespace dglab
