#include "dglab/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace dglab {

namespace {
constexpr double kSnap = 1e-12;
}

NodeSet ball(const Grid& g, double x0, double r, int t_index) {
    if (!(r > 0.0)) throw BallExceedsDomain("radius must be positive");
    if (x0 - r < g.x_lo - kSnap || x0 + r > g.x_hi + kSnap)
        throw BallExceedsDomain("B_r(x0) not contained in the spatial domain");
    if (t_index < 0 || t_index >= g.nt) throw BallExceedsDomain("slice index out of range");
    NodeSet s(g, NodeSet::Kind::slice);
    bool any = false;
    for (int i = 0; i < g.nx; ++i) {
        if (std::abs(g.x(i) - x0) < r - kSnap) {
            s.add(i, t_index);
            any = true;
        }
    }
    if (!any) s.add(g.nearest_x(x0), t_index);
    return s;
}

NodeSet region_slice(const NodeSet& ball_set, const RegionPartition& part, int j) {
    if (j == REGION_FULL) return ball_set;
    NodeSet res = ball_set;
    res.subtract(ball_set); // empty set with matching dims/kind
    ball_set.for_each([&](int i, int jt) {
        Region lab = part.label(i, jt);
        if ((j == 1 && lab == Region::region1) || (j == 2 && lab == Region::region2))
            res.add(i, jt);
    });
    return res;
}

NodeSet ball_region(const Grid& g, const RegionPartition& part, double x0, double r,
                    int t_index, int j) {
    return region_slice(ball(g, x0, r, t_index), part, j);
}

NodeSet cylinder(const Grid& g, const RegionPartition& part, double x0, double t0,
                 double r, double theta, double h, TimeDirection dir, int j) {
    double span = theta * r * r * h;
    double ta = (dir == TimeDirection::past) ? t0 - span : t0;
    double tb = (dir == TimeDirection::past) ? t0 : t0 + span;
    if (ta < -kSnap || tb > g.t_hi + kSnap)
        throw CylinderExceedsDomain("time interval outside [0,T]");
    int ja = g.nearest_slice(ta);
    int jb = g.nearest_slice(tb);
    NodeSet out(g, NodeSet::Kind::spacetime);
    for (int jt = ja; jt <= jb; ++jt)
        out.unite(ball_region(g, part, x0, r, jt, j));
    out.set_kind(NodeSet::Kind::spacetime);
    return out;
}

NodeSet enlarge(const Grid& g, const RegionPartition& part, const NodeSet& set,
                double x0, double sigma1, double sigma2, int j, TimeDirection dir) {
    if (sigma1 < 0.0 || sigma2 < 0.0)
        throw EnlargementExceedsDomain("sigma components must be nonnegative");
    NodeSet out = set;
    auto [j_lo, j_hi] = set.slice_span();
    if (j_lo < 0) return out;

    // Spatial dilation per slice.
    if (sigma1 > 0.0) {
        for (int jt = j_lo; jt <= j_hi; ++jt) {
            double r_max = -1.0;
            for (int i = 0; i < g.nx; ++i)
                if (set.contains(i, jt)) r_max = std::max(r_max, std::abs(g.x(i) - x0));
            if (r_max < 0.0) continue;
            for (int i = 0; i < g.nx; ++i) {
                if (set.contains(i, jt)) continue;
                double d = std::abs(g.x(i) - x0);
                bool add = false;
                if (j == REGION_FULL) {
                    add = d <= r_max + sigma1 * (1.0 + kSnap);
                } else {
                    Region lab = part.label(i, jt);
                    bool in_j = (j == 1 && lab == Region::region1) ||
                                (j == 2 && lab == Region::region2);
                    add = !in_j && d <= sigma1 * (1.0 + kSnap) &&
                          d < r_max + 0.5 * g.dx;
                }
                if (add) {
                    if (g.x(i) < g.x_lo - kSnap || g.x(i) > g.x_hi + kSnap)
                        throw EnlargementExceedsDomain("spatial dilation leaves domain");
                    out.add(i, jt);
                }
            }
        }
    }

    // Temporal extension at the far-time end: replicate the far-end slice.
    int n2 = (int)std::floor(sigma2 / g.dt + 0.5 + kSnap);
    if (n2 > 0) {
        int far = (dir == TimeDirection::past) ? j_lo : j_hi;
        int step = (dir == TimeDirection::past) ? -1 : +1;
        if (far + step * n2 < 0 || far + step * n2 > g.nt - 1)
            throw EnlargementExceedsDomain("temporal extension leaves [0,T]");
        for (int m = 1; m <= n2; ++m)
            for (int i = 0; i < g.nx; ++i)
                if (out.contains(i, far)) out.add(i, far + step * m);
    }
    out.set_kind(set.kind() == NodeSet::Kind::slice && n2 == 0 ? NodeSet::Kind::slice
                                                               : NodeSet::Kind::spacetime);
    if (set.kind() == NodeSet::Kind::spacetime) out.set_kind(NodeSet::Kind::spacetime);
    return out;
}

NodeSet paraboloid(const Grid& g, const RegionPartition& part, double x0, double t0,
                   double r, double h, int j, TimeDirection dir) {
    if (!(r > 0.0)) throw CylinderExceedsDomain("paraboloid radius must be positive");
    double sgn = (dir == TimeDirection::future) ? 1.0 : -1.0;
    double t_end = t0 + sgn * r * r * h;
    if (t0 < -kSnap || t0 > g.t_hi + kSnap || t_end < -kSnap || t_end > g.t_hi + kSnap)
        throw CylinderExceedsDomain("paraboloid time range outside [0,T]");
    NodeSet out(g, NodeSet::Kind::spacetime);
    int m_max = (int)std::floor(r / g.dx + kSnap);
    std::vector<double> radii;
    for (int m = 1; m <= m_max; ++m) radii.push_back(m * g.dx);
    if (radii.empty() || r - radii.back() > 1e-12) radii.push_back(r);
    for (double rho : radii) {
        int jt = g.nearest_slice(t0 + sgn * rho * rho * h);
        out.unite(ball_region(g, part, x0, rho, jt, j));
    }
    return out;
}

} // namespace dglab
