#ifndef DGLAB_GEOMETRY_HPP
#define DGLAB_GEOMETRY_HPP

#include "dglab/grid.hpp"

namespace dglab {

enum class TimeDirection { past, future };

// j convention for region-restricted operations: 1, 2 select a region,
// 0 means "full" (no restriction).
constexpr int REGION_FULL = 0;

// Nodes with |x - x0| < r in one time slice.  A degenerate radius below the
// node spacing yields the single nearest node.
NodeSet ball(const Grid& g, double x0, double r, int t_index);

// Intersection of a single-slice set with region j (j=0: identity copy).
NodeSet region_slice(const NodeSet& ball_set, const RegionPartition& part, int j);

// Convenience: region-restricted ball.
NodeSet ball_region(const Grid& g, const RegionPartition& part, double x0, double r,
                    int t_index, int j);

// Union of region-restricted balls over the discrete time range
// [t0 - theta*r^2*h, t0] (direction past) or [t0, t0 + theta*r^2*h] (future).
NodeSet cylinder(const Grid& g, const RegionPartition& part, double x0, double t0,
                 double r, double theta, double h, TimeDirection dir, int j);

// Two-component enlargement of a ball/cylinder-like set centered at x0:
// sigma1 dilates each slice across the complementary region (or both ways for
// j=0), sigma2 replicates the far-time-end slice outward.
NodeSet enlarge(const Grid& g, const RegionPartition& part, const NodeSet& set,
                double x0, double sigma1, double sigma2, int j, TimeDirection dir);

// Discrete paraboloid: union over radii rho in {dx, 2dx, ..., r} of the
// region-restricted ball B_rho(x0) at slice nearest to t0 + rho^2*h
// (past-opening variant uses t0 - rho^2*h).
NodeSet paraboloid(const Grid& g, const RegionPartition& part, double x0, double t0,
                   double r, double h, int j,
                   TimeDirection dir = TimeDirection::future);

} // namespace dglab

#endif
