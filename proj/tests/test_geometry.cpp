#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "dglab/geometry.hpp"

using namespace dglab;

TEST_CASE("grid construction and node coordinates") {
    Grid g = Grid::make(0.0, 1.0, 1.0, 11, 6);
    CHECK(g.dx == doctest::Approx(0.1));
    CHECK(g.dt == doctest::Approx(0.2));
    CHECK(g.x(0) == 0.0);
    CHECK(g.x(10) == doctest::Approx(1.0));
    CHECK(g.t(5) == doctest::Approx(1.0));
    CHECK(g.n_nodes() == 66);

    CHECK_THROWS_AS(Grid::make(1.0, 0.0, 1.0, 11, 6), ConfigError);
    CHECK_THROWS_AS(Grid::make(0.0, 1.0, -1.0, 11, 6), ConfigError);
    CHECK_THROWS_AS(Grid::make(0.0, 1.0, 1.0, 1, 6), ConfigError);
}

TEST_CASE("nearest node and slice snap consistently") {
    Grid g = Grid::make(0.0, 1.0, 1.0, 11, 11);
    CHECK(g.nearest_x(0.52) == 5);
    CHECK(g.nearest_x(0.58) == 6);
    // Exact midpoints after grid-aligned algebra round up via the snap term.
    CHECK(g.nearest_x(0.3 + 0.2) == 5);
    CHECK(g.nearest_slice(0.25) == 3); // floor(2.5 + 0.5 + eps)
    CHECK(g.nearest_slice(-0.4) == 0);
    CHECK(g.nearest_slice(9.0) == 10);
}

TEST_CASE("ball membership is strict") {
    Grid g = Grid::make(0.0, 1.0, 1.0, 11, 3);
    // |x - 0.5| < 0.2 on nodes {0.4, 0.5, 0.6}: boundary nodes 0.3, 0.7 excluded.
    NodeSet b = ball(g, 0.5, 0.2, 1);
    CHECK(b.count() == 3);
    CHECK(b.contains(4, 1));
    CHECK(b.contains(5, 1));
    CHECK(b.contains(6, 1));
    CHECK(!b.contains(3, 1));
    CHECK(b.kind() == NodeSet::Kind::slice);
    CHECK(b.measure() == doctest::Approx(3 * g.dx));
}

TEST_CASE("degenerate radius yields single nearest node") {
    Grid g = Grid::make(0.0, 1.0, 1.0, 11, 3);
    NodeSet b = ball(g, 0.52, 0.01, 0);
    CHECK(b.count() == 1);
    CHECK(b.contains(5, 0));
}

TEST_CASE("ball domain checks") {
    Grid g = Grid::make(0.0, 1.0, 1.0, 11, 3);
    CHECK_THROWS_AS(ball(g, 0.1, 0.3, 0), BallExceedsDomain);
    CHECK_THROWS_AS(ball(g, 0.5, -0.1, 0), BallExceedsDomain);
    CHECK_THROWS_AS(ball(g, 0.5, 0.2, 7), BallExceedsDomain);
    // Touching the boundary exactly is admitted (closure tolerance).
    CHECK_NOTHROW(ball(g, 0.5, 0.5, 0));
}

TEST_CASE("region partition from a line") {
    Grid g = Grid::make(-1.0, 1.0, 1.0, 21, 11);
    RegionPartition p = RegionPartition::from_line(g, 0.0, 0.0);
    CHECK(p.interface_index(0) == 10);
    CHECK(p.label(9, 0) == Region::region1);
    CHECK(p.label(10, 0) == Region::interface_);
    CHECK(p.label(11, 0) == Region::region2);

    RegionPartition q = RegionPartition::from_line(g, 0.5, 0.0);
    CHECK(q.interface_index(10) == g.nearest_x(0.5));

    // Interface leaving the interior is rejected.
    CHECK_THROWS_AS(RegionPartition::from_line(g, 0.0, 1.0), NonPartitioned);
    CHECK_THROWS_AS(RegionPartition::from_line(g, 2.5, 0.0), NonPartitioned);
}

TEST_CASE("region-restricted ball excludes the interface node") {
    Grid g = Grid::make(-1.0, 1.0, 1.0, 21, 3);
    RegionPartition p = RegionPartition::from_line(g, 0.0, 0.0);
    NodeSet full = ball(g, 0.0, 0.25, 1); // nodes {-0.2,-0.1,0,0.1,0.2}
    CHECK(full.count() == 5);
    NodeSet b1 = region_slice(full, p, 1);
    NodeSet b2 = region_slice(full, p, 2);
    CHECK(b1.count() == 2);
    CHECK(b2.count() == 2);
    CHECK(b1.subset_of(full));
    CHECK(b2.subset_of(full));
    NodeSet u = b1;
    u.unite(b2);
    CHECK(u.count() == 4); // interface node dropped
    CHECK(region_slice(full, p, REGION_FULL).count() == 5);
}

TEST_CASE("cylinder covers the discrete time range") {
    Grid g = Grid::make(-1.0, 1.0, 1.0, 21, 101); // dt = 0.01
    RegionPartition p = RegionPartition::from_line(g, 0.0, 0.0);
    // past cylinder over (t0 - theta r^2 h, t0), t0=0.5, r=0.2, theta=1, h=1.
    NodeSet c = cylinder(g, p, 0.5, 0.5, 0.2, 1.0, 1.0, TimeDirection::past, REGION_FULL);
    auto [jlo, jhi] = c.slice_span();
    CHECK(jlo == g.nearest_slice(0.5 - 0.04));
    CHECK(jhi == g.nearest_slice(0.5));
    CHECK(c.kind() == NodeSet::Kind::spacetime);
    // each slice carries the strict ball (3 nodes at dx=0.1, r=0.2)
    CHECK(c.count() == (jhi - jlo + 1) * 3);

    NodeSet cf = cylinder(g, p, 0.5, 0.5, 0.2, 1.0, 1.0, TimeDirection::future, REGION_FULL);
    auto [flo, fhi] = cf.slice_span();
    CHECK(flo == g.nearest_slice(0.5));
    CHECK(fhi == g.nearest_slice(0.54));

    CHECK_THROWS_AS(cylinder(g, p, 0.5, 0.02, 0.2, 1.0, 1.0, TimeDirection::past, 0),
                    CylinderExceedsDomain);
}

TEST_CASE("enlarge dilates space and replicates the far slice in time") {
    Grid g = Grid::make(-1.0, 1.0, 1.0, 21, 101);
    RegionPartition p = RegionPartition::from_line(g, 0.0, 0.0);
    NodeSet c = cylinder(g, p, 0.3, 0.5, 0.2, 1.0, 1.0, TimeDirection::past, REGION_FULL);
    long n0 = c.count();
    auto [jlo, jhi] = c.slice_span();

    NodeSet e1 = enlarge(g, p, c, 0.3, 0.1, 0.0, REGION_FULL, TimeDirection::past);
    CHECK(c.subset_of(e1));
    CHECK(e1.count() > n0);
    auto [elo, ehi] = e1.slice_span();
    CHECK(elo == jlo);
    CHECK(ehi == jhi);

    NodeSet e2 = enlarge(g, p, c, 0.3, 0.0, 0.05, REGION_FULL, TimeDirection::past);
    auto [plo, phi] = e2.slice_span();
    CHECK(phi == jhi);
    CHECK(plo == jlo - 5); // 0.05 / dt = 5 extra slices into the past
    CHECK(c.subset_of(e2));

    CHECK_THROWS_AS(enlarge(g, p, c, 0.3, -0.1, 0.0, 0, TimeDirection::past),
                    EnlargementExceedsDomain);
    CHECK_THROWS_AS(enlarge(g, p, c, 0.3, 0.0, 2.0, 0, TimeDirection::past),
                    EnlargementExceedsDomain);
}

TEST_CASE("paraboloid is contained in the matching cylinder") {
    Grid g = Grid::make(-1.0, 1.0, 1.0, 201, 201);
    RegionPartition p = RegionPartition::from_line(g, 0.0, 0.0);
    double x0 = 0.4, t0 = 0.3, r = 0.2, h = 1.5;
    NodeSet par = paraboloid(g, p, x0, t0, r, h, 2, TimeDirection::future);
    NodeSet cyl = cylinder(g, p, x0, t0, r, 1.0, h, TimeDirection::future, 2);
    CHECK(!par.empty());
    CHECK(par.subset_of(cyl));
    // The far-end slice carries the full region-restricted ball of radius r.
    int j_end = g.nearest_slice(t0 + r * r * h);
    NodeSet end_ball = ball_region(g, p, x0, r, j_end, 2);
    CHECK(end_ball.subset_of(par));
}

TEST_CASE("node set algebra") {
    Grid g = Grid::make(0.0, 1.0, 1.0, 11, 3);
    NodeSet a = ball(g, 0.3, 0.2, 1);
    NodeSet b = ball(g, 0.5, 0.2, 1);
    NodeSet u = a;
    u.unite(b);
    NodeSet i = a;
    i.intersect(b);
    NodeSet d = a;
    d.subtract(b);
    CHECK(u.count() == a.count() + b.count() - i.count());
    CHECK(d.count() == a.count() - i.count());
    CHECK(i.subset_of(a));
    CHECK(i.subset_of(b));
    CHECK(a.subset_of(u));
}
