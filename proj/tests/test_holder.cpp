#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "dglab/holder.hpp"

using namespace dglab;

namespace {

WeightField flat_field(Grid g, double iface_q) {
    WeightField f;
    f.grid = g;
    f.part = RegionPartition::from_line(g, 0.0, iface_q);
    f.rho.assign(g.n_nodes(), 1.0);
    return f;
}

} // namespace

TEST_CASE("oscillation over node sets") {
    Grid g = Grid::make(0.0, 1.0, 1.0, 11, 11);
    ScalarField u(g);
    for (int j = 0; j < g.nt; ++j)
        for (int i = 0; i < g.nx; ++i) u.at(i, j) = g.x(i);
    NodeSet b = ball(g, 0.5, 0.25, 5); // nodes 0.3..0.7
    CHECK(oscillation(u, b) == doctest::Approx(0.4));
    NodeSet empty(g, NodeSet::Kind::slice);
    CHECK_THROWS_AS(oscillation(u, empty), EmptySet);
}

TEST_CASE("linear profile fits exponent one") {
    Grid g = Grid::make(-1.0, 1.0, 1.0, 401, 401);
    WeightField f = flat_field(g, 0.9);
    ScalarField u(g);
    for (int j = 0; j < g.nt; ++j)
        for (int i = 0; i < g.nx; ++i) u.at(i, j) = 2.0 + g.x(i);
    OscillationTrace tr = holder_fit(u, f, 0.0, 0.5, {0.2, 0.15, 0.1, 0.07, 0.05});
    CHECK(!tr.zero_oscillation);
    // osc over B_r is 2r up to node rounding: slope 1 in log-log.
    CHECK(tr.alpha == doctest::Approx(1.0).epsilon(0.05));
    CHECK(tr.radii.size() == 5);
}

TEST_CASE("square-root cusp fits exponent one half") {
    Grid g = Grid::make(-1.0, 1.0, 1.0, 801, 401);
    WeightField f = flat_field(g, 0.9);
    ScalarField u(g);
    for (int j = 0; j < g.nt; ++j)
        for (int i = 0; i < g.nx; ++i) u.at(i, j) = std::sqrt(std::abs(g.x(i)));
    OscillationTrace tr = holder_fit(u, f, 0.0, 0.5, {0.2, 0.15, 0.1, 0.07, 0.05});
    CHECK(tr.alpha == doctest::Approx(0.5).epsilon(0.05));
}

TEST_CASE("constant field reports the zero-oscillation sentinel") {
    Grid g = Grid::make(-1.0, 1.0, 1.0, 201, 201);
    WeightField f = flat_field(g, 0.9);
    ScalarField u(g);
    for (double& v : u.v) v = 7.0;
    OscillationTrace tr = holder_fit(u, f, 0.0, 0.5, {0.2, 0.1, 0.05});
    CHECK(tr.zero_oscillation);
    CHECK(std::isinf(tr.alpha));
}

TEST_CASE("interface probe takes the worse of the two sides") {
    Grid g = Grid::make(-1.0, 1.0, 1.0, 401, 401);
    WeightField f = flat_field(g, 0.0);
    ScalarField u(g);
    // Flat on region 1, square-root growth on region 2: the fit at the
    // interface reports the smaller exponent (the region-2 side, ~1/2).
    for (int j = 0; j < g.nt; ++j)
        for (int i = 0; i < g.nx; ++i)
            u.at(i, j) = g.x(i) > 0.0 ? std::sqrt(g.x(i)) : 0.0;
    OscillationTrace tr = holder_fit(u, f, 0.0, 0.5, {0.2, 0.15, 0.1, 0.07, 0.05});
    CHECK(!tr.zero_oscillation);
    CHECK(tr.alpha < 0.7);
    CHECK(tr.alpha > 0.3);
}

TEST_CASE("interface example check detects a persistent jump") {
    Grid g = Grid::make(-1.0, 1.0, 2.0, 201, 201);
    WeightField f = flat_field(g, 0.0);
    // Synthetic limit: jump in time at t=1 localized around x=0.5, smooth at
    // the continuity probes.
    ScalarField u(g);
    for (int j = 0; j < g.nt; ++j)
        for (int i = 0; i < g.nx; ++i) {
            double x = g.x(i), t = g.t(j);
            double bump = std::max(0.0, 1.0 - std::abs(x - 0.5) / 0.45);
            u.at(i, j) = 1.0 + (t > 1.0 ? bump : 0.0) + 0.05 * x;
        }
    std::vector<std::pair<double, double>> probes = {{-0.5, 0.5}, {-0.5, 1.5}};
    InterfaceExampleReport rep =
        interface_example_check(u, f, 0.5, 1.0, probes, {0.2, 0.15, 0.1, 0.07, 0.05});
    CHECK(rep.jump == doctest::Approx(1.0));
    CHECK(rep.discontinuity_confirmed);
    CHECK(rep.box_osc.size() == 4);
    for (double o : rep.box_osc) CHECK(o >= 0.9 * rep.jump);
    REQUIRE(rep.continuity_probes.size() == 2);
    for (const auto& pr : rep.continuity_probes) CHECK(pr.pass);
    CHECK(rep.pass);
}

TEST_CASE("interface example check fails for a continuous field") {
    Grid g = Grid::make(-1.0, 1.0, 2.0, 201, 201);
    WeightField f = flat_field(g, 0.0);
    ScalarField u(g);
    for (int j = 0; j < g.nt; ++j)
        for (int i = 0; i < g.nx; ++i) u.at(i, j) = g.x(i);
    InterfaceExampleReport rep =
        interface_example_check(u, f, 0.5, 1.0, {}, {0.2, 0.1, 0.05});
    CHECK(rep.jump == 0.0);
    CHECK(!rep.pass); // no persistent jump at the probe point
}

TEST_CASE("time-boundary discontinuity probes are rejected") {
    Grid g = Grid::make(-1.0, 1.0, 1.0, 101, 101);
    WeightField f = flat_field(g, 0.0);
    ScalarField u(g);
    CHECK_THROWS_AS(interface_example_check(u, f, 0.5, 0.0, {}, {0.1}), ScenarioMissing);
}
