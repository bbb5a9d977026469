#include <doctest.h>

#include "lvhp/fibers.hpp"

using namespace lvhp;
using S = StratumLabel;

TEST_CASE("table rows") {
    CHECK(expected_row(S::Sigma1Left).level_set_components == 4);
    CHECK(expected_row(S::Sigma1Left).orbit_count == 4);
    CHECK(expected_row(S::Sigma2).level_set_components == 2);
    CHECK(expected_row(S::Sigma2).orbit_count == 8);
    CHECK(expected_row(S::Sigma2).equilibria == 2);
    CHECK(expected_row(S::Sigma0).level_set_components == 1);
    CHECK(expected_row(S::Sigma0).equilibria == 1);
}

TEST_CASE("equilibria on a fiber") {
    CHECK(fiber_equilibria({0, 4}).size() == 2);
    CHECK(fiber_equilibria({-9, 0}).size() == 2);
    CHECK(fiber_equilibria({1, -1}).size() == 2);
    CHECK(fiber_equilibria({0, 0}).size() == 1);
    CHECK(fiber_equilibria({2, 1}).empty());
    for (const State& e : fiber_equilibria({1, -1})) {
        CHECK(ec(e) == ECValue{1, -1});
        CHECK(e.z() == 0.0);
    }
}

TEST_CASE("rasterizer argument checks") {
    CHECK_THROWS_AS(rasterize_fiber({0, 1}, {6.0, 40, 1.0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(rasterize_fiber({0, 1}, {0.0, 81, 1.0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(rasterize_fiber({0, 1}, {6.0, 81, 0.0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(rasterize_fiber({1e6, 1e6}, {1.0, 41, 1.0, 1}), DomainError);
}

TEST_CASE("component counts on a coarse grid") {
    // the generic c < 0 strata need the finer default grid; these do not
    const FiberGridOptions coarse{6.0, 81, 1.0, 1};
    CHECK(count_components({-1, 1}, 6.0, 81, 1.0, 1) == 4);
    CHECK(rasterize_fiber({0, 1}, coarse).core_components == 2);
    CHECK(rasterize_fiber({-1, 0}, coarse).core_components == 2);
    CHECK(rasterize_fiber({0, 0}, coarse).core_components == 1);
    CHECK(rasterize_fiber({2, -2}, coarse).core_components == 2);
}

TEST_CASE("marking does not depend on the worker count") {
    const FiberRaster one = rasterize_fiber({2, 1}, {6.0, 81, 1.0, 1});
    const FiberRaster three = rasterize_fiber({2, 1}, {6.0, 81, 1.0, 3});
    CHECK(one.marked_cells == three.marked_cells);
    CHECK(one.total_components == three.total_components);
    CHECK(one.core_components == three.core_components);
}

TEST_CASE("fiber report") {
    const FiberReport r = fiber_report({2, -1});
    CHECK(r.stratum == S::Sigma3Right);
    CHECK(r.level_set_components == 4);
    CHECK(r.orbit_count == 4);
    CHECK(r.equilibria_on_fiber.empty());
    CHECK(r.agrees);
}

TEST_CASE("orbits stay on their fiber") {
    for (const ECValue v : {ECValue{-1, 1}, ECValue{2, 1}, ECValue{1, -2}, ECValue{3, 0}}) {
        const FiberOrbitCheck chk = orbit_on_fiber_check(v, 2.0);
        CHECK(chk.max_deviation < 1e-8);
        CHECK(chk.termination == Termination::blow_up);
    }
}
