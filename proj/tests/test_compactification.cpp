#include <doctest.h>

#include "lvhp/compactification.hpp"
#include "lvhp/integrator.hpp"
#include "lvhp/lv_model.hpp"
#include "lvhp/sampling.hpp"

using namespace lvhp;

namespace {

bool near(const Vec3& a, const Vec3& b, double tol) { return norm_inf(a - b) <= tol; }

// Five-point central difference of the closed form in t.
Vec3 differenced_flow(const FlowConstants& fc, double t, double h = 1e-3) {
    auto at = [&](double s) { return closed_form_flow(fc, s).vec(); };
    return (at(t - 2 * h) - 8.0 * at(t - h) + 8.0 * at(t + h) - at(t + 2 * h)) * (1.0 / (12.0 * h));
}

}  // namespace

TEST_CASE("chart coordinates") {
    const ChartState a = to_chart(Chart::U1, State(1, 2, 3));
    CHECK(a.vec() == Vec3(2, 3, 1));
    CHECK(to_chart(Chart::U1, State(2, 2, 2)).vec() == Vec3(1, 1, 0.5));
    CHECK_THROWS_AS(to_chart(Chart::U1, State(0, 1, 1)), DomainError);
    CHECK_THROWS_AS(to_chart(Chart::U1, State(-1, 1, 1)), DomainError);
    CHECK_THROWS_AS(to_chart(Chart::V1, State(1, 1, 1)), DomainError);
    CHECK(to_chart(Chart::V1, State(-2, 4, 1)).vec() == Vec3(-2, -0.5, 0.5));
    CHECK(to_chart(Chart::U2, State(1, 2, 3)).vec() == Vec3(0.5, 1.5, 0.5));
    CHECK(to_chart(Chart::U3, State(1, 2, 4)).vec() == Vec3(0.25, 0.5, 0.25));

    Sampler rng(31);
    for (Chart c : kAllCharts) {
        CHECK(parse_chart(to_string(c)) == c);
        for (int n = 0; n < 100; ++n) {
            const State p = rng.state(10.0);
            ChartState cs;
            try {
                cs = to_chart(c, p);
            } catch (const DomainError&) {
                continue;
            }
            CHECK(cs.z3 > 0.0);
            REQUIRE(near(from_chart(c, cs).vec(), p.vec(), 1e-12 * (1.0 + norm_inf(p.vec()))));
        }
    }
    CHECK_THROWS_AS(parse_chart("W1"), std::invalid_argument);
}

TEST_CASE("compactified field") {
    CHECK(compactified_field({1, 1, 3}) == Vec3(0, 0, -3));
    CHECK(compactified_field({0, 0, 0}) == Vec3(0, 0, 0));
    CHECK(compactified_field({0.5, 0.5, 1}) == Vec3(0.5, 0.5, 0));
}

TEST_CASE("V charts reverse the U flow") {
    Sampler rng(32);
    for (int n = 0; n < 1000; ++n) {
        const ChartState cs{rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(0, 3)};
        REQUIRE(chart_field(Chart::V1, cs) == -chart_field(Chart::U1, cs));
        REQUIRE(chart_field(Chart::V2, cs) == -chart_field(Chart::U2, cs));
        REQUIRE(chart_field(Chart::V3, cs) == -chart_field(Chart::U3, cs));
    }
}

TEST_CASE("pulled-back field equals the chart field in all six charts") {
    Sampler rng(33);
    for (Chart c : kAllCharts)
        for (int n = 0; n < 2000; ++n) {
            const ChartState cs{rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(0.01, 5)};
            const Vec3 a = pulled_back_field(c, cs);
            const Vec3 b = chart_field(c, cs);
            REQUIRE(near(a, b, 1e-9 * (1.0 + norm_inf(b))));
        }
}

TEST_CASE("U1 chart consistency with the original time") {
    // d/dt (y/x) along the field equals x * 2 z1 (1 - z1)
    Sampler rng(34);
    for (int n = 0; n < 10000; ++n) {
        const State p(rng.uniform(1e-3, 10), rng.uniform(-10, 10), rng.uniform(-10, 10));
        const Vec3 f = lv_field(p);
        const double direct = (f[1] * p.x() - p.y() * f[0]) / (p.x() * p.x());
        const double via_chart = p.x() * compactified_field(to_chart(Chart::U1, p))[0];
        REQUIRE(std::abs(direct - via_chart) <= 1e-8 * (1.0 + std::abs(direct)));
    }
}

TEST_CASE("closed-form flow") {
    const FlowConstants fc{1, 1, 2};
    CHECK(near(closed_form_flow(fc, 0).vec(), Vec3(0.5, 0.5, 1), 1e-15));
    // e^2 / (e^2 + 1) and 2e / (e^2 + 1)
    CHECK(near(closed_form_flow(fc, 1).vec(), Vec3(0.88079707797788244, 0.88079707797788244, 0.6480542736638854),
               1e-15));
    for (double t : {-2.0, 0.0, 1.5}) CHECK(near(closed_form_flow({0, 0, 1}, t).vec(), Vec3(1, 1, std::exp(-t)), 1e-15 * (1 + std::exp(-t))));

    try {
        closed_form_flow({-1.0, 1.0, 1.0}, 0.0);
        FAIL("expected a singular denominator");
    } catch (const DomainError& e) {
        REQUIRE(e.critical_time());
        CHECK(*e.critical_time() == doctest::Approx(0.0));
    }
}

TEST_CASE("fitted constants reproduce the initial condition") {
    const FlowConstants a = fit_constants({0.5, 0.5, 1});
    CHECK(a.alpha1 == 1.0);
    CHECK(a.alpha2 == 1.0);
    CHECK(a.k3 == doctest::Approx(2.0));
    const FlowConstants b = fit_constants({1, 1, 5});
    CHECK(b.alpha1 == 0.0);
    CHECK(b.alpha2 == 0.0);
    CHECK(b.k3 == 5.0);
    const FlowConstants c = fit_constants({2, 0.5, 0});
    CHECK(c.alpha1 == -0.5);
    CHECK(c.alpha2 == 1.0);
    CHECK(c.k3 == 0.0);
    CHECK_THROWS_AS(fit_constants({0, 0.5, 1}), DomainError);
    CHECK_THROWS_AS(fit_constants({0.5, 0, 1}), DomainError);

    Sampler rng(35);
    for (int n = 0; n < 1000; ++n) {
        ChartState cs{rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(0, 3)};
        if (cs.z1 == 0.0 || cs.z2 == 0.0) continue;
        REQUIRE(near(closed_form_flow(fit_constants(cs), 0.0).vec(), cs.vec(), 1e-12 * (1 + norm_inf(cs.vec()))));
    }
}

TEST_CASE("closed form satisfies the chart ODE") {
    Sampler rng(36);
    for (int n = 0; n < 100; ++n) {
        const FlowConstants fc{rng.uniform(0.05, 5), rng.uniform(0.05, 5), rng.uniform(-3, 3)};
        for (double t = -2.0; t <= 3.0; t += 0.25) {
            const Vec3 fd = differenced_flow(fc, t);
            const Vec3 field = compactified_field(closed_form_flow(fc, t));
            REQUIRE(near(fd, field, 1e-8));
        }
    }
}

TEST_CASE("numeric chart flow matches the closed form") {
    const ChartState cs0{0.5, 0.5, 1};
    const FlowConstants fc = fit_constants(cs0);
    for (Chart c : {Chart::U1, Chart::V2}) {
        const bool reversed = c == Chart::V2;
        const VectorField f = [c](const State& s) { return chart_field(c, {s.x(), s.y(), s.z()}); };
        const Trajectory traj = integrate(f, State(cs0.vec()), 3.0, IntegratorSettings::adaptive(1e-12));
        REQUIRE(traj.termination == Termination::completed);
        for (const auto& s : traj.samples)
            REQUIRE(near(s.state.vec(), closed_form_flow(fc, reversed ? -s.t : s.t).vec(), 1e-6));
    }
}

TEST_CASE("plane at infinity is invariant") {
    const VectorField f = [](const State& s) { return compactified_field({s.x(), s.y(), s.z()}); };
    for (auto s : {IntegratorSettings::adaptive(1e-10), IntegratorSettings::fixed(0.01)}) {
        const Trajectory traj = integrate(f, State(0.3, -0.2, 0.0), 3.0, s);
        for (const auto& smp : traj.samples) REQUIRE(smp.state.z() == 0.0);
    }
}

TEST_CASE("flow on the sphere at infinity") {
    CHECK(infinity_field(0.5, 0.5) == std::array<double, 2>{0.5, 0.5});
    CHECK(infinity_field(0, 1) == std::array<double, 2>{0, 0});
    CHECK(infinity_field(2, -1) == std::array<double, 2>{-4, -4});

    const auto eq = infinity_equilibria();
    REQUIRE(eq.size() == 4);
    int saddles = 0;
    for (const auto& e : eq) {
        CHECK(infinity_field(e.point[0], e.point[1]) == std::array<double, 2>{0, 0});
        if (e.point == std::array<double, 2>{0, 0}) {
            CHECK(e.eigenvalues == std::array<double, 2>{2, 2});
            CHECK(e.type == NodeType::repelling_node);
        } else if (e.point == std::array<double, 2>{1, 1}) {
            CHECK(e.eigenvalues == std::array<double, 2>{-2, -2});
            CHECK(e.type == NodeType::attracting_node);
        } else {
            CHECK(e.eigenvalues == std::array<double, 2>{2, -2});
            CHECK(e.type == NodeType::saddle);
            ++saddles;
        }
    }
    CHECK(saddles == 2);

    const auto grid = infinity_field_grid(-0.5, 1.5, 5);
    CHECK(grid.size() == 25);
    CHECK(grid.front().z1 == -0.5);
    CHECK(grid.back().z2 == 1.5);
    CHECK_THROWS_AS(infinity_field_grid(0, 1, 1), std::invalid_argument);
}
