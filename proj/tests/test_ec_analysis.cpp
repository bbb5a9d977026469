#include <doctest.h>

#include "lvhp/ec_analysis.hpp"
#include "lvhp/sampling.hpp"

using namespace lvhp;
using S = StratumLabel;

TEST_CASE("energy-Casimir map") {
    CHECK(ec(State(1, 2, 3)) == ECValue{-1, 4});
    CHECK(ec(State(0, 0, 0)) == ECValue{0, 0});
    CHECK(ec(State(2, 0, 2)) == ECValue{-4, 0});
}

TEST_CASE("classification of the probe values") {
    CHECK(classify({-1, 1}) == S::Sigma1Left);
    CHECK(classify({0, 1}) == S::Sigma1Star);
    CHECK(classify({2, 1}) == S::Sigma1Right);
    CHECK(classify({-1, 0}) == S::Sigma2);
    CHECK(classify({0, 0}) == S::Sigma0);
    CHECK(classify({3, 0}) == S::Sigma0Right);
    CHECK(classify({1, -2}) == S::Sigma3Left);
    CHECK(classify({2, -2}) == S::Sigma3Star);
    CHECK(classify({2, -1}) == S::Sigma3Right);
    // c < 0 with h < 0 always falls left of c = -h
    CHECK(classify({-3, -1}) == S::Sigma3Left);
    CHECK_THROWS_AS(classify({std::nan(""), 0}), std::invalid_argument);
    CHECK(std::string(to_string(S::Sigma3Star)) == "Sigma3Star");
}

TEST_CASE("strata partition the plane") {
    Sampler rng(41);
    auto check_point = [](const ECValue& v) {
        int hits = 0;
        for (S s : kAllStrata) hits += in_stratum(s, v) ? 1 : 0;
        REQUIRE(hits == 1);
        REQUIRE(in_stratum(classify(v), v));
    };
    for (int n = 0; n < 100000; ++n) check_point(rng.ec_value(20.0));
    // boundaries have measure zero, so probe them directly
    for (double t : {-3.0, -0.5, 0.0, 0.5, 3.0}) {
        check_point({t, 0.0});
        check_point({0.0, t});
        check_point({t, -t});
    }
}

TEST_CASE("snap tolerance") {
    CHECK(classify(snap({1e-13, 2}, 0)) == S::Sigma1Right);
    CHECK(classify(snap({1e-13, 2}, 1e-12)) == S::Sigma1Star);
    CHECK(classify(snap({2, -2 + 1e-13}, 1e-12)) == S::Sigma3Star);
    CHECK(classify(snap({-1e-14, 1e-14}, 1e-12)) == S::Sigma0);
    CHECK_THROWS_AS(snap({0, 0}, -1), std::invalid_argument);
}

TEST_CASE("equilibrium images") {
    CHECK(equilibrium_image(Family::E1, 2) == ECValue{0, 4});
    CHECK(equilibrium_image(Family::E2, 2) == ECValue{-4, 0});
    CHECK(equilibrium_image(Family::E3, 2) == ECValue{4, -4});
    CHECK(classify(equilibrium_image(Family::E1, 2)) == S::Sigma1Star);
    CHECK(classify(equilibrium_image(Family::E2, 2)) == S::Sigma2);
    CHECK(classify(equilibrium_image(Family::E3, 2)) == S::Sigma3Star);

    const S expected[] = {S::Sigma1Star, S::Sigma2, S::Sigma3Star};
    for (Family f : kAllFamilies)
        for (double m = -10.0; m <= 10.0; m += 0.5) {
            const ECValue img = equilibrium_image(f, m);
            REQUIRE(img == ec(equilibrium(f, m)));
            REQUIRE(classify(img) == (m == 0.0 ? S::Sigma0 : expected[static_cast<int>(f)]));
        }
}

TEST_CASE("symplectic leaves") {
    CHECK(leaf_type(4).kind == LeafKind::hyperbolic_cylinder);
    CHECK(leaf_type(0).kind == LeafKind::intersecting_planes);
    CHECK(leaf_type(-1).kind == LeafKind::hyperbolic_cylinder);
}

TEST_CASE("fiber seeds") {
    CHECK(fiber_seed({-1, 4}) == State(1, 2, 3));
    CHECK(fiber_seed({0, 0}) == State(0, 0, 0));
    CHECK(fiber_seed({0, -1}) == State(0, 1, -1));

    Sampler rng(42);
    for (int n = 0; n < 100000; ++n) {
        const ECValue v = rng.ec_value(20.0);
        const State p = fiber_seed(v);
        const ECValue back = ec(p);
        REQUIRE(std::abs(back.h - v.h) <= 1e-10 * std::max(1.0, std::abs(v.h)));
        REQUIRE(std::abs(back.c - v.c) <= 1e-10 * std::max(1.0, std::abs(v.c)));
        REQUIRE(std::abs(p.y() * (p.z() - p.x()) - v.c) <= 1e-10 * std::max(1.0, std::abs(v.c)));
    }
    // seeds that need the doubling search and the cancellation-free root
    for (const ECValue v : {ECValue{-50, -100}, ECValue{-1e-3, -7}, ECValue{400, -30}, ECValue{-5, 0}}) {
        const ECValue back = ec(fiber_seed(v));
        CHECK(back.h == doctest::Approx(v.h).epsilon(1e-12));
        CHECK(back.c == doctest::Approx(v.c).epsilon(1e-12));
    }
}

TEST_CASE("conic witness") {
    auto rebuild = [](const ConicWeights& w) { return ECValue{-w.w2 + w.w3, w.w1 - w.w3}; };
    const ConicWeights a = convex_generation_witness({0, 1});
    CHECK((a.w1 == 1 && a.w2 == 0 && a.w3 == 0));
    const ConicWeights b = convex_generation_witness({1, -1});
    CHECK((b.w1 == 0 && b.w2 == 0 && b.w3 == 1));
    const ConicWeights c = convex_generation_witness({5, 3});
    CHECK((c.w1 == 8 && c.w2 == 0 && c.w3 == 5));

    Sampler rng(43);
    for (int n = 0; n < 100000; ++n) {
        const ECValue v = rng.ec_value(20.0);
        const ConicWeights w = convex_generation_witness(v);
        REQUIRE(w.w1 >= 0);
        REQUIRE(w.w2 >= 0);
        REQUIRE(w.w3 >= 0);
        const ECValue r = rebuild(w);
        REQUIRE(std::abs(r.h - v.h) <= 1e-12 * std::max(1.0, std::abs(v.h)) * 4);
        REQUIRE(std::abs(r.c - v.c) <= 1e-12 * std::max(1.0, std::abs(v.c)) * 4);
    }
}
