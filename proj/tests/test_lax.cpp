#include <doctest.h>

#include "lvhp/lax.hpp"
#include "lvhp/lv_model.hpp"
#include "lvhp/sampling.hpp"

using namespace lvhp;

TEST_CASE("Lax matrices at a point") {
    const LaxPair lp = lax_pair(State(1, 2, 3));
    CHECK(lp.l(0, 1) == Complex(-1, 0));
    CHECK(lp.l(0, 2) == Complex(3, 0));
    CHECK(lp.l(1, 2) == Complex(0, 0));
    CHECK(lp.b(0, 1) == Complex(0, 3));
    CHECK(lp.b(0, 2) == Complex(0, -1));
    CHECK(lp.b(1, 1) == Complex(0, 0));
    CHECK(lp.l.trace() == Complex(0, 0));
}

TEST_CASE("dL/dt matches a finite difference along the flow") {
    const State p(0.7, -1.3, 0.4);
    const Vec3 v = lv_field(p);
    const double eps = 1e-6;
    const ComplexMat3 lp = lax_pair(State(p.vec() + eps * v)).l;
    const ComplexMat3 lm = lax_pair(State(p.vec() - eps * v)).l;
    const ComplexMat3 d = lax_derivative(p);
    for (std::size_t k = 0; k < 9; ++k)
        CHECK(std::abs((lp.m[k] - lm.m[k]) / (2 * eps) - d.m[k]) < 1e-8);
}

TEST_CASE("Lax equation holds with dL/dt = LB - BL") {
    CHECK(lax_residual(State(1, 2, 3)) == 0.0);
    Sampler rng(7);
    for (int n = 0; n < 10000; ++n) REQUIRE(lax_residual(rng.state(10.0)) <= 1e-10);

    // the opposite commutator does not hold
    const State p(1, 2, 3);
    const LaxPair lp = lax_pair(p);
    CHECK(max_modulus(lax_derivative(p) - (lp.b * lp.l - lp.l * lp.b)) > 1.0);
}

TEST_CASE("trace of L squared") {
    const SpectralInvariant s = spectral_invariant(State(1, 2, 3));
    // H = -1, C = 4
    CHECK(s.reference == -20.0);
    CHECK(s.trace_l2 == Complex(-20.0, 0.0));

    Sampler rng(8);
    for (int n = 0; n < 10000; ++n) {
        const SpectralInvariant t = spectral_invariant(rng.state(10.0));
        REQUIRE(std::abs(t.trace_l2 - t.reference) <= 1e-10 * std::max(1.0, std::abs(t.reference)));
        REQUIRE(std::abs(t.trace_l2.imag()) <= 1e-12);
    }
}

TEST_CASE("tr L^3 vanishes") {
    const LaxPair lp = lax_pair(State(1.5, -0.5, 2.0));
    CHECK(std::abs((lp.l * lp.l * lp.l).trace()) < 1e-12);
}
