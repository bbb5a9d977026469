#include "lvhp/lv_model.hpp"

#include <cmath>
#include <stdexcept>

namespace lvhp {

Vec3 lv_field(const State& p) {
    const double x = p.x(), y = p.y(), z = p.z();
    return {-x * (x - y - z), -y * (-x + y - z), -z * (-x - y + z)};
}

const ScalarField& hamiltonian() {
    static const ScalarField h("H", {{1.0, {1, 1, 0}}, {-1.0, {1, 0, 1}}});
    return h;
}

const ScalarField& casimir() {
    static const ScalarField c("C", {{-1.0, {1, 1, 0}}, {1.0, {0, 1, 1}}});
    return c;
}

const ScalarField& sextic_integral() {
    // xyz (x-y)(x-z)(y-z) expanded; (x-y)(x-z)(y-z) = x^2y - x^2z - xy^2 + xz^2 + y^2z - yz^2
    static const ScalarField f("f", {{1.0, {3, 2, 1}},
                                     {-1.0, {3, 1, 2}},
                                     {-1.0, {2, 3, 1}},
                                     {1.0, {2, 1, 3}},
                                     {1.0, {1, 3, 2}},
                                     {-1.0, {1, 2, 3}}});
    return f;
}

const ScalarField& quartic_integral() {
    static const ScalarField g("g", {{1.0, {2, 2, 0}},
                                     {-1.0, {2, 1, 1}},
                                     {-1.0, {1, 2, 1}},
                                     {1.0, {2, 0, 2}},
                                     {-1.0, {1, 1, 2}},
                                     {1.0, {0, 2, 2}}});
    return g;
}

Invariants invariants(const State& p) {
    const double x = p.x(), y = p.y(), z = p.z();
    Invariants inv;
    inv.h = x * y - x * z;
    inv.c = -x * y + y * z;
    inv.f = inv.c * inv.h * (inv.c + inv.h);
    inv.g = 0.5 * (inv.c * inv.c + inv.h * inv.h + (inv.c + inv.h) * (inv.c + inv.h));
    return inv;
}

std::pair<double, double> invariant_identity_residual(const State& p) {
    const Invariants inv = invariants(p);
    return {inv.f - sextic_integral().evaluate(p), inv.g - quartic_integral().evaluate(p)};
}

SL2Params::SL2Params(double a, double b, double c, double d) : a_(a), b_(b), c_(c), d_(d) {
    if (!(std::abs(a * d - b * c - 1.0) <= kDeterminantTolerance))
        throw std::invalid_argument("SL2Params: determinant differs from 1");
}

SL2Fields sl2_fields(const SL2Params& q) {
    const double a = q.a(), b = q.b(), c = q.c(), d = q.d();
    return {ScalarField("C_ab", {{-a + b, {1, 1, 0}}, {a, {0, 1, 1}}, {-b, {1, 0, 1}}}),
            ScalarField("H_cd", {{-c + d, {1, 1, 0}}, {c, {0, 1, 1}}, {-d, {1, 0, 1}}})};
}

Mat3 sl2_poisson_matrix(const SL2Params& q, const State& p) {
    const double a = q.a(), b = q.b();
    const double x = p.x(), y = p.y(), z = p.z();
    Mat3 m;
    m(0, 1) = -b * x + a * y;
    m(0, 2) = (a - b) * x - a * z;
    m(1, 0) = b * x - a * y;
    m(1, 2) = (-a + b) * y - b * z;
    m(2, 0) = (-a + b) * x + a * z;
    m(2, 1) = (a - b) * y + b * z;
    return m;
}

Vec3 sl2_realization_residual(const SL2Params& q, const State& p) {
    return sl2_realization_residual(q, sl2_fields(q), p);
}

Vec3 sl2_realization_residual(const SL2Params& q, const SL2Fields& fields, const State& p) {
    return sl2_poisson_matrix(q, p) * fields.hamiltonian.gradient(p) - lv_field(p);
}

}  // namespace lvhp
