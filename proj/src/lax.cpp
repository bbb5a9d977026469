#include "lvhp/lax.hpp"

#include <algorithm>

#include "lvhp/lv_model.hpp"

namespace lvhp {

namespace {

constexpr Complex kI{0.0, 1.0};

// L and its derivative share a layout: three antisymmetric entries.
ComplexMat3 antisymmetric(Complex a01, Complex a02, Complex a12) {
    ComplexMat3 m;
    m(0, 1) = a01;
    m(1, 0) = -a01;
    m(0, 2) = a02;
    m(2, 0) = -a02;
    m(1, 2) = a12;
    m(2, 1) = -a12;
    return m;
}

}  // namespace

ComplexMat3 operator*(const ComplexMat3& a, const ComplexMat3& b) {
    ComplexMat3 r;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            Complex s = 0.0;
            for (std::size_t k = 0; k < 3; ++k) s += a(i, k) * b(k, j);
            r(i, j) = s;
        }
    return r;
}

ComplexMat3 operator-(const ComplexMat3& a, const ComplexMat3& b) {
    ComplexMat3 r;
    for (std::size_t k = 0; k < 9; ++k) r.m[k] = a.m[k] - b.m[k];
    return r;
}

double max_modulus(const ComplexMat3& a) {
    double r = 0.0;
    for (const auto& e : a.m) r = std::max(r, std::abs(e));
    return r;
}

LaxPair lax_pair(const State& p) {
    const double x = p.x(), y = p.y(), z = p.z();
    LaxPair out;
    out.l = antisymmetric(x - y, z, kI * (x + y - z));
    out.b(0, 1) = kI * z;
    out.b(0, 2) = kI * (x - y);
    out.b(1, 0) = -kI * z;
    out.b(2, 0) = -kI * (x - y);
    return out;
}

ComplexMat3 lax_derivative(const State& p) {
    const Vec3 f = lv_field(p);
    return antisymmetric(f[0] - f[1], f[2], kI * (f[0] + f[1] - f[2]));
}

double lax_residual(const State& p) {
    const auto [l, b] = lax_pair(p);
    return max_modulus(lax_derivative(p) - (l * b - b * l));
}

SpectralInvariant spectral_invariant(const State& p) {
    const ComplexMat3 l = lax_pair(p).l;
    const Invariants inv = invariants(p);
    return {(l * l).trace(), 4.0 * (inv.h - inv.c)};
}

}  // namespace lvhp
