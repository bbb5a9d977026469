#pragma once

#include <array>
#include <complex>

#include "lvhp/types.hpp"

namespace lvhp {

using Complex = std::complex<double>;

struct ComplexMat3 {
    std::array<Complex, 9> m{};

    Complex& operator()(std::size_t i, std::size_t j) { return m[3 * i + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return m[3 * i + j]; }

    Complex trace() const { return m[0] + m[4] + m[8]; }

    friend ComplexMat3 operator*(const ComplexMat3& a, const ComplexMat3& b);
    friend ComplexMat3 operator-(const ComplexMat3& a, const ComplexMat3& b);
};

double max_modulus(const ComplexMat3& a);

struct LaxPair {
    ComplexMat3 l;
    ComplexMat3 b;
};

/// L = [[0, x-y, z], [-(x-y), 0, i(x+y-z)], [-z, -i(x+y-z), 0]]
/// B = [[0, iz, i(x-y)], [-iz, 0, 0], [-i(x-y), 0, 0]]
LaxPair lax_pair(const State& p);

/// Time derivative of L along the Lotka-Volterra field, entry by entry.
ComplexMat3 lax_derivative(const State& p);

/// max |dL/dt - (LB - BL)| over the entries.
double lax_residual(const State& p);

struct SpectralInvariant {
    Complex trace_l2;
    double reference = 0.0;  // 4 (H - C)
};

SpectralInvariant spectral_invariant(const State& p);

}  // namespace lvhp
