#pragma once

#include <utility>

#include "lvhp/scalar_field.hpp"
#include "lvhp/types.hpp"

namespace lvhp {

/// Values of the conserved quantities at a point.
///
/// h and c are the Hamiltonian and the Casimir; f and g are the sextic and
/// quartic first integrals, composed from h and c.
struct Invariants {
    double h = 0.0;
    double c = 0.0;
    double f = 0.0;
    double g = 0.0;
};

/// The quadratic Lotka-Volterra field
///   x' = -x(x - y - z),  y' = -y(-x + y - z),  z' = -z(-x - y + z).
Vec3 lv_field(const State& p);

/// H = xy - xz.
const ScalarField& hamiltonian();
/// C = -xy + yz.
const ScalarField& casimir();
/// f = xyz(x - y)(x - z)(y - z), expanded.
const ScalarField& sextic_integral();
/// g = x^2y^2 - x^2yz - xy^2z + x^2z^2 - xyz^2 + y^2z^2.
const ScalarField& quartic_integral();

Invariants invariants(const State& p);

/// (f from c*h*(c+h) minus f as a polynomial, g from the half-sum of squares
/// minus g as a polynomial). Both vanish identically.
std::pair<double, double> invariant_identity_residual(const State& p);

/// Element [[a, b], [c, d]] of SL(2,R).
class SL2Params {
public:
    static constexpr double kDeterminantTolerance = 1e-12;

    /// Throws std::invalid_argument when |ad - bc - 1| exceeds the tolerance.
    SL2Params(double a, double b, double c, double d);

    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    double c() const noexcept { return c_; }
    double d() const noexcept { return d_; }

private:
    double a_, b_, c_, d_;
};

struct SL2Fields {
    ScalarField casimir;      // C_{a,b} = (-a+b)xy + ayz - bxz
    ScalarField hamiltonian;  // H_{c,d} = (-c+d)xy + cyz - dxz
};

SL2Fields sl2_fields(const SL2Params& q);

/// The bracket matrix Pi_{a,b} written out entry by entry.
Mat3 sl2_poisson_matrix(const SL2Params& q, const State& p);

/// Pi_{a,b}(p) grad H_{c,d}(p) - lv_field(p).
Vec3 sl2_realization_residual(const SL2Params& q, const State& p);
Vec3 sl2_realization_residual(const SL2Params& q, const SL2Fields& fields, const State& p);

}  // namespace lvhp
