#pragma once

#include <array>
#include <complex>
#include <optional>

#include "lvhp/types.hpp"

namespace lvhp {

/// E1 = {(0,M,M)}, E2 = {(M,0,M)}, E3 = {(M,M,0)}.
enum class Family { E1, E2, E3 };

inline constexpr std::array<Family, 3> kAllFamilies{Family::E1, Family::E2, Family::E3};

const char* to_string(Family f);
/// Parses "E1" / "E2" / "E3"; throws std::invalid_argument otherwise.
Family parse_family(const std::string& s);

enum class InstabilityReason { positive_eigenvalue, nearby_unstable_equilibria };

const char* to_string(InstabilityReason r);

/// Monic cubic lambda^3 + a2 lambda^2 + a1 lambda + a0.
struct CubicPoly {
    double a2 = 0.0;
    double a1 = 0.0;
    double a0 = 0.0;
};

struct StabilityReport {
    Family family = Family::E1;
    double m = 0.0;
    std::array<double, 3> eigenvalues{};  // ascending
    CubicPoly char_poly;
    bool unstable = true;
    bool hyperbolic = false;
    InstabilityReason justification = InstabilityReason::positive_eigenvalue;
};

struct FamilyMember {
    Family family;
    double m;
};

State equilibrium(Family family, double m);

/// Closed-form Jacobian of the Lotka-Volterra field.
Mat3 jacobian(const State& p);

/// det(lambda I - A) coefficients.
CubicPoly characteristic_polynomial(const Mat3& a);

/// Roots of a monic cubic. A vanishing constant term is deflated exactly.
std::array<std::complex<double>, 3> cubic_roots(const CubicPoly& p);

/// General-purpose eigenvalues from a Hessenberg QR iteration, used as an
/// independent check of the closed-form route.
std::array<std::complex<double>, 3> qr_eigenvalues(const Mat3& a);

StabilityReport stability_report(Family family, double m);

/// Nearest family point within tol in the max norm. The origin belongs to all
/// three families and is reported as (E1, 0).
std::optional<FamilyMember> is_equilibrium(const State& p, double tol);

}  // namespace lvhp
