#include "lvhp/equilibria.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace lvhp {

const char* to_string(Family f) {
    switch (f) {
        case Family::E1: return "E1";
        case Family::E2: return "E2";
        case Family::E3: return "E3";
    }
    return "?";
}

Family parse_family(const std::string& s) {
    if (s == "E1") return Family::E1;
    if (s == "E2") return Family::E2;
    if (s == "E3") return Family::E3;
    throw std::invalid_argument("unknown equilibrium family '" + s + "'");
}

const char* to_string(InstabilityReason r) {
    return r == InstabilityReason::positive_eigenvalue ? "positive_eigenvalue" : "nearby_unstable_equilibria";
}

State equilibrium(Family family, double m) {
    switch (family) {
        case Family::E1: return {0.0, m, m};
        case Family::E2: return {m, 0.0, m};
        case Family::E3: return {m, m, 0.0};
    }
    throw std::invalid_argument("equilibrium: bad family");
}

Mat3 jacobian(const State& p) {
    const double x = p.x(), y = p.y(), z = p.z();
    Mat3 j;
    j(0, 0) = -2 * x + y + z;
    j(0, 1) = x;
    j(0, 2) = x;
    j(1, 0) = y;
    j(1, 1) = x - 2 * y + z;
    j(1, 2) = y;
    j(2, 0) = z;
    j(2, 1) = z;
    j(2, 2) = x + y - 2 * z;
    return j;
}

CubicPoly characteristic_polynomial(const Mat3& a) {
    const double tr = a(0, 0) + a(1, 1) + a(2, 2);
    const double minors = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0) + a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0) +
                          a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1);
    const double det = a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
                       a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
                       a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
    return {-tr, minors, -det};
}

namespace {

std::array<std::complex<double>, 2> quadratic_roots(double b, double c) {
    // lambda^2 + b lambda + c
    const double disc = b * b - 4 * c;
    if (disc >= 0) {
        const double s = std::sqrt(disc);
        const double q = -0.5 * (b + std::copysign(s, b));
        if (q == 0.0) return {std::complex<double>(0.0), std::complex<double>(0.0)};
        return {std::complex<double>(q), std::complex<double>(c / q)};
    }
    const double s = std::sqrt(-disc);
    return {std::complex<double>(-0.5 * b, 0.5 * s), std::complex<double>(-0.5 * b, -0.5 * s)};
}

}  // namespace

std::array<std::complex<double>, 3> cubic_roots(const CubicPoly& p) {
    using cd = std::complex<double>;
    if (p.a0 == 0.0) {
        auto q = quadratic_roots(p.a2, p.a1);
        return {cd(0.0), q[0], q[1]};
    }
    // depressed cubic t^3 + pt + q with lambda = t - a2/3
    const double shift = p.a2 / 3.0;
    const double dp = p.a1 - p.a2 * p.a2 / 3.0;
    const double dq = 2.0 * p.a2 * p.a2 * p.a2 / 27.0 - p.a2 * p.a1 / 3.0 + p.a0;
    const double disc = dq * dq / 4.0 + dp * dp * dp / 27.0;
    if (disc <= 0.0 && dp < 0.0) {
        const double r = 2.0 * std::sqrt(-dp / 3.0);
        const double arg = std::clamp(3.0 * dq / (dp * r), -1.0, 1.0);
        const double phi = std::acos(arg) / 3.0;
        std::array<cd, 3> out;
        for (int k = 0; k < 3; ++k) out[k] = cd(r * std::cos(phi - 2.0 * std::numbers::pi * k / 3.0) - shift);
        return out;
    }
    const double sq = std::sqrt(std::max(disc, 0.0));
    const double u = std::cbrt(-dq / 2.0 + sq);
    const double v = std::cbrt(-dq / 2.0 - sq);
    const cd omega(-0.5, std::sqrt(3.0) / 2.0);
    return {cd(u + v - shift), omega * u + std::conj(omega) * v - shift, std::conj(omega) * u + omega * v - shift};
}

std::array<std::complex<double>, 3> qr_eigenvalues(const Mat3& a) {
    Eigen::Matrix3d m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = a(i, j);
    Eigen::EigenSolver<Eigen::Matrix3d> solver(m, false);
    const auto ev = solver.eigenvalues();
    return {ev[0], ev[1], ev[2]};
}

StabilityReport stability_report(Family family, double m) {
    StabilityReport r;
    r.family = family;
    r.m = m;
    const Mat3 j = jacobian(equilibrium(family, m));
    r.char_poly = characteristic_polynomial(j);
    const auto roots = cubic_roots(r.char_poly);
    for (std::size_t k = 0; k < 3; ++k) r.eigenvalues[k] = roots[k].real();
    std::sort(r.eigenvalues.begin(), r.eigenvalues.end());
    r.hyperbolic = std::none_of(r.eigenvalues.begin(), r.eigenvalues.end(), [](double e) { return e == 0.0; });
    // Instability is the known verdict for every member; the report records
    // which spectral fact it rests on.
    r.unstable = true;
    r.justification = r.eigenvalues.back() > 0.0 ? InstabilityReason::positive_eigenvalue
                                                 : InstabilityReason::nearby_unstable_equilibria;
    return r;
}

std::optional<FamilyMember> is_equilibrium(const State& p, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("is_equilibrium: tol must be positive");
    const double x = p.x(), y = p.y(), z = p.z();
    struct Candidate {
        Family family;
        double m;
        double dist;
    };
    auto dist_to = [](double zero, double a, double b) {
        const double m = 0.5 * (a + b);
        return Candidate{Family::E1, m, std::max({std::abs(zero), std::abs(a - m), std::abs(b - m)})};
    };
    Candidate best = dist_to(x, y, z);
    Candidate c2 = dist_to(y, x, z);
    c2.family = Family::E2;
    Candidate c3 = dist_to(z, x, y);
    c3.family = Family::E3;
    for (const auto& c : {c2, c3})
        if (c.dist < best.dist) best = c;
    if (best.dist > tol) return std::nullopt;
    if (best.m == 0.0) best.family = Family::E1;
    return FamilyMember{best.family, best.m};
}

}  // namespace lvhp
