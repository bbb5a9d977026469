#pragma once

#include <array>
#include <string>
#include <vector>

#include "lvhp/types.hpp"

namespace lvhp {

struct Monomial {
    double coef = 0.0;
    std::array<int, 3> exp{0, 0, 0};
};

/// Polynomial function on R^3 with closed-form gradient and Hessian.
///
/// Derivative polynomials are expanded once at construction, so evaluating a
/// gradient is exact term-by-term differentiation, never finite differencing.
class ScalarField {
public:
    ScalarField() = default;
    ScalarField(std::string descriptor, std::vector<Monomial> terms);

    /// The coordinate function p -> p[axis].
    static ScalarField coordinate(int axis);

    double evaluate(const State& p) const { return eval_terms(terms_, p.vec()); }
    Vec3 gradient(const State& p) const;
    Mat3 hessian(const State& p) const;

    const std::string& descriptor() const noexcept { return descriptor_; }
    const std::vector<Monomial>& terms() const noexcept { return terms_; }
    int degree() const noexcept;

    /// Linear combination a*f + b*g with like terms merged.
    static ScalarField combine(double a, const ScalarField& f, double b, const ScalarField& g, std::string descriptor);

private:
    static double eval_terms(const std::vector<Monomial>& terms, const Vec3& p);

    std::string descriptor_;
    std::vector<Monomial> terms_;
    std::array<std::vector<Monomial>, 3> grad_;
    std::array<std::vector<Monomial>, 6> hess_;  // upper triangle: 00 01 02 11 12 22
};

}  // namespace lvhp
