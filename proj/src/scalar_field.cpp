#include "lvhp/scalar_field.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace lvhp {

namespace {

std::vector<Monomial> normalized(std::vector<Monomial> terms) {
    std::map<std::array<int, 3>, double> merged;
    for (const auto& t : terms) {
        for (int e : t.exp)
            if (e < 0) throw std::invalid_argument("ScalarField: negative exponent");
        merged[t.exp] += t.coef;
    }
    std::vector<Monomial> out;
    for (const auto& [exp, coef] : merged)
        if (coef != 0.0) out.push_back({coef, exp});
    return out;
}

std::vector<Monomial> differentiate(const std::vector<Monomial>& terms, int axis) {
    std::vector<Monomial> out;
    for (const auto& t : terms) {
        if (t.exp[axis] == 0) continue;
        Monomial d = t;
        d.coef *= t.exp[axis];
        d.exp[axis] -= 1;
        out.push_back(d);
    }
    return normalized(std::move(out));
}

double ipow(double base, int e) {
    double r = 1.0;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

constexpr std::array<std::pair<int, int>, 6> kHessIndex{{{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}}};

}  // namespace

ScalarField::ScalarField(std::string descriptor, std::vector<Monomial> terms)
    : descriptor_(std::move(descriptor)), terms_(normalized(std::move(terms))) {
    for (int a = 0; a < 3; ++a) grad_[a] = differentiate(terms_, a);
    for (std::size_t k = 0; k < kHessIndex.size(); ++k) {
        auto [i, j] = kHessIndex[k];
        hess_[k] = differentiate(grad_[i], j);
    }
}

ScalarField ScalarField::coordinate(int axis) {
    if (axis < 0 || axis > 2) throw std::invalid_argument("ScalarField::coordinate: axis out of range");
    static constexpr const char* names[] = {"x", "y", "z"};
    Monomial m{1.0, {0, 0, 0}};
    m.exp[axis] = 1;
    return ScalarField(names[axis], {m});
}

double ScalarField::eval_terms(const std::vector<Monomial>& terms, const Vec3& p) {
    double s = 0.0;
    for (const auto& t : terms) s += t.coef * ipow(p[0], t.exp[0]) * ipow(p[1], t.exp[1]) * ipow(p[2], t.exp[2]);
    return s;
}

Vec3 ScalarField::gradient(const State& p) const {
    return {eval_terms(grad_[0], p.vec()), eval_terms(grad_[1], p.vec()), eval_terms(grad_[2], p.vec())};
}

Mat3 ScalarField::hessian(const State& p) const {
    Mat3 h;
    for (std::size_t k = 0; k < kHessIndex.size(); ++k) {
        auto [i, j] = kHessIndex[k];
        const double v = eval_terms(hess_[k], p.vec());
        h(i, j) = v;
        h(j, i) = v;
    }
    return h;
}

int ScalarField::degree() const noexcept {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.exp[0] + t.exp[1] + t.exp[2]);
    return d;
}

ScalarField ScalarField::combine(double a, const ScalarField& f, double b, const ScalarField& g,
                                 std::string descriptor) {
    std::vector<Monomial> terms;
    for (auto t : f.terms_) terms.push_back({a * t.coef, t.exp});
    for (auto t : g.terms_) terms.push_back({b * t.coef, t.exp});
    return ScalarField(std::move(descriptor), std::move(terms));
}

}  // namespace lvhp
