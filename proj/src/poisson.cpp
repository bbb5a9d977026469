#include "lvhp/poisson.hpp"

#include <array>

namespace lvhp {

namespace {

constexpr int levi_civita(int i, int j, int k) {
    if (i == j || j == k || i == k) return 0;
    return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

Mat3 tensor_from_gradient(const Vec3& g) {
    Mat3 t;
    t(0, 1) = g[2];
    t(1, 0) = -g[2];
    t(0, 2) = -g[1];
    t(2, 0) = g[1];
    t(1, 2) = g[0];
    t(2, 1) = -g[0];
    return t;
}

}  // namespace

Mat3 tensor_from_generator(const ScalarField& gen, const State& p) { return tensor_from_gradient(gen.gradient(p)); }

double bracket(const ScalarField& gen, const ScalarField& f, const ScalarField& g, const State& p) {
    return dot(gen.gradient(p), cross(f.gradient(p), g.gradient(p)));
}

Vec3 ham_vector_field(const ScalarField& gen, const ScalarField& ham, const State& p) {
    return tensor_from_generator(gen, p) * ham.gradient(p);
}

double jacobiator(const ScalarField& gen, const State& p) {
    const Mat3 pi = tensor_from_generator(gen, p);
    const Mat3 hess = gen.hessian(p);

    // dpi[l](j,k) = d_l Pi^jk = sum_m eps_jkm d_l d_m gen
    std::array<Mat3, 3> dpi{};
    for (int l = 0; l < 3; ++l)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                double s = 0.0;
                for (int m = 0; m < 3; ++m) s += levi_civita(j, k, m) * hess(l, m);
                dpi[l](j, k) = s;
            }

    auto term = [&](int i, int j, int k) {
        double s = 0.0;
        for (int l = 0; l < 3; ++l) s += pi(i, l) * dpi[l](j, k);
        return s;
    };

    double worst = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                worst = std::max(worst, std::abs(term(i, j, k) + term(j, k, i) + term(k, i, j)));
    return worst;
}

Vec3 casimir_residual(const ScalarField& gen, const State& p) {
    const Vec3 g = gen.gradient(p);
    return tensor_from_gradient(g) * g;
}

}  // namespace lvhp
