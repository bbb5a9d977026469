#pragma once

#include <cmath>
#include <functional>

#include "lvhp/types.hpp"

namespace lvhp::test {

// Central differences, used as an oracle for closed-form derivatives.
inline Vec3 numeric_gradient(const std::function<double(const State&)>& f, const State& p, double step = 1e-5) {
    Vec3 g;
    for (int i = 0; i < 3; ++i) {
        Vec3 a = p.vec(), b = p.vec();
        a[i] += step;
        b[i] -= step;
        g[i] = (f(State(a)) - f(State(b))) / (2.0 * step);
    }
    return g;
}

inline Mat3 numeric_jacobian(const std::function<Vec3(const State&)>& f, const State& p, double step = 1e-6) {
    Mat3 j;
    for (int k = 0; k < 3; ++k) {
        Vec3 a = p.vec(), b = p.vec();
        a[k] += step;
        b[k] -= step;
        const Vec3 d = (f(State(a)) - f(State(b))) * (1.0 / (2.0 * step));
        for (int i = 0; i < 3; ++i) j(i, k) = d[i];
    }
    return j;
}

inline Mat3 mat(std::initializer_list<double> rows) {
    Mat3 m;
    std::size_t k = 0;
    for (double v : rows) m.m[k++] = v;
    return m;
}

}  // namespace lvhp::test
