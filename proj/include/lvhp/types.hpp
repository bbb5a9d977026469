#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace lvhp {

/// Raised when an argument lies outside an operation's domain (chart
/// coordinate of the wrong sign, singular closed-form denominator, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what, std::optional<double> critical_time = std::nullopt)
        : std::domain_error(what), critical_time_(critical_time) {}

    /// Time at which a closed-form expression becomes singular, if known.
    std::optional<double> critical_time() const noexcept { return critical_time_; }

private:
    std::optional<double> critical_time_;
};

struct Vec3 {
    std::array<double, 3> v{0.0, 0.0, 0.0};

    constexpr Vec3() = default;
    constexpr Vec3(double a, double b, double c) : v{a, b, c} {}

    constexpr double& operator[](std::size_t i) { return v[i]; }
    constexpr double operator[](std::size_t i) const { return v[i]; }

    constexpr Vec3& operator+=(const Vec3& o) {
        for (std::size_t i = 0; i < 3; ++i) v[i] += o.v[i];
        return *this;
    }
    constexpr Vec3& operator-=(const Vec3& o) {
        for (std::size_t i = 0; i < 3; ++i) v[i] -= o.v[i];
        return *this;
    }
    constexpr Vec3& operator*=(double s) {
        for (auto& e : v) e *= s;
        return *this;
    }

    friend constexpr Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
    friend constexpr Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
    friend constexpr Vec3 operator*(double s, Vec3 a) { return a *= s; }
    friend constexpr Vec3 operator*(Vec3 a, double s) { return a *= s; }
    friend constexpr Vec3 operator-(Vec3 a) { return a *= -1.0; }
    friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

constexpr double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline double norm_inf(const Vec3& a) { return std::max({std::abs(a[0]), std::abs(a[1]), std::abs(a[2])}); }
inline double norm2(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline bool all_finite(const Vec3& a) {
    return std::isfinite(a[0]) && std::isfinite(a[1]) && std::isfinite(a[2]);
}

/// Row-major 3x3 matrix.
struct Mat3 {
    std::array<double, 9> m{};

    constexpr double& operator()(std::size_t i, std::size_t j) { return m[3 * i + j]; }
    constexpr double operator()(std::size_t i, std::size_t j) const { return m[3 * i + j]; }

    constexpr Mat3 transposed() const {
        Mat3 t;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) t(i, j) = (*this)(j, i);
        return t;
    }

    friend constexpr Mat3 operator+(Mat3 a, const Mat3& b) {
        for (std::size_t k = 0; k < 9; ++k) a.m[k] += b.m[k];
        return a;
    }
    friend constexpr Mat3 operator-(Mat3 a, const Mat3& b) {
        for (std::size_t k = 0; k < 9; ++k) a.m[k] -= b.m[k];
        return a;
    }
    friend constexpr Vec3 operator*(const Mat3& a, const Vec3& x) {
        Vec3 r;
        for (std::size_t i = 0; i < 3; ++i) r[i] = a(i, 0) * x[0] + a(i, 1) * x[1] + a(i, 2) * x[2];
        return r;
    }
    friend constexpr bool operator==(const Mat3&, const Mat3&) = default;
};

inline double max_abs(const Mat3& a) {
    double r = 0.0;
    for (double e : a.m) r = std::max(r, std::abs(e));
    return r;
}

/// A point of the phase space R^3. Non-finite components are rejected.
class State {
public:
    State() = default;
    State(double x, double y, double z) : p_(x, y, z) {
        if (!all_finite(p_)) throw std::invalid_argument("State: non-finite component");
    }
    explicit State(const Vec3& p) : State(p[0], p[1], p[2]) {}

    double x() const noexcept { return p_[0]; }
    double y() const noexcept { return p_[1]; }
    double z() const noexcept { return p_[2]; }
    double operator[](std::size_t i) const noexcept { return p_[i]; }
    const Vec3& vec() const noexcept { return p_; }

    friend bool operator==(const State&, const State&) = default;

private:
    Vec3 p_;
};

}  // namespace lvhp
