#include "lvhp/ec_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lvhp {

const char* to_string(StratumLabel s) {
    switch (s) {
        case StratumLabel::Sigma1Left: return "Sigma1Left";
        case StratumLabel::Sigma1Star: return "Sigma1Star";
        case StratumLabel::Sigma1Right: return "Sigma1Right";
        case StratumLabel::Sigma2: return "Sigma2";
        case StratumLabel::Sigma0: return "Sigma0";
        case StratumLabel::Sigma0Right: return "Sigma0Right";
        case StratumLabel::Sigma3Left: return "Sigma3Left";
        case StratumLabel::Sigma3Star: return "Sigma3Star";
        case StratumLabel::Sigma3Right: return "Sigma3Right";
    }
    return "?";
}

ECValue ec(const State& p) { return {p.x() * p.y() - p.x() * p.z(), -p.x() * p.y() + p.y() * p.z()}; }

bool in_stratum(StratumLabel s, const ECValue& v) {
    const double h = v.h, c = v.c;
    switch (s) {
        case StratumLabel::Sigma1Left: return h < 0 && c > 0;
        case StratumLabel::Sigma1Star: return h == 0 && c > 0;
        case StratumLabel::Sigma1Right: return h > 0 && c > 0;
        case StratumLabel::Sigma2: return h < 0 && c == 0;
        case StratumLabel::Sigma0: return h == 0 && c == 0;
        case StratumLabel::Sigma0Right: return h > 0 && c == 0;
        case StratumLabel::Sigma3Left: return c < std::min(-h, 0.0);
        case StratumLabel::Sigma3Star: return c < 0 && c == -h;
        case StratumLabel::Sigma3Right: return -h < c && c < 0;
    }
    return false;
}

StratumLabel classify(const ECValue& v) {
    if (!std::isfinite(v.h) || !std::isfinite(v.c)) throw std::invalid_argument("classify: non-finite value");
    if (v.c > 0) {
        if (v.h < 0) return StratumLabel::Sigma1Left;
        return v.h == 0 ? StratumLabel::Sigma1Star : StratumLabel::Sigma1Right;
    }
    if (v.c == 0) {
        if (v.h < 0) return StratumLabel::Sigma2;
        return v.h == 0 ? StratumLabel::Sigma0 : StratumLabel::Sigma0Right;
    }
    if (v.c < -v.h) return StratumLabel::Sigma3Left;
    return v.c == -v.h ? StratumLabel::Sigma3Star : StratumLabel::Sigma3Right;
}

ECValue snap(const ECValue& v, double tol) {
    if (tol < 0) throw std::invalid_argument("snap: negative tolerance");
    ECValue out = v;
    if (std::abs(out.h) <= tol) out.h = 0.0;
    if (std::abs(out.c) <= tol) out.c = 0.0;
    if (out.c < 0 && std::abs(out.c + out.h) <= tol) out.c = -out.h;
    return out;
}

ECValue equilibrium_image(Family family, double m) {
    const double m2 = m * m;
    switch (family) {
        case Family::E1: return {0.0, m2};
        case Family::E2: return {-m2, 0.0};
        case Family::E3: return {m2, -m2};
    }
    throw std::invalid_argument("equilibrium_image: bad family");
}

const char* to_string(LeafKind k) {
    return k == LeafKind::hyperbolic_cylinder ? "hyperbolic_cylinder" : "intersecting_planes";
}

LeafDescription leaf_type(double c) {
    if (c != 0.0) return {LeafKind::hyperbolic_cylinder, "hyperbolic cylinder {y(z-x) = c}"};
    return {LeafKind::intersecting_planes, "two intersecting planes {y = 0} u {z = x}"};
}

State fiber_seed(const ECValue& v) {
    const double h = v.h, c = v.c;
    if (!std::isfinite(h) || !std::isfinite(c)) throw std::invalid_argument("fiber_seed: non-finite value");
    if (h != 0.0) {
        // x = t fixes y - z = h/t; then y solves y^2 - (t + h/t) y - c = 0.
        for (double t = 1.0;; t *= 2.0) {
            const double s = t + h / t;
            const double disc = s * s + 4.0 * c;
            if (disc < 0.0) continue;
            const double root = std::sqrt(disc);
            // larger root, written without cancellation
            const double y = s >= 0.0 ? 0.5 * (s + root) : 2.0 * c / (root - s);
            return {t, y, y - h / t};
        }
    }
    if (c != 0.0) {
        const double y = std::sqrt(std::abs(c));
        return {0.0, y, c / y};
    }
    return {0.0, 0.0, 0.0};
}

ConicWeights convex_generation_witness(const ECValue& v) {
    // h = w3 - w2, c = w1 - w3, each weight in closed form so none rounds below 0
    ConicWeights w;
    w.w2 = std::max({0.0, -v.h, -v.h - v.c});
    w.w3 = std::max({v.h, 0.0, -v.c});
    w.w1 = std::max({v.c + v.h, v.c, 0.0});
    return w;
}

}  // namespace lvhp
