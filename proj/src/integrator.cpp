#include "lvhp/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lvhp {

namespace {

std::optional<State> make_state(const Vec3& v) {
    if (!all_finite(v)) return std::nullopt;
    return State(v);
}

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192, a75 = -2187.0 / 6784, a76 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

struct DoPriStep {
    std::optional<State> y1;
    Vec3 k7;
    double err = 0.0;
};

double error_norm(const Vec3& err, const Vec3& y0, const Vec3& y1, double atol, double rtol) {
    double s = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        const double sk = atol + rtol * std::max(std::abs(y0[i]), std::abs(y1[i]));
        s += (err[i] / sk) * (err[i] / sk);
    }
    return std::sqrt(s / 3.0);
}

DoPriStep dopri_step(const VectorField& f, const State& y, const Vec3& k1, double h, const IntegratorSettings& s) {
    DoPriStep out;
    out.err = std::numeric_limits<double>::infinity();
    const Vec3& y0 = y.vec();
    auto stage = [&](const Vec3& v) -> std::optional<Vec3> {
        auto st = make_state(v);
        if (!st) return std::nullopt;
        Vec3 k = f(*st);
        if (!all_finite(k)) return std::nullopt;
        return k;
    };
    auto k2 = stage(y0 + h * (a21 * k1));
    if (!k2) return out;
    auto k3 = stage(y0 + h * (a31 * k1 + a32 * *k2));
    if (!k3) return out;
    auto k4 = stage(y0 + h * (a41 * k1 + a42 * *k2 + a43 * *k3));
    if (!k4) return out;
    auto k5 = stage(y0 + h * (a51 * k1 + a52 * *k2 + a53 * *k3 + a54 * *k4));
    if (!k5) return out;
    auto k6 = stage(y0 + h * (a61 * k1 + a62 * *k2 + a63 * *k3 + a64 * *k4 + a65 * *k5));
    if (!k6) return out;
    const Vec3 y1 = y0 + h * (a71 * k1 + a73 * *k3 + a74 * *k4 + a75 * *k5 + a76 * *k6);
    auto k7 = stage(y1);
    if (!k7) return out;
    const Vec3 err = h * (e1 * k1 + e3 * *k3 + e4 * *k4 + e5 * *k5 + e6 * *k6 + e7 * *k7);
    out.y1 = State(y1);
    out.k7 = *k7;
    out.err = error_norm(err, y0, y1, s.abs_tol, s.rel_tol);
    if (!std::isfinite(out.err)) out.err = std::numeric_limits<double>::infinity();
    return out;
}

// Starting step size heuristic from Hairer, Norsett & Wanner.
double initial_step(const VectorField& f, const State& y0, const Vec3& f0, double hmax, const IntegratorSettings& s) {
    double dnf = 0.0, dny = 0.0;
    Vec3 sk;
    for (std::size_t i = 0; i < 3; ++i) {
        sk[i] = s.abs_tol + s.rel_tol * std::abs(y0[i]);
        dnf += (f0[i] / sk[i]) * (f0[i] / sk[i]);
        dny += (y0[i] / sk[i]) * (y0[i] / sk[i]);
    }
    double h = (dnf <= 1e-10 || dny <= 1e-10) ? 1e-6 : std::sqrt(dny / dnf) * 0.01;
    h = std::min(h, hmax);
    auto y1 = make_state(y0.vec() + h * f0);
    if (!y1) return std::min(1e-6, hmax);
    const Vec3 f1 = f(*y1);
    double der2 = 0.0;
    for (std::size_t i = 0; i < 3; ++i) der2 += ((f1[i] - f0[i]) / sk[i]) * ((f1[i] - f0[i]) / sk[i]);
    der2 = std::sqrt(der2) / h;
    const double der12 = std::max(std::abs(der2), std::sqrt(dnf));
    const double h1 = (der12 <= 1e-15) ? std::max(1e-6, h * 1e-3) : std::pow(0.01 / der12, 0.2);
    return std::min({100.0 * h, h1, hmax});
}

Sample make_sample(double t, const State& p, const InvariantMonitor& monitor) { return {t, p, monitor(p)}; }

Trajectory integrate_fixed(const VectorField& field, const State& p0, double t_end, const IntegratorSettings& s,
                           const InvariantMonitor& monitor) {
    Trajectory traj;
    traj.samples.push_back(make_sample(0.0, p0, monitor));
    State p = p0;
    double t = 0.0;
    for (long k = 1;; ++k) {
        if (k > s.max_steps) {
            traj.termination = Termination::step_limit;
            return traj;
        }
        double t_next = static_cast<double>(k) * s.dt;
        if (t_next > t_end || t_end - t_next < 1e-9 * s.dt) t_next = t_end;
        auto next = rk4_step(field, p, t_next - t);
        if (!next || norm_inf(next->vec()) > s.blow_up_norm) {
            traj.termination = Termination::blow_up;
            traj.blow_up_time = t;
            return traj;
        }
        p = *next;
        t = t_next;
        traj.samples.push_back(make_sample(t, p, monitor));
        if (t >= t_end) return traj;
    }
}

Trajectory integrate_adaptive(const VectorField& field, const State& p0, double t_end, const IntegratorSettings& s,
                              const InvariantMonitor& monitor) {
    constexpr double safe = 0.9, fac_min = 0.2, fac_max = 10.0, beta = 0.04;
    const double expo = 0.2 - beta * 0.75;

    Trajectory traj;
    traj.samples.push_back(make_sample(0.0, p0, monitor));
    State y = p0;
    Vec3 k1 = field(y);
    double t = 0.0;
    double h = initial_step(field, y, k1, t_end, s);
    double fac_old = 1e-4;
    bool last_rejected = false;

    for (long step = 0;; ++step) {
        if (step >= s.max_steps) {
            traj.termination = Termination::step_limit;
            return traj;
        }
        const bool last = t + h >= t_end;
        if (last) h = t_end - t;
        if (h <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(t))) {
            // step size underflow: the solution is running into a singularity
            traj.termination = Termination::blow_up;
            traj.blow_up_time = t;
            return traj;
        }

        DoPriStep st = dopri_step(field, y, k1, h, s);
        const double fac11 = std::pow(st.err, expo);
        if (st.err <= 1.0) {
            if (norm_inf(st.y1->vec()) > s.blow_up_norm) {
                traj.termination = Termination::blow_up;
                traj.blow_up_time = t;
                return traj;
            }
            double fac = fac11 / std::pow(fac_old, beta);
            fac = std::clamp(fac / safe, 1.0 / fac_max, 1.0 / fac_min);
            fac_old = std::max(st.err, 1e-4);
            t = last ? t_end : t + h;
            y = *st.y1;
            k1 = st.k7;
            traj.samples.push_back(make_sample(t, y, monitor));
            if (last) return traj;
            double h_new = h / fac;
            if (last_rejected) h_new = std::min(h_new, h);
            last_rejected = false;
            h = h_new;
        } else {
            const double shrink = std::isfinite(fac11) ? std::min(1.0 / fac_min, fac11 / safe) : 1.0 / fac_min;
            h /= shrink;
            last_rejected = true;
        }
    }
}

}  // namespace

IntegratorSettings IntegratorSettings::fixed(double dt) {
    IntegratorSettings s;
    s.mode = StepMode::fixed;
    s.dt = dt;
    return s;
}

IntegratorSettings IntegratorSettings::adaptive(double tol) {
    IntegratorSettings s;
    s.mode = StepMode::adaptive;
    s.rel_tol = tol;
    s.abs_tol = tol;
    return s;
}

void IntegratorSettings::validate() const {
    if (mode == StepMode::fixed && !(dt > 0.0 && std::isfinite(dt)))
        throw std::invalid_argument("integrator: dt must be positive");
    if (mode == StepMode::adaptive && !(rel_tol > 0.0 && rel_tol < 1.0 && abs_tol > 0.0 && abs_tol < 1.0))
        throw std::invalid_argument("integrator: tolerances must lie in (0, 1)");
    if (!(blow_up_norm > 1.0)) throw std::invalid_argument("integrator: blow_up_norm must exceed 1");
    if (max_steps <= 0) throw std::invalid_argument("integrator: max_steps must be positive");
}

const char* to_string(Termination t) {
    switch (t) {
        case Termination::completed: return "completed";
        case Termination::blow_up: return "blow_up";
        case Termination::step_limit: return "step_limit";
    }
    return "unknown";
}

std::optional<State> rk4_step(const VectorField& field, const State& p, double dt) {
    const Vec3& y = p.vec();
    const Vec3 k1 = field(p);
    auto s2 = make_state(y + (0.5 * dt) * k1);
    if (!s2) return std::nullopt;
    const Vec3 k2 = field(*s2);
    auto s3 = make_state(y + (0.5 * dt) * k2);
    if (!s3) return std::nullopt;
    const Vec3 k3 = field(*s3);
    auto s4 = make_state(y + dt * k3);
    if (!s4) return std::nullopt;
    const Vec3 k4 = field(*s4);
    return make_state(y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4));
}

Trajectory integrate(const VectorField& field, const State& p0, double t_end, const IntegratorSettings& s,
                     const InvariantMonitor& monitor) {
    s.validate();
    if (!(t_end > 0.0 && std::isfinite(t_end))) throw std::invalid_argument("integrate: t_end must be positive");
    return s.mode == StepMode::fixed ? integrate_fixed(field, p0, t_end, s, monitor)
                                     : integrate_adaptive(field, p0, t_end, s, monitor);
}

DriftReport drift_report(const Trajectory& traj) {
    if (traj.samples.empty()) throw std::invalid_argument("drift_report: empty trajectory");
    const Invariants& ref = traj.samples.front().inv;
    DriftReport d;
    for (const auto& s : traj.samples) {
        d.h = std::max(d.h, std::abs(s.inv.h - ref.h));
        d.c = std::max(d.c, std::abs(s.inv.c - ref.c));
        d.f = std::max(d.f, std::abs(s.inv.f - ref.f));
        d.g = std::max(d.g, std::abs(s.inv.g - ref.g));
    }
    return d;
}

}  // namespace lvhp
