#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "lvhp/lv_model.hpp"
#include "lvhp/types.hpp"

namespace lvhp {

using VectorField = std::function<Vec3(const State&)>;
using InvariantMonitor = std::function<Invariants(const State&)>;

enum class StepMode { fixed, adaptive };

struct IntegratorSettings {
    StepMode mode = StepMode::adaptive;
    double dt = 1e-3;        // fixed mode
    double rel_tol = 1e-10;  // adaptive mode
    double abs_tol = 1e-10;
    double blow_up_norm = 1e8;
    long max_steps = 10'000'000;

    static IntegratorSettings fixed(double dt);
    static IntegratorSettings adaptive(double tol);

    /// Throws std::invalid_argument on out-of-range settings.
    void validate() const;
};

enum class Termination { completed, blow_up, step_limit };

const char* to_string(Termination t);

struct Sample {
    double t = 0.0;
    State state;
    Invariants inv;
};

struct Trajectory {
    std::vector<Sample> samples;
    Termination termination = Termination::completed;
    /// Last accepted time before the blow-up guard fired.
    std::optional<double> blow_up_time;
};

/// One classical RK4 step. Returns nullopt when a stage overflows.
std::optional<State> rk4_step(const VectorField& field, const State& p, double dt);

/// Integrates from t = 0 to t_end, recording every accepted step.
///
/// Fixed mode uses classical RK4 with the last step shortened to land on
/// t_end. Adaptive mode uses the Dormand-Prince 5(4) pair with PI step
/// control. Integration stops with Termination::blow_up as soon as an accepted
/// state would exceed blow_up_norm in the max norm (that state is not stored).
Trajectory integrate(const VectorField& field, const State& p0, double t_end, const IntegratorSettings& s,
                     const InvariantMonitor& monitor = invariants);

struct DriftReport {
    double h = 0.0;
    double c = 0.0;
    double f = 0.0;
    double g = 0.0;
};

DriftReport drift_report(const Trajectory& traj);

}  // namespace lvhp
