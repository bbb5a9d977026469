#include "lvhp/verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "lvhp/integrator.hpp"
#include "lvhp/lax.hpp"
#include "lvhp/lv_model.hpp"
#include "lvhp/poisson.hpp"
#include "lvhp/sampling.hpp"

namespace lvhp {

CheckResult check_at_most(std::string name, std::string ref, double value, double threshold) {
    return {std::move(name), std::move(ref), value, threshold, value <= threshold};
}

void to_json(nlohmann::json& j, const CheckResult& r) {
    j = nlohmann::json{{"name", r.name},
                       {"paper_ref", r.paper_ref},
                       {"value", r.value},
                       {"threshold", r.threshold},
                       {"pass", r.pass}};
}

std::vector<CheckResult> run_verification(const VerifyConfig& cfg) {
    const ScalarField& H = hamiltonian();
    const ScalarField& C = casimir();

    double realization = 0, conservation = 0, casimir_res = 0, jacobi = 0, poly = 0, lax = 0, trace = 0;
    Sampler poisson_rng(cfg.seed);
    for (long n = 0; n < cfg.samples; ++n) {
        const State p = poisson_rng.state(cfg.half_width);
        const Vec3 f = lv_field(p);
        realization = std::max(realization, norm_inf(ham_vector_field(C, H, p) - f));
        conservation = std::max({conservation, std::abs(dot(H.gradient(p), f)), std::abs(dot(C.gradient(p), f))});
        casimir_res = std::max(casimir_res, norm_inf(casimir_residual(C, p)));
        jacobi = std::max(jacobi, jacobiator(C, p));
        lax = std::max(lax, lax_residual(p));
        const auto si = spectral_invariant(p);
        trace = std::max(trace, std::abs(si.trace_l2 - si.reference) / (1.0 + std::abs(si.reference)));
    }

    Sampler poly_rng(cfg.seed + 1);
    for (long n = 0; n < cfg.samples; ++n) {
        const State p = poly_rng.state(5.0);
        const auto [df, dg] = invariant_identity_residual(p);
        const Invariants inv = invariants(p);
        poly = std::max({poly, std::abs(df) / (1.0 + std::abs(inv.f)), std::abs(dg) / (1.0 + std::abs(inv.g))});
    }

    double sl2_res = 0, sl2_comb = 0, sl2_matrix = 0;
    Sampler sl2_rng(cfg.seed + 2);
    const long groups = std::max(1L, cfg.samples / 1000);
    for (long g = 0; g < std::min(groups, 100L); ++g) {
        const SL2Params q = sl2_rng.sl2();
        const SL2Fields fields = sl2_fields(q);
        for (int n = 0; n < 1000; ++n) {
            const State p = sl2_rng.state(cfg.half_width);
            sl2_res = std::max(sl2_res, norm_inf(sl2_realization_residual(q, fields, p)));
            sl2_matrix = std::max(sl2_matrix, max_abs(sl2_poisson_matrix(q, p) - tensor_from_generator(fields.casimir, p)));
            const double hc = H.evaluate(p), cc = C.evaluate(p);
            const double e1 = std::abs(fields.casimir.evaluate(p) - (q.a() * cc + q.b() * hc)) /
                              (1.0 + std::abs(q.a() * cc) + std::abs(q.b() * hc));
            const double e2 = std::abs(fields.hamiltonian.evaluate(p) - (q.c() * cc + q.d() * hc)) /
                              (1.0 + std::abs(q.c() * cc) + std::abs(q.d() * hc));
            sl2_comb = std::max({sl2_comb, e1, e2});
        }
    }

    const Trajectory traj = integrate(lv_field, State(1, 2, 3), 0.2, IntegratorSettings::fixed(cfg.dt));
    const DriftReport drift = drift_report(traj);
    const double drift_hc = traj.termination == Termination::completed ? std::max(drift.h, drift.c)
                                                                        : std::numeric_limits<double>::infinity();

    return {
        check_at_most("realization", "Hamilton-Poisson realization Pi_C grad H = F", realization, 1e-9),
        check_at_most("conservation", "H and C are first integrals", conservation, 1e-9),
        check_at_most("casimir", "C is a Casimir of Pi_C", casimir_res, 1e-9),
        check_at_most("jacobi", "Jacobi identity of the generated bracket", jacobi, 1e-7),
        check_at_most("sl2_realization", "SL(2,R) family of realizations", sl2_res, 1e-8),
        check_at_most("sl2_matrix", "printed Pi_ab equals the tensor generated by C_ab", sl2_matrix, 1e-12),
        check_at_most("sl2_linear_combination", "C_ab = aC + bH and H_cd = cC + dH", sl2_comb, 1e-10),
        check_at_most("polynomial_invariants", "f = CH(C+H), g = [C^2 + H^2 + (C+H)^2]/2", poly, 1e-7),
        check_at_most("lax_residual", "Lax form dL/dt = [L, B]", lax, 1e-9),
        check_at_most("lax_trace", "tr L^2 = 4(H - C)", trace, 1e-9),
        check_at_most("rk4_drift", "conservation of H and C along the numerical flow", drift_hc, 1e-9),
    };
}

}  // namespace lvhp
