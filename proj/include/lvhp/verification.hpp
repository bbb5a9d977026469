#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace lvhp {

/// One line of a machine-readable report.
struct CheckResult {
    std::string name;
    std::string paper_ref;  // which identity or result the check exercises
    double value = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

/// Builds a result with pass = (value <= threshold).
CheckResult check_at_most(std::string name, std::string ref, double value, double threshold);

void to_json(nlohmann::json& j, const CheckResult& r);

struct VerifyConfig {
    long samples = 100000;
    std::uint64_t seed = 42;
    double half_width = 10.0;
    /// Step of the RK4 drift check from (1,2,3) over [0, 0.2].
    double dt = 1e-3;
};

/// Residual summaries of every structural identity of the system.
std::vector<CheckResult> run_verification(const VerifyConfig& cfg);

}  // namespace lvhp
