#pragma once

#include <array>
#include <string>

#include "lvhp/equilibria.hpp"
#include "lvhp/types.hpp"

namespace lvhp {

/// Value of the energy-Casimir map (H, C).
struct ECValue {
    double h = 0.0;
    double c = 0.0;

    friend bool operator==(const ECValue&, const ECValue&) = default;
};

/// The nine strata of the image plane. Groups of three by the sign of c.
enum class StratumLabel {
    Sigma1Left,   // h < 0, c > 0
    Sigma1Star,   // h = 0, c > 0
    Sigma1Right,  // h > 0, c > 0
    Sigma2,       // h < 0, c = 0
    Sigma0,       // h = c = 0
    Sigma0Right,  // h > 0, c = 0
    Sigma3Left,   // c < min(-h, 0)
    Sigma3Star,   // c < 0, c = -h
    Sigma3Right,  // -h < c < 0
};

inline constexpr std::array<StratumLabel, 9> kAllStrata{
    StratumLabel::Sigma1Left, StratumLabel::Sigma1Star, StratumLabel::Sigma1Right,
    StratumLabel::Sigma2,     StratumLabel::Sigma0,     StratumLabel::Sigma0Right,
    StratumLabel::Sigma3Left, StratumLabel::Sigma3Star, StratumLabel::Sigma3Right};

const char* to_string(StratumLabel s);

ECValue ec(const State& p);

/// Evaluates the defining predicate of one stratum with exact comparisons.
bool in_stratum(StratumLabel s, const ECValue& v);

StratumLabel classify(const ECValue& v);

/// Moves h, c and c + h to exactly zero when within tol of it. tol = 0 is
/// the identity.
ECValue snap(const ECValue& v, double tol);

/// E1 -> (0, M^2), E2 -> (-M^2, 0), E3 -> (M^2, -M^2).
ECValue equilibrium_image(Family family, double m);

enum class LeafKind { hyperbolic_cylinder, intersecting_planes };

struct LeafDescription {
    LeafKind kind;
    std::string description;
};

const char* to_string(LeafKind k);

/// Symplectic leaf {y(z - x) = c}.
LeafDescription leaf_type(double c);

/// A point of the fiber over v, found constructively.
State fiber_seed(const ECValue& v);

struct ConicWeights {
    double w1 = 0.0;  // along (0, 1), the E1 image ray
    double w2 = 0.0;  // along (-1, 0), the E2 image ray
    double w3 = 0.0;  // along (1, -1), the E3 image ray
};

/// Nonnegative weights with v = w1 (0,1) + w2 (-1,0) + w3 (1,-1); w2 is the
/// smallest admissible value.
ConicWeights convex_generation_witness(const ECValue& v);

}  // namespace lvhp
