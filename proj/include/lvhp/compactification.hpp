#pragma once

#include <array>
#include <string>
#include <vector>

#include "lvhp/types.hpp"

namespace lvhp {

/// Affine charts of the Poincare ball. U_i covers x_i > 0, V_i covers x_i < 0.
enum class Chart { U1, U2, U3, V1, V2, V3 };

inline constexpr std::array<Chart, 6> kAllCharts{Chart::U1, Chart::U2, Chart::U3, Chart::V1, Chart::V2, Chart::V3};

const char* to_string(Chart c);
Chart parse_chart(const std::string& s);

/// Chart coordinates; z3 >= 0 on the closed ball and z3 = 0 is infinity.
struct ChartState {
    double z1 = 0.0;
    double z2 = 0.0;
    double z3 = 0.0;

    Vec3 vec() const { return {z1, z2, z3}; }
    static ChartState from(const Vec3& v) { return {v[0], v[1], v[2]}; }
};

/// Constants of the closed-form chart flow.
///   z_i(t) = e^{2t} / (e^{2t} + alpha_i),  i = 1, 2
///   z3(t)  = k3 e^t / sqrt(|e^{2t} + alpha1| |e^{2t} + alpha2|)
/// alpha_i = e^{k_i} > 0 gives orbits with 0 < z_i < 1; other real values
/// cover the rest of the plane.
struct FlowConstants {
    double alpha1 = 0.0;
    double alpha2 = 0.0;
    double k3 = 0.0;
};

enum class NodeType { repelling_node, attracting_node, saddle };

const char* to_string(NodeType t);

struct InfinityEquilibrium {
    std::array<double, 2> point;
    std::array<double, 2> eigenvalues;  // descending
    NodeType type;
};

/// U_i: (x_j / x_i, x_k / x_i, 1 / x_i) for x_i > 0. V_i uses the same two
/// quotients and z3 = 1 / |x_i| for x_i < 0. Throws DomainError otherwise.
ChartState to_chart(Chart chart, const State& p);

/// Inverse of to_chart for z3 > 0.
State from_chart(Chart chart, const ChartState& cs);

/// Compactified field of the U charts (rescaled time):
///   (2 z1 (1 - z1), 2 z2 (1 - z2), z3 (1 - z1 - z2)).
Vec3 compactified_field(const ChartState& cs);

/// compactified_field for U charts, its negation for V charts.
Vec3 chart_field(Chart chart, const ChartState& cs);

/// The Lotka-Volterra field transported into chart coordinates by the chain
/// rule and multiplied by z3 (the degree-1 time rescaling). Independent of
/// compactified_field; requires z3 > 0.
Vec3 pulled_back_field(Chart chart, const ChartState& cs);

ChartState closed_form_flow(const FlowConstants& fc, double t);

/// Solves the closed form for its constants at t = 0. Throws DomainError when
/// z1 or z2 is zero (those orbits stay on the invariant planes z_i = 0).
FlowConstants fit_constants(const ChartState& cs0);

/// Restriction of the chart field to the invariant plane z3 = 0.
std::array<double, 2> infinity_field(double z1, double z2);

std::vector<InfinityEquilibrium> infinity_equilibria();

struct InfinityGridRow {
    double z1, z2, dz1, dz2;
};

/// Vector field of the infinity system on an n x n grid over [lo, hi]^2.
std::vector<InfinityGridRow> infinity_field_grid(double lo, double hi, int n);

}  // namespace lvhp
