#include "lvhp/compactification.hpp"

#include "lvhp/lv_model.hpp"

#include <cmath>
#include <stdexcept>

namespace lvhp {

namespace {

bool is_v_chart(Chart c) { return c == Chart::V1 || c == Chart::V2 || c == Chart::V3; }

// Coordinate that divides, then the two that are divided, in chart order.
std::array<int, 3> chart_axes(Chart c) {
    switch (c) {
        case Chart::U1:
        case Chart::V1: return {0, 1, 2};
        case Chart::U2:
        case Chart::V2: return {1, 0, 2};
        case Chart::U3:
        case Chart::V3: return {2, 0, 1};
    }
    throw std::invalid_argument("bad chart");
}

}  // namespace

const char* to_string(Chart c) {
    static constexpr const char* names[] = {"U1", "U2", "U3", "V1", "V2", "V3"};
    return names[static_cast<int>(c)];
}

Chart parse_chart(const std::string& s) {
    for (Chart c : kAllCharts)
        if (s == to_string(c)) return c;
    throw std::invalid_argument("unknown chart '" + s + "'");
}

const char* to_string(NodeType t) {
    switch (t) {
        case NodeType::repelling_node: return "repelling_node";
        case NodeType::attracting_node: return "attracting_node";
        case NodeType::saddle: return "saddle";
    }
    return "?";
}

ChartState to_chart(Chart chart, const State& p) {
    const auto [k, i, j] = chart_axes(chart);
    const double d = p[k];
    const bool v = is_v_chart(chart);
    if (d == 0.0 || (v ? d > 0.0 : d < 0.0))
        throw DomainError(std::string("point outside chart ") + to_string(chart));
    return {p[i] / d, p[j] / d, 1.0 / std::abs(d)};
}

State from_chart(Chart chart, const ChartState& cs) {
    if (!(cs.z3 > 0.0)) throw DomainError("from_chart: z3 must be positive (finite point)");
    const auto [k, i, j] = chart_axes(chart);
    const double d = (is_v_chart(chart) ? -1.0 : 1.0) / cs.z3;
    Vec3 p;
    p[k] = d;
    p[i] = cs.z1 * d;
    p[j] = cs.z2 * d;
    return State(p);
}

Vec3 compactified_field(const ChartState& cs) {
    return {2.0 * cs.z1 * (1.0 - cs.z1), 2.0 * cs.z2 * (1.0 - cs.z2), cs.z3 * (1.0 - cs.z1 - cs.z2)};
}

Vec3 chart_field(Chart chart, const ChartState& cs) {
    const Vec3 f = compactified_field(cs);
    return is_v_chart(chart) ? -f : f;
}

Vec3 pulled_back_field(Chart chart, const ChartState& cs) {
    const State p = from_chart(chart, cs);
    const Vec3 f = lv_field(p);
    const auto [k, i, j] = chart_axes(chart);
    const double d = p[k];
    // d/dt (p_i / d) = (f_i d - p_i f_d) / d^2; d/dt (1/|d|) = -sign(d) f_d / d^2
    const double d2 = d * d;
    Vec3 dz{(f[i] * d - p[i] * f[k]) / d2, (f[j] * d - p[j] * f[k]) / d2, -std::copysign(1.0, d) * f[k] / d2};
    return cs.z3 * dz;
}

ChartState closed_form_flow(const FlowConstants& fc, double t) {
    const double e2 = std::exp(2.0 * t);
    const double den1 = e2 + fc.alpha1;
    const double den2 = e2 + fc.alpha2;
    for (double alpha : {fc.alpha1, fc.alpha2}) {
        if (e2 + alpha == 0.0)
            throw DomainError("closed_form_flow: singular denominator", 0.5 * std::log(-alpha));
    }
    return {e2 / den1, e2 / den2, fc.k3 * std::exp(t) / (std::sqrt(std::abs(den1)) * std::sqrt(std::abs(den2)))};
}

FlowConstants fit_constants(const ChartState& cs0) {
    if (cs0.z1 == 0.0 || cs0.z2 == 0.0)
        throw DomainError("fit_constants: z1 or z2 is zero; orbit lies on an invariant plane z_i = 0");
    FlowConstants fc;
    fc.alpha1 = (1.0 - cs0.z1) / cs0.z1;
    fc.alpha2 = (1.0 - cs0.z2) / cs0.z2;
    fc.k3 = cs0.z3 * std::sqrt(std::abs(1.0 + fc.alpha1)) * std::sqrt(std::abs(1.0 + fc.alpha2));
    return fc;
}

std::array<double, 2> infinity_field(double z1, double z2) { return {2.0 * z1 * (1.0 - z1), 2.0 * z2 * (1.0 - z2)}; }

std::vector<InfinityEquilibrium> infinity_equilibria() {
    // Decoupled logistic pair: each coordinate sits at 0 (slope 2) or 1 (slope -2).
    std::vector<InfinityEquilibrium> out;
    for (double a : {0.0, 1.0})
        for (double b : {0.0, 1.0}) {
            const double la = 2.0 - 4.0 * a;
            const double lb = 2.0 - 4.0 * b;
            InfinityEquilibrium e{{a, b}, {std::max(la, lb), std::min(la, lb)}, NodeType::saddle};
            if (la > 0 && lb > 0) e.type = NodeType::repelling_node;
            if (la < 0 && lb < 0) e.type = NodeType::attracting_node;
            out.push_back(e);
        }
    return out;
}

std::vector<InfinityGridRow> infinity_field_grid(double lo, double hi, int n) {
    if (n < 2 || !(hi > lo)) throw std::invalid_argument("infinity_field_grid: need n >= 2 and hi > lo");
    std::vector<InfinityGridRow> rows;
    rows.reserve(static_cast<std::size_t>(n) * n);
    const double step = (hi - lo) / (n - 1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const double z1 = lo + a * step, z2 = lo + b * step;
            const auto d = infinity_field(z1, z2);
            rows.push_back({z1, z2, d[0], d[1]});
        }
    return rows;
}

}  // namespace lvhp
