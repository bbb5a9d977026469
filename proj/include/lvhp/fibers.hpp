#pragma once

#include <cstddef>
#include <vector>

#include "lvhp/ec_analysis.hpp"
#include "lvhp/integrator.hpp"
#include "lvhp/types.hpp"

namespace lvhp {

struct FiberGridOptions {
    double box_half_width = 6.0;
    int cells_per_axis = 161;
    /// Marking threshold in units of the cell diagonal.
    double thickness = 1.0;
    /// Threads used for cell marking; 0 means hardware concurrency.
    unsigned workers = 0;
};

struct FiberRaster {
    std::size_t marked_cells = 0;
    int total_components = 0;
    /// Components reaching the core (the box minus its outer 10% shell).
    int core_components = 0;
};

/// Rasterizes a thickened fiber {H = h, C = c} over [-L, L]^3.
///
/// A cell is marked when the smallest gradient-normalized residual
///   max(|H - h| / (1 + |grad H|), |C - c| / (1 + |grad C|))
/// over its 8 corners and center is below thickness * cell diagonal. Marked
/// cells are joined across shared faces with a union-find; components that
/// only live in the boundary shell are discarded. Marking is split over
/// x-slabs and does not depend on the worker count.
///
/// Throws std::invalid_argument for cells_per_axis < 41 or non-positive box
/// and thickness, DomainError("fiber misses box") when nothing is marked.
FiberRaster rasterize_fiber(const ECValue& v, const FiberGridOptions& opts = {});

int count_components(const ECValue& v, double box_half_width, int cells_per_axis, double thickness,
                     unsigned workers = 0);

/// Fiber type over a stratum: connected pieces of the level set, orbits and
/// equilibria in the orbit decomposition.
struct TableRow {
    int level_set_components = 0;
    int orbit_count = 0;
    int equilibria = 0;
};

TableRow expected_row(StratumLabel s);

struct FiberReport {
    ECValue value;
    StratumLabel stratum = StratumLabel::Sigma0;
    int level_set_components = 0;
    int orbit_count = 0;
    std::vector<State> equilibria_on_fiber;
    TableRow expected;
    /// Numeric component count and equilibrium count match the table row.
    bool agrees = false;
};

/// Equilibria lying on the fiber over v (those whose image is v).
std::vector<State> fiber_equilibria(const ECValue& v);

FiberReport fiber_report(const ECValue& v, const FiberGridOptions& opts = {});

struct FiberOrbitCheck {
    double max_deviation = 0.0;
    Termination termination = Termination::completed;
};

/// Integrates from fiber_seed(v) and measures the largest departure from the
/// fiber, max(|H - h|, |C - c|) / max(1, |p|^2), over all samples. Most
/// orbits blow up in finite time, so the deviation is scaled by the rounding
/// level of the quadratic invariants.
FiberOrbitCheck orbit_on_fiber_check(const ECValue& v, double t_end, double tol = 1e-10);

}  // namespace lvhp
