#include "lvhp/fibers.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "lvhp/lv_model.hpp"

namespace lvhp {

namespace {

struct Residual {
    double h, c;

    double operator()(double x, double y, double z) const {
        const double gh = std::sqrt((y - z) * (y - z) + 2.0 * x * x);
        const double gc = std::sqrt(2.0 * y * y + (z - x) * (z - x));
        const double rh = std::abs(x * (y - z) - h) / (1.0 + gh);
        const double rc = std::abs(y * (z - x) - c) / (1.0 + gc);
        return std::max(rh, rc);
    }
};

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t a) {
        while (parent_[a] != a) {
            parent_[a] = parent_[parent_[a]];
            a = parent_[a];
        }
        return a;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

void mark_slabs(const Residual& res, int n, double lo, double step, double limit, int i_begin, int i_end,
                std::vector<std::uint8_t>& marks) {
    const std::size_t np = static_cast<std::size_t>(n) + 1;
    std::vector<double> prev(np * np), next(np * np);
    auto fill_plane = [&](int i, std::vector<double>& plane) {
        const double x = lo + i * step;
        for (std::size_t j = 0; j < np; ++j)
            for (std::size_t k = 0; k < np; ++k) plane[j * np + k] = res(x, lo + j * step, lo + k * step);
    };
    fill_plane(i_begin, prev);
    for (int i = i_begin; i < i_end; ++i) {
        fill_plane(i + 1, next);
        const double xc = lo + (i + 0.5) * step;
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const std::size_t a = static_cast<std::size_t>(j) * np + k;
                double r = std::min({prev[a], prev[a + 1], prev[a + np], prev[a + np + 1], next[a], next[a + 1],
                                     next[a + np], next[a + np + 1]});
                if (r >= limit) r = std::min(r, res(xc, lo + (j + 0.5) * step, lo + (k + 0.5) * step));
                if (r < limit) marks[(static_cast<std::size_t>(i) * n + j) * n + k] = 1;
            }
        std::swap(prev, next);
    }
}

}  // namespace

FiberRaster rasterize_fiber(const ECValue& v, const FiberGridOptions& opts) {
    const int n = opts.cells_per_axis;
    if (n < 41) throw std::invalid_argument("rasterize_fiber: cells_per_axis must be at least 41");
    if (!(opts.box_half_width > 0.0)) throw std::invalid_argument("rasterize_fiber: box_half_width must be positive");
    if (!(opts.thickness > 0.0)) throw std::invalid_argument("rasterize_fiber: thickness must be positive");
    if (!std::isfinite(v.h) || !std::isfinite(v.c)) throw std::invalid_argument("rasterize_fiber: non-finite value");

    const double lo = -opts.box_half_width;
    const double step = 2.0 * opts.box_half_width / n;
    const double limit = opts.thickness * step * std::sqrt(3.0);
    const Residual res{v.h, v.c};

    std::vector<std::uint8_t> marks(static_cast<std::size_t>(n) * n * n, 0);
    unsigned workers = opts.workers ? opts.workers : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(n));
    if (workers == 1) {
        mark_slabs(res, n, lo, step, limit, 0, n, marks);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            const int b = static_cast<int>(static_cast<long>(n) * w / workers);
            const int e = static_cast<int>(static_cast<long>(n) * (w + 1) / workers);
            pool.emplace_back([&, b, e] { mark_slabs(res, n, lo, step, limit, b, e, marks); });
        }
    }

    std::vector<std::size_t> cells;
    for (std::size_t idx = 0; idx < marks.size(); ++idx)
        if (marks[idx]) cells.push_back(idx);
    if (cells.empty()) throw DomainError("fiber misses box");

    const std::size_t nn = static_cast<std::size_t>(n);
    DisjointSets sets(cells.size());
    auto position = [&](std::size_t idx) -> std::ptrdiff_t {
        auto it = std::lower_bound(cells.begin(), cells.end(), idx);
        return (it != cells.end() && *it == idx) ? it - cells.begin() : -1;
    };
    for (std::size_t p = 0; p < cells.size(); ++p) {
        const std::size_t idx = cells[p];
        const std::size_t k = idx % nn, j = (idx / nn) % nn, i = idx / (nn * nn);
        if (i + 1 < nn)
            if (auto q = position(idx + nn * nn); q >= 0) sets.unite(p, static_cast<std::size_t>(q));
        if (j + 1 < nn)
            if (auto q = position(idx + nn); q >= 0) sets.unite(p, static_cast<std::size_t>(q));
        if (k + 1 < nn)
            if (auto q = position(idx + 1); q >= 0) sets.unite(p, static_cast<std::size_t>(q));
    }

    const std::size_t shell = static_cast<std::size_t>(std::lround(0.1 * n));
    auto in_core = [&](std::size_t a) { return a >= shell && a < nn - shell; };
    std::vector<std::uint8_t> is_root(cells.size(), 0), reaches_core(cells.size(), 0);
    for (std::size_t p = 0; p < cells.size(); ++p) {
        const std::size_t root = sets.find(p);
        is_root[root] = 1;
        const std::size_t idx = cells[p];
        if (in_core(idx % nn) && in_core((idx / nn) % nn) && in_core(idx / (nn * nn))) reaches_core[root] = 1;
    }

    FiberRaster out;
    out.marked_cells = cells.size();
    out.total_components = static_cast<int>(std::count(is_root.begin(), is_root.end(), 1));
    out.core_components = static_cast<int>(std::count(reaches_core.begin(), reaches_core.end(), 1));
    return out;
}

int count_components(const ECValue& v, double box_half_width, int cells_per_axis, double thickness,
                     unsigned workers) {
    return rasterize_fiber(v, {box_half_width, cells_per_axis, thickness, workers}).core_components;
}

TableRow expected_row(StratumLabel s) {
    switch (s) {
        case StratumLabel::Sigma1Star:
        case StratumLabel::Sigma2:
        case StratumLabel::Sigma3Star: return {2, 8, 2};
        case StratumLabel::Sigma0: return {1, 8, 1};
        default: return {4, 4, 0};
    }
}

std::vector<State> fiber_equilibria(const ECValue& v) {
    switch (classify(v)) {
        case StratumLabel::Sigma1Star: {
            const double m = std::sqrt(v.c);
            return {equilibrium(Family::E1, m), equilibrium(Family::E1, -m)};
        }
        case StratumLabel::Sigma2: {
            const double m = std::sqrt(-v.h);
            return {equilibrium(Family::E2, m), equilibrium(Family::E2, -m)};
        }
        case StratumLabel::Sigma3Star: {
            const double m = std::sqrt(v.h);
            return {equilibrium(Family::E3, m), equilibrium(Family::E3, -m)};
        }
        case StratumLabel::Sigma0: return {State(0.0, 0.0, 0.0)};
        default: return {};
    }
}

FiberReport fiber_report(const ECValue& v, const FiberGridOptions& opts) {
    FiberReport r;
    r.value = v;
    r.stratum = classify(v);
    r.expected = expected_row(r.stratum);
    r.level_set_components = rasterize_fiber(v, opts).core_components;
    r.orbit_count = r.expected.orbit_count;
    r.equilibria_on_fiber = fiber_equilibria(v);
    r.agrees = r.level_set_components == r.expected.level_set_components &&
               static_cast<int>(r.equilibria_on_fiber.size()) == r.expected.equilibria;
    return r;
}

FiberOrbitCheck orbit_on_fiber_check(const ECValue& v, double t_end, double tol) {
    const Trajectory traj = integrate(lv_field, fiber_seed(v), t_end, IntegratorSettings::adaptive(tol));
    FiberOrbitCheck out;
    out.termination = traj.termination;
    for (const auto& s : traj.samples) {
        const double scale = std::max(1.0, norm_inf(s.state.vec()) * norm_inf(s.state.vec()));
        out.max_deviation =
            std::max({out.max_deviation, std::abs(s.inv.h - v.h) / scale, std::abs(s.inv.c - v.c) / scale});
    }
    return out;
}

}  // namespace lvhp
