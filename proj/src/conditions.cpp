#include "conditions.hpp"

#include <cmath>
#include <limits>

#include "errors.hpp"

namespace opmfp {

namespace {

// Work cap for grid-sampled scans; beyond this the grid must be reduced.
constexpr std::uint64_t kGridWorkBudget = 50'000'000;

double delta_from_values(const Space& space, const Point& x, const Point& y, const Point& u,
                         const Point& v, const Point& fxy, const Point& fyx, const Point& fuv,
                         const Point& fvu) {
    // Pairing keeps delta(x,y,u,v) == delta(y,x,v,u) bitwise.
    double num_a = dist(space, x, fuv) + dist(space, u, fxy);
    double num_b = dist(space, y, fvu) + dist(space, v, fyx);
    double den_a = dist(space, x, fxy) + dist(space, u, fuv);
    double den_b = dist(space, y, fyx) + dist(space, v, fvu);
    return (num_a + num_b) / (1.0 + 2.0 * (den_a + den_b));
}

struct Quad {
    Point x, y, u, v;
    Point fxy, fyx, fuv, fvu;
    double dxu = 0.0, dyv = 0.0;
};

/// Calls fn(quad) for every comparable quadruple (u <= x, y <= v), exactly
/// on the finite backend and over the sampling grid on the real-vector
/// backend. Returns the number of quadruples visited.
template <typename Fn>
std::uint64_t scan_quadruples(const CoupledMap& map, const Space& space, const GridSpec& grid, Fn&& fn) {
    std::uint64_t count = 0;
    Quad q;
    if (is_finite_space(space)) {
        const auto& fs = as_finite(space);
        for (const auto& [x, y, u, v] : comparable_quadruples(fs)) {
            q.x = Point(x);
            q.y = Point(y);
            q.u = Point(u);
            q.v = Point(v);
            q.fxy = apply_map(map, space, q.x, q.y);
            q.fyx = apply_map(map, space, q.y, q.x);
            q.fuv = apply_map(map, space, q.u, q.v);
            q.fvu = apply_map(map, space, q.v, q.u);
            q.dxu = fs.dist(x, u);
            q.dyv = fs.dist(y, v);
            ++count;
            fn(q);
        }
        return count;
    }
    const auto& rs = as_real(space);
    auto points = grid_points(rs, grid.points_per_axis);
    std::vector<std::pair<size_t, size_t>> pairs_leq;  // (a,b) with point[a] <= point[b]
    for (size_t a = 0; a < points.size(); ++a)
        for (size_t b = 0; b < points.size(); ++b)
            if (rs.leq(points[a], points[b])) pairs_leq.emplace_back(a, b);
    std::uint64_t total = static_cast<std::uint64_t>(pairs_leq.size()) * pairs_leq.size();
    if (total > kGridWorkBudget)
        throw SchemaError("grid too large: " + std::to_string(total) +
                          " comparable quadruples to sample; reduce the grid resolution");
    // F over all ordered pairs of grid points, computed once.
    const auto* em_ptr = std::get_if<ExprMap>(&map);
    if (!em_ptr) throw BackendError("real-vector space requires a component-expression map");
    std::vector<Vec> fmat(points.size() * points.size());
    const auto& em = *em_ptr;
    for (size_t a = 0; a < points.size(); ++a)
        for (size_t b = 0; b < points.size(); ++b)
            fmat[a * points.size() + b] = em.apply(points[a], points[b]);
    auto f = [&](size_t a, size_t b) -> const Vec& { return fmat[a * points.size() + b]; };
    for (const auto& [ui, xi] : pairs_leq)
        for (const auto& [yi, vi] : pairs_leq) {
            q.x = Point(points[xi]);
            q.y = Point(points[yi]);
            q.u = Point(points[ui]);
            q.v = Point(points[vi]);
            q.fxy = Point(f(xi, yi));
            q.fyx = Point(f(yi, xi));
            q.fuv = Point(f(ui, vi));
            q.fvu = Point(f(vi, ui));
            q.dxu = rs.dist(points[xi], points[ui]);
            q.dyv = rs.dist(points[yi], points[vi]);
            ++count;
            fn(q);
        }
    return count;
}

void mark_sampled(ConditionReport& r, const Space& space, const GridSpec& grid) {
    if (!is_finite_space(space)) {
        r.sampled = true;
        r.grid_points = grid.points_per_axis;
    }
}

} // namespace

std::string condition_token(ConditionName c) {
    switch (c) {
        case ConditionName::MixedMonotone: return "mixed-monotone";
        case ConditionName::ClassicalK: return "classical";
        case ConditionName::NewDelta: return "new";
        case ConditionName::RemarkRatio: return "remark";
    }
    return "new";
}

double delta(const CoupledMap& map, const Space& space, const Point& x, const Point& y, const Point& u,
             const Point& v) {
    Point fxy = apply_map(map, space, x, y);
    Point fyx = apply_map(map, space, y, x);
    Point fuv = apply_map(map, space, u, v);
    Point fvu = apply_map(map, space, v, u);
    return delta_from_values(space, x, y, u, v, fxy, fyx, fuv, fvu);
}

ConditionReport is_mixed_monotone(const CoupledMap& map, const Space& space, const GridSpec& grid) {
    ConditionReport report;
    report.condition = ConditionName::MixedMonotone;
    mark_sampled(report, space, grid);

    auto check_pairs = [&](const std::vector<Point>& points,
                           const std::vector<std::pair<size_t, size_t>>& pairs_leq) {
        // F nondecreasing in the first argument.
        for (const auto& fixed : points)
            for (const auto& [lo, hi] : pairs_leq) {
                ++report.quadruples_checked;
                Point f_lo = apply_map(map, space, points[lo], fixed);
                Point f_hi = apply_map(map, space, points[hi], fixed);
                if (!leq(space, f_lo, f_hi)) {
                    if (!report.monotone_violation)
                        report.monotone_violation =
                            MonotoneWitness{true, fixed, points[lo], points[hi], f_lo, f_hi};
                    report.holds = false;
                }
            }
        // F nonincreasing in the second argument.
        for (const auto& fixed : points)
            for (const auto& [lo, hi] : pairs_leq) {
                ++report.quadruples_checked;
                Point f_lo = apply_map(map, space, fixed, points[lo]);
                Point f_hi = apply_map(map, space, fixed, points[hi]);
                if (!leq(space, f_hi, f_lo)) {
                    if (!report.monotone_violation)
                        report.monotone_violation =
                            MonotoneWitness{false, fixed, points[lo], points[hi], f_lo, f_hi};
                    report.holds = false;
                }
            }
    };

    std::vector<Point> points;
    std::vector<std::pair<size_t, size_t>> pairs_leq;
    if (is_finite_space(space)) {
        const auto& fs = as_finite(space);
        for (int i = 0; i < fs.size(); ++i) points.emplace_back(i);
    } else {
        for (auto& g : grid_points(as_real(space), grid.points_per_axis)) points.emplace_back(std::move(g));
    }
    for (size_t a = 0; a < points.size(); ++a)
        for (size_t b = 0; b < points.size(); ++b)
            if (leq(space, points[a], points[b])) pairs_leq.emplace_back(a, b);
    std::uint64_t work = 2 * static_cast<std::uint64_t>(points.size()) * pairs_leq.size();
    if (!is_finite_space(space) && work > kGridWorkBudget)
        throw SchemaError("grid too large: " + std::to_string(work) +
                          " monotonicity comparisons to sample; reduce the grid resolution");
    check_pairs(points, pairs_leq);
    return report;
}

ConditionReport check_new_condition(const CoupledMap& map, const Space& space, const GridSpec& grid) {
    ConditionReport report;
    report.condition = ConditionName::NewDelta;
    mark_sampled(report, space, grid);
    double worst_amount = 0.0;
    report.quadruples_checked = scan_quadruples(map, space, grid, [&](const Quad& q) {
        double lhs = dist(space, q.fxy, q.fuv);
        double rhs = delta_from_values(space, q.x, q.y, q.u, q.v, q.fxy, q.fyx, q.fuv, q.fvu) *
                     (q.dxu + q.dyv);
        if (lhs > rhs) {
            report.holds = false;
            double amount = lhs - rhs;
            if (!report.worst_violation || amount > worst_amount) {
                worst_amount = amount;
                report.worst_violation = QuadWitness{q.x, q.y, q.u, q.v, lhs, rhs};
            }
        }
    });
    return report;
}

ConditionReport check_classical_condition(const CoupledMap& map, const Space& space, const GridSpec& grid) {
    ConditionReport report;
    report.condition = ConditionName::ClassicalK;
    mark_sampled(report, space, grid);
    double k = 0.0;
    std::optional<QuadWitness> witness;
    bool zero_denominator_violation = false;
    report.quadruples_checked = scan_quadruples(map, space, grid, [&](const Quad& q) {
        double lhs = dist(space, q.fxy, q.fuv);
        double sum = q.dxu + q.dyv;
        if (sum == 0.0) {
            // The right side is 0 for every k, so the condition forces lhs = 0.
            if (lhs > 0.0 && !zero_denominator_violation) {
                zero_denominator_violation = true;
                witness = QuadWitness{q.x, q.y, q.u, q.v, lhs, sum};
            }
            return;
        }
        double ratio = 2.0 * lhs / sum;
        if (ratio > k) {
            k = ratio;
            witness = QuadWitness{q.x, q.y, q.u, q.v, lhs, sum};
        }
    });
    if (zero_denominator_violation) {
        report.holds = false;
        report.infeasible = true;
        report.minimal_k = std::numeric_limits<double>::infinity();
        report.worst_violation = witness;
        return report;
    }
    report.minimal_k = k;
    report.holds = k < 1.0;
    report.infeasible = !report.holds;
    if (!report.holds) report.worst_violation = witness;
    return report;
}

ConditionReport check_remark_ratio(const CoupledMap& map, const Space& space, const GridSpec& grid) {
    ConditionReport report;
    report.condition = ConditionName::RemarkRatio;
    mark_sampled(report, space, grid);
    double worst_amount = 0.0;
    report.quadruples_checked = scan_quadruples(map, space, grid, [&](const Quad& q) {
        double sum = q.dxu + q.dyv;
        if (!(sum < 0.25)) return;
        ++report.premise_count;
        double d = delta_from_values(space, q.x, q.y, q.u, q.v, q.fxy, q.fyx, q.fuv, q.fvu);
        if (!(d < 0.5)) {
            report.holds = false;
            double amount = d - 0.5;
            if (!report.worst_violation || amount > worst_amount) {
                worst_amount = amount;
                report.worst_violation = QuadWitness{q.x, q.y, q.u, q.v, d, 0.5};
            }
        }
    });
    return report;
}

bool classical_holds_with_k(const CoupledMap& map, const Space& space, double k, const GridSpec& grid) {
    bool ok = true;
    scan_quadruples(map, space, grid, [&](const Quad& q) {
        double lhs = dist(space, q.fxy, q.fuv);
        double sum = q.dxu + q.dyv;
        if (sum == 0.0) {
            if (lhs > 0.0) ok = false;
            return;
        }
        if (2.0 * lhs / sum > k) ok = false;
    });
    return ok;
}

bool is_coupled_fixed_point(const CoupledMap& map, const Space& space, const Point& x, const Point& y,
                            double eps_fp) {
    Point fxy = apply_map(map, space, x, y);
    Point fyx = apply_map(map, space, y, x);
    if (is_finite_space(space)) return fxy == x && fyx == y;
    return dist(space, fxy, x) <= eps_fp && dist(space, fyx, y) <= eps_fp;
}

} // namespace opmfp
