#ifndef OPMFP_SOLVER_HPP
#define OPMFP_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "map.hpp"
#include "space.hpp"

namespace opmfp {

/// Result of the starting-condition test x0 <= F(x0,y0) and y0 >= F(y0,x0),
/// with the two image points as witnesses.
struct StartCheck {
    bool ok = false;
    bool x_ok = false;  // x0 <= F(x0,y0)
    bool y_ok = false;  // y0 >= F(y0,x0)
    Point fx, fy;
};

struct SolveOptions {
    double tol = 1e-9;
    long max_iter = 10'000;
    double eps_fp = 1e-9;
    bool allow_unmet_start = false;
};

enum class VerdictKind { Converged, MaxIterationsExceeded, Cycle };

struct Verdict {
    VerdictKind kind = VerdictKind::MaxIterationsExceeded;
    long iterations = 0;  // applications of F until the verdict was reached
    long period = 0;      // Cycle only
};

/// Full record of a coupled iteration x_{n+1} = F(x_n,y_n),
/// y_{n+1} = F(y_n,x_n). step_distances[n] = d(x_n,x_{n+1}) + d(y_n,y_{n+1});
/// betas[n] is the contraction diagnostic for step n+1 (it needs the two
/// surrounding step distances). On convergence the trace ends with one extra
/// confirming application so the first beta always exists.
struct IterationTrace {
    std::vector<std::pair<Point, Point>> points;
    std::vector<double> step_distances;
    std::vector<double> betas;
    std::vector<bool> monotone_ok;  // per step: x_n <= x_{n+1} and y_n >= y_{n+1}
    Verdict verdict;
    std::optional<std::pair<Point, Point>> limit;  // Converged only
    bool limit_is_cfp = false;
    bool hypothesis_unmet = false;  // ran with an unmet start condition
    bool betas_nonincreasing = true;
    double eps_fp = 1e-9;
    StartCheck start;
};

StartCheck check_start(const CoupledMap& map, const Space& space, const Point& x0, const Point& y0);

/// Runs the coupled iteration. Finite backend: stops on exact repetition of
/// the pair (Converged if it repeats the previous pair, Cycle otherwise).
/// Real-vector backend: stops when the step distance drops below tol.
/// Throws std::invalid_argument when the start condition is unmet and
/// options do not allow overriding it.
IterationTrace iterate(const CoupledMap& map, const Space& space, const Point& x0, const Point& y0,
                       const SolveOptions& options = {});

/// check_start + iterate; when the start condition fails without the
/// override, no trace is produced.
struct SolveResult {
    StartCheck start;
    std::optional<IterationTrace> trace;
};
SolveResult solve(const CoupledMap& map, const Space& space, const Point& x0, const Point& y0,
                  const SolveOptions& options = {});

/// beta_n = 2(D_{n-1} + D_n) / (1 + 2(D_{n-1} + D_n)) over the recorded step
/// distances D. Always in [0,1): the numerator is exactly the denominator
/// minus one. Throws std::invalid_argument on traces with fewer than 2 steps.
std::vector<double> beta_sequence(const IterationTrace& trace);

/// Empirical test of the geometric Cauchy bound
///   d(x_n,x_m) + d(y_n,y_m) <= beta_1^n * [d(x_0,x_1) + d(y_0,y_1)]
/// over all stored n < m. Violations are reported as data, not errors.
struct CauchyBoundReport {
    double beta1 = 0.0;
    double initial_sum = 0.0;
    std::uint64_t pairs_checked = 0;
    // (n, m, lhs, bound) for each violating pair
    std::vector<std::tuple<long, long, double, double>> violations;
    bool bound_holds = true;
};
CauchyBoundReport cauchy_bound_check(const IterationTrace& trace, const Space& space);

} // namespace opmfp

#endif
