#include "solver.hpp"

#include <map>
#include <stdexcept>

#include "conditions.hpp"
#include "errors.hpp"

namespace opmfp {

namespace {

double step_beta(double d_prev, double d_cur) {
    double m = 2.0 * (d_prev + d_cur);
    return m / (1.0 + m);
}

void append_betas_and_flags(IterationTrace& t) {
    t.betas.clear();
    for (size_t n = 1; n < t.step_distances.size(); ++n)
        t.betas.push_back(step_beta(t.step_distances[n - 1], t.step_distances[n]));
    t.betas_nonincreasing = true;
    for (size_t i = 1; i < t.betas.size(); ++i)
        if (t.betas[i] > t.betas[i - 1]) t.betas_nonincreasing = false;
}

} // namespace

StartCheck check_start(const CoupledMap& map, const Space& space, const Point& x0, const Point& y0) {
    StartCheck c;
    c.fx = apply_map(map, space, x0, y0);
    c.fy = apply_map(map, space, y0, x0);
    c.x_ok = leq(space, x0, c.fx);
    c.y_ok = leq(space, c.fy, y0);
    c.ok = c.x_ok && c.y_ok;
    return c;
}

IterationTrace iterate(const CoupledMap& map, const Space& space, const Point& x0, const Point& y0,
                       const SolveOptions& options) {
    if (options.tol <= 0.0) throw std::invalid_argument("tol must be positive");
    if (options.max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");

    IterationTrace t;
    t.eps_fp = options.eps_fp;
    t.start = check_start(map, space, x0, y0);
    t.hypothesis_unmet = !t.start.ok;
    if (!t.start.ok && !options.allow_unmet_start)
        throw std::invalid_argument("start condition unmet; pass the override to iterate anyway");

    const bool finite = is_finite_space(space);
    t.points.emplace_back(x0, y0);

    auto push_step = [&](const Point& nx, const Point& ny) {
        const auto& [cx, cy] = t.points.back();
        double d = dist(space, cx, nx) + dist(space, cy, ny);
        bool mono = leq(space, cx, nx) && leq(space, ny, cy);
        t.points.emplace_back(nx, ny);
        t.step_distances.push_back(d);
        t.monotone_ok.push_back(mono);
    };

    // One verified application past the stopping point, so the trace always
    // carries the step pair needed for beta_1.
    auto confirm_step = [&] {
        const auto& [cx, cy] = t.points.back();
        Point nx = apply_map(map, space, cx, cy);
        Point ny = apply_map(map, space, cy, cx);
        push_step(nx, ny);
    };

    std::map<std::pair<int, int>, long> seen;  // finite backend: pair -> first index
    if (finite) seen[{x0.idx(), y0.idx()}] = 0;

    for (long n = 1; n <= options.max_iter; ++n) {
        const auto& [cx, cy] = t.points.back();
        Point nx = apply_map(map, space, cx, cy);
        Point ny = apply_map(map, space, cy, cx);
        push_step(nx, ny);

        if (finite) {
            auto key = std::make_pair(nx.idx(), ny.idx());
            auto [it, inserted] = seen.emplace(key, n);
            if (!inserted) {
                long first = it->second;
                if (first == n - 1) {
                    t.verdict = {VerdictKind::Converged, n, 0};
                    t.limit = t.points.back();
                    confirm_step();
                } else {
                    t.verdict = {VerdictKind::Cycle, n, n - first};
                }
                break;
            }
        } else {
            if (t.step_distances.back() < options.tol) {
                t.verdict = {VerdictKind::Converged, n, 0};
                confirm_step();
                t.limit = t.points.back();
                break;
            }
        }
        if (n == options.max_iter) t.verdict = {VerdictKind::MaxIterationsExceeded, n, 0};
    }

    if (t.limit)
        t.limit_is_cfp = is_coupled_fixed_point(map, space, t.limit->first, t.limit->second, options.eps_fp);
    append_betas_and_flags(t);
    return t;
}

SolveResult solve(const CoupledMap& map, const Space& space, const Point& x0, const Point& y0,
                  const SolveOptions& options) {
    SolveResult r;
    r.start = check_start(map, space, x0, y0);
    if (r.start.ok || options.allow_unmet_start) {
        SolveOptions opts = options;
        opts.allow_unmet_start = true;  // already decided here
        r.trace = iterate(map, space, x0, y0, opts);
    }
    return r;
}

std::vector<double> beta_sequence(const IterationTrace& trace) {
    if (trace.step_distances.size() < 2)
        throw std::invalid_argument("trace too short: beta_n needs at least 2 recorded steps");
    std::vector<double> betas;
    for (size_t n = 1; n < trace.step_distances.size(); ++n)
        betas.push_back(step_beta(trace.step_distances[n - 1], trace.step_distances[n]));
    return betas;
}

CauchyBoundReport cauchy_bound_check(const IterationTrace& trace, const Space& space) {
    if (trace.step_distances.size() < 2)
        throw std::invalid_argument("trace too short: the bound needs beta_1 and at least 2 steps");
    CauchyBoundReport r;
    r.beta1 = step_beta(trace.step_distances[0], trace.step_distances[1]);
    r.initial_sum = trace.step_distances[0];
    const size_t count = trace.points.size();
    // beta1^n by running product keeps the n index exact.
    std::vector<double> pow(count, 1.0);
    for (size_t n = 1; n < count; ++n) pow[n] = pow[n - 1] * r.beta1;
    for (size_t n = 0; n + 1 < count; ++n)
        for (size_t m = n + 1; m < count; ++m) {
            ++r.pairs_checked;
            double lhs = dist(space, trace.points[n].first, trace.points[m].first) +
                         dist(space, trace.points[n].second, trace.points[m].second);
            double bound = pow[n] * r.initial_sum;
            if (lhs > bound) {
                r.bound_holds = false;
                r.violations.emplace_back(static_cast<long>(n), static_cast<long>(m), lhs, bound);
            }
        }
    return r;
}

} // namespace opmfp
