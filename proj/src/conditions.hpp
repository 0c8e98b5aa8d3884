#ifndef OPMFP_CONDITIONS_HPP
#define OPMFP_CONDITIONS_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "map.hpp"
#include "space.hpp"

namespace opmfp {

enum class ConditionName { MixedMonotone, ClassicalK, NewDelta, RemarkRatio };

std::string condition_token(ConditionName c);

/// Worst violating quadruple (x,y,u,v) with the two sides of the inequality
/// that failed there.
struct QuadWitness {
    Point x, y, u, v;
    double lhs = 0.0;
    double rhs = 0.0;
};

/// Monotonicity counterexample: with `fixed` in the other slot, the map sent
/// lo <= hi to outputs that violate the required direction.
struct MonotoneWitness {
    bool first_argument = true;  // false: second argument
    Point fixed, lo, hi, f_lo, f_hi;
};

struct ConditionReport {
    ConditionName condition = ConditionName::NewDelta;
    bool holds = true;
    std::uint64_t quadruples_checked = 0;
    std::optional<QuadWitness> worst_violation;
    std::optional<MonotoneWitness> monotone_violation;
    // ClassicalK only: smallest k with d(F(x,y),F(u,v)) <= (k/2)[d(x,u)+d(y,v)]
    // over the comparable quadruples; infeasible when no k < 1 works.
    std::optional<double> minimal_k;
    bool infeasible = false;
    // RemarkRatio only: quadruples where d(x,u)+d(y,v) < 1/4 held.
    std::uint64_t premise_count = 0;
    // Real-vector backend: the verdict comes from a grid sample, not an
    // exhaustive scan.
    bool sampled = false;
    int grid_points = 0;
};

struct GridSpec {
    int points_per_axis = 21;
};

/// The state-dependent contraction ratio
///   delta = [d(x,F(u,v)) + d(y,F(v,u)) + d(u,F(x,y)) + d(v,F(y,x))]
///         / (1 + 2[d(x,F(x,y)) + d(y,F(y,x)) + d(u,F(u,v)) + d(v,F(v,u))]).
/// The denominator is always >= 1. Terms are grouped so that
/// delta(x,y,u,v) == delta(y,x,v,u) bitwise.
double delta(const CoupledMap& map, const Space& space, const Point& x, const Point& y, const Point& u,
             const Point& v);

/// F nondecreasing in its first argument and nonincreasing in its second.
/// Finite backend: exact over all comparable pairs. Real-vector backend:
/// sampled on the grid and flagged as such.
ConditionReport is_mixed_monotone(const CoupledMap& map, const Space& space, const GridSpec& grid = {});

/// d(F(x,y),F(u,v)) <= delta(x,y,u,v) * [d(x,u)+d(y,v)] over comparable
/// quadruples (u <= x, y <= v).
ConditionReport check_new_condition(const CoupledMap& map, const Space& space, const GridSpec& grid = {});

/// Classical coupled contraction: reports the smallest feasible k via
/// minimal_k = max 2*d(F(x,y),F(u,v)) / [d(x,u)+d(y,v)]; holds iff
/// minimal_k < 1.
ConditionReport check_classical_condition(const CoupledMap& map, const Space& space,
                                          const GridSpec& grid = {});

/// Whenever d(x,u)+d(y,v) < 1/4 on a comparable quadruple, delta < 1/2.
ConditionReport check_remark_ratio(const CoupledMap& map, const Space& space, const GridSpec& grid = {});

/// Re-verifies the classical condition at a specific k by comparing the
/// normalized ratio 2*d(F(x,y),F(u,v)) / [d(x,u)+d(y,v)] <= k per quadruple.
bool classical_holds_with_k(const CoupledMap& map, const Space& space, double k, const GridSpec& grid = {});

/// F(x,y) = x and F(y,x) = y; exact on the finite backend, within eps_fp on
/// the real-vector backend.
bool is_coupled_fixed_point(const CoupledMap& map, const Space& space, const Point& x, const Point& y,
                            double eps_fp = 1e-9);

} // namespace opmfp

#endif
