#ifndef OPMFP_MAP_HPP
#define OPMFP_MAP_HPP

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "expr.hpp"
#include "space.hpp"

namespace opmfp {

/// F: X x X -> X as an explicit lookup table over element labels. Entries
/// are kept as given; validate_table reports totality problems and lookups
/// on uncovered pairs throw EvalError.
class TableMap {
public:
    static TableMap create(std::vector<std::array<std::string, 3>> entries, const FiniteSpace& space);

    const std::vector<std::array<std::string, 3>>& entries() const { return entries_; }

    bool covers(int x, int y) const { return lut_[flat(x, y)] >= 0; }
    /// F(x,y) by table lookup; throws EvalError if (x,y) is not covered.
    int apply(int x, int y) const;

private:
    size_t flat(int x, int y) const { return static_cast<size_t>(x) * static_cast<size_t>(n_) + static_cast<size_t>(y); }

    std::vector<std::array<std::string, 3>> entries_;
    std::vector<int> lut_;  // -1 where uncovered
    int n_ = 0;
};

/// F: R^n x R^n -> R^n, one expression per output coordinate, over
/// variables x1..xn and y1..yn.
class ExprMap {
public:
    static ExprMap create(std::vector<std::string> sources, const RealVectorSpace& space);

    const std::vector<std::string>& sources() const { return sources_; }
    Vec apply(const Vec& x, const Vec& y) const;

private:
    std::vector<std::string> sources_;
    std::vector<ExprPtr> components_;
};

using CoupledMap = std::variant<TableMap, ExprMap>;

/// F(x,y) dispatched on the backend; throws BackendError on mismatch.
Point apply_map(const CoupledMap& map, const Space& space, const Point& x, const Point& y);

/// Totality report for a finite table: every ordered pair covered exactly
/// once, all labels known.
ValidationReport validate_table(const TableMap& map, const FiniteSpace& space);

/// Sampled containment check: on each grid pair, F's output must stay inside
/// domain_box. Grids with `points_per_axis` points per coordinate. Reports
/// nothing when the space declares no box.
ValidationReport validate_map_in_box(const ExprMap& map, const RealVectorSpace& space, int points_per_axis);

/// The uniform lattice of `points_per_axis` points per coordinate over
/// domain_box; throws SchemaError when the space declares no box.
std::vector<Vec> grid_points(const RealVectorSpace& space, int points_per_axis);

} // namespace opmfp

#endif
