#include "map.hpp"

#include <set>

#include "errors.hpp"

namespace opmfp {

TableMap TableMap::create(std::vector<std::array<std::string, 3>> entries, const FiniteSpace& space) {
    TableMap m;
    m.n_ = space.size();
    m.entries_ = std::move(entries);
    m.lut_.assign(static_cast<size_t>(m.n_) * static_cast<size_t>(m.n_), -1);
    for (const auto& e : m.entries_) {
        int x, y, out;
        try {
            x = space.index_of(e[0]);
            y = space.index_of(e[1]);
            out = space.index_of(e[2]);
        } catch (const SchemaError&) {
            continue;  // reported by validate_table
        }
        if (m.lut_[m.flat(x, y)] < 0) m.lut_[m.flat(x, y)] = out;
    }
    return m;
}

int TableMap::apply(int x, int y) const {
    int out = lut_[flat(x, y)];
    if (out < 0)
        throw EvalError("map table does not cover the pair at indices (" + std::to_string(x) + "," +
                        std::to_string(y) + ")");
    return out;
}

ExprMap ExprMap::create(std::vector<std::string> sources, const RealVectorSpace& space) {
    if (static_cast<int>(sources.size()) != space.dimension())
        throw SchemaError("map has " + std::to_string(sources.size()) +
                          " component expressions but the space dimension is " +
                          std::to_string(space.dimension()));
    ExprMap m;
    for (const auto& s : sources) m.components_.push_back(parse_expr(s, space.dimension()));
    m.sources_ = std::move(sources);
    return m;
}

Vec ExprMap::apply(const Vec& x, const Vec& y) const {
    Vec out(components_.size());
    for (size_t i = 0; i < components_.size(); ++i) out[i] = evaluate(*components_[i], x, y);
    return out;
}

Point apply_map(const CoupledMap& map, const Space& space, const Point& x, const Point& y) {
    if (is_finite_space(space)) {
        const auto* table = std::get_if<TableMap>(&map);
        if (!table) throw BackendError("finite space requires a table map");
        return Point(table->apply(x.idx(), y.idx()));
    }
    const auto* expr = std::get_if<ExprMap>(&map);
    if (!expr) throw BackendError("real-vector space requires a component-expression map");
    return Point(expr->apply(x.vec(), y.vec()));
}

ValidationReport validate_table(const TableMap& map, const FiniteSpace& space) {
    ValidationReport report;
    std::set<std::pair<int, int>> seen;
    for (const auto& e : map.entries()) {
        bool known = true;
        for (const auto& label : e)
            if (![&] {
                    try {
                        space.index_of(label);
                        return true;
                    } catch (const SchemaError&) {
                        return false;
                    }
                }()) {
                report.add({"table_labels", {e[0], e[1], e[2]}, 0.0, 0.0,
                            "table entry references unknown label '" + label + "'"});
                known = false;
                break;
            }
        if (!known) continue;
        auto key = std::make_pair(space.index_of(e[0]), space.index_of(e[1]));
        if (!seen.insert(key).second)
            report.add({"table_duplicate", {e[0], e[1]}, 0.0, 0.0,
                        "pair (" + e[0] + "," + e[1] + ") appears more than once"});
    }
    for (int x = 0; x < space.size(); ++x)
        for (int y = 0; y < space.size(); ++y)
            if (!map.covers(x, y))
                report.add({"table_totality", {space.label(x), space.label(y)}, 0.0, 0.0,
                            "pair (" + space.label(x) + "," + space.label(y) + ") has no table entry"});
    return report;
}

std::vector<Vec> grid_points(const RealVectorSpace& space, int points_per_axis) {
    if (!space.domain_box())
        throw SchemaError("sampled checks on the real-vector backend require a domain_box");
    if (points_per_axis < 2) throw SchemaError("grid must have at least 2 points per axis");
    const auto& box = *space.domain_box();
    const int dim = space.dimension();
    std::vector<Vec> points;
    Vec current(static_cast<size_t>(dim), 0.0);
    // Odometer over the per-axis lattice.
    std::vector<int> digits(static_cast<size_t>(dim), 0);
    for (;;) {
        for (int d = 0; d < dim; ++d) {
            const auto& [lo, hi] = box[static_cast<size_t>(d)];
            current[static_cast<size_t>(d)] =
                lo + (hi - lo) * static_cast<double>(digits[static_cast<size_t>(d)]) /
                         static_cast<double>(points_per_axis - 1);
        }
        points.push_back(current);
        int d = 0;
        while (d < dim && ++digits[static_cast<size_t>(d)] == points_per_axis) {
            digits[static_cast<size_t>(d)] = 0;
            ++d;
        }
        if (d == dim) break;
    }
    return points;
}

ValidationReport validate_map_in_box(const ExprMap& map, const RealVectorSpace& space, int points_per_axis) {
    ValidationReport report;
    if (!space.domain_box()) return report;
    auto points = grid_points(space, points_per_axis);
    for (const auto& x : points)
        for (const auto& y : points) {
            Vec out = map.apply(x, y);
            if (!space.in_box(out)) {
                std::string detail = "F(x,y) leaves domain_box at x=(";
                for (size_t i = 0; i < x.size(); ++i) detail += (i ? "," : "") + std::to_string(x[i]);
                detail += "), y=(";
                for (size_t i = 0; i < y.size(); ++i) detail += (i ? "," : "") + std::to_string(y[i]);
                detail += ")";
                report.add({"map_in_box", {}, 0.0, 0.0, detail});
                return report;  // one witness is enough for a sampled check
            }
        }
    return report;
}

} // namespace opmfp
