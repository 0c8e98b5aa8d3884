#include "space.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "errors.hpp"

namespace opmfp {

Metric metric_from_name(const std::string& name) {
    if (name == "L1") return Metric::L1;
    if (name == "L2") return Metric::L2;
    if (name == "LInf") return Metric::LInf;
    throw SchemaError("unknown metric name '" + name + "' (expected L1, L2 or LInf)");
}

std::string metric_name(Metric m) {
    switch (m) {
        case Metric::L1: return "L1";
        case Metric::L2: return "L2";
        case Metric::LInf: return "LInf";
    }
    return "L1";
}

FiniteSpace FiniteSpace::create(std::vector<std::string> elements,
                                std::vector<std::vector<double>> distance,
                                std::vector<std::pair<std::string, std::string>> order_pairs) {
    FiniteSpace s;
    if (elements.empty()) throw SchemaError("element list must be nonempty");
    const size_t n = elements.size();
    if (distance.size() != n)
        throw SchemaError("distance matrix has " + std::to_string(distance.size()) +
                          " rows but there are " + std::to_string(n) + " elements");
    for (size_t i = 0; i < n; ++i) {
        if (distance[i].size() != n)
            throw SchemaError("distance matrix row " + std::to_string(i) + " has " +
                              std::to_string(distance[i].size()) + " entries, expected " +
                              std::to_string(n));
    }
    for (size_t i = 0; i < n; ++i) {
        auto [it, inserted] = s.index_.emplace(elements[i], static_cast<int>(i));
        if (!inserted) throw SchemaError("duplicate element label '" + elements[i] + "'");
    }
    for (const auto& [a, b] : order_pairs) {
        if (!s.index_.count(a)) throw SchemaError("order pair references unknown label '" + a + "'");
        if (!s.index_.count(b)) throw SchemaError("order pair references unknown label '" + b + "'");
    }
    s.elements_ = std::move(elements);
    s.distance_ = std::move(distance);
    s.order_pairs_ = std::move(order_pairs);
    s.leq_.assign(n, std::vector<char>(n, 0));
    for (const auto& [a, b] : s.order_pairs_)
        s.leq_[static_cast<size_t>(s.index_.at(a))][static_cast<size_t>(s.index_.at(b))] = 1;
    return s;
}

int FiniteSpace::index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw SchemaError("unknown element label '" + label + "'");
    return it->second;
}

RealVectorSpace RealVectorSpace::create(int dimension, Metric metric,
                                        std::optional<std::vector<std::pair<double, double>>> domain_box) {
    if (dimension < 1) throw SchemaError("dimension must be >= 1");
    if (domain_box) {
        if (static_cast<int>(domain_box->size()) != dimension)
            throw SchemaError("domain_box has " + std::to_string(domain_box->size()) +
                              " intervals but dimension is " + std::to_string(dimension));
        for (const auto& [lo, hi] : *domain_box)
            if (!(lo <= hi)) throw SchemaError("domain_box interval has lower bound above upper bound");
    }
    RealVectorSpace s;
    s.dimension_ = dimension;
    s.metric_ = metric;
    s.box_ = std::move(domain_box);
    return s;
}

bool RealVectorSpace::leq(const Vec& a, const Vec& b) const {
    for (size_t i = 0; i < a.size(); ++i)
        if (!(a[i] <= b[i])) return false;
    return true;
}

double RealVectorSpace::dist(const Vec& a, const Vec& b) const {
    switch (metric_) {
        case Metric::L1: {
            double s = 0.0;
            for (size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
            return s;
        }
        case Metric::L2: {
            double s = 0.0;
            for (size_t i = 0; i < a.size(); ++i) {
                double d = a[i] - b[i];
                s += d * d;
            }
            return std::sqrt(s);
        }
        case Metric::LInf: {
            double s = 0.0;
            for (size_t i = 0; i < a.size(); ++i) s = std::max(s, std::abs(a[i] - b[i]));
            return s;
        }
    }
    return 0.0;
}

bool RealVectorSpace::in_box(const Vec& v) const {
    if (!box_) return true;
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] < (*box_)[i].first || v[i] > (*box_)[i].second) return false;
    return true;
}

int Point::idx() const {
    if (!is_finite()) throw BackendError("expected a finite-backend point");
    return std::get<int>(v_);
}

const Vec& Point::vec() const {
    if (is_finite()) throw BackendError("expected a real-vector point");
    return std::get<Vec>(v_);
}

bool is_finite_space(const Space& s) { return std::holds_alternative<FiniteSpace>(s); }

const FiniteSpace& as_finite(const Space& s) {
    if (!is_finite_space(s)) throw BackendError("operation requires the finite backend");
    return std::get<FiniteSpace>(s);
}

const RealVectorSpace& as_real(const Space& s) {
    if (is_finite_space(s)) throw BackendError("operation requires the real-vector backend");
    return std::get<RealVectorSpace>(s);
}

namespace {

void require_point_in(const Space& space, const Point& p) {
    if (is_finite_space(space)) {
        if (!p.is_finite()) throw BackendError("real-vector point used with a finite space");
        int i = p.idx();
        if (i < 0 || i >= as_finite(space).size())
            throw BackendError("point index out of range for the space");
    } else {
        if (p.is_finite()) throw BackendError("finite point used with a real-vector space");
        if (static_cast<int>(p.vec().size()) != as_real(space).dimension())
            throw BackendError("point dimension does not match the space");
    }
}

} // namespace

bool leq(const Space& space, const Point& a, const Point& b) {
    require_point_in(space, a);
    require_point_in(space, b);
    if (is_finite_space(space)) return as_finite(space).leq(a.idx(), b.idx());
    return as_real(space).leq(a.vec(), b.vec());
}

double dist(const Space& space, const Point& a, const Point& b) {
    require_point_in(space, a);
    require_point_in(space, b);
    if (is_finite_space(space)) return as_finite(space).dist(a.idx(), b.idx());
    return as_real(space).dist(a.vec(), b.vec());
}

ValidationReport validate_metric(const FiniteSpace& space) {
    ValidationReport report;
    const int n = space.size();
    for (int i = 0; i < n; ++i) {
        double dii = space.dist(i, i);
        if (dii != 0.0)
            report.add({"zero_diagonal", {space.label(i)}, dii, 0.0,
                        "d(" + space.label(i) + "," + space.label(i) + ") must be 0"});
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            double dij = space.dist(i, j);
            if (j > i && dij != space.dist(j, i))
                report.add({"symmetry", {space.label(i), space.label(j)}, dij, space.dist(j, i),
                            "d must be symmetric"});
            if (dij <= 0.0)
                report.add({"positivity", {space.label(i), space.label(j)}, dij, 0.0,
                            "distinct points must be at positive distance"});
            if (std::isnan(dij) || std::isinf(dij))
                report.add({"finiteness", {space.label(i), space.label(j)}, dij, 0.0,
                            "distances must be finite"});
        }
    }
    // d(i,k) <= d(i,j) + d(j,k) over all ordered triples.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                if (i == j || j == k) continue;
                double lhs = space.dist(i, k);
                double rhs = space.dist(i, j) + space.dist(j, k);
                if (lhs > rhs)
                    report.add({"triangle", {space.label(i), space.label(j), space.label(k)}, lhs, rhs,
                                "d(" + space.label(i) + "," + space.label(k) + ") exceeds d(" +
                                    space.label(i) + "," + space.label(j) + ") + d(" + space.label(j) +
                                    "," + space.label(k) + ")"});
            }
    return report;
}

ValidationReport validate_order(const FiniteSpace& space) {
    ValidationReport report;
    const int n = space.size();
    for (int i = 0; i < n; ++i)
        if (!space.leq(i, i))
            report.add({"reflexivity", {space.label(i)}, 0.0, 0.0,
                        "missing reflexive pair (" + space.label(i) + "," + space.label(i) + ")"});
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (space.leq(a, b) && space.leq(b, a))
                report.add({"antisymmetry", {space.label(a), space.label(b)}, 0.0, 0.0,
                            "both (" + space.label(a) + "," + space.label(b) + ") and (" +
                                space.label(b) + "," + space.label(a) + ") are in the order"});
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!space.leq(a, b)) continue;
            for (int c = 0; c < n; ++c)
                if (space.leq(b, c) && !space.leq(a, c))
                    report.add({"transitivity", {space.label(a), space.label(b), space.label(c)}, 0.0, 0.0,
                                "(" + space.label(a) + "," + space.label(b) + ") and (" + space.label(b) +
                                    "," + space.label(c) + ") are present but (" + space.label(a) + "," +
                                    space.label(c) + ") is not"});
        }
    return report;
}

std::vector<std::array<int, 4>> comparable_quadruples(const FiniteSpace& space) {
    std::vector<std::array<int, 4>> out;
    const int n = space.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int u = 0; u < n; ++u) {
                if (!space.leq(u, x)) continue;
                for (int v = 0; v < n; ++v)
                    if (space.leq(y, v)) out.push_back({x, y, u, v});
            }
    return out;
}

} // namespace opmfp
