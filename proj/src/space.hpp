#ifndef OPMFP_SPACE_HPP
#define OPMFP_SPACE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

namespace opmfp {

using Vec = std::vector<double>;

enum class Metric { L1, L2, LInf };

Metric metric_from_name(const std::string& name);
std::string metric_name(Metric m);

/// A single axiom violation found by a validator. `witness` holds the
/// element labels involved; `lhs`/`rhs` carry the two sides of the violated
/// inequality when the axiom is numeric.
struct ValidationViolation {
    std::string axiom;
    std::vector<std::string> witness;
    double lhs = 0.0;
    double rhs = 0.0;
    std::string detail;
};

struct ValidationReport {
    bool ok = true;
    std::vector<ValidationViolation> violations;

    void add(ValidationViolation v) {
        ok = false;
        violations.push_back(std::move(v));
    }
};

/// A finite partially ordered metric space: element labels, a full distance
/// matrix, and an explicit order relation given as label pairs (a,b) meaning
/// a <= b. Construction checks structure only (shape, distinct labels, known
/// labels); the metric and order axioms are checked by the validators, which
/// report violations instead of repairing them.
class FiniteSpace {
public:
    static FiniteSpace create(std::vector<std::string> elements,
                              std::vector<std::vector<double>> distance,
                              std::vector<std::pair<std::string, std::string>> order_pairs);

    int size() const { return static_cast<int>(elements_.size()); }
    const std::vector<std::string>& elements() const { return elements_; }
    const std::string& label(int i) const { return elements_[static_cast<size_t>(i)]; }
    const std::vector<std::vector<double>>& distance_matrix() const { return distance_; }
    const std::vector<std::pair<std::string, std::string>>& order_pairs() const { return order_pairs_; }

    /// Index of a label; throws SchemaError for unknown labels.
    int index_of(const std::string& label) const;

    bool leq(int a, int b) const { return leq_[static_cast<size_t>(a)][static_cast<size_t>(b)] != 0; }
    double dist(int a, int b) const { return distance_[static_cast<size_t>(a)][static_cast<size_t>(b)]; }

private:
    std::vector<std::string> elements_;
    std::vector<std::vector<double>> distance_;
    std::vector<std::pair<std::string, std::string>> order_pairs_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::vector<char>> leq_;
};

/// R^n with a named metric and componentwise order; the optional closed box
/// bounds the region sampled by grid-based checks.
class RealVectorSpace {
public:
    static RealVectorSpace create(int dimension, Metric metric,
                                  std::optional<std::vector<std::pair<double, double>>> domain_box);

    int dimension() const { return dimension_; }
    Metric metric() const { return metric_; }
    const std::optional<std::vector<std::pair<double, double>>>& domain_box() const { return box_; }

    bool leq(const Vec& a, const Vec& b) const;
    double dist(const Vec& a, const Vec& b) const;
    bool in_box(const Vec& v) const;

private:
    int dimension_ = 1;
    Metric metric_ = Metric::L1;
    std::optional<std::vector<std::pair<double, double>>> box_;
};

using Space = std::variant<FiniteSpace, RealVectorSpace>;

/// A point of either backend: an element index into a FiniteSpace, or a
/// coordinate vector in a RealVectorSpace.
class Point {
public:
    Point() : v_(0) {}
    explicit Point(int finite_index) : v_(finite_index) {}
    explicit Point(Vec coords) : v_(std::move(coords)) {}

    bool is_finite() const { return std::holds_alternative<int>(v_); }
    int idx() const;
    const Vec& vec() const;

    bool operator==(const Point& other) const { return v_ == other.v_; }

private:
    std::variant<int, Vec> v_;
};

bool is_finite_space(const Space& s);
const FiniteSpace& as_finite(const Space& s);
const RealVectorSpace& as_real(const Space& s);

/// a <= b in the space's order. Throws BackendError if the point kind does
/// not match the space backend.
bool leq(const Space& space, const Point& a, const Point& b);
double dist(const Space& space, const Point& a, const Point& b);

ValidationReport validate_metric(const FiniteSpace& space);
ValidationReport validate_order(const FiniteSpace& space);

/// All (x,y,u,v) with u <= x and y <= v, ordered lexicographically by
/// element index of (x,y,u,v).
std::vector<std::array<int, 4>> comparable_quadruples(const FiniteSpace& space);

} // namespace opmfp

#endif
