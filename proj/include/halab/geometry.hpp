#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <initializer_list>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace halab {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// A point of R^n, or of R^{n+1} in the parabolic setting where the last
// coordinate is time. Fixed inline storage; spatial dimension <= 3.
struct Pt {
  std::array<double, 4> v{};
  int d = 0;

  Pt() = default;
  Pt(std::initializer_list<double> xs) {
    if (xs.size() > 4) throw std::invalid_argument("Pt: dimension > 4");
    d = static_cast<int>(xs.size());
    int i = 0;
    for (double x : xs) v[i++] = x;
  }
  static Pt zeros(int dim) {
    Pt p;
    p.d = dim;
    return p;
  }

  int dim() const { return d; }
  double& operator[](int i) { return v[i]; }
  double operator[](int i) const { return v[i]; }
  bool operator==(const Pt& o) const {
    if (d != o.d) return false;
    for (int i = 0; i < d; ++i)
      if (v[i] != o.v[i]) return false;
    return true;
  }
};

enum class SpaceKind { euclidean, parabolic };

/// Lebesgue volume of the unit ball in R^n.
double unit_ball_volume(int n);

// R^n with the Euclidean metric, or R^{n+1} with the parabolic metric
// d(x,y) = (|x'-y'|^2 + |t-s|)^{1/2}.
struct MetricSpace {
  SpaceKind kind = SpaceKind::euclidean;
  int spatial_dim = 1;

  static MetricSpace euclidean(int n) { return {SpaceKind::euclidean, n}; }
  static MetricSpace parabolic(int n) { return {SpaceKind::parabolic, n}; }

  bool is_parabolic() const { return kind == SpaceKind::parabolic; }
  int point_dim() const { return is_parabolic() ? spatial_dim + 1 : spatial_dim; }

  double distance(const Pt& x, const Pt& y) const;

  /// Lebesgue measure of a metric ball of radius r: c_n r^n, or c_n r^{n+2}
  /// for parabolic balls.
  double ball_volume(double r) const;
};

struct OutsideDomainError : std::domain_error {
  explicit OutsideDomainError(const std::string& what) : std::domain_error(what) {}
};

// A shape knows the exact distance from an interior point to its complement
// and from an exterior point to its closure, in the metric of the ambient
// space. Compositions follow De Morgan: intersection takes the min of the
// complement distances (exact); union takes the max (exact for separated
// components, otherwise a lower bound).
class Shape {
 public:
  virtual ~Shape() = default;
  virtual bool contains(const MetricSpace& s, const Pt& x) const = 0;
  virtual double dist_to_complement(const MetricSpace& s, const Pt& x) const = 0;
  virtual double dist_to_set(const MetricSpace& s, const Pt& x) const = 0;
};

using ShapePtr = std::shared_ptr<const Shape>;

ShapePtr make_box(std::vector<double> lo, std::vector<double> hi);
ShapePtr make_metric_ball(Pt center, double radius);
/// Open half-space {x : a.x < b} with |a| = 1; Euclidean spaces only.
ShapePtr make_half_space(Pt normal, double offset);
ShapePtr make_complement(ShapePtr inner);
ShapePtr make_union(std::vector<ShapePtr> parts);
ShapePtr make_intersection(std::vector<ShapePtr> parts);
ShapePtr make_custom(std::function<bool(const Pt&)> contains,
                     std::function<double(const Pt&)> dist_to_complement);

// An open proper nonempty subset of the metric space, described by a shape
// with exact distance evaluators. delta(x) = min{1, d(x, complement)}.
class Domain {
 public:
  Domain(MetricSpace space, ShapePtr shape, std::string name = "domain");

  const MetricSpace& space() const { return space_; }
  const std::string& name() const { return name_; }

  bool contains(const Pt& x) const;
  /// Exact d(x, complement); throws OutsideDomainError when x is not inside.
  double dist_to_complement(const Pt& x) const;
  double delta(const Pt& x) const;

  // Common constructions.
  static Domain interval(double a, double b, std::string name = "interval");
  static Domain box(std::vector<double> lo, std::vector<double> hi,
                    std::string name = "box");
  /// Omega_T = (spatial box) x (t0, t1) with the parabolic metric.
  static Domain space_time_box(std::vector<double> lo, std::vector<double> hi,
                               double t0, double t1, std::string name = "box_T");
  static Domain metric_ball(MetricSpace s, Pt center, double r,
                            std::string name = "ball");
  static Domain ball_complement(MetricSpace s, Pt center, double r,
                                std::string name = "ball_complement");

 private:
  MetricSpace space_;
  ShapePtr shape_;
  std::string name_;
};

struct Ball {
  Pt center;
  double radius = 0.0;
};

inline Ball scaled(const Ball& b, double factor) { return {b.center, b.radius * factor}; }

// F_beta = { B : r_B < beta * d(x_B, complement) }, strict inequality.
struct BallFamilySpec {
  const Domain* domain = nullptr;
  double beta = 0.5;
};

bool in_family(const BallFamilySpec& spec, const Ball& b);

struct ShrinkLemmaResult {
  bool bound_holds = false;
  Ball derived_ball;
  /// beta * d(x, complement) - (alpha - beta) * r0; positive when the bound holds.
  double margin = 0.0;
};

// Checks the geometric shrink property: given alpha*B0 in F_beta and x in B0,
// r0 < beta/(alpha-beta) * d(x, complement) and B(x, (alpha-beta) r0) in F_beta.
// Throws std::invalid_argument when the preconditions are violated.
ShrinkLemmaResult shrink_lemma_check(const Domain& domain, double alpha, double beta,
                                     const Ball& b0, const Pt& x);

}  // namespace halab
