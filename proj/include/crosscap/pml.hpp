#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

// Explicit models of the projective measured lamination spaces of the
// small nonorientable surfaces: the circle-with-marked-point picture of
// the one-holed Klein bottle, the lamination decomposition into one-sided
// atoms plus a two-sided rest, ball intersection combinatorics, and the
// Apollonian-style tangency structure of the three-holed projective
// plane realized on the Markoff quadruple orbit.

namespace crosscap {

// ---------------------------------------------------------------------
// PML of the one-holed Klein bottle: a circle of arcs [gamma_n,
// gamma_n+1] between the one-sided geodesics, with the unique two-sided
// geodesic gamma_inf as a marked point.  Point (n, t) = the projective
// class [t gamma_n + (1-t) gamma_n+1]; vertices carry t = 1.

struct PmlN21Point {
  bool at_marked_point = false;  // gamma_inf
  std::int64_t n = 0;
  double t = 1.0;  // (0, 1]; (n, 0) is stored as (n+1, 1)

  static PmlN21Point gamma_inf();
  static PmlN21Point vertex(std::int64_t n);     // gamma_n
  static PmlN21Point arc_point(std::int64_t n, double t);

  bool is_vertex() const { return !at_marked_point && t == 1.0; }
  bool operator==(const PmlN21Point& o) const;
};

enum class N21Generator { Twist, Reflect };

/// Mapping class action: the Dehn twist along gamma_inf shifts the
/// vertices, the reflection reverses the circle; gamma_inf is fixed.
PmlN21Point n21_act(N21Generator g, const PmlN21Point& p);

enum class OrbitClosureKind {
  MarkedPointOnly,     // orbit of gamma_inf
  VerticesWithLimit,   // {gamma_n} plus the accumulation point gamma_inf
  ArcOrbitWithLimit,   // interior arc orbit plus gamma_inf
};

struct N21OrbitClosure {
  OrbitClosureKind kind;
  std::vector<PmlN21Point> sample;  // orbit points to the requested depth
  bool accumulates_at_marked_point;
};

N21OrbitClosure n21_orbit_closure(const PmlN21Point& p, int depth);

// ---------------------------------------------------------------------
// Laminations with one-sided atoms

struct SymbolicLamination {
  std::map<std::string, double> atoms;  // one-sided curve label -> weight > 0
  double plus_weight = 0.0;             // opaque part without one-sided leaves
  std::string plus_label;
};

struct Multicurve {
  std::vector<std::pair<std::string, double>> components;  // distinct labels
};

/// Splits into the weighted one-sided atoms and the opaque rest;
/// recombination is the identity.
std::pair<Multicurve, SymbolicLamination> decompose(const SymbolicLamination& lam);

/// Atom weights in nonincreasing order, zero-padded to the genus.
/// Throws "too many disjoint one-sided curves" when atoms exceed genus.
std::vector<double> w_minus(const SymbolicLamination& lam, int genus);

/// Relabels atoms; mapping classes act on the model this way.
SymbolicLamination relabel(const SymbolicLamination& lam,
                           const std::map<std::string, std::string>& permutation);

// ---------------------------------------------------------------------
// Ball intersection combinatorics: B(gamma) & B(delta) intersect in
// B(gamma + delta) when the multicurves are disjoint and not at all
// otherwise.

class IntersectionOracle {
 public:
  void set(const std::string& a, const std::string& b, std::int64_t value);
  /// Throws "intersection oracle incomplete" for unknown distinct pairs.
  std::int64_t value(const std::string& a, const std::string& b) const;

 private:
  std::map<std::pair<std::string, std::string>, std::int64_t> pairs_;
};

/// Empty when any cross pair intersects, otherwise the merged multicurve
/// (shared components keep both weights).
std::optional<Multicurve> ball_intersect(const Multicurve& gamma, const Multicurve& delta,
                                         const IntersectionOracle& oracle);

/// Component label set, which is what the ball depends on.
std::vector<std::string> ball_support(const Multicurve& m);

// ---------------------------------------------------------------------
// Three-holed projective plane: one-sided curves as slots of the ordered
// Markoff quadruple orbit; two curve slots are tangent exactly when some
// quadruple carries both, realizing i(gamma, delta) = 1.

class N13CurveSystem {
 public:
  /// Breadth-first orbit of (2,2,2,2) under the coordinate moves, to the
  /// given tree depth; slots of tuples connected by a move at another
  /// coordinate are the same curve.
  static N13CurveSystem build(int depth);

  int tuple_count() const { return static_cast<int>(tuples_.size()); }
  int curve_count() const { return curve_count_; }
  const std::array<std::uint64_t, 4>& tuple(int index) const;

  /// Curve id carried by a slot.  Throws "unknown curve" out of range.
  int curve_at(int tuple_index, int slot) const;

  /// Tangency as quadruple co-membership; a curve is not tangent to itself.
  bool tangent(int curve_a, int curve_b) const;

  /// Connectivity of the co-membership graph on curves.
  bool co_membership_connected() const;

 private:
  std::vector<std::array<std::uint64_t, 4>> tuples_;
  std::vector<std::array<int, 4>> slot_curves_;
  int curve_count_ = 0;
};

// ---------------------------------------------------------------------
// Genus-3 closed model: the PML sphere splits along the PML circle of
// the one-holed torus into the disk of laminations containing the
// bounding one-sided geodesic and the disk where i(bounding, .) > 0.

enum class N3Side { BoundingDisk, OneSidedDisk, Equator };

N3Side n3_side(const SymbolicLamination& lam, const std::string& bounding_label);

}  // namespace crosscap
