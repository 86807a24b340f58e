#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

// Primitives for hyperbolic plane geometry in the upper half-plane model.
//
// Isometries are 2x2 real matrices with |det| = 1 acting by
//   z  ->  (a z' + b) / (c z' + d),   z' = z       if det > 0,
//                                     z' = conj(z) if det < 0,
// so orientation-reversing isometries (glide reflections, reflections)
// are the det = -1 case.  Crossing tests for geodesic segments are done
// in the Klein disk, where geodesics are Euclidean straight chords.

namespace crosscap {

struct Mat2 {
  double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

  // Kahan's fma determinant: full relative accuracy even when a*d and
  // b*c cancel, which happens for every long holonomy product.
  double det() const {
    double w = b * c;
    double e = std::fma(-b, c, w);
    double f = std::fma(a, d, -w);
    return f + e;
  }
  double trace() const { return a + d; }

  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d,
            c * o.a + d * o.c, c * o.b + d * o.d};
  }
};

/// Orientation-aware hyperbolic isometry, normalized to |det| = 1.
class Isometry {
 public:
  Isometry() = default;
  Isometry(double a, double b, double c, double d) : m_{a, b, c, d} { normalize(); }
  explicit Isometry(const Mat2& m) : m_(m) { normalize(); }

  static Isometry identity() { return {}; }

  const Mat2& matrix() const { return m_; }
  double det() const { return m_.det(); }
  double trace() const { return m_.trace(); }
  bool reverses_orientation() const { return det() < 0.0; }

  Isometry inverse() const;

  /// Frobenius distance to another isometry, minimized over the +-Id sign.
  double projective_distance(const Isometry& o) const;

 private:
  void normalize();
  Mat2 m_;
};

Isometry compose(const Isometry& a, const Isometry& b);

enum class IsometryKind { Hyperbolic, Parabolic, Elliptic, Glide, Reflection };

/// Trace classification; |tr| within 1e-9 of 2 counts as parabolic.
IsometryKind classify(const Isometry& a);

struct TranslationLength {
  IsometryKind kind;
  double value;  // geodesic translation length; 0 for parabolic
};

/// Translation length with classification.  For det = -1 the length is
/// half the length of the square; throws if the square is not hyperbolic.
TranslationLength translation_length(const Isometry& a);

/// Same classification from a (trace, det sign) pair of a |det| = 1
/// matrix; the workhorse behind translation_length.
TranslationLength translation_length_from_trace(double trace, double det);

/// Length of the closed geodesic of a hyperbolic or glide isometry.
/// Throws std::domain_error for elliptic/parabolic input.
double geodesic_length(const Isometry& a);

/// Point of the upper half-plane, y > 0.
struct HPoint {
  double x = 0.0;
  double y = 1.0;
};

double dist(const HPoint& p, const HPoint& q);

/// Applies the isometry; throws if the image degenerates onto the real axis.
HPoint apply(const Isometry& a, const HPoint& p);

/// Boundary point of the half-plane: a real number or infinity.
using BoundaryPoint = double;  // std::numeric_limits<double>::infinity() = the point at infinity

struct AxisEndpoints {
  BoundaryPoint repelling;
  BoundaryPoint attracting;
};

/// Fixed points on the boundary circle of a hyperbolic or glide isometry,
/// attracting endpoint second.  Throws std::domain_error("no axis") otherwise.
AxisEndpoints axis_endpoints(const Isometry& a);

/// Klein disk image of a half-plane point (unit disk coordinates).
std::array<double, 2> to_klein(const HPoint& p);

/// Geodesic segment between two distinct points, with cached Klein images.
struct GeodesicSegment {
  HPoint p, q;
  std::array<double, 2> kp, kq;

  GeodesicSegment(const HPoint& p_, const HPoint& q_);
};

/// True iff the open segments meet transversely.  Segments sharing an
/// endpoint do not cross by convention.
bool segments_cross(const GeodesicSegment& s1, const GeodesicSegment& s2);

/// True iff the complete geodesics with the given boundary feet cross,
/// i.e. the endpoint pairs are linked on the boundary circle.
bool axes_cross(const AxisEndpoints& a1, const AxisEndpoints& a2);

}  // namespace crosscap
