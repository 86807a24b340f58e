#include "crosscap/hypgeo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace crosscap {

namespace {

constexpr double kParabolicTol = 1e-9;
constexpr double kOrientTol = 1e-12;

double stable_acosh1p(double u) {
  // acosh(1 + u) for u >= 0 without cancellation for small u.
  return std::log1p(u + std::sqrt(u * (u + 2.0)));
}

}  // namespace

void Isometry::normalize() {
  double dt = m_.det();
  double ad = std::fabs(dt);
  if (!(ad > 0.0) || !std::isfinite(ad)) {
    throw std::invalid_argument("singular matrix is not an isometry");
  }
  double s = 1.0 / std::sqrt(ad);
  m_.a *= s;
  m_.b *= s;
  m_.c *= s;
  m_.d *= s;
}

Isometry Isometry::inverse() const {
  double dt = det();  // +-1
  // adj(M)/det; for det = -1 this flips the sign pattern as required.
  return {m_.d / dt, -m_.b / dt, -m_.c / dt, m_.a / dt};
}

double Isometry::projective_distance(const Isometry& o) const {
  double dp = 0.0, dm = 0.0;
  const double* x = &m_.a;
  const double* y = &o.m_.a;
  for (int i = 0; i < 4; ++i) {
    dp += (x[i] - y[i]) * (x[i] - y[i]);
    dm += (x[i] + y[i]) * (x[i] + y[i]);
  }
  return std::sqrt(std::min(dp, dm));
}

Isometry compose(const Isometry& a, const Isometry& b) {
  return Isometry(a.matrix() * b.matrix());
}

IsometryKind classify(const Isometry& a) {
  if (a.det() > 0.0) {
    double t = std::fabs(a.trace());
    if (t > 2.0 + kParabolicTol) return IsometryKind::Hyperbolic;
    if (t >= 2.0 - kParabolicTol) return IsometryKind::Parabolic;
    return IsometryKind::Elliptic;
  }
  // det = -1: Cayley-Hamilton gives tr(a^2) = tr(a)^2 + 2, so a is a
  // reflection exactly when tr(a) = 0 and a glide otherwise.
  double tr_sq = a.trace() * a.trace() - 2.0 * a.det();
  if (tr_sq > 2.0 + kParabolicTol) return IsometryKind::Glide;
  return IsometryKind::Reflection;
}

TranslationLength translation_length_from_trace(double trace, double det) {
  if (det > 0.0) {
    double t = std::fabs(trace);
    if (t > 2.0 + kParabolicTol) {
      double u = t / 2.0 - 1.0;
      return {IsometryKind::Hyperbolic, 2.0 * stable_acosh1p(u)};
    }
    if (t >= 2.0 - kParabolicTol) return {IsometryKind::Parabolic, 0.0};
    return {IsometryKind::Elliptic, 0.0};
  }
  // Route through the square: tr(a^2) = tr(a)^2 - 2 det(a) exactly
  // (Cayley-Hamilton), avoiding the cancellation of an explicit matrix
  // product when the entries dwarf the trace.
  double tr_sq = trace * trace + 2.0;
  if (!(tr_sq > 2.0 + kParabolicTol)) {
    throw std::domain_error("not a glide reflection");
  }
  double u = tr_sq / 2.0 - 1.0;
  double of_square = 2.0 * stable_acosh1p(u);
  return {IsometryKind::Glide, of_square / 2.0};
}

TranslationLength translation_length(const Isometry& a) {
  return translation_length_from_trace(a.trace(), a.det());
}

double geodesic_length(const Isometry& a) {
  TranslationLength t = translation_length(a);
  if (t.kind != IsometryKind::Hyperbolic && t.kind != IsometryKind::Glide) {
    throw std::domain_error("isometry has no closed geodesic: not hyperbolic or glide");
  }
  return t.value;
}

double dist(const HPoint& p, const HPoint& q) {
  double dx = p.x - q.x;
  double dy = p.y - q.y;
  double u = (dx * dx + dy * dy) / (2.0 * p.y * q.y);
  return stable_acosh1p(u);
}

HPoint apply(const Isometry& iso, const HPoint& p) {
  const Mat2& m = iso.matrix();
  double x = p.x;
  double y = p.y;
  if (iso.det() < 0.0) y = -y;  // conjugate first
  // (a z + b)(conj(c z + d)) / |c z + d|^2
  double den = (m.c * x + m.d) * (m.c * x + m.d) + (m.c * y) * (m.c * y);
  double nx = (m.a * x + m.b) * (m.c * x + m.d) + m.a * m.c * y * y;
  double ny = (m.a * (m.c * x + m.d) - m.c * (m.a * x + m.b)) * y;  // = det * y
  HPoint out{nx / den, ny / den};
  if (!(out.y > 0.0) || !std::isfinite(out.x) || !std::isfinite(out.y)) {
    throw std::domain_error("degenerate image");
  }
  return out;
}

AxisEndpoints axis_endpoints(const Isometry& iso) {
  IsometryKind k = classify(iso);
  if (k != IsometryKind::Hyperbolic && k != IsometryKind::Glide) {
    throw std::domain_error("no axis");
  }
  // Fixed points on R u {inf} of z -> (a z + b)/(c z + d) as a projective
  // map; both the hyperbolic case and the boundary action of a glide have
  // two real eigendirections (disc = tr^2 - 4 det > 0).
  const Mat2& m = iso.matrix();
  double tr = m.trace();
  double disc = tr * tr - 4.0 * m.det();
  double root = std::sqrt(disc);
  double l_big = (tr >= 0.0) ? (tr + root) / 2.0 : (tr - root) / 2.0;
  double l_small = m.det() / l_big;

  constexpr double inf = std::numeric_limits<double>::infinity();
  auto fixed_point = [&](double lambda) -> double {
    // eigenvector (b, lambda - a) or (lambda - d, c); take the larger one
    double v1a = m.b, v2a = lambda - m.a;
    double v1b = lambda - m.d, v2b = m.c;
    double na = std::fabs(v1a) + std::fabs(v2a);
    double nb = std::fabs(v1b) + std::fabs(v2b);
    double v1 = (na >= nb) ? v1a : v1b;
    double v2 = (na >= nb) ? v2a : v2b;
    double scale = std::fabs(v1) + std::fabs(v2);
    if (std::fabs(v2) <= scale * 1e-12) return inf;
    return v1 / v2;
  };

  // The attracting fixed point on the boundary belongs to the eigenvalue
  // of larger modulus.
  double attracting = fixed_point(std::fabs(l_big) >= std::fabs(l_small) ? l_big : l_small);
  double repelling = fixed_point(std::fabs(l_big) >= std::fabs(l_small) ? l_small : l_big);
  return {repelling, attracting};
}

std::array<double, 2> to_klein(const HPoint& p) {
  // Through the hyperboloid: central projection of
  // ( (x^2+y^2+1)/2y, (x^2+y^2-1)/2y, x/y ).
  double n = p.x * p.x + p.y * p.y;
  return {(n - 1.0) / (n + 1.0), 2.0 * p.x / (n + 1.0)};
}

GeodesicSegment::GeodesicSegment(const HPoint& p_, const HPoint& q_) : p(p_), q(q_) {
  if (p.x == q.x && p.y == q.y) {
    throw std::invalid_argument("degenerate segment: equal endpoints");
  }
  kp = to_klein(p);
  kq = to_klein(q);
}

namespace {

// Orientation of the triple, normalized to the scale of the triangle.
double orient(const std::array<double, 2>& a, const std::array<double, 2>& b,
              const std::array<double, 2>& c) {
  double ux = b[0] - a[0], uy = b[1] - a[1];
  double vx = c[0] - a[0], vy = c[1] - a[1];
  double cross = ux * vy - uy * vx;
  double scale = std::hypot(ux, uy) * std::hypot(vx, vy);
  if (scale == 0.0) return 0.0;
  return cross / scale;
}

bool same_point(const std::array<double, 2>& a, const std::array<double, 2>& b) {
  return std::hypot(a[0] - b[0], a[1] - b[1]) < 1e-14;
}

}  // namespace

bool segments_cross(const GeodesicSegment& s1, const GeodesicSegment& s2) {
  // Klein chords: the usual straddle test with an orientation tolerance.
  if (same_point(s1.kp, s2.kp) || same_point(s1.kp, s2.kq) ||
      same_point(s1.kq, s2.kp) || same_point(s1.kq, s2.kq)) {
    return false;
  }
  double o1 = orient(s1.kp, s1.kq, s2.kp);
  double o2 = orient(s1.kp, s1.kq, s2.kq);
  double o3 = orient(s2.kp, s2.kq, s1.kp);
  double o4 = orient(s2.kp, s2.kq, s1.kq);
  if (std::fabs(o1) <= kOrientTol || std::fabs(o2) <= kOrientTol ||
      std::fabs(o3) <= kOrientTol || std::fabs(o4) <= kOrientTol) {
    return false;  // non-transverse within tolerance
  }
  return (o1 > 0) != (o2 > 0) && (o3 > 0) != (o4 > 0);
}

bool axes_cross(const AxisEndpoints& a1, const AxisEndpoints& a2) {
  // Linking of {a1.rep, a1.att} and {a2.rep, a2.att} on R u {inf}.
  // Map t -> t/(1+|t|) sends the boundary circle to [-1, 1] with infinity
  // glued at the ends; linking is then a parity count of separations.
  auto between = [](double lo, double hi, double t) {
    // is t strictly inside the arc (lo, hi) not through infinity?
    return (lo < t && t < hi);
  };
  double p1 = a1.repelling, q1 = a1.attracting;
  double p2 = a2.repelling, q2 = a2.attracting;

  bool inf1 = std::isinf(p1) || std::isinf(q1);
  bool inf2 = std::isinf(p2) || std::isinf(q2);
  if (inf1 && inf2) return false;  // both through infinity: share the point, no transverse link
  if (inf1) {
    double f = std::isinf(p1) ? q1 : p1;  // finite foot of axis 1
    double lo = std::min(p2, q2), hi = std::max(p2, q2);
    return between(lo, hi, f);
  }
  if (inf2) {
    double f = std::isinf(p2) ? q2 : p2;
    double lo = std::min(p1, q1), hi = std::max(p1, q1);
    return between(lo, hi, f);
  }
  double lo1 = std::min(p1, q1), hi1 = std::max(p1, q1);
  double lo2 = std::min(p2, q2), hi2 = std::max(p2, q2);
  bool in1 = between(lo1, hi1, lo2);
  bool in2 = between(lo1, hi1, hi2);
  return in1 != in2;
}

}  // namespace crosscap
