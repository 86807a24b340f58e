#include <cmath>
#include <random>

#include "crosscap/hypgeo.hpp"
#include "doctest.h"

using namespace crosscap;

namespace {

std::mt19937 rng(20240817);

double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Isometry random_conjugator() {
  while (true) {
    double a = uniform(-2, 2), b = uniform(-2, 2), c = uniform(-2, 2), d = uniform(-2, 2);
    if (std::fabs(a * d - b * c) > 0.1) return Isometry(a, b, c, d);
  }
}

Isometry random_hyperbolic(double len) {
  double m = std::exp(len / 2.0);
  Isometry t(m, 0, 0, 1.0 / m);
  Isometry b = random_conjugator();
  return compose(compose(b, t), b.inverse());
}

Isometry random_glide(double len) {
  double m = std::exp(len / 2.0);
  Isometry t(-m, 0, 0, 1.0 / m);
  Isometry b = random_conjugator();
  return compose(compose(b, t), b.inverse());
}

}  // namespace

TEST_CASE("compose basics") {
  Isometry a = random_hyperbolic(1.7);
  Isometry id;
  CHECK(compose(id, a).projective_distance(a) < 1e-12);

  Isometry d2(2, 0, 0, 0.5);
  Isometry d4 = compose(d2, d2);
  CHECK(d4.matrix().a == doctest::Approx(4.0));
  CHECK(d4.matrix().d == doctest::Approx(0.25));

  Isometry g1 = random_glide(0.9);
  Isometry g2 = random_glide(1.3);
  CHECK(g1.det() == doctest::Approx(-1.0));
  CHECK(compose(g1, g2).det() == doctest::Approx(1.0));
}

TEST_CASE("translation length and classification") {
  double e = std::exp(0.5);
  Isometry t(e, 0, 0, 1.0 / e);
  TranslationLength tl = translation_length(t);
  CHECK(tl.kind == IsometryKind::Hyperbolic);
  CHECK(tl.value == doctest::Approx(1.0).epsilon(1e-12));

  Isometry parab(1, 1, 0, 1);
  CHECK(translation_length(parab).kind == IsometryKind::Parabolic);
  CHECK(translation_length(parab).value == 0.0);

  Isometry rot(std::cos(0.3), -std::sin(0.3), std::sin(0.3), std::cos(0.3));
  CHECK(translation_length(rot).kind == IsometryKind::Elliptic);

  // glide: halve the length of the square, and cross-check directly
  Isometry glide(-e, 0, 0, 1.0 / e);
  TranslationLength gl = translation_length(glide);
  CHECK(gl.kind == IsometryKind::Glide);
  CHECK(gl.value == doctest::Approx(1.0).epsilon(1e-12));
  Isometry sq = compose(glide, glide);
  CHECK(2.0 * std::acosh(std::fabs(sq.trace()) / 2.0) == doctest::Approx(2.0));

  Isometry reflection(-1, 0, 0, 1);
  CHECK_THROWS_AS(translation_length(reflection), std::domain_error);
}

TEST_CASE("dist examples") {
  HPoint i{0, 1};
  HPoint ei{0, std::exp(1.0)};
  CHECK(dist(i, ei) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(dist(i, i) == 0.0);
  HPoint onei{1, 1};
  CHECK(dist(i, onei) == doctest::Approx(std::acosh(1.5)).epsilon(1e-12));
  CHECK(dist(onei, i) == doctest::Approx(dist(i, onei)).epsilon(1e-14));
}

TEST_CASE("apply examples") {
  HPoint i{0, 1};
  CHECK(apply(Isometry{}, i).y == doctest::Approx(1.0));
  double e = std::exp(0.5);
  HPoint moved = apply(Isometry(e, 0, 0, 1 / e), i);
  CHECK(moved.x == doctest::Approx(0.0));
  CHECK(moved.y == doctest::Approx(std::exp(1.0)));
  // glide along the imaginary axis preserves the axis
  HPoint gmoved = apply(Isometry(-e, 0, 0, 1 / e), i);
  CHECK(gmoved.x == doctest::Approx(0.0));
  CHECK(gmoved.y == doctest::Approx(std::exp(1.0)));
}

TEST_CASE("axis endpoints") {
  double e = std::exp(0.5);
  AxisEndpoints ax = axis_endpoints(Isometry(e, 0, 0, 1 / e));
  CHECK(ax.repelling == doctest::Approx(0.0));
  CHECK(std::isinf(ax.attracting));

  // conjugate by z -> z + 1
  Isometry shift(1, 1, 0, 1);
  Isometry conj = compose(compose(shift, Isometry(e, 0, 0, 1 / e)), shift.inverse());
  AxisEndpoints ax2 = axis_endpoints(conj);
  CHECK(ax2.repelling == doctest::Approx(1.0));
  CHECK(std::isinf(ax2.attracting));

  CHECK_THROWS_AS(axis_endpoints(Isometry(1, 1, 0, 1)), std::domain_error);

  // glide axis = axis of the square
  Isometry g = random_glide(0.8);
  AxisEndpoints ga = axis_endpoints(g);
  AxisEndpoints sqa = axis_endpoints(compose(g, g));
  auto feet_match = [](double u, double v) {
    if (std::isinf(u) || std::isinf(v)) return std::isinf(u) && std::isinf(v);
    return std::fabs(u - v) <= 1e-9 * (1.0 + std::fabs(u));
  };
  CHECK(feet_match(ga.attracting, sqa.attracting));
  CHECK(feet_match(ga.repelling, sqa.repelling));
}

TEST_CASE("segment crossing examples") {
  // vertical segment on the imaginary axis against a half-circle chord
  GeodesicSegment vert({0, 0.5}, {0, 2.0});
  GeodesicSegment arc({-0.8, 0.6}, {0.8, 0.6});
  CHECK(segments_cross(vert, arc));
  CHECK(segments_cross(arc, vert));

  GeodesicSegment v1({-1, 0.5}, {-1, 2.0});
  GeodesicSegment v2({1, 0.5}, {1, 2.0});
  CHECK_FALSE(segments_cross(v1, v2));

  GeodesicSegment s1({0, 1}, {1, 1});
  GeodesicSegment s2({0, 1}, {-1, 1});
  CHECK_FALSE(segments_cross(s1, s2));  // shared endpoint convention
}

namespace {

// Points along the geodesic segment, for the sampling oracle.
std::vector<HPoint> sample_segment(const HPoint& p, const HPoint& q, int n) {
  std::vector<HPoint> out;
  if (std::fabs(p.x - q.x) < 1e-12) {
    for (int i = 0; i <= n; ++i) {
      double t = static_cast<double>(i) / n;
      out.push_back({p.x, p.y * std::pow(q.y / p.y, t)});
    }
    return out;
  }
  double c = (p.x + q.x) / 2.0 + (q.y - p.y) * (q.y + p.y) / (2.0 * (q.x - p.x));
  double r = std::hypot(p.x - c, p.y);
  double a1 = std::atan2(p.y, p.x - c);
  double a2 = std::atan2(q.y, q.x - c);
  for (int i = 0; i <= n; ++i) {
    double t = static_cast<double>(i) / n;
    double a = a1 + t * (a2 - a1);
    out.push_back({c + r * std::cos(a), r * std::sin(a)});
  }
  return out;
}

// side of the full geodesic through (p, q) at point z
double side_value(const HPoint& p, const HPoint& q, const HPoint& z) {
  if (std::fabs(p.x - q.x) < 1e-12) return z.x - p.x;
  double c = (p.x + q.x) / 2.0 + (q.y - p.y) * (q.y + p.y) / (2.0 * (q.x - p.x));
  double r2 = (p.x - c) * (p.x - c) + p.y * p.y;
  return (z.x - c) * (z.x - c) + z.y * z.y - r2;
}

// -1 no crossing, +1 crossing, 0 ambiguous
int sampling_oracle(const GeodesicSegment& s1, const GeodesicSegment& s2) {
  auto pts1 = sample_segment(s1.p, s1.q, 400);
  auto pts2 = sample_segment(s2.p, s2.q, 400);
  auto straddles = [](const HPoint& a, const HPoint& b, const std::vector<HPoint>& pts) {
    double lo = 1e300, hi = -1e300;
    for (const HPoint& z : pts) {
      double s = side_value(a, b, z);
      lo = std::min(lo, s);
      hi = std::max(hi, s);
    }
    if (std::fabs(lo) < 1e-9 || std::fabs(hi) < 1e-9) return 0;
    return (lo < 0 && hi > 0) ? 1 : -1;
  };
  int c1 = straddles(s1.p, s1.q, pts2);
  int c2 = straddles(s2.p, s2.q, pts1);
  if (c1 == 0 || c2 == 0) return 0;
  return (c1 == 1 && c2 == 1) ? 1 : -1;
}

}  // namespace

TEST_CASE("segment crossing agrees with dense sampling on random pairs") {
  int decisive = 0;
  for (int trial = 0; trial < 500; ++trial) {
    HPoint a{uniform(-3, 3), uniform(0.2, 3)};
    HPoint b{uniform(-3, 3), uniform(0.2, 3)};
    HPoint c{uniform(-3, 3), uniform(0.2, 3)};
    HPoint d{uniform(-3, 3), uniform(0.2, 3)};
    if (dist(a, b) < 1e-3 || dist(c, d) < 1e-3) continue;
    GeodesicSegment s1(a, b), s2(c, d);
    int oracle = sampling_oracle(s1, s2);
    if (oracle == 0) continue;
    ++decisive;
    bool got = segments_cross(s1, s2);
    CHECK(got == segments_cross(s2, s1));
    CHECK(got == (oracle == 1));
  }
  CHECK(decisive > 400);
}

TEST_CASE("conjugation invariance of translation length") {
  for (int i = 0; i < 1000; ++i) {
    double len = uniform(0.1, 4.0);
    Isometry a = (i % 2 == 0) ? random_hyperbolic(len) : random_glide(len);
    Isometry b = random_conjugator();
    Isometry conj = compose(compose(b, a), b.inverse());
    CHECK(translation_length(conj).value ==
          doctest::Approx(translation_length(a).value).epsilon(1e-9));
  }
}

TEST_CASE("glide square doubles length") {
  for (int i = 0; i < 1000; ++i) {
    Isometry g = random_glide(uniform(0.05, 3.0));
    CHECK(translation_length(compose(g, g)).value ==
          doctest::Approx(2.0 * translation_length(g).value).epsilon(1e-9));
  }
}

TEST_CASE("isometries preserve distance") {
  for (int i = 0; i < 1000; ++i) {
    Isometry a = (i % 3 == 0) ? random_glide(uniform(0.1, 2.0)) : random_conjugator();
    HPoint p{uniform(-3, 3), uniform(0.1, 3)};
    HPoint q{uniform(-3, 3), uniform(0.1, 3)};
    CHECK(dist(apply(a, p), apply(a, q)) == doctest::Approx(dist(p, q)).epsilon(1e-9));
  }
}

TEST_CASE("degenerate constructions throw") {
  CHECK_THROWS_AS(GeodesicSegment({0, 1}, {0, 1}), std::invalid_argument);
  // contraction strong enough to underflow the image height
  Isometry squeeze(1e200, 0, 0, 1e-200);
  CHECK_THROWS_WITH_AS(apply(squeeze, HPoint{0.5, 1e-250}), "degenerate image",
                       std::domain_error);
}
