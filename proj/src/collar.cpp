#include "crosscap/collar.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace crosscap {

namespace {

constexpr double kSideTol = 1e-10;

// Endpoint lift on a band boundary ray: z = e^height (side tanh w, sech w).
struct BandPoint {
  double height;
  int side;  // +1 right ray, -1 left ray
};

struct Chord {
  BandPoint a, b;
};

// G^j acts by (height, side) -> (height + j l, side * (-1)^j).
BandPoint translate(const BandPoint& p, std::int64_t j, double core) {
  return {p.height + static_cast<double>(j) * core, (j % 2 == 0) ? p.side : -p.side};
}

struct XY {
  double x, y;
};

XY embed(const BandPoint& p, double rebase, double width) {
  double s = std::exp(p.height - rebase);
  return {p.side * s * std::tanh(width), s / std::cosh(width)};
}

bool same_lift(const BandPoint& p, const BandPoint& q) {
  return p.side == q.side && std::fabs(p.height - q.height) < 1e-12;
}

// Signed sinh of the distance from p to the complete geodesic through
// a and b, stable across the exponential height range of the band:
// for the half-circle with center c, sinh(d) has numerator
// |p|^2 - |a|^2 - 2 c (p.x - a.x), which avoids the c^2 - r^2
// cancellation entirely.  The anchor endpoint a must be the one at a
// scale comparable to p, otherwise the |a|^2 and c (p.x - a.x) terms
// cancel beyond double precision.
double side_of_geodesic(XY a, XY b, const XY& p) {
  if (std::fabs(std::log(b.y / p.y)) < std::fabs(std::log(a.y / p.y))) {
    std::swap(a, b);
  }
  double dx = b.x - a.x;
  double scale = std::fabs(a.x) + std::fabs(b.x);
  if (std::fabs(dx) <= 1e-14 * scale) {
    return (p.x - a.x) / (std::fabs(p.x) + std::fabs(a.x) + p.y);
  }
  double c = (a.x + b.x) / 2.0 + (b.y - a.y) * (b.y + a.y) / (2.0 * dx);
  double r2 = (a.x - c) * (a.x - c) + a.y * a.y;
  double r = std::sqrt(r2);
  double num = (p.x * p.x + p.y * p.y) - (a.x * a.x + a.y * a.y) - 2.0 * c * (p.x - a.x);
  return num / (2.0 * r * p.y);
}

// Chords of the band with all endpoints on the boundary rays: they
// cross iff the endpoints of one strictly straddle the geodesic through
// the other (the chord is exactly the intersection of its geodesic with
// the band, so one straddle test decides).
bool band_chords_cross(const Chord& s1, const Chord& s2, double width) {
  if (same_lift(s1.a, s2.a) || same_lift(s1.a, s2.b) || same_lift(s1.b, s2.a) ||
      same_lift(s1.b, s2.b)) {
    return false;
  }
  double rebase = 0.25 * (s1.a.height + s1.b.height + s2.a.height + s2.b.height);
  XY a = embed(s1.a, rebase, width);
  XY b = embed(s1.b, rebase, width);
  XY c = embed(s2.a, rebase, width);
  XY d = embed(s2.b, rebase, width);
  double sc = side_of_geodesic(a, b, c);
  double sd = side_of_geodesic(a, b, d);
  if (std::fabs(sc) <= kSideTol || std::fabs(sd) <= kSideTol) return false;
  return (sc > 0) != (sd > 0);
}

void check_params(const CollarParams& p) {
  if (!(p.core_length > 0.0) || !(p.width > 0.0)) {
    throw std::invalid_argument("collar parameters must be positive");
  }
}

Chord arc_chord(const CollarParams& p, std::int64_t k) {
  BandPoint lift_p{p.offset_p, +1};
  BandPoint lift_q{p.offset_q, -1};
  return {lift_p, translate(lift_q, k, p.core_length)};
}

}  // namespace

double CollarParams::boundary_length() const {
  return 2.0 * core_length * std::cosh(width);
}

std::int64_t self_intersections_closed_form(std::int64_t k) {
  if (k >= 0 && k % 2 == 0) return k / 2;
  if (k < 0 && k % 2 == 0) return -k / 2 - 1;
  if (k > 0) return (k + 1) / 2;
  return (-k - 1) / 2;
}

double arc_length(const CollarParams& params, std::int64_t k) {
  check_params(params);
  Chord arc = arc_chord(params, k);
  if (same_lift(arc.a, arc.b)) {
    throw std::domain_error("degenerate arc: coincident endpoint lifts");
  }
  // dist between e^{h1}(s1 tanh w, sech w) and e^{h2}(s2 tanh w, sech w);
  // factor e^{h1+h2} out of |p-q|^2 / (2 y1 y2) to stay in range.
  double h1 = arc.a.height, h2 = arc.b.height;
  double tw = std::tanh(params.width);
  double sw = 1.0 / std::cosh(params.width);
  double e1 = std::exp((h1 - h2) / 2.0);  // sqrt scale split
  double e2 = 1.0 / e1;
  double px = arc.a.side * e1 * tw, py = e1 * sw;
  double qx = arc.b.side * e2 * tw, qy = e2 * sw;
  double u = ((px - qx) * (px - qx) + (py - qy) * (py - qy)) / (2.0 * py * qy);
  return std::log1p(u + std::sqrt(u * (u + 2.0)));
}

std::int64_t self_intersections_geometric(const CollarParams& params, std::int64_t k,
                                          std::int64_t j_window) {
  check_params(params);
  if (j_window < std::llabs(k) + 2) {
    throw std::invalid_argument("j_window must be at least |k| + 2");
  }
  Chord base = arc_chord(params, k);
  std::int64_t crossings = 0;
  for (std::int64_t j = -j_window; j <= j_window; ++j) {
    if (j == 0) continue;
    Chord translated{translate(base.a, j, params.core_length),
                     translate(base.b, j, params.core_length)};
    if (band_chords_cross(base, translated, params.width)) ++crossings;
  }
  if (crossings % 2 != 0) {
    throw std::runtime_error("crossing count is odd; near-degenerate configuration");
  }
  return crossings / 2;
}

CollarCalibration calibrate_collar_index(const CollarParams& params) {
  const std::int64_t probe = 6;
  std::vector<std::int64_t> geom;
  for (std::int64_t k = -probe; k <= probe; ++k) {
    geom.push_back(self_intersections_geometric(params, k, probe + 4));
  }
  for (int sign : {+1, -1}) {
    for (int offset = -3; offset <= 3; ++offset) {
      bool ok = true;
      for (std::int64_t k = -probe; k <= probe && ok; ++k) {
        ok = (geom[static_cast<std::size_t>(k + probe)] ==
              self_intersections_closed_form(sign * k + offset));
      }
      if (ok) return {sign, offset};
    }
  }
  throw std::runtime_error("no index calibration matches the closed form");
}

std::vector<CollarMarginRow> verify_collar_inequality(const CollarParams& params,
                                                      std::int64_t k_min,
                                                      std::int64_t k_max) {
  check_params(params);
  CollarCalibration cal = calibrate_collar_index(params);
  double core = params.core_length;
  double bound = (params.boundary_length() + 2.0 * params.width) / (2.0 * core) + 1.0;
  std::vector<CollarMarginRow> rows;
  for (std::int64_t k = k_min; k <= k_max; ++k) {
    std::int64_t i_closed = self_intersections_closed_form(cal.sign * k + cal.offset);
    std::int64_t i_geom = self_intersections_geometric(params, k, std::llabs(k) + 2);
    double len = arc_length(params, k);
    double margin = bound - std::fabs(static_cast<double>(i_geom) - len / (2.0 * core));
    rows.push_back({k, i_closed, i_geom, len, margin});
  }
  return rows;
}

}  // namespace crosscap
