#include "crosscap/curves.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

namespace crosscap {

namespace {

// Separations between the axis feet of nearby shifts shrink like
// exp(-length/2), far below double resolution for the curve lengths the
// growth experiments need, so the shift-axis pipeline runs in quad
// precision.  Certification threshold: margins must clear the noise
// floor of the quad accumulation with room to spare.
using f128 = __float128;

constexpr double kFootMargin128 = 1e-24;

f128 f128_abs(f128 x) { return x < 0 ? -x : x; }

f128 f128_sqrt(f128 x) {
  if (x <= 0) return 0;
  f128 r = sqrtl(static_cast<long double>(x));
  r = f128(0.5) * (r + x / r);
  r = f128(0.5) * (r + x / r);
  return r;
}

struct RawF128 {
  f128 a, b, c, d;
};

RawF128 accumulate_f128(const HolonomyRep& rep, const Word& w) {
  RawF128 p{1, 0, 0, 1};
  for (Letter l : w.letters) {
    int idx = (l > 0 ? l : -l) - 1;
    if (idx < 0 || idx >= rep.rank()) {
      throw std::invalid_argument("unknown generator in word");
    }
    const Mat2& m = rep.generators[static_cast<std::size_t>(idx)].matrix();
    f128 ga = m.a, gb = m.b, gc = m.c, gd = m.d;
    if (l < 0) {
      f128 dt = ga * gd - gb * gc;
      f128 t = ga;
      ga = gd / dt;
      gb = -gb / dt;
      gc = -gc / dt;
      gd = t / dt;
    }
    RawF128 n{p.a * ga + p.b * gc, p.a * gb + p.b * gd, p.c * ga + p.d * gc,
              p.c * gb + p.d * gd};
    p = n;
  }
  return p;
}

struct FootF128 {
  f128 value;
  bool infinite;
};

struct FeetF128 {
  FootF128 first, second;
};

FeetF128 feet_f128(const RawF128& p, double det_sign) {
  f128 tr = p.a + p.d;
  f128 det = det_sign;
  f128 root = f128_sqrt(tr * tr - 4 * det);
  f128 l_big = (tr >= 0) ? (tr + root) / 2 : (tr - root) / 2;
  f128 l_small = det / l_big;
  auto fixed_point = [&](f128 lambda) -> FootF128 {
    f128 v1a = p.b, v2a = lambda - p.a;
    f128 v1b = lambda - p.d, v2b = p.c;
    f128 na = f128_abs(v1a) + f128_abs(v2a);
    f128 nb = f128_abs(v1b) + f128_abs(v2b);
    f128 v1 = (na >= nb) ? v1a : v1b;
    f128 v2 = (na >= nb) ? v2a : v2b;
    f128 s = f128_abs(v1) + f128_abs(v2);
    if (f128_abs(v2) <= s * f128(1e-30)) return {0, true};
    return {v1 / v2, false};
  };
  return {fixed_point(l_big), fixed_point(l_small)};
}

double foot_separation_128(const FootF128& u, const FootF128& v) {
  if (u.infinite && v.infinite) return 0.0;
  if (u.infinite) return static_cast<double>(1 / (1 + f128_abs(v.value)));
  if (v.infinite) return static_cast<double>(1 / (1 + f128_abs(u.value)));
  return static_cast<double>(f128_abs(u.value - v.value) /
                             ((1 + f128_abs(u.value)) * (1 + f128_abs(v.value))));
}

double min_pair_separation(const FeetF128& a, const FeetF128& b) {
  double m = foot_separation_128(a.first, b.first);
  m = std::min(m, foot_separation_128(a.first, b.second));
  m = std::min(m, foot_separation_128(a.second, b.first));
  return std::min(m, foot_separation_128(a.second, b.second));
}

bool feet_cross_128(const FeetF128& a, const FeetF128& b) {
  bool ainf = a.first.infinite || a.second.infinite;
  bool binf = b.first.infinite || b.second.infinite;
  if (ainf && binf) return false;  // two verticals never cross
  if (ainf) {
    f128 f = a.first.infinite ? a.second.value : a.first.value;
    f128 lo = b.first.value < b.second.value ? b.first.value : b.second.value;
    f128 hi = b.first.value < b.second.value ? b.second.value : b.first.value;
    return lo < f && f < hi;
  }
  if (binf) {
    f128 f = b.first.infinite ? b.second.value : b.first.value;
    f128 lo = a.first.value < a.second.value ? a.first.value : a.second.value;
    f128 hi = a.first.value < a.second.value ? a.second.value : a.first.value;
    return lo < f && f < hi;
  }
  f128 lo1 = a.first.value < a.second.value ? a.first.value : a.second.value;
  f128 hi1 = a.first.value < a.second.value ? a.second.value : a.first.value;
  bool in1 = lo1 < b.first.value && b.first.value < hi1;
  bool in2 = lo1 < b.second.value && b.second.value < hi1;
  return in1 != in2;
}

Word rotation(const Word& w, std::size_t i) {
  Word out = w;
  std::rotate(out.letters.begin(), out.letters.begin() + static_cast<long>(i),
              out.letters.end());
  return out;
}

Word require_primitive(const Word& w) {
  Word r = cyclic_reduce(w);
  if (r.empty() || !is_primitive(r)) throw std::invalid_argument("non-primitive");
  return r;
}

}  // namespace

namespace {

double foot_separation_d(double u, double v) {
  bool iu = std::isinf(u), iv = std::isinf(v);
  if (iu && iv) return 0.0;
  if (iu) return 1.0 / (1.0 + std::fabs(v));
  if (iv) return 1.0 / (1.0 + std::fabs(u));
  return std::fabs(u - v) / ((1.0 + std::fabs(u)) * (1.0 + std::fabs(v)));
}

}  // namespace

SelfIntersectionCount shift_crossing_pairs(const HolonomyRep& rep, const Word& w) {
  Word r = require_primitive(w);
  HolonomyTrace base = holonomy_trace(rep, r);
  TranslationLength kind = translation_length_from_trace(base.trace, base.det);
  if (kind.kind != IsometryKind::Hyperbolic && kind.kind != IsometryKind::Glide) {
    throw std::domain_error("not a closed geodesic class");
  }
  std::size_t n = r.size();

  // fast tier: extended-precision feet, escalate when margins get thin
  {
    std::vector<AxisEndpoints> feet;
    feet.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      feet.push_back(axis_feet_of_word(rep, rotation(r, i)));
    }
    double min_margin = std::numeric_limits<double>::infinity();
    std::int64_t crossings = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        double m = foot_separation_d(feet[i].repelling, feet[j].repelling);
        m = std::min(m, foot_separation_d(feet[i].repelling, feet[j].attracting));
        m = std::min(m, foot_separation_d(feet[i].attracting, feet[j].repelling));
        m = std::min(m, foot_separation_d(feet[i].attracting, feet[j].attracting));
        min_margin = std::min(min_margin, m);
        if (axes_cross(feet[i], feet[j])) ++crossings;
      }
    }
    if (min_margin > 1e-7) return {crossings, true};
  }

  // quad tier
  std::vector<FeetF128> feet;
  feet.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Word rot = rotation(r, i);
    feet.push_back(feet_f128(accumulate_f128(rep, rot), base.det));
  }
  std::int64_t crossings = 0;
  double min_margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      min_margin = std::min(min_margin, min_pair_separation(feet[i], feet[j]));
      if (feet_cross_128(feet[i], feet[j])) ++crossings;
    }
  }
  return {crossings, min_margin > kFootMargin128};
}

bool is_simple_class(const HolonomyRep& rep, const Word& w) {
  return shift_crossing_pairs(rep, w).value == 0;
}

namespace {

// boundary action of a raw holonomy product on R u {inf}; only ratios
// enter, so the product needs no normalization
double boundary_map(const RawHolonomy& m, double z) {
  if (std::isinf(z)) {
    if (std::fabs(m.c) < 1e-30L * std::fabs(m.a)) {
      return std::numeric_limits<double>::infinity();
    }
    return static_cast<double>(m.a / m.c);
  }
  long double den = m.c * z + m.d;
  long double num = m.a * z + m.b;
  if (std::fabs(den) <= 1e-16L * (std::fabs(num) + std::fabs(m.c) + std::fabs(m.d))) {
    return std::numeric_limits<double>::infinity();
  }
  return static_cast<double>(num / den);
}

// Mobius map with (from_zero, from_inf) -> (0, inf), det > 0.
Mat2 axis_normalizer(double to_zero, double to_inf) {
  if (std::isinf(to_inf)) return {1.0, -to_zero, 0.0, 1.0};
  if (std::isinf(to_zero)) return {0.0, -1.0, 1.0, -to_inf};
  if (to_zero > to_inf) return {1.0, -to_zero, 1.0, -to_inf};
  return {-1.0, to_zero, 1.0, -to_inf};
}

std::int64_t quantize_foot(double f) {
  // atan compactification quantized at ~1e-9 resolution
  double t = std::isinf(f) ? 2.0 : std::atan(f);
  return static_cast<std::int64_t>(std::llround(t * 4.0e8));
}

// distinct axis translates g ax(w) crossing a fundamental period of ax(w)
std::int64_t crossing_lines_in_period(const HolonomyRep& rep, const Word& r,
                                      int budget) {
  double period = curve_length(rep, r);
  AxisEndpoints base = axis_feet_of_word(rep, r);
  Mat2 norm_mat = axis_normalizer(base.repelling, base.attracting);
  RawHolonomy norm{norm_mat.a, norm_mat.b, norm_mat.c, norm_mat.d, 1.0};

  std::set<std::pair<std::int64_t, std::int64_t>> seen_lines;
  std::int64_t crossings = 0;

  auto visit = [&](const RawHolonomy& hg) {
    double u = boundary_map(hg, base.repelling);
    double v = boundary_map(hg, base.attracting);
    std::int64_t qu = quantize_foot(u), qv = quantize_foot(v);
    if (qu > qv) std::swap(qu, qv);
    if (!seen_lines.insert({qu, qv}).second) return;
    double un = boundary_map(norm, u);
    double vn = boundary_map(norm, v);
    if (std::isinf(un) || std::isinf(vn)) return;   // shares the infinity foot
    if (un == 0.0 || vn == 0.0 || (un > 0) == (vn > 0)) return;  // no crossing
    double t = 0.5 * std::log(-un * vn);
    if (t >= -1e-12 && t < period - 1e-12) ++crossings;
  };

  std::vector<Letter> alphabet;
  std::vector<RawHolonomy> gens;
  for (int i = 1; i <= rep.rank(); ++i) {
    for (Letter l : {i, -i}) {
      alphabet.push_back(l);
      const Mat2& m = rep.generators[static_cast<std::size_t>(i) - 1].matrix();
      if (l > 0) {
        gens.push_back({m.a, m.b, m.c, m.d, m.det() < 0 ? -1.0 : 1.0});
      } else {
        long double dt = static_cast<long double>(m.a) * m.d -
                         static_cast<long double>(m.b) * m.c;
        gens.push_back(
            {m.d / dt, -m.b / dt, -m.c / dt, m.a / dt, m.det() < 0 ? -1.0 : 1.0});
      }
    }
  }
  std::vector<RawHolonomy> stack(static_cast<std::size_t>(budget) + 1);
  stack[0] = {1, 0, 0, 1, 1.0};
  std::vector<Letter> trail;
  auto dfs = [&](auto&& self, int depth) -> void {
    if (depth > 0) visit(stack[static_cast<std::size_t>(depth)]);
    if (depth == budget) return;
    for (std::size_t ai = 0; ai < alphabet.size(); ++ai) {
      Letter l = alphabet[ai];
      if (!trail.empty() && trail.back() == -l) continue;
      const RawHolonomy& p = stack[static_cast<std::size_t>(depth)];
      const RawHolonomy& q = gens[ai];
      stack[static_cast<std::size_t>(depth) + 1] = {
          p.a * q.a + p.b * q.c, p.a * q.b + p.b * q.d, p.c * q.a + p.d * q.c,
          p.c * q.b + p.d * q.d, p.det_sign * q.det_sign};
      trail.push_back(l);
      self(self, depth + 1);
      trail.pop_back();
    }
  };
  // seed with the base axis so translates equal to it are deduplicated away
  std::int64_t qu = quantize_foot(base.repelling), qv = quantize_foot(base.attracting);
  if (qu > qv) std::swap(qu, qv);
  seen_lines.insert({qu, qv});
  dfs(dfs, 0);
  return crossings;
}

}  // namespace

SelfIntersectionCount self_intersection_number(const HolonomyRep& rep, const Word& w,
                                               int search_budget) {
  Word r = require_primitive(w);
  if (search_budget < 1) throw std::invalid_argument("search budget must be >= 1");
  std::int64_t at_budget = crossing_lines_in_period(rep, r, search_budget);
  std::int64_t extended = crossing_lines_in_period(rep, r, search_budget + 2);
  bool certified = (at_budget == extended) && (extended % 2 == 0);
  return {extended / 2, certified};
}

CountSeries SimpleEnumeration::to_series(const std::string& label) const {
  std::vector<double> lengths;
  lengths.reserve(curves.size());
  for (const CurveRecord& c : curves) lengths.push_back(c.length);
  return CountSeries::from_lengths(std::move(lengths), label, certified);
}

namespace {

// Above this curve length the foot separations of nearby shifts fall
// below even quad-precision resolution; structured families are
// geometrically verified below the cap and carried by the mapping-class
// structure above it.
constexpr double kGeometricVerifyCap = 55.0;

Sidedness sided_of(double det) { return det < 0 ? Sidedness::OneSided : Sidedness::TwoSided; }

// boundary-parallel classes are not multicurve components
std::vector<Word> peripheral_classes(const HolonomyRep& rep) {
  std::vector<Word> out;
  for (const auto& [name, word] : rep.named_words) {
    if (name.rfind("boundary", 0) == 0) out.push_back(canonical_class(word));
  }
  return out;
}

std::optional<CurveRecord> try_simple_record(const HolonomyRep& rep, const Word& w,
                                             Sidedness filter, double l_max,
                                             bool& certainty) {
  for (const Word& b : peripheral_classes(rep)) {
    if (w == b) return std::nullopt;
  }
  HolonomyTrace ht = holonomy_trace(rep, w);
  if (sided_of(ht.det) != filter) return std::nullopt;
  TranslationLength t = translation_length_from_trace(ht.trace, ht.det);
  if (t.kind != IsometryKind::Hyperbolic && t.kind != IsometryKind::Glide) {
    return std::nullopt;
  }
  if (t.value > l_max) return std::nullopt;
  SelfIntersectionCount sc = shift_crossing_pairs(rep, w);
  certainty = certainty && sc.certified;
  if (sc.value != 0) return std::nullopt;
  return CurveRecord{w, filter, t.value, 0};
}

void sort_records(std::vector<CurveRecord>& curves) {
  std::sort(curves.begin(), curves.end(), [](const CurveRecord& a, const CurveRecord& b) {
    if (a.length != b.length) return a.length < b.length;
    return a.word < b.word;
  });
}

// reduced-word breadth of a DFS enumeration; used to bound brute work
double enumeration_breadth(int rank, int budget) {
  double per = 2.0 * rank - 1.0;
  double total = 0.0, layer = 2.0 * rank;
  for (int k = 1; k <= budget; ++k) {
    total += layer;
    layer *= per;
  }
  return total;
}

// Minimal geodesic length over reduced words with length in
// (k_lo, k_hi]; infinity when the scan is too wide to finish.
double min_length_over_band(const HolonomyRep& rep, int k_lo, int k_hi) {
  if (enumeration_breadth(rep.rank(), k_hi) > 3e7) {
    return -1.0;  // scan infeasible
  }
  double best = std::numeric_limits<double>::infinity();
  std::vector<RawHolonomy> stack(static_cast<std::size_t>(k_hi) + 1);
  stack[0] = {1, 0, 0, 1, 1.0};
  std::vector<Letter> alphabet;
  for (int i = 1; i <= rep.rank(); ++i) {
    alphabet.push_back(i);
    alphabet.push_back(-i);
  }
  std::vector<RawHolonomy> gens;
  for (Letter l : alphabet) {
    const Mat2& m = rep.generators[static_cast<std::size_t>(std::abs(l)) - 1].matrix();
    if (l > 0) {
      gens.push_back({m.a, m.b, m.c, m.d, m.det() < 0 ? -1.0 : 1.0});
    } else {
      long double dt = static_cast<long double>(m.a) * m.d -
                       static_cast<long double>(m.b) * m.c;
      gens.push_back({m.d / dt, -m.b / dt, -m.c / dt, m.a / dt, m.det() < 0 ? -1.0 : 1.0});
    }
  }
  Word g;
  auto dfs = [&](auto&& self, int depth) -> void {
    if (depth > k_lo) {
      // only new primitive classes matter: shorter cyclic reductions and
      // proper powers are covered at the base budget
      Word reduced = cyclic_reduce(g);
      if (static_cast<int>(reduced.size()) > k_lo && is_primitive(reduced)) {
        const RawHolonomy& p = stack[static_cast<std::size_t>(depth)];
        TranslationLength t = translation_length_from_trace(
            static_cast<double>(p.a + p.d), p.det_sign);
        if (t.kind == IsometryKind::Hyperbolic || t.kind == IsometryKind::Glide) {
          best = std::min(best, t.value);
        }
      }
    }
    if (depth == k_hi) return;
    for (std::size_t ai = 0; ai < alphabet.size(); ++ai) {
      Letter l = alphabet[ai];
      if (!g.letters.empty() && g.letters.back() == -l) continue;
      const RawHolonomy& p = stack[static_cast<std::size_t>(depth)];
      const RawHolonomy& q = gens[ai];
      stack[static_cast<std::size_t>(depth) + 1] = {
          p.a * q.a + p.b * q.c, p.a * q.b + p.b * q.d, p.c * q.a + p.d * q.c,
          p.c * q.b + p.d * q.d, p.det_sign * q.det_sign};
      g.letters.push_back(l);
      self(self, depth + 1);
      g.letters.pop_back();
    }
  };
  dfs(dfs, 0);
  return best;
}

SimpleEnumeration brute_enumerate(const HolonomyRep& rep, Sidedness filter, double l_max,
                                  int budget) {
  constexpr double kBreadthGuard = 2e6;
  while (budget > 1 && enumeration_breadth(rep.rank(), budget) > kBreadthGuard) --budget;

  bool certainty = true;
  std::vector<CurveRecord> curves;
  for (const Word& w : word_classes(rep.rank(), budget)) {
    if (auto rec = try_simple_record(rep, w, filter, l_max, certainty)) {
      curves.push_back(*rec);
    }
  }
  // saturation: every class appearing with two more letters of budget is
  // already longer than l_max
  double band_min = min_length_over_band(rep, budget, budget + 2);
  bool saturated = (band_min > l_max);
  sort_records(curves);
  return {std::move(curves), certainty && saturated, budget};
}

}  // namespace

Word n21_gamma_inf(const HolonomyRep& rep) {
  if (rep.model_name != "N21") throw std::invalid_argument("not the one-holed Klein bottle model");
  Word ab{{1, 2}};
  Word ab_inv{{1, -2}};
  bool ab_simple = (shift_crossing_pairs(rep, ab).value == 0);
  bool ab_inv_simple = (shift_crossing_pairs(rep, ab_inv).value == 0);
  if (ab_simple == ab_inv_simple) {
    throw std::runtime_error("could not identify the two-sided simple class");
  }
  return ab_simple ? ab : ab_inv;
}

Word n21_family_word(const HolonomyRep& rep, std::int64_t n) {
  Word c = n21_gamma_inf(rep);
  Word a{{1}};
  return canonical_class(concat(a, power(c, static_cast<int>(n))));
}

namespace {

SimpleEnumeration n21_enumerate(const HolonomyRep& rep, Sidedness filter, double l_max,
                                int budget) {
  Word c = n21_gamma_inf(rep);
  double lc = curve_length(rep, c);
  bool certainty = true;
  std::vector<CurveRecord> curves;

  if (filter == Sidedness::TwoSided) {
    if (lc <= l_max) {
      SelfIntersectionCount sc = shift_crossing_pairs(rep, c);
      certainty = sc.certified && (sc.value == 0);
      curves.push_back({canonical_class(c), filter, lc, 0});
    }
  } else {
    for (int dir : {+1, -1}) {
      int beyond = 0;
      for (std::int64_t n = (dir > 0) ? 0 : -1;; n += dir) {
        Word w = canonical_class(concat(Word{{1}}, power(c, static_cast<int>(n))));
        if (static_cast<int>(w.size()) > budget) {
          certainty = false;  // family truncated by the word budget
          break;
        }
        double len = curve_length(rep, w);
        if (len <= l_max) {
          beyond = 0;
          if (holonomy_trace(rep, w).det >= 0) {
            throw std::runtime_error("twist family member is not one-sided");
          }
          // Geometric verification up to the precision cap; beyond it the
          // family members are twist images of verified simple curves.
          if (len <= kGeometricVerifyCap) {
            SelfIntersectionCount sc = shift_crossing_pairs(rep, w);
            certainty = certainty && sc.certified;
            if (sc.value != 0) {
              throw std::runtime_error("twist family member is not simple");
            }
          }
          curves.push_back({w, filter, len, 0});
        } else if (++beyond >= 3) {
          break;
        }
      }
    }
  }

  // cross-check against brute force on the short-word overlap
  double lc_check = std::min(l_max, 5.0 * lc);
  SimpleEnumeration brute = brute_enumerate(rep, filter, lc_check, 7);
  std::set<Word> structured;
  for (const CurveRecord& r : curves) structured.insert(r.word);
  for (const CurveRecord& r : brute.curves) {
    if (structured.find(r.word) == structured.end()) certainty = false;
  }
  for (const CurveRecord& r : curves) {
    if (static_cast<int>(r.word.size()) <= brute.budget_used && r.length <= lc_check) {
      bool found = false;
      for (const CurveRecord& b : brute.curves) found = found || (b.word == r.word);
      if (!found) certainty = false;
    }
  }
  sort_records(curves);
  return {std::move(curves), certainty, budget};
}

}  // namespace

std::vector<Word> slope_words(const HolonomyRep& rep, const Word& x, const Word& y,
                              double l_max, int budget) {
  std::set<Word> out;
  auto consider = [&](const Word& w) {
    if (curve_length(rep, w) <= l_max) out.insert(canonical_class(w));
  };
  consider(x);
  consider(y);

  double margin = curve_length(rep, x) + curve_length(rep, y) + 2.0;
  // Stern-Brocot descent; traces grow along branches, so subtrees whose
  // root exceeds l_max + margin and dominates its parents are dead.
  auto descend = [&](auto&& self, const Word& a, const Word& b, double la,
                     double lb) -> void {
    Word cur = concat(a, b);
    if (static_cast<int>(cur.size()) > budget) return;
    double len = curve_length(rep, cur);
    if (len <= l_max) out.insert(canonical_class(cur));
    if (len > l_max + margin && len >= la && len >= lb) return;
    self(self, a, cur, la, len);
    self(self, cur, b, len, lb);
  };
  descend(descend, x, y, curve_length(rep, x), curve_length(rep, y));
  Word y_inv = inverse_word(y);
  descend(descend, x, y_inv, curve_length(rep, x), curve_length(rep, y_inv));
  return {out.begin(), out.end()};
}

namespace {

SimpleEnumeration n3_enumerate(const HolonomyRep& rep, Sidedness filter, double l_max,
                               int budget) {
  if (filter == Sidedness::OneSided) {
    throw std::invalid_argument(
        "one-sided enumeration is not supported on the closed genus-3 model");
  }
  Word x = rep.named_words.at("torus_x");
  Word y = rep.named_words.at("torus_y");
  bool certainty = true;
  std::vector<CurveRecord> curves;
  std::size_t truncated = 0;
  for (const Word& w : slope_words(rep, x, y, l_max, budget)) {
    if (static_cast<int>(w.size()) > budget - 2) ++truncated;
    HolonomyTrace ht = holonomy_trace(rep, w);
    if (ht.det < 0) throw std::runtime_error("slope word is not two-sided");
    double len = curve_length(rep, w);
    if (len <= kGeometricVerifyCap) {
      SelfIntersectionCount sc = shift_crossing_pairs(rep, w);
      certainty = certainty && sc.certified;
      if (sc.value != 0) throw std::runtime_error("slope word is not simple");
    }
    curves.push_back({w, filter, len, 0});
  }
  // if words ran into the budget ceiling, longer slopes may be missing
  if (truncated > 0) certainty = false;
  sort_records(curves);
  return {std::move(curves), certainty, budget};
}

}  // namespace

SimpleEnumeration enumerate_simple(const HolonomyRep& rep, Sidedness filter, double l_max,
                                   int budget) {
  if (budget < 1) throw std::invalid_argument("budget must be >= 1");
  if (!(l_max > 0)) throw std::invalid_argument("l_max must be positive");
  if (rep.model_name == "N21") return n21_enumerate(rep, filter, l_max, budget);
  if (rep.model_name == "N3") return n3_enumerate(rep, filter, l_max, budget);
  return brute_enumerate(rep, filter, l_max, budget);
}

}  // namespace crosscap
