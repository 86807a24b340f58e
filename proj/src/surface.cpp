#include "crosscap/surface.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace crosscap {

namespace {

constexpr double kLengthMatchTol = 1e-6;

Mat2 mat_inverse(const Mat2& m) {
  double dt = m.det();
  return {m.d / dt, -m.b / dt, -m.c / dt, m.a / dt};
}

Mat2 diag(double a, double d) { return {a, 0.0, 0.0, d}; }

// Side of the complete geodesic with the given boundary feet, evaluated
// at an interior point.  Positive/negative distinguishes the two sides.
double geodesic_side(const AxisEndpoints& ax, const HPoint& p) {
  bool inf1 = std::isinf(ax.repelling);
  bool inf2 = std::isinf(ax.attracting);
  if (inf1 && inf2) throw std::domain_error("degenerate axis");
  if (inf1 || inf2) {
    double foot = inf1 ? ax.attracting : ax.repelling;
    return p.x - foot;
  }
  return (p.x - ax.repelling) * (p.x - ax.attracting) + p.y * p.y;
}

// A point on the axis (top of the half-circle, or height 1 on a vertical).
HPoint point_on_axis(const AxisEndpoints& ax) {
  bool inf1 = std::isinf(ax.repelling);
  bool inf2 = std::isinf(ax.attracting);
  if (inf1 && inf2) throw std::domain_error("degenerate axis");
  if (inf1 || inf2) {
    double foot = inf1 ? ax.attracting : ax.repelling;
    return {foot, 1.0};
  }
  return {(ax.repelling + ax.attracting) / 2.0,
          std::fabs(ax.attracting - ax.repelling) / 2.0};
}

// Orientation-preserving isometry sending (from_zero, from_inf) to (0, inf).
Mat2 normalizer_to_standard_axis(double to_zero, double to_inf) {
  if (std::isinf(to_inf)) return {1.0, -to_zero, 0.0, 1.0};
  if (std::isinf(to_zero)) return {0.0, -1.0, 1.0, -to_inf};
  if (to_zero > to_inf) return {1.0, -to_zero, 1.0, -to_inf};
  return {-1.0, to_zero, 1.0, -to_inf};
}

}  // namespace

int HolonomyRep::generator_index(const std::string& name) const {
  for (std::size_t i = 0; i < generator_names.size(); ++i) {
    if (generator_names[i] == name) return static_cast<int>(i);
  }
  throw std::invalid_argument("unknown generator: " + name);
}

bool HolonomyRep::has_one_sided_generator() const {
  for (int i = 0; i < rank(); ++i) {
    if (one_sided_generator(i)) return true;
  }
  return false;
}

namespace {

// Mixed expanding/contracting products amplify double rounding
// geometrically; the accumulation runs in extended precision.  The det
// sign is tracked as the exact parity of orientation-reversing letters:
// a computed determinant of a large-entry product carries no information.
RawHolonomy accumulate_word(const HolonomyRep& rep, const Word& w) {
  RawHolonomy p{1, 0, 0, 1, 1.0};
  for (Letter l : w.letters) {
    int idx = (l > 0 ? l : -l) - 1;
    if (idx < 0 || idx >= rep.rank()) {
      throw std::invalid_argument("unknown generator in word");
    }
    const Mat2& m = rep.generators[idx].matrix();
    long double ga = m.a, gb = m.b, gc = m.c, gd = m.d;
    if (l < 0) {
      long double dt = ga * gd - gb * gc;
      long double t = ga;
      ga = gd / dt;
      gb = -gb / dt;
      gc = -gc / dt;
      gd = t / dt;
    }
    if (rep.generators[idx].det() < 0.0) p.det_sign = -p.det_sign;
    long double na = p.a * ga + p.b * gc;
    long double nb = p.a * gb + p.b * gd;
    long double nc = p.c * ga + p.d * gc;
    long double nd = p.c * gb + p.d * gd;
    p.a = na;
    p.b = nb;
    p.c = nc;
    p.d = nd;
  }
  return p;
}

}  // namespace

RawHolonomy raw_holonomy(const HolonomyRep& rep, const Word& w) {
  return accumulate_word(rep, w);
}

Isometry holonomy_of_word(const HolonomyRep& rep, const Word& w) {
  RawHolonomy p = accumulate_word(rep, w);
  return Isometry(static_cast<double>(p.a), static_cast<double>(p.b),
                  static_cast<double>(p.c), static_cast<double>(p.d));
}

HolonomyTrace holonomy_trace(const HolonomyRep& rep, const Word& w) {
  RawHolonomy p = accumulate_word(rep, w);
  return {static_cast<double>(p.a + p.d), p.det_sign};
}

AxisEndpoints axis_feet_of_word(const HolonomyRep& rep, const Word& w) {
  RawHolonomy p = accumulate_word(rep, w);
  long double tr = p.a + p.d;
  TranslationLength kind =
      translation_length_from_trace(static_cast<double>(tr), p.det_sign);
  if (kind.kind != IsometryKind::Hyperbolic && kind.kind != IsometryKind::Glide) {
    throw std::domain_error("no axis");
  }
  // eigenvalues from the exact det sign: tr^2 - 4 det > 0 in both cases
  long double det = p.det_sign;
  long double root = std::sqrt(tr * tr - 4.0L * det);
  long double l_big = (tr >= 0) ? (tr + root) / 2 : (tr - root) / 2;
  long double l_small = det / l_big;

  constexpr double inf = std::numeric_limits<double>::infinity();
  auto fixed_point = [&](long double lambda) -> double {
    long double v1a = p.b, v2a = lambda - p.a;
    long double v1b = lambda - p.d, v2b = p.c;
    long double na = std::fabs(v1a) + std::fabs(v2a);
    long double nb = std::fabs(v1b) + std::fabs(v2b);
    long double v1 = (na >= nb) ? v1a : v1b;
    long double v2 = (na >= nb) ? v2a : v2b;
    long double s = std::fabs(v1) + std::fabs(v2);
    if (std::fabs(v2) <= s * 1e-14L) return inf;
    return static_cast<double>(v1 / v2);
  };
  bool big_attracts = std::fabs(l_big) >= std::fabs(l_small);
  double attracting = fixed_point(big_attracts ? l_big : l_small);
  double repelling = fixed_point(big_attracts ? l_small : l_big);
  return {repelling, attracting};
}

double curve_length(const HolonomyRep& rep, const Word& w) {
  HolonomyTrace h = holonomy_trace(rep, w);
  TranslationLength t = translation_length_from_trace(h.trace, h.det);
  if (t.kind != IsometryKind::Hyperbolic && t.kind != IsometryKind::Glide) {
    throw std::domain_error("not a closed geodesic class");
  }
  return t.value;
}

double relation_residual(const HolonomyRep& rep) {
  double worst = 0.0;
  for (const Word& w : rep.relation_words) {
    worst = std::max(worst, holonomy_of_word(rep, w).projective_distance(Isometry::identity()));
  }
  return worst;
}

HolonomyRep build_pants(double l1, double l2, double l3) {
  if (!(l1 > 0.0) || !(l2 > 0.0) || !(l3 > 0.0)) {
    throw std::invalid_argument("invalid pants length");
  }
  double m = std::exp(l1 / 2.0);
  double n = std::exp(l2 / 2.0);
  double cm = std::cosh((l1 - l2) / 2.0);
  double cp = std::cosh((l1 + l2) / 2.0);
  double c3 = std::cosh(l3 / 2.0);
  // Axis of y at (r, 1); r chosen so that tr(xy) = -2 cosh(l3/2).
  double r = (cm + c3) / (cp + c3);

  Mat2 x0 = diag(m, 1.0 / m);
  Mat2 conj{1.0, r, 1.0, 1.0};
  Mat2 y0 = conj * diag(1.0 / n, n) * mat_inverse(conj);

  HolonomyRep rep;
  rep.surface = {true, 0, 3, {l1, l2, l3}};
  rep.generator_names = {"x", "y"};
  rep.generators = {Isometry{-x0.a, -x0.b, -x0.c, -x0.d},
                    Isometry{-y0.a, -y0.b, -y0.c, -y0.d}};
  rep.named_words["boundary1"] = Word{{1}};
  rep.named_words["boundary2"] = Word{{2}};
  rep.named_words["boundary3"] = Word{{-2, -1}};  // (xy)^-1
  return rep;
}

Isometry glide_square_root(const Isometry& B) {
  if (classify(B) != IsometryKind::Hyperbolic) {
    throw std::domain_error("glide square root requires a hyperbolic isometry");
  }
  Mat2 m = B.matrix();
  if (m.trace() < 0.0) {
    m = {-m.a, -m.b, -m.c, -m.d};
  }
  double tr = m.trace();
  double root = std::sqrt(tr * tr - 4.0);
  double l_big = (tr + root) / 2.0;    // e^{len/2} > 1
  double l_small = 1.0 / l_big;

  auto eigenvector = [&](double lambda, double& v1, double& v2) {
    double v1a = m.b, v2a = lambda - m.a;
    double v1b = lambda - m.d, v2b = m.c;
    if (std::fabs(v1a) + std::fabs(v2a) >= std::fabs(v1b) + std::fabs(v2b)) {
      v1 = v1a;
      v2 = v2a;
    } else {
      v1 = v1b;
      v2 = v2b;
    }
    double norm = std::hypot(v1, v2);
    v1 /= norm;
    v2 /= norm;
  };

  Mat2 p;
  eigenvector(l_big, p.a, p.c);
  eigenvector(l_small, p.b, p.d);
  double s = std::sqrt(l_big);
  Mat2 g = p * diag(-s, 1.0 / s) * mat_inverse(p);
  return Isometry(g);
}

HolonomyRep attach_crosscap(const HolonomyRep& rep, const Word& boundary_word,
                            double core_length, const std::string& label) {
  Isometry B = holonomy_of_word(rep, boundary_word);
  if (classify(B) != IsometryKind::Hyperbolic) {
    throw std::invalid_argument("cannot cap non-geodesic boundary");
  }
  if (std::fabs(geodesic_length(B) - 2.0 * core_length) > kLengthMatchTol) {
    throw std::invalid_argument("core/boundary length mismatch");
  }
  HolonomyRep out = rep;
  out.generators.push_back(glide_square_root(B));
  out.generator_names.push_back(label);

  Letter g = static_cast<Letter>(out.generators.size());
  Word relation{{g, g}};
  relation = concat(relation, inverse_word(boundary_word));
  out.relation_words.push_back(relation);

  // crosscap bookkeeping: one boundary down, genus up
  SurfaceDescriptor& s = out.surface;
  s.genus = s.orientable ? 2 * s.genus + 1 : s.genus + 1;
  s.orientable = false;
  s.punctures_plus_boundary -= 1;
  for (auto it = s.boundary_lengths.begin(); it != s.boundary_lengths.end(); ++it) {
    if (std::fabs(*it - 2.0 * core_length) <= kLengthMatchTol) {
      s.boundary_lengths.erase(it);
      break;
    }
  }
  return out;
}

std::vector<double> default_model_params(BuiltinModel model) {
  switch (model) {
    case BuiltinModel::N12:
      return {1.0, 1.0, 1.0};
    case BuiltinModel::N21:
      return {0.8, 1.0, 1.2};
    case BuiltinModel::N3:
      return {2.0, 2.0, 2.0};
    case BuiltinModel::N13:
      return {1.5, 0.0, 0.5, 1.0, 1.0, 1.0};
  }
  throw std::invalid_argument("unknown model");
}

namespace {

HolonomyRep build_n12(double core1, double bl1, double bl2) {
  if (!(core1 > 0.0) || !(bl1 > 0.0) || !(bl2 > 0.0)) {
    throw std::invalid_argument("invalid pants length");
  }
  // Two glide generators with crossing axes: the two one-sided geodesics.
  // The second core length and the axis separation are forced by the
  // boundary lengths:
  //   tr(ab)    =  2 cosh(bl1/2)
  //   tr(ab^-1) = -2 cosh(bl2/2)
  double h1 = std::cosh(bl1 / 2.0);
  double h2 = std::cosh(bl2 / 2.0);
  double sh2 = (h1 + h2) / (2.0 * std::sinh(core1 / 2.0));
  double core2 = 2.0 * std::asinh(sh2);
  double rho = (h1 - h2) / (2.0 * std::cosh(core1 / 2.0) * std::cosh(core2 / 2.0));
  double tau = (1.0 - rho) / (1.0 + rho);  // axis of b runs from -tau to 1

  double p = std::exp(core1 / 2.0);
  double q = std::exp(core2 / 2.0);
  Mat2 u = diag(-p, 1.0 / p);
  Mat2 conj{1.0, -tau, 1.0, 1.0};
  Mat2 v = conj * diag(-q, 1.0 / q) * mat_inverse(conj);

  HolonomyRep rep;
  rep.surface = {false, 1, 2, {bl1, bl2}};
  rep.model_name = "N12";
  rep.generator_names = {"a", "b"};
  rep.generators = {Isometry(u), Isometry(v)};
  rep.named_words["boundary1"] = Word{{1, 2}};
  rep.named_words["boundary2"] = Word{{1, -2}};
  return rep;
}

HolonomyRep build_n21(double core1, double core2, double boundary) {
  HolonomyRep pants = build_pants(2.0 * core1, 2.0 * core2, boundary);
  Isometry a = glide_square_root(pants.generators[0]);
  Isometry b = glide_square_root(pants.generators[1]);

  HolonomyRep rep;
  rep.surface = {false, 2, 1, {boundary}};
  rep.model_name = "N21";
  rep.generator_names = {"a", "b"};
  rep.generators = {a, b};
  rep.named_words["boundary1"] = Word{{1, 1, 2, 2}};
  return rep;
}

HolonomyRep build_n3(double l1, double l2, double l3) {
  HolonomyRep pants = build_pants(l1, l2, l3);
  Isometry x = pants.generators[0];
  Isometry y = pants.generators[1];
  Isometry z = compose(x, y).inverse();

  HolonomyRep rep;
  rep.surface = {false, 3, 0, {}};
  rep.model_name = "N3";
  rep.generator_names = {"a", "b", "c"};
  rep.generators = {glide_square_root(x), glide_square_root(y), glide_square_root(z)};
  rep.relation_words.push_back(Word{{1, 1, 2, 2, 3, 3}});
  // One-holed torus marking: the complement of the bounding one-sided
  // geodesic z = abc is a one-holed torus with pi_1 = <ab, (bc)^-1> and
  // [ab, (bc)^-1] = (abc)^2.
  rep.named_words["torus_x"] = Word{{1, 2}};
  rep.named_words["torus_y"] = Word{{-3, -2}};
  rep.named_words["bounding"] = Word{{1, 2, 3}};
  return rep;
}

HolonomyRep build_n13(double d, double twist, double core, double bl1, double bl2,
                      double bl3) {
  HolonomyRep p1 = build_pants(bl1, bl2, d);
  Isometry x1 = p1.generators[0];
  Isometry y1 = p1.generators[1];
  Isometry w = compose(x1, y1).inverse();  // glued cuff, length d

  HolonomyRep p2 = build_pants(d, bl3, 2.0 * core);
  Isometry y2s = p2.generators[1];

  AxisEndpoints wax = axis_endpoints(w);
  Mat2 nmat = normalizer_to_standard_axis(wax.repelling, wax.attracting);
  Mat2 ninv = mat_inverse(nmat);
  Mat2 tw = diag(std::exp(twist / 2.0), std::exp(-twist / 2.0));
  Mat2 twinv = mat_inverse(tw);

  auto place = [&](const Mat2& m) {
    return Isometry(ninv * tw * m * twinv * nmat);
  };

  Isometry y2 = place(y2s.matrix());
  // The two pants must sit on opposite sides of the glued cuff.
  HPoint marker1 = point_on_axis(axis_endpoints(y1));
  HPoint marker2 = point_on_axis(axis_endpoints(y2));
  double s1 = geodesic_side(wax, marker1);
  double s2 = geodesic_side(wax, marker2);
  if ((s1 > 0) == (s2 > 0)) {
    Mat2 flip{-1.0, 0.0, 0.0, 1.0};
    y2 = place(flip * y2s.matrix() * flip);
  }

  Isometry cap_boundary = compose(w, y2).inverse();  // (x2 y2)^-1, length 2*core
  Isometry g = glide_square_root(cap_boundary);

  HolonomyRep rep;
  rep.surface = {false, 1, 3, {bl1, bl2, bl3}};
  rep.model_name = "N13";
  rep.generator_names = {"a", "b", "g"};
  rep.generators = {x1, y1, g};
  rep.named_words["boundary1"] = Word{{1}};
  rep.named_words["boundary2"] = Word{{2}};
  rep.named_words["boundary3"] = Word{{1, 2, -3, -3}};  // y2 = a b g^-2
  rep.named_words["glued_cuff"] = Word{{-2, -1}};
  return rep;
}

}  // namespace

HolonomyRep builtin_model(BuiltinModel model, const std::vector<double>& params) {
  std::size_t expected = (model == BuiltinModel::N13) ? 6 : 3;
  if (params.size() != expected) {
    throw std::invalid_argument("parameter mismatch");
  }
  switch (model) {
    case BuiltinModel::N12:
      return build_n12(params[0], params[1], params[2]);
    case BuiltinModel::N21:
      return build_n21(params[0], params[1], params[2]);
    case BuiltinModel::N3:
      return build_n3(params[0], params[1], params[2]);
    case BuiltinModel::N13:
      return build_n13(params[0], params[1], params[2], params[3], params[4], params[5]);
  }
  throw std::invalid_argument("unknown model");
}

HolonomyRep builtin_model(const std::string& name, const std::vector<double>& params) {
  if (name == "N12") return builtin_model(BuiltinModel::N12, params);
  if (name == "N21") return builtin_model(BuiltinModel::N21, params);
  if (name == "N3") return builtin_model(BuiltinModel::N3, params);
  if (name == "N13") return builtin_model(BuiltinModel::N13, params);
  throw std::invalid_argument("unknown model: " + name);
}

namespace {

struct OneSidedMin {
  double value = std::numeric_limits<double>::infinity();
  Word witness;
};

OneSidedMin shortest_one_sided(const HolonomyRep& rep, int budget) {
  OneSidedMin best;
  for (const Word& w : word_classes(rep.rank(), budget)) {
    HolonomyTrace h = holonomy_trace(rep, w);
    if (h.det >= 0.0) continue;
    TranslationLength t = translation_length_from_trace(h.trace, h.det);
    if (t.kind != IsometryKind::Glide) continue;
    if (t.value < best.value) {
      best.value = t.value;
      best.witness = w;
    }
  }
  return best;
}

}  // namespace

SysMinusResult sys_minus(const HolonomyRep& rep, int word_budget) {
  if (word_budget < 1) throw std::invalid_argument("word budget must be >= 1");
  if (!rep.has_one_sided_generator()) {
    throw std::domain_error("surface appears orientable");
  }
  OneSidedMin at_budget = shortest_one_sided(rep, word_budget);
  OneSidedMin extended = shortest_one_sided(rep, word_budget + 2);
  bool certified = std::isfinite(at_budget.value) &&
                   std::fabs(at_budget.value - extended.value) <= 1e-9;
  return {extended.value, certified, extended.witness};
}

ModelConfig parse_model_config(const std::string& text) {
  static const std::vector<std::string> known = {
      "model", "pants_lengths", "core_lengths", "twists", "boundary_lengths"};
  ModelConfig config;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t\r");
      auto e = s.find_last_not_of(" \t\r");
      return (b == std::string::npos) ? std::string() : s.substr(b, e - b + 1);
    };
    if (trim(line).empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("malformed config line: " + line);
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw std::invalid_argument("unknown config key: " + key);
    }
    if (key == "model") {
      config.model = value;
      continue;
    }
    std::vector<double> nums;
    std::string item;
    std::istringstream vs(value);
    while (std::getline(vs, item, ',')) {
      nums.push_back(std::stod(item));
    }
    config.values[key] = nums;
  }
  if (config.model.empty()) throw std::invalid_argument("config missing model key");
  return config;
}

HolonomyRep model_from_config(const ModelConfig& config) {
  auto get = [&](const std::string& key, std::size_t count) {
    auto it = config.values.find(key);
    if (it == config.values.end() || it->second.size() != count) {
      throw std::invalid_argument("parameter mismatch");
    }
    return it->second;
  };
  if (config.model == "N12") {
    auto c = get("core_lengths", 1);
    auto b = get("boundary_lengths", 2);
    return builtin_model(BuiltinModel::N12, {c[0], b[0], b[1]});
  }
  if (config.model == "N21") {
    auto c = get("core_lengths", 2);
    auto b = get("boundary_lengths", 1);
    return builtin_model(BuiltinModel::N21, {c[0], c[1], b[0]});
  }
  if (config.model == "N3") {
    auto p = get("pants_lengths", 3);
    return builtin_model(BuiltinModel::N3, p);
  }
  if (config.model == "N13") {
    auto p = get("pants_lengths", 1);
    auto c = get("core_lengths", 1);
    auto b = get("boundary_lengths", 3);
    double twist = 0.0;
    auto it = config.values.find("twists");
    if (it != config.values.end()) {
      if (it->second.size() != 1) throw std::invalid_argument("parameter mismatch");
      twist = it->second[0];
    }
    return builtin_model(BuiltinModel::N13, {p[0], twist, c[0], b[0], b[1], b[2]});
  }
  throw std::invalid_argument("unknown model: " + config.model);
}

}  // namespace crosscap
