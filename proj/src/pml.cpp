#include "crosscap/pml.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <stdexcept>

namespace crosscap {

PmlN21Point PmlN21Point::gamma_inf() {
  PmlN21Point p;
  p.at_marked_point = true;
  return p;
}

PmlN21Point PmlN21Point::vertex(std::int64_t n) {
  PmlN21Point p;
  p.n = n;
  p.t = 1.0;
  return p;
}

PmlN21Point PmlN21Point::arc_point(std::int64_t n, double t) {
  if (!(t >= 0.0) || !(t <= 1.0)) throw std::invalid_argument("arc parameter outside [0,1]");
  // quantize to a grid closed under t -> 1 - t, so the dihedral action
  // is exact in floating point
  t = std::round(t * 1073741824.0) / 1073741824.0;
  if (t == 0.0) return vertex(n + 1);  // (n, 0) is the far vertex of the arc
  PmlN21Point p;
  p.n = n;
  p.t = t;
  return p;
}

bool PmlN21Point::operator==(const PmlN21Point& o) const {
  if (at_marked_point != o.at_marked_point) return false;
  if (at_marked_point) return true;
  return n == o.n && t == o.t;
}

PmlN21Point n21_act(N21Generator g, const PmlN21Point& p) {
  if (p.at_marked_point) return p;
  if (g == N21Generator::Twist) {
    return PmlN21Point::arc_point(p.n + 1, p.t);
  }
  // reflect: (n, t) -> (-n - 1, 1 - t)
  if (p.t == 1.0) return PmlN21Point::vertex(-p.n);
  return PmlN21Point::arc_point(-p.n - 1, 1.0 - p.t);
}

N21OrbitClosure n21_orbit_closure(const PmlN21Point& p, int depth) {
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  if (p.at_marked_point) {
    return {OrbitClosureKind::MarkedPointOnly, {p}, false};
  }
  struct Key {
    std::int64_t n;
    double t;
    bool operator<(const Key& o) const { return n < o.n || (n == o.n && t < o.t); }
  };
  std::set<Key> seen;
  std::vector<PmlN21Point> sample;
  std::queue<std::pair<PmlN21Point, int>> frontier;
  frontier.push({p, 0});
  seen.insert({p.n, p.t});
  sample.push_back(p);
  while (!frontier.empty()) {
    auto [point, dist] = frontier.front();
    frontier.pop();
    if (dist == depth) continue;
    for (N21Generator g : {N21Generator::Twist, N21Generator::Reflect}) {
      PmlN21Point next = n21_act(g, point);
      if (!seen.insert({next.n, next.t}).second) continue;
      sample.push_back(next);
      frontier.push({next, dist + 1});
    }
  }
  OrbitClosureKind kind =
      p.is_vertex() ? OrbitClosureKind::VerticesWithLimit : OrbitClosureKind::ArcOrbitWithLimit;
  // every infinite orbit accumulates at the marked point: (n, t) -> gamma_inf
  // as n -> +-infinity in this model
  return {kind, std::move(sample), true};
}

std::pair<Multicurve, SymbolicLamination> decompose(const SymbolicLamination& lam) {
  Multicurve minus;
  for (const auto& [label, weight] : lam.atoms) {
    if (!(weight > 0.0)) throw std::invalid_argument("atom weights must be positive");
    minus.components.push_back({label, weight});
  }
  SymbolicLamination plus;
  plus.plus_weight = lam.plus_weight;
  plus.plus_label = lam.plus_label;
  return {minus, plus};
}

std::vector<double> w_minus(const SymbolicLamination& lam, int genus) {
  if (static_cast<int>(lam.atoms.size()) > genus) {
    throw std::invalid_argument("too many disjoint one-sided curves");
  }
  std::vector<double> weights;
  for (const auto& [label, weight] : lam.atoms) {
    (void)label;
    weights.push_back(weight);
  }
  std::sort(weights.begin(), weights.end(), std::greater<double>());
  weights.resize(static_cast<std::size_t>(genus), 0.0);
  return weights;
}

SymbolicLamination relabel(const SymbolicLamination& lam,
                           const std::map<std::string, std::string>& permutation) {
  SymbolicLamination out;
  out.plus_weight = lam.plus_weight;
  out.plus_label = lam.plus_label;
  for (const auto& [label, weight] : lam.atoms) {
    auto it = permutation.find(label);
    out.atoms[it == permutation.end() ? label : it->second] = weight;
  }
  if (out.atoms.size() != lam.atoms.size()) {
    throw std::invalid_argument("relabeling is not injective");
  }
  return out;
}

void IntersectionOracle::set(const std::string& a, const std::string& b,
                             std::int64_t value) {
  pairs_[{std::min(a, b), std::max(a, b)}] = value;
}

std::int64_t IntersectionOracle::value(const std::string& a, const std::string& b) const {
  if (a == b) return 0;
  auto it = pairs_.find({std::min(a, b), std::max(a, b)});
  if (it == pairs_.end()) throw std::invalid_argument("intersection oracle incomplete");
  return it->second;
}

std::optional<Multicurve> ball_intersect(const Multicurve& gamma, const Multicurve& delta,
                                         const IntersectionOracle& oracle) {
  for (const auto& [ga, gw] : gamma.components) {
    (void)gw;
    for (const auto& [da, dw] : delta.components) {
      (void)dw;
      if (oracle.value(ga, da) != 0) return std::nullopt;
    }
  }
  std::map<std::string, double> merged;
  for (const auto& [label, weight] : gamma.components) merged[label] += weight;
  for (const auto& [label, weight] : delta.components) merged[label] += weight;
  Multicurve out;
  for (const auto& [label, weight] : merged) out.components.push_back({label, weight});
  return out;
}

std::vector<std::string> ball_support(const Multicurve& m) {
  std::vector<std::string> labels;
  for (const auto& [label, weight] : m.components) {
    (void)weight;
    labels.push_back(label);
  }
  std::sort(labels.begin(), labels.end());
  return labels;
}

namespace {

struct DisjointSet {
  std::vector<int> parent;
  explicit DisjointSet(int n) : parent(static_cast<std::size_t>(n)) {
    for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

N13CurveSystem N13CurveSystem::build(int depth) {
  if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
  N13CurveSystem sys;
  std::map<std::array<std::uint64_t, 4>, int> index;
  std::queue<std::pair<int, int>> frontier;  // (tuple index, depth)

  std::array<std::uint64_t, 4> root{2, 2, 2, 2};
  sys.tuples_.push_back(root);
  index[root] = 0;
  frontier.push({0, 0});

  std::vector<std::array<int, 4>> move_target(1, {-1, -1, -1, -1});

  while (!frontier.empty()) {
    auto [ti, dist] = frontier.front();
    frontier.pop();
    if (dist == depth) continue;
    for (int slot = 0; slot < 4; ++slot) {
      std::array<std::uint64_t, 4> t = sys.tuples_[static_cast<std::size_t>(ti)];
      unsigned __int128 prod = 1;
      for (int j = 0; j < 4; ++j) {
        if (j != slot) prod *= t[static_cast<std::size_t>(j)];
      }
      if (prod <= t[static_cast<std::size_t>(slot)]) continue;
      unsigned __int128 replacement = prod - t[static_cast<std::size_t>(slot)];
      if (replacement > ~static_cast<std::uint64_t>(0)) continue;
      t[static_cast<std::size_t>(slot)] = static_cast<std::uint64_t>(replacement);
      auto it = index.find(t);
      int target;
      if (it == index.end()) {
        target = static_cast<int>(sys.tuples_.size());
        sys.tuples_.push_back(t);
        move_target.push_back({-1, -1, -1, -1});
        index[t] = target;
        frontier.push({target, dist + 1});
      } else {
        target = it->second;
      }
      move_target[static_cast<std::size_t>(ti)][static_cast<std::size_t>(slot)] = target;
    }
  }

  // a move at one slot preserves the curves in the other three slots
  int total_slots = 4 * static_cast<int>(sys.tuples_.size());
  DisjointSet dsu(total_slots);
  for (int ti = 0; ti < static_cast<int>(sys.tuples_.size()); ++ti) {
    for (int slot = 0; slot < 4; ++slot) {
      int target = move_target[static_cast<std::size_t>(ti)][static_cast<std::size_t>(slot)];
      if (target < 0) continue;
      for (int keep = 0; keep < 4; ++keep) {
        if (keep == slot) continue;
        dsu.unite(4 * ti + keep, 4 * target + keep);
      }
    }
  }
  std::map<int, int> compact;
  sys.slot_curves_.assign(sys.tuples_.size(), {0, 0, 0, 0});
  for (int ti = 0; ti < static_cast<int>(sys.tuples_.size()); ++ti) {
    for (int slot = 0; slot < 4; ++slot) {
      int root_id = dsu.find(4 * ti + slot);
      auto it = compact.find(root_id);
      if (it == compact.end()) {
        it = compact.insert({root_id, static_cast<int>(compact.size())}).first;
      }
      sys.slot_curves_[static_cast<std::size_t>(ti)][static_cast<std::size_t>(slot)] =
          it->second;
    }
  }
  sys.curve_count_ = static_cast<int>(compact.size());
  return sys;
}

const std::array<std::uint64_t, 4>& N13CurveSystem::tuple(int index) const {
  if (index < 0 || index >= tuple_count()) throw std::invalid_argument("unknown curve");
  return tuples_[static_cast<std::size_t>(index)];
}

int N13CurveSystem::curve_at(int tuple_index, int slot) const {
  if (tuple_index < 0 || tuple_index >= tuple_count() || slot < 0 || slot > 3) {
    throw std::invalid_argument("unknown curve");
  }
  return slot_curves_[static_cast<std::size_t>(tuple_index)][static_cast<std::size_t>(slot)];
}

bool N13CurveSystem::tangent(int curve_a, int curve_b) const {
  if (curve_a < 0 || curve_a >= curve_count_ || curve_b < 0 || curve_b >= curve_count_) {
    throw std::invalid_argument("unknown curve");
  }
  if (curve_a == curve_b) return false;
  for (const auto& slots : slot_curves_) {
    bool has_a = false, has_b = false;
    for (int s = 0; s < 4; ++s) {
      has_a = has_a || slots[static_cast<std::size_t>(s)] == curve_a;
      has_b = has_b || slots[static_cast<std::size_t>(s)] == curve_b;
    }
    if (has_a && has_b) return true;
  }
  return false;
}

bool N13CurveSystem::co_membership_connected() const {
  if (curve_count_ == 0) return true;
  std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(curve_count_));
  for (const auto& slots : slot_curves_) {
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        int a = slots[static_cast<std::size_t>(i)], b = slots[static_cast<std::size_t>(j)];
        if (a != b) {
          adjacency[static_cast<std::size_t>(a)].push_back(b);
          adjacency[static_cast<std::size_t>(b)].push_back(a);
        }
      }
    }
  }
  std::vector<bool> visited(static_cast<std::size_t>(curve_count_), false);
  std::queue<int> bfs;
  bfs.push(0);
  visited[0] = true;
  int reached = 1;
  while (!bfs.empty()) {
    int cur = bfs.front();
    bfs.pop();
    for (int nb : adjacency[static_cast<std::size_t>(cur)]) {
      if (!visited[static_cast<std::size_t>(nb)]) {
        visited[static_cast<std::size_t>(nb)] = true;
        ++reached;
        bfs.push(nb);
      }
    }
  }
  return reached == curve_count_;
}

N3Side n3_side(const SymbolicLamination& lam, const std::string& bounding_label) {
  if (lam.atoms.count(bounding_label) > 0) return N3Side::BoundingDisk;
  if (!lam.atoms.empty()) return N3Side::OneSidedDisk;
  return N3Side::Equator;
}

}  // namespace crosscap
