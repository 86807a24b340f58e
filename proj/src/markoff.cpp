#include "crosscap/markoff.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <stdexcept>

namespace crosscap {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kBruteForceGuard = 10000;

// product of all coordinates except index i; returns false on overflow
bool product_except(const MarkoffTuple& t, int skip, u128& out) {
  out = 1;
  for (int j = 0; j < static_cast<int>(t.size()); ++j) {
    if (j == skip) continue;
    if (t[j] != 0 && out > (~static_cast<u128>(0)) / t[j]) return false;
    out *= t[j];
  }
  return true;
}

bool full_product(const MarkoffTuple& t, u128& out) { return product_except(t, -1, out); }

void validate_config(const MarkoffConfig& config) {
  if (config.arity != 3 && config.arity != 4) {
    throw std::invalid_argument("arity must be 3 or 4");
  }
  if (config.coefficient == 0) throw std::invalid_argument("coefficient must be positive");
}

u64 isqrt_u128(u128 n) {
  u64 guess = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
  while (guess > 0 && static_cast<u128>(guess) * guess > n) --guess;
  while (static_cast<u128>(guess + 1) * (guess + 1) <= n) ++guess;
  return guess;
}

}  // namespace

MarkoffConfig MarkoffConfig::triples() { return {3, 3, {{1, 1, 1}}}; }

MarkoffConfig MarkoffConfig::quadruples() { return {4, 1, {{2, 2, 2, 2}}}; }

bool satisfies_equation(const MarkoffConfig& config, const MarkoffTuple& t) {
  if (static_cast<int>(t.size()) != config.arity) return false;
  for (u64 x : t) {
    if (x == 0) return false;
  }
  u128 sum = 0;
  for (u64 x : t) sum += static_cast<u128>(x) * x;
  u128 prod;
  if (!full_product(t, prod)) return false;
  if (prod > (~static_cast<u128>(0)) / config.coefficient) return false;
  return sum == prod * config.coefficient;
}

MarkoffTuple vieta_move(const MarkoffConfig& config, const MarkoffTuple& t, int index) {
  validate_config(config);
  if (index < 0 || index >= static_cast<int>(t.size())) {
    throw std::invalid_argument("coordinate index out of range");
  }
  u128 prod;
  if (!product_except(t, index, prod)) {
    throw std::overflow_error("coordinate exceeds supported range");
  }
  u128 scaled = prod * config.coefficient;
  if (scaled <= t[index]) {
    throw std::domain_error("left positive cone");
  }
  u128 replacement = scaled - t[index];
  if (replacement > ~static_cast<u64>(0)) {
    throw std::overflow_error("coordinate exceeds supported range");
  }
  MarkoffTuple out = t;
  out[static_cast<std::size_t>(index)] = static_cast<u64>(replacement);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MarkoffTuple> markoff_orbit(const MarkoffConfig& config, std::uint64_t bound) {
  validate_config(config);
  if (config.seeds.empty()) throw std::invalid_argument("no seeds");

  std::set<MarkoffTuple> visited;
  std::queue<MarkoffTuple> frontier;
  for (MarkoffTuple seed : config.seeds) {
    std::sort(seed.begin(), seed.end());
    if (!satisfies_equation(config, seed)) {
      throw std::invalid_argument("seed does not satisfy the equation");
    }
    if (seed.back() > bound) continue;
    if (visited.insert(seed).second) frontier.push(seed);
  }
  if (visited.empty()) throw std::invalid_argument("bound below all seeds");

  while (!frontier.empty()) {
    MarkoffTuple t = frontier.front();
    frontier.pop();
    for (int i = 0; i < config.arity; ++i) {
      u128 prod;
      if (!product_except(t, i, prod)) continue;
      u128 scaled = prod * config.coefficient;
      if (scaled <= t[static_cast<std::size_t>(i)]) continue;
      u128 replacement = scaled - t[static_cast<std::size_t>(i)];
      if (replacement > bound) continue;
      MarkoffTuple next = t;
      next[static_cast<std::size_t>(i)] = static_cast<u64>(replacement);
      std::sort(next.begin(), next.end());
      if (visited.insert(next).second) frontier.push(next);
    }
  }
  return {visited.begin(), visited.end()};
}

std::vector<MarkoffTuple> markoff_bruteforce(const MarkoffConfig& config,
                                             std::uint64_t bound) {
  validate_config(config);
  if (bound > kBruteForceGuard) {
    throw std::invalid_argument("bound too large for exhaustive scan");
  }
  std::set<MarkoffTuple> found;
  u64 coeff = config.coefficient;

  // Complete a sorted prefix by solving t^2 - (A * prefix product) t +
  // (sum of prefix squares) = 0 for the largest coordinate.
  auto complete = [&](const MarkoffTuple& prefix) {
    u128 prod = 1;
    u128 sumsq = 0;
    for (u64 x : prefix) {
      prod *= x;
      sumsq += static_cast<u128>(x) * x;
    }
    u128 b = prod * coeff;
    if (b * b < 4 * sumsq) return;
    u128 disc = b * b - 4 * sumsq;
    u64 root = isqrt_u128(disc);
    if (static_cast<u128>(root) * root != disc) return;
    for (int sign : {-1, +1}) {
      u128 numer = (sign < 0) ? b - root : b + root;
      if (numer % 2 != 0) continue;
      u128 cand = numer / 2;
      if (cand == 0 || cand < prefix.back() || cand > bound) continue;
      MarkoffTuple t = prefix;
      t.push_back(static_cast<u64>(cand));
      if (satisfies_equation(config, t)) found.insert(t);
    }
  };

  if (config.arity == 3) {
    for (u64 x = 1; x <= bound; ++x) {
      for (u64 y = x; y <= bound; ++y) {
        complete({x, y});
      }
    }
  } else {
    for (u64 x = 1; x <= bound; ++x) {
      for (u64 y = x; y <= bound; ++y) {
        for (u64 z = y; z <= bound; ++z) {
          complete({x, y, z});
        }
      }
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace crosscap
