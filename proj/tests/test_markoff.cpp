#include <random>
#include <stdexcept>

#include "crosscap/markoff.hpp"
#include "doctest.h"

using namespace crosscap;

TEST_CASE("vieta move examples") {
  MarkoffConfig t3 = MarkoffConfig::triples();
  MarkoffTuple moved = vieta_move(t3, {1, 1, 1}, 0);
  CHECK(moved == MarkoffTuple{1, 1, 2});
  CHECK(satisfies_equation(t3, moved));  // 1 + 1 + 4 = 6 = 3*1*1*2

  MarkoffConfig q4 = MarkoffConfig::quadruples();
  MarkoffTuple moved4 = vieta_move(q4, {2, 2, 2, 2}, 0);
  CHECK(moved4 == MarkoffTuple{2, 2, 2, 6});
  CHECK(satisfies_equation(q4, moved4));  // 36 + 12 = 48 = 48

  // moving the largest coordinate of (1,1,2) descends back to the root
  CHECK(vieta_move(t3, {1, 1, 2}, 2) == MarkoffTuple{1, 1, 1});
  // rejected when the new coordinate would leave the positive cone
  CHECK_THROWS_WITH_AS(vieta_move(t3, {1, 1, 5}, 2), "left positive cone",
                       std::domain_error);
}

TEST_CASE("vieta move is an involution preserving the equation") {
  std::mt19937 rng(4242);
  for (const bool quad : {false, true}) {
    MarkoffConfig config = quad ? MarkoffConfig::quadruples() : MarkoffConfig::triples();
    auto orbit = markoff_orbit(config, 100000);
    std::uniform_int_distribution<std::size_t> pick(0, orbit.size() - 1);
    std::uniform_int_distribution<int> coord(0, config.arity - 1);
    for (int trial = 0; trial < 5000; ++trial) {
      const MarkoffTuple& t = orbit[pick(rng)];
      int i = coord(rng);
      MarkoffTuple moved;
      try {
        moved = vieta_move(config, t, i);
      } catch (const std::domain_error&) {
        continue;
      }
      CHECK(satisfies_equation(config, moved));
      // moving the replaced coordinate back returns t
      std::uint64_t original = t[static_cast<std::size_t>(i)];
      bool recovered = false;
      for (int j = 0; j < config.arity && !recovered; ++j) {
        try {
          recovered = (vieta_move(config, moved, j) == t &&
                       vieta_move(config, vieta_move(config, moved, j), 0) ==
                           vieta_move(config, t, 0));
        } catch (const std::domain_error&) {
        }
      }
      CHECK(recovered);
      (void)original;
    }
  }
}

TEST_CASE("orbit examples") {
  MarkoffConfig t3 = MarkoffConfig::triples();
  auto orbit = markoff_orbit(t3, 5);
  REQUIRE(orbit.size() == 3);
  CHECK(orbit[0] == MarkoffTuple{1, 1, 1});
  CHECK(orbit[1] == MarkoffTuple{1, 1, 2});
  CHECK(orbit[2] == MarkoffTuple{1, 2, 5});

  MarkoffConfig q4 = MarkoffConfig::quadruples();
  auto orbit4 = markoff_orbit(q4, 2);
  REQUIRE(orbit4.size() == 1);
  CHECK(orbit4[0] == MarkoffTuple{2, 2, 2, 2});

  CHECK_THROWS_WITH_AS(markoff_orbit(t3, 0), "bound below all seeds",
                       std::invalid_argument);
  MarkoffConfig empty{3, 3, {}};
  CHECK_THROWS_WITH_AS(markoff_orbit(empty, 10), "no seeds", std::invalid_argument);
}

TEST_CASE("bruteforce examples") {
  MarkoffConfig t3 = MarkoffConfig::triples();
  CHECK(markoff_bruteforce(t3, 5) == markoff_orbit(t3, 5));
  CHECK(markoff_bruteforce(t3, 0).empty());

  MarkoffConfig q4 = MarkoffConfig::quadruples();
  auto brute = markoff_bruteforce(q4, 6);
  bool has2222 = false, has2226 = false;
  for (const auto& t : brute) {
    if (t == MarkoffTuple{2, 2, 2, 2}) has2222 = true;
    if (t == MarkoffTuple{2, 2, 2, 6}) has2226 = true;
  }
  CHECK(has2222);
  CHECK(has2226);

  CHECK_THROWS_WITH_AS(markoff_bruteforce(t3, 20000),
                       "bound too large for exhaustive scan", std::invalid_argument);
}

TEST_CASE("orbit equals bruteforce at every bound up to 1000") {
  // the exhaustive scan restricted to a smaller bound is the exhaustive
  // scan at that bound, so one full scan backs the whole sweep
  MarkoffConfig t3 = MarkoffConfig::triples();
  auto brute_full = markoff_bruteforce(t3, 1000);
  for (std::uint64_t bound = 1; bound <= 1000; ++bound) {
    std::vector<MarkoffTuple> filtered;
    for (const auto& t : brute_full) {
      if (t.back() <= bound) filtered.push_back(t);
    }
    CHECK(markoff_orbit(t3, bound) == filtered);
  }

  MarkoffConfig q4 = MarkoffConfig::quadruples();
  auto brute_quad = markoff_bruteforce(q4, 1000);
  for (std::uint64_t bound = 2; bound <= 1000; ++bound) {
    std::vector<MarkoffTuple> filtered;
    for (const auto& t : brute_quad) {
      if (t.back() <= bound) filtered.push_back(t);
    }
    CHECK(markoff_orbit(q4, bound) == filtered);
  }
}

TEST_CASE("every emitted tuple satisfies its equation exactly") {
  MarkoffConfig t3 = MarkoffConfig::triples();
  for (const auto& t : markoff_orbit(t3, 100000)) {
    CHECK(satisfies_equation(t3, t));
  }
  MarkoffConfig q4 = MarkoffConfig::quadruples();
  for (const auto& t : markoff_orbit(q4, 100000)) {
    CHECK(satisfies_equation(q4, t));
  }
}

TEST_CASE("invalid seeds are rejected") {
  MarkoffConfig bad{3, 3, {{1, 1, 3}}};
  CHECK_THROWS_WITH_AS(markoff_orbit(bad, 10), "seed does not satisfy the equation",
                       std::invalid_argument);
}
