#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "handoff/transition_memory.hpp"

using namespace handoff;

namespace {

RankState random_state(std::mt19937& gen) {
  std::array<StationId, 5> ids{0, 1, 2, 3, 4};
  std::shuffle(ids.begin(), ids.end(), gen);
  return RankState{{ids[0], ids[1], ids[2]}};
}

TransitionKey random_key(std::mt19937& gen) {
  for (;;) {
    TransitionKey k{random_state(gen), random_state(gen)};
    if (k.valid()) return k;
  }
}

bool sorted_unique(const TransitionMemory& m) {
  const auto r = m.records();
  for (std::size_t i = 1; i < r.size(); ++i)
    if (!(r[i - 1].key < r[i].key)) return false;
  return true;
}

}  // namespace

TEST_CASE("empty memory finds nothing", "[memory]") {
  TransitionMemory m;
  CHECK(m.empty());
  CHECK_FALSE(m.lookup({RankState{{0, 1, 2}}, RankState{{1, 0, 2}}}));
}

TEST_CASE("record then lookup, overwrite keeps one entry", "[memory]") {
  TransitionMemory m;
  const TransitionKey k{RankState{{0, 1, 2}}, RankState{{1, 0, 2}}};
  m.record(k, -2.0);
  REQUIRE(m.lookup(k));
  CHECK(*m.lookup(k) == -2.0);
  m.record(k, 3.0);
  CHECK(*m.lookup(k) == 3.0);
  CHECK(m.size() == 1);

  // The reverse transition is a different key.
  CHECK_FALSE(m.lookup({k.to, k.from}));
  m.clear();
  CHECK(m.empty());
}

TEST_CASE("keys without a strongest-station change are rejected", "[memory]") {
  TransitionMemory m;
  CHECK_THROWS_AS(m.record({RankState{{0, 1, 2}}, RankState{{0, 2, 1}}}, 1.0), std::invalid_argument);
  CHECK(m.empty());
}

TEST_CASE("descending inserts end up sorted", "[memory]") {
  TransitionMemory m;
  for (StationId a = 4; a >= 1; --a) m.record({RankState{{a, 0, 1}}, RankState{{0, a, 1}}}, a);
  CHECK(m.size() == 4);
  CHECK(sorted_unique(m));
  CHECK(m.records().front().key.from.strongest() == 1);
}

TEST_CASE("memory matches a std::map oracle under random inserts", "[memory]") {
  std::mt19937 gen(11);
  std::uniform_real_distribution<double> delta(-6.0, 6.0);
  TransitionMemory m;
  std::map<TransitionKey, double> oracle;

  for (int i = 0; i < 10000; ++i) {
    const auto k = random_key(gen);
    const double d = delta(gen);
    m.record(k, d);
    oracle[k] = d;
    if (i % 500 == 0) REQUIRE(sorted_unique(m));
  }
  REQUIRE(m.size() == oracle.size());
  CHECK(sorted_unique(m));

  std::size_t i = 0;
  for (const auto& [k, d] : oracle) {
    CHECK(m.records()[i].key == k);
    CHECK(m.records()[i].delta == d);
    ++i;
  }

  // Bisection agrees with a linear scan, including misses.
  for (int q = 0; q < 1000; ++q) {
    const auto k = random_key(gen);
    std::optional<double> linear;
    for (const auto& r : m.records())
      if (r.key == k) linear = r.delta;
    CHECK(m.lookup(k) == linear);
  }
}

TEST_CASE("interleaved operations keep the table sorted", "[memory]") {
  std::mt19937 gen(5);
  for (int trial = 0; trial < 50; ++trial) {
    TransitionMemory m;
    std::map<TransitionKey, double> oracle;
    for (int op = 0; op < 200; ++op) {
      const auto k = random_key(gen);
      if (gen() % 3 == 0) {
        const auto it = oracle.find(k);
        CHECK(m.lookup(k) == (it == oracle.end() ? std::nullopt : std::optional<double>(it->second)));
      } else {
        const double d = static_cast<double>(static_cast<int>(gen() % 13) - 6);
        m.record(k, d);
        oracle[k] = d;
      }
    }
    CHECK(sorted_unique(m));
    CHECK(m.size() == oracle.size());
  }
}

TEST_CASE("dump writes a sorted tab-separated table", "[memory]") {
  TransitionMemory m;
  m.record({RankState{{1, 0, 2}}, RankState{{0, 1, 2}}}, 2.0);
  m.record({RankState{{0, 1, 2}}, RankState{{1, 0, 2}}}, -2.0);
  std::ostringstream out;
  m.dump(out);
  CHECK(out.str() ==
        "from\tto\tdelta\n"
        "[0,1,2]\t[1,0,2]\t-2.0000\n"
        "[1,0,2]\t[0,1,2]\t2.0000\n");
}
