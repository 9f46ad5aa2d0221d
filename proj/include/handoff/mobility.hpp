#pragma once

#include <cstdint>
#include <random>

#include "handoff/environment.hpp"

namespace handoff {

enum class Direction : std::uint8_t { North = 0, South = 1, East = 2, West = 3 };

/// Seeded random source for one round.
///
/// The generator is std::mt19937_64, whose output sequence is fixed by the
/// standard. Directions are taken from the top two bits of each 64-bit draw
/// rather than through a std distribution, because distribution algorithms
/// are implementation-defined. Per-round substreams are seeded with
/// splitmix64(master ^ splitmix64(round + 1)).
class RngStream {
public:
  explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  static RngStream for_round(std::uint64_t master_seed, std::uint64_t round_index);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t next_u64() { return engine_(); }
  Direction next_direction() { return static_cast<Direction>(engine_() >> 62); }

private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

struct WalkConfig {
  int steps_per_walk{10};
  int walks_per_round{2000};
  GridPosition start{11, 11};

  /// Throws std::invalid_argument when a count is below one.
  void validate() const;
};

/// Moves one cell. A move that would leave the grid becomes a self-loop.
GridPosition apply_move(GridPosition pos, Direction dir, const GridBounds& bounds);

/// One uniformly drawn N/S/E/W step; consumes exactly one draw.
GridPosition step(GridPosition pos, const GridBounds& bounds, RngStream& rng);

/// steps_per_walk consecutive steps from pos.
GridPosition walk(GridPosition pos, const WalkConfig& cfg, const GridBounds& bounds,
                  RngStream& rng);

}  // namespace handoff
