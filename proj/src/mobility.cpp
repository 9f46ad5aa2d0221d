#include "handoff/mobility.hpp"

#include <stdexcept>

namespace handoff {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

RngStream RngStream::for_round(std::uint64_t master_seed, std::uint64_t round_index) {
  return RngStream(splitmix64(master_seed ^ splitmix64(round_index + 1)));
}

void WalkConfig::validate() const {
  if (steps_per_walk < 1) throw std::invalid_argument("steps per walk must be at least 1");
  if (walks_per_round < 1) throw std::invalid_argument("walks per round must be at least 1");
}

GridPosition apply_move(GridPosition pos, Direction dir, const GridBounds& bounds) {
  GridPosition next = pos;
  switch (dir) {
    case Direction::North: ++next.y; break;
    case Direction::South: --next.y; break;
    case Direction::East: ++next.x; break;
    case Direction::West: --next.x; break;
  }
  return bounds.contains(next) ? next : pos;
}

GridPosition step(GridPosition pos, const GridBounds& bounds, RngStream& rng) {
  return apply_move(pos, rng.next_direction(), bounds);
}

GridPosition walk(GridPosition pos, const WalkConfig& cfg, const GridBounds& bounds,
                  RngStream& rng) {
  for (int i = 0; i < cfg.steps_per_walk; ++i) pos = step(pos, bounds, rng);
  return pos;
}

}  // namespace handoff
