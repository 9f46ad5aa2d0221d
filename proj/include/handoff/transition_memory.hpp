#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "handoff/signal.hpp"

namespace handoff {

/// (state, state') pair. Ordered lexicographically over the six ids.
struct TransitionKey {
  RankState from;
  RankState to;

  bool valid() const { return from.strongest() != to.strongest(); }
  auto operator<=>(const TransitionKey&) const = default;
};

struct TransitionRecord {
  TransitionKey key;
  double delta{0.0};
};

/// The UE's only persistent memory: allocation deltas per observed
/// transition, kept as a sorted vector and searched by bisection.
class TransitionMemory {
public:
  /// Stored delta for key, if any. O(log n).
  std::optional<double> lookup(const TransitionKey& key) const;

  /// Inserts key or overwrites its delta with the newer observation.
  /// Throws std::invalid_argument for a key whose strongest station does
  /// not change.
  void record(const TransitionKey& key, double delta);

  std::span<const TransitionRecord> records() const { return records_; }
  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }
  void clear() { records_.clear(); }

  /// Sorted text table: from-state, to-state, delta.
  void dump(std::ostream& out) const;

private:
  std::vector<TransitionRecord> records_;
};

}  // namespace handoff
