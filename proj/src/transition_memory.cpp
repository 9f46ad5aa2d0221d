#include "handoff/transition_memory.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <stdexcept>

namespace handoff {

namespace {

auto key_less = [](const TransitionRecord& r, const TransitionKey& k) { return r.key < k; };

}  // namespace

std::optional<double> TransitionMemory::lookup(const TransitionKey& key) const {
  const auto it = std::lower_bound(records_.begin(), records_.end(), key, key_less);
  if (it == records_.end() || it->key != key) return std::nullopt;
  return it->delta;
}

void TransitionMemory::record(const TransitionKey& key, double delta) {
  if (!key.valid()) {
    throw std::invalid_argument("transition " + to_string(key.from) + " -> " + to_string(key.to) +
                                " does not change the strongest station");
  }
  const auto it = std::lower_bound(records_.begin(), records_.end(), key, key_less);
  if (it != records_.end() && it->key == key) {
    it->delta = delta;
    return;
  }
  records_.insert(it, TransitionRecord{key, delta});
}

void TransitionMemory::dump(std::ostream& out) const {
  out << "from\tto\tdelta\n";
  for (const auto& r : records_) {
    out << to_string(r.key.from) << '\t' << to_string(r.key.to) << '\t' << std::fixed
        << std::setprecision(4) << r.delta << '\n';
  }
}

}  // namespace handoff
