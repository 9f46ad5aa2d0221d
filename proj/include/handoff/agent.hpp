#pragma once

#include <optional>
#include <string_view>

#include "handoff/environment.hpp"
#include "handoff/signal.hpp"
#include "handoff/transition_memory.hpp"

namespace handoff {

enum class PolicyKind { RssiDefault, TransitionLearning };

/// When a retained (overridden) association is given up again.
///
/// OnRankOrderChange: the next time the observed top-3 order changes, the UE
/// falls back to the closest station even if the strongest is unchanged.
/// OnNewState: the retained station is kept until the next rank-1 change.
enum class OverrideRelease { OnRankOrderChange, OnNewState };

struct Policy {
  PolicyKind kind{PolicyKind::TransitionLearning};
  OverrideRelease release{OverrideRelease::OnRankOrderChange};

  bool learns() const { return kind == PolicyKind::TransitionLearning; }
};

std::string_view to_string(PolicyKind kind);
std::string_view to_string(OverrideRelease release);
PolicyKind parse_policy_kind(std::string_view text);
OverrideRelease parse_override_release(std::string_view text);

enum class DecisionKind {
  NoChange,     // no rank-1 change, association kept
  Reassociate,  // rank order changed without a new state; retained station dropped
  Handoff,      // new state, default action taken
  Override,     // new state, handoff refused on a remembered negative delta
};

std::string_view to_string(DecisionKind kind);

struct Decision {
  DecisionKind kind{DecisionKind::NoChange};
  /// Serving station after the decision is applied.
  StationId station{0};
  RankState observed;
  /// Delta found in memory for this transition, if one was consulted.
  std::optional<double> remembered_delta;

  bool is_transition() const {
    return kind == DecisionKind::Handoff || kind == DecisionKind::Override;
  }
};

struct AgentState {
  GridPosition position;
  StationId associated{0};
  RankState current_state;
  TransitionMemory memory;
  double last_allocation{0.0};

  /// Fresh agent at pos, associated with the strongest station there.
  static AgentState start(const Environment& env, GridPosition pos);
};

struct ObservationEvent {
  GridPosition position;
  DecisionKind kind{DecisionKind::NoChange};
  StationId station{0};
  double allocation{0.0};
  TransitionKey transition;  // meaningful when the decision is a transition
  std::optional<double> remembered_delta;
  std::optional<double> recorded_delta;
};

/// Reads the current ranking at the agent's position and decides. Pure.
Decision evaluate(const AgentState& agent, const Environment& env, const Policy& policy);

/// Executes a decision produced by evaluate() for the same agent.
ObservationEvent apply_decision(AgentState& agent, const Environment& env,
                                const Decision& decision, const Policy& policy);

}  // namespace handoff
