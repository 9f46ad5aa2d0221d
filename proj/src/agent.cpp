#include "handoff/agent.hpp"

#include <stdexcept>
#include <string>

namespace handoff {

std::string_view to_string(PolicyKind kind) {
  return kind == PolicyKind::RssiDefault ? "rssi_default" : "transition_learning";
}

std::string_view to_string(OverrideRelease release) {
  return release == OverrideRelease::OnRankOrderChange ? "rank_order_change" : "new_state";
}

PolicyKind parse_policy_kind(std::string_view text) {
  if (text == "rssi_default" || text == "baseline") return PolicyKind::RssiDefault;
  if (text == "transition_learning" || text == "tl") return PolicyKind::TransitionLearning;
  throw std::invalid_argument("unknown policy '" + std::string(text) + "'");
}

OverrideRelease parse_override_release(std::string_view text) {
  if (text == "rank_order_change") return OverrideRelease::OnRankOrderChange;
  if (text == "new_state") return OverrideRelease::OnNewState;
  throw std::invalid_argument("unknown override release rule '" + std::string(text) + "'");
}

std::string_view to_string(DecisionKind kind) {
  switch (kind) {
    case DecisionKind::NoChange: return "no_change";
    case DecisionKind::Reassociate: return "reassociate";
    case DecisionKind::Handoff: return "handoff";
    case DecisionKind::Override: return "override";
  }
  return "?";
}

AgentState AgentState::start(const Environment& env, GridPosition pos) {
  AgentState agent;
  agent.position = pos;
  agent.current_state = rank_top3(env, pos);
  agent.associated = agent.current_state.strongest();
  agent.last_allocation = env.allocation_at(agent.associated, pos);
  return agent;
}

Decision evaluate(const AgentState& agent, const Environment& env, const Policy& policy) {
  const RankState cur = rank_top3(env, agent.position);

  if (!is_new_state(agent.current_state, cur)) {
    if (policy.release == OverrideRelease::OnRankOrderChange && cur != agent.current_state &&
        agent.associated != cur.strongest()) {
      return {DecisionKind::Reassociate, cur.strongest(), cur, std::nullopt};
    }
    return {DecisionKind::NoChange, agent.associated, cur, std::nullopt};
  }

  if (!policy.learns()) return {DecisionKind::Handoff, cur.strongest(), cur, std::nullopt};

  // Unseen transitions and non-negative deltas follow the default action.
  const auto remembered = agent.memory.lookup({agent.current_state, cur});
  if (remembered && *remembered < 0.0) {
    return {DecisionKind::Override, agent.associated, cur, remembered};
  }
  return {DecisionKind::Handoff, cur.strongest(), cur, remembered};
}

ObservationEvent apply_decision(AgentState& agent, const Environment& env,
                                const Decision& decision, const Policy& policy) {
  ObservationEvent event;
  event.position = agent.position;
  event.kind = decision.kind;
  event.remembered_delta = decision.remembered_delta;
  event.transition = {agent.current_state, decision.observed};

  switch (decision.kind) {
    case DecisionKind::NoChange:
      break;
    case DecisionKind::Reassociate:
      agent.associated = decision.station;
      break;
    case DecisionKind::Handoff: {
      agent.associated = decision.station;
      const double received = env.allocation_at(agent.associated, agent.position);
      if (policy.learns()) {
        event.recorded_delta = received - agent.last_allocation;
        agent.memory.record(event.transition, *event.recorded_delta);
      }
      agent.current_state = decision.observed;
      break;
    }
    case DecisionKind::Override:
      // Nothing is learned about the avoided outcome.
      agent.current_state = decision.observed;
      break;
  }

  event.station = agent.associated;
  event.allocation = env.allocation_at(agent.associated, agent.position);
  agent.last_allocation = event.allocation;
  return event;
}

}  // namespace handoff
