#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "read/rng.hpp"

namespace readkit {

// Canonical serialized environment configuration. Equal configurations must
// serialize to identical keys.
using StateKey = std::string;

// One action per agent, indexed by canonical agent order.
using JointAction = std::vector<std::string>;

struct ActionError {
  int agent = -1;
  std::string action;
  std::string reason;
};

struct GameError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidActionError : GameError {
  ActionError detail;
  explicit InvalidActionError(ActionError e)
      : GameError("invalid action '" + e.action + "' for agent " +
                  std::to_string(e.agent) + ": " + e.reason),
        detail(std::move(e)) {}
};

struct Outcome {
  StateKey next;
  double prob = 1.0;
};

// A finite cooperative Markov game with a shared reward. Immutable after
// construction; safe to share across concurrent episode runners.
struct GameSpec {
  std::string name;
  std::vector<std::string> agents;                   // canonical order 1..n
  std::vector<std::vector<std::string>> action_sets; // each contains wait_action
  std::string wait_action = "WAIT";
  StateKey initial_state;
  double gamma = 0.95;
  int horizon = 15;      // max env steps per episode
  int replan_cap = 15;   // max planner proposals per step

  std::function<bool(const StateKey&)> terminal;
  // nullopt means the joint action is valid in this state.
  std::function<std::optional<ActionError>(const StateKey&, const JointAction&)> validate;
  std::function<std::vector<Outcome>(const StateKey&, const JointAction&)> transition;
  std::function<double(const StateKey&, const JointAction&)> reward;
  // Per-agent legal menu in a state; defaults to the full action set.
  std::function<std::vector<std::string>(const StateKey&, int)> legal_actions;

  int num_agents() const { return static_cast<int>(agents.size()); }

  JointAction all_wait() const {
    return JointAction(agents.size(), wait_action);
  }

  bool is_all_wait(const JointAction& a) const {
    for (const auto& x : a)
      if (x != wait_action) return false;
    return true;
  }

  std::vector<std::string> menu(const StateKey& s, int agent) const {
    if (legal_actions) return legal_actions(s, agent);
    return action_sets[static_cast<std::size_t>(agent)];
  }

  std::optional<ActionError> check(const StateKey& s, const JointAction& a) const;

  // All joint actions whose components are in the per-agent menus and that
  // pass validate(). Never yields an action that step() rejects.
  std::vector<JointAction> enumerate_actions(const StateKey& s) const;
};

// Stable map key for a joint action.
std::string action_key(const JointAction& a);
JointAction parse_action_key(const std::string& key);

struct StepResult {
  StateKey next;
  double reward = 0.0;
  bool done = false;
};

// Samples (next, reward) from the transition contract. Throws
// InvalidActionError naming the offending agent on an invalid action.
StepResult step(const GameSpec& spec, const StateKey& state, const JointAction& action, Rng& rng);

// Explicit distribution over joint actions per state, with conditional
// (chain-rule) accessors for the sequential factorization.
struct PolicyTable {
  std::unordered_map<StateKey, std::vector<std::pair<JointAction, double>>> dist;

  const std::vector<std::pair<JointAction, double>>& at(const StateKey& s) const;
  double prob(const StateKey& s, const JointAction& a) const;

  // P(agent takes a | s, earlier agents took prefix). Derived from the joint
  // distribution by marginalization; prefix length selects the agent.
  std::vector<std::pair<std::string, double>> conditional(
      const StateKey& s, const std::vector<std::string>& prefix) const;
  double conditional_prob(const StateKey& s, const std::vector<std::string>& prefix,
                          const std::string& action) const;

  // Marginal probability of the prefix under the joint distribution.
  double prefix_prob(const StateKey& s, const std::vector<std::string>& prefix) const;

  void check_normalized(double tol = 1e-12) const;
};

PolicyTable uniform_policy(const GameSpec& spec, std::size_t cap = 200000);

// The reachable game unrolled into indexed tables; shared by the exact
// solvers, the visitation solver, and the shortest-plan oracle.
struct EnumeratedGame {
  const GameSpec* spec = nullptr;
  std::vector<StateKey> states;
  std::unordered_map<StateKey, int> index;
  std::vector<bool> terminal;

  struct ActionInfo {
    JointAction action;
    double reward = 0.0;
    std::vector<std::pair<int, double>> next;  // (state index, probability)
  };
  // Per-state legal joint actions; empty for terminal states.
  std::vector<std::vector<ActionInfo>> actions;
};

// Breadth-first enumeration of states reachable from the initial state under
// any legal joint action. Throws GameError when the cap is exceeded.
EnumeratedGame enumerate_game(const GameSpec& spec, std::size_t cap = 200000);

struct ExactValues {
  std::unordered_map<StateKey, double> v;
  // key: state + '\x1f' + action_key
  std::unordered_map<std::string, double> q;

  double value(const StateKey& s) const;
  double q_value(const StateKey& s, const JointAction& a) const;
};

// Fixed point of the Bellman expectation equations to sup-norm residual
// <= 1e-12. Terminal states are treated as absorbing with zero reward.
// Throws GameError if the policy misses a reachable non-terminal state.
ExactValues exact_values(const EnumeratedGame& g, const PolicyTable& policy);
ExactValues exact_values(const GameSpec& spec, const PolicyTable& policy, std::size_t cap = 200000);

// J(pi) = V_pi(initial state).
double expected_return(const GameSpec& spec, const PolicyTable& policy, std::size_t cap = 200000);
double expected_return(const EnumeratedGame& g, const PolicyTable& policy);

// Unnormalized discounted visitation frequencies rho(s) = sum_t gamma^t P(s_t = s).
std::unordered_map<StateKey, double> discounted_visitation(const EnumeratedGame& g,
                                                           const PolicyTable& policy);
std::unordered_map<StateKey, double> discounted_visitation(const GameSpec& spec,
                                                           const PolicyTable& policy,
                                                           std::size_t cap = 200000);

// Minimal-length action sequence from `from` to any terminal state, or
// nullopt when unreachable. Deterministic tie-break by action key.
std::optional<std::vector<JointAction>> shortest_solution(const EnumeratedGame& g,
                                                          const StateKey& from);

}  // namespace readkit
