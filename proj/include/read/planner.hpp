#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "read/game.hpp"

namespace readkit {

struct PlannerQuery {
  std::string task;
  StateKey state;
  std::string state_text;

  // Agent index for a sequential (per-agent) proposal, -1 for a joint one.
  int agent = -1;
  // Committed actions of earlier agents this step (sequential refinement).
  std::vector<std::string> prior;

  struct Evaluated {
    JointAction action;  // size 1 for per-agent scope
    bool scored = false;               // advantage feedback was computed
    std::optional<double> score;       // empty + scored: out-of-distribution
    std::string note;                  // rejection message (physical verification)
  };
  std::vector<Evaluated> evaluated;  // P: proposals already rejected this step

  struct Round {
    StateKey state;
    JointAction action;
    std::optional<double> score;
  };
  std::optional<Round> history;  // H: at most the previous round

  std::vector<JointAction> legal;  // menu for the current scope
};

struct PlannerResponse {
  JointAction action;  // size 1 for per-agent scope
  std::string rationale;
};

class Planner {
 public:
  virtual ~Planner() = default;
  virtual PlannerResponse propose(const PlannerQuery& q) = 0;
  // Called once per executed environment step with the joint action that was
  // attempted. The true next state is deliberately not included: planners
  // track their own belief, which is what the disturbance study perturbs.
  virtual void notify_step(const JointAction& executed) {}
};

// Greedy distance-to-goal policy computed by reverse breadth-first search,
// used both as the data-collection expert and as the scripted planner's
// internal script.
struct ExpertPolicy {
  std::unordered_map<StateKey, JointAction> action;  // per non-terminal solvable state
  std::unordered_map<StateKey, int> dist;

  bool covers(const StateKey& s) const { return action.count(s) != 0; }
};

ExpertPolicy make_expert_policy(const EnumeratedGame& g);

struct ScriptedPlannerConfig {
  double p = 0.0;  // probability of a hallucinated (out-of-menu) proposal
  double q = 0.0;  // probability of a random legal, off-script proposal
  std::uint64_t seed = 0;
};

// Stand-in for an LLM planner. Keeps an internal believed state that it
// advances by simulating executed actions; it never observes the true state
// directly. Advantage-scored feedback in P makes it re-ground its belief on
// the queried state; plain rejection messages do not.
class ScriptedPlanner : public Planner {
 public:
  ScriptedPlanner(const GameSpec& spec, std::shared_ptr<const ExpertPolicy> expert,
                  ScriptedPlannerConfig cfg);

  PlannerResponse propose(const PlannerQuery& q) override;
  void notify_step(const JointAction& executed) override;

  const StateKey& believed_state() const { return believed_; }

 private:
  const GameSpec* spec_;
  std::shared_ptr<const ExpertPolicy> expert_;
  ScriptedPlannerConfig cfg_;
  StateKey believed_;
  Rng rng_;
  int hallucination_count_ = 0;
};

// Replays a fixed response list (repeating the final entry when exhausted);
// used to pin down query accounting in tests.
class StubPlanner : public Planner {
 public:
  explicit StubPlanner(std::vector<PlannerResponse> script) : script_(std::move(script)) {}

  PlannerResponse propose(const PlannerQuery& q) override;

  int calls = 0;

 private:
  std::vector<PlannerResponse> script_;
};

struct PlannerProtocolError : GameError {
  using GameError::GameError;
};

struct RemotePlannerConfig {
  std::string url;  // e.g. http://127.0.0.1:8080
  int timeout_ms = 5000;
  int retries = 1;
};

// HTTP adapter: POST /plan with a JSON query, expects {"action": ..., "rationale": ...}.
// Transport and malformed-reply failures raise PlannerProtocolError; an
// out-of-menu action is returned as-is (that is a hallucination, not a
// protocol error).
class RemotePlanner : public Planner {
 public:
  explicit RemotePlanner(RemotePlannerConfig cfg) : cfg_(std::move(cfg)) {}

  PlannerResponse propose(const PlannerQuery& q) override;

 private:
  RemotePlannerConfig cfg_;
};

}  // namespace readkit
