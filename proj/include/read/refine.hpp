#pragma once

#include <optional>
#include <string>
#include <vector>

#include "read/critic.hpp"
#include "read/game.hpp"
#include "read/planner.hpp"

namespace readkit {

enum class Method {
  read_s,
  read_j,
  single_step_s,
  single_step_j,
  physical_verification,
};

Method parse_method(const std::string& name);
std::string method_name(Method m);

struct RefineConfig {
  Method method = Method::read_j;
  double alpha0 = 0.05;     // threshold value at step entry, before doubling
  int max_replans = 15;     // proposals per step (per agent for read_s)
  bool reset_alpha_per_agent = false;  // see the threshold schedule note below
  double alpha_min = 1e-6, alpha_max = 1e3;
  bool keep_history = true;
  std::string task;
};

struct ProposalRecord {
  JointAction proposal;
  int agent = -1;        // -1 for joint proposals
  bool scored = false;   // a numeric score existed (false: out of distribution)
  double score = 0.0;
  double threshold = 0.0;  // alpha value the score was checked against
  bool accepted = false;
  std::string note;
};

struct StepTrace {
  StateKey state;
  std::vector<ProposalRecord> proposals;
  JointAction chosen;
  bool exhausted = false;  // replan budget ran out; fallback committed
  double alpha_after = 0.0;
};

struct EpisodeResult {
  bool success = false;
  int env_steps = 0;
  int queries = 0;
  double total_reward = 0.0;
  std::vector<StepTrace> traces;
};

// One environment step of sequential refinement. Threshold schedule: alpha
// doubles at step entry and halves after every proposal, before the
// acceptance check, so the first proposal is checked against the entry
// value. Alpha is shared across agents within the step unless
// reset_alpha_per_agent is set. On budget exhaustion the best-scoring
// evaluated proposal is committed (WAIT when none was scorable).
JointAction read_s_step(const GameSpec& spec, const StateKey& s, Planner& planner,
                        const CriticStore& critic, const RefineConfig& cfg, double& alpha,
                        const std::optional<PlannerQuery::Round>& history, StepTrace& trace,
                        int& queries);

// Joint variant: one proposal per query, scored against the WAIT baseline.
JointAction read_j_step(const GameSpec& spec, const StateKey& s, Planner& planner,
                        const CriticStore& critic, const RefineConfig& cfg, double& alpha,
                        const std::optional<PlannerQuery::Round>& history, StepTrace& trace,
                        int& queries);

// Runs a full episode with the configured method. critic may be null for
// methods that do not score (single-step, physical verification). When
// disturb_n >= 1, the environment is silently reset to the initial state
// once env_steps reaches disturb_n; the planner is not told.
EpisodeResult run_episode(const GameSpec& spec, Planner& planner, const CriticStore* critic,
                          const RefineConfig& cfg, int disturb_n = 0);

// One JSON line per episode (schema_version 1).
std::string episode_jsonl(const EpisodeResult& r, std::uint64_t seed);

}  // namespace readkit
