#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "read/game.hpp"

namespace readkit {

struct Transition {
  StateKey state;
  JointAction action;
  double reward = 0.0;
  StateKey next;
};

struct Episode {
  std::vector<Transition> steps;
  std::string provenance = "expert";  // expert | llm_policy | augmented
};

struct Dataset {
  std::vector<Episode> episodes;
  JointAction wait_action;     // the all-WAIT joint action of the source game
  bool wait_augmented = false; // collection injected explicit WAIT probes
};

// Key for Q^{1:u}(s, a^{1:u}): state plus the actions of the first u agents.
// u = 0 is the state-value estimate, u = n the full joint action.
std::string critic_key(const StateKey& s, const std::vector<std::string>& prefix_actions);

struct CriticEntry {
  double mean = 0.0;
  long count = 0;
};

// Tabular Monte-Carlo critic. Immutable after mc_fit; safe for concurrent
// reads. The table is the seam where a function approximator could be
// substituted.
struct CriticStore {
  double gamma = 0.95;
  JointAction wait_action;
  // When true, an uncovered Q(s, w) is treated as 0 rather than missing
  // (the WAIT-probe collection guarantees coverage where it matters).
  bool wait_zero_default = false;
  long episodes_fitted = 0;
  std::unordered_map<std::string, CriticEntry> table;

  // Stored estimate for the prefix key, or nullopt when out of distribution.
  std::optional<double> local_q(const StateKey& s,
                                const std::vector<std::string>& prefix_actions) const;

  // S(a_i) = Q^{1:i}(s, prior + a_i) - Q^{1:i-1}(s, prior).
  std::optional<double> score_read_s(const StateKey& s, const std::vector<std::string>& prior,
                                     const std::string& a_i) const;

  // S(a) = Q(s, a) - (1/gamma) Q(s, w).
  std::optional<double> score_read_j(const StateKey& s, const JointAction& a) const;

  long distinct_states() const;
};

// First-visit Monte-Carlo means of discounted returns-to-go for every
// canonical prefix length. All-WAIT steps contribute only their own full
// joint key: they are off-policy probes for Q(s, w), and folding them into
// the other keys would bias those estimates.
CriticStore mc_fit(const Dataset& data, double gamma);

// Versioned JSON persistence; round-trips are lossless.
void save_critic(const CriticStore& c, const std::string& path);
CriticStore load_critic(const std::string& path);

// JSON Lines persistence for datasets (header line + one line per episode).
void save_dataset(const Dataset& d, const std::string& path);
Dataset load_dataset(const std::string& path);

}  // namespace readkit
