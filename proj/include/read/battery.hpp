#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "read/critic.hpp"
#include "read/game.hpp"

namespace readkit {

struct RandomGameOptions {
  int min_agents = 2, max_agents = 3;
  int min_states = 3, max_states = 6;
  int min_actions = 2, max_actions = 3;  // per agent, including WAIT
  double gamma_lo = 0.6, gamma_hi = 0.9;
  double reward_scale = 1.0;
  // Dense transitions: every non-WAIT joint action reaches every state with
  // positive probability, so every state stays reachable under any policy
  // (strict-improvement checks rely on that).
  bool dense = true;
};

// Seeded random cooperative Markov game. All states non-terminal; the
// all-WAIT action self-loops with reward 0.
GameSpec make_random_game(Rng& rng, const RandomGameOptions& opt = {});

// Random full-support joint policy over the legal actions of each state.
PolicyTable random_policy(const EnumeratedGame& g, Rng& rng);

// Deterministic two-layer game: initial state -> middle layer -> terminal.
// Every trajectory under a policy that avoids the all-WAIT action has length
// exactly 2, which makes exhaustive enumeration of trajectories possible.
GameSpec make_layered_game(Rng& rng);

// Uniform policy over exactly k non-all-WAIT joint actions per non-terminal
// state. Equal support sizes everywhere make the exhaustive dataset's
// uniform enumeration coincide with the policy expectation.
PolicyTable layered_support_policy(const EnumeratedGame& g, Rng& rng, int k);

// One episode per support trajectory from every non-terminal start state,
// plus WAIT-probe episodes (s, w, 0, s) + a full continuation so Q(s, w)
// is covered with value gamma * V(s).
Dataset exhaustive_dataset(const EnumeratedGame& g, const PolicyTable& mu);

// Seeded sampled episodes with uniformly-exploring start states.
Dataset sampled_dataset(const EnumeratedGame& g, const PolicyTable& mu, int episodes, Rng& rng);

struct CheckResult {
  std::string name;
  bool ok = false;
  int games = 0;       // games (or cases) examined
  double worst = 0.0;  // worst observed error / margin
  std::string detail;
};

// Theory property suites over seeded game batteries. Each returns one result
// with the worst error observed across the battery.
CheckResult check_decomposition_oracle(std::uint64_t seed, int n_games);
CheckResult check_decomposition_mc(std::uint64_t seed, int n_games);
CheckResult check_wait_identity(std::uint64_t seed, int n_games);
CheckResult check_surrogate_identities(std::uint64_t seed, int n_games);
CheckResult check_exp_weight_improvement(std::uint64_t seed, int n_games);
CheckResult check_binary_filter_improvement(std::uint64_t seed, int n_games);
CheckResult check_tv_convergence(std::uint64_t seed, int n_games);
CheckResult check_critic_fidelity_exhaustive(std::uint64_t seed, int n_games);
CheckResult check_critic_fidelity_sampled(std::uint64_t seed, int n_games, int episodes);

std::vector<CheckResult> run_theory_checks(std::uint64_t seed, int n_games);

}  // namespace readkit
