#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "read/game.hpp"

namespace readkit {

// ---- Exact oracles over an enumerated game and a base policy mu ----

// Q^{1:u}_mu(s, a^{1:u}) = E over the remaining agents' actions, drawn from
// mu conditioned on the prefix, of the joint Q. u = 0 gives V_mu(s).
double oracle_local_q(const EnumeratedGame& g, const ExactValues& vals, const PolicyTable& mu,
                      const StateKey& s, const std::vector<std::string>& prefix_actions);

// A^i_mu(s, a^{1:i-1}, a^i) = Q^{1:i} - Q^{1:i-1}.
double oracle_local_advantage(const EnumeratedGame& g, const ExactValues& vals,
                              const PolicyTable& mu, const StateKey& s,
                              const std::vector<std::string>& prior, const std::string& a_i);

// A_mu(s, a) = Q_mu(s, a) - V_mu(s).
double oracle_joint_advantage(const ExactValues& vals, const StateKey& s, const JointAction& a);

// ---- Improved policies ----

// pi*(a|s) proportional to mu(a|s) exp(A_mu(s,a)/beta), with the sequential
// per-agent factorization. The per-agent conditionals are the exact
// conditionals of the joint pi*: the naive per-agent normalizer is not
// prefix-independent, so each agent's weight carries a correction term
// (the partition function of the remaining agents). Partition values are
// kept in log space; at small beta they overflow a double otherwise.
struct ExpWeightPolicy {
  PolicyTable joint;
  std::unordered_map<StateKey, double> log_z;  // log of the joint partition Z(s)
  // Keyed by state \x1f prefix-key \x1f action.
  std::unordered_map<std::string, double> conditional;          // pi^i(a^i | s, a^{1:i-1})
  std::unordered_map<std::string, double> log_partition_factor; // sums along a chain to log Z(s)

  double conditional_prob(const StateKey& s, const std::vector<std::string>& prefix,
                          const std::string& action) const;
  double log_partition(const StateKey& s, const std::vector<std::string>& prefix,
                       const std::string& action) const;
};

ExpWeightPolicy exp_weight_policy(const EnumeratedGame& g, const PolicyTable& mu, double beta);

// Per-agent binary filter: keep actions with local advantage > eps,
// renormalized within mu's conditional; where the filter empties the support
// (e.g. at optimum, all advantages 0), the conditional falls back to mu.
PolicyTable binary_filter_policy(const EnumeratedGame& g, const PolicyTable& mu, double eps);

// Surrogate objective: sum_s rho_mu(s) sum_a pi(a|s) A_mu(s, a).
double surrogate_improvement(const EnumeratedGame& g, const PolicyTable& mu,
                             const PolicyTable& pi);

// max over states of the total-variation distance between the two policies.
double max_tv_distance(const EnumeratedGame& g, const PolicyTable& a, const PolicyTable& b);

// (1 - lambda) a + lambda b, state-wise.
PolicyTable mix_policy(const PolicyTable& a, const PolicyTable& b, double lambda);

}  // namespace readkit
