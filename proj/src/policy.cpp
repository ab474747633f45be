#include "read/policy.hpp"

#include <algorithm>
#include <cmath>

namespace readkit {

namespace {
constexpr char kSep = '\x1f';

std::string fact_key(const StateKey& s, const std::vector<std::string>& prefix,
                     const std::string& action) {
  std::string k = s;
  k += kSep;
  for (const auto& a : prefix) {
    k += a;
    k += kSep;
  }
  k += kSep;  // separates prefix from action even when both are empty
  k += action;
  return k;
}

double log_sum_exp(const std::vector<double>& xs) {
  double m = xs.front();
  for (double x : xs) m = std::max(m, x);
  double s = 0.0;
  for (double x : xs) s += std::exp(x - m);
  return m + std::log(s);
}
}  // namespace

double oracle_local_q(const EnumeratedGame& g, const ExactValues& vals, const PolicyTable& mu,
                      const StateKey& s, const std::vector<std::string>& prefix_actions) {
  double total = 0.0, value = 0.0;
  for (const auto& [a, p] : mu.at(s)) {
    if (p == 0.0) continue;
    bool match = true;
    for (std::size_t i = 0; i < prefix_actions.size(); ++i)
      if (a[i] != prefix_actions[i]) {
        match = false;
        break;
      }
    if (!match) continue;
    total += p;
    value += p * vals.q_value(s, a);
  }
  if (total <= 0.0)
    throw GameError("local Q conditioned on a zero-probability prefix at state " + s);
  return value / total;
}

double oracle_local_advantage(const EnumeratedGame& g, const ExactValues& vals,
                              const PolicyTable& mu, const StateKey& s,
                              const std::vector<std::string>& prior, const std::string& a_i) {
  auto with = prior;
  with.push_back(a_i);
  return oracle_local_q(g, vals, mu, s, with) - oracle_local_q(g, vals, mu, s, prior);
}

double oracle_joint_advantage(const ExactValues& vals, const StateKey& s, const JointAction& a) {
  return vals.q_value(s, a) - vals.value(s);
}

double ExpWeightPolicy::conditional_prob(const StateKey& s,
                                         const std::vector<std::string>& prefix,
                                         const std::string& action) const {
  auto it = conditional.find(fact_key(s, prefix, action));
  return it == conditional.end() ? 0.0 : it->second;
}

double ExpWeightPolicy::log_partition(const StateKey& s, const std::vector<std::string>& prefix,
                                      const std::string& action) const {
  auto it = log_partition_factor.find(fact_key(s, prefix, action));
  if (it == log_partition_factor.end())
    throw GameError("no partition factor for this prefix at state " + s);
  return it->second;
}

ExpWeightPolicy exp_weight_policy(const EnumeratedGame& g, const PolicyTable& mu, double beta) {
  if (!(beta > 0.0)) throw GameError("beta must be positive");
  auto vals = exact_values(g, mu);
  ExpWeightPolicy out;

  for (std::size_t i = 0; i < g.states.size(); ++i) {
    if (g.terminal[i]) continue;
    const StateKey& s = g.states[i];
    const auto& row = mu.at(s);

    // Joint form via a shifted softmax.
    std::vector<double> logw;
    std::vector<const JointAction*> acts;
    for (const auto& [a, p] : row) {
      if (p == 0.0) continue;
      acts.push_back(&a);
      logw.push_back(std::log(p) + oracle_joint_advantage(vals, s, a) / beta);
    }
    double lz = log_sum_exp(logw);
    out.log_z[s] = lz;
    auto& dist = out.joint.dist[s];
    for (std::size_t k = 0; k < acts.size(); ++k)
      dist.emplace_back(*acts[k], std::exp(logw[k] - lz));

    // Sequential factorization. W(prefix) is the log partition of the
    // remaining agents; the conditional for agent u carries W as the
    // correction that makes the product equal the joint policy exactly.
    const int n = g.spec->num_agents();
    std::function<double(std::vector<std::string>&)> logW =
        [&](std::vector<std::string>& prefix) -> double {
      const int u = static_cast<int>(prefix.size());
      if (u == n) return 0.0;
      auto cond = mu.conditional(s, prefix);
      std::vector<double> terms, nexts;
      std::vector<std::string> names;
      for (const auto& [a_i, p] : cond) {
        if (p == 0.0) continue;
        double ai = oracle_local_advantage(g, vals, mu, s, prefix, a_i);
        prefix.push_back(a_i);
        double lw_next = logW(prefix);
        prefix.pop_back();
        names.push_back(a_i);
        nexts.push_back(lw_next);
        terms.push_back(std::log(p) + ai / beta + lw_next);
      }
      double lw = log_sum_exp(terms);
      for (std::size_t k = 0; k < names.size(); ++k) {
        out.conditional[fact_key(s, prefix, names[k])] = std::exp(terms[k] - lw);
        out.log_partition_factor[fact_key(s, prefix, names[k])] = lw - nexts[k];
      }
      return lw;
    };
    std::vector<std::string> empty;
    logW(empty);
  }
  out.joint.check_normalized(1e-9);
  return out;
}

PolicyTable binary_filter_policy(const EnumeratedGame& g, const PolicyTable& mu, double eps) {
  if (eps < 0.0) throw GameError("eps must be non-negative");
  auto vals = exact_values(g, mu);
  PolicyTable pi;

  for (std::size_t i = 0; i < g.states.size(); ++i) {
    if (g.terminal[i]) continue;
    const StateKey& s = g.states[i];
    const int n = g.spec->num_agents();

    // Depth-first over the support tree: at each context keep the actions
    // with positive local advantage, or fall back to mu's conditional when
    // the filter empties the support.
    std::vector<std::pair<JointAction, double>> dist;
    std::function<void(std::vector<std::string>&, double)> rec =
        [&](std::vector<std::string>& prefix, double prob) {
          if (static_cast<int>(prefix.size()) == n) {
            dist.emplace_back(prefix, prob);
            return;
          }
          auto cond = mu.conditional(s, prefix);
          std::vector<std::pair<std::string, double>> kept;
          double total = 0.0;
          for (const auto& [a_i, p] : cond) {
            if (p == 0.0) continue;
            if (oracle_local_advantage(g, vals, mu, s, prefix, a_i) > eps) {
              kept.emplace_back(a_i, p);
              total += p;
            }
          }
          if (kept.empty()) {
            for (const auto& [a_i, p] : cond)
              if (p > 0.0) {
                kept.emplace_back(a_i, p);
                total += p;
              }
          }
          for (const auto& [a_i, p] : kept) {
            prefix.push_back(a_i);
            rec(prefix, prob * p / total);
            prefix.pop_back();
          }
        };
    std::vector<std::string> empty;
    rec(empty, 1.0);
    pi.dist[s] = std::move(dist);
  }
  pi.check_normalized(1e-9);
  return pi;
}

double surrogate_improvement(const EnumeratedGame& g, const PolicyTable& mu,
                             const PolicyTable& pi) {
  auto vals = exact_values(g, mu);
  auto rho = discounted_visitation(g, mu);
  double eta = 0.0;
  for (std::size_t i = 0; i < g.states.size(); ++i) {
    if (g.terminal[i]) continue;
    const StateKey& s = g.states[i];
    double inner = 0.0;
    for (const auto& [a, p] : pi.at(s)) {
      if (p == 0.0) continue;
      inner += p * oracle_joint_advantage(vals, s, a);
    }
    eta += rho.at(s) * inner;
  }
  return eta;
}

double max_tv_distance(const EnumeratedGame& g, const PolicyTable& a, const PolicyTable& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < g.states.size(); ++i) {
    if (g.terminal[i]) continue;
    const StateKey& s = g.states[i];
    std::unordered_map<std::string, double> diff;
    for (const auto& [act, p] : a.at(s)) diff[action_key(act)] += p;
    for (const auto& [act, p] : b.at(s)) diff[action_key(act)] -= p;
    double tv = 0.0;
    for (const auto& [k, d] : diff) tv += std::abs(d);
    worst = std::max(worst, tv / 2.0);
  }
  return worst;
}

PolicyTable mix_policy(const PolicyTable& a, const PolicyTable& b, double lambda) {
  PolicyTable out;
  for (const auto& [s, da] : a.dist) {
    std::unordered_map<std::string, double> m;
    std::vector<std::pair<JointAction, double>> dist;
    for (const auto& [act, p] : da) {
      dist.emplace_back(act, (1.0 - lambda) * p);
      m[action_key(act)] = dist.size() - 1;
    }
    for (const auto& [act, p] : b.at(s)) {
      auto it = m.find(action_key(act));
      if (it == m.end()) {
        dist.emplace_back(act, lambda * p);
      } else {
        dist[static_cast<std::size_t>(it->second)].second += lambda * p;
      }
    }
    out.dist[s] = std::move(dist);
  }
  return out;
}

}  // namespace readkit
