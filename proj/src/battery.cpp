#include "read/battery.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <unordered_map>

#include "read/policy.hpp"

namespace readkit {

namespace {
constexpr char kSep = '\x1f';

struct TableModel {
  std::unordered_map<std::string, std::vector<Outcome>> next;
  std::unordered_map<std::string, double> reward;
  std::unordered_map<StateKey, bool> terminal;
};

std::string tkey(const StateKey& s, const JointAction& a) { return s + kSep + action_key(a); }

GameSpec spec_from_model(std::string name, std::vector<std::string> agents,
                         std::vector<std::vector<std::string>> action_sets, StateKey initial,
                         double gamma, std::shared_ptr<TableModel> m) {
  GameSpec spec;
  spec.name = std::move(name);
  spec.agents = std::move(agents);
  spec.action_sets = std::move(action_sets);
  spec.initial_state = std::move(initial);
  spec.gamma = gamma;
  spec.terminal = [m](const StateKey& s) {
    auto it = m->terminal.find(s);
    return it != m->terminal.end() && it->second;
  };
  spec.transition = [m](const StateKey& s, const JointAction& a) {
    return m->next.at(tkey(s, a));
  };
  spec.reward = [m](const StateKey& s, const JointAction& a) {
    return m->reward.at(tkey(s, a));
  };
  return spec;
}

std::vector<JointAction> cartesian(const std::vector<std::vector<std::string>>& sets) {
  std::vector<JointAction> out{{}};
  for (const auto& set : sets) {
    std::vector<JointAction> next;
    for (const auto& partial : out)
      for (const auto& a : set) {
        auto x = partial;
        x.push_back(a);
        next.push_back(std::move(x));
      }
    out = std::move(next);
  }
  return out;
}
}  // namespace

GameSpec make_random_game(Rng& rng, const RandomGameOptions& opt) {
  const int n = rng.uniform_int(opt.min_agents, opt.max_agents);
  const int m = rng.uniform_int(opt.min_states, opt.max_states);
  std::vector<std::string> agents;
  std::vector<std::vector<std::string>> action_sets;
  for (int i = 0; i < n; ++i) {
    agents.push_back("agent" + std::to_string(i + 1));
    std::vector<std::string> acts{"WAIT"};
    const int extra = rng.uniform_int(opt.min_actions - 1, opt.max_actions - 1);
    for (int k = 0; k < extra; ++k) acts.push_back("act" + std::to_string(k + 1));
    action_sets.push_back(std::move(acts));
  }
  std::vector<StateKey> states;
  for (int i = 0; i < m; ++i) states.push_back("s" + std::to_string(i));

  auto model = std::make_shared<TableModel>();
  const auto joints = cartesian(action_sets);
  const JointAction wait(static_cast<std::size_t>(n), "WAIT");
  for (const auto& s : states) {
    model->terminal[s] = false;
    for (const auto& a : joints) {
      auto key = tkey(s, a);
      if (a == wait) {
        model->next[key] = {{s, 1.0}};
        model->reward[key] = 0.0;
        continue;
      }
      model->reward[key] = (2.0 * rng.uniform() - 1.0) * opt.reward_scale;
      if (opt.dense) {
        std::vector<Outcome> dist;
        double total = 0.0;
        for (const auto& s2 : states) {
          double w = 0.1 + rng.uniform();
          dist.push_back({s2, w});
          total += w;
        }
        for (auto& o : dist) o.prob /= total;
        model->next[key] = std::move(dist);
      } else {
        model->next[key] = {{rng.pick(states), 1.0}};
      }
    }
  }
  double gamma = opt.gamma_lo + (opt.gamma_hi - opt.gamma_lo) * rng.uniform();
  return spec_from_model("random", std::move(agents), std::move(action_sets), states[0], gamma,
                         std::move(model));
}

PolicyTable random_policy(const EnumeratedGame& g, Rng& rng) {
  PolicyTable pi;
  for (std::size_t i = 0; i < g.states.size(); ++i) {
    if (g.terminal[i]) continue;
    std::vector<std::pair<JointAction, double>> dist;
    double total = 0.0;
    for (const auto& info : g.actions[i]) {
      double w = 0.05 + rng.uniform();
      dist.emplace_back(info.action, w);
      total += w;
    }
    for (auto& [a, p] : dist) p /= total;
    pi.dist[g.states[i]] = std::move(dist);
  }
  return pi;
}

GameSpec make_layered_game(Rng& rng) {
  const int n = rng.uniform_int(2, 3);
  std::vector<std::string> agents;
  std::vector<std::vector<std::string>> action_sets;
  for (int i = 0; i < n; ++i) {
    agents.push_back("agent" + std::to_string(i + 1));
    std::vector<std::string> acts{"WAIT", "act1"};
    if (rng.uniform() < 0.5) acts.push_back("act2");
    action_sets.push_back(std::move(acts));
  }
  const int mids = rng.uniform_int(2, 3);
  std::vector<StateKey> mid;
  for (int i = 0; i < mids; ++i) mid.push_back("m" + std::to_string(i));

  auto model = std::make_shared<TableModel>();
  model->terminal["s0"] = false;
  model->terminal["T"] = true;
  for (const auto& s : mid) model->terminal[s] = false;

  const auto joints = cartesian(action_sets);
  const JointAction wait(static_cast<std::size_t>(n), "WAIT");
  int assign = 0;
  for (const auto& a : joints) {
    auto key = tkey("s0", a);
    if (a == wait) {
      model->next[key] = {{"s0", 1.0}};
      model->reward[key] = 0.0;
    } else {
      // Cycle through middle states so all of them are reachable.
      model->next[key] = {{mid[static_cast<std::size_t>(assign++ % mids)], 1.0}};
      model->reward[key] = rng.uniform();
    }
  }
  for (const auto& s : mid)
    for (const auto& a : joints) {
      auto key = tkey(s, a);
      if (a == wait) {
        model->next[key] = {{s, 1.0}};
        model->reward[key] = 0.0;
      } else {
        model->next[key] = {{"T", 1.0}};
        model->reward[key] = rng.uniform();
      }
    }
  for (const auto& a : joints) {
    model->next[tkey("T", a)] = {{"T", 1.0}};
    model->reward[tkey("T", a)] = 0.0;
  }
  double gamma = 0.6 + 0.3 * rng.uniform();
  return spec_from_model("layered", std::move(agents), std::move(action_sets), "s0", gamma,
                         std::move(model));
}

PolicyTable layered_support_policy(const EnumeratedGame& g, Rng& rng, int k) {
  const auto wait = g.spec->all_wait();
  // Equal support sizes at every state keep the exhaustive enumeration
  // uniform, so clamp k to the smallest available non-WAIT menu.
  int kk = k;
  for (std::size_t i = 0; i < g.states.size(); ++i) {
    if (g.terminal[i]) continue;
    int avail = 0;
    for (const auto& info : g.actions[i])
      if (info.action != wait) ++avail;
    kk = std::min(kk, avail);
  }
  if (kk < 1) throw GameError("no non-WAIT actions available");

  PolicyTable pi;
  for (std::size_t i = 0; i < g.states.size(); ++i) {
    if (g.terminal[i]) continue;
    std::vector<JointAction> pool;
    for (const auto& info : g.actions[i])
      if (info.action != wait) pool.push_back(info.action);
    // Seeded partial shuffle.
    for (std::size_t j = 0; j < pool.size(); ++j) {
      auto swap_with = static_cast<std::size_t>(rng.uniform_int(static_cast<int>(j),
                                                                static_cast<int>(pool.size()) - 1));
      std::swap(pool[j], pool[swap_with]);
    }
    std::vector<std::pair<JointAction, double>> dist;
    for (int j = 0; j < kk; ++j) dist.emplace_back(pool[static_cast<std::size_t>(j)], 1.0 / kk);
    pi.dist[g.states[i]] = std::move(dist);
  }
  return pi;
}

namespace {
// All trajectories from `start` under the support of mu (deterministic game).
void enumerate_trajectories(const EnumeratedGame& g, const PolicyTable& mu, int start,
                            std::vector<Transition>& cur, std::vector<Episode>& out,
                            const std::string& provenance) {
  if (g.terminal[static_cast<std::size_t>(start)]) {
    out.push_back({cur, provenance});
    return;
  }
  const StateKey& s = g.states[static_cast<std::size_t>(start)];
  for (const auto& [a, p] : mu.at(s)) {
    if (p == 0.0) continue;
    const auto key = action_key(a);
    for (const auto& info : g.actions[static_cast<std::size_t>(start)]) {
      if (action_key(info.action) != key) continue;
      if (info.next.size() != 1) throw GameError("exhaustive enumeration needs determinism");
      cur.push_back({s, a, info.reward, g.states[static_cast<std::size_t>(info.next[0].first)]});
      enumerate_trajectories(g, mu, info.next[0].first, cur, out, provenance);
      cur.pop_back();
      break;
    }
  }
}
}  // namespace

Dataset exhaustive_dataset(const EnumeratedGame& g, const PolicyTable& mu) {
  Dataset d;
  d.wait_action = g.spec->all_wait();
  d.wait_augmented = true;
  for (std::size_t i = 0; i < g.states.size(); ++i) {
    if (g.terminal[i]) continue;
    std::vector<Transition> cur;
    enumerate_trajectories(g, mu, static_cast<int>(i), cur, d.episodes, "expert");
    // WAIT probes: the self-loop step followed by every continuation, so the
    // probe's first-visit return averages to gamma * V(s).
    std::vector<Episode> conts;
    enumerate_trajectories(g, mu, static_cast<int>(i), cur, conts, "augmented");
    for (auto& ep : conts) {
      Episode probe;
      probe.provenance = "augmented";
      probe.steps.push_back({g.states[i], d.wait_action, 0.0, g.states[i]});
      for (auto& t : ep.steps) probe.steps.push_back(std::move(t));
      d.episodes.push_back(std::move(probe));
    }
  }
  return d;
}

Dataset sampled_dataset(const EnumeratedGame& g, const PolicyTable& mu, int episodes, Rng& rng) {
  Dataset d;
  d.wait_action = g.spec->all_wait();
  d.wait_augmented = true;
  std::vector<int> starts;
  for (std::size_t i = 0; i < g.states.size(); ++i)
    if (!g.terminal[i]) starts.push_back(static_cast<int>(i));
  for (int e = 0; e < episodes; ++e) {
    int cur = starts[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(starts.size()) - 1))];
    Episode ep;
    ep.provenance = "llm_policy";
    for (int t = 0; t < 50 && !g.terminal[static_cast<std::size_t>(cur)]; ++t) {
      const StateKey& s = g.states[static_cast<std::size_t>(cur)];
      double u = rng.uniform(), acc = 0.0;
      const auto& row = mu.at(s);
      const auto* chosen = &row.back().first;
      for (const auto& [a, p] : row) {
        acc += p;
        if (u < acc) {
          chosen = &a;
          break;
        }
      }
      const auto key = action_key(*chosen);
      for (const auto& info : g.actions[static_cast<std::size_t>(cur)]) {
        if (action_key(info.action) != key) continue;
        int next = info.next[0].first;
        ep.steps.push_back({s, *chosen, info.reward, g.states[static_cast<std::size_t>(next)]});
        cur = next;
        break;
      }
    }
    if (!ep.steps.empty()) d.episodes.push_back(std::move(ep));
  }
  return d;
}

// ---- Theory check suites ----

namespace {
std::vector<std::string> prefix_of(const JointAction& a, std::size_t u) {
  return {a.begin(), a.begin() + static_cast<long>(u)};
}
}  // namespace

CheckResult check_decomposition_oracle(std::uint64_t seed, int n_games) {
  Rng rng(seed);
  double worst = 0.0;
  for (int gi = 0; gi < n_games; ++gi) {
    auto spec = make_random_game(rng);
    auto g = enumerate_game(spec);
    auto mu = random_policy(g, rng);
    auto vals = exact_values(g, mu);
    for (std::size_t i = 0; i < g.states.size(); ++i) {
      const StateKey& s = g.states[i];
      for (const auto& info : g.actions[i]) {
        double joint = oracle_joint_advantage(vals, s, info.action);
        double sum = 0.0;
        for (std::size_t u = 0; u < info.action.size(); ++u)
          sum += oracle_local_advantage(g, vals, mu, s, prefix_of(info.action, u),
                                        info.action[u]);
        worst = std::max(worst, std::abs(joint - sum));
      }
    }
  }
  return {"advantage decomposition (exact oracle)", worst <= 1e-9, n_games, worst, ""};
}

CheckResult check_decomposition_mc(std::uint64_t seed, int n_games) {
  Rng rng(seed);
  double worst = 0.0;
  for (int gi = 0; gi < n_games; ++gi) {
    auto spec = make_layered_game(rng);
    auto g = enumerate_game(spec);
    auto mu = layered_support_policy(g, rng, 3);
    auto critic = mc_fit(exhaustive_dataset(g, mu), spec.gamma);
    for (std::size_t i = 0; i < g.states.size(); ++i) {
      if (g.terminal[i]) continue;
      const StateKey& s = g.states[i];
      for (const auto& [a, p] : mu.at(s)) {
        auto joint = critic.score_read_j(s, a);
        double sum = 0.0;
        for (std::size_t u = 0; u < a.size(); ++u)
          sum += *critic.score_read_s(s, prefix_of(a, u), a[u]);
        // Q(s,a) - (1/gamma) Q(s,w) estimates the same advantage the local
        // scores telescope to.
        worst = std::max(worst, std::abs(*joint - sum));
      }
    }
  }
  return {"advantage decomposition (exhaustive MC critic)", worst <= 1e-6, n_games, worst, ""};
}

CheckResult check_wait_identity(std::uint64_t seed, int n_games) {
  Rng rng(seed);
  double worst = 0.0;
  for (int gi = 0; gi < n_games; ++gi) {
    auto spec = make_random_game(rng);
    auto g = enumerate_game(spec);
    const auto wait = spec.all_wait();
    auto mu = random_policy(g, rng);
    auto pi = random_policy(g, rng);
    for (const auto* pol : {&mu, &pi}) {
      auto vals = exact_values(g, *pol);
      for (const auto& s : g.states)
        worst = std::max(worst,
                         std::abs(vals.q_value(s, wait) - spec.gamma * vals.value(s)));
    }
  }
  return {"WAIT identity Q(s,w) = gamma V(s)", worst <= 1e-9, n_games, worst, ""};
}

CheckResult check_surrogate_identities(std::uint64_t seed, int n_games) {
  Rng rng(seed);
  double worst = 0.0;
  for (int gi = 0; gi < n_games; ++gi) {
    auto spec = make_random_game(rng);
    auto g = enumerate_game(spec);
    auto mu = random_policy(g, rng);
    auto pi = random_policy(g, rng);
    worst = std::max(worst, std::abs(surrogate_improvement(g, mu, mu)));

    auto vals = exact_values(g, mu);
    auto rho = discounted_visitation(g, pi);
    double lhs = 0.0;
    for (std::size_t i = 0; i < g.states.size(); ++i) {
      const StateKey& s = g.states[i];
      double inner = 0.0;
      for (const auto& [a, p] : pi.at(s)) inner += p * oracle_joint_advantage(vals, s, a);
      lhs += rho.at(s) * inner;
    }
    double rhs = expected_return(g, pi) - expected_return(g, mu);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return {"surrogate identities (eta-hat(mu)=0, performance difference)", worst <= 1e-9, n_games,
          worst, ""};
}

CheckResult check_exp_weight_improvement(std::uint64_t seed, int n_games) {
  Rng rng(seed);
  double worst_drop = 0.0, worst_factor = 0.0;
  for (int gi = 0; gi < n_games; ++gi) {
    auto spec = make_random_game(rng);
    auto g = enumerate_game(spec);
    auto mu = random_policy(g, rng);
    double j_mu = expected_return(g, mu);
    for (double beta : {0.1, 1.0, 10.0}) {
      auto ew = exp_weight_policy(g, mu, beta);
      worst_drop = std::max(worst_drop, j_mu - expected_return(g, ew.joint));
      for (std::size_t i = 0; i < g.states.size(); ++i) {
        const StateKey& s = g.states[i];
        for (const auto& [a, p] : ew.joint.at(s)) {
          double prod = 1.0, logz_sum = 0.0;
          for (std::size_t u = 0; u < a.size(); ++u) {
            prod *= ew.conditional_prob(s, prefix_of(a, u), a[u]);
            logz_sum += ew.log_partition(s, prefix_of(a, u), a[u]);
          }
          worst_factor = std::max(worst_factor, std::abs(prod - p));
          worst_factor = std::max(worst_factor, std::abs(std::exp(logz_sum - ew.log_z.at(s)) - 1.0));
        }
      }
    }
  }
  double worst = std::max(worst_drop, worst_factor);
  return {"exp-weight improvement and factorization", worst <= 1e-9, n_games, worst, ""};
}

CheckResult check_binary_filter_improvement(std::uint64_t seed, int n_games) {
  Rng rng(seed);
  int qualified = 0;
  double worst_margin = 1e18;
  bool ok = true;
  for (int gi = 0; gi < n_games; ++gi) {
    auto spec = make_random_game(rng);
    auto g = enumerate_game(spec);
    auto mu = random_policy(g, rng);
    auto vals = exact_values(g, mu);

    // Does the filter actually remove a positively-weighted action somewhere?
    bool removes = false;
    for (std::size_t i = 0; i < g.states.size() && !removes; ++i) {
      const StateKey& s = g.states[i];
      std::function<bool(std::vector<std::string>&)> scan =
          [&](std::vector<std::string>& prefix) -> bool {
        if (static_cast<int>(prefix.size()) == g.spec->num_agents()) return false;
        auto cond = mu.conditional(s, prefix);
        bool pos = false, neg = false;
        for (const auto& [a_i, p] : cond) {
          if (p == 0.0) continue;
          double adv = oracle_local_advantage(g, vals, mu, s, prefix, a_i);
          (adv > 0 ? pos : neg) = true;
        }
        if (pos && neg) return true;
        for (const auto& [a_i, p] : cond) {
          if (p == 0.0) continue;
          prefix.push_back(a_i);
          bool found = scan(prefix);
          prefix.pop_back();
          if (found) return true;
        }
        return false;
      };
      std::vector<std::string> empty;
      removes = scan(empty);
    }
    if (!removes) continue;
    ++qualified;
    auto pi = binary_filter_policy(g, mu, 0.0);
    double eta = surrogate_improvement(g, mu, pi);
    double gain = expected_return(g, pi) - expected_return(g, mu);
    worst_margin = std::min({worst_margin, eta, gain});
    if (!(eta > 0.0) || !(gain > 0.0)) ok = false;
  }
  return {"binary filter strict improvement", ok && qualified > 0, qualified, worst_margin,
          std::to_string(qualified) + " qualifying games"};
}

CheckResult check_tv_convergence(std::uint64_t seed, int n_games) {
  Rng rng(seed);
  RandomGameOptions opt;
  opt.min_agents = 2;
  opt.max_agents = 2;
  opt.min_actions = 2;
  opt.max_actions = 2;
  opt.min_states = 3;
  opt.max_states = 4;
  int accepted = 0, tries = 0;
  double worst_tv = 0.0;
  bool monotone = true;
  while (accepted < n_games && tries < n_games * 4000) {
    ++tries;
    auto spec = make_random_game(rng, opt);
    auto g = enumerate_game(spec);
    auto mu = random_policy(g, rng);
    auto vals = exact_values(g, mu);

    // Keep only games where every advantage (joint and local) clears a 0.1
    // gap and the per-context positive chain is the unique joint argmax:
    // those are the games where the beta -> 0 limit of exp-weighting is the
    // binary filter.
    bool good = true;
    for (std::size_t i = 0; i < g.states.size() && good; ++i) {
      const StateKey& s = g.states[i];
      double best = -1e18, second = -1e18;
      const JointAction* best_a = nullptr;
      for (const auto& [a, p] : mu.at(s)) {
        double adv = oracle_joint_advantage(vals, s, a);
        if (std::abs(adv) < 0.1 && std::abs(adv) > 0) good = false;
        if (adv > best) {
          second = best;
          best = adv;
          best_a = &a;
        } else if (adv > second) {
          second = adv;
        }
      }
      if (!good || best - second < 0.1) {
        good = false;
        break;
      }
      // Chain of positive local advantages must be the argmax action.
      JointAction chain;
      for (int u = 0; u < g.spec->num_agents(); ++u) {
        auto cond = mu.conditional(s, chain);
        std::string pos;
        int n_pos = 0;
        for (const auto& [a_i, p] : cond) {
          if (p == 0.0) continue;
          double adv = oracle_local_advantage(g, vals, mu, s, chain, a_i);
          if (std::abs(adv) < 0.1) good = false;
          if (adv > 0) {
            pos = a_i;
            ++n_pos;
          }
        }
        if (!good || n_pos != 1) {
          good = false;
          break;
        }
        chain.push_back(pos);
      }
      if (good && chain != *best_a) good = false;
    }
    if (!good) continue;
    ++accepted;

    auto filt = binary_filter_policy(g, mu, 0.0);
    double prev = 2.0;
    for (double beta : {1.0, 0.1, 0.01, 0.001}) {
      double tv = max_tv_distance(g, exp_weight_policy(g, mu, beta).joint, filt);
      if (tv > prev + 1e-12) monotone = false;
      prev = tv;
    }
    worst_tv = std::max(worst_tv, prev);
  }
  bool ok = monotone && worst_tv <= 0.01 && accepted >= n_games;
  return {"beta -> 0 convergence to the binary filter", ok, accepted, worst_tv,
          std::to_string(accepted) + " gap games from " + std::to_string(tries) + " draws"};
}

CheckResult check_critic_fidelity_exhaustive(std::uint64_t seed, int n_games) {
  Rng rng(seed);
  double worst = 0.0;
  for (int gi = 0; gi < n_games; ++gi) {
    auto spec = make_layered_game(rng);
    auto g = enumerate_game(spec);
    auto mu = layered_support_policy(g, rng, 3);
    auto critic = mc_fit(exhaustive_dataset(g, mu), spec.gamma);
    auto vals = exact_values(g, mu);
    const auto wait = spec.all_wait();
    for (std::size_t i = 0; i < g.states.size(); ++i) {
      if (g.terminal[i]) continue;
      const StateKey& s = g.states[i];
      worst = std::max(worst, std::abs(*critic.local_q(s, {}) - vals.value(s)));
      worst = std::max(worst, std::abs(*critic.local_q(s, wait) - spec.gamma * vals.value(s)));
      for (const auto& [a, p] : mu.at(s))
        for (std::size_t u = 1; u <= a.size(); ++u) {
          auto prefix = prefix_of(a, u);
          worst = std::max(worst, std::abs(*critic.local_q(s, prefix) -
                                           oracle_local_q(g, vals, mu, s, prefix)));
        }
    }
  }
  return {"critic fidelity (exhaustive datasets)", worst <= 1e-6, n_games, worst, ""};
}

CheckResult check_critic_fidelity_sampled(std::uint64_t seed, int n_games, int episodes) {
  Rng rng(seed);
  double worst = 0.0;
  for (int gi = 0; gi < n_games; ++gi) {
    auto spec = make_layered_game(rng);
    auto g = enumerate_game(spec);
    auto mu = layered_support_policy(g, rng, 3);
    auto critic = mc_fit(sampled_dataset(g, mu, episodes, rng), spec.gamma);
    auto vals = exact_values(g, mu);
    for (std::size_t i = 0; i < g.states.size(); ++i) {
      if (g.terminal[i]) continue;
      const StateKey& s = g.states[i];
      for (const auto& [a, p] : mu.at(s))
        for (std::size_t u = 0; u <= a.size(); ++u) {
          auto prefix = prefix_of(a, u);
          auto est = critic.local_q(s, prefix);
          if (!est) continue;  // sampling may miss deep keys; missing is not an error
          worst = std::max(worst, std::abs(*est - oracle_local_q(g, vals, mu, s, prefix)));
        }
    }
  }
  return {"critic fidelity (sampled datasets, " + std::to_string(episodes) + " episodes)",
          worst <= 0.05, n_games, worst, ""};
}

std::vector<CheckResult> run_theory_checks(std::uint64_t seed, int n_games) {
  return {
      check_decomposition_oracle(seed, n_games),
      check_decomposition_mc(seed + 1, n_games),
      check_wait_identity(seed + 2, n_games),
      check_surrogate_identities(seed + 3, n_games),
      check_exp_weight_improvement(seed + 4, std::max(10, n_games / 5)),
      check_binary_filter_improvement(seed + 5, n_games),
      check_tv_convergence(seed + 6, std::max(10, n_games / 5)),
      check_critic_fidelity_exhaustive(seed + 7, n_games),
      check_critic_fidelity_sampled(seed + 8, std::max(5, n_games / 20), 20000),
  };
}

}  // namespace readkit
