#include "read/game.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <queue>

namespace readkit {

namespace {
constexpr char kSep = '\x1f';
constexpr double kProbTol = 1e-12;
constexpr double kResidualTol = 1e-12;
constexpr int kMaxSweeps = 2000000;

std::string qkey(const StateKey& s, const JointAction& a) {
  return s + kSep + action_key(a);
}
}  // namespace

std::string action_key(const JointAction& a) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += kSep;
    out += a[i];
  }
  return out;
}

JointAction parse_action_key(const std::string& key) {
  JointAction a;
  std::string cur;
  for (char c : key) {
    if (c == kSep) {
      a.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  a.push_back(cur);
  return a;
}

std::optional<ActionError> GameSpec::check(const StateKey& s, const JointAction& a) const {
  if (a.size() != agents.size())
    return ActionError{-1, action_key(a), "joint action arity mismatch"};
  for (int i = 0; i < num_agents(); ++i) {
    const auto m = menu(s, i);
    if (std::find(m.begin(), m.end(), a[static_cast<std::size_t>(i)]) == m.end())
      return ActionError{i, a[static_cast<std::size_t>(i)], "action not in legal menu"};
  }
  if (validate) return validate(s, a);
  return std::nullopt;
}

std::vector<JointAction> GameSpec::enumerate_actions(const StateKey& s) const {
  std::vector<std::vector<std::string>> menus;
  menus.reserve(agents.size());
  for (int i = 0; i < num_agents(); ++i) menus.push_back(menu(s, i));
  std::vector<JointAction> out;
  JointAction cur(agents.size());
  // Membership holds by construction; only the joint constraint remains.
  std::function<void(int)> rec = [&](int i) {
    if (i == num_agents()) {
      if (!validate || !validate(s, cur)) out.push_back(cur);
      return;
    }
    for (const auto& a : menus[static_cast<std::size_t>(i)]) {
      cur[static_cast<std::size_t>(i)] = a;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

StepResult step(const GameSpec& spec, const StateKey& state, const JointAction& action, Rng& rng) {
  if (spec.terminal(state)) throw GameError("step() called on a terminal state");
  if (auto err = spec.check(state, action)) throw InvalidActionError(*err);
  auto outcomes = spec.transition(state, action);
  double total = 0.0;
  for (const auto& o : outcomes) total += o.prob;
  if (std::abs(total - 1.0) > kProbTol)
    throw GameError("transition distribution does not sum to 1");
  double u = rng.uniform();
  double acc = 0.0;
  const Outcome* chosen = &outcomes.back();
  for (const auto& o : outcomes) {
    acc += o.prob;
    if (u < acc) {
      chosen = &o;
      break;
    }
  }
  StepResult r;
  r.next = chosen->next;
  r.reward = spec.reward(state, action);
  r.done = spec.terminal(r.next);
  return r;
}

const std::vector<std::pair<JointAction, double>>& PolicyTable::at(const StateKey& s) const {
  auto it = dist.find(s);
  if (it == dist.end()) throw GameError("policy missing state: " + s);
  return it->second;
}

double PolicyTable::prob(const StateKey& s, const JointAction& a) const {
  const auto k = action_key(a);
  for (const auto& [act, p] : at(s))
    if (action_key(act) == k) return p;
  return 0.0;
}

double PolicyTable::prefix_prob(const StateKey& s, const std::vector<std::string>& prefix) const {
  double total = 0.0;
  for (const auto& [act, p] : at(s)) {
    bool match = true;
    for (std::size_t i = 0; i < prefix.size(); ++i)
      if (act[i] != prefix[i]) {
        match = false;
        break;
      }
    if (match) total += p;
  }
  return total;
}

std::vector<std::pair<std::string, double>> PolicyTable::conditional(
    const StateKey& s, const std::vector<std::string>& prefix) const {
  const std::size_t agent = prefix.size();
  std::vector<std::pair<std::string, double>> out;
  double total = 0.0;
  for (const auto& [act, p] : at(s)) {
    bool match = true;
    for (std::size_t i = 0; i < prefix.size(); ++i)
      if (act[i] != prefix[i]) {
        match = false;
        break;
      }
    if (!match) continue;
    total += p;
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const auto& e) { return e.first == act[agent]; });
    if (it == out.end())
      out.emplace_back(act[agent], p);
    else
      it->second += p;
  }
  if (total <= 0.0) throw GameError("conditioning on a zero-probability prefix");
  for (auto& e : out) e.second /= total;
  return out;
}

double PolicyTable::conditional_prob(const StateKey& s, const std::vector<std::string>& prefix,
                                     const std::string& action) const {
  for (const auto& [a, p] : conditional(s, prefix))
    if (a == action) return p;
  return 0.0;
}

void PolicyTable::check_normalized(double tol) const {
  for (const auto& [s, d] : dist) {
    double total = 0.0;
    for (const auto& [a, p] : d) {
      if (p < -tol) throw GameError("negative probability at state " + s);
      total += p;
    }
    if (std::abs(total - 1.0) > tol)
      throw GameError("policy not normalized at state " + s);
  }
}

PolicyTable uniform_policy(const GameSpec& spec, std::size_t cap) {
  auto g = enumerate_game(spec, cap);
  PolicyTable pi;
  for (std::size_t i = 0; i < g.states.size(); ++i) {
    if (g.terminal[i]) continue;
    const auto& acts = g.actions[i];
    std::vector<std::pair<JointAction, double>> d;
    d.reserve(acts.size());
    for (const auto& a : acts) d.emplace_back(a.action, 1.0 / static_cast<double>(acts.size()));
    pi.dist[g.states[i]] = std::move(d);
  }
  return pi;
}

EnumeratedGame enumerate_game(const GameSpec& spec, std::size_t cap) {
  EnumeratedGame g;
  g.spec = &spec;
  std::deque<int> frontier;
  auto intern = [&](const StateKey& s) {
    auto it = g.index.find(s);
    if (it != g.index.end()) return it->second;
    if (g.states.size() >= cap)
      throw GameError("reachable state space exceeds cap of " + std::to_string(cap) + " states");
    int id = static_cast<int>(g.states.size());
    g.index.emplace(s, id);
    g.states.push_back(s);
    g.terminal.push_back(spec.terminal(s));
    g.actions.emplace_back();
    frontier.push_back(id);
    return id;
  };
  intern(spec.initial_state);
  while (!frontier.empty()) {
    int id = frontier.front();
    frontier.pop_front();
    if (g.terminal[static_cast<std::size_t>(id)]) continue;
    const StateKey s = g.states[static_cast<std::size_t>(id)];
    auto acts = spec.enumerate_actions(s);
    // Interning new states can reallocate g.actions; fill a local row first.
    std::vector<EnumeratedGame::ActionInfo> infos;
    infos.reserve(acts.size());
    for (auto& a : acts) {
      EnumeratedGame::ActionInfo info;
      info.reward = spec.reward(s, a);
      double total = 0.0;
      for (const auto& o : spec.transition(s, a)) {
        total += o.prob;
        info.next.emplace_back(intern(o.next), o.prob);
      }
      if (std::abs(total - 1.0) > kProbTol)
        throw GameError("transition distribution does not sum to 1 at state " + s);
      info.action = std::move(a);
      infos.push_back(std::move(info));
    }
    g.actions[static_cast<std::size_t>(id)] = std::move(infos);
  }
  return g;
}

ExactValues exact_values(const EnumeratedGame& g, const PolicyTable& policy) {
  const std::size_t n = g.states.size();
  // Pre-resolve policy rows against enumerated action order.
  std::vector<std::vector<double>> pi(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (g.terminal[i]) continue;
    auto it = policy.dist.find(g.states[i]);
    if (it == policy.dist.end())
      throw GameError("policy missing reachable state: " + g.states[i]);
    const auto& row = it->second;
    pi[i].assign(g.actions[i].size(), 0.0);
    for (const auto& [a, p] : row) {
      const auto k = action_key(a);
      bool found = false;
      for (std::size_t j = 0; j < g.actions[i].size(); ++j) {
        if (action_key(g.actions[i][j].action) == k) {
          pi[i][j] += p;
          found = true;
          break;
        }
      }
      if (!found && p > kProbTol)
        throw GameError("policy assigns probability to an illegal action at state " + g.states[i]);
    }
  }
  const double gamma = g.spec->gamma;
  std::vector<double> v(n, 0.0), v2(n, 0.0);
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double val = 0.0;
      if (!g.terminal[i]) {
        for (std::size_t j = 0; j < g.actions[i].size(); ++j) {
          if (pi[i][j] == 0.0) continue;
          const auto& info = g.actions[i][j];
          double ev = 0.0;
          for (const auto& [ni, p] : info.next) ev += p * v[static_cast<std::size_t>(ni)];
          val += pi[i][j] * (info.reward + gamma * ev);
        }
      }
      v2[i] = val;
      residual = std::max(residual, std::abs(v2[i] - v[i]));
    }
    v.swap(v2);
    if (residual <= kResidualTol) break;
  }
  ExactValues out;
  for (std::size_t i = 0; i < n; ++i) {
    out.v[g.states[i]] = v[i];
    for (const auto& info : g.actions[i]) {
      double ev = 0.0;
      for (const auto& [ni, p] : info.next) ev += p * v[static_cast<std::size_t>(ni)];
      out.q[qkey(g.states[i], info.action)] = info.reward + gamma * ev;
    }
  }
  return out;
}

ExactValues exact_values(const GameSpec& spec, const PolicyTable& policy, std::size_t cap) {
  return exact_values(enumerate_game(spec, cap), policy);
}

double ExactValues::value(const StateKey& s) const {
  auto it = v.find(s);
  if (it == v.end()) throw GameError("no value for state: " + s);
  return it->second;
}

double ExactValues::q_value(const StateKey& s, const JointAction& a) const {
  auto it = q.find(qkey(s, a));
  if (it == q.end()) throw GameError("no Q value for state " + s + " action " + action_key(a));
  return it->second;
}

double expected_return(const EnumeratedGame& g, const PolicyTable& policy) {
  return exact_values(g, policy).value(g.spec->initial_state);
}

double expected_return(const GameSpec& spec, const PolicyTable& policy, std::size_t cap) {
  return expected_return(enumerate_game(spec, cap), policy);
}

std::unordered_map<StateKey, double> discounted_visitation(const EnumeratedGame& g,
                                                           const PolicyTable& policy) {
  const std::size_t n = g.states.size();
  const double gamma = g.spec->gamma;
  // rho = d0 + gamma * P_pi^T rho, solved by fixed-point iteration.
  std::vector<double> rho(n, 0.0), rho2(n, 0.0);
  std::vector<double> d0(n, 0.0);
  d0[static_cast<std::size_t>(g.index.at(g.spec->initial_state))] = 1.0;
  // Flattened policy transition rows: state -> [(next, prob)].
  std::vector<std::vector<std::pair<int, double>>> flow(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (g.terminal[i]) {
      flow[i].emplace_back(static_cast<int>(i), 1.0);  // absorbing
      continue;
    }
    for (const auto& [a, p] : policy.at(g.states[i])) {
      if (p == 0.0) continue;
      const auto k = action_key(a);
      for (const auto& info : g.actions[i]) {
        if (action_key(info.action) != k) continue;
        for (const auto& [ni, tp] : info.next) flow[i].emplace_back(ni, p * tp);
        break;
      }
    }
  }
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    std::fill(rho2.begin(), rho2.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) rho2[i] = d0[i];
    for (std::size_t i = 0; i < n; ++i) {
      if (rho[i] == 0.0) continue;
      for (const auto& [ni, p] : flow[i]) rho2[static_cast<std::size_t>(ni)] += gamma * rho[i] * p;
    }
    double residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) residual = std::max(residual, std::abs(rho2[i] - rho[i]));
    rho.swap(rho2);
    if (residual <= kResidualTol) break;
  }
  std::unordered_map<StateKey, double> out;
  for (std::size_t i = 0; i < n; ++i) out[g.states[i]] = rho[i];
  return out;
}

std::unordered_map<StateKey, double> discounted_visitation(const GameSpec& spec,
                                                           const PolicyTable& policy,
                                                           std::size_t cap) {
  return discounted_visitation(enumerate_game(spec, cap), policy);
}

std::optional<std::vector<JointAction>> shortest_solution(const EnumeratedGame& g,
                                                          const StateKey& from) {
  auto it = g.index.find(from);
  if (it == g.index.end()) return std::nullopt;
  const std::size_t n = g.states.size();
  // Reverse BFS from terminal states gives distance-to-goal for every state.
  std::vector<int> dist(n, -1);
  std::vector<std::vector<int>> rev(n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& info : g.actions[i])
      for (const auto& [ni, p] : info.next)
        if (p > 0.0 && ni != static_cast<int>(i)) rev[static_cast<std::size_t>(ni)].push_back(static_cast<int>(i));
  std::queue<int> q;
  for (std::size_t i = 0; i < n; ++i)
    if (g.terminal[i]) {
      dist[i] = 0;
      q.push(static_cast<int>(i));
    }
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int p : rev[static_cast<std::size_t>(u)])
      if (dist[static_cast<std::size_t>(p)] < 0) {
        dist[static_cast<std::size_t>(p)] = dist[static_cast<std::size_t>(u)] + 1;
        q.push(p);
      }
  }
  int cur = it->second;
  if (dist[static_cast<std::size_t>(cur)] < 0) return std::nullopt;
  std::vector<JointAction> plan;
  while (!g.terminal[static_cast<std::size_t>(cur)]) {
    const auto& acts = g.actions[static_cast<std::size_t>(cur)];
    int best = -1;
    std::string best_key;
    for (std::size_t j = 0; j < acts.size(); ++j) {
      // Deterministic layer: the plan follows the single successor.
      if (acts[j].next.size() != 1) continue;
      int ni = acts[j].next[0].first;
      if (dist[static_cast<std::size_t>(ni)] != dist[static_cast<std::size_t>(cur)] - 1) continue;
      auto k = action_key(acts[j].action);
      if (best < 0 || k < best_key) {
        best = static_cast<int>(j);
        best_key = k;
      }
    }
    if (best < 0) return std::nullopt;
    plan.push_back(acts[static_cast<std::size_t>(best)].action);
    cur = acts[static_cast<std::size_t>(best)].next[0].first;
  }
  return plan;
}

}  // namespace readkit
