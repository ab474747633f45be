#include "read/planner.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "httplib.h"
#include "json.hpp"

namespace readkit {

ExpertPolicy make_expert_policy(const EnumeratedGame& g) {
  const auto n = g.states.size();
  // Reverse adjacency over deterministic edges only.
  std::vector<std::vector<int>> rev(n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& ai : g.actions[i])
      if (ai.next.size() == 1 && ai.next[0].second > 1.0 - 1e-12)
        rev[static_cast<std::size_t>(ai.next[0].first)].push_back(static_cast<int>(i));

  std::vector<int> dist(n, -1);
  std::deque<int> frontier;
  for (std::size_t i = 0; i < n; ++i)
    if (g.terminal[i]) {
      dist[i] = 0;
      frontier.push_back(static_cast<int>(i));
    }
  while (!frontier.empty()) {
    int j = frontier.front();
    frontier.pop_front();
    for (int i : rev[static_cast<std::size_t>(j)])
      if (dist[static_cast<std::size_t>(i)] < 0) {
        dist[static_cast<std::size_t>(i)] = dist[static_cast<std::size_t>(j)] + 1;
        frontier.push_back(i);
      }
  }

  ExpertPolicy expert;
  for (std::size_t i = 0; i < n; ++i) {
    if (g.terminal[i] || dist[i] < 0) continue;
    const JointAction* best = nullptr;
    std::string best_key;
    for (const auto& ai : g.actions[i]) {
      if (ai.next.size() != 1 || ai.next[0].second <= 1.0 - 1e-12) continue;
      if (dist[static_cast<std::size_t>(ai.next[0].first)] != dist[i] - 1) continue;
      std::string key = action_key(ai.action);
      if (!best || key < best_key) {
        best = &ai.action;
        best_key = std::move(key);
      }
    }
    if (best) {
      expert.action[g.states[i]] = *best;
      expert.dist[g.states[i]] = dist[i];
    }
  }
  return expert;
}

ScriptedPlanner::ScriptedPlanner(const GameSpec& spec, std::shared_ptr<const ExpertPolicy> expert,
                                 ScriptedPlannerConfig cfg)
    : spec_(&spec),
      expert_(std::move(expert)),
      cfg_(cfg),
      believed_(spec.initial_state),
      rng_(cfg.seed) {}

PlannerResponse ScriptedPlanner::propose(const PlannerQuery& q) {
  // Advantage feedback quotes scores for the queried state, which re-grounds
  // the internal belief; bare rejection messages carry no such signal.
  for (const auto& e : q.evaluated)
    if (e.scored) {
      believed_ = q.state;
      break;
    }

  const bool joint = q.agent < 0;
  JointAction base;
  if (!spec_->terminal(believed_) && expert_->covers(believed_)) {
    const JointAction& plan = expert_->action.at(believed_);
    if (joint)
      base = plan;
    else
      base = {plan[static_cast<std::size_t>(q.agent)]};
  } else {
    base = joint ? spec_->all_wait() : JointAction{spec_->wait_action};
  }

  double u = rng_.uniform();
  if (u < cfg_.p) {
    std::string token = "UNKNOWN_ACTION_" + std::to_string(++hallucination_count_);
    JointAction out = base;
    auto slot = joint ? rng_.uniform_int(0, static_cast<int>(out.size()) - 1) : 0;
    out[static_cast<std::size_t>(slot)] = token;
    return {out, "improvised"};
  }
  if (u < cfg_.p + cfg_.q && !q.legal.empty()) {
    std::vector<const JointAction*> alt;
    for (const auto& a : q.legal)
      if (a != base) alt.push_back(&a);
    if (!alt.empty())
      return {*alt[static_cast<std::size_t>(
                  rng_.uniform_int(0, static_cast<int>(alt.size()) - 1))],
              "exploring"};
  }
  return {base, "following plan"};
}

void ScriptedPlanner::notify_step(const JointAction& executed) {
  if (spec_->terminal(believed_)) return;
  if (spec_->check(believed_, executed)) return;  // would be rejected: belief says no-op
  auto outcomes = spec_->transition(believed_, executed);
  // Simulate the most likely outcome; environments here are deterministic.
  const Outcome* best = &outcomes[0];
  for (const auto& o : outcomes)
    if (o.prob > best->prob) best = &o;
  believed_ = best->next;
}

PlannerResponse StubPlanner::propose(const PlannerQuery&) {
  auto i = static_cast<std::size_t>(calls++);
  if (i >= script_.size()) i = script_.size() - 1;
  return script_[i];
}

namespace {

nlohmann::json query_json(const PlannerQuery& q) {
  nlohmann::json j;
  j["task"] = q.task;
  j["state"] = q.state;
  j["state_text"] = q.state_text;
  j["agent"] = q.agent;
  j["prior"] = q.prior;
  j["evaluated"] = nlohmann::json::array();
  for (const auto& e : q.evaluated) {
    nlohmann::json je;
    je["action"] = e.action;
    je["scored"] = e.scored;
    if (e.score)
      je["score"] = *e.score;
    else
      je["score"] = nullptr;
    je["note"] = e.note;
    j["evaluated"].push_back(je);
  }
  if (q.history) {
    nlohmann::json jh;
    jh["state"] = q.history->state;
    jh["action"] = q.history->action;
    if (q.history->score)
      jh["score"] = *q.history->score;
    else
      jh["score"] = nullptr;
    j["history"] = jh;
  } else {
    j["history"] = nullptr;
  }
  j["legal"] = q.legal;
  return j;
}

}  // namespace

PlannerResponse RemotePlanner::propose(const PlannerQuery& q) {
  const std::string body = query_json(q).dump();
  std::string last_error = "no attempt made";
  for (int attempt = 0; attempt <= cfg_.retries; ++attempt) {
    httplib::Client cli(cfg_.url);
    cli.set_connection_timeout(0, cfg_.timeout_ms * 1000);
    cli.set_read_timeout(cfg_.timeout_ms / 1000, (cfg_.timeout_ms % 1000) * 1000);
    auto res = cli.Post("/plan", body, "application/json");
    if (!res) {
      last_error = "transport failure: " + httplib::to_string(res.error());
      continue;
    }
    if (res->status != 200) {
      last_error = "HTTP status " + std::to_string(res->status);
      continue;
    }
    try {
      auto j = nlohmann::json::parse(res->body);
      PlannerResponse out;
      out.action = j.at("action").get<JointAction>();
      out.rationale = j.value("rationale", "");
      return out;
    } catch (const std::exception& e) {
      // Malformed payloads are protocol violations, not hallucinations.
      throw PlannerProtocolError(std::string("bad planner reply: ") + e.what());
    }
  }
  throw PlannerProtocolError("planner unreachable: " + last_error);
}

}  // namespace readkit
