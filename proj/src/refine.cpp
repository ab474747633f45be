#include "read/refine.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "json.hpp"

namespace readkit {

Method parse_method(const std::string& name) {
  if (name == "read_s") return Method::read_s;
  if (name == "read_j") return Method::read_j;
  if (name == "single_s" || name == "single_step_s") return Method::single_step_s;
  if (name == "single_j" || name == "single_step_j") return Method::single_step_j;
  if (name == "pv" || name == "physical_verification") return Method::physical_verification;
  throw GameError("unknown method: " + name);
}

std::string method_name(Method m) {
  switch (m) {
    case Method::read_s: return "read_s";
    case Method::read_j: return "read_j";
    case Method::single_step_s: return "single_step_s";
    case Method::single_step_j: return "single_step_j";
    default: return "physical_verification";
  }
}

namespace {

double clamp_alpha(double a, const RefineConfig& cfg) {
  return std::min(cfg.alpha_max, std::max(cfg.alpha_min, a));
}

// Per-agent candidates consistent with the committed prefix: actions that
// extend `prior` into at least one fully legal joint action.
std::vector<JointAction> completions(const std::vector<JointAction>& joint_legal,
                                     const std::vector<std::string>& prior) {
  std::vector<JointAction> out;
  for (const auto& a : joint_legal) {
    bool match = true;
    for (std::size_t k = 0; k < prior.size(); ++k)
      if (a[k] != prior[k]) {
        match = false;
        break;
    }
    if (!match) continue;
    std::string cand = a[prior.size()];
    bool seen = false;
    for (const auto& o : out)
      if (o[0] == cand) {
        seen = true;
        break;
      }
    if (!seen) out.push_back({cand});
  }
  return out;
}

bool contains_action(const std::vector<JointAction>& legal, const std::string& a) {
  for (const auto& x : legal)
    if (x[0] == a) return true;
  return false;
}

PlannerQuery base_query(const GameSpec& spec, const RefineConfig& cfg, const StateKey& s,
                        const std::optional<PlannerQuery::Round>& history) {
  PlannerQuery q;
  q.task = cfg.task.empty() ? spec.name : cfg.task;
  q.state = s;
  q.state_text = s;
  if (cfg.keep_history) q.history = history;
  return q;
}

}  // namespace

JointAction read_s_step(const GameSpec& spec, const StateKey& s, Planner& planner,
                        const CriticStore& critic, const RefineConfig& cfg, double& alpha,
                        const std::optional<PlannerQuery::Round>& history, StepTrace& trace,
                        int& queries) {
  trace.state = s;
  alpha = clamp_alpha(alpha * 2.0, cfg);
  const double alpha_entry = alpha;
  const auto joint_legal = spec.enumerate_actions(s);

  std::vector<std::string> prior;
  for (int agent = 0; agent < spec.num_agents(); ++agent) {
    if (cfg.reset_alpha_per_agent) alpha = alpha_entry;
    auto legal = completions(joint_legal, prior);
    std::vector<PlannerQuery::Evaluated> evaluated;
    bool committed = false;
    double best_score = 0.0;
    std::string best_action;
    bool have_best = false;

    for (int t = 0; t < cfg.max_replans; ++t) {
      PlannerQuery q = base_query(spec, cfg, s, history);
      q.agent = agent;
      q.prior = prior;
      q.evaluated = evaluated;
      q.legal = legal;
      PlannerResponse resp = planner.propose(q);
      ++queries;

      std::string cand = resp.action.size() == 1 ? resp.action[0] : std::string();
      alpha = clamp_alpha(alpha / 2.0, cfg);

      ProposalRecord rec;
      rec.proposal = {cand};
      rec.agent = agent;
      rec.threshold = alpha;
      std::optional<double> score;
      if (cand.empty() || !contains_action(legal, cand)) {
        rec.note = "not an available action";
      } else {
        score = critic.score_read_s(s, prior, cand);
        if (!score) rec.note = "no advantage estimate for this action";
      }
      rec.scored = score.has_value();
      if (score) rec.score = *score;
      rec.accepted = score && *score > alpha;
      trace.proposals.push_back(rec);

      if (score && (!have_best || *score > best_score)) {
        have_best = true;
        best_score = *score;
        best_action = cand;
      }
      if (rec.accepted) {
        prior.push_back(cand);
        committed = true;
        break;
      }
      PlannerQuery::Evaluated e;
      e.action = {cand};
      // The advantage pipeline looked at this proposal even when it had no
      // estimate for it; `scored` marks that, an empty score marks OOD.
      e.scored = true;
      e.score = score;
      e.note = rec.note;
      evaluated.push_back(std::move(e));
    }

    if (!committed) {
      trace.exhausted = true;
      prior.push_back(have_best ? best_action : spec.wait_action);
    }
  }
  trace.chosen = prior;
  trace.alpha_after = alpha;
  return prior;
}

JointAction read_j_step(const GameSpec& spec, const StateKey& s, Planner& planner,
                        const CriticStore& critic, const RefineConfig& cfg, double& alpha,
                        const std::optional<PlannerQuery::Round>& history, StepTrace& trace,
                        int& queries) {
  trace.state = s;
  alpha = clamp_alpha(alpha * 2.0, cfg);
  const auto joint_legal = spec.enumerate_actions(s);
  std::vector<PlannerQuery::Evaluated> evaluated;
  JointAction best_action;
  double best_score = 0.0;
  bool have_best = false;

  for (int t = 0; t < cfg.max_replans; ++t) {
    PlannerQuery q = base_query(spec, cfg, s, history);
    q.evaluated = evaluated;
    q.legal = joint_legal;
    PlannerResponse resp = planner.propose(q);
    ++queries;

    alpha = clamp_alpha(alpha / 2.0, cfg);
    ProposalRecord rec;
    rec.proposal = resp.action;
    rec.threshold = alpha;

    std::optional<double> score;
    bool executable = resp.action.size() == static_cast<std::size_t>(spec.num_agents()) &&
                      !spec.check(s, resp.action);
    if (!executable) {
      rec.note = "not an executable joint action";
    } else {
      score = critic.score_read_j(s, resp.action);
      if (!score) rec.note = "no advantage estimate for this action";
    }
    rec.scored = score.has_value();
    if (score) rec.score = *score;
    rec.accepted = score && *score > alpha;
    trace.proposals.push_back(rec);

    if (score && (!have_best || *score > best_score)) {
      have_best = true;
      best_score = *score;
      best_action = resp.action;
    }
    if (rec.accepted) {
      trace.chosen = resp.action;
      trace.alpha_after = alpha;
      return resp.action;
    }
    PlannerQuery::Evaluated e;
    e.action = resp.action;
    e.scored = true;  // rejected by the scoring loop, even when out of distribution
    e.score = score;
    e.note = rec.note;
    evaluated.push_back(std::move(e));
  }

  trace.exhausted = true;
  trace.chosen = have_best ? best_action : spec.all_wait();
  trace.alpha_after = alpha;
  return trace.chosen;
}

EpisodeResult run_episode(const GameSpec& spec, Planner& planner, const CriticStore* critic,
                          const RefineConfig& cfg, int disturb_n) {
  EpisodeResult r;
  StateKey state = spec.initial_state;
  double alpha = cfg.alpha0;
  std::optional<PlannerQuery::Round> history;
  bool disturbed = false;
  Rng rng(0x5eedULL);

  const bool needs_critic =
      cfg.method == Method::read_s || cfg.method == Method::read_j;
  if (needs_critic && !critic) throw GameError("method requires a fitted critic");

  while (r.env_steps < spec.horizon) {
    if (spec.terminal(state)) break;
    if (disturb_n >= 1 && !disturbed && r.env_steps >= disturb_n) {
      state = spec.initial_state;  // silent reset; the planner is not told
      disturbed = true;
    }

    StepTrace trace;
    trace.state = state;
    JointAction chosen;
    std::optional<double> chosen_score;

    switch (cfg.method) {
      case Method::read_s:
        chosen = read_s_step(spec, state, planner, *critic, cfg, alpha, history, trace,
                             r.queries);
        break;
      case Method::read_j:
        chosen = read_j_step(spec, state, planner, *critic, cfg, alpha, history, trace,
                             r.queries);
        break;
      case Method::single_step_j: {
        PlannerQuery q = base_query(spec, cfg, state, history);
        q.legal = spec.enumerate_actions(state);
        PlannerResponse resp = planner.propose(q);
        ++r.queries;
        chosen = resp.action.size() == static_cast<std::size_t>(spec.num_agents())
                     ? resp.action
                     : spec.all_wait();
        ProposalRecord rec;
        rec.proposal = chosen;
        rec.accepted = true;
        trace.proposals.push_back(rec);
        trace.chosen = chosen;
        break;
      }
      case Method::single_step_s: {
        const auto joint_legal = spec.enumerate_actions(state);
        std::vector<std::string> prior;
        for (int agent = 0; agent < spec.num_agents(); ++agent) {
          PlannerQuery q = base_query(spec, cfg, state, history);
          q.agent = agent;
          q.prior = prior;
          q.legal = completions(joint_legal, prior);
          PlannerResponse resp = planner.propose(q);
          ++r.queries;
          prior.push_back(resp.action.size() == 1 ? resp.action[0] : spec.wait_action);
          ProposalRecord rec;
          rec.proposal = {prior.back()};
          rec.agent = agent;
          rec.accepted = true;
          trace.proposals.push_back(rec);
        }
        chosen = prior;
        trace.chosen = chosen;
        break;
      }
      case Method::physical_verification: {
        std::vector<PlannerQuery::Evaluated> evaluated;
        bool stepped = false;
        for (int t = 0; t < cfg.max_replans && r.env_steps < spec.horizon; ++t) {
          PlannerQuery q = base_query(spec, cfg, state, history);
          q.evaluated = evaluated;
          q.legal = spec.enumerate_actions(state);
          PlannerResponse resp = planner.propose(q);
          ++r.queries;

          ProposalRecord rec;
          rec.proposal = resp.action;
          ++r.env_steps;  // every attempted execution costs a step
          std::optional<ActionError> err;
          if (resp.action.size() != static_cast<std::size_t>(spec.num_agents()))
            err = ActionError{-1, action_key(resp.action), "wrong number of actions"};
          else
            err = spec.check(state, resp.action);
          if (err) {
            rec.note = err->reason;
            trace.proposals.push_back(rec);
            PlannerQuery::Evaluated e;
            e.action = resp.action;
            e.note = err->reason;
            evaluated.push_back(std::move(e));
            planner.notify_step(resp.action);
            continue;
          }
          rec.accepted = true;
          trace.proposals.push_back(rec);
          StepResult sr = step(spec, state, resp.action, rng);
          r.total_reward += sr.reward;
          planner.notify_step(resp.action);
          if (cfg.keep_history) {
            history = PlannerQuery::Round{state, resp.action, std::nullopt};
          }
          trace.chosen = resp.action;
          state = sr.next;
          stepped = true;
          break;
        }
        if (!stepped) trace.exhausted = true;
        r.traces.push_back(std::move(trace));
        continue;  // environment accounting already done above
      }
    }

    // Commit the chosen action. An illegal committed action is an inert
    // interaction: the state does not change but the step is spent.
    for (const auto& p : trace.proposals)
      if (p.accepted && p.scored) chosen_score = p.score;
    ++r.env_steps;
    if (chosen.size() != static_cast<std::size_t>(spec.num_agents()) ||
        spec.check(state, chosen)) {
      planner.notify_step(chosen);
      if (cfg.keep_history) history = PlannerQuery::Round{state, chosen, chosen_score};
    } else {
      StepResult sr = step(spec, state, chosen, rng);
      r.total_reward += sr.reward;
      planner.notify_step(chosen);
      if (cfg.keep_history) history = PlannerQuery::Round{state, chosen, chosen_score};
      state = sr.next;
    }
    r.traces.push_back(std::move(trace));
  }

  r.success = spec.terminal(state);
  return r;
}

std::string episode_jsonl(const EpisodeResult& r, std::uint64_t seed) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["seed"] = seed;
  j["success"] = r.success;
  j["env_steps"] = r.env_steps;
  j["queries"] = r.queries;
  j["total_reward"] = r.total_reward;
  auto& traces = j["traces"] = nlohmann::json::array();
  for (const auto& t : r.traces) {
    nlohmann::json jt;
    jt["state"] = t.state;
    jt["chosen"] = t.chosen;
    jt["exhausted"] = t.exhausted;
    jt["alpha_after"] = t.alpha_after;
    auto& props = jt["proposals"] = nlohmann::json::array();
    for (const auto& p : t.proposals) {
      nlohmann::json jp;
      jp["proposal"] = p.proposal;
      jp["agent"] = p.agent;
      jp["scored"] = p.scored;
      if (p.scored) jp["score"] = p.score;
      jp["threshold"] = p.threshold;
      jp["accepted"] = p.accepted;
      if (!p.note.empty()) jp["note"] = p.note;
      props.push_back(std::move(jp));
    }
    traces.push_back(std::move(jt));
  }
  return j.dump();
}

}  // namespace readkit
