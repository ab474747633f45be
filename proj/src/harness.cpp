#include "read/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "read/battery.hpp"

namespace readkit {

namespace {

double mean_of(const std::vector<double>& xs) {
  if (xs.empty()) return 0.0;
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

double se_of(const std::vector<double>& xs) {
  if (xs.size() < 2) return 0.0;
  double m = mean_of(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(xs.size() - 1) /
                   static_cast<double>(xs.size()));
}

std::vector<double> column(const std::vector<EpisodeMetrics>& rows, int EpisodeMetrics::*f) {
  std::vector<double> xs;
  xs.reserve(rows.size());
  for (const auto& r : rows) xs.push_back(static_cast<double>(r.*f));
  return xs;
}

std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", x);
  return buf;
}

}  // namespace

double Report::sr_mean() const { return mean_of(column(rows, &EpisodeMetrics::sr)); }
double Report::sr_se() const { return se_of(column(rows, &EpisodeMetrics::sr)); }
double Report::es_mean() const { return mean_of(column(rows, &EpisodeMetrics::es)); }
double Report::es_se() const { return se_of(column(rows, &EpisodeMetrics::es)); }
double Report::nq_mean() const { return mean_of(column(rows, &EpisodeMetrics::nq)); }
double Report::nq_se() const { return se_of(column(rows, &EpisodeMetrics::nq)); }

std::string Report::csv() const {
  std::string out = "sr,es,nq\n";
  for (const auto& r : rows)
    out += std::to_string(r.sr) + "," + std::to_string(r.es) + "," + std::to_string(r.nq) + "\n";
  out += fixed6(sr_mean()) + "±" + fixed6(sr_se()) + "," + fixed6(es_mean()) + "±" +
         fixed6(es_se()) + "," + fixed6(nq_mean()) + "±" + fixed6(nq_se()) + "\n";
  return out;
}

BenchConfig parse_bench_config(const std::string& text) {
  BenchConfig cfg;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto strip = [](std::string s) {
      auto b = s.find_first_not_of(" \t\r");
      if (b == std::string::npos) return std::string();
      auto e = s.find_last_not_of(" \t\r");
      return s.substr(b, e - b + 1);
    };
    line = strip(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw GameError("config line " + std::to_string(lineno) + ": expected key=value");
    std::string key = strip(line.substr(0, eq));
    std::string val = strip(line.substr(eq + 1));
    if (key == "task")
      cfg.task = val;
    else if (key == "level")
      cfg.level = val;
    else if (key == "method")
      cfg.method = parse_method(val);
    else if (key == "p")
      cfg.p = std::stod(val);
    else if (key == "q")
      cfg.q = std::stod(val);
    else if (key == "alpha0")
      cfg.alpha0 = std::stod(val);
    else if (key == "max_replans")
      cfg.max_replans = std::stoi(val);
    else if (key == "step_limit")
      cfg.step_limit = std::stoi(val);
    else if (key == "disturb_n")
      cfg.disturb_n = std::stoi(val);
    else if (key == "keep_history")
      cfg.keep_history = val == "true" || val == "1";
    else if (key == "critic_file")
      cfg.critic_file = val;
    else if (key == "planner")
      cfg.planner = val;
    else if (key == "remote_url")
      cfg.remote_url = val;
    else if (key == "seeds") {
      cfg.seeds.clear();
      std::stringstream vs(val);
      std::string tok;
      while (std::getline(vs, tok, ','))
        if (!strip(tok).empty()) cfg.seeds.push_back(std::stoull(strip(tok)));
    } else {
      throw GameError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  if (cfg.seeds.empty())
    for (std::uint64_t s = 0; s < 10; ++s) cfg.seeds.push_back(s);
  return cfg;
}

BenchConfig load_bench_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GameError("cannot read config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_bench_config(ss.str());
}

Report run_benchmark(const GameSpec& spec, const BenchConfig& cfg, const CriticStore* critic,
                     const PlannerFactory& make_planner) {
  GameSpec game = spec;
  if (cfg.step_limit > 0) game.horizon = cfg.step_limit;

  RefineConfig rc;
  rc.method = cfg.method;
  rc.alpha0 = cfg.alpha0;
  rc.max_replans = cfg.max_replans > 0 ? cfg.max_replans : game.replan_cap;
  rc.keep_history = cfg.keep_history;
  rc.task = cfg.task;

  const std::size_t n = cfg.seeds.size();
  std::vector<EpisodeResult> results(n);
  std::vector<std::string> errors(n);
  std::atomic<std::size_t> cursor{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t i = cursor.fetch_add(1);
      if (i >= n) return;
      try {
        auto planner = make_planner(cfg.seeds[i]);
        results[i] = run_episode(game, *planner, critic, rc, cfg.disturb_n);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  std::size_t workers = std::min<std::size_t>(n, std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (std::size_t i = 0; i < n; ++i)
    if (!errors[i].empty())
      throw GameError("seed " + std::to_string(cfg.seeds[i]) + ": " + errors[i]);

  Report rep;
  rep.seeds = cfg.seeds;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& r = results[i];
    rep.rows.push_back({r.success ? 1 : 0, r.env_steps, r.queries});
    rep.traces_jsonl += episode_jsonl(r, cfg.seeds[i]);
    rep.traces_jsonl += '\n';
  }
  return rep;
}

namespace {

PlannerFactory make_factory(const GameSpec& spec, const BenchConfig& cfg) {
  if (cfg.planner == "remote") {
    std::string url = cfg.remote_url;
    if (url.empty())
      if (const char* env = std::getenv("READ_PLANNER_URL")) url = env;
    if (url.empty()) throw GameError("remote planner needs remote_url or READ_PLANNER_URL");
    return [url](std::uint64_t) {
      return std::make_unique<RemotePlanner>(RemotePlannerConfig{url});
    };
  }
  if (cfg.planner != "scripted") throw GameError("unknown planner kind: " + cfg.planner);
  auto g = enumerate_game(spec);
  auto expert = std::make_shared<const ExpertPolicy>(make_expert_policy(g));
  const GameSpec* sp = &spec;
  double p = cfg.p, q = cfg.q;
  return [sp, expert, p, q](std::uint64_t seed) {
    return std::make_unique<ScriptedPlanner>(*sp, expert, ScriptedPlannerConfig{p, q, seed});
  };
}

}  // namespace

Report run_benchmark(const BenchConfig& cfg, const CriticStore* critic) {
  GameSpec spec = build_env(cfg.task, cfg.level);
  return run_benchmark(spec, cfg, critic, make_factory(spec, cfg));
}

Report inject_disturbance(const BenchConfig& cfg, const CriticStore* critic) {
  GameSpec spec = build_env(cfg.task, cfg.level);
  if (cfg.disturb_n >= 1) {
    auto g = enumerate_game(spec);
    auto plan = shortest_solution(g, spec.initial_state);
    if (!plan) throw GameError("disturbance target game is unsolvable");
    if (cfg.disturb_n >= static_cast<int>(plan->size()))
      throw GameError("disturbance step " + std::to_string(cfg.disturb_n) +
                      " not below the minimal solution length " +
                      std::to_string(plan->size()));
  }
  return run_benchmark(spec, cfg, critic, make_factory(spec, cfg));
}

Dataset collect_dataset(const GameSpec& spec, const EnumeratedGame& g, const ExpertPolicy& expert,
                        double p, double q, int episodes, bool augment, std::uint64_t seed,
                        const std::string& provenance) {
  Dataset data;
  data.wait_action = spec.all_wait();
  data.wait_augmented = augment;
  Rng root(seed);

  auto behavior_action = [&](const StateKey& s, Rng& rng) -> JointAction {
    JointAction base =
        expert.covers(s) ? expert.action.at(s) : spec.all_wait();
    JointAction out = base;
    for (std::size_t i = 0; i < out.size(); ++i) {
      double u = rng.uniform();
      if (u < p) {
        out[i] = "<unavailable>";  // placeholder: executes as WAIT below
      } else if (u < p + q) {
        auto menu = spec.menu(s, static_cast<int>(i));
        if (!menu.empty()) out[i] = menu[static_cast<std::size_t>(rng.uniform_int(
            0, static_cast<int>(menu.size()) - 1))];
      }
    }
    if (spec.check(s, out)) return spec.all_wait();  // illegal proposals execute as WAIT
    return out;
  };

  auto rollout = [&](StateKey s, Rng& rng, Episode& ep, int budget) {
    for (int t = 0; t < budget && !spec.terminal(s); ++t) {
      JointAction a = behavior_action(s, rng);
      StepResult sr = step(spec, s, a, rng);
      ep.steps.push_back({s, a, sr.reward, sr.next});
      s = sr.next;
    }
  };

  for (int e = 0; e < episodes; ++e) {
    Rng rng(root.fork(static_cast<std::uint64_t>(e)));
    Episode ep;
    ep.provenance = provenance;
    rollout(spec.initial_state, rng, ep, spec.horizon);
    std::vector<StateKey> visited;
    visited.push_back(spec.initial_state);
    for (const auto& tr : ep.steps)
      if (std::find(visited.begin(), visited.end(), tr.next) == visited.end())
        visited.push_back(tr.next);
    data.episodes.push_back(std::move(ep));

    if (!augment) continue;
    // WAIT probes: pin Q(s, w) for every visited state, then continue with
    // the behavior policy so the probe's tail re-covers the usual keys.
    for (const auto& s : visited) {
      if (spec.terminal(s)) continue;
      Episode probe;
      probe.provenance = "augmented";
      JointAction w = spec.all_wait();
      StepResult sr = step(spec, s, w, rng);
      probe.steps.push_back({s, w, sr.reward, sr.next});
      rollout(sr.next, rng, probe, spec.horizon);
      data.episodes.push_back(std::move(probe));
    }
    // Perturbed restarts: a few random legal steps away from the start,
    // then behavior rollout, for coverage of off-path proposals.
    for (int k = 1; k <= 3; ++k) {
      StateKey s = spec.initial_state;
      Episode wander;
      wander.provenance = "augmented";
      for (int j = 0; j < k && !spec.terminal(s); ++j) {
        auto legal = spec.enumerate_actions(s);
        if (legal.empty()) break;
        JointAction a = legal[static_cast<std::size_t>(
            rng.uniform_int(0, static_cast<int>(legal.size()) - 1))];
        StepResult sr = step(spec, s, a, rng);
        wander.steps.push_back({s, a, sr.reward, sr.next});
        s = sr.next;
      }
      rollout(s, rng, wander, spec.horizon - k);
      if (!wander.steps.empty()) data.episodes.push_back(std::move(wander));
    }
  }
  (void)g;
  return data;
}

Dataset mix_datasets(const Dataset& d_llm, const Dataset& d_expert, int llm_percent,
                     std::uint64_t seed) {
  if (llm_percent < 0 || llm_percent > 100) throw GameError("llm_percent must be in [0, 100]");
  if (llm_percent > 0 && d_llm.episodes.empty())
    throw GameError("mix needs planner-policy episodes but that source is empty");
  if (llm_percent < 100 && d_expert.episodes.empty())
    throw GameError("mix needs expert episodes but that source is empty");

  std::size_t total;
  if (llm_percent == 0)
    total = d_expert.episodes.size();
  else if (llm_percent == 100)
    total = d_llm.episodes.size();
  else
    total = std::min(d_llm.episodes.size(), d_expert.episodes.size());
  auto n_llm = static_cast<std::size_t>(
      std::llround(static_cast<double>(total) * llm_percent / 100.0));
  std::size_t n_exp = total - n_llm;

  Rng rng(seed);
  auto sample = [&](const Dataset& src, std::size_t n) {
    std::vector<std::size_t> idx(src.episodes.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    for (std::size_t i = idx.size(); i > 1; --i)
      std::swap(idx[i - 1], idx[static_cast<std::size_t>(
                    rng.uniform_int(0, static_cast<int>(i) - 1))]);
    idx.resize(n);
    std::sort(idx.begin(), idx.end());
    return idx;
  };

  Dataset out;
  out.wait_action = d_llm.episodes.empty() ? d_expert.wait_action : d_llm.wait_action;
  out.wait_augmented = d_llm.wait_augmented || d_expert.wait_augmented;
  if (n_llm > 0)
    for (auto i : sample(d_llm, n_llm)) out.episodes.push_back(d_llm.episodes[i]);
  if (n_exp > 0)
    for (auto i : sample(d_expert, n_exp)) out.episodes.push_back(d_expert.episodes[i]);
  return out;
}

namespace {

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw GameError("cannot write " + path);
  out << content;
}

int cmd_collect(const std::string& task, const std::string& level, double p, double q,
                int episodes, bool augment, std::uint64_t seed, const std::string& provenance,
                const std::string& out_path) {
  GameSpec spec = build_env(task, level);
  auto g = enumerate_game(spec);
  auto expert = make_expert_policy(g);
  Dataset d = collect_dataset(spec, g, expert, p, q, episodes, augment, seed, provenance);
  save_dataset(d, out_path);
  std::cout << "wrote " << d.episodes.size() << " episodes to " << out_path << "\n";
  return 0;
}

int cmd_fit(const std::vector<std::string>& data_paths, double gamma,
            const std::string& out_path) {
  Dataset merged;
  for (const auto& path : data_paths) {
    Dataset d = load_dataset(path);
    if (merged.episodes.empty()) {
      merged = std::move(d);
    } else {
      merged.wait_augmented = merged.wait_augmented || d.wait_augmented;
      for (auto& e : d.episodes) merged.episodes.push_back(std::move(e));
    }
  }
  CriticStore c = mc_fit(merged, gamma);
  save_critic(c, out_path);
  std::cout << "fitted " << c.table.size() << " entries from " << c.episodes_fitted
            << " episodes over " << c.distinct_states() << " states -> " << out_path << "\n";
  return 0;
}

int cmd_check_theory(std::uint64_t seed, int games) {
  auto results = run_theory_checks(seed, games);
  bool all_ok = true;
  for (const auto& r : results) {
    std::cout << (r.ok ? "pass" : "FAIL") << "  " << r.name << "  (cases=" << r.games
              << ", worst=" << r.worst << (r.detail.empty() ? "" : ", " + r.detail) << ")\n";
    all_ok = all_ok && r.ok;
  }
  return all_ok ? 0 : 1;
}

int cmd_bench(const std::string& config_path, const std::string& out_dir, bool disturb) {
  BenchConfig cfg = load_bench_config(config_path);
  CriticStore critic;
  bool have_critic = false;
  if (!cfg.critic_file.empty()) {
    critic = load_critic(cfg.critic_file);
    have_critic = true;
  }
  Report rep = disturb ? inject_disturbance(cfg, have_critic ? &critic : nullptr)
                       : run_benchmark(cfg, have_critic ? &critic : nullptr);
  std::cout << rep.csv();
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    write_file(out_dir + "/report.csv", rep.csv());
    write_file(out_dir + "/traces.jsonl", rep.traces_jsonl);
  }
  return 0;
}

int cmd_mix(const std::string& llm_path, const std::string& expert_path, int percent,
            std::uint64_t seed, const std::string& out_path) {
  Dataset mixed = mix_datasets(load_dataset(llm_path), load_dataset(expert_path), percent, seed);
  save_dataset(mixed, out_path);
  std::cout << "wrote " << mixed.episodes.size() << " mixed episodes to " << out_path << "\n";
  return 0;
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"advantage-guided plan refinement toolkit"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  std::string config_path, out_path;

  auto* collect = app.add_subcommand("collect", "roll out the scripted behavior into a dataset");
  std::string task = "sweep", level = "Y1_G1", provenance = "llm_policy";
  double p = 0.0, q = 0.0, gamma = 0.95;
  int episodes = 100, percent = 100;
  bool augment = false;
  collect->add_option("--task", task);
  collect->add_option("--level", level);
  collect->add_option("--p", p, "hallucination probability");
  collect->add_option("--q", q, "off-script probability");
  collect->add_option("--episodes", episodes);
  collect->add_flag("--augment", augment, "add WAIT probes and perturbed restarts");
  collect->add_option("--seed", seed);
  collect->add_option("--provenance", provenance);
  collect->add_option("--out", out_path)->required();

  auto* fit = app.add_subcommand("fit", "fit a Monte-Carlo critic from datasets");
  std::vector<std::string> data_paths;
  fit->add_option("--data", data_paths)->required();
  fit->add_option("--gamma", gamma);
  fit->add_option("--out", out_path)->required();

  auto* check = app.add_subcommand("check-theory", "run the property suites on random games");
  int games = 100;
  check->add_option("--seed", seed);
  check->add_option("--games", games);

  auto* bench = app.add_subcommand("bench", "run a benchmark from a config file");
  bench->add_option("--config", config_path)->required();
  bench->add_option("--out", out_path, "directory for report.csv and traces.jsonl");

  auto* disturb = app.add_subcommand("disturb", "benchmark with a mid-episode silent reset");
  disturb->add_option("--config", config_path)->required();
  disturb->add_option("--out", out_path);

  auto* mix = app.add_subcommand("mix", "episode-level mix of two datasets");
  std::string llm_path, expert_path;
  mix->add_option("--llm", llm_path)->required();
  mix->add_option("--expert", expert_path)->required();
  mix->add_option("--percent", percent, "share of planner-policy episodes, 0..100");
  mix->add_option("--seed", seed);
  mix->add_option("--out", out_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (collect->parsed())
      return cmd_collect(task, level, p, q, episodes, augment, seed, provenance, out_path);
    if (fit->parsed()) return cmd_fit(data_paths, gamma, out_path);
    if (check->parsed()) return cmd_check_theory(seed, games);
    if (bench->parsed()) return cmd_bench(config_path, out_path, false);
    if (disturb->parsed()) return cmd_bench(config_path, out_path, true);
    if (mix->parsed()) return cmd_mix(llm_path, expert_path, percent, seed, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace readkit
