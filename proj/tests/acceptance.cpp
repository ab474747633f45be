// Integration gate: one pass/fail line per shipped guarantee, exit 0 only if
// every line passes. Tolerances and thresholds are pinned here on purpose;
// loosening them is a behavior change, not a flake fix.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "read/battery.hpp"
#include "read/harness.hpp"
#include "read/policy.hpp"

using namespace readkit;

namespace {

int g_failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
  std::printf("%s  criterion %2d: %s (%s)\n", ok ? "PASS" : "FAIL", id, name.c_str(),
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%g", x);
  return buf;
}

CriticStore fit_task_critic(const GameSpec& spec, const EnumeratedGame& g,
                            const ExpertPolicy& expert, double p, double q, int noisy_episodes,
                            std::uint64_t seed) {
  auto data = collect_dataset(spec, g, expert, p, q, noisy_episodes, true, seed, "llm_policy");
  auto demo = collect_dataset(spec, g, expert, 0.0, 0.0, 25, true, seed + 1, "expert");
  for (auto& e : demo.episodes) data.episodes.push_back(std::move(e));
  return mc_fit(data, spec.gamma);
}

BenchConfig base_config(const std::string& task, const std::string& level, Method m, double p,
                        double q, int n_seeds) {
  BenchConfig cfg;
  cfg.task = task;
  cfg.level = level;
  cfg.method = m;
  cfg.p = p;
  cfg.q = q;
  cfg.seeds.clear();
  for (int s = 0; s < n_seeds; ++s) cfg.seeds.push_back(static_cast<std::uint64_t>(s));
  return cfg;
}

void theory_criteria() {
  const std::uint64_t seed = 2026;
  const int games = 100;

  auto t0 = std::chrono::steady_clock::now();
  auto oracle = check_decomposition_oracle(seed, games);
  auto mc = check_decomposition_mc(seed, games);
  double elapsed = seconds_since(t0);
  report(1, "advantage decomposition: oracle <= 1e-9, exhaustive MC critic <= 1e-6",
         oracle.ok && mc.ok && oracle.worst <= 1e-9 && mc.worst <= 1e-6 && elapsed < 60.0,
         "games=" + std::to_string(games) + ", worst oracle=" + fmt(oracle.worst) +
             ", worst mc=" + fmt(mc.worst) + ", " + fmt(elapsed) + "s");

  auto wait = check_wait_identity(seed, games);
  report(2, "WAIT identity Q(s,w) = gamma V(s) <= 1e-9 on all reachable states",
         wait.ok && wait.worst <= 1e-9, "games=" + std::to_string(games) +
             ", worst=" + fmt(wait.worst));

  auto surr = check_surrogate_identities(seed, games);
  report(3, "surrogate identities: zero at mu, performance difference <= 1e-9",
         surr.ok && surr.worst <= 1e-9, "games=" + std::to_string(games) +
             ", worst=" + fmt(surr.worst));

  auto ew = check_exp_weight_improvement(seed, games);
  report(4, "exp-weight improvement for beta in {0.1,1,10}; factorization and partition <= 1e-9",
         ew.ok, "games=" + std::to_string(ew.games) + ", worst=" + fmt(ew.worst));

  auto filt = check_binary_filter_improvement(seed, games);
  // The TV battery rejection-samples games with clean advantage gaps; 20 is
  // what the draw budget reliably yields.
  auto tv = check_tv_convergence(seed, 20);
  report(5, "binary filter strictly improves; TV(beta=1e-3) <= 0.01, non-increasing in beta",
         filt.ok && tv.ok,
         filt.detail + "; " + tv.detail + ", worst tv=" + fmt(tv.worst));

  auto exact = check_critic_fidelity_exhaustive(seed, games);
  auto sampled = check_critic_fidelity_sampled(seed, 5, 20000);
  report(6, "critic fidelity: exhaustive <= 1e-6, sampled (20000 episodes) sup error <= 0.05",
         exact.ok && exact.worst <= 1e-6 && sampled.ok && sampled.worst <= 0.05,
         "worst exhaustive=" + fmt(exact.worst) + ", worst sampled=" + fmt(sampled.worst));
}

void refinement_efficacy() {
  auto t0 = std::chrono::steady_clock::now();
  const double p = 0.3, q = 0.2;
  GameSpec spec = build_env("sweep", "Y3_G3");
  auto g = enumerate_game(spec);
  auto expert = std::make_shared<const ExpertPolicy>(make_expert_policy(g));
  auto critic = fit_task_critic(spec, g, *expert, p, q, 300, 7001);

  auto run = [&](Method m) {
    auto cfg = base_config("sweep", "Y3_G3", m, p, q, 100);
    PlannerFactory factory = [&](std::uint64_t seed) {
      return std::make_unique<ScriptedPlanner>(spec, expert, ScriptedPlannerConfig{p, q, seed});
    };
    bool scored = m == Method::read_s || m == Method::read_j;
    return run_benchmark(spec, cfg, scored ? &critic : nullptr, factory);
  };
  auto read_j = run(Method::read_j);
  auto read_s = run(Method::read_s);
  auto single_j = run(Method::single_step_j);
  auto single_s = run(Method::single_step_s);
  auto pv = run(Method::physical_verification);
  double elapsed = seconds_since(t0);

  bool ok = read_j.sr_mean() >= single_j.sr_mean() && read_s.sr_mean() >= single_s.sr_mean() &&
            read_j.es_mean() < pv.es_mean() && elapsed < 300.0;
  std::ostringstream d;
  d << "sweep Y3_G3, p=0.3 q=0.2, 100 seeds: SR " << read_j.sr_mean() << "/"
    << single_j.sr_mean() << " (joint), " << read_s.sr_mean() << "/" << single_s.sr_mean()
    << " (sequential); ES " << read_j.es_mean() << " vs " << pv.es_mean()
    << " (physical verification); " << fmt(elapsed) << "s";
  report(7, "scored refinement beats single-step SR and physical-verification ES", ok, d.str());
}

void disturbance_robustness() {
  GameSpec spec = build_env("sandwich", "3");
  auto g = enumerate_game(spec);
  auto expert = std::make_shared<const ExpertPolicy>(make_expert_policy(g));
  auto critic = fit_task_critic(spec, g, *expert, 0.2, 0.3, 200, 8001);

  auto run = [&](Method m, int n) {
    auto cfg = base_config("sandwich", "3", m, 0.0, 0.0, 100);
    cfg.disturb_n = n;
    PlannerFactory factory = [&](std::uint64_t seed) {
      return std::make_unique<ScriptedPlanner>(spec, expert,
                                               ScriptedPlannerConfig{0.0, 0.0, seed});
    };
    bool scored = m == Method::read_s || m == Method::read_j;
    return run_benchmark(spec, cfg, scored ? &critic : nullptr, factory);
  };

  bool ok = true;
  std::ostringstream d;
  for (int n : {1, 2, 3}) {
    auto rs = run(Method::read_s, n);
    auto pv = run(Method::physical_verification, n);
    if (n == 3) ok = ok && rs.sr_mean() >= pv.sr_mean() + 0.2;
    d << "n=" << n << ": SR " << rs.sr_mean() << " vs " << pv.sr_mean() << "; ";
  }
  auto undisturbed = run(Method::read_s, 0);
  auto plain_cfg = base_config("sandwich", "3", Method::read_s, 0.0, 0.0, 100);
  PlannerFactory factory = [&](std::uint64_t seed) {
    return std::make_unique<ScriptedPlanner>(spec, expert, ScriptedPlannerConfig{0.0, 0.0, seed});
  };
  auto plain = run_benchmark(spec, plain_cfg, &critic, factory);
  bool identical =
      undisturbed.csv() == plain.csv() && undisturbed.traces_jsonl == plain.traces_jsonl;
  d << "n=0 bit-identical=" << (identical ? "yes" : "no");
  report(8, "silent reset: scored sequential refinement recovers, verification baseline does not",
         ok && identical, d.str());
}

void accounting_exactness() {
  // Threshold schedule example: alpha starts at 0.2, scores -1, -1, +0.5.
  GameSpec spec;
  spec.agents = {"solo"};
  spec.action_sets = {{"WAIT", "a1", "a2", "a3"}};
  spec.initial_state = "s";
  spec.terminal = [](const StateKey&) { return false; };
  spec.transition = [](const StateKey& s, const JointAction&) {
    return std::vector<Outcome>{{s, 1.0}};
  };
  spec.reward = [](const StateKey&, const JointAction&) { return 0.0; };

  CriticStore critic;
  critic.gamma = 0.95;
  critic.wait_action = {"WAIT"};
  critic.table[critic_key("s", {})] = {0.0, 1};
  critic.table[critic_key("s", {"a1"})] = {-1.0, 1};
  critic.table[critic_key("s", {"a2"})] = {-1.0, 1};
  critic.table[critic_key("s", {"a3"})] = {0.5, 1};

  StubPlanner stub({{{"a1"}, ""}, {{"a2"}, ""}, {{"a3"}, ""}});
  RefineConfig rc;
  rc.method = Method::read_s;
  rc.alpha0 = 0.2;
  rc.max_replans = 10;
  double alpha = rc.alpha0;
  StepTrace trace;
  int queries = 0;
  auto chosen = read_s_step(spec, "s", stub, critic, rc, alpha, std::nullopt, trace, queries);
  bool trace_ok = chosen == JointAction{"a3"} && queries == 3 && trace.proposals.size() == 3 &&
                  trace.proposals[2].threshold == 0.05 && trace.proposals[2].accepted &&
                  !trace.proposals[0].accepted && !trace.proposals[1].accepted;

  // Episode accounting with a fixed 5-step script on the shortest sandwich:
  // SR 1, ES 5, NQ 5, on every seed.
  GameSpec sandwich = build_sandwich({1});
  auto cfg = base_config("sandwich", "1", Method::single_step_j, 0.0, 0.0, 3);
  PlannerFactory factory = [](std::uint64_t) {
    return std::make_unique<StubPlanner>(std::vector<PlannerResponse>{
        {{"PICK(bread_slice1)", "WAIT"}, ""},
        {{"PUT(bread_slice1,stack)", "PICK(bacon)"}, ""},
        {{"WAIT", "PUT(bacon,stack)"}, ""},
        {{"PICK(bread_slice2)", "WAIT"}, ""},
        {{"PUT(bread_slice2,stack)", "WAIT"}, ""}});
  };
  auto rep = run_benchmark(sandwich, cfg, nullptr, factory);
  bool rows_ok = rep.rows.size() == 3;
  for (const auto& r : rep.rows) rows_ok = rows_ok && r.sr == 1 && r.es == 5 && r.nq == 5;

  report(9, "stub-planner accounting is exact (threshold trace; SR/ES/NQ rows)",
         trace_ok && rows_ok,
         "3 queries, accepted at threshold 0.05; rows sr=1 es=5 nq=5");
}

void optimal_trace_minima() {
  struct Anchor {
    const char* task;
    const char* level;
    int es;
  };
  const std::vector<Anchor> anchors = {
      {"sweep", "Y1_G1", 5}, {"sandwich", "1", 4}, {"sandwich", "3", 8}, {"sort", "1", 1}};
  bool ok = true;
  std::ostringstream d;
  for (const auto& a : anchors) {
    GameSpec spec = build_env(a.task, a.level);
    auto g = enumerate_game(spec);
    auto expert = std::make_shared<const ExpertPolicy>(make_expert_policy(g));
    auto critic = fit_task_critic(spec, g, *expert, 0.2, 0.3, 150, 9001);
    auto cfg = base_config(a.task, a.level, Method::read_s, 0.0, 0.0, 20);
    PlannerFactory factory = [&](std::uint64_t seed) {
      return std::make_unique<ScriptedPlanner>(spec, expert,
                                               ScriptedPlannerConfig{0.0, 0.0, seed});
    };
    auto rep = run_benchmark(spec, cfg, &critic, factory);
    bool exact = rep.sr_mean() == 1.0;
    for (const auto& r : rep.rows) exact = exact && r.es == a.es;
    ok = ok && exact;
    d << a.task << " " << a.level << " ES=" << rep.es_mean() << " (want " << a.es << "); ";
  }
  report(10, "noise-free scripted runs hit the known minimal step counts", ok, d.str());
}

void mixing_plumbing() {
  namespace fs = std::filesystem;
  GameSpec spec = build_env("sweep", "Y1_G1");
  auto g = enumerate_game(spec);
  auto expert = make_expert_policy(g);
  auto llm = collect_dataset(spec, g, expert, 0.3, 0.2, 60, true, 1101, "llm_policy");
  auto demo = collect_dataset(spec, g, expert, 0.0, 0.0, 60, true, 1102, "expert");

  auto dir = fs::temp_directory_path() / "readkit_acceptance_mix";
  fs::create_directories(dir);
  std::vector<std::string> files;
  bool runs_ok = true;
  for (int percent : {0, 50, 100}) {
    auto mixed = mix_datasets(llm, demo, percent, 5);
    auto critic = mc_fit(mixed, spec.gamma);
    auto path = (dir / ("critic_" + std::to_string(percent) + ".json")).string();
    save_critic(critic, path);
    files.push_back(path);

    auto cfg = base_config("sweep", "Y1_G1", Method::read_j, 0.2, 0.2, 5);
    auto expert_ptr = std::make_shared<const ExpertPolicy>(expert);
    PlannerFactory factory = [&](std::uint64_t seed) {
      return std::make_unique<ScriptedPlanner>(spec, expert_ptr,
                                               ScriptedPlannerConfig{0.2, 0.2, seed});
    };
    try {
      auto rep = run_benchmark(spec, cfg, &critic, factory);
      runs_ok = runs_ok && rep.rows.size() == 5;
    } catch (const std::exception&) {
      runs_ok = false;
    }
  }
  auto slurp = [](const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  bool differ = slurp(files[0]) != slurp(files[1]) && slurp(files[1]) != slurp(files[2]) &&
                slurp(files[0]) != slurp(files[2]);
  fs::remove_all(dir);
  report(11, "0/50/100% data mixes yield distinct critic files and completed runs",
         differ && runs_ok, differ ? "files differ pairwise" : "files did not differ");
}

}  // namespace

int main() {
  theory_criteria();
  refinement_efficacy();
  disturbance_robustness();
  accounting_exactness();
  optimal_trace_minima();
  mixing_plumbing();
  if (g_failures) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
