#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "read/critic.hpp"
#include "read/envs.hpp"
#include "read/planner.hpp"
#include "read/refine.hpp"

namespace readkit {

struct EpisodeMetrics {
  int sr = 0;  // 0/1 per episode
  int es = 0;  // executed environment interactions
  int nq = 0;  // planner queries
};

struct Report {
  std::vector<std::uint64_t> seeds;
  std::vector<EpisodeMetrics> rows;      // one per seed, in seed order
  std::string traces_jsonl;              // one line per episode

  double sr_mean() const;
  double sr_se() const;
  double es_mean() const;
  double es_se() const;
  double nq_mean() const;
  double nq_se() const;

  // Header sr,es,nq; one row per seed; final aggregate row mean±stderr with
  // fixed 6-decimal formatting (byte-identical across runs and platforms).
  std::string csv() const;
};

struct BenchConfig {
  std::string task = "sweep";
  std::string level = "Y1_G1";
  Method method = Method::read_j;
  double p = 0.0, q = 0.0;     // scripted-planner noise
  double alpha0 = 0.05;
  int max_replans = -1;        // -1: use the game's replan cap
  int step_limit = -1;         // -1: use the game's horizon
  std::vector<std::uint64_t> seeds;  // default 0..9
  int disturb_n = 0;
  bool keep_history = true;
  std::string critic_file;
  std::string planner = "scripted";  // scripted | remote
  std::string remote_url;            // or the READ_PLANNER_URL env variable
};

// Documented key=value config text ('#' comments, seeds comma-separated).
BenchConfig parse_bench_config(const std::string& text);
BenchConfig load_bench_config(const std::string& path);

using PlannerFactory = std::function<std::unique_ptr<Planner>(std::uint64_t seed)>;

// Runs one episode per seed (concurrently; rows merge in seed order).
Report run_benchmark(const GameSpec& spec, const BenchConfig& cfg, const CriticStore* critic,
                     const PlannerFactory& make_planner);

// Convenience: builds the environment, the expert script and scripted (or
// remote) planners from the config.
Report run_benchmark(const BenchConfig& cfg, const CriticStore* critic);

// Same contract with the disturbance step taken from cfg.disturb_n; n >= 1
// must be below the minimal solution length.
Report inject_disturbance(const BenchConfig& cfg, const CriticStore* critic);

// Rolls out the scripted behavior (expert script with noise p/q; illegal
// proposals execute as WAIT) and optionally augments with WAIT probes and
// perturbed restarts.
Dataset collect_dataset(const GameSpec& spec, const EnumeratedGame& g, const ExpertPolicy& expert,
                        double p, double q, int episodes, bool augment, std::uint64_t seed,
                        const std::string& provenance);

// Episode-level subsample at llm_percent : (100 - llm_percent). The total is
// the smaller source's episode count; fails when a needed source is empty.
Dataset mix_datasets(const Dataset& d_llm, const Dataset& d_expert, int llm_percent,
                     std::uint64_t seed);

int run_cli(int argc, char** argv);

}  // namespace readkit
