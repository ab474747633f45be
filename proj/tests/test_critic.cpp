#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "read/battery.hpp"
#include "read/critic.hpp"
#include "read/policy.hpp"

using namespace readkit;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Dataset tiny_dataset() {
  Dataset d;
  d.wait_action = {"WAIT", "WAIT"};
  Episode e1;
  e1.steps.push_back({"s0", {"x", "y"}, 1.0, "s1"});
  e1.steps.push_back({"s1", {"x", "y"}, 2.0, "s2"});
  Episode e2;
  e2.steps.push_back({"s0", {"x", "z"}, 0.0, "s2"});
  d.episodes = {e1, e2};
  return d;
}

}  // namespace

TEST_CASE("prefix keys distinguish prefix lengths and components") {
  CHECK(critic_key("s", {}) != critic_key("s", {"WAIT"}));
  CHECK(critic_key("s", {"a", "b"}) != critic_key("s", {"ab"}));
  CHECK(critic_key("s", {"a"}) == critic_key("s", {"a"}));
}

TEST_CASE("mc_fit averages discounted returns per prefix") {
  auto c = mc_fit(tiny_dataset(), 0.5);
  // Episode 1 return from s0: 1 + 0.5 * 2 = 2; episode 2: 0.
  CHECK(c.local_q("s0", {}).value() == doctest::Approx(1.0));          // mean of 2 and 0
  CHECK(c.local_q("s0", {"x"}).value() == doctest::Approx(1.0));       // both episodes
  CHECK(c.local_q("s0", {"x", "y"}).value() == doctest::Approx(2.0));  // episode 1 only
  CHECK(c.local_q("s0", {"x", "z"}).value() == doctest::Approx(0.0));
  CHECK(c.local_q("s1", {}).value() == doctest::Approx(2.0));
  CHECK_FALSE(c.local_q("s0", {"q"}).has_value());
  CHECK(c.distinct_states() == 2);
  CHECK(c.episodes_fitted == 2);
}

TEST_CASE("first visit: a revisited state is credited once per episode") {
  Dataset d;
  d.wait_action = {"W"};
  Episode e;
  e.steps.push_back({"s0", {"a"}, 0.0, "s0"});
  e.steps.push_back({"s0", {"a"}, 1.0, "s1"});
  d.episodes = {e};
  auto c = mc_fit(d, 0.5);
  // Only the first visit counts: return 0 + 0.5 * 1.
  CHECK(c.local_q("s0", {}).value() == doctest::Approx(0.5));
  CHECK(c.local_q("s0", {"a"}).value() == doctest::Approx(0.5));
}

TEST_CASE("all-WAIT steps only feed the full joint WAIT estimate") {
  Dataset d;
  d.wait_action = {"WAIT", "WAIT"};
  d.wait_augmented = true;
  Episode probe;
  probe.steps.push_back({"s0", {"WAIT", "WAIT"}, 0.0, "s0"});
  probe.steps.push_back({"s0", {"x", "y"}, 4.0, "s1"});
  d.episodes = {probe};
  auto c = mc_fit(d, 0.5);
  // The probe step pins Q(s0, w) = gamma * (return from the continuation).
  CHECK(c.local_q("s0", {"WAIT", "WAIT"}).value() == doctest::Approx(0.5 * 4.0));
  // It does not leak into V(s0) or the single-agent WAIT prefix.
  CHECK(c.local_q("s0", {}).value() == doctest::Approx(4.0));
  CHECK_FALSE(c.local_q("s0", {"WAIT"}).has_value());
}

TEST_CASE("scores follow the two scoring rules") {
  CriticStore c;
  c.gamma = 0.8;
  c.wait_action = {"WAIT", "WAIT"};
  c.table[critic_key("s", {})] = {10.0, 1};
  c.table[critic_key("s", {"a"})] = {12.5, 1};
  c.table[critic_key("s", {"a", "b"})] = {13.0, 1};
  c.table[critic_key("s", {"WAIT", "WAIT"})] = {8.0, 1};

  CHECK(c.score_read_s("s", {}, "a").value() == doctest::Approx(2.5));
  CHECK(c.score_read_s("s", {"a"}, "b").value() == doctest::Approx(0.5));
  CHECK_FALSE(c.score_read_s("s", {}, "zzz").has_value());
  CHECK(c.score_read_j("s", {"a", "b"}).value() == doctest::Approx(13.0 - 8.0 / 0.8));
  CHECK_FALSE(c.score_read_j("s", {"a", "zzz"}).has_value());

  SUBCASE("uncovered WAIT baseline") {
    c.table.erase(critic_key("s", {"WAIT", "WAIT"}));
    CHECK_FALSE(c.score_read_j("s", {"a", "b"}).has_value());
    c.wait_zero_default = true;
    CHECK(c.score_read_j("s", {"a", "b"}).value() == doctest::Approx(13.0));
  }
}

TEST_CASE("exhaustive critic reproduces the exact local Q values") {
  Rng rng(101);
  for (int i = 0; i < 10; ++i) {
    auto spec = make_layered_game(rng);
    auto g = enumerate_game(spec);
    auto mu = layered_support_policy(g, rng, 2);
    auto vals = exact_values(g, mu);
    auto c = mc_fit(exhaustive_dataset(g, mu), spec.gamma);
    for (const auto& s : g.states) {
      if (g.terminal[static_cast<std::size_t>(g.index.at(s))]) continue;
      CHECK(c.local_q(s, {}).value() ==
            doctest::Approx(oracle_local_q(g, vals, mu, s, {})).epsilon(1e-9));
      for (const auto& [a, p] : mu.at(s)) {
        if (p <= 0.0) continue;
        std::vector<std::string> prefix;
        for (const auto& component : a) {
          prefix.push_back(component);
          CHECK(c.local_q(s, prefix).value() ==
                doctest::Approx(oracle_local_q(g, vals, mu, s, prefix)).epsilon(1e-9));
        }
      }
      CHECK(c.local_q(s, spec.all_wait()).value() ==
            doctest::Approx(spec.gamma * vals.value(s)).epsilon(1e-9));
    }
  }
}

TEST_CASE("critic files round-trip losslessly and deterministically") {
  auto c = mc_fit(tiny_dataset(), 0.9);
  c.wait_zero_default = true;
  const std::string path = "test_critic_roundtrip.json";
  save_critic(c, path);
  auto loaded = load_critic(path);
  CHECK(loaded.gamma == c.gamma);
  CHECK(loaded.wait_zero_default == c.wait_zero_default);
  CHECK(loaded.episodes_fitted == c.episodes_fitted);
  CHECK(loaded.table.size() == c.table.size());
  for (const auto& [k, v] : c.table) {
    CHECK(loaded.table.at(k).mean == v.mean);
    CHECK(loaded.table.at(k).count == v.count);
  }
  std::string first = slurp(path);
  save_critic(loaded, path);
  CHECK(slurp(path) == first);
  std::remove(path.c_str());
}

TEST_CASE("dataset files round-trip") {
  auto d = tiny_dataset();
  d.wait_augmented = true;
  d.episodes[0].provenance = "llm_policy";
  const std::string path = "test_dataset_roundtrip.jsonl";
  save_dataset(d, path);
  auto loaded = load_dataset(path);
  CHECK(loaded.wait_action == d.wait_action);
  CHECK(loaded.wait_augmented);
  REQUIRE(loaded.episodes.size() == d.episodes.size());
  CHECK(loaded.episodes[0].provenance == "llm_policy");
  CHECK(loaded.episodes[0].steps[1].reward == 2.0);
  CHECK(loaded.episodes[0].steps[1].action == JointAction{"x", "y"});
  std::remove(path.c_str());
}
