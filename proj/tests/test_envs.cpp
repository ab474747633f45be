#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "read/envs.hpp"
#include "read/planner.hpp"

using namespace readkit;

namespace {

int min_solution(const GameSpec& spec) {
  auto g = enumerate_game(spec);
  auto plan = shortest_solution(g, spec.initial_state);
  REQUIRE(plan.has_value());
  return static_cast<int>(plan->size());
}

StepResult apply(const GameSpec& spec, const StateKey& s, const JointAction& a) {
  Rng rng(0);
  return step(spec, s, a, rng);
}

}  // namespace

TEST_CASE("sweep: level geometry and minimal plans") {
  CHECK(min_solution(build_sweep({"Y1_G1"})) == 5);
  CHECK(min_solution(build_sweep({"Y1_G2"})) == 7);
  auto spec = build_sweep({"Y1_G1"});
  CHECK(spec.num_agents() == 2);
  CHECK(spec.initial_state == "TTTTTTT--");
}

TEST_CASE("sweep: sweeping needs both arms at the cube") {
  auto spec = build_sweep({"Y1_G1"});
  const StateKey start = spec.initial_state;
  // Bob alone at the cube: SWEEP is not in the menu.
  auto s = apply(spec, start, {"WAIT", "MOVE(yellow1)"}).next;
  auto menu = spec.menu(s, 1);
  CHECK(std::find(menu.begin(), menu.end(), "SWEEP(yellow1)") == menu.end());
  CHECK(spec.check(s, {"WAIT", "SWEEP(yellow1)"}).has_value());

  // Both at the cube: sweeping a target fills the dustpan and pays 1.
  s = apply(spec, s, {"MOVE(yellow1)", "WAIT"}).next;
  auto r = apply(spec, s, {"WAIT", "SWEEP(yellow1)"});
  CHECK(r.reward == 1.0);
  CHECK(r.next[0] == 'P');

  // Dumping moves it to the bin for another point and parks Alice.
  r = apply(spec, r.next, {"DUMP", "WAIT"});
  CHECK(r.reward == 1.0);
  CHECK(r.next[0] == 'B');
}

TEST_CASE("sweep: a swept distractor scores nothing") {
  auto spec = build_sweep({"Y1_G1"});
  auto s = apply(spec, spec.initial_state, {"MOVE(red1)", "MOVE(red1)"}).next;
  auto r = apply(spec, s, {"WAIT", "SWEEP(red1)"});
  CHECK(r.reward == 0.0);
  // Off the table for good; nobody can move to it again.
  CHECK(spec.check(r.next, {"MOVE(red1)", "WAIT"}).has_value());
  // Dumping afterwards still scores nothing for it.
  CHECK(apply(spec, r.next, {"DUMP", "WAIT"}).reward == 0.0);
}

TEST_CASE("sweep: a simultaneous departure cancels the sweep") {
  auto spec = build_sweep({"Y1_G1"});
  auto s = apply(spec, spec.initial_state, {"MOVE(yellow1)", "MOVE(yellow1)"}).next;
  auto r = apply(spec, s, {"MOVE(green1)", "SWEEP(yellow1)"});
  CHECK(r.reward == 0.0);
  CHECK(r.next[0] == 'T');  // still on the table
}

TEST_CASE("all-wait is an exact no-op in every environment") {
  for (auto [task, level] : std::vector<std::pair<std::string, std::string>>{
           {"sweep", "Y1_G1"},
           {"sandwich", "2"},
           {"sort", "3"},
           {"kitchen", "cramped_room"}}) {
    auto spec = build_env(task, level);
    auto r = apply(spec, spec.initial_state, spec.all_wait());
    CHECK(r.next == spec.initial_state);
    CHECK(r.reward == 0.0);
  }
}

TEST_CASE("sandwich: recipe lengths and pipeline minima per level") {
  CHECK(min_solution(build_sandwich({1})) == 4);
  CHECK(min_solution(build_sandwich({2})) == 6);
  CHECK(min_solution(build_sandwich({3})) == 8);
  CHECK(min_solution(build_sandwich({4})) == 10);
}

TEST_CASE("sandwich: sides are exclusive and wrong placements are inert") {
  auto spec = build_sandwich({1});
  // Dave's action set has no PICK for Chad's ingredients.
  for (const auto& a : spec.action_sets[1]) CHECK(a.find("bread_slice1") == std::string::npos);

  auto s = apply(spec, spec.initial_state, {"WAIT", "PICK(bacon)"}).next;
  // bacon is recipe item 2, the stack expects item 1: putting it is inert.
  auto r = apply(spec, s, {"WAIT", "PUT(bacon,stack)"});
  CHECK(r.reward == 0.0);
  CHECK(r.next == s);
  // Returning it to the table frees the hand.
  CHECK(apply(spec, s, {"WAIT", "PUT(bacon,table)"}).next == spec.initial_state);
  // The right ingredient lands and pays.
  s = apply(spec, spec.initial_state, {"PICK(bread_slice1)", "WAIT"}).next;
  r = apply(spec, s, {"PUT(bread_slice1,stack)", "WAIT"});
  CHECK(r.reward == 1.0);
  CHECK(r.next[0] == '1');
}

TEST_CASE("sandwich: stacked ingredients cannot be picked again") {
  auto spec = build_sandwich({1});
  auto s = apply(spec, spec.initial_state, {"PICK(bread_slice1)", "WAIT"}).next;
  s = apply(spec, s, {"PUT(bread_slice1,stack)", "WAIT"}).next;
  CHECK(spec.check(s, {"PICK(bread_slice1)", "WAIT"}).has_value());
}

TEST_CASE("sort: level 1 solves in one joint step") {
  auto spec = build_sort({1});
  CHECK(min_solution(spec) == 1);
  auto r = apply(spec, spec.initial_state,
                 {"PICK_PLACE(blue,2)", "PICK_PLACE(pink,4)", "PICK_PLACE(yellow,6)"});
  CHECK(r.reward == 3.0);
  CHECK(r.done);
}

TEST_CASE("sort: joint conflicts are invalid even when each half is legal") {
  auto spec = build_sort({2});  // blue on 3, pink on 5, yellow on 1
  // Same cube grabbed twice; each grab alone is in its agent's menu.
  auto err = spec.check(spec.initial_state,
                        {"WAIT", "PICK_PLACE(pink,4)", "PICK_PLACE(pink,7)"});
  REQUIRE(err.has_value());
  CHECK(err->reason.find("same cube") != std::string::npos);
  // Two cubes onto one panel.
  auto spec4 = build_sort({4});  // blue on 7, pink on 1, yellow on 3
  err = spec4.check(spec4.initial_state,
                    {"PICK_PLACE(yellow,3)", "WAIT", "WAIT"});
  CHECK(err.has_value());  // yellow already sits on 3
}

TEST_CASE("sort: reach limits show up in the menus") {
  auto spec = build_sort({2});  // blue on panel 3
  auto menu0 = spec.menu(spec.initial_state, 0);  // panels 1..3
  CHECK(std::find(menu0.begin(), menu0.end(), "PICK_PLACE(blue,2)") != menu0.end());
  // Chad cannot reach panel 3, so blue is not available to him.
  auto menu2 = spec.menu(spec.initial_state, 2);
  for (const auto& a : menu2) CHECK(a.find("blue") == std::string::npos);
  CHECK(min_solution(build_sort({5})) >= 3);
}

TEST_CASE("kitchen: embedded layouts match the data files") {
  for (const std::string name : {"cramped_room", "forced_coordination"}) {
    auto file = load_layout_file(std::string(READ_DATA_DIR) + "/" + name + ".layout");
    CHECK(file == kitchen_layout_text(name));
  }
  CHECK_THROWS_AS(kitchen_layout_text("open_kitchen"), GameError);
}

TEST_CASE("kitchen: a delivery is reachable inside the step limit") {
  for (const std::string name : {"cramped_room", "forced_coordination"}) {
    auto spec = build_kitchen({name});
    CHECK(spec.wait_action == "stay");
    CHECK(min_solution(spec) <= spec.horizon);
  }
}

TEST_CASE("kitchen: walking into a wall only turns the agent") {
  auto spec = build_kitchen({"cramped_room"});
  // Agent 1 starts at row 1 col 1 facing south; north of it is a wall.
  auto r = apply(spec, spec.initial_state, {"north", "stay"});
  CHECK(r.next.substr(0, 2) == spec.initial_state.substr(0, 2));  // same cell
  CHECK(r.next[2] == 'N');                                        // new facing
  CHECK(r.next.substr(4) == spec.initial_state.substr(4));        // agent 2 untouched
}

TEST_CASE("kitchen: onions cook into a deliverable soup") {
  auto spec = build_kitchen({"cramped_room"});
  // Agent 1 faces west onto the onion source and picks one up.
  auto s = apply(spec, spec.initial_state, {"west", "stay"}).next;
  s = apply(spec, s, {"interact", "stay"}).next;
  CHECK(s[3] == 'o');
  // Second interact does nothing: the hand is full.
  CHECK(apply(spec, s, {"interact", "stay"}).next == s);
}

TEST_CASE("reachable state spaces stay within the enumeration cap") {
  for (auto [task, level] : std::vector<std::pair<std::string, std::string>>{
           {"sweep", "Y2_G2"},
           {"sandwich", "4"},
           {"sort", "5"},
           {"kitchen", "forced_coordination"}}) {
    auto g = enumerate_game(build_env(task, level));
    CHECK(g.states.size() <= 200000);
    CHECK(g.states.size() > 1);
  }
}

TEST_CASE("unknown tasks and levels are rejected") {
  CHECK_THROWS_AS(build_env("warehouse", "1"), GameError);
  CHECK_THROWS_AS(build_sweep({"Y9_G9"}), GameError);
  CHECK_THROWS_AS(build_sandwich({0}), GameError);
  CHECK_THROWS_AS(build_sort({6}), GameError);
}
