#pragma once

#include <string>
#include <vector>

#include "read/game.hpp"

namespace readkit {

struct SweepConfig {
  std::string level;  // Y1_G1 | Y1_G2 | Y2_G2 | Y2_G3 | Y3_G3
};

struct SandwichConfig {
  int level = 1;  // 1..4, recipe lengths 3/5/7/9
};

struct SortConfig {
  int level = 1;  // 1..5 by total cube-to-target distance
};

struct KitchenConfig {
  std::string layout;  // cramped_room | forced_coordination
};

// Two arms sweep colored cubes into a dustpan and dump them into a bin.
// Alice: MOVE(cube) | DUMP | WAIT. Bob: MOVE(cube) | SWEEP(cube) | WAIT.
// SWEEP(c) requires both agents at c and is effective only if Alice's
// simultaneous action keeps her there (WAIT or MOVE(c)).
GameSpec build_sweep(const SweepConfig& cfg);

// Two arms stack a recipe; ingredients alternate table sides, so every item
// needs the matching arm and the pipeline takes recipe length + 1 steps.
GameSpec build_sandwich(const SandwichConfig& cfg);

// Three arms with overlapping panel reaches relay cubes to target panels.
GameSpec build_sort(const SortConfig& cfg);

// Grid cooking: fetch onions, fill the pot (capacity 2), start cooking
// (2 timesteps), plate with a dish, deliver one soup. The wait action is
// "stay"; time (the cook timer) advances only on steps where at least one
// agent does something, so the all-stay step is an exact no-op.
GameSpec build_kitchen(const KitchenConfig& cfg);

GameSpec build_env(const std::string& task, const std::string& level);

// Layout text for the two kitchen layouts. Legend:
//   X wall   . floor   O onion source   D dish source   P pot
//   S serving counter  C shared counter (storage)  1/2 agent starts
const std::string& kitchen_layout_text(const std::string& layout);
std::string load_layout_file(const std::string& path);

}  // namespace readkit
