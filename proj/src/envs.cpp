#include "read/envs.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <memory>
#include <sstream>

namespace readkit {

namespace {

// "KIND(arg1,arg2)" -> kind + args
struct ParsedAction {
  std::string kind;
  std::vector<std::string> args;
};

ParsedAction parse_action(const std::string& a) {
  ParsedAction p;
  auto open = a.find('(');
  if (open == std::string::npos) {
    p.kind = a;
    return p;
  }
  p.kind = a.substr(0, open);
  auto close = a.rfind(')');
  std::string inner = a.substr(open + 1, close == std::string::npos ? std::string::npos
                                                                    : close - open - 1);
  std::stringstream ss(inner);
  std::string tok;
  while (std::getline(ss, tok, ',')) p.args.push_back(tok);
  return p;
}

// ---------------- Sweep ----------------

struct SweepModel {
  std::vector<std::string> names;
  std::vector<bool> target;
  int n = 0;

  int idx(const std::string& name) const {
    for (int i = 0; i < n; ++i)
      if (names[static_cast<std::size_t>(i)] == name) return i;
    return -1;
  }

  // state: n status chars (T table, P dustpan, B bin, O swept away) followed
  // by Alice's and Bob's positions ('-' or '0'+cube index).
  char status(const StateKey& s, int c) const { return s[static_cast<std::size_t>(c)]; }
  char apos(const StateKey& s) const { return s[static_cast<std::size_t>(n)]; }
  char bpos(const StateKey& s) const { return s[static_cast<std::size_t>(n) + 1]; }

  std::pair<StateKey, double> apply(const StateKey& s, const JointAction& a) const {
    StateKey ns = s;
    double reward = 0.0;
    auto alice = parse_action(a[0]);
    auto bob = parse_action(a[1]);

    if (bob.kind == "SWEEP") {
      int c = idx(bob.args[0]);
      bool alice_stays = alice.kind == "WAIT" ||
                         (alice.kind == "MOVE" && idx(alice.args[0]) == c);
      if (alice_stays) {
        ns[static_cast<std::size_t>(c)] = target[static_cast<std::size_t>(c)] ? 'P' : 'O';
        if (target[static_cast<std::size_t>(c)]) reward += 1.0;
      }
    }
    if (alice.kind == "DUMP") {
      for (int c = 0; c < n; ++c)
        if (ns[static_cast<std::size_t>(c)] == 'P') {
          ns[static_cast<std::size_t>(c)] = 'B';
          reward += 1.0;
        }
    }
    // Positions.
    char ap = apos(s), bp = bpos(s);
    if (alice.kind == "MOVE") ap = static_cast<char>('0' + idx(alice.args[0]));
    if (alice.kind == "DUMP") ap = '-';
    if (bob.kind == "MOVE" || bob.kind == "SWEEP")
      bp = static_cast<char>('0' + idx(bob.args[0]));
    // An agent standing at a cube that just left the table ends up nowhere.
    auto on_table = [&](char pos) {
      return pos != '-' && ns[static_cast<std::size_t>(pos - '0')] == 'T';
    };
    if (!on_table(ap)) ap = '-';
    if (!on_table(bp)) bp = '-';
    ns[static_cast<std::size_t>(n)] = ap;
    ns[static_cast<std::size_t>(n) + 1] = bp;
    return {ns, reward};
  }
};

}  // namespace

GameSpec build_sweep(const SweepConfig& cfg) {
  int yellows, greens, total;
  if (cfg.level == "Y1_G1") {
    yellows = 1, greens = 1, total = 7;
  } else if (cfg.level == "Y1_G2") {
    yellows = 1, greens = 2, total = 7;
  } else if (cfg.level == "Y2_G2") {
    yellows = 2, greens = 2, total = 7;
  } else if (cfg.level == "Y2_G3") {
    yellows = 2, greens = 3, total = 9;
  } else if (cfg.level == "Y3_G3") {
    yellows = 3, greens = 3, total = 9;
  } else {
    throw GameError("unknown sweep level: " + cfg.level);
  }
  static const std::array<const char*, 5> kFillers = {"red1", "blue1", "purple1", "orange1",
                                                      "brown1"};
  auto m = std::make_shared<SweepModel>();
  for (int i = 0; i < yellows; ++i) {
    m->names.push_back("yellow" + std::to_string(i + 1));
    m->target.push_back(true);
  }
  for (int i = 0; i < greens; ++i) {
    m->names.push_back("green" + std::to_string(i + 1));
    m->target.push_back(true);
  }
  for (int i = 0; i < total - yellows - greens; ++i) {
    m->names.push_back(kFillers[static_cast<std::size_t>(i)]);
    m->target.push_back(false);
  }
  m->n = total;

  GameSpec spec;
  spec.name = "sweep_" + cfg.level;
  spec.agents = {"Alice", "Bob"};
  std::vector<std::string> alice{"WAIT", "DUMP"}, bob{"WAIT"};
  for (const auto& c : m->names) {
    alice.push_back("MOVE(" + c + ")");
    bob.push_back("MOVE(" + c + ")");
    bob.push_back("SWEEP(" + c + ")");
  }
  spec.action_sets = {alice, bob};
  spec.initial_state = std::string(static_cast<std::size_t>(total), 'T') + "--";
  spec.horizon = 15;
  spec.replan_cap = 15;

  spec.terminal = [m](const StateKey& s) {
    for (int c = 0; c < m->n; ++c)
      if (m->target[static_cast<std::size_t>(c)] && m->status(s, c) != 'B') return false;
    return true;
  };
  spec.legal_actions = [m, spec_sets = spec.action_sets](const StateKey& s, int agent) {
    std::vector<std::string> menu;
    for (const auto& a : spec_sets[static_cast<std::size_t>(agent)]) {
      auto p = parse_action(a);
      if (p.kind == "WAIT" || p.kind == "DUMP") {
        menu.push_back(a);
        continue;
      }
      int c = m->idx(p.args[0]);
      if (m->status(s, c) != 'T') continue;
      if (p.kind == "SWEEP" &&
          !(m->apos(s) == '0' + c && m->bpos(s) == '0' + c))
        continue;
      menu.push_back(a);
    }
    return menu;
  };
  spec.transition = [m](const StateKey& s, const JointAction& a) {
    return std::vector<Outcome>{{m->apply(s, a).first, 1.0}};
  };
  spec.reward = [m](const StateKey& s, const JointAction& a) { return m->apply(s, a).second; };
  return spec;
}

// ---------------- Sandwich ----------------

namespace {
struct SandwichModel {
  std::vector<std::string> recipe;
  int len = 0;

  int idx(const std::string& f) const {
    for (int i = 0; i < len; ++i)
      if (recipe[static_cast<std::size_t>(i)] == f) return i;
    return -1;
  }
  // Even recipe indices sit on Chad's (right) side, odd on Dave's (left).
  int side(int food) const { return food % 2; }  // 0 = Chad, 1 = Dave

  // state: stack height, Chad's hand, Dave's hand ('-' or '0'+food index).
  int height(const StateKey& s) const { return s[0] - '0'; }
  char hand(const StateKey& s, int agent) const { return s[static_cast<std::size_t>(agent) + 1]; }

  std::pair<StateKey, double> apply(const StateKey& s, const JointAction& a) const {
    StateKey ns = s;
    double reward = 0.0;
    const int h = height(s);
    for (int agent = 0; agent < 2; ++agent) {
      auto p = parse_action(a[static_cast<std::size_t>(agent)]);
      if (p.kind == "WAIT") continue;
      int f = idx(p.args[0]);
      if (p.kind == "PICK") {
        ns[static_cast<std::size_t>(agent) + 1] = static_cast<char>('0' + f);
      } else if (p.kind == "PUT" && p.args[1] == "table") {
        ns[static_cast<std::size_t>(agent) + 1] = '-';
      } else if (p.kind == "PUT" && p.args[1] == "stack") {
        if (f == h) {  // next recipe item, judged against the pre-step stack
          ns[0] = static_cast<char>('0' + h + 1);
          ns[static_cast<std::size_t>(agent) + 1] = '-';
          reward += 1.0;
        }
        // wrong item: legal but inert, stays in hand
      }
    }
    return {ns, reward};
  }
};
}  // namespace

GameSpec build_sandwich(const SandwichConfig& cfg) {
  static const std::vector<std::string> kItems = {
      "bread_slice1", "bacon", "cheese", "tomato", "cucumber",
      "ham",          "beef_patty", "onion", "bread_slice2"};
  int len;
  switch (cfg.level) {
    case 1: len = 3; break;
    case 2: len = 5; break;
    case 3: len = 7; break;
    case 4: len = 9; break;
    default: throw GameError("unknown sandwich level: " + std::to_string(cfg.level));
  }
  auto m = std::make_shared<SandwichModel>();
  for (int i = 0; i < len - 1; ++i) m->recipe.push_back(kItems[static_cast<std::size_t>(i)]);
  m->recipe.push_back(kItems.back());  // a sandwich ends in bread
  m->len = len;

  GameSpec spec;
  spec.name = "sandwich_recipe" + std::to_string(cfg.level);
  spec.agents = {"Chad", "Dave"};
  spec.horizon = 15;
  spec.replan_cap = 15;
  for (int agent = 0; agent < 2; ++agent) {
    std::vector<std::string> acts{"WAIT"};
    for (int f = 0; f < len; ++f) {
      if (m->side(f) != agent) continue;
      const auto& name = m->recipe[static_cast<std::size_t>(f)];
      acts.push_back("PICK(" + name + ")");
      acts.push_back("PUT(" + name + ",stack)");
      acts.push_back("PUT(" + name + ",table)");
    }
    spec.action_sets.push_back(std::move(acts));
  }
  spec.initial_state = "0--";
  spec.terminal = [m](const StateKey& s) { return m->height(s) == m->len; };
  spec.legal_actions = [m, sets = spec.action_sets](const StateKey& s, int agent) {
    std::vector<std::string> menu;
    const char hand = m->hand(s, agent);
    for (const auto& a : sets[static_cast<std::size_t>(agent)]) {
      auto p = parse_action(a);
      if (p.kind == "WAIT") {
        menu.push_back(a);
        continue;
      }
      int f = m->idx(p.args[0]);
      if (p.kind == "PICK") {
        if (hand == '-' && f >= m->height(s)) menu.push_back(a);
      } else {  // PUT needs the item in hand
        if (hand == '0' + f) menu.push_back(a);
      }
    }
    return menu;
  };
  spec.transition = [m](const StateKey& s, const JointAction& a) {
    return std::vector<Outcome>{{m->apply(s, a).first, 1.0}};
  };
  spec.reward = [m](const StateKey& s, const JointAction& a) { return m->apply(s, a).second; };
  return spec;
}

// ---------------- Sort ----------------

namespace {
struct SortModel {
  static constexpr std::array<const char*, 3> kCubes = {"blue", "pink", "yellow"};
  static constexpr std::array<int, 3> kTargets = {2, 4, 6};
  // Alice reaches panels 1-3, Bob 3-5, Chad 5-7.
  static constexpr std::array<std::array<int, 2>, 3> kReach = {{{1, 3}, {3, 5}, {5, 7}}};

  int cube_idx(const std::string& c) const {
    for (int i = 0; i < 3; ++i)
      if (kCubes[static_cast<std::size_t>(i)] == c) return i;
    return -1;
  }
  int panel(const StateKey& s, int cube) const { return s[static_cast<std::size_t>(cube)] - '0'; }
  static bool in_reach(int agent, int p) {
    return p >= kReach[static_cast<std::size_t>(agent)][0] &&
           p <= kReach[static_cast<std::size_t>(agent)][1];
  }

  std::pair<StateKey, double> apply(const StateKey& s, const JointAction& a) const {
    StateKey ns = s;
    double reward = 0.0;
    for (const auto& act : a) {
      auto p = parse_action(act);
      if (p.kind == "WAIT") continue;
      int c = cube_idx(p.args[0]);
      int dest = std::stoi(p.args[1]);
      ns[static_cast<std::size_t>(c)] = static_cast<char>('0' + dest);
      if (dest == kTargets[static_cast<std::size_t>(c)]) reward += 1.0;
    }
    return {ns, reward};
  }
};
}  // namespace

GameSpec build_sort(const SortConfig& cfg) {
  static const std::array<std::array<int, 3>, 5> kInitial = {{
      {1, 3, 5},  // level 1: every cube one legal move from its target
      {3, 5, 1},
      {5, 7, 3},
      {7, 1, 3},
      {7, 3, 1},  // level 5: blue and yellow both need two-agent relays
  }};
  if (cfg.level < 1 || cfg.level > 5)
    throw GameError("unknown sort level: " + std::to_string(cfg.level));
  auto m = std::make_shared<SortModel>();

  GameSpec spec;
  spec.name = "sort_" + std::to_string(cfg.level);
  spec.agents = {"Alice", "Bob", "Chad"};
  spec.horizon = 15;
  spec.replan_cap = 10;
  for (int agent = 0; agent < 3; ++agent) {
    std::vector<std::string> acts{"WAIT"};
    for (int c = 0; c < 3; ++c)
      for (int p = SortModel::kReach[static_cast<std::size_t>(agent)][0];
           p <= SortModel::kReach[static_cast<std::size_t>(agent)][1]; ++p)
        acts.push_back(std::string("PICK_PLACE(") + SortModel::kCubes[static_cast<std::size_t>(c)] +
                       "," + std::to_string(p) + ")");
    spec.action_sets.push_back(std::move(acts));
  }
  {
    std::string init;
    for (int c = 0; c < 3; ++c)
      init += static_cast<char>('0' + kInitial[static_cast<std::size_t>(cfg.level - 1)]
                                              [static_cast<std::size_t>(c)]);
    spec.initial_state = init;
  }
  spec.terminal = [m](const StateKey& s) {
    for (int c = 0; c < 3; ++c)
      if (m->panel(s, c) != SortModel::kTargets[static_cast<std::size_t>(c)]) return false;
    return true;
  };
  spec.legal_actions = [m, sets = spec.action_sets](const StateKey& s, int agent) {
    std::vector<std::string> menu;
    for (const auto& a : sets[static_cast<std::size_t>(agent)]) {
      auto p = parse_action(a);
      if (p.kind == "WAIT") {
        menu.push_back(a);
        continue;
      }
      int c = m->cube_idx(p.args[0]);
      int dest = std::stoi(p.args[1]);
      int cur = m->panel(s, c);
      if (!SortModel::in_reach(agent, cur) || dest == cur) continue;
      if (cur == SortModel::kTargets[static_cast<std::size_t>(c)]) continue;  // placed cubes stay
      bool occupied = false, others_target = false;
      for (int c2 = 0; c2 < 3; ++c2) {
        if (c2 != c && m->panel(s, c2) == dest) occupied = true;
        if (c2 != c && SortModel::kTargets[static_cast<std::size_t>(c2)] == dest)
          others_target = true;
      }
      if (occupied || others_target) continue;
      menu.push_back(a);
    }
    return menu;
  };
  spec.validate = [m](const StateKey& s, const JointAction& a) -> std::optional<ActionError> {
    for (int i = 0; i < 3; ++i) {
      auto pi = parse_action(a[static_cast<std::size_t>(i)]);
      if (pi.kind == "WAIT") continue;
      for (int j = 0; j < i; ++j) {
        auto pj = parse_action(a[static_cast<std::size_t>(j)]);
        if (pj.kind == "WAIT") continue;
        if (pi.args[0] == pj.args[0])
          return ActionError{i, a[static_cast<std::size_t>(i)],
                             "two agents grabbed the same cube"};
        if (pi.args[1] == pj.args[1])
          return ActionError{i, a[static_cast<std::size_t>(i)],
                             "two agents placed onto the same panel"};
      }
    }
    return std::nullopt;
  };
  spec.transition = [m](const StateKey& s, const JointAction& a) {
    return std::vector<Outcome>{{m->apply(s, a).first, 1.0}};
  };
  spec.reward = [m](const StateKey& s, const JointAction& a) { return m->apply(s, a).second; };
  return spec;
}

// ---------------- Kitchen ----------------

namespace {

const std::string kCrampedLayout =
    "XXPXX\n"
    "O1.2O\n"
    "X...X\n"
    "XDXSX\n";

const std::string kForcedLayout =
    "XXXXX\n"
    "O1C2P\n"
    "D.C.S\n"
    "XXXXX\n";

struct KitchenModel {
  std::vector<std::string> grid;  // layout with agent starts replaced by floor
  int rows = 0, cols = 0;
  std::array<std::pair<int, int>, 2> start;
  std::vector<std::pair<int, int>> counters;  // 'C' cells in row-major order
  int horizon = 20;

  char cell(int r, int c) const {
    if (r < 0 || r >= rows || c < 0 || c >= cols) return 'X';
    return grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  }
  bool walkable(int r, int c) const { return cell(r, c) == '.'; }

  int counter_index(int r, int c) const {
    for (std::size_t i = 0; i < counters.size(); ++i)
      if (counters[i] == std::make_pair(r, c)) return static_cast<int>(i);
    return -1;
  }

  // state: per agent row,col,orientation,held (4 chars), pot phase char,
  // one char per counter. "DONE" is the absorbing success state.
  struct Decoded {
    std::array<int, 2> r, c;
    std::array<char, 2> ori, held;
    char pot;
    std::string ctr;
  };

  Decoded decode(const StateKey& s) const {
    Decoded d;
    for (int i = 0; i < 2; ++i) {
      auto o = static_cast<std::size_t>(i) * 4;
      d.r[static_cast<std::size_t>(i)] = s[o] - '0';
      d.c[static_cast<std::size_t>(i)] = s[o + 1] - '0';
      d.ori[static_cast<std::size_t>(i)] = s[o + 2];
      d.held[static_cast<std::size_t>(i)] = s[o + 3];
    }
    d.pot = s[8];
    d.ctr = s.substr(9);
    return d;
  }

  StateKey encode(const Decoded& d) const {
    StateKey s;
    for (int i = 0; i < 2; ++i) {
      s += static_cast<char>('0' + d.r[static_cast<std::size_t>(i)]);
      s += static_cast<char>('0' + d.c[static_cast<std::size_t>(i)]);
      s += d.ori[static_cast<std::size_t>(i)];
      s += d.held[static_cast<std::size_t>(i)];
    }
    s += d.pot;
    s += d.ctr;
    return s;
  }

  static std::pair<int, int> delta(char ori) {
    switch (ori) {
      case 'N': return {-1, 0};
      case 'S': return {1, 0};
      case 'E': return {0, 1};
      default: return {0, -1};  // 'W'
    }
  }
  static char dir_of(const std::string& a) {
    if (a == "north") return 'N';
    if (a == "south") return 'S';
    if (a == "east") return 'E';
    if (a == "west") return 'W';
    return 0;
  }

  std::pair<StateKey, double> apply(const StateKey& s, const JointAction& a) const {
    bool all_stay = a[0] == "stay" && a[1] == "stay";
    if (all_stay) return {s, 0.0};
    Decoded d = decode(s);
    double reward = 0.0;

    // Time passes on any step where someone acts; the cook timer counts
    // those steps, so the all-stay step stays a strict no-op.
    if (d.pot == 'a')
      d.pot = 'b';
    else if (d.pot == 'b')
      d.pot = 'r';

    // Movement: blocked moves (walls, the other agent's current cell, both
    // heading for the same cell, swaps) only change orientation.
    std::array<std::pair<int, int>, 2> want;
    for (int i = 0; i < 2; ++i) {
      auto idx = static_cast<std::size_t>(i);
      want[idx] = {d.r[idx], d.c[idx]};
      char dir = dir_of(a[idx]);
      if (!dir) continue;
      d.ori[idx] = dir;
      auto [dr, dc] = delta(dir);
      int nr = d.r[idx] + dr, nc = d.c[idx] + dc;
      if (walkable(nr, nc)) want[idx] = {nr, nc};
    }
    bool same_target = want[0] == want[1];
    for (int i = 0; i < 2; ++i) {
      auto idx = static_cast<std::size_t>(i);
      auto other = static_cast<std::size_t>(1 - i);
      bool into_other = want[idx] == std::make_pair(d.r[other], d.c[other]);
      bool swap = into_other && want[other] == std::make_pair(d.r[idx], d.c[idx]);
      if (same_target || into_other || swap) continue;  // blocked, orientation already set
      d.r[idx] = want[idx].first;
      d.c[idx] = want[idx].second;
    }

    bool done = false;
    for (int i = 0; i < 2; ++i) {
      auto idx = static_cast<std::size_t>(i);
      if (a[idx] != "interact") continue;
      auto [dr, dc] = delta(d.ori[idx]);
      int tr = d.r[idx] + dr, tc = d.c[idx] + dc;
      char target = cell(tr, tc);
      char& held = d.held[idx];
      if (target == 'O') {
        if (held == '-') held = 'o';
      } else if (target == 'D') {
        if (held == '-') held = 'd';
      } else if (target == 'C') {
        auto ci = static_cast<std::size_t>(counter_index(tr, tc));
        char& slot = d.ctr[ci];
        if (held == '-' && slot != '-') {
          held = slot;
          slot = '-';
        } else if (held != '-' && slot == '-') {
          slot = held;
          held = '-';
        }
      } else if (target == 'P') {
        if (held == 'o' && (d.pot == '0' || d.pot == '1')) {
          d.pot = static_cast<char>(d.pot + 1);
          held = '-';
          reward += 0.2;
        } else if (d.pot == '2') {
          d.pot = 'a';  // explicit cook start, 2 timesteps to ready
          reward += 0.2;
        } else if (d.pot == 'r' && held == 'd') {
          held = 's';
          d.pot = '0';
          reward += 0.2;
        }
      } else if (target == 'S') {
        if (held == 's') {
          reward += 1.0;
          done = true;
        }
      }
    }
    if (done) return {"DONE", reward};
    return {encode(d), reward};
  }
};

}  // namespace

const std::string& kitchen_layout_text(const std::string& layout) {
  if (layout == "cramped_room") return kCrampedLayout;
  if (layout == "forced_coordination") return kForcedLayout;
  throw GameError("unknown kitchen layout: " + layout);
}

std::string load_layout_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GameError("cannot read layout file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GameSpec build_kitchen(const KitchenConfig& cfg) {
  const std::string& text = kitchen_layout_text(cfg.layout);
  auto m = std::make_shared<KitchenModel>();
  {
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line))
      if (!line.empty()) m->grid.push_back(line);
  }
  m->rows = static_cast<int>(m->grid.size());
  m->cols = static_cast<int>(m->grid[0].size());
  for (int r = 0; r < m->rows; ++r)
    for (int c = 0; c < m->cols; ++c) {
      char ch = m->cell(r, c);
      if (ch == '1' || ch == '2') {
        m->start[static_cast<std::size_t>(ch - '1')] = {r, c};
        m->grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = '.';
      } else if (ch == 'C') {
        m->counters.emplace_back(r, c);
      }
    }
  m->horizon = cfg.layout == "cramped_room" ? 20 : 25;

  GameSpec spec;
  spec.name = "kitchen_" + cfg.layout;
  spec.agents = {"agent1", "agent2"};
  spec.wait_action = "stay";
  spec.horizon = m->horizon;
  spec.replan_cap = 15;
  const std::vector<std::string> acts{"north", "south", "east", "west", "interact", "stay"};
  spec.action_sets = {acts, acts};
  {
    KitchenModel::Decoded d;
    for (int i = 0; i < 2; ++i) {
      d.r[static_cast<std::size_t>(i)] = m->start[static_cast<std::size_t>(i)].first;
      d.c[static_cast<std::size_t>(i)] = m->start[static_cast<std::size_t>(i)].second;
      d.ori[static_cast<std::size_t>(i)] = 'S';
      d.held[static_cast<std::size_t>(i)] = '-';
    }
    d.pot = '0';
    d.ctr = std::string(m->counters.size(), '-');
    spec.initial_state = m->encode(d);
  }
  spec.terminal = [](const StateKey& s) { return s == "DONE"; };
  spec.transition = [m](const StateKey& s, const JointAction& a) {
    return std::vector<Outcome>{{m->apply(s, a).first, 1.0}};
  };
  spec.reward = [m](const StateKey& s, const JointAction& a) { return m->apply(s, a).second; };
  return spec;
}

GameSpec build_env(const std::string& task, const std::string& level) {
  if (task == "sweep") return build_sweep({level});
  if (task == "sandwich") return build_sandwich({std::stoi(level)});
  if (task == "sort") return build_sort({std::stoi(level)});
  if (task == "kitchen") return build_kitchen({level});
  throw GameError("unknown task: " + task);
}

}  // namespace readkit
