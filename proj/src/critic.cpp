#include "read/critic.hpp"

#include <fstream>
#include <unordered_set>

#include <json.hpp>

namespace readkit {

namespace {
constexpr char kSep = '\x1f';

void check_gamma(double gamma) {
  if (!(gamma > 0.0 && gamma < 1.0)) throw GameError("gamma must be in (0, 1)");
}
}  // namespace

std::string critic_key(const StateKey& s, const std::vector<std::string>& prefix_actions) {
  std::string k = s;
  for (const auto& a : prefix_actions) {
    k += kSep;
    k += a;
  }
  return k;
}

std::optional<double> CriticStore::local_q(const StateKey& s,
                                           const std::vector<std::string>& prefix) const {
  auto it = table.find(critic_key(s, prefix));
  if (it == table.end()) return std::nullopt;
  return it->second.mean;
}

std::optional<double> CriticStore::score_read_s(const StateKey& s,
                                                const std::vector<std::string>& prior,
                                                const std::string& a_i) const {
  auto with = prior;
  with.push_back(a_i);
  auto q1 = local_q(s, with);
  auto q0 = local_q(s, prior);
  if (!q1 || !q0) return std::nullopt;
  return *q1 - *q0;
}

std::optional<double> CriticStore::score_read_j(const StateKey& s, const JointAction& a) const {
  auto q = local_q(s, a);
  if (!q) return std::nullopt;
  auto qw = local_q(s, wait_action);
  if (!qw) {
    if (!wait_zero_default) return std::nullopt;
    qw = 0.0;
  }
  return *q - *qw / gamma;
}

long CriticStore::distinct_states() const {
  std::unordered_set<std::string> states;
  for (const auto& [k, e] : table) states.insert(k.substr(0, k.find(kSep)));
  return static_cast<long>(states.size());
}

CriticStore mc_fit(const Dataset& data, double gamma) {
  check_gamma(gamma);
  if (data.episodes.empty()) throw GameError("mc_fit: empty dataset");

  struct Acc {
    double sum = 0.0;
    long count = 0;
  };
  std::unordered_map<std::string, Acc> acc;

  for (const auto& ep : data.episodes) {
    if (ep.steps.empty()) throw GameError("mc_fit: empty episode");
    std::vector<double> g(ep.steps.size());
    double running = 0.0;
    for (std::size_t t = ep.steps.size(); t-- > 0;) {
      running = ep.steps[t].reward + gamma * running;
      g[t] = running;
    }
    std::unordered_set<std::string> credited;
    for (std::size_t t = 0; t < ep.steps.size(); ++t) {
      const auto& tr = ep.steps[t];
      const bool is_wait = !data.wait_action.empty() && tr.action == data.wait_action;
      if (is_wait) {
        // Probe step: only the full joint WAIT key.
        auto key = critic_key(tr.state, tr.action);
        if (credited.insert(key).second) {
          auto& a = acc[key];
          a.sum += g[t];
          ++a.count;
        }
        continue;
      }
      std::vector<std::string> prefix;
      prefix.reserve(tr.action.size());
      for (std::size_t u = 0; u <= tr.action.size(); ++u) {
        auto key = critic_key(tr.state, prefix);
        if (credited.insert(key).second) {
          auto& a = acc[key];
          a.sum += g[t];
          ++a.count;
        }
        if (u < tr.action.size()) prefix.push_back(tr.action[u]);
      }
    }
  }

  CriticStore c;
  c.gamma = gamma;
  c.wait_action = data.wait_action;
  c.wait_zero_default = data.wait_augmented;
  c.episodes_fitted = static_cast<long>(data.episodes.size());
  for (const auto& [k, a] : acc) c.table[k] = {a.sum / static_cast<double>(a.count), a.count};
  return c;
}

void save_critic(const CriticStore& c, const std::string& path) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["gamma"] = c.gamma;
  j["wait_action"] = c.wait_action;
  j["wait_zero_default"] = c.wait_zero_default;
  j["episodes_fitted"] = c.episodes_fitted;
  j["coverage"] = {{"keys", c.table.size()}, {"states", c.distinct_states()}};
  std::vector<std::string> keys;
  keys.reserve(c.table.size());
  for (const auto& [k, e] : c.table) keys.push_back(k);
  std::sort(keys.begin(), keys.end());
  auto entries = nlohmann::json::array();
  for (const auto& k : keys) {
    const auto& e = c.table.at(k);
    entries.push_back({k, e.mean, e.count});
  }
  j["entries"] = std::move(entries);
  std::ofstream out(path);
  if (!out) throw GameError("cannot write critic file: " + path);
  out << j.dump() << '\n';
}

CriticStore load_critic(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GameError("cannot read critic file: " + path);
  nlohmann::json j;
  in >> j;
  if (j.value("schema_version", 0) != 1) throw GameError("unsupported critic schema: " + path);
  CriticStore c;
  c.gamma = j.at("gamma").get<double>();
  c.wait_action = j.at("wait_action").get<JointAction>();
  c.wait_zero_default = j.at("wait_zero_default").get<bool>();
  c.episodes_fitted = j.at("episodes_fitted").get<long>();
  for (const auto& e : j.at("entries"))
    c.table[e.at(0).get<std::string>()] = {e.at(1).get<double>(), e.at(2).get<long>()};
  return c;
}

void save_dataset(const Dataset& d, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw GameError("cannot write dataset file: " + path);
  nlohmann::json header;
  header["schema_version"] = 1;
  header["kind"] = "dataset_header";
  header["wait_action"] = d.wait_action;
  header["wait_augmented"] = d.wait_augmented;
  out << header.dump() << '\n';
  for (const auto& ep : d.episodes) {
    nlohmann::json j;
    j["provenance"] = ep.provenance;
    auto steps = nlohmann::json::array();
    for (const auto& t : ep.steps) steps.push_back({t.state, t.action, t.reward, t.next});
    j["steps"] = std::move(steps);
    out << j.dump() << '\n';
  }
}

Dataset load_dataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GameError("cannot read dataset file: " + path);
  std::string line;
  if (!std::getline(in, line)) throw GameError("empty dataset file: " + path);
  auto header = nlohmann::json::parse(line);
  if (header.value("schema_version", 0) != 1 || header.value("kind", "") != "dataset_header")
    throw GameError("unsupported dataset schema: " + path);
  Dataset d;
  d.wait_action = header.at("wait_action").get<JointAction>();
  d.wait_augmented = header.at("wait_augmented").get<bool>();
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto j = nlohmann::json::parse(line);
    Episode ep;
    ep.provenance = j.at("provenance").get<std::string>();
    for (const auto& s : j.at("steps")) {
      Transition t;
      t.state = s.at(0).get<std::string>();
      t.action = s.at(1).get<JointAction>();
      t.reward = s.at(2).get<double>();
      t.next = s.at(3).get<std::string>();
      ep.steps.push_back(std::move(t));
    }
    d.episodes.push_back(std::move(ep));
  }
  return d;
}

}  // namespace readkit
