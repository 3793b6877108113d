#include "borda/scenario_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace borda {
namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw InputError(path + ": " + message);
}

const json& require(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) fail(path + "." + key, "missing required field");
  return *it;
}

std::int64_t as_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) fail(path, "expected an integer");
  return v.get<std::int64_t>();
}

std::string as_string(const json& v, const std::string& path) {
  if (!v.is_string()) fail(path, "expected a string");
  return v.get<std::string>();
}

bool as_bool(const json& v, const std::string& path) {
  if (!v.is_boolean()) fail(path, "expected true or false");
  return v.get<bool>();
}

Rational as_rational(const json& v, const std::string& path) {
  if (!v.is_string()) fail(path, "expected an exact \"p/q\" string");
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const std::exception& e) {
    fail(path, e.what());
  }
}

struct NodeTable {
  std::vector<std::string> names;
  std::map<std::string, Node> by_name;

  Node resolve(const json& v, const std::string& path) const {
    if (v.is_number_integer()) {
      const auto idx = v.get<std::int64_t>();
      if (idx < 0 || static_cast<std::size_t>(idx) >= names.size()) fail(path, "node index out of range");
      return static_cast<Node>(idx);
    }
    if (v.is_string()) return resolve_text(v.get<std::string>(), path);
    fail(path, "expected a node index or name");
  }

  Node resolve_text(const std::string& text, const std::string& path) const {
    if (const auto it = by_name.find(text); it != by_name.end()) return it->second;
    // Fall back to a decimal index.
    if (!text.empty() && text.find_first_not_of("0123456789") == std::string::npos) {
      const auto idx = std::stoull(text);
      if (idx < names.size()) return static_cast<Node>(idx);
    }
    fail(path, "unknown node '" + text + "'");
  }
};

OrderId parse_order(const PreferenceSpace& space, const OrderFormat& format, const json& v, const std::string& path) {
  const auto text = as_string(v, path);
  try {
    return space.id_of(format.parse(text));
  } catch (const std::exception& e) {
    fail(path, e.what());
  }
}

Schedule parse_schedule_text(const std::string& text, const NodeTable& nodes, const std::string& path) {
  if (text.rfind("uniform:", 0) == 0) {
    const auto seed_text = text.substr(8);
    if (seed_text.empty() || seed_text.find_first_not_of("0123456789") != std::string::npos) {
      fail(path, "uniform schedule needs a nonnegative integer seed");
    }
    return Schedule::seeded_uniform(std::stoull(seed_text));
  }
  if (text.rfind("seq:[", 0) == 0 && text.back() == ']') {
    std::vector<Node> seq;
    std::stringstream body(text.substr(5, text.size() - 6));
    std::string item;
    while (std::getline(body, item, ',')) {
      const auto first = item.find_first_not_of(' ');
      const auto last = item.find_last_not_of(' ');
      if (first == std::string::npos) fail(path, "empty entry in sequence schedule");
      seq.push_back(nodes.resolve_text(item.substr(first, last - first + 1), path));
    }
    if (seq.empty()) fail(path, "sequence schedule is empty");
    return Schedule::fixed_sequence(std::move(seq));
  }
  fail(path, "expected \"seq:[...]\" or \"uniform:<seed>\"");
}

Schedule parse_variant(const json& v, const NodeTable& nodes) {
  if (v.is_string()) {
    if (v.get<std::string>() == "S") return Schedule::synchronous();
    fail("variant", "expected \"S\" or an object with type \"A\"");
  }
  const auto type = as_string(require(v, "type", "variant"), "variant.type");
  if (type == "S") return Schedule::synchronous();
  if (type != "A") fail("variant.type", "expected \"S\" or \"A\"");
  return parse_schedule_text(as_string(require(v, "schedule", "variant"), "variant.schedule"), nodes,
                             "variant.schedule");
}

std::string margin_text(const std::optional<Rational>& margin) { return margin ? margin->to_string() : "inf"; }

std::vector<std::string> formatted(const PreferenceSpace& space, const OrderFormat& format, const Profile& profile) {
  std::vector<std::string> out;
  for (OrderId id : profile) out.push_back(format.format(space.order(id)));
  return out;
}

// ---- suites ---------------------------------------------------------------

std::vector<OrderId> parse_order_list(const PreferenceSpace& space, const json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected a list of orders");
  std::vector<OrderId> out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    out.push_back(parse_order(space, space.format(), v[k], path + "[" + std::to_string(k) + "]"));
  }
  return out;
}

ScenarioConfig build_from_builder(const json& b, const std::string& path) {
  const auto type = as_string(require(b, "type", path), path + ".type");
  const int m = static_cast<int>(as_int(require(b, "m", path), path + ".m"));
  if (m < 2 || m > kMaxAlternatives) fail(path + ".m", "supported range is 2..6");
  auto graph = cover_graph(m);
  const auto& space = graph->space();
  try {
    if (type == "traveling_wave") {
      const auto length = as_int(require(b, "length", path), path + ".length");
      if (length < 1) fail(path + ".length", "must be positive");
      std::vector<OrderId> cycle;
      if (const auto it = b.find("cycle"); it != b.end()) {
        cycle = parse_order_list(space, *it, path + ".cycle");
      } else {
        const auto k = as_int(require(b, "cycle_length", path), path + ".cycle_length");
        auto found = graph->find_cycle(static_cast<int>(k));
        if (!found) fail(path + ".cycle_length", "move graph has no cycle of this length");
        cycle = std::move(*found);
      }
      auto sc = build_traveling_wave(static_cast<std::size_t>(length), cycle, graph);
      if (const auto it = b.find("initial"); it != b.end()) {
        auto initial = parse_order_list(space, *it, path + ".initial");
        if (initial.size() != sc.initial.size()) fail(path + ".initial", "needs one order per node");
        sc.initial = std::move(initial);
      }
      return sc;
    }
    if (type == "gadget") {
      const auto rho = parse_order(space, space.format(), require(b, "rho", path), path + ".rho");
      const auto eps = as_rational(require(b, "epsilon", path), path + ".epsilon");
      std::optional<std::pair<OrderId, OrderId>> init;
      if (const auto it = b.find("initial"); it != b.end()) {
        const auto pair = parse_order_list(space, *it, path + ".initial");
        if (pair.size() != 2) fail(path + ".initial", "needs the states of i and j");
        init = std::pair{pair[0], pair[1]};
      }
      return build_gadget(m, space.order(rho), eps, init);
    }
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    fail(path, e.what());
  }
  fail(path + ".type", "unknown builder '" + type + "'");
}

const json& params_of(const json& entry) {
  static const json empty = json::object();
  const auto it = entry.find("params");
  return it == entry.end() ? empty : *it;
}

VerificationOutcome strict_restriction_outcome(const ScenarioConfig& sc) {
  VerificationOutcome out;
  out.claim = "dynamics restrict to strict orders under the move graph";
  auto result = restrict_to_strict(sc);
  if (auto* report = std::get_if<StrictRestrictionReport>(&result)) {
    out.verdict = report->strict_inputs ? Verdict::refuted : Verdict::hypothesis_not_met;
    out.evidence["strict_inputs"] = report->strict_inputs;
    out.evidence["strict_orders"] = report->strict_orders;
    out.evidence["induced_edges"] = report->induced_edges;
    out.evidence["components"] = report->components;
    out.evidence["reason"] = report->reason;
  } else {
    out.verdict = Verdict::confirmed;
    out.evidence["scenario"] = std::get<ScenarioConfig>(result).label;
  }
  return out;
}

VerificationOutcome consensus_outcome(const ScenarioConfig& sc) {
  VerificationOutcome out;
  out.claim = "the initial profile is a fixed point";
  const bool fixed = sc.system.is_fixed_point(sc.initial);
  out.verdict = fixed ? Verdict::confirmed : Verdict::refuted;
  out.evidence["scenario"] = sc.label;
  out.evidence["initial"] = profile_text(sc.system.space(), sc.initial);
  if (!fixed) out.evidence["next"] = profile_text(sc.system.space(), sc.system.step_sync(sc.initial));
  return out;
}

VerificationOutcome frozen_targets_outcome(const ScenarioConfig& sc) {
  VerificationOutcome out;
  out.claim = "frozen targets are reached monotonically within their initial distance";
  const auto report = sc.run();
  const auto check = check_frozen_targets(sc.system, report);
  auto& ev = out.evidence;
  ev["scenario"] = sc.label;
  ev["mu"] = report.transient;
  ev["period"] = report.period;
  ev["applicable"] = check.applicable;
  if (!check.applicable) {
    out.verdict = Verdict::hypothesis_not_met;
    ev["reason"] = "targets never become constant";
    return out;
  }
  ev["frozen_from"] = check.frozen_from;
  ev["monotone"] = check.monotone;
  ev["reached_in_time"] = check.reached_in_time;
  ev["consensus"] = check.consensus;
  ev["diameter"] = sc.system.graph().diameter();
  bool ok = check.monotone && check.reached_in_time;
  if (check.consensus && check.frozen_from == 0) {
    ok = ok && report.transient <= static_cast<std::size_t>(sc.system.graph().diameter());
  }
  out.verdict = ok ? Verdict::confirmed : Verdict::refuted;
  return out;
}

VerificationOutcome run_verifier(const std::string& name, const ScenarioConfig& sc, const json& params,
                                 const std::string& path) {
  if (name == "traveling_wave") {
    return verify_traveling_wave(sc, static_cast<std::size_t>(as_int(require(params, "expected_k", path),
                                                                      path + ".expected_k")));
  }
  if (name == "forced_even_period") {
    ForcedPeriodOptions options;
    if (const auto it = params.find("sweep_budget"); it != params.end()) {
      options.sweep_budget = static_cast<std::size_t>(as_int(*it, path + ".sweep_budget"));
    }
    return verify_forced_even_period(sc, options);
  }
  if (name == "even_period_lifting") return verify_even_period_lifting(sc);
  if (name == "robustness") {
    const auto trials = params.contains("trials") ? as_int(params["trials"], path + ".trials") : 20;
    const auto seed = params.contains("seed") ? as_int(params["seed"], path + ".seed") : 0;
    std::optional<Rational> eps;
    if (params.contains("epsilon")) eps = as_rational(params["epsilon"], path + ".epsilon");
    return verify_robustness(sc, static_cast<std::size_t>(trials), static_cast<std::uint64_t>(seed), eps);
  }
  if (name == "unreachable_persistence") {
    std::map<Node, OrderId> alt;
    const auto& pins = require(params, "alt_pins", path);
    if (!pins.is_object()) fail(path + ".alt_pins", "expected an object of node -> order");
    for (const auto& [key, value] : pins.items()) {
      const auto field = path + ".alt_pins." + key;
      if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos) fail(field, "expected a node index");
      const auto node = static_cast<Node>(std::stoull(key));
      if (node >= sc.system.size()) fail(field, "node index out of range");
      alt[node] = parse_order(sc.system.space(), sc.system.space().format(), value, field);
    }
    return verify_unreachable_persistence(sc, alt);
  }
  if (name == "single_peaked_invariance") {
    const auto& axis_json = require(params, "axis", path);
    const auto axis_text = as_string(axis_json, path + ".axis");
    std::vector<Alternative> axis;
    const auto& names = sc.system.space().format().names();
    for (char c : axis_text) {
      auto pos = names.find(c);
      if (pos == std::string::npos && c >= '0' && c < '0' + sc.alternatives()) pos = static_cast<std::size_t>(c - '0');
      if (pos == std::string::npos) fail(path + ".axis", std::string("unknown alternative '") + c + "'");
      axis.push_back(static_cast<Alternative>(pos));
    }
    try {
      return verify_single_peaked_invariance(sc, axis);
    } catch (const std::invalid_argument& e) {
      fail(path + ".axis", e.what());
    }
  }
  if (name == "strict_restriction") return strict_restriction_outcome(sc);
  if (name == "consensus_fixed_point") return consensus_outcome(sc);
  if (name == "frozen_targets") return frozen_targets_outcome(sc);
  fail(path, "unknown verifier '" + name + "'");
}

}  // namespace

LoadedScenario parse_scenario(const json& doc, const std::string& default_label) {
  if (!doc.is_object()) fail("<root>", "expected a JSON object");
  const int m = static_cast<int>(as_int(require(doc, "m", "<root>"), "m"));
  if (m < 2 || m > kMaxAlternatives) fail("m", "supported range is 2..6");
  auto graph = cover_graph(m);
  const auto& space = graph->space();

  OrderFormat format(m);
  if (const auto it = doc.find("alternatives"); it != doc.end()) {
    if (!it->is_array() || it->size() != static_cast<std::size_t>(m)) {
      fail("alternatives", "expected one single-character name per alternative");
    }
    std::string names;
    for (std::size_t k = 0; k < it->size(); ++k) {
      const auto name = as_string((*it)[k], "alternatives[" + std::to_string(k) + "]");
      if (name.size() != 1) fail("alternatives[" + std::to_string(k) + "]", "names are single characters");
      names += name;
    }
    try {
      format = OrderFormat(m, names);
    } catch (const std::exception& e) {
      fail("alternatives", e.what());
    }
  }

  // Nodes.
  const auto& net_json = require(doc, "network", "<root>");
  const auto& nodes_json = require(net_json, "nodes", "network");
  NodeTable nodes;
  if (nodes_json.is_number_integer()) {
    const auto n = nodes_json.get<std::int64_t>();
    if (n < 1) fail("network.nodes", "need at least one node");
    for (std::int64_t k = 0; k < n; ++k) nodes.names.push_back(std::to_string(k));
  } else if (nodes_json.is_array() && !nodes_json.empty()) {
    for (std::size_t k = 0; k < nodes_json.size(); ++k) {
      const auto path = "network.nodes[" + std::to_string(k) + "]";
      auto name = as_string(nodes_json[k], path);
      if (!nodes.by_name.emplace(name, k).second) fail(path, "duplicate node name '" + name + "'");
      nodes.names.push_back(std::move(name));
    }
  } else {
    fail("network.nodes", "expected a positive node count or a list of names");
  }
  const std::size_t n = nodes.names.size();

  // Persistent nodes come first: pinned nodes without inputs get a self-loop.
  PersistentConfig persistent;
  if (const auto it = doc.find("persistent"); it != doc.end()) {
    if (!it->is_object()) fail("persistent", "expected an object");
    if (const auto pins = it->find("pins"); pins != it->end()) {
      if (!pins->is_array()) fail("persistent.pins", "expected a list");
      for (std::size_t k = 0; k < pins->size(); ++k) {
        const auto path = "persistent.pins[" + std::to_string(k) + "]";
        const Node v = nodes.resolve(require((*pins)[k], "node", path), path + ".node");
        const OrderId order = parse_order(space, format, require((*pins)[k], "order", path), path + ".order");
        if (!persistent.pinned.emplace(v, order).second) fail(path + ".node", "node pinned twice");
      }
    }
    if (const auto camps = it->find("camps"); camps != it->end() && !camps->is_null()) {
      auto node_list = [&](const char* key) {
        const std::string path = std::string("persistent.camps.") + key;
        const auto& arr = require(*camps, key, "persistent.camps");
        if (!arr.is_array()) fail(path, "expected a list of nodes");
        std::vector<Node> out;
        for (std::size_t k = 0; k < arr.size(); ++k) out.push_back(nodes.resolve(arr[k], path + "[" + std::to_string(k) + "]"));
        return out;
      };
      auto plus = node_list("plus");
      auto minus = node_list("minus");
      const OrderId rho = parse_order(space, format, require(*camps, "rho", "persistent.camps"), "persistent.camps.rho");
      PersistentConfig derived;
      try {
        derived = PersistentConfig::contrarian(space, std::move(plus), std::move(minus), rho);
      } catch (const std::exception& e) {
        fail("persistent.camps", e.what());
      }
      for (const auto& [v, order] : persistent.pinned) {
        const auto d = derived.pinned.find(v);
        if (d == derived.pinned.end() || d->second != order) {
          fail("persistent.pins", "pin of node " + nodes.names[v] + " disagrees with the camps");
        }
      }
      persistent = std::move(derived);
    }
  }

  // Network.
  const bool normalize = net_json.contains("normalize") && as_bool(net_json["normalize"], "network.normalize");
  const auto& edges_json = net_json.contains("edges") ? net_json["edges"] : json::array();
  if (!edges_json.is_array()) fail("network.edges", "expected a list");
  std::optional<InfluenceNetwork> network;
  try {
    if (normalize) {
      std::vector<std::pair<Node, Node>> undirected;
      std::vector<bool> touched(n, false);
      for (std::size_t k = 0; k < edges_json.size(); ++k) {
        const auto path = "network.edges[" + std::to_string(k) + "]";
        if (edges_json[k].contains("weight")) fail(path + ".weight", "weights are derived when normalize is set");
        const Node a = nodes.resolve(require(edges_json[k], "from", path), path + ".from");
        const Node b = nodes.resolve(require(edges_json[k], "to", path), path + ".to");
        undirected.emplace_back(a, b);
        touched[a] = touched[b] = true;
      }
      for (const auto& [v, order] : persistent.pinned) {
        if (!touched[v]) undirected.emplace_back(v, v);
      }
      network = normalize_random_walk(n, undirected);
    } else {
      InfluenceNetwork::Matrix w(n, std::vector<Rational>(n));
      std::vector<bool> has_input(n, false);
      for (std::size_t k = 0; k < edges_json.size(); ++k) {
        const auto path = "network.edges[" + std::to_string(k) + "]";
        const Node from = nodes.resolve(require(edges_json[k], "from", path), path + ".from");
        const Node to = nodes.resolve(require(edges_json[k], "to", path), path + ".to");
        const Rational weight = as_rational(require(edges_json[k], "weight", path), path + ".weight");
        if (weight.sign() <= 0) fail(path + ".weight", "weights must be positive");
        if (has_input[to] && w[to][from].sign() > 0) fail(path, "duplicate edge");
        w[to][from] = weight;
        has_input[to] = true;
      }
      for (const auto& [v, order] : persistent.pinned) {
        if (!has_input[v]) w[v][v] = Rational(1);
      }
      network.emplace(std::move(w));
    }
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    fail("network", e.what());
  }

  // Initial profile.
  Profile initial(n, 0);
  std::vector<bool> given(n, false);
  const auto& init_json = require(doc, "initial", "<root>");
  if (init_json.is_array()) {
    if (init_json.size() != n) fail("initial", "expected one order per node");
    for (std::size_t k = 0; k < n; ++k) {
      initial[k] = parse_order(space, format, init_json[k], "initial[" + std::to_string(k) + "]");
      given[k] = true;
    }
  } else if (init_json.is_object()) {
    for (const auto& [key, value] : init_json.items()) {
      const Node v = nodes.resolve_text(key, "initial." + key);
      initial[v] = parse_order(space, format, value, "initial." + key);
      given[v] = true;
    }
  } else {
    fail("initial", "expected a list of orders or an object node -> order");
  }
  for (Node v = 0; v < n; ++v) {
    const auto pin = persistent.pinned.find(v);
    if (pin != persistent.pinned.end()) {
      if (given[v] && initial[v] != pin->second) fail("initial." + nodes.names[v], "differs from the pinned order");
      initial[v] = pin->second;
    } else if (!given[v]) {
      fail("initial." + nodes.names[v], "missing state for free node");
    }
  }

  Schedule schedule = doc.contains("variant") ? parse_variant(doc["variant"], nodes) : Schedule::synchronous();
  StepPolicy policy;
  if (const auto it = doc.find("policy"); it != doc.end()) {
    if (!it->is_object()) fail("policy", "expected an object");
    if (it->contains("no_move_on_ambiguity")) {
      policy.allow_no_move_on_ambiguity = as_bool((*it)["no_move_on_ambiguity"], "policy.no_move_on_ambiguity");
    }
  }
  std::size_t max_steps = 100'000;
  if (const auto it = doc.find("max_steps"); it != doc.end()) {
    const auto v = as_int(*it, "max_steps");
    if (v < 1) fail("max_steps", "must be positive");
    max_steps = static_cast<std::size_t>(v);
  }
  std::string label = default_label;
  if (const auto it = doc.find("label"); it != doc.end()) label = as_string(*it, "label");

  try {
    BordaSystem system(graph, std::move(*network), std::move(persistent), policy);
    system.check_profile(initial);
    for (Node v : schedule.sequence) {
      if (system.persistent().is_pinned(v)) fail("variant.schedule", "names persistent node " + nodes.names[v]);
    }
    return LoadedScenario{ScenarioConfig{std::move(label), std::move(system), std::move(initial), std::move(schedule),
                                         max_steps, std::move(nodes.names)},
                          std::move(format)};
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    fail("<root>", e.what());
  }
}

LoadedScenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path.string() + ": cannot open scenario file");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
  try {
    return parse_scenario(doc, path.stem().string());
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::string trajectory_csv(const ScenarioConfig& sc, const OrderFormat& format, const OrbitReport& report) {
  std::ostringstream out;
  out << "time";
  for (Node v = 0; v < sc.system.size(); ++v) {
    out << ',' << (v < sc.node_names.size() ? sc.node_names[v] : std::to_string(v));
  }
  out << '\n';
  for (std::size_t t = 0; t < report.trajectory.size(); ++t) {
    out << t;
    for (const auto& text : formatted(sc.system.space(), format, report.trajectory[t])) out << ',' << text;
    out << '\n';
  }
  return out.str();
}

ordered_json orbit_report_json(const ScenarioConfig& sc, const OrderFormat& format, const OrbitReport& report) {
  ordered_json out;
  out["label"] = sc.label;
  out["m"] = sc.alternatives();
  out["nodes"] = sc.node_names;
  out["variant"] = sc.schedule.describe();
  out["mu"] = report.transient;
  out["period"] = report.period;
  out["min_margin"] = margin_text(report.min_margin);
  ordered_json orbit = ordered_json::array();
  for (const auto& state : report.orbit) orbit.push_back(formatted(sc.system.space(), format, state));
  out["orbit"] = std::move(orbit);
  if (!sc.schedule.deterministic()) out["converged"] = report.period == 1;
  return out;
}

ordered_json SuiteEntryResult::to_json() const {
  ordered_json out;
  out["label"] = label;
  out["verifier"] = verifier;
  out["expect"] = expect_pass ? "pass" : "fail";
  out["matched"] = matched();
  out["outcome"] = outcome.to_json();
  return out;
}

const std::vector<std::string>& verifier_names() {
  static const std::vector<std::string> names{
      "traveling_wave",          "forced_even_period",       "even_period_lifting", "robustness",
      "unreachable_persistence", "single_peaked_invariance", "strict_restriction",  "consensus_fixed_point",
      "frozen_targets"};
  return names;
}

std::vector<SuiteEntryResult> run_suite(const std::filesystem::path& manifest) {
  std::ifstream in(manifest);
  if (!in) throw InputError(manifest.string() + ": cannot open suite manifest");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(manifest.string() + ": " + e.what());
  }
  const auto base = manifest.parent_path();
  std::vector<SuiteEntryResult> results;
  try {
    const auto& entries = require(doc, "entries", "<root>");
    if (!entries.is_array()) fail("entries", "expected a list");
    std::set<std::string> labels;
    for (std::size_t k = 0; k < entries.size(); ++k) {
      const auto path = "entries[" + std::to_string(k) + "]";
      const auto& entry = entries[k];
      SuiteEntryResult result;
      result.label = as_string(require(entry, "label", path), path + ".label");
      if (!labels.insert(result.label).second) fail(path + ".label", "duplicate label '" + result.label + "'");
      result.verifier = as_string(require(entry, "verifier", path), path + ".verifier");
      if (std::find(verifier_names().begin(), verifier_names().end(), result.verifier) == verifier_names().end()) {
        fail(path + ".verifier", "unknown verifier '" + result.verifier + "'");
      }
      if (entry.contains("expect")) {
        const auto expect = as_string(entry["expect"], path + ".expect");
        if (expect != "pass" && expect != "fail") fail(path + ".expect", "expected \"pass\" or \"fail\"");
        result.expect_pass = expect == "pass";
      }
      std::optional<ScenarioConfig> sc;
      if (entry.contains("scenario")) {
        const auto file = base / as_string(entry["scenario"], path + ".scenario");
        sc = load_scenario(file).config;
      } else if (entry.contains("builder")) {
        sc = build_from_builder(entry["builder"], path + ".builder");
      } else {
        fail(path, "needs a scenario path or a builder");
      }
      sc->label = result.label;
      result.outcome = run_verifier(result.verifier, *sc, params_of(entry), path + ".params");
      results.push_back(std::move(result));
    }
  } catch (const InputError& e) {
    throw InputError(manifest.string() + ": " + e.what());
  }
  return results;
}

ordered_json suite_json(const std::vector<SuiteEntryResult>& results) {
  ordered_json out = ordered_json::array();
  for (const auto& r : results) out.push_back(r.to_json());
  return out;
}

}  // namespace borda
