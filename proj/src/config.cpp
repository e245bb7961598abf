#include "opinion/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>

namespace opinion {

using json = nlohmann::ordered_json;

namespace {

std::string join(const std::string& prefix, const std::string& key) {
  return prefix.empty() ? key : prefix + "." + key;
}

double get_number(const json& v, const std::string& key) {
  if (!v.is_number()) throw ConfigError(key, "expected a number");
  return v.get<double>();
}

std::uint64_t get_uint(const json& v, const std::string& key) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer()) {
    if (v.get<std::int64_t>() < 0) throw ConfigError(key, "must be >= 0");
    return v.get<std::uint64_t>();
  }
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (d >= 0.0 && d == std::floor(d) && d < 9.0e15) return static_cast<std::uint64_t>(d);
  }
  throw ConfigError(key, "expected a non-negative integer");
}

std::string get_string(const json& v, const std::string& key) {
  if (!v.is_string()) throw ConfigError(key, "expected a string");
  return v.get<std::string>();
}

bool get_bool(const json& v, const std::string& key) {
  if (!v.is_boolean()) throw ConfigError(key, "expected true or false");
  return v.get<bool>();
}

void require_object(const json& v, const std::string& key) {
  if (!v.is_object()) throw ConfigError(key.empty() ? "<root>" : key, "expected an object");
}

void parse_network(const json& doc, NetworkSpec& net) {
  require_object(doc, "network");
  if (auto it = doc.find("kind"); it != doc.end()) {
    const auto name = get_string(*it, "network.kind");
    const auto kind = parse_network_kind(name);
    if (!kind) throw ConfigError("network.kind", "unknown kind \"" + name + "\"");
    net.kind = *kind;
  }
  for (const auto& [key, value] : doc.items()) {
    const std::string path = join("network", key);
    if (key == "kind") continue;
    if (key == "p") {
      if (net.kind != NetworkKind::random) throw ConfigError(path, "only used by random networks");
      net.p = get_number(value, path);
    } else if (key == "k") {
      if (net.kind != NetworkKind::watts_strogatz) {
        throw ConfigError(path, "only used by watts_strogatz networks");
      }
      net.k = get_uint(value, path);
    } else if (key == "beta") {
      if (net.kind != NetworkKind::watts_strogatz) {
        throw ConfigError(path, "only used by watts_strogatz networks");
      }
      net.beta = get_number(value, path);
    } else {
      throw ConfigError(path, "unknown key");
    }
  }
}

void parse_axes(const json& doc, std::vector<SweepAxis>& axes) {
  require_object(doc, "axes");
  for (const auto& [name, values] : doc.items()) {
    const std::string path = join("axes", name);
    if (!values.is_array() || values.empty()) throw ConfigError(path, "expected a non-empty array");
    SweepAxis axis{name, {}};
    for (std::size_t i = 0; i < values.size(); ++i) {
      const std::string item = path + "[" + std::to_string(i) + "]";
      if (values[i].is_number()) axis.values.emplace_back(values[i].get<double>());
      else if (values[i].is_string()) axis.values.emplace_back(values[i].get<std::string>());
      else throw ConfigError(item, "expected a number or string");
      // Type-check the value against the field it targets.
      ModelParams probe;
      try {
        apply_axis_value(probe, name, axis.values.back());
      } catch (const ConfigError& e) {
        if (e.key() == "sweep.axes." + name) throw ConfigError(path, "not a sweepable parameter");
        throw ConfigError(item, e.what());
      }
    }
    axes.push_back(std::move(axis));
  }
}

json axis_value_to_json(const AxisValue& v) {
  if (const auto* s = std::get_if<std::string>(&v)) return *s;
  return std::get<double>(v);
}

}  // namespace

Config parse_config(const json& root) {
  require_object(root, "");
  const json* doc = &root;
  if (auto it = root.find("config"); it != root.end()) doc = &*it;
  require_object(*doc, "config");

  Config c;
  ModelParams& p = c.params;
  for (const auto& [key, value] : doc->items()) {
    if (key == "n_a") p.n_a = get_uint(value, key);
    else if (key == "n_b") p.n_b = get_uint(value, key);
    else if (key == "interest_a") p.interest_a = get_number(value, key);
    else if (key == "interest_b") p.interest_b = get_number(value, key);
    else if (key == "mu") p.mu = get_number(value, key);
    else if (key == "gamma_a") p.gamma_a = get_number(value, key);
    else if (key == "gamma_b") p.gamma_b = get_number(value, key);
    else if (key == "pi_max") p.pi_max = get_number(value, key);
    else if (key == "init_belief_mean") p.init_belief_mean = get_number(value, key);
    else if (key == "init_belief_sd") p.init_belief_sd = get_number(value, key);
    else if (key == "ticks") p.ticks = get_uint(value, key);
    else if (key == "network") parse_network(value, p.network);
    else if (key == "strategy") {
      const auto name = get_string(value, key);
      const auto s = parse_strategy(name);
      if (!s) throw ConfigError(key, "unknown strategy \"" + name + "\"");
      p.strategy = *s;
    } else if (key == "cost") {
      require_object(value, key);
      for (const auto& [ck, cv] : value.items()) {
        const std::string path = join("cost", ck);
        if (ck == "a") p.cost.a = get_number(cv, path);
        else if (ck == "b") p.cost.b = get_number(cv, path);
        else throw ConfigError(path, "unknown key");
      }
    } else if (key == "seed") c.seed = get_uint(value, key);
    else if (key == "seeds") c.seeds = get_uint(value, key);
    else if (key == "steady_window") {
      if (!value.is_array() || value.size() != 2) {
        throw ConfigError(key, "expected [first_tick, last_tick]");
      }
      c.steady_window = TickWindow{get_uint(value[0], key + "[0]"), get_uint(value[1], key + "[1]")};
    } else if (key == "snapshot_ticks") {
      if (!value.is_array()) throw ConfigError(key, "expected an array of ticks");
      for (std::size_t i = 0; i < value.size(); ++i) {
        c.snapshot_ticks.push_back(get_uint(value[i], key + "[" + std::to_string(i) + "]"));
      }
    } else if (key == "output_dir") c.output_dir = get_string(value, key);
    else if (key == "parallel") c.parallel = get_uint(value, key);
    else if (key == "max_runs") c.max_runs = get_uint(value, key);
    else if (key == "dump_network") c.dump_network = get_bool(value, key);
    else if (key == "axes") parse_axes(value, c.axes);
    else throw ConfigError(key, "unknown key");
  }
  validate(c);
  return c;
}

void validate(const Config& c) {
  validate(c.params);
  if (c.seeds && *c.seeds == 0) throw ConfigError("seeds", "must be >= 1");
  if (c.steady_window) {
    const TickWindow w = *c.steady_window;
    if (w.first == 0 || w.last < w.first) {
      throw ConfigError("steady_window", "expected 1 <= first <= last");
    }
    // Sweeps over "ticks" check the window per cell instead.
    const bool ticks_swept = std::any_of(c.axes.begin(), c.axes.end(),
                                         [](const SweepAxis& a) { return a.name == "ticks"; });
    if (!ticks_swept && w.last > c.params.ticks) {
      throw ConfigError("steady_window", "last tick " + std::to_string(w.last) +
                                             " exceeds the horizon of " +
                                             std::to_string(c.params.ticks));
    }
  }
  for (std::size_t i = 0; i < c.snapshot_ticks.size(); ++i) {
    if (c.snapshot_ticks[i] > c.params.ticks) {
      throw ConfigError("snapshot_ticks[" + std::to_string(i) + "]", "beyond the horizon");
    }
  }
}

Config load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path.string(), "cannot open config file");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(path.string(), e.what());
  }
  return parse_config(doc);
}

json config_to_json(const Config& c) {
  const ModelParams& p = c.params;
  json net = {{"kind", std::string(to_string(p.network.kind))}};
  if (p.network.kind == NetworkKind::random) {
    net["p"] = p.network.p;
  } else {
    net["k"] = p.network.k;
    net["beta"] = p.network.beta;
  }

  json doc = {
      {"n_a", p.n_a},
      {"n_b", p.n_b},
      {"interest_a", p.interest_a},
      {"interest_b", p.interest_b},
      {"mu", p.mu},
      {"gamma_a", p.gamma_a},
      {"gamma_b", p.gamma_b},
      {"pi_max", p.pi_max},
      {"init_belief_mean", p.init_belief_mean},
      {"init_belief_sd", p.init_belief_sd},
      {"network", net},
      {"strategy", std::string(to_string(p.strategy))},
      {"ticks", p.ticks},
      {"cost", {{"a", p.cost.a}, {"b", p.cost.b}}},
      {"seed", c.seed},
  };
  if (c.seeds) doc["seeds"] = *c.seeds;
  if (c.steady_window) doc["steady_window"] = {c.steady_window->first, c.steady_window->last};
  doc["snapshot_ticks"] = c.snapshot_ticks;
  doc["output_dir"] = c.output_dir;
  doc["parallel"] = c.parallel;
  doc["max_runs"] = c.max_runs;
  doc["dump_network"] = c.dump_network;
  if (!c.axes.empty()) {
    json axes = json::object();
    for (const auto& axis : c.axes) {
      json values = json::array();
      for (const auto& v : axis.values) values.push_back(axis_value_to_json(v));
      axes[axis.name] = std::move(values);
    }
    doc["axes"] = std::move(axes);
  }
  return doc;
}

}  // namespace opinion
