#include "seqhc/scenarios/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "seqhc/errors.hpp"
#include "seqhc/spaces/sequence_norm.hpp"

namespace seqhc::scenarios {

using criterion::json;

std::string to_string(ScenarioKind k) {
  switch (k) {
    case ScenarioKind::analytic: return "analytic";
    case ScenarioKind::snake: return "snake";
    case ScenarioKind::oracle: return "oracle";
  }
  return "?";
}

std::string to_string(ArithmeticMode m) { return m == ArithmeticMode::exact ? "exact" : "float"; }

std::string Command::name() const {
  switch (kind) {
    case Kind::check_i: return "check-i";
    case Kind::check_ii: return "check-ii";
    case Kind::check_iii: return "check-iii";
    case Kind::check_primed: return "check-primed";
    case Kind::build_vector: return "build-vector";
    case Kind::verify_orbit: return "verify-orbit";
    case Kind::probe: return "probe";
  }
  return "?";
}

json Command::arguments() const {
  switch (kind) {
    case Kind::build_vector: return {{"N", N}};
    case Kind::verify_orbit: return {{"N", N}, {"from", from}, {"to", to}};
    case Kind::probe: return {{"N", N}, {"target", target}, {"n_max", n_max}};
    default: return json::object();
  }
}

namespace {

std::optional<Command::Kind> command_kind(std::string_view name) {
  using K = Command::Kind;
  if (name == "check-i") return K::check_i;
  if (name == "check-ii") return K::check_ii;
  if (name == "check-iii") return K::check_iii;
  if (name == "check-primed") return K::check_primed;
  if (name == "build-vector") return K::build_vector;
  if (name == "verify-orbit") return K::verify_orbit;
  if (name == "probe") return K::probe;
  return std::nullopt;
}

std::uint64_t parse_uint(std::string_view s, const std::string& field) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw ConfigError(field, 0, "expected a non-negative integer for " + field + ", got '" + std::string(s) + "'");
  return v;
}

/// Line of the key path in the raw text: each component is searched as a
/// quoted key after the previous one. Falls back to the last found line.
std::size_t locate(const std::string& text, const std::vector<std::string>& path) {
  std::size_t pos = 0;
  std::size_t found = std::string::npos;
  for (const auto& key : path) {
    const std::string quoted = "\"" + key + "\"";
    std::size_t at = pos;
    while ((at = text.find(quoted, at)) != std::string::npos) {
      std::size_t after = at + quoted.size();
      while (after < text.size() && std::isspace(static_cast<unsigned char>(text[after]))) ++after;
      if (after < text.size() && text[after] == ':') break;
      at += quoted.size();
    }
    if (at == std::string::npos) break;
    found = at;
    pos = at + quoted.size();
  }
  if (found == std::string::npos) return 0;
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(found), '\n'));
}

std::string dotted(const std::vector<std::string>& path) {
  std::string out;
  for (const auto& p : path) out += (out.empty() ? "" : ".") + p;
  return out;
}

class Reader {
 public:
  explicit Reader(const std::string& text) : text_(text) {}

  [[noreturn]] void fail(const std::vector<std::string>& path, const std::string& what) const {
    const std::size_t line = locate(text_, path);
    std::string msg = dotted(path) + ": " + what;
    if (line) msg = "line " + std::to_string(line) + ": " + msg;
    throw ConfigError(dotted(path), line, msg);
  }

  const json* find(const json& obj, const std::vector<std::string>& path) const {
    const json* cur = &obj;
    for (const auto& k : path) {
      if (!cur->is_object()) return nullptr;
      auto it = cur->find(k);
      if (it == cur->end()) return nullptr;
      cur = &*it;
    }
    return cur;
  }

  template <class T>
  void unsigned_field(const json& root, const std::vector<std::string>& path, T& out) const {
    const json* v = find(root, path);
    if (!v) return;
    if (!v->is_number_integer() || v->get<long long>() < 0) fail(path, "expected a non-negative integer");
    out = static_cast<T>(v->get<unsigned long long>());
  }

  void positive_field(const json& root, const std::vector<std::string>& path, std::size_t& out) const {
    unsigned_field(root, path, out);
    if (find(root, path) && out == 0) fail(path, "must be positive");
  }

  std::optional<double> double_field(const json& root, const std::vector<std::string>& path) const {
    const json* v = find(root, path);
    if (!v) return std::nullopt;
    if (!v->is_number() || v->get<double>() < 0) fail(path, "expected a non-negative number");
    return v->get<double>();
  }

  std::optional<std::string> string_field(const json& root, const std::vector<std::string>& path) const {
    const json* v = find(root, path);
    if (!v) return std::nullopt;
    if (!v->is_string()) fail(path, "expected a string");
    return v->get<std::string>();
  }

  std::optional<Rational> rational_field(const json& root, const std::vector<std::string>& path) const {
    const json* v = find(root, path);
    if (!v) return std::nullopt;
    try {
      if (v->is_string()) return parse_rational(v->get<std::string>());
      if (v->is_number_integer()) return Rational(v->dump());
      if (v->is_number()) return parse_rational(v->dump());
    } catch (const std::exception&) {
    }
    fail(path, "expected a rational number such as 2, 1.5 or \"3/2\"");
  }

 private:
  const std::string& text_;
};

void reject_unknown(const Reader& r, const json& obj, const std::vector<std::string>& prefix,
                    std::initializer_list<const char*> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || it.key() == a;
    if (!ok) {
      auto path = prefix;
      path.push_back(it.key());
      r.fail(path, "unknown field");
    }
  }
}

Command command_from_json(const Reader& r, const json& entry, std::size_t index) {
  const std::vector<std::string> base{"commands"};
  const std::string where = "commands[" + std::to_string(index) + "]";
  if (entry.is_string()) {
    try {
      return parse_command(entry.get<std::string>());
    } catch (const ConfigError& e) {
      r.fail(base, where + ": " + e.what());
    }
  }
  if (!entry.is_object() || !entry.contains("command") || !entry["command"].is_string())
    r.fail(base, where + ": expected a command name or an object with a \"command\" field");
  const auto kind = command_kind(entry["command"].get<std::string>());
  if (!kind) r.fail(base, where + ": unknown command '" + entry["command"].get<std::string>() + "'");
  Command c;
  c.kind = *kind;
  for (auto it = entry.begin(); it != entry.end(); ++it) {
    if (it.key() == "command") continue;
    const bool known = it.key() == "N" || it.key() == "from" || it.key() == "to" || it.key() == "target" ||
                       it.key() == "n_max";
    if (!known) r.fail({"commands", it.key()}, where + ": unknown argument");
    if (!it->is_number_integer() || it->get<long long>() < 0)
      r.fail({"commands", it.key()}, where + ": expected a non-negative integer");
    const auto v = it->get<unsigned long long>();
    if (it.key() == "N") c.N = v;
    if (it.key() == "from") c.from = v;
    if (it.key() == "to") c.to = v;
    if (it.key() == "target") c.target = v;
    if (it.key() == "n_max") c.n_max = v;
  }
  return c;
}

}  // namespace

Command parse_command(const std::string& text) {
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const auto kind = command_kind(head);
  if (!kind) throw ConfigError("command", 0, "unknown command '" + text + "'");
  Command c;
  c.kind = *kind;
  if (colon == std::string::npos) return c;
  const std::string rest = text.substr(colon + 1);
  switch (c.kind) {
    case Command::Kind::build_vector:
      c.N = parse_uint(rest, "build-vector N");
      break;
    case Command::Kind::verify_orbit: {
      const auto dots = rest.find("..");
      if (dots == std::string::npos) throw ConfigError("command", 0, "verify-orbit expects FROM..TO[:N]");
      const auto n_sep = rest.find(':', dots);
      c.from = parse_uint(rest.substr(0, dots), "verify-orbit from");
      c.to = parse_uint(rest.substr(dots + 2, n_sep == std::string::npos ? std::string::npos : n_sep - dots - 2),
                        "verify-orbit to");
      if (n_sep != std::string::npos) c.N = parse_uint(rest.substr(n_sep + 1), "verify-orbit N");
      break;
    }
    case Command::Kind::probe: {
      const auto sep = rest.find(':');
      c.target = parse_uint(rest.substr(0, sep), "probe target");
      if (sep != std::string::npos) {
        const auto sep2 = rest.find(':', sep + 1);
        c.n_max = parse_uint(rest.substr(sep + 1, sep2 == std::string::npos ? std::string::npos : sep2 - sep - 1),
                             "probe n_max");
        if (sep2 != std::string::npos) c.N = parse_uint(rest.substr(sep2 + 1), "probe N");
      }
      break;
    }
    default:
      throw ConfigError("command", 0, c.name() + " takes no arguments");
  }
  return c;
}

RunConfig parse_run_config(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto byte = std::min<std::size_t>(e.byte, text.size());
    const std::size_t line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(byte > 0 ? byte - 1 : 0), '\n'));
    throw ConfigError("", line, "line " + std::to_string(line) + ": malformed config: " + e.what());
  }
  Reader r(text);
  if (!root.is_object()) throw ConfigError("", 1, "line 1: config must be a JSON object");
  reject_unknown(r, root, {},
                 {"scenario", "mode", "horizon", "k_max", "tail_max", "margin", "tolerances", "analytic", "snake",
                  "oracle", "proposition_schedule", "commands"});

  RunConfig cfg;
  const auto kind = r.string_field(root, {"scenario"});
  if (!kind) r.fail({"scenario"}, "missing required field (analytic, snake or oracle)");
  if (*kind == "analytic") cfg.scenario = ScenarioKind::analytic;
  else if (*kind == "snake") cfg.scenario = ScenarioKind::snake;
  else if (*kind == "oracle") cfg.scenario = ScenarioKind::oracle;
  else r.fail({"scenario"}, "unknown scenario '" + *kind + "'");

  if (auto mode = r.string_field(root, {"mode"})) {
    if (*mode == "exact") cfg.mode = ArithmeticMode::exact;
    else if (*mode == "float") cfg.mode = ArithmeticMode::floating;
    else r.fail({"mode"}, "expected \"exact\" or \"float\"");
  }
  r.positive_field(root, {"horizon"}, cfg.horizon);
  r.positive_field(root, {"k_max"}, cfg.horizons.k_max);
  r.positive_field(root, {"tail_max"}, cfg.horizons.tail_max);
  r.unsigned_field(root, {"margin"}, cfg.horizons.margin);

  if (const json* t = r.find(root, {"tolerances"})) {
    if (!t->is_object()) r.fail({"tolerances"}, "expected a table");
    reject_unknown(r, *t, {"tolerances"}, {"decay", "estimate", "exact_zero_primed"});
    cfg.decay_tol = r.double_field(root, {"tolerances", "decay"});
    cfg.estimate_tol = r.double_field(root, {"tolerances", "estimate"});
    if (const json* z = r.find(root, {"tolerances", "exact_zero_primed"})) {
      if (!z->is_boolean()) r.fail({"tolerances", "exact_zero_primed"}, "expected true or false");
      cfg.exact_zero_primed = z->get<bool>();
    }
  }

  if (const json* a = r.find(root, {"analytic"})) {
    if (!a->is_object()) r.fail({"analytic"}, "expected a table");
    reject_unknown(r, *a, {"analytic"}, {"dense_count", "mesh_density", "schedule_length"});
    r.positive_field(root, {"analytic", "dense_count"}, cfg.dense_count);
    std::size_t mesh = static_cast<std::size_t>(cfg.mesh_density);
    r.positive_field(root, {"analytic", "mesh_density"}, mesh);
    if (mesh > 4096) r.fail({"analytic", "mesh_density"}, "must not exceed 4096");
    cfg.mesh_density = static_cast<int>(mesh);
    r.positive_field(root, {"analytic", "schedule_length"}, cfg.schedule_length);
  }

  if (const json* s = r.find(root, {"snake"})) {
    if (!s->is_object()) r.fail({"snake"}, "expected a table");
    reject_unknown(r, *s, {"snake"}, {"lambda", "space", "targets", "budget"});
    if (auto l = r.rational_field(root, {"snake", "lambda"})) cfg.lambda = *l;
    if (auto sp = r.string_field(root, {"snake", "space"})) cfg.space = *sp;
    r.positive_field(root, {"snake", "targets"}, cfg.targets);
    if (const json* b = r.find(root, {"snake", "budget"})) {
      if (!b->is_object()) r.fail({"snake", "budget"}, "expected a table");
      reject_unknown(r, *b, {"snake", "budget"}, {"coefficient", "power"});
      operators::GrowthBudget budget;
      r.unsigned_field(root, {"snake", "budget", "coefficient"}, budget.coefficient);
      r.unsigned_field(root, {"snake", "budget", "power"}, budget.power);
      cfg.budget = budget;
    }
  }

  if (const json* o = r.find(root, {"oracle"})) {
    if (!o->is_object()) r.fail({"oracle"}, "expected a table");
    reject_unknown(r, *o, {"oracle"}, {"length", "lambda", "dense_count"});
    r.positive_field(root, {"oracle", "length"}, cfg.oracle_length);
    if (cfg.oracle_length > 10000) r.fail({"oracle", "length"}, "must not exceed 10000");
    if (auto l = r.rational_field(root, {"oracle", "lambda"})) cfg.lambda = *l;
    r.positive_field(root, {"oracle", "dense_count"}, cfg.dense_count);
  }

  if (cfg.scenario != ScenarioKind::analytic && !(cfg.lambda > 1)) {
    const std::string table = cfg.scenario == ScenarioKind::snake ? "snake" : "oracle";
    r.fail({table, "lambda"}, "weight must satisfy lambda > 1, got " + seqhc::to_string(cfg.lambda));
  }
  if (cfg.scenario == ScenarioKind::snake) {
    try {
      (void)spaces::parse_sequence_norm(cfg.space);
    } catch (const std::exception& e) {
      r.fail({"snake", "space"}, e.what());
    }
  }

  if (auto p = r.string_field(root, {"proposition_schedule"})) {
    if (*p != "scenario" && *p != "greedy") r.fail({"proposition_schedule"}, "expected \"scenario\" or \"greedy\"");
    cfg.proposition_schedule = *p;
  }

  if (const json* c = r.find(root, {"commands"})) {
    if (!c->is_array()) r.fail({"commands"}, "expected a list");
    for (std::size_t i = 0; i < c->size(); ++i) cfg.commands.push_back(command_from_json(r, (*c)[i], i));
  }
  return cfg;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("", 0, "cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_run_config(buf.str());
}

void validate_run_config(const RunConfig& cfg) {
  if (cfg.commands.empty()) throw ConfigError("commands", 0, "commands: at least one command is required");
  for (const auto& c : cfg.commands) {
    const std::string where = "commands: " + c.name();
    switch (c.kind) {
      case Command::Kind::build_vector:
      case Command::Kind::verify_orbit:
      case Command::Kind::probe:
        if (c.N == 0) throw ConfigError("commands", 0, where + ": N must be positive");
        if (c.N > cfg.horizon)
          throw ConfigError("commands", 0,
                            where + ": N = " + std::to_string(c.N) + " exceeds the horizon " +
                                std::to_string(cfg.horizon));
        break;
      default:
        break;
    }
    if (c.kind == Command::Kind::verify_orbit) {
      if (c.from > c.to) throw ConfigError("commands", 0, where + ": empty range");
      if (c.to > cfg.horizon)
        throw ConfigError("commands", 0, where + ": k = " + std::to_string(c.to) + " exceeds the horizon");
    }
    if (c.kind == Command::Kind::probe && c.target == 0)
      throw ConfigError("commands", 0, where + ": target index is 1-based");
  }
}

}  // namespace seqhc::scenarios
