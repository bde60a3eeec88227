#include "siegellab/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "siegellab/errors.hpp"

namespace siegellab {

using nlohmann::json;

RotationNumber ThetaSpec::resolve(int depth) const {
  const int sources = (named.empty() ? 0 : 1) + (quotients.empty() ? 0 : 1) + (has_value ? 1 : 0);
  if (sources != 1) {
    throw ConfigError("theta needs exactly one of: named, quotients, value");
  }
  if (!named.empty()) {
    if (named == "golden") return golden_mean(depth);
    if (named == "silver") return silver_mean(depth);
    throw ConfigError("unknown theta name '" + named + "' (expected golden or silver)");
  }
  if (!quotients.empty()) {
    for (long long a : quotients) {
      if (a < 1) throw ConfigError("theta quotients must be >= 1");
      // Same certifiability ceiling as the Gauss-map expansion.
      if (a > 1'000'000'000) throw ConfigError("theta quotients must be <= 1e9");
    }
    return periodic_quotients(quotients, depth);
  }
  if (!(value > 0.0 && value < 1.0)) {
    throw ConfigError("theta value must lie in (0, 1)");
  }
  return continued_fraction_expand(value, depth);
}

namespace {

// Line and 1-based column of a byte offset, for parse diagnostics.
std::string locate(const std::string& text, size_t byte) {
  size_t line = 1, col = 1;
  for (size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

void reject_unknown(const json& obj, std::initializer_list<const char*> known,
                    const std::string& where) {
  for (const auto& item : obj.items()) {
    bool ok = false;
    for (const char* k : known) {
      if (item.key() == k) ok = true;
    }
    if (!ok) throw ConfigError("unknown config key '" + item.key() + "' in " + where);
  }
}

long long require_integer(const json& v, const std::string& name) {
  if (!v.is_number_integer()) throw ConfigError(name + " must be an integer");
  return v.get<long long>();
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("config parse error at " + locate(text, e.byte) + ": " + e.what());
  }
  if (!j.is_object()) throw ConfigError("config root must be a JSON object");
  reject_unknown(j, {"product", "theta", "N", "n_levels", "seed"}, "config");

  RunConfig c;
  if (j.contains("product")) {
    if (!j["product"].is_string()) throw ConfigError("product must be a string");
    c.product = j["product"].get<std::string>();
    if (c.product != "rigid" && c.product != "douady-ghys") {
      throw ConfigError("unknown product '" + c.product + "' (expected rigid or douady-ghys)");
    }
  }
  if (j.contains("theta")) {
    const json& t = j["theta"];
    if (!t.is_object()) throw ConfigError("theta must be an object");
    reject_unknown(t, {"named", "quotients", "value"}, "theta");
    c.theta = ThetaSpec{};  // the block replaces the default, no merging
    int sources = 0;
    if (t.contains("named")) {
      if (!t["named"].is_string()) throw ConfigError("theta.named must be a string");
      c.theta.named = t["named"].get<std::string>();
      ++sources;
    }
    if (t.contains("quotients")) {
      if (!t["quotients"].is_array()) throw ConfigError("theta.quotients must be an array");
      for (const json& q : t["quotients"]) {
        c.theta.quotients.push_back(require_integer(q, "theta.quotients entry"));
      }
      if (c.theta.quotients.empty()) throw ConfigError("theta.quotients must be nonempty");
      ++sources;
    }
    if (t.contains("value")) {
      if (!t["value"].is_number()) throw ConfigError("theta.value must be a number");
      c.theta.value = t["value"].get<double>();
      c.theta.has_value = true;
      ++sources;
    }
    if (sources != 1) throw ConfigError("theta needs exactly one of: named, quotients, value");
  } else {
    c.theta.named = "golden";
  }
  if (j.contains("N")) {
    c.N = require_integer(j["N"], "N");
    if (c.N < 1) throw ConfigError("N must be >= 1");
  }
  if (j.contains("n_levels")) {
    const long long v = require_integer(j["n_levels"], "n_levels");
    if (v < 1 || v > 64) throw ConfigError("n_levels must be in 1..64");
    c.n_levels = static_cast<int>(v);
  }
  if (j.contains("seed")) {
    const json& s = j["seed"];
    if (!(s.is_number_unsigned() || (s.is_number_integer() && s.get<long long>() >= 0))) {
      throw ConfigError("seed must be a nonnegative integer");
    }
    c.seed = s.get<std::uint64_t>();
  }
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot open config file " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

std::string serialize_config(const RunConfig& config) {
  json t;
  if (!config.theta.named.empty()) {
    t["named"] = config.theta.named;
  } else if (!config.theta.quotients.empty()) {
    t["quotients"] = config.theta.quotients;
  } else {
    t["value"] = config.theta.value;
  }
  json j;
  j["product"] = config.product;
  j["theta"] = t;
  j["N"] = config.N;
  j["n_levels"] = config.n_levels;
  j["seed"] = config.seed;
  return j.dump(2) + "\n";
}

}  // namespace siegellab
