#include "problem.hpp"

#include <charconv>
#include <fstream>
#include <limits>

#include "paretoenum/errors.hpp"
#include "paretoenum/external_oracle.hpp"
#include "paretoenum/reference.hpp"

namespace paretoenum::cli {

namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_uint(std::string_view text, const std::string& field) {
  text = trim(text);
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw InputError(field, "expected a non-negative integer, got \"" + std::string(text) + "\"");
  }
  return value;
}

std::uint64_t json_uint(const json& value, const std::string& field) {
  if (!value.is_number_integer() ||
      (!value.is_number_unsigned() && value.get<std::int64_t>() < 0)) {
    throw InputError(field, "expected a non-negative integer");
  }
  return value.get<std::uint64_t>();
}

std::vector<std::uint64_t> json_uint_array(const json& value, const std::string& field) {
  if (!value.is_array()) throw InputError(field, "expected an array of non-negative integers");
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(json_uint(value[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

const json& require(const json& obj, const char* key, const std::string& field) {
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(field, "missing");
  return *it;
}

}  // namespace

std::vector<std::uint64_t> parse_uint_list(std::string_view text, const std::string& field) {
  std::vector<std::uint64_t> out;
  if (trim(text).empty()) return out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = text.find(',', start);
    out.push_back(parse_uint(text.substr(start, comma - start), field));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

PointSet parse_point_list(std::string_view text, std::size_t arity, const std::string& field) {
  PointSet out;
  if (trim(text).empty()) return out;
  std::size_t start = 0;
  for (;;) {
    const auto semi = text.find(';', start);
    auto coords = parse_uint_list(text.substr(start, semi - start), field);
    if (coords.size() != arity) {
      throw InputError(field, "point \"" + std::string(trim(text.substr(start, semi - start))) +
                                  "\" needs " + std::to_string(arity) + " coordinates");
    }
    out.insert(Point(std::move(coords)));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return out;
}

Problem parse_problem(const json& doc) {
  if (!doc.is_object()) throw InputError("problem", "expected a JSON object");
  Problem problem;

  auto bounds = json_uint_array(require(doc, "bounds", "bounds"), "bounds");
  if (bounds.empty()) throw InputError("bounds", "must list at least one dimension");
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    if (bounds[i] == std::numeric_limits<std::uint64_t>::max()) {
      throw InputError("bounds[" + std::to_string(i) + "]", "too large");
    }
  }
  problem.space = SearchSpace(std::move(bounds));
  const std::size_t k = problem.space.arity();

  const json& oracle = require(doc, "oracle", "oracle");
  if (!oracle.is_object()) throw InputError("oracle", "expected an object");
  const json& kind = require(oracle, "kind", "oracle.kind");
  if (!kind.is_string()) throw InputError("oracle.kind", "expected a string");
  const auto kind_name = kind.get<std::string>();

  OracleSpec& spec = problem.oracle;
  if (kind_name == "cone") {
    spec.kind = OracleKind::kCone;
    const json& gens = require(oracle, "generators", "oracle.generators");
    if (!gens.is_array()) throw InputError("oracle.generators", "expected an array of points");
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const std::string field = "oracle.generators[" + std::to_string(i) + "]";
      auto coords = json_uint_array(gens[i], field);
      if (coords.size() != k) {
        throw InputError(field, "needs " + std::to_string(k) + " coordinates");
      }
      spec.generators.insert(Point(std::move(coords)));
    }
  } else if (kind_name == "threshold") {
    spec.kind = OracleKind::kThreshold;
    spec.weights = json_uint_array(require(oracle, "weights", "oracle.weights"), "oracle.weights");
    const json& t = require(oracle, "threshold", "oracle.threshold");
    if (!t.is_number_integer()) throw InputError("oracle.threshold", "expected an integer");
    if (t.is_number_unsigned() &&
        t.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      throw InputError("oracle.threshold", "out of range");
    }
    spec.threshold = t.get<std::int64_t>();
  } else if (kind_name == "external") {
    spec.kind = OracleKind::kExternal;
    const json& cmd = require(oracle, "command", "oracle.command");
    if (cmd.is_string()) {
      spec.command = {cmd.get<std::string>()};
      spec.use_shell = true;
    } else if (cmd.is_array()) {
      for (std::size_t i = 0; i < cmd.size(); ++i) {
        if (!cmd[i].is_string()) {
          throw InputError("oracle.command[" + std::to_string(i) + "]", "expected a string");
        }
        spec.command.push_back(cmd[i].get<std::string>());
      }
      spec.use_shell = false;
    } else {
      throw InputError("oracle.command", "expected a string or an array of strings");
    }
  } else {
    throw InputError("oracle.kind",
                     "unknown kind \"" + kind_name + "\" (expected cone, threshold or external)");
  }

  if (auto it = doc.find("strategy"); it != doc.end()) {
    if (!it->is_string()) throw InputError("strategy", "expected a string");
    auto parsed = parse_strategy(it->get<std::string>());
    if (!parsed) throw InputError("strategy", "unknown strategy \"" + it->get<std::string>() + "\"");
    problem.strategy = *parsed;
  }
  if (auto it = doc.find("cache"); it != doc.end()) {
    if (!it->is_boolean()) throw InputError("cache", "expected true or false");
    problem.cache = it->get<bool>();
  }

  validate(problem);
  return problem;
}

Problem load_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("problem", "cannot open " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("problem", std::string("invalid JSON: ") + e.what());
  }
  return parse_problem(doc);
}

void validate(const Problem& problem) {
  const auto& space = problem.space;
  const auto& spec = problem.oracle;
  switch (spec.kind) {
    case OracleKind::kCone:
      for (const auto& g : spec.generators) {
        if (!space.contains(g)) {
          throw InputError("oracle.generators", "generator " + g.to_string() +
                                                    " lies outside bounds " +
                                                    space.top().to_string());
        }
      }
      break;
    case OracleKind::kThreshold:
      if (spec.weights.size() != space.arity()) {
        throw InputError("oracle.weights", "needs " + std::to_string(space.arity()) +
                                               " entries, got " +
                                               std::to_string(spec.weights.size()));
      }
      break;
    case OracleKind::kExternal:
      if (spec.command.empty() || spec.command.front().empty()) {
        throw InputError("oracle.command", "must not be empty");
      }
      break;
  }
}

RandomRequest parse_random_request(const std::vector<std::string>& tokens) {
  RandomRequest request;
  for (const auto& token : tokens) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) {
      throw InputError("--random", "expected key=value, got \"" + token + "\"");
    }
    const std::string key = token.substr(0, eq);
    const std::string field = "--random " + key;
    const auto value = parse_uint(std::string_view(token).substr(eq + 1), field);
    if (key == "k") {
      if (value == 0) throw InputError(field, "must be at least 1");
      request.k = value;
    } else if (key == "n") {
      if (value == std::numeric_limits<std::uint64_t>::max()) throw InputError(field, "too large");
      request.n = value;
    } else if (key == "front") {
      request.front = value;
    } else if (key == "seed") {
      request.seed = value;
    } else {
      throw InputError("--random", "unknown key \"" + key + "\" (expected k, n, front, seed)");
    }
  }
  return request;
}

Problem random_problem(const RandomRequest& request) {
  Problem problem;
  problem.space = SearchSpace(std::vector<Coord>(request.k, request.n));
  problem.oracle.kind = OracleKind::kCone;
  problem.oracle.generators = random_antichain({problem.space, request.front, request.seed});
  return problem;
}

std::unique_ptr<FeasibilityOracle> make_base_oracle(const Problem& problem) {
  const auto& spec = problem.oracle;
  const std::size_t k = problem.space.arity();
  switch (spec.kind) {
    case OracleKind::kCone:
      return std::make_unique<ConeUnionOracle>(k, spec.generators);
    case OracleKind::kThreshold:
      return std::make_unique<WeightedThresholdOracle>(spec.weights, spec.threshold);
    case OracleKind::kExternal:
      if (spec.use_shell) return ExternalProcessOracle::from_shell(k, spec.command.front());
      return std::make_unique<ExternalProcessOracle>(k, spec.command);
  }
  throw UsageError("unknown oracle kind");
}

}  // namespace paretoenum::cli
