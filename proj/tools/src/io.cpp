#include "riparian/cli/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace riparian::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Decimal text of a JSON scalar. Floats come back in their shortest
// round-trip form, so "4.17" in the file is read exactly as 417/100.
std::string scalar_text(const nlohmann::json& value, const std::string& what, const std::string& source) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number()) return value.dump();
  throw InputError(source + ": " + what + " must be a number or a string");
}

}  // namespace

ClaimsTable parse_claims_csv(std::string_view text, const std::string& source) {
  ClaimsTable table;
  std::set<std::string> seen;
  bool header_seen = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    const std::string_view line = trim(text.substr(start, end == std::string_view::npos ? end : end - start));
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;
    if (line.empty()) continue;
    const std::string where = source + ":" + std::to_string(line_no);
    const auto comma = line.find(',');
    if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos) {
      throw InputError(where + ": expected exactly two fields");
    }
    const std::string first(trim(line.substr(0, comma)));
    const std::string second(trim(line.substr(comma + 1)));
    if (!header_seen) {
      if (first != "agent" || second != "claim") throw InputError(where + ": header must be 'agent,claim'");
      header_seen = true;
      continue;
    }
    if (first.empty()) throw InputError(where + ": empty agent id");
    if (!seen.insert(first).second) throw InputError(where + ": duplicate agent id '" + first + "'");
    try {
      (void)Rational::parse(second);
    } catch (const std::invalid_argument&) {
      throw InputError(where + ": claim '" + second + "' is not a decimal number");
    }
    table.agents.push_back(first);
    table.claims.push_back(second);
  }
  if (!header_seen) throw InputError(source + ": missing 'agent,claim' header");
  if (table.agents.empty()) throw InputError(source + ": no agents listed");
  return table;
}

ClaimsTable read_claims_file(const std::string& path) { return parse_claims_csv(read_text_file(path), path); }

BasinSpec parse_basin_json(std::string_view text, const std::string& source) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(source + ": invalid JSON: " + e.what());
  }
  if (!doc.is_object()) throw InputError(source + ": top level must be an object");
  for (const char* key : {"nodes", "edges", "budget"}) {
    if (!doc.contains(key)) throw InputError(source + ": missing field '" + key + "'");
  }
  BasinSpec spec;
  if (!doc["nodes"].is_array()) throw InputError(source + ": 'nodes' must be an array");
  for (const auto& node : doc["nodes"]) {
    if (!node.is_object() || !node.contains("id") || !node.contains("claim")) {
      throw InputError(source + ": every node needs 'id' and 'claim'");
    }
    BasinSpec::Node n;
    n.id = node["id"].is_string() ? node["id"].get<std::string>() : node["id"].dump();
    n.claim = scalar_text(node["claim"], "claim of node '" + n.id + "'", source);
    if (node.contains("gamma") && !node["gamma"].is_null()) {
      n.gamma = scalar_text(node["gamma"], "gamma of node '" + n.id + "'", source);
    }
    spec.nodes.push_back(std::move(n));
  }
  if (!doc["edges"].is_array()) throw InputError(source + ": 'edges' must be an array");
  for (const auto& edge : doc["edges"]) {
    if (!edge.is_array() || edge.size() < 2 || edge.size() > 3) {
      throw InputError(source + ": every edge must be [from, to] or [from, to, weight]");
    }
    auto id_of = [](const nlohmann::json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    BasinSpec::Edge e{id_of(edge[0]), id_of(edge[1]), std::nullopt};
    if (edge.size() == 3) e.weight = scalar_text(edge[2], "edge weight", source);
    spec.edges.push_back(std::move(e));
  }
  spec.budget = scalar_text(doc["budget"], "budget", source);
  try {
    for (const auto& n : spec.nodes) {
      (void)Rational::parse(n.claim);
      if (n.gamma) (void)Rational::parse(*n.gamma);
    }
    (void)Rational::parse(spec.budget);
  } catch (const std::invalid_argument& e) {
    throw InputError(source + ": " + e.what());
  }
  return spec;
}

BasinSpec read_basin_file(const std::string& path) { return parse_basin_json(read_text_file(path), path); }

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << content;
  if (!out) throw InputError("failed writing " + path);
}

}  // namespace riparian::cli
