#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "riparian/basin.hpp"
#include "riparian/problem.hpp"

namespace riparian::cli {

/// Malformed or unreadable input file. Maps to exit code 2 like a
/// ValidationError.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rows of a ClaimsFile (`agent,claim` CSV), values kept as text.
struct ClaimsTable {
  std::vector<std::string> agents;
  std::vector<std::string> claims;
};

ClaimsTable parse_claims_csv(std::string_view text, const std::string& source = "<input>");
ClaimsTable read_claims_file(const std::string& path);

/// Contents of a BasinFile, values kept as text.
struct BasinSpec {
  struct Node {
    std::string id;
    std::string claim;
    std::optional<std::string> gamma;
  };
  struct Edge {
    std::string from;
    std::string to;
    std::optional<std::string> weight;
  };
  std::vector<Node> nodes;
  std::vector<Edge> edges;
  std::string budget;
};

BasinSpec parse_basin_json(std::string_view text, const std::string& source = "<input>");
BasinSpec read_basin_file(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

template <Quantity T>
Problem<T> to_problem(const ClaimsTable& table, const std::string& budget) {
  std::vector<T> claims;
  claims.reserve(table.claims.size());
  for (const auto& c : table.claims) claims.push_back(parse_quantity<T>(c));
  return validate_problem(std::move(claims), parse_quantity<T>(budget));
}

template <Quantity T>
BasinGraph<T> to_basin(const BasinSpec& spec) {
  std::vector<BasinNode<T>> nodes;
  for (const auto& n : spec.nodes) {
    std::optional<T> gamma;
    if (n.gamma) gamma = parse_quantity<T>(*n.gamma);
    nodes.push_back({n.id, parse_quantity<T>(n.claim), std::move(gamma)});
  }
  std::vector<BasinEdge<T>> edges;
  for (const auto& e : spec.edges) {
    std::optional<T> weight;
    if (e.weight) weight = parse_quantity<T>(*e.weight);
    edges.push_back({e.from, e.to, std::move(weight)});
  }
  return validate_basin(std::move(nodes), std::move(edges), parse_quantity<T>(spec.budget));
}

}  // namespace riparian::cli
