#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "riparian/error.hpp"
#include "riparian/problem.hpp"
#include "riparian/rules.hpp"

namespace riparian {

template <Quantity T>
struct BasinNode {
  std::string id;
  T claim;
  /// Local retention share; falls back to the rule-wide γ when absent.
  std::optional<T> gamma;
};

template <Quantity T>
struct BasinEdge {
  std::string from;  // upstream
  std::string to;    // downstream
  /// Reserved. Residuals are always split equally, so the outgoing weights of
  /// a node must all agree when present.
  std::optional<T> weight;
};

/// A validated acyclic river basin: nodes, upstream→downstream edges and a
/// budget. Nodes keep their input order; the topological order is computed.
template <Quantity T>
class BasinGraph {
 public:
  const std::vector<BasinNode<T>>& nodes() const noexcept { return nodes_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  const std::vector<std::size_t>& successors(std::size_t node) const { return successors_.at(node); }
  const std::vector<std::size_t>& predecessors(std::size_t node) const { return predecessors_.at(node); }
  const std::vector<std::size_t>& topological_order() const noexcept { return topo_; }
  const std::vector<std::size_t>& mouths() const noexcept { return mouths_; }
  bool is_mouth(std::size_t node) const { return successors_.at(node).empty(); }
  bool is_confluence(std::size_t node) const { return predecessors_.at(node).size() > 1; }
  const T& budget() const noexcept { return problem_.budget(); }
  const T& aggregate() const noexcept { return problem_.aggregate(); }
  /// Claims in node order with the basin budget.
  const Problem<T>& as_problem() const noexcept { return problem_; }

  std::optional<std::size_t> index_of(const std::string& id) const {
    const auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

 private:
  template <Quantity U>
  friend BasinGraph<U> validate_basin(std::vector<BasinNode<U>>, std::vector<BasinEdge<U>>, U);

  BasinGraph(std::vector<BasinNode<T>> nodes, Problem<T> problem) : nodes_(std::move(nodes)), problem_(std::move(problem)) {}

  std::vector<BasinNode<T>> nodes_;
  Problem<T> problem_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::vector<std::size_t>> successors_;
  std::vector<std::vector<std::size_t>> predecessors_;
  std::vector<std::size_t> topo_;
  std::vector<std::size_t> mouths_;
};

namespace detail {

// Every node left over by Kahn's algorithm has a leftover predecessor, so
// walking predecessors from any of them must revisit a node.
inline std::vector<std::size_t> find_cycle(const std::vector<std::vector<std::size_t>>& predecessors,
                                           const std::vector<bool>& leftover) {
  std::size_t start = 0;
  while (!leftover[start]) ++start;
  std::vector<int> seen_at(leftover.size(), -1);
  std::vector<std::size_t> walk;
  std::size_t current = start;
  while (seen_at[current] < 0) {
    seen_at[current] = static_cast<int>(walk.size());
    walk.push_back(current);
    for (std::size_t pred : predecessors[current]) {
      if (leftover[pred]) {
        current = pred;
        break;
      }
    }
  }
  std::vector<std::size_t> cycle(walk.begin() + seen_at[current], walk.end());
  std::reverse(cycle.begin(), cycle.end());  // report in flow direction
  return cycle;
}

}  // namespace detail

template <Quantity T>
BasinGraph<T> validate_basin(std::vector<BasinNode<T>> nodes, std::vector<BasinEdge<T>> edges, T budget) {
  using Traits = NumericTraits<T>;
  if (nodes.empty()) throw ValidationError(ErrorCode::EmptyClaims, "basin has no nodes");

  std::map<std::string, std::size_t> index;
  std::vector<T> claims;
  claims.reserve(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& node = nodes[i];
    if (!index.emplace(node.id, i).second) {
      throw ValidationError(ErrorCode::DuplicateNode, "node '" + node.id + "' declared twice", i, {node.id});
    }
    if (node.claim < T{0}) {
      throw ValidationError(ErrorCode::NegativeClaim, "claim of node '" + node.id + "' is " + Traits::to_string(node.claim),
                            i, {node.id});
    }
    if (node.gamma && (*node.gamma < T{0} || T{1} < *node.gamma)) {
      throw ValidationError(ErrorCode::ParameterOutOfRange,
                            "gamma of node '" + node.id + "' is outside [0, 1]", i, {node.id});
    }
    claims.push_back(node.claim);
  }

  const std::size_t n = nodes.size();
  std::vector<std::vector<std::size_t>> successors(n);
  std::vector<std::vector<std::size_t>> predecessors(n);
  std::vector<std::optional<T>> outgoing_weight(n);
  for (const auto& edge : edges) {
    const auto from = index.find(edge.from);
    const auto to = index.find(edge.to);
    if (from == index.end() || to == index.end()) {
      const std::string& missing = from == index.end() ? edge.from : edge.to;
      throw ValidationError(ErrorCode::UnknownNode, "edge refers to undeclared node '" + missing + "'", std::nullopt,
                            {missing});
    }
    auto& succ = successors[from->second];
    if (std::find(succ.begin(), succ.end(), to->second) != succ.end()) {
      throw ValidationError(ErrorCode::DuplicateEdge, "edge " + edge.from + " -> " + edge.to + " listed twice",
                            std::nullopt, {edge.from, edge.to});
    }
    if (edge.weight) {
      auto& seen = outgoing_weight[from->second];
      if (seen && !(*seen == *edge.weight)) {
        throw ValidationError(ErrorCode::UnequalEdgeWeights,
                              "outgoing edges of '" + edge.from + "' carry different weights; only equal splits are supported",
                              std::nullopt, {edge.from});
      }
      seen = edge.weight;
    }
    succ.push_back(to->second);
    predecessors[to->second].push_back(from->second);
  }
  for (auto& succ : successors) std::sort(succ.begin(), succ.end());
  for (auto& pred : predecessors) std::sort(pred.begin(), pred.end());

  // Kahn's algorithm, lowest input position first among ready nodes.
  std::vector<std::size_t> indegree(n);
  for (std::size_t i = 0; i < n; ++i) indegree[i] = predecessors[i].size();
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t i = 0; i < n; ++i) {
    if (indegree[i] == 0) ready.push(i);
  }
  std::vector<std::size_t> topo;
  topo.reserve(n);
  while (!ready.empty()) {
    const std::size_t node = ready.top();
    ready.pop();
    topo.push_back(node);
    for (std::size_t next : successors[node]) {
      if (--indegree[next] == 0) ready.push(next);
    }
  }
  if (topo.size() != n) {
    std::vector<bool> leftover(n, true);
    for (std::size_t i : topo) leftover[i] = false;
    std::vector<std::string> cycle_ids;
    std::string path;
    for (std::size_t i : detail::find_cycle(predecessors, leftover)) {
      cycle_ids.push_back(nodes[i].id);
      path += nodes[i].id + " -> ";
    }
    path += cycle_ids.front();
    throw ValidationError(ErrorCode::CycleDetected, "cycle " + path, std::nullopt, std::move(cycle_ids));
  }

  std::vector<std::size_t> mouths;
  for (std::size_t i = 0; i < n; ++i) {
    if (successors[i].empty()) mouths.push_back(i);
  }
  if (mouths.empty()) throw ValidationError(ErrorCode::NoMouth, "basin has no mouth");

  Problem<T> problem = validate_problem(std::move(claims), std::move(budget));
  BasinGraph<T> graph(std::move(nodes), std::move(problem));
  graph.index_ = std::move(index);
  graph.successors_ = std::move(successors);
  graph.predecessors_ = std::move(predecessors);
  graph.topo_ = std::move(topo);
  graph.mouths_ = std::move(mouths);
  return graph;
}

template <Quantity T>
struct BasinAllocation {
  std::vector<std::string> ids;
  /// Pre-scaling shares r_i; they sum to the aggregate claim.
  std::vector<T> retained_shares;
  Allocation<T> awards;

  const T& retained(const std::string& id) const { return retained_shares.at(position(id)); }
  const T& award(const std::string& id) const { return awards[position(id)]; }

 private:
  std::size_t position(const std::string& id) const {
    const auto it = std::find(ids.begin(), ids.end(), id);
    if (it == ids.end()) throw std::out_of_range("no node '" + id + "'");
    return static_cast<std::size_t>(it - ids.begin());
  }
};

/// Geometric allocation on a basin. One pass in topological order: a node's
/// mass is its claim plus everything routed to it; a mouth keeps all of it,
/// any other node keeps γ_i of it and splits the rest equally among its
/// immediate successors.
template <Quantity T>
BasinAllocation<T> basin_geometric(const BasinGraph<T>& g, const GammaParam<T>& default_gamma) {
  const std::size_t n = g.size();
  std::vector<T> inflow(n, T{0});
  std::vector<T> retained(n, T{0});
  for (std::size_t node : g.topological_order()) {
    const auto& info = g.nodes()[node];
    const T mass = info.claim + inflow[node];
    if (g.is_mouth(node)) {
      retained[node] = mass;
      continue;
    }
    const T& gamma = info.gamma ? *info.gamma : default_gamma.value();
    retained[node] = gamma * mass;
    const auto& succ = g.successors(node);
    const T share = (mass - retained[node]) / NumericTraits<T>::ratio(static_cast<long>(succ.size()), 1);
    for (std::size_t next : succ) inflow[next] = inflow[next] + share;
  }
  const T ratio = g.budget() / g.aggregate();
  std::vector<T> awards;
  awards.reserve(n);
  for (const T& r : retained) awards.push_back(r * ratio);

  BasinAllocation<T> out{{}, std::move(retained), Allocation<T>::checked(g.as_problem(), std::move(awards))};
  out.ids.reserve(n);
  for (const auto& node : g.nodes()) out.ids.push_back(node.id);
  return out;
}

/// The linear river as a chain basin i -> i+1. Ids default to "1".."n".
template <Quantity T>
BasinGraph<T> linear_to_basin(const Problem<T>& p, std::vector<std::string> ids = {}) {
  if (ids.empty()) {
    for (std::size_t i = 0; i < p.size(); ++i) ids.push_back(std::to_string(i + 1));
  }
  if (ids.size() != p.size()) throw std::invalid_argument("one id per agent required");
  std::vector<BasinNode<T>> nodes;
  std::vector<BasinEdge<T>> edges;
  for (std::size_t i = 0; i < p.size(); ++i) {
    nodes.push_back({ids[i], p.claim(i), std::nullopt});
    if (i + 1 < p.size()) edges.push_back({ids[i], ids[i + 1], std::nullopt});
  }
  return validate_basin(std::move(nodes), std::move(edges), p.budget());
}

}  // namespace riparian
