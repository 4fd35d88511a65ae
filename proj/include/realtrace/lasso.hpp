#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "realtrace/alphabet.hpp"

namespace realtrace {

/// Edge of an explicit labeled graph handed to find_lasso.
struct LassoEdge {
  Letter label;
  std::size_t target;
};

using LassoGraph = std::vector<std::vector<LassoEdge>>;

/// A path from an initial node to an accepting node `anchor`, followed by a
/// nonempty cycle from `anchor` back to itself.
struct Lasso {
  Word stem;
  Word cycle;
  std::size_t anchor = 0;
};

/// Büchi nonemptiness on an explicit graph. Accepting nodes are tried in
/// index order and paths are shortest (BFS), so the result is
/// deterministic.
std::optional<Lasso> find_lasso(const LassoGraph& graph, const std::vector<std::size_t>& initial,
                                const std::vector<bool>& accepting);

/// Nodes from which some accepting node on a cycle is reachable.
std::vector<bool> live_nodes(const LassoGraph& graph, const std::vector<bool>& accepting);

}  // namespace realtrace
