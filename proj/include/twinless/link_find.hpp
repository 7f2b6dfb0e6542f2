#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "twinless/types.hpp"

namespace twinless {

/// Disjoint sets over a static rooted tree. The forest F starts edgeless and
/// only ever gains tree edges (u, parent(u)), so every set is a subtree and
/// find() returns that subtree's topmost vertex.
///
/// Union by rank with path compression; the designated root of each set is
/// kept separately from the union-find representative.
class LinkFindForest {
 public:
  /// `parent[x]` is the tree parent of x, kAbsent for the root.
  explicit LinkFindForest(std::span<const Vertex> parent);

  /// Adds the tree edge (u, parent(u)) to F. Throws std::invalid_argument for
  /// the tree root.
  void link(Vertex u);
  /// Root of the tree of F containing x.
  Vertex find(Vertex x);

  std::int64_t links() const { return links_; }
  std::int64_t finds() const { return finds_; }

 private:
  Vertex representative(Vertex x);

  std::span<const Vertex> tree_parent_;
  std::vector<Vertex> up_;
  std::vector<std::uint8_t> rank_;
  std::vector<Vertex> top_;  // indexed by representative
  std::int64_t links_ = 0;
  std::int64_t finds_ = 0;
};

}  // namespace twinless
