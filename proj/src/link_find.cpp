#include "twinless/link_find.hpp"

#include <stdexcept>

namespace twinless {

LinkFindForest::LinkFindForest(std::span<const Vertex> parent)
    : tree_parent_(parent), up_(parent.size()), rank_(parent.size(), 0), top_(parent.size()) {
  for (std::size_t x = 0; x < parent.size(); ++x) {
    up_[x] = static_cast<Vertex>(x);
    top_[x] = static_cast<Vertex>(x);
  }
}

Vertex LinkFindForest::representative(Vertex x) {
  Vertex r = x;
  while (up_[r] != r) r = up_[r];
  while (up_[x] != r) {
    const Vertex next = up_[x];
    up_[x] = r;
    x = next;
  }
  return r;
}

void LinkFindForest::link(Vertex u) {
  const Vertex p = tree_parent_[u];
  if (p == kAbsent) throw std::invalid_argument("cannot link the tree root");
  ++links_;
  Vertex a = representative(u);
  Vertex b = representative(p);
  if (a == b) return;
  const Vertex top = top_[b];
  if (rank_[a] > rank_[b]) std::swap(a, b);
  up_[a] = b;
  if (rank_[a] == rank_[b]) ++rank_[b];
  top_[b] = top;
}

Vertex LinkFindForest::find(Vertex x) {
  ++finds_;
  return top_[representative(x)];
}

}  // namespace twinless
