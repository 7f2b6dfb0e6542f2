#include "twinless/types.hpp"

namespace twinless {

std::vector<std::vector<Vertex>> Partition::classes() const {
  std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(num_classes));
  for (Vertex v = 0; v < static_cast<Vertex>(class_of.size()); ++v) out[class_of[v]].push_back(v);
  return out;
}

Partition normalize_partition(std::span<const std::int32_t> labels) {
  Partition p;
  p.class_of.assign(labels.size(), -1);
  std::vector<std::int32_t> renumber;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    const auto label = static_cast<std::size_t>(labels[v]);
    if (label >= renumber.size()) renumber.resize(label + 1, -1);
    if (renumber[label] < 0) renumber[label] = p.num_classes++;
    p.class_of[v] = renumber[label];
  }
  return p;
}

Buckets bucket_by_key(std::span<const std::int32_t> keys, std::span<const std::int32_t> order,
                      std::size_t num_buckets) {
  Buckets b;
  b.offsets.assign(num_buckets + 1, 0);
  for (auto item : order) {
    if (keys[item] != kAbsent) ++b.offsets[keys[item] + 1];
  }
  for (std::size_t i = 0; i < num_buckets; ++i) b.offsets[i + 1] += b.offsets[i];
  b.items.resize(b.offsets[num_buckets]);
  std::vector<std::int32_t> fill(b.offsets.begin(), b.offsets.end() - 1);
  for (auto item : order) {
    if (keys[item] != kAbsent) b.items[fill[keys[item]]++] = item;
  }
  return b;
}

}  // namespace twinless
