#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace twinless {

/// Dense 0-based vertex index into the owning graph.
using Vertex = std::int32_t;
/// Index into a graph's edge sequence.
using EdgeId = std::int32_t;

/// Marker for labels that are undefined at a vertex (never a valid vertex id).
inline constexpr Vertex kAbsent = -1;

/// A partition of [0, n) into classes. Class ids are numbered by the
/// smallest member, so equal partitions compare equal.
struct Partition {
  std::vector<std::int32_t> class_of;
  std::int32_t num_classes = 0;

  std::vector<std::vector<Vertex>> classes() const;
  bool operator==(const Partition&) const = default;
};

/// Builds a Partition from arbitrary labels, renumbering classes by first
/// occurrence in vertex order.
Partition normalize_partition(std::span<const std::int32_t> labels);

/// Compressed list-of-lists: bucket i spans items[offsets[i], offsets[i+1]).
struct Buckets {
  std::vector<std::int32_t> offsets{0};
  std::vector<std::int32_t> items;

  std::size_t size() const { return offsets.size() - 1; }
  std::span<const std::int32_t> operator[](std::size_t i) const {
    return {items.data() + offsets[i], items.data() + offsets[i + 1]};
  }
};

/// Bucket-sorts `keys` into `num_buckets` lists. Items are appended to their
/// bucket in the order given by `order`, so every bucket inherits that order.
/// Items whose key is kAbsent are dropped.
Buckets bucket_by_key(std::span<const std::int32_t> keys, std::span<const std::int32_t> order,
                      std::size_t num_buckets);

}  // namespace twinless
