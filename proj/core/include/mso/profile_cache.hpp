#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "mso/canonical.hpp"
#include "mso/subtree.hpp"

namespace mso {

/// Concurrent map from canonical form to subtree profile. Inserts are
/// insert-if-absent; two workers racing on the same key may both compute, and
/// the first stored value wins.
class ProfileCache {
 public:
  using Value = std::shared_ptr<const SubtreeProfile>;

  Value find(const CanonicalForm& key) const;
  /// Returns the stored value, which is `value` unless another insert won.
  Value insert_if_absent(const CanonicalForm& key, Value value);
  /// Canonicalizes g, then looks up or computes its profile.
  Value profile(const MultiGraph& g, const EngineLimits& limits = {});

  std::size_t size() const;
  std::size_t hits() const;
  std::size_t misses() const;

 private:
  static constexpr std::size_t kShards = 16;

  struct Shard {
    mutable std::mutex mutex;
    std::unordered_map<CanonicalForm, Value, CanonicalFormHash> map;
    std::size_t hits = 0;
    std::size_t misses = 0;
  };

  Shard& shard_for(const CanonicalForm& key) const;

  mutable std::array<Shard, kShards> shards_;
};

}  // namespace mso
