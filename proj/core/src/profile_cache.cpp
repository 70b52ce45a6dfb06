#include "mso/profile_cache.hpp"

namespace mso {

ProfileCache::Shard& ProfileCache::shard_for(const CanonicalForm& key) const {
  return shards_[CanonicalFormHash{}(key) % kShards];
}

ProfileCache::Value ProfileCache::find(const CanonicalForm& key) const {
  Shard& s = shard_for(key);
  std::lock_guard lock(s.mutex);
  const auto it = s.map.find(key);
  if (it == s.map.end()) {
    ++s.misses;
    return nullptr;
  }
  ++s.hits;
  return it->second;
}

ProfileCache::Value ProfileCache::insert_if_absent(const CanonicalForm& key, Value value) {
  Shard& s = shard_for(key);
  std::lock_guard lock(s.mutex);
  return s.map.try_emplace(key, std::move(value)).first->second;
}

ProfileCache::Value ProfileCache::profile(const MultiGraph& g, const EngineLimits& limits) {
  const CanonicalForm key = canonical_form(g);
  if (auto hit = find(key)) return hit;
  return insert_if_absent(key, std::make_shared<const SubtreeProfile>(subtree_polynomial(g, limits)));
}

std::size_t ProfileCache::size() const {
  std::size_t total = 0;
  for (const Shard& s : shards_) {
    std::lock_guard lock(s.mutex);
    total += s.map.size();
  }
  return total;
}

std::size_t ProfileCache::hits() const {
  std::size_t total = 0;
  for (const Shard& s : shards_) {
    std::lock_guard lock(s.mutex);
    total += s.hits;
  }
  return total;
}

std::size_t ProfileCache::misses() const {
  std::size_t total = 0;
  for (const Shard& s : shards_) {
    std::lock_guard lock(s.mutex);
    total += s.misses;
  }
  return total;
}

}  // namespace mso
