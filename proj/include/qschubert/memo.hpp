#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>

namespace qschubert {

/// Insert-only cache: concurrent lookups, serialized insertion. Values are
/// never erased, so returned references stay valid.
template <class Key, class Value>
class MemoTable {
 public:
  template <class Compute>
  const Value& get(const Key& key, Compute&& compute) {
    {
      std::shared_lock lock(mutex_);
      auto it = table_.find(key);
      if (it != table_.end()) return it->second;
    }
    // Computed outside the lock; compute may recurse into this table.
    Value value = compute();
    std::unique_lock lock(mutex_);
    return table_.try_emplace(key, std::move(value)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<Key, Value> table_;
};

}  // namespace qschubert
