#pragma once

#include <cstddef>
#include <vector>

#include "fastmis/types.hpp"

namespace fastmis {

// Vertices bucketed by an integer key (a degree) with O(1) key changes and
// uniform random extraction from the minimum or maximum bucket.
class DegreeBuckets {
 public:
  explicit DegreeBuckets(std::size_t id_bound)
      : key_(id_bound, 0), slot_(id_bound, kAbsent) {}

  bool contains(Vertex v) const { return slot_[v] != kAbsent; }
  std::size_t key(Vertex v) const { return key_[v]; }
  bool empty() const { return count_ == 0; }
  std::size_t size() const { return count_; }

  void insert(Vertex v, std::size_t key) {
    if (key >= buckets_.size()) buckets_.resize(key + 1);
    key_[v] = key;
    slot_[v] = buckets_[key].size();
    buckets_[key].push_back(v);
    ++count_;
    if (count_ == 1 || key < min_hint_) min_hint_ = key;
    if (key > max_hint_) max_hint_ = key;
  }

  void erase(Vertex v) {
    auto& bucket = buckets_[key_[v]];
    Vertex last = bucket.back();
    bucket[slot_[v]] = last;
    slot_[last] = slot_[v];
    bucket.pop_back();
    slot_[v] = kAbsent;
    --count_;
  }

  void change_key(Vertex v, std::size_t key) {
    erase(v);
    insert(v, key);
  }

  std::size_t min_key() {
    while (buckets_[min_hint_].empty()) ++min_hint_;
    return min_hint_;
  }

  std::size_t max_key() {
    while (buckets_[max_hint_].empty()) --max_hint_;
    return max_hint_;
  }

  // Removes and returns a uniformly random vertex of minimum key. Not empty.
  Vertex pop_random_min(Rng& rng) { return pop_from(min_key(), rng); }
  Vertex pop_random_max(Rng& rng) { return pop_from(max_key(), rng); }

 private:
  static constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);

  Vertex pop_from(std::size_t key, Rng& rng) {
    const auto& bucket = buckets_[key];
    Vertex v = bucket[uniform_index(rng, bucket.size())];
    erase(v);
    return v;
  }

  std::vector<std::vector<Vertex>> buckets_;
  std::vector<std::size_t> key_;
  std::vector<std::size_t> slot_;
  std::size_t count_ = 0;
  std::size_t min_hint_ = 0;
  std::size_t max_hint_ = 0;
};

}  // namespace fastmis
