#pragma once

#include <numeric>
#include <vector>

namespace cranesched {

/// Union-find with path halving and union by size.
class DisjointSet {
 public:
  explicit DisjointSet(int size = 0) : parent_(static_cast<std::size_t>(size)), size_(parent_.size(), 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[idx(x)] != x) {
      parent_[idx(x)] = parent_[idx(parent_[idx(x)])];
      x = parent_[idx(x)];
    }
    return x;
  }

  /// Returns the surviving root.
  int unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return a;
    if (size_[idx(a)] < size_[idx(b)]) std::swap(a, b);
    parent_[idx(b)] = a;
    size_[idx(a)] += size_[idx(b)];
    return a;
  }

  bool same(int a, int b) { return find(a) == find(b); }
  int size() const noexcept { return static_cast<int>(parent_.size()); }

 private:
  static std::size_t idx(int x) { return static_cast<std::size_t>(x); }

  std::vector<int> parent_;
  std::vector<int> size_;
};

}  // namespace cranesched
