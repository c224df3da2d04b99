#pragma once

#include <numeric>
#include <vector>

namespace corel {

// Disjoint sets over {0, ..., n-1}. The root of each set is its least
// element, so block numbering by least representative falls out of a
// linear scan over find().
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Returns true when the two sets were distinct.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

  int size() const { return static_cast<int>(parent_.size()); }

  // Block ids in order of least representative: root r gets the number of
  // distinct roots below r.
  std::vector<int> block_ids() {
    const int n = size();
    std::vector<int> id(n, -1);
    int next = 0;
    for (int x = 0; x < n; ++x) {
      const int r = find(x);
      if (id[r] < 0) id[r] = next++;
    }
    std::vector<int> out(n);
    for (int x = 0; x < n; ++x) out[x] = id[find(x)];
    return out;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace corel
