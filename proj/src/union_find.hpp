#pragma once

#include <boost/pending/disjoint_sets.hpp>
#include <vector>

namespace vgraph::detail {

// Dense relabeling of boost's disjoint sets: ids are assigned in order of
// first appearance so that results are deterministic.
class UnionFind {
 public:
  explicit UnionFind(int n) : sets_(n), n_(n) {}
  void unite(int a, int b) { sets_.union_set(a, b); }
  int find(int a) { return static_cast<int>(sets_.find_set(a)); }
  bool same(int a, int b) { return find(a) == find(b); }

  // labels[i] in 0..count-1, numbered by smallest member.
  std::vector<int> labels(int* count = nullptr) {
    std::vector<int> root_label(n_, -1), out(n_);
    int next = 0;
    for (int i = 0; i < n_; ++i) {
      const int r = find(i);
      if (root_label[r] < 0) root_label[r] = next++;
      out[i] = root_label[r];
    }
    if (count) *count = next;
    return out;
  }

 private:
  boost::disjoint_sets_with_storage<> sets_;
  int n_;
};

}  // namespace vgraph::detail
