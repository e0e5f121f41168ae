#pragma once

#include <algorithm>
#include <functional>
#include <vector>

namespace mobius {

/// Integer partitions of n in reverse-lexicographic order, each part list
/// non-increasing: (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
inline std::vector<std::vector<int>> integer_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

/// Set partitions of {1,...,n} as restricted growth strings: rgs[i] is the
/// block index of element i+1, rgs[0] = 0, rgs[i+1] <= max(rgs[0..i]) + 1.
/// Visits in lexicographic rgs order.  n = 0 yields the single empty string.
template <class F>
void for_each_set_partition(int n, F&& visit) {
  std::vector<int> rgs(n, 0);
  std::function<void(int, int)> rec = [&](int i, int maxblock) {
    if (i == n) {
      visit(static_cast<const std::vector<int>&>(rgs));
      return;
    }
    for (int b = 0; b <= maxblock + 1; ++b) {
      rgs[i] = b;
      rec(i + 1, std::max(maxblock, b));
    }
  };
  if (n == 0) {
    visit(static_cast<const std::vector<int>&>(rgs));
    return;
  }
  rgs[0] = 0;
  rec(1, 0);
}

/// Blocks of a restricted growth string, indexed by block number; each block
/// lists its elements ascending.
inline std::vector<std::vector<int>> rgs_blocks(const std::vector<int>& rgs) {
  int nblocks = 0;
  for (int b : rgs) nblocks = std::max(nblocks, b + 1);
  std::vector<std::vector<int>> blocks(nblocks);
  for (std::size_t i = 0; i < rgs.size(); ++i) blocks[rgs[i]].push_back(static_cast<int>(i) + 1);
  return blocks;
}

/// Ordered set partitions of {1,...,p}: every set partition in every block
/// order.  Visits blocks as a list of ascending-element blocks.
template <class F>
void for_each_ordered_set_partition(int p, F&& visit) {
  for_each_set_partition(p, [&](const std::vector<int>& rgs) {
    auto blocks = rgs_blocks(rgs);
    const int k = static_cast<int>(blocks.size());
    if (k == 0) {
      visit(blocks);
      return;
    }
    std::vector<int> order(k);
    for (int i = 0; i < k; ++i) order[i] = i;
    std::vector<std::vector<int>> arranged(k);
    do {
      for (int i = 0; i < k; ++i) arranged[i] = blocks[order[i]];
      visit(static_cast<const std::vector<std::vector<int>>&>(arranged));
    } while (std::next_permutation(order.begin(), order.end()));
  });
}

}  // namespace mobius
