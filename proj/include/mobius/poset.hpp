#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mobius/arith.hpp"
#include "mobius/bitmatrix.hpp"
#include "mobius/errors.hpp"

namespace mobius {

class FinitePoset;

/// Upper order ideal of a parent poset, kept as a sorted member-index list.
/// The generator set is recoverable as the minimal members.
struct PosetFilter {
  const FinitePoset* parent = nullptr;
  std::vector<std::size_t> members;  // ascending parent indices

  bool empty() const { return members.empty(); }
  std::size_t size() const { return members.size(); }
  bool contains(std::size_t parent_index) const {
    return std::binary_search(members.begin(), members.end(), parent_index);
  }
  std::vector<std::size_t> generators() const;  // minimal members
};

/// Finite poset over string-labelled elements.  The order relation is stored
/// as a dense closure matrix: below(y) is the set {x : x <= y}.  Mobius rows
/// mu(x, -) are computed on demand and cached under a lock, so concurrent
/// queries are safe.
class FinitePoset {
 public:
  using Index = std::size_t;
  static constexpr Index npos = static_cast<Index>(-1);

  FinitePoset() : lock_(std::make_unique<std::mutex>()) {}

  FinitePoset(const FinitePoset& o)
      : labels_(o.labels_),
        index_(o.index_),
        below_(o.below_),
        topo_(o.topo_),
        covers_(o.covers_),
        covers_ready_(o.covers_ready_),
        pruned_(o.pruned_),
        annotations_(o.annotations_),
        lock_(std::make_unique<std::mutex>()),
        mu_rows_(o.mu_rows_) {}

  FinitePoset& operator=(const FinitePoset& o) {
    if (this != &o) {
      FinitePoset tmp(o);
      *this = std::move(tmp);
    }
    return *this;
  }

  FinitePoset(FinitePoset&&) = default;
  FinitePoset& operator=(FinitePoset&&) = default;

  /// Builds a poset from cover relations (x, y) meaning x is covered by y.
  /// Redundant covers (implied by transitivity, or repeated) are pruned and
  /// counted; cycles are an error.
  static FinitePoset from_cover_relations(
      std::vector<std::string> elements,
      const std::vector<std::pair<std::string, std::string>>& covers) {
    FinitePoset p;
    p.labels_ = std::move(elements);
    for (Index i = 0; i < p.labels_.size(); ++i) {
      if (!p.index_.emplace(p.labels_[i], i).second)
        fail(errc::invalid_input, "duplicate element label: " + p.labels_[i]);
    }
    const Index n = p.labels_.size();

    std::vector<std::pair<Index, Index>> edges;
    edges.reserve(covers.size());
    for (const auto& [a, b] : covers) {
      Index x = p.index_of(a);
      Index y = p.index_of(b);
      if (x == y) fail(errc::cycle_detected, "cover loop at element: " + a);
      edges.emplace_back(x, y);
    }
    std::sort(edges.begin(), edges.end());
    std::size_t dupes = edges.size();
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    dupes -= edges.size();

    std::vector<std::vector<Index>> in(n), out(n);
    std::vector<std::size_t> indeg(n, 0);
    for (auto [x, y] : edges) {
      in[y].push_back(x);
      out[x].push_back(y);
      ++indeg[y];
    }

    // Kahn order; doubles as the cycle check.
    std::vector<Index> order;
    order.reserve(n);
    for (Index i = 0; i < n; ++i)
      if (indeg[i] == 0) order.push_back(i);
    for (std::size_t head = 0; head < order.size(); ++head) {
      Index x = order[head];
      for (Index y : out[x])
        if (--indeg[y] == 0) order.push_back(y);
    }
    if (order.size() != n)
      fail(errc::cycle_detected, "cover relations contain a cycle");

    p.below_ = BitMatrix(n);
    for (Index y : order) {
      p.below_.set(y, y);
      for (Index x : in[y]) p.below_.or_row(y, x);
    }

    // An input cover (x, y) is redundant iff some other in-edge (z, y) has
    // x <= z, i.e. x < z < y.
    p.pruned_ = dupes;
    for (auto [x, y] : edges) {
      bool redundant = false;
      for (Index z : in[y]) {
        if (z != x && p.below_.test(z, x)) {
          redundant = true;
          break;
        }
      }
      if (redundant)
        ++p.pruned_;
      else
        p.covers_.emplace_back(x, y);
    }
    std::sort(p.covers_.begin(), p.covers_.end());
    p.covers_ready_ = true;
    p.finish_topo();
    return p;
  }

  Index size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Index i) const { return labels_[i]; }

  bool contains(const std::string& l) const { return index_.count(l) != 0; }

  Index index_of(const std::string& l) const {
    auto it = index_.find(l);
    if (it == index_.end()) fail(errc::unknown_element, "no such element: " + l);
    return it->second;
  }

  bool leq(Index x, Index y) const {
    check_index(x);
    check_index(y);
    return below_.test(y, x);
  }
  bool leq(const std::string& x, const std::string& y) const {
    return leq(index_of(x), index_of(y));
  }
  bool less(Index x, Index y) const { return x != y && leq(x, y); }
  bool less(const std::string& x, const std::string& y) const {
    return less(index_of(x), index_of(y));
  }

  /// mu(x, y) of the incidence algebra; requires x <= y.
  std::int64_t mobius(Index x, Index y) const {
    if (!leq(x, y))
      fail(errc::not_comparable,
           "mobius requires comparable pair: " + labels_[x] + ", " + labels_[y]);
    return mobius_row(x)[y];
  }
  std::int64_t mobius(const std::string& x, const std::string& y) const {
    return mobius(index_of(x), index_of(y));
  }

  /// Full row mu(x, -); entries at y with x <= y are meaningful, others 0.
  /// The returned reference stays valid for the poset's lifetime.
  const std::vector<std::int64_t>& mobius_row(Index x) const {
    check_index(x);
    std::lock_guard<std::mutex> g(*lock_);
    auto it = mu_rows_.find(x);
    if (it != mu_rows_.end()) return it->second;
    std::vector<std::int64_t> row(size(), 0);
    row[x] = 1;
    for (Index y : topo_) {
      if (y == x || !below_.test(y, x)) continue;
      std::int64_t s = 0;
      for_each_bit(below_.row(y), below_.words_per_row(), [&](std::size_t z) {
        if (z != y && below_.test(z, x)) s = checked_add(s, row[z]);
      });
      row[y] = checked_neg(s);
    }
    return mu_rows_.emplace(x, std::move(row)).first->second;
  }

  std::vector<Index> minimal_elements() const {
    std::vector<Index> r;
    for (Index i = 0; i < size(); ++i)
      if (below_.row_popcount(i) == 1) r.push_back(i);
    return r;
  }

  std::vector<Index> maximal_elements() const {
    // x is maximal iff no other row contains x.
    std::vector<char> dominated(size(), 0);
    for (Index y = 0; y < size(); ++y)
      for_each_bit(below_.row(y), below_.words_per_row(), [&](std::size_t x) {
        if (x != y) dominated[x] = 1;
      });
    std::vector<Index> r;
    for (Index i = 0; i < size(); ++i)
      if (!dominated[i]) r.push_back(i);
    return r;
  }

  std::optional<Index> bottom() const {
    auto m = minimal_elements();
    if (m.size() == 1) return m[0];
    return std::nullopt;
  }

  std::optional<Index> top() const {
    auto m = maximal_elements();
    if (m.size() == 1) return m[0];
    return std::nullopt;
  }

  bool has_bottom() const { return bottom().has_value(); }
  bool has_top() const { return top().has_value(); }

  /// Elements covering the unique minimum.
  std::vector<Index> atoms() const {
    auto b = bottom();
    if (!b) fail(errc::invalid_input, "atoms need a unique minimum");
    std::vector<Index> r;
    for (Index z = 0; z < size(); ++z)
      if (z != *b && below_.row_popcount(z) == 2 && below_.test(z, *b))
        r.push_back(z);
    return r;
  }

  /// All z with x <= z <= y, ascending by index.
  std::vector<Index> interval(Index x, Index y) const {
    if (!leq(x, y)) fail(errc::not_comparable, "interval endpoints incomparable");
    std::vector<Index> r;
    for_each_bit(below_.row(y), below_.words_per_row(), [&](std::size_t z) {
      if (below_.test(z, x)) r.push_back(z);
    });
    return r;
  }

  /// Number of pairs x <= y.
  std::size_t relation_count() const {
    std::size_t c = 0;
    for (Index i = 0; i < size(); ++i) c += below_.row_popcount(i);
    return c;
  }

  /// Every pair has a join and a meet.
  bool is_lattice() const {
    const Index n = size();
    if (n == 0) return false;
    BitMatrix above(n);
    for (Index y = 0; y < n; ++y)
      for_each_bit(below_.row(y), below_.words_per_row(),
                   [&](std::size_t x) { above.set(x, y); });
    std::vector<Index> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[topo_[i]] = i;
    const std::size_t W = below_.words_per_row();
    std::vector<std::uint64_t> common(W);
    auto bounded = [&](const BitMatrix& dir, Index a, Index b, bool want_min) {
      const std::uint64_t* pa = dir.row(a);
      const std::uint64_t* pb = dir.row(b);
      bool any = false;
      Index best = 0;
      for (std::size_t w = 0; w < W; ++w) common[w] = pa[w] & pb[w];
      for_each_bit(common.data(), W, [&](std::size_t z) {
        if (!any || (want_min ? pos[z] < pos[best] : pos[z] > pos[best])) best = z;
        any = true;
      });
      if (!any) return false;
      // best must bound every common element.
      const std::uint64_t* pz = dir.row(best);
      for (std::size_t w = 0; w < W; ++w)
        if (common[w] & ~pz[w]) return false;
      return true;
    };
    for (Index a = 0; a < n; ++a)
      for (Index b = a + 1; b < n; ++b) {
        if (!bounded(above, a, b, true)) return false;   // join
        if (!bounded(below_, a, b, false)) return false;  // meet
      }
    return true;
  }

  /// Transitive reduction, sorted by index pair.
  const std::vector<std::pair<Index, Index>>& covers() const {
    std::lock_guard<std::mutex> g(*lock_);
    ensure_covers();
    return covers_;
  }

  std::size_t pruned_cover_count() const { return pruned_; }

  /// Length of maximal chains from a minimal element up to x; errors when
  /// chain lengths disagree at x.
  int rank(Index x) const {
    check_index(x);
    std::lock_guard<std::mutex> g(*lock_);
    ensure_ranks();
    if (rank_lo_[x] != rank_hi_[x])
      fail(errc::not_graded, "chain lengths disagree at: " + labels_[x]);
    return rank_hi_[x];
  }

  /// All maximal chains in every interval [x, y] have the same length.
  bool is_graded() const {
    std::lock_guard<std::mutex> g(*lock_);
    ensure_covers();
    const Index n = size();
    std::vector<std::vector<Index>> out(n);
    for (auto [x, y] : covers_) out[x].push_back(y);
    std::vector<int> lo(n), hi(n);
    for (Index src = 0; src < n; ++src) {
      for (Index i = 0; i < n; ++i) lo[i] = hi[i] = -1;
      lo[src] = hi[src] = 0;
      for (Index y : topo_) {
        if (hi[y] < 0) continue;
        for (Index z : out[y]) {
          if (hi[z] < 0) {
            lo[z] = lo[y] + 1;
            hi[z] = hi[y] + 1;
          } else {
            lo[z] = std::min(lo[z], lo[y] + 1);
            hi[z] = std::max(hi[z], hi[y] + 1);
          }
        }
      }
      for (Index y = 0; y < n; ++y)
        if (hi[y] >= 0 && lo[y] != hi[y]) return false;
    }
    return true;
  }

  /// Copy of this poset with a new global minimum appended.
  FinitePoset adjoin_bottom(const std::string& bottom_label = "0hat") const {
    if (contains(bottom_label))
      fail(errc::invalid_input, "bottom label already present: " + bottom_label);
    FinitePoset p;
    p.labels_ = labels_;
    p.labels_.push_back(bottom_label);
    const Index n = p.labels_.size();
    const Index b = n - 1;
    for (Index i = 0; i < n; ++i) p.index_.emplace(p.labels_[i], i);
    p.below_ = BitMatrix(n);
    for (Index y = 0; y + 1 < n; ++y) {
      const std::uint64_t* src = below_.row(y);
      std::uint64_t* dst = p.below_.row(y);
      std::copy(src, src + below_.words_per_row(), dst);
      p.below_.set(y, b);
    }
    p.below_.set(b, b);
    p.annotations_ = annotations_;
    p.pruned_ = pruned_;
    if (covers_ready_) {
      p.covers_ = covers_;
      for (Index m : minimal_elements()) p.covers_.emplace_back(b, m);
      std::sort(p.covers_.begin(), p.covers_.end());
      p.covers_ready_ = true;
    }
    p.finish_topo();
    return p;
  }

  /// Subposet induced on the given parent indices (deduplicated, kept in
  /// ascending parent order).
  FinitePoset induced(std::vector<Index> members) const {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (Index m : members) check_index(m);
    FinitePoset p;
    p.labels_.reserve(members.size());
    std::vector<Index> to_new(size(), npos);
    for (Index i = 0; i < members.size(); ++i) {
      to_new[members[i]] = i;
      p.labels_.push_back(labels_[members[i]]);
      p.index_.emplace(p.labels_.back(), i);
    }
    const Index n = members.size();
    p.below_ = BitMatrix(n);
    const std::size_t W = below_.words_per_row();
    for (Index i = 0; i < n; ++i) {
      for_each_bit(below_.row(members[i]), W, [&](std::size_t z) {
        if (to_new[z] != npos) p.below_.set(i, to_new[z]);
      });
    }
    p.annotations_ = annotations_;
    p.finish_topo();
    return p;
  }

  FinitePoset induced(const PosetFilter& f) const {
    if (f.parent != this) fail(errc::invalid_input, "filter belongs to another poset");
    return induced(f.members);
  }

  /// Upper order ideal generated by the named elements.
  PosetFilter filter_generated(const std::vector<std::string>& generator_labels) const {
    if (generator_labels.empty()) fail(errc::empty_filter, "no filter generators");
    const std::size_t W = below_.words_per_row();
    std::vector<std::uint64_t> mask(W, 0);
    for (const auto& l : generator_labels) {
      Index g = index_of(l);
      mask[g / 64] |= std::uint64_t{1} << (g % 64);
    }
    PosetFilter f;
    f.parent = this;
    for (Index y = 0; y < size(); ++y) {
      const std::uint64_t* row = below_.row(y);
      for (std::size_t w = 0; w < W; ++w)
        if (row[w] & mask[w]) {
          f.members.push_back(y);
          break;
        }
    }
    return f;
  }

  void set_annotation(const std::string& key, const std::string& value) {
    annotations_[key] = value;
  }
  std::optional<std::string> annotation(const std::string& key) const {
    auto it = annotations_.find(key);
    if (it == annotations_.end()) return std::nullopt;
    return it->second;
  }
  const std::map<std::string, std::string>& annotations() const { return annotations_; }

 private:
  void check_index(Index i) const {
    if (i >= size()) fail(errc::out_of_range, "element index out of range");
  }

  // Linear extension: sort by |below| (strictly monotone along <).
  void finish_topo() {
    topo_.resize(size());
    std::vector<std::size_t> weight(size());
    for (Index i = 0; i < size(); ++i) {
      topo_[i] = i;
      weight[i] = below_.row_popcount(i);
    }
    std::stable_sort(topo_.begin(), topo_.end(),
                     [&](Index a, Index b) { return weight[a] < weight[b]; });
  }

  // Transitive reduction from the closure; call with lock_ held.
  void ensure_covers() const {
    if (covers_ready_) return;
    const Index n = size();
    const std::size_t W = below_.words_per_row();
    std::vector<std::uint64_t> dominated(W);
    for (Index y = 0; y < n; ++y) {
      std::fill(dominated.begin(), dominated.end(), 0);
      for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
        Index z = *it;
        if (z == y || !below_.test(y, z)) continue;
        if ((dominated[z / 64] >> (z % 64)) & 1u) continue;
        covers_.emplace_back(z, y);
        const std::uint64_t* bz = below_.row(z);
        for (std::size_t w = 0; w < W; ++w) dominated[w] |= bz[w];
      }
    }
    std::sort(covers_.begin(), covers_.end());
    covers_ready_ = true;
  }

  // Longest/shortest chain lengths from minimal elements; lock_ held.
  void ensure_ranks() const {
    if (!rank_lo_.empty()) return;
    ensure_covers();
    const Index n = size();
    std::vector<std::vector<Index>> in(n);
    for (auto [x, y] : covers_) in[y].push_back(x);
    rank_lo_.assign(n, 0);
    rank_hi_.assign(n, 0);
    for (Index y : topo_) {
      bool first = true;
      for (Index x : in[y]) {
        if (first) {
          rank_lo_[y] = rank_lo_[x] + 1;
          rank_hi_[y] = rank_hi_[x] + 1;
          first = false;
        } else {
          rank_lo_[y] = std::min(rank_lo_[y], rank_lo_[x] + 1);
          rank_hi_[y] = std::max(rank_hi_[y], rank_hi_[x] + 1);
        }
      }
    }
  }

  std::vector<std::string> labels_;
  std::unordered_map<std::string, Index> index_;
  BitMatrix below_;
  std::vector<Index> topo_;
  mutable std::vector<std::pair<Index, Index>> covers_;
  mutable bool covers_ready_ = false;
  std::size_t pruned_ = 0;
  std::map<std::string, std::string> annotations_;
  mutable std::vector<int> rank_lo_, rank_hi_;
  mutable std::unique_ptr<std::mutex> lock_;
  mutable std::unordered_map<Index, std::vector<std::int64_t>> mu_rows_;
};

inline std::vector<std::size_t> PosetFilter::generators() const {
  std::vector<std::size_t> gens;
  for (std::size_t y : members) {
    bool minimal = true;
    for (std::size_t x : members) {
      if (x != y && parent->leq(x, y)) {
        minimal = false;
        break;
      }
    }
    if (minimal) gens.push_back(y);
  }
  return gens;
}

}  // namespace mobius
