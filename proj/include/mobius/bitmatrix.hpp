#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace mobius {

/// Square bit matrix with 64-bit word rows; backs the order-relation closure
/// of FinitePoset.  Row r holds the set of columns related to r.
class BitMatrix {
 public:
  BitMatrix() = default;

  explicit BitMatrix(std::size_t n)
      : n_(n), words_(n == 0 ? 0 : (n + 63) / 64), bits_(n * words_, 0) {}

  std::size_t size() const { return n_; }
  std::size_t words_per_row() const { return words_; }

  bool test(std::size_t r, std::size_t c) const {
    return (bits_[r * words_ + c / 64] >> (c % 64)) & 1u;
  }

  void set(std::size_t r, std::size_t c) {
    bits_[r * words_ + c / 64] |= std::uint64_t{1} << (c % 64);
  }

  const std::uint64_t* row(std::size_t r) const { return bits_.data() + r * words_; }
  std::uint64_t* row(std::size_t r) { return bits_.data() + r * words_; }

  /// row[dst] |= row[src]
  void or_row(std::size_t dst, std::size_t src) {
    std::uint64_t* d = row(dst);
    const std::uint64_t* s = row(src);
    for (std::size_t w = 0; w < words_; ++w) d[w] |= s[w];
  }

  std::size_t row_popcount(std::size_t r) const {
    const std::uint64_t* p = row(r);
    std::size_t c = 0;
    for (std::size_t w = 0; w < words_; ++w) c += std::popcount(p[w]);
    return c;
  }

  /// Number of common columns of rows a and b.
  std::size_t and_popcount(std::size_t a, std::size_t b) const {
    const std::uint64_t* pa = row(a);
    const std::uint64_t* pb = row(b);
    std::size_t c = 0;
    for (std::size_t w = 0; w < words_; ++w) c += std::popcount(pa[w] & pb[w]);
    return c;
  }

  /// True when row a is a subset of row b.
  bool row_subset(std::size_t a, std::size_t b) const {
    const std::uint64_t* pa = row(a);
    const std::uint64_t* pb = row(b);
    for (std::size_t w = 0; w < words_; ++w)
      if (pa[w] & ~pb[w]) return false;
    return true;
  }

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Calls f(index) for every set bit, ascending.
template <class F>
void for_each_bit(const std::uint64_t* words, std::size_t nwords, F&& f) {
  for (std::size_t w = 0; w < nwords; ++w) {
    std::uint64_t m = words[w];
    while (m) {
      unsigned b = static_cast<unsigned>(std::countr_zero(m));
      f(w * 64 + b);
      m &= m - 1;
    }
  }
}

}  // namespace mobius
