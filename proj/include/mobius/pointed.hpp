#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "mobius/errors.hpp"

namespace mobius {

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

inline int parse_int(const std::string& tok, errc on_error) {
  const std::string t = trim(tok);
  if (t.empty()) fail(on_error, "empty integer token");
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(t, &used);
  } catch (const std::exception&) {
    fail(on_error, "bad integer token: " + tok);
  }
  if (used != t.size()) fail(on_error, "bad integer token: " + tok);
  if (v < -1000000 || v > 1000000) fail(on_error, "integer out of range: " + tok);
  return static_cast<int>(v);
}

}  // namespace detail

/// Pointed integer partition {lambda, m}: a multiset of positive parts kept
/// sorted ascending, plus the non-negative pointed part m.
/// Literal form "1,1,4|0"; empty lambda is "|m".
struct PointedPartition {
  std::vector<int> parts;  // ascending
  int pointed = 0;

  PointedPartition() = default;
  PointedPartition(std::vector<int> p, int m) : parts(std::move(p)), pointed(m) {
    std::sort(parts.begin(), parts.end());
  }

  int n() const { return std::accumulate(parts.begin(), parts.end(), pointed); }

  /// Parts including the pointed part (the pointed part always counts,
  /// even when it is 0).
  int total_parts() const { return static_cast<int>(parts.size()) + 1; }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts[i]);
    }
    s += '|';
    s += std::to_string(pointed);
    return s;
  }

  static PointedPartition parse(const std::string& text) {
    auto halves = detail::split(text, '|');
    if (halves.size() != 2)
      fail(errc::malformed_partition, "expected 'a,b,...|m': " + text);
    PointedPartition p;
    const std::string left = detail::trim(halves[0]);
    if (!left.empty()) {
      for (const auto& tok : detail::split(left, ',')) {
        int v = detail::parse_int(tok, errc::malformed_partition);
        if (v <= 0) fail(errc::malformed_partition, "parts must be positive: " + text);
        p.parts.push_back(v);
      }
    }
    p.pointed = detail::parse_int(halves[1], errc::malformed_partition);
    if (p.pointed < 0)
      fail(errc::malformed_partition, "pointed part must be non-negative: " + text);
    std::sort(p.parts.begin(), p.parts.end());
    return p;
  }

  friend bool operator==(const PointedPartition& a, const PointedPartition& b) {
    return a.pointed == b.pointed && a.parts == b.parts;
  }
  friend bool operator<(const PointedPartition& a, const PointedPartition& b) {
    if (a.parts != b.parts) return a.parts < b.parts;
    return a.pointed < b.pointed;
  }
};

/// Pointed composition (c_1,...,c_{k-1}, c_k): positive interior entries in
/// order, non-negative pointed last entry.  Literal form "2,1|0"; the
/// composition (n) alone is "|n"; (0) is "|0".
struct PointedComposition {
  std::vector<int> interior;
  int pointed = 0;

  PointedComposition() = default;
  PointedComposition(std::vector<int> in, int m) : interior(std::move(in)), pointed(m) {}

  int n() const { return std::accumulate(interior.begin(), interior.end(), pointed); }

  /// All parts, the pointed one included.
  int total_parts() const { return static_cast<int>(interior.size()) + 1; }

  void validate() const {
    for (int v : interior)
      if (v <= 0) fail(errc::malformed_composition, "interior entry <= 0 in " + str());
    if (pointed < 0) fail(errc::malformed_composition, "pointed entry < 0 in " + str());
  }

  /// Partial sums c_1, c_1+c_2, ..., c_1+...+c_{k-1}: a subset of {1,...,n}
  /// characterizing the composition (the Boolean-algebra coordinates).
  std::vector<int> partial_sums() const {
    std::vector<int> s;
    int acc = 0;
    for (int v : interior) {
      acc += v;
      s.push_back(acc);
    }
    return s;
  }

  PointedPartition type() const {
    return PointedPartition(interior, pointed);
  }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < interior.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(interior[i]);
    }
    s += '|';
    s += std::to_string(pointed);
    return s;
  }

  static PointedComposition parse(const std::string& text) {
    auto halves = detail::split(text, '|');
    if (halves.size() != 2)
      fail(errc::malformed_composition, "expected 'c1,c2,...|ck': " + text);
    PointedComposition c;
    const std::string left = detail::trim(halves[0]);
    if (!left.empty()) {
      for (const auto& tok : detail::split(left, ','))
        c.interior.push_back(detail::parse_int(tok, errc::malformed_composition));
    }
    c.pointed = detail::parse_int(halves[1], errc::malformed_composition);
    c.validate();
    return c;
  }

  friend bool operator==(const PointedComposition& a, const PointedComposition& b) {
    return a.pointed == b.pointed && a.interior == b.interior;
  }
  friend bool operator<(const PointedComposition& a, const PointedComposition& b) {
    if (a.interior != b.interior) return a.interior < b.interior;
    return a.pointed < b.pointed;
  }
};

/// Pointed set partition (sigma, Z) of {1,...,n}: ordinary blocks sorted by
/// minimum element, plus the zero block Z (possibly empty).
/// Literal form "1.3/2|4" (blocks 13 and 2, zero block 4).
struct PointedSetPartition {
  std::vector<std::vector<int>> blocks;  // each ascending; sorted by min
  std::vector<int> zero;                 // ascending
  int ground = 0;                        // n

  void canonicalize() {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(zero.begin(), zero.end());
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
  }

  void validate() const {
    std::vector<char> seen(ground + 1, 0);
    auto mark = [&](int e) {
      if (e < 1 || e > ground || seen[e])
        fail(errc::invalid_input, "not a partition of the ground set: " + str());
      seen[e] = 1;
    };
    for (const auto& b : blocks) {
      if (b.empty()) fail(errc::invalid_input, "empty ordinary block");
      for (int e : b) mark(e);
    }
    for (int e : zero) mark(e);
    for (int e = 1; e <= ground; ++e)
      if (!seen[e]) fail(errc::invalid_input, "element missing from partition");
  }

  /// Blocks including the zero block.
  int total_blocks() const { return static_cast<int>(blocks.size()) + 1; }

  PointedPartition type() const {
    std::vector<int> sizes;
    sizes.reserve(blocks.size());
    for (const auto& b : blocks) sizes.push_back(static_cast<int>(b.size()));
    return PointedPartition(std::move(sizes), static_cast<int>(zero.size()));
  }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (i) s += '/';
      for (std::size_t j = 0; j < blocks[i].size(); ++j) {
        if (j) s += '.';
        s += std::to_string(blocks[i][j]);
      }
    }
    s += '|';
    for (std::size_t j = 0; j < zero.size(); ++j) {
      if (j) s += '.';
      s += std::to_string(zero[j]);
    }
    return s;
  }

  /// Inverse of str(); the ground set size is the element count (partitions
  /// always cover {1,...,n} exactly).
  static PointedSetPartition parse(const std::string& text) {
    auto halves = detail::split(text, '|');
    if (halves.size() != 2)
      fail(errc::invalid_input, "expected 'blocks|zero': " + text);
    PointedSetPartition p;
    int count = 0;
    if (!detail::trim(halves[0]).empty()) {
      for (const auto& btok : detail::split(halves[0], '/')) {
        std::vector<int> block;
        for (const auto& tok : detail::split(btok, '.')) {
          block.push_back(detail::parse_int(tok, errc::invalid_input));
          ++count;
        }
        p.blocks.push_back(std::move(block));
      }
    }
    if (!detail::trim(halves[1]).empty()) {
      for (const auto& tok : detail::split(halves[1], '.')) {
        p.zero.push_back(detail::parse_int(tok, errc::invalid_input));
        ++count;
      }
    }
    p.ground = count;
    p.canonicalize();
    p.validate();
    return p;
  }

  friend bool operator==(const PointedSetPartition& a, const PointedSetPartition& b) {
    return a.ground == b.ground && a.blocks == b.blocks && a.zero == b.zero;
  }
  friend bool operator<(const PointedSetPartition& a, const PointedSetPartition& b) {
    if (a.blocks != b.blocks) return a.blocks < b.blocks;
    return a.zero < b.zero;
  }
};

}  // namespace mobius
