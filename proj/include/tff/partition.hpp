#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "tff/error.hpp"

namespace tff {

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// stripped on construction so that equal partitions compare equal; indexing
/// past the last part reads as zero.
class partition {
 public:
  partition() = default;

  explicit partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0 || (i > 0 && parts_[i] > parts_[i - 1]) || parts_[i] == 0)
        throw error(errc::invalid_shape, "not a partition: " + describe(parts_));
    }
  }

  partition(std::initializer_list<int> parts) : partition(std::vector<int>(parts)) {}

  /// Sorts into weakly decreasing order first; zeros are dropped.
  static partition from_unsorted(std::vector<int> parts) {
    std::ranges::sort(parts, std::greater<>());
    return partition(std::move(parts));
  }

  /// The rectangle (width^height): `height` parts equal to `width`.
  static partition rectangle(int width, int height) {
    if (width <= 0 || height <= 0) return {};
    return partition(std::vector<int>(static_cast<std::size_t>(height), width));
  }

  std::span<const int> parts() const noexcept { return parts_; }
  const std::vector<int>& vec() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

  int operator[](int i) const noexcept {
    return (i >= 0 && i < length()) ? parts_[static_cast<std::size_t>(i)] : 0;
  }

  /// Number of parts equal to `value`.
  int multiplicity(int value) const noexcept {
    return static_cast<int>(std::ranges::count(parts_, value));
  }

  /// Parts padded with zeros (or truncated) to exactly `n` entries.
  std::vector<int> padded(int n) const {
    std::vector<int> out(static_cast<std::size_t>(n), 0);
    std::copy_n(parts_.begin(), std::min<std::size_t>(parts_.size(), out.size()), out.begin());
    return out;
  }

  friend bool operator==(const partition&, const partition&) = default;
  friend auto operator<=>(const partition&, const partition&) = default;

  static std::string describe(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
  }

 private:
  std::vector<int> parts_;
};

inline std::string to_string(const partition& p) { return partition::describe(p.vec()); }

/// a ≼ b in dominance (majorization) order.
inline bool dominance_leq(const partition& a, const partition& b) {
  if (a.size() != b.size()) return false;
  int n = std::max(a.length(), b.length());
  int sa = 0, sb = 0;
  for (int i = 0; i < n; ++i) {
    sa += a[i];
    sb += b[i];
    if (sa > sb) return false;
  }
  return true;
}

/// Unit-move chain from `a` up to `b`. Each step raises the first position
/// i below `b` and lowers the last position of the run of equal parts that
/// starts at the first k > i above `b`; every step stays a partition and
/// stays dominated by `b`.
inline std::vector<partition> majorization_chain(const partition& a, const partition& b) {
  if (!dominance_leq(a, b))
    throw error(errc::not_dominated, to_string(a) + " is not dominated by " + to_string(b));
  std::vector<partition> chain{a};
  const int n = std::max(a.length(), b.length());
  std::vector<int> cur = a.padded(n);
  const std::vector<int> target = b.padded(n);
  while (cur != target) {
    auto i = static_cast<std::size_t>(std::ranges::mismatch(cur, target).in1 - cur.begin());
    std::size_t k = i + 1;
    while (cur[k] <= target[k]) ++k;
    while (k + 1 < cur.size() && cur[k + 1] == cur[k]) ++k;
    ++cur[i];
    --cur[k];
    chain.emplace_back(cur);
  }
  return chain;
}

inline bool fits_in_rectangle(const partition& lambda, int width, int height) {
  return lambda.length() <= height && lambda.largest() <= width;
}

/// Complement of `lambda` inside the rectangle (width^height), rotated by 180°.
inline partition dual_in_rectangle(const partition& lambda, int width, int height) {
  if (!fits_in_rectangle(lambda, width, height))
    throw error(errc::does_not_fit, to_string(lambda) + " does not fit in (" +
                                        std::to_string(width) + "^" + std::to_string(height) + ")");
  std::vector<int> out(static_cast<std::size_t>(height));
  for (int i = 0; i < height; ++i) out[static_cast<std::size_t>(i)] = width - lambda[height - 1 - i];
  return partition(std::move(out));
}

inline partition conjugate(const partition& lambda) {
  std::vector<int> out(static_cast<std::size_t>(lambda.largest()), 0);
  for (int part : lambda.parts())
    for (int j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
  return partition(std::move(out));
}

/// inner ⊆ outer as Young diagrams.
inline bool contains(const partition& outer, const partition& inner) {
  if (inner.length() > outer.length()) return false;
  for (int i = 0; i < inner.length(); ++i)
    if (inner[i] > outer[i]) return false;
  return true;
}

/// All partitions of `n` with parts ≤ `max_part` and at most `max_length`
/// parts, in reverse lexicographic order (a linear extension of dominance:
/// anything that dominates a partition is listed before it).
inline std::vector<partition> partitions_of(int n, int max_part, int max_length) {
  std::vector<partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int cap) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_length) return;
    for (int v = std::min(remaining, cap); v >= 1; --v) {
      cur.push_back(v);
      self(self, remaining - v, v);
      cur.pop_back();
    }
  };
  rec(rec, n, max_part);
  return out;
}

/// Partitions of `n` fitting in a `height`-row, `width`-column box that
/// contain `inner`.
inline std::vector<partition> partitions_between(const partition& inner, int n, int width,
                                                 int height) {
  std::vector<partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int row, int remaining, int cap) -> void {
    if (remaining == 0) {
      if (row >= inner.length() || inner[row] == 0) out.emplace_back(cur);
      return;
    }
    if (row == height) return;
    for (int v = std::min(remaining, cap); v >= std::max(1, inner[row]); --v) {
      cur.push_back(v);
      self(self, row + 1, remaining - v, v);
      cur.pop_back();
    }
  };
  if (inner.size() <= n) rec(rec, 0, n, width);
  return out;
}

}  // namespace tff
