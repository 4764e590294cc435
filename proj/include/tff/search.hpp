#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "tff/config_matrix.hpp"
#include "tff/error.hpp"
#include "tff/partition.hpp"

namespace tff {

namespace detail {

inline void check_ranks(std::span<const int> ranks, int dim) {
  if (dim <= 0) throw error(errc::invalid_ranks, "dimension must be positive");
  if (ranks.empty()) throw error(errc::invalid_ranks, "rank sequence is empty");
  for (int r : ranks) {
    if (r <= 0) throw error(errc::invalid_ranks, "ranks must be positive");
    if (r > dim)
      throw error(errc::invalid_ranks,
                  "rank " + std::to_string(r) + " exceeds dimension " + std::to_string(dim));
  }
}

// Fills an N×M certificate one column at a time, left to right, each column
// top to bottom. Everything a later column can depend on is the vector of
// row sums so far plus, inside a block, the previous column; that pair is the
// memo key. At block boundaries the complement of the row sums must lie in
// the support of the remaining rectangle product, which bounds it between
// the union and the row-sum of those rectangles in dominance order.
class config_search {
 public:
  config_search(std::span<const int> ranks, int dim)
      : n_(dim), ranks_(ranks.begin(), ranks.end()) {
    check_ranks(ranks, dim);
    m_ = std::accumulate(ranks_.begin(), ranks_.end(), 0);
    const int k_count = static_cast<int>(ranks_.size());
    for (int k = 0; k < k_count; ++k)
      for (int j = 0; j < ranks_[static_cast<std::size_t>(k)]; ++j) {
        col_block_.push_back(k);
        col_local_.push_back(j);
      }
    remaining_ranks_.assign(static_cast<std::size_t>(k_count) + 1, 0);
    sum_caps_.assign(static_cast<std::size_t>(k_count) + 1, std::vector<long>(static_cast<std::size_t>(n_) + 1, 0));
    for (int k = k_count - 1; k >= 0; --k) {
      remaining_ranks_[static_cast<std::size_t>(k)] =
          remaining_ranks_[static_cast<std::size_t>(k) + 1] + ranks_[static_cast<std::size_t>(k)];
      for (int t = 1; t <= n_; ++t)
        sum_caps_[static_cast<std::size_t>(k)][static_cast<std::size_t>(t)] =
            sum_caps_[static_cast<std::size_t>(k) + 1][static_cast<std::size_t>(t)] +
            static_cast<long>(n_) * std::min(t, ranks_[static_cast<std::size_t>(k)]);
    }
    rowsum_.assign(static_cast<std::size_t>(n_), 0);
    prev_.assign(static_cast<std::size_t>(n_), 0);
    entries_.assign(static_cast<std::size_t>(n_ * m_), 0);
    columns_.assign(static_cast<std::size_t>(m_), std::vector<int>(static_cast<std::size_t>(n_), 0));
    suffix_.assign(static_cast<std::size_t>(m_), std::vector<int>(static_cast<std::size_t>(n_) + 1, 0));
    static_ub_.assign(static_cast<std::size_t>(m_), std::vector<int>(static_cast<std::size_t>(n_), 0));
    prev_prefix_.assign(static_cast<std::size_t>(m_), std::vector<int>(static_cast<std::size_t>(n_) + 1, 0));
  }

  std::optional<config_matrix> find() {
    failed_.clear();
    if (!find_from(0)) return std::nullopt;
    return config_matrix(n_, ranks_, entries_);
  }

  std::uint64_t count() {
    counts_.clear();
    return count_from(0);
  }

  /// Calls visit(certificate) for every certificate, in decreasing
  /// lexicographic order; returns how many were visited.
  template <class Visit>
  std::uint64_t for_each(Visit&& visit) {
    failed_.clear();
    std::uint64_t seen = 0;
    enumerate_from(0, visit, seen);
    return seen;
  }

  std::size_t memo_size() const noexcept { return failed_.size() + counts_.size(); }

 private:
  bool boundary_feasible(int k) const {
    const long r = remaining_ranks_[static_cast<std::size_t>(k)];
    long prefix = 0;
    for (int t = 1; t <= n_; ++t) {
      prefix += m_ - rowsum_[static_cast<std::size_t>(n_ - t)];
      if (prefix < static_cast<long>(n_) * std::min<long>(t, r)) return false;
      if (prefix > sum_caps_[static_cast<std::size_t>(k)][static_cast<std::size_t>(t)]) return false;
    }
    return true;
  }

  std::string key(int g) const {
    const bool inside = col_local_[static_cast<std::size_t>(g)] > 0;
    std::string s;
    s.reserve(static_cast<std::size_t>(2 + 2 * n_ * (inside ? 2 : 1)));
    auto put = [&](int v) {
      s.push_back(static_cast<char>(v & 0xff));
      s.push_back(static_cast<char>((v >> 8) & 0xff));
    };
    put(g);
    for (int v : rowsum_) put(v);
    if (inside)
      for (int v : prev_) put(v);
    return s;
  }

  // Per-column bounds that do not depend on the column being filled.
  void prepare_column(int g) {
    const bool inside = col_local_[static_cast<std::size_t>(g)] > 0;
    auto& sub = static_ub_[static_cast<std::size_t>(g)];
    auto& pp = prev_prefix_[static_cast<std::size_t>(g)];
    auto& suf = suffix_[static_cast<std::size_t>(g)];
    pp[0] = 0;
    for (int i = 0; i < n_; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      int ub = std::min(n_, m_ - rowsum_[ui]);
      if (i > 0) ub = std::min(ub, rowsum_[ui - 1] - rowsum_[ui]);
      pp[ui + 1] = pp[ui] + (inside ? prev_[ui] : 0);
      if (inside) ub = std::min(ub, pp[ui]);
      sub[ui] = std::max(ub, 0);
    }
    suf[static_cast<std::size_t>(n_)] = 0;
    for (int i = n_ - 1; i >= 0; --i)
      suf[static_cast<std::size_t>(i)] = std::min(n_, suf[static_cast<std::size_t>(i) + 1] + sub[static_cast<std::size_t>(i)]);
  }

  // Enumerates admissible columns g in decreasing lexicographic order,
  // calling visit() on each complete column; visit returns true to stop.
  template <class Visit>
  bool for_each_column(int g, int row, int remaining, Visit& visit) {
    const bool inside = col_local_[static_cast<std::size_t>(g)] > 0;
    const auto ur = static_cast<std::size_t>(row);
    auto& col = columns_[static_cast<std::size_t>(g)];
    int ub = std::min(static_ub_[static_cast<std::size_t>(g)][ur], remaining);
    if (inside) ub = std::min(ub, prev_prefix_[static_cast<std::size_t>(g)][ur] - (n_ - remaining));
    if (row == n_ - 1) {
      if (remaining > ub) return false;
      col[ur] = remaining;
      return visit(col);
    }
    const int lb = std::max(0, remaining - suffix_[static_cast<std::size_t>(g)][ur + 1]);
    for (int v = ub; v >= lb; --v) {
      col[ur] = v;
      if (for_each_column(g, row + 1, remaining - v, visit)) return true;
    }
    return false;
  }

  void push_column(int g, const std::vector<int>& col, std::vector<int>& saved_prev) {
    saved_prev = prev_;
    for (int i = 0; i < n_; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      rowsum_[ui] += col[ui];
      entries_[static_cast<std::size_t>(i * m_ + g)] = col[ui];
    }
    prev_ = col;
  }

  void pop_column(const std::vector<int>& col, const std::vector<int>& saved_prev) {
    for (int i = 0; i < n_; ++i) rowsum_[static_cast<std::size_t>(i)] -= col[static_cast<std::size_t>(i)];
    prev_ = saved_prev;
  }

  bool find_from(int g) {
    if (g == m_) return true;
    if (col_local_[static_cast<std::size_t>(g)] == 0 && !boundary_feasible(col_block_[static_cast<std::size_t>(g)]))
      return false;
    std::string k = key(g);
    if (failed_.contains(k)) return false;
    prepare_column(g);
    std::vector<int> saved;
    auto visit = [&](const std::vector<int>& col) {
      push_column(g, col, saved);
      bool ok = find_from(g + 1);
      pop_column(col, saved);
      return ok;
    };
    if (for_each_column(g, 0, n_, visit)) return true;
    failed_.insert(std::move(k));
    return false;
  }

  template <class Visit>
  bool enumerate_from(int g, Visit& visit, std::uint64_t& seen) {
    if (g == m_) {
      visit(config_matrix(n_, ranks_, entries_));
      ++seen;
      return true;
    }
    if (col_local_[static_cast<std::size_t>(g)] == 0 && !boundary_feasible(col_block_[static_cast<std::size_t>(g)]))
      return false;
    std::string k = key(g);
    if (failed_.contains(k)) return false;
    prepare_column(g);
    bool any = false;
    std::vector<int> saved;
    auto step = [&](const std::vector<int>& col) {
      push_column(g, col, saved);
      any = enumerate_from(g + 1, visit, seen) || any;
      pop_column(col, saved);
      return false;
    };
    for_each_column(g, 0, n_, step);
    if (!any) failed_.insert(std::move(k));
    return any;
  }

  std::uint64_t count_from(int g) {
    if (g == m_) return 1;
    if (col_local_[static_cast<std::size_t>(g)] == 0 && !boundary_feasible(col_block_[static_cast<std::size_t>(g)]))
      return 0;
    std::string k = key(g);
    if (auto it = counts_.find(k); it != counts_.end()) return it->second;
    prepare_column(g);
    std::uint64_t total = 0;
    std::vector<int> saved;
    auto visit = [&](const std::vector<int>& col) {
      push_column(g, col, saved);
      std::uint64_t sub = count_from(g + 1);
      pop_column(col, saved);
      if (total > std::numeric_limits<std::uint64_t>::max() - sub)
        throw error(errc::precondition_not_met, "configuration count overflows 64 bits");
      total += sub;
      return false;
    };
    for_each_column(g, 0, n_, visit);
    counts_.emplace(std::move(k), total);
    return total;
  }

  int n_;
  int m_ = 0;
  std::vector<int> ranks_;
  std::vector<int> col_block_, col_local_;
  std::vector<long> remaining_ranks_;
  std::vector<std::vector<long>> sum_caps_;
  std::vector<int> rowsum_, prev_, entries_;
  std::vector<std::vector<int>> columns_;
  std::vector<std::vector<int>> suffix_, static_ub_, prev_prefix_;
  std::unordered_set<std::string> failed_;
  std::unordered_map<std::string, std::uint64_t> counts_;
};

}  // namespace detail

/// A certificate for (ranks, dim) if one exists. Blocks follow the given
/// rank order. The search visits columns left to right and tries entries
/// top to bottom from the largest admissible value down, so the result is
/// the lexicographically greatest certificate in column-major order.
inline std::optional<config_matrix> find_config(std::span<const int> ranks, int dim) {
  return detail::config_search(ranks, dim).find();
}

inline std::optional<config_matrix> find_config(const partition& ranks, int dim) {
  return find_config(ranks.parts(), dim);
}

/// Exact number of certificates, which is the LR coefficient
/// c((N^{L_1}), …, (N^{L_K}); (M^N)).
inline std::uint64_t count_configs(std::span<const int> ranks, int dim) {
  return detail::config_search(ranks, dim).count();
}

inline std::uint64_t count_configs(const partition& ranks, int dim) {
  return count_configs(ranks.parts(), dim);
}

/// Visits every certificate for (ranks, dim), last to first in column-major
/// lexicographic order. Returns the number visited.
template <class Visit>
std::uint64_t for_each_config(std::span<const int> ranks, int dim, Visit&& visit) {
  return detail::config_search(ranks, dim).for_each(visit);
}

}  // namespace tff
