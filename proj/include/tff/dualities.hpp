#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "tff/config_matrix.hpp"
#include "tff/error.hpp"
#include "tff/partition.hpp"
#include "tff/rational.hpp"

namespace tff {

/// A rank sequence in a given ambient dimension, with its frame bound.
struct dual_instance {
  partition ranks;
  int dim = 0;
  rational alpha;
  bool dropped_zero_parts = false;
};

/// Orthogonal complements: (N−L_K, …, N−L_1) in the same dimension, with
/// frame bound K − α. Zero parts are dropped; an all-zero result is
/// reported as Degenerate.
inline dual_instance spatial_dual(const partition& ranks, int dim) {
  if (ranks.empty() || ranks.largest() > dim || dim <= 0)
    throw error(errc::invalid_ranks, to_string(ranks) + " in dimension " + std::to_string(dim));
  std::vector<int> parts;
  for (int i = ranks.length() - 1; i >= 0; --i) parts.push_back(dim - ranks[i]);
  const bool dropped = std::ranges::count(parts, 0) > 0;
  partition dual(std::move(parts));
  if (dual.empty()) throw error(errc::degenerate, "every subspace is the whole space");
  return {dual, dim, rational(ranks.length()) - rational(ranks.size(), dim), dropped};
}

/// Naimark complement: the same ranks in dimension M − N with frame bound
/// α/(α−1).
inline dual_instance naimark_dual(const partition& ranks, int dim) {
  const int total = ranks.size();
  if (dim <= 0 || total <= dim)
    throw error(errc::alpha_not_greater_than_one, "frame bound " + to_string(rational(total, std::max(dim, 1))));
  return {ranks, total - dim, rational(total, total - dim), false};
}

struct reduced_alpha {
  rational alpha;
  int dim;
  friend bool operator==(const reduced_alpha&, const reduced_alpha&) = default;
};

/// TFF(α, N) = TFF(α̃, Ñ) with 1/α + 1/α̃ = 1 and Ñ = N(α − 1).
inline reduced_alpha alpha_reduce(const rational& alpha, int dim) {
  if (alpha <= 1) throw error(errc::alpha_not_greater_than_one, "alpha = " + to_string(alpha));
  const rational scaled = alpha * dim;
  if (scaled.denominator() != 1) throw error(errc::invalid_alpha, "alpha * N is not an integer");
  const rational reduced_dim = (alpha - 1) * dim;
  return {alpha / (alpha - 1), static_cast<int>(reduced_dim.numerator())};
}

/// When L_1 = N(α − 1), L ∈ TFF(α, N) iff (L_2, …, L_K) is a TFF sequence
/// in dimension N(α − 1). The stripped sequence has total N, so its frame
/// bound is 1/(α − 1).
inline dual_instance recur_strip(const partition& ranks, int dim) {
  const int reduced = ranks.size() - dim;
  if (ranks.empty() || ranks.largest() != reduced || reduced <= 0)
    throw error(errc::precondition_not_met, "L_1 must equal N(alpha - 1) = " + std::to_string(reduced));
  partition tail(std::vector<int>(ranks.vec().begin() + 1, ranks.vec().end()));
  return {tail, reduced, rational(tail.size(), reduced), false};
}

using binary_matrix = std::vector<std::vector<int>>;

/// Splits block k into N binary matrices with a single unit per column:
/// the j-th summand takes the j-th smallest row (with multiplicity) of each
/// column. Throws InvalidCertificate unless every summand has strictly
/// increasing rows from left to right, which is what makes the split unique.
inline std::vector<binary_matrix> binary_decomposition(const config_matrix& a, int k) {
  const int n = a.dim();
  const int width = a.ranks().at(static_cast<std::size_t>(k));
  std::vector<std::vector<int>> rows_in_col(static_cast<std::size_t>(width));
  for (int y = 0; y < width; ++y) {
    for (int x = 0; x < n; ++x)
      for (int c = 0; c < a.block_entry(k, x, y); ++c) rows_in_col[static_cast<std::size_t>(y)].push_back(x);
    if (static_cast<int>(rows_in_col[static_cast<std::size_t>(y)].size()) != n)
      throw error(errc::invalid_certificate, "column sum differs from dimension");
  }
  std::vector<binary_matrix> out;
  for (int j = 0; j < n; ++j) {
    binary_matrix c(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(width), 0));
    int last = -1;
    for (int y = 0; y < width; ++y) {
      const int row = rows_in_col[static_cast<std::size_t>(y)][static_cast<std::size_t>(j)];
      if (row <= last)
        throw error(errc::invalid_certificate,
                    "block " + std::to_string(k + 1) + " has no admissible binary decomposition");
      c[static_cast<std::size_t>(row)][static_cast<std::size_t>(y)] = 1;
      last = row;
    }
    out.push_back(std::move(c));
  }
  return out;
}

/// The N × (N − L) binary matrix whose units sit on the rows left empty by
/// `c`, taken in increasing order.
inline binary_matrix complementary_summand(const binary_matrix& c) {
  const std::size_t n = c.size();
  const std::size_t width = n ? c.front().size() : 0;
  binary_matrix out(n, std::vector<int>(n - width, 0));
  std::size_t t = 0;
  for (std::size_t x = 0; x < n; ++x)
    if (std::ranges::find(c[x], 1) == c[x].end()) out[x][t++] = 1;
  return out;
}

/// Spatial duality on certificates. Each block A_i is split by
/// binary_decomposition, every summand is replaced by its complementary
/// summand and the results are summed into B_i; the output [B_K | … | B_1]
/// certifies (N−L_K, …, N−L_1).
inline config_matrix config_spatial_dual(const config_matrix& a) {
  require_valid(a);
  const int n = a.dim();
  const int k_count = a.blocks();
  for (int r : a.ranks())
    if (r == n) throw error(errc::degenerate, "a block has full rank; its complement is empty");

  std::vector<binary_matrix> duals;  // per source block, N x (N - L_i)
  for (int k = 0; k < k_count; ++k) {
    const int width = a.ranks()[static_cast<std::size_t>(k)];
    binary_matrix b(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n - width), 0));
    for (const auto& c : binary_decomposition(a, k)) {
      const auto cc = complementary_summand(c);
      for (std::size_t x = 0; x < b.size(); ++x)
        for (std::size_t y = 0; y < b[x].size(); ++y) b[x][y] += cc[x][y];
    }
    duals.push_back(std::move(b));
  }

  std::vector<int> ranks;
  for (int k = k_count - 1; k >= 0; --k) ranks.push_back(n - a.ranks()[static_cast<std::size_t>(k)]);
  const int m = std::accumulate(ranks.begin(), ranks.end(), 0);
  std::vector<int> entries;
  entries.reserve(static_cast<std::size_t>(n * m));
  for (int x = 0; x < n; ++x)
    for (int k = k_count - 1; k >= 0; --k) {
      const auto& row = duals[static_cast<std::size_t>(k)][static_cast<std::size_t>(x)];
      entries.insert(entries.end(), row.begin(), row.end());
    }
  return config_matrix(n, std::move(ranks), std::move(entries));
}

/// T_k: the L_k × M binary matrix with T_k[x, y] = 1 when letter x + 1
/// occupies column y of the skew tableau μ^k/μ^{k−1}.
inline binary_matrix letter_matrix(const config_matrix& a, int k) {
  require_valid(a);
  const int n = a.dim(), m = a.cols();
  const int width = a.ranks().at(static_cast<std::size_t>(k));
  const auto mu = prefix_row_sums(a);
  binary_matrix t(static_cast<std::size_t>(width), std::vector<int>(static_cast<std::size_t>(m), 0));
  for (int r = 0; r < n; ++r) {
    int c = mu[static_cast<std::size_t>(k)][static_cast<std::size_t>(r)];
    for (int v = 0; v < width; ++v)
      for (int cnt = 0; cnt < a.block_entry(k, r, v); ++cnt) {
        auto& cell = t[static_cast<std::size_t>(v)][static_cast<std::size_t>(c++)];
        if (cell) throw error(errc::invalid_certificate, "letter repeated within a column");
        cell = 1;
      }
  }
  return t;
}

/// S_k[x, y] = 1 − T_k[x, M − 1 − y].
inline binary_matrix complementary_letter_matrix(const binary_matrix& t) {
  binary_matrix s = t;
  for (auto& row : s) {
    std::ranges::reverse(row);
    for (int& v : row) v = 1 - v;
  }
  return s;
}

/// Naimark duality on certificates. The complemented letter matrices
/// S_1, …, S_K are stacked and the units of every column are pushed to the
/// top (block order, then letter order); the row each unit lands in gives
/// the dual certificate for the same ranks in dimension M − N.
inline config_matrix config_naimark_dual(const config_matrix& a) {
  require_valid(a);
  const int n = a.dim(), m = a.cols();
  if (m <= n) throw error(errc::alpha_not_greater_than_one, "M must exceed N");
  const int dual_dim = m - n;

  std::vector<int> fill(static_cast<std::size_t>(m), 0);
  std::vector<int> entries(static_cast<std::size_t>(dual_dim * m), 0);
  for (int k = 0; k < a.blocks(); ++k) {
    const auto s = complementary_letter_matrix(letter_matrix(a, k));
    for (int y = 0; y < m; ++y)
      for (std::size_t x = 0; x < s.size(); ++x) {
        if (!s[x][static_cast<std::size_t>(y)]) continue;
        const int row = fill[static_cast<std::size_t>(y)]++;
        if (row >= dual_dim) throw error(errc::invalid_certificate, "dual column overflows");
        ++entries[static_cast<std::size_t>(row * m + a.block_offset(k)) + x];
      }
  }
  return config_matrix(dual_dim, a.ranks(), std::move(entries));
}

}  // namespace tff
