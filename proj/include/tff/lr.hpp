#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "tff/error.hpp"
#include "tff/partition.hpp"

namespace tff {

/// c^ν_{λ,μ} by direct enumeration of LR skew tableaux of shape ν/λ and
/// content μ. Boxes are filled in reverse reading order (rows top to bottom,
/// each row right to left) so the lattice condition is checked as each
/// letter is read. Meant for small shapes; returns 0 on infeasible input.
inline std::uint64_t lr_oracle(const partition& lambda, const partition& mu, const partition& nu) {
  if (lambda.size() + mu.size() != nu.size() || !contains(nu, lambda)) return 0;
  if (mu.empty()) return 1;

  struct box {
    int row, col;
  };
  std::vector<box> order;
  for (int r = 0; r < nu.length(); ++r)
    for (int c = nu[r] - 1; c >= lambda[r]; --c) order.push_back({r, c});

  // filling[r][c] = letter in the box, 0 for boxes of λ or not yet filled.
  std::vector<std::vector<int>> filling(static_cast<std::size_t>(nu.length()));
  for (int r = 0; r < nu.length(); ++r) filling[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(nu[r]), 0);
  std::vector<int> used(static_cast<std::size_t>(mu.length()) + 1, 0);

  std::uint64_t total = 0;
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == order.size()) {
      ++total;
      return;
    }
    const auto [r, c] = order[idx];
    const auto ur = static_cast<std::size_t>(r), uc = static_cast<std::size_t>(c);
    // Rows weakly increase left to right; the box to the right is already filled.
    int hi = (c + 1 < nu[r]) ? filling[ur][uc + 1] : mu.length();
    // Columns strictly increase downward when the box above is in the skew shape.
    int lo = 1;
    if (r > 0 && c >= lambda[r - 1]) lo = filling[ur - 1][uc] + 1;
    for (int v = lo; v <= hi; ++v) {
      const auto uv = static_cast<std::size_t>(v);
      if (used[uv] >= mu[v - 1]) continue;
      if (v > 1 && used[uv] + 1 > used[uv - 1]) continue;
      ++used[uv];
      filling[ur][uc] = v;
      self(self, idx + 1);
      filling[ur][uc] = 0;
      --used[uv];
    }
  };
  rec(rec, 0);
  return total;
}

/// The multiplicity-free expansion of s_{(n1^a)} · s_{(n2^b)} for a ≥ b:
/// every λ with at most a+b parts, λ_{b+1} = … = λ_a = n1,
/// λ_b ≥ max(n1, n2) and λ_i + λ_{a+b+1−i} = n1 + n2 for i ≤ b.
inline std::vector<partition> okada_product(int a, int b, int n1, int n2) {
  if (a < b || b < 1 || n1 < 1 || n2 < 1)
    throw error(errc::invalid_shape, "need a >= b >= 1 and positive widths");
  std::vector<partition> out;
  const int floor_b = std::max(n1, n2), total = n1 + n2;
  std::vector<int> head(static_cast<std::size_t>(b));
  auto rec = [&](auto&& self, int i, int cap) -> void {
    if (i == b) {
      std::vector<int> parts(static_cast<std::size_t>(a + b));
      for (int t = 0; t < b; ++t) {
        parts[static_cast<std::size_t>(t)] = head[static_cast<std::size_t>(t)];
        parts[static_cast<std::size_t>(a + b - 1 - t)] = total - head[static_cast<std::size_t>(t)];
      }
      for (int t = b; t < a; ++t) parts[static_cast<std::size_t>(t)] = n1;
      while (!parts.empty() && parts.back() == 0) parts.pop_back();
      out.emplace_back(std::move(parts));
      return;
    }
    for (int v = cap; v >= floor_b; --v) {
      head[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, v);
    }
  };
  rec(rec, 0, total);
  return out;
}

/// Whether c(λ, (N), …, (N); (M^N)) with k single-row factors is nonzero,
/// i.e. k ≥ N − p(λ) where p(λ) counts the parts equal to M.
inline bool hook_completion_feasible(const partition& lambda, int k, int m, int n) {
  if (!fits_in_rectangle(lambda, m, n))
    throw error(errc::does_not_fit, to_string(lambda) + " does not fit in the rectangle");
  if (lambda.size() != n * (m - k))
    throw error(errc::size_mismatch, "|lambda| must equal N(M-k)");
  return k >= n - lambda.multiplicity(m);
}

}  // namespace tff
