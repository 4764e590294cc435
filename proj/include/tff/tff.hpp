#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "tff/config_matrix.hpp"
#include "tff/dualities.hpp"
#include "tff/error.hpp"
#include "tff/partition.hpp"
#include "tff/rational.hpp"
#include "tff/search.hpp"

namespace tff {

/// Ambient dimension N, ranks L, M = |L|, α = M/N and prefix sums σ_k.
struct tff_instance {
  int dim;
  partition ranks;
  int total;
  rational alpha;
  std::vector<int> sigma;

  static tff_instance make(const partition& ranks, int dim) {
    if (dim <= 0 || ranks.empty() || ranks.largest() > dim)
      throw error(errc::invalid_ranks, to_string(ranks) + " in dimension " + std::to_string(dim));
    std::vector<int> sigma(static_cast<std::size_t>(ranks.length()) + 1, 0);
    std::partial_sum(ranks.parts().begin(), ranks.parts().end(), sigma.begin() + 1);
    return {dim, ranks, ranks.size(), rational(ranks.size(), dim), std::move(sigma)};
  }
};

struct decision {
  bool is_tff = false;
  std::optional<config_matrix> certificate;
  explicit operator bool() const noexcept { return is_tff; }
};

/// L ∈ TFF(|L|/N, N) iff a configuration matrix exists.
inline decision decide(const partition& ranks, int dim, bool want_certificate = false) {
  auto inst = tff_instance::make(ranks, dim);
  auto cert = find_config(inst.ranks, dim);
  decision d{cert.has_value(), std::nullopt};
  if (want_certificate) d.certificate = std::move(cert);
  return d;
}

/// A positive semidefinite matrix is a sum of projections iff its trace is
/// a nonnegative integer at least its rank.
inline bool fillmore_feasible(const rational& trace, int rank) {
  return trace >= 0 && trace.denominator() == 1 && trace >= rank;
}

inline void require_alpha_between_one_and_two(const rational& alpha) {
  if (alpha <= 1 || alpha >= 2)
    throw error(errc::alpha_out_of_range, "alpha = " + to_string(alpha) + " is outside (1, 2)");
}

/// Necessary and sufficient bounds on the three largest ranks for 1 < α < 2:
/// L1 ≤ (α−1)N, L1+L2 ≤ N, and L1+L2+L3 ≤ N for α < 3/2 or ≤ 2(α−1)N for
/// α > 3/2. At α = 3/2 there is no third-rank constraint: TFF(3/2, N) is
/// the down-set of ((N/2)^3).
inline bool first3_check(int l1, int l2, int l3, const rational& alpha, int dim) {
  require_alpha_between_one_and_two(alpha);
  const rational excess = (alpha - 1) * dim;
  if (l1 > excess) return false;
  if (l1 + l2 > dim) return false;
  const rational half(3, 2);
  if (alpha < half) return l1 + l2 + l3 <= dim;
  if (alpha > half) return l1 + l2 + l3 <= 2 * excess;
  return true;
}

/// (L1, L2, L3, 1, …, 1) with `ones` trailing ones is a TFF sequence iff the
/// first-three-ranks bounds hold.
inline bool hook_type_decide(int l1, int l2, int l3, int ones, const rational& alpha, int dim) {
  require_alpha_between_one_and_two(alpha);
  if (alpha * dim != rational(l1 + l2 + l3 + ones))
    throw error(errc::precondition_not_met, "ranks do not sum to alpha * N");
  if (!(l1 >= l2 && l2 >= l3 && l3 >= 1 && ones >= 0))
    throw error(errc::precondition_not_met, "not a hook-type sequence");
  return first3_check(l1, l2, l3, alpha, dim);
}

/// For each 2 ≤ k ≤ K with α < k/(k−1), requires L1 + … + Lk ≤ N.
inline bool k_block_bound(const partition& ranks, int dim, const rational& alpha) {
  int prefix = ranks[0];
  for (int k = 2; k <= ranks.length(); ++k) {
    prefix += ranks[k - 1];
    if (alpha < rational(k, k - 1) && prefix > dim) return false;
  }
  return true;
}

inline void require_valid_alpha(const rational& alpha, int dim) {
  if (dim <= 0 || alpha < 1 || (alpha * dim).denominator() != 1)
    throw error(errc::invalid_alpha, "alpha = " + to_string(alpha) + " with N = " + std::to_string(dim));
}

/// The single maximal element of TFF(α, N) for the four closed-form
/// families α = n, 1 + 1/n, n + 1/2 and 1 + 2/(2n−1); nullopt otherwise.
inline std::optional<partition> unique_maximal(const rational& alpha, int dim) {
  require_valid_alpha(alpha, dim);
  auto repeat = [](std::vector<int>& v, int value, int times) { v.insert(v.end(), static_cast<std::size_t>(times), value); };
  std::vector<int> parts;
  if (alpha.denominator() == 1) {
    repeat(parts, dim, static_cast<int>(alpha.numerator()));
    return partition(parts);
  }
  const rational excess = alpha - 1;
  if (excess < 1 && excess.numerator() == 1) {
    const auto n = static_cast<int>(excess.denominator());
    repeat(parts, dim / n, n + 1);
    return partition(parts);
  }
  if (alpha.denominator() == 2) {
    const auto n = static_cast<int>((alpha - rational(1, 2)).numerator());
    repeat(parts, dim, n - 1);
    repeat(parts, dim / 2, 3);
    return partition(parts);
  }
  if (excess < 1 && excess.numerator() == 2 && excess.denominator() % 2 == 1) {
    const auto d = static_cast<int>(excess.denominator());
    repeat(parts, 2 * dim / d, (d + 1) / 2 - 1);
    repeat(parts, dim / d, 3);
    return partition(parts);
  }
  return std::nullopt;
}

/// Cheap necessary conditions for 1 < α < 2, applied before searching.
inline bool passes_necessary_filters(const partition& ranks, int dim, const rational& alpha) {
  if (alpha <= 1 || alpha >= 2) return true;
  return first3_check(ranks[0], ranks[1], ranks[2], alpha, dim) && k_block_bound(ranks, dim, alpha);
}

struct tff_enumeration {
  rational alpha;
  int dim;
  std::vector<partition> members;  // reverse lexicographic order
  std::vector<partition> maximal;  // reverse lexicographic order
};

/// All of TFF(α, N) together with its dominance-maximal elements. Candidates
/// are visited in reverse lexicographic order, so anything dominating a
/// candidate is seen first: a candidate under an accepted maximal element
/// is inherited by majorization, and only the rest are filtered and
/// searched. α > 2 is first reduced to 1 < α̃ < 2 (the sets coincide).
inline tff_enumeration enumerate_tff_full(const rational& alpha, int dim) {
  require_valid_alpha(alpha, dim);
  const int total = static_cast<int>((alpha * dim).numerator());
  tff_enumeration out{alpha, dim, {}, {}};
  if (alpha.denominator() == 1) {
    out.members = partitions_of(total, dim, total);
    out.maximal = {*unique_maximal(alpha, dim)};
    return out;
  }
  if (alpha > 2) {
    auto reduced = alpha_reduce(alpha, dim);
    auto inner = enumerate_tff_full(reduced.alpha, reduced.dim);
    out.members = std::move(inner.members);
    out.maximal = std::move(inner.maximal);
    return out;
  }
  for (auto& candidate : partitions_of(total, dim, total)) {
    bool inherited = std::ranges::any_of(out.maximal, [&](const partition& mx) { return dominance_leq(candidate, mx); });
    if (!inherited) {
      if (!passes_necessary_filters(candidate, dim, alpha) || !decide(candidate, dim)) continue;
      out.maximal.push_back(candidate);
    }
    out.members.push_back(std::move(candidate));
  }
  return out;
}

inline std::vector<partition> enumerate_tff(const rational& alpha, int dim) {
  return enumerate_tff_full(alpha, dim).members;
}

inline std::vector<partition> maximal_elements(const rational& alpha, int dim) {
  return enumerate_tff_full(alpha, dim).maximal;
}

}  // namespace tff
