#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "tff/error.hpp"
#include "tff/partition.hpp"

namespace tff {

/// An N×M nonnegative integer matrix split into column blocks of widths
/// L_1, …, L_K (M = ΣL_k). Ranks are kept in the given block order, which
/// need not be sorted.
class config_matrix {
 public:
  config_matrix(int dim, std::vector<int> ranks, std::vector<int> entries)
      : dim_(dim), ranks_(std::move(ranks)), entries_(std::move(entries)) {
    cols_ = std::accumulate(ranks_.begin(), ranks_.end(), 0);
    if (dim_ <= 0 || std::ranges::any_of(ranks_, [](int r) { return r <= 0; }))
      throw error(errc::dimension_mismatch, "dimension and ranks must be positive");
    if (entries_.size() != static_cast<std::size_t>(dim_) * static_cast<std::size_t>(cols_))
      throw error(errc::dimension_mismatch,
                  "expected " + std::to_string(dim_) + "x" + std::to_string(cols_) + " entries, got " +
                      std::to_string(entries_.size()));
    offsets_.resize(ranks_.size() + 1, 0);
    std::partial_sum(ranks_.begin(), ranks_.end(), offsets_.begin() + 1);
  }

  /// Builds from nested rows.
  static config_matrix from_rows(int dim, std::vector<int> ranks,
                                 const std::vector<std::vector<int>>& rows) {
    std::vector<int> flat;
    if (static_cast<int>(rows.size()) != dim)
      throw error(errc::dimension_mismatch, "expected " + std::to_string(dim) + " rows");
    const int width = std::accumulate(ranks.begin(), ranks.end(), 0);
    for (const auto& r : rows) {
      if (static_cast<int>(r.size()) != width)
        throw error(errc::dimension_mismatch, "every row must have " + std::to_string(width) + " entries");
      flat.insert(flat.end(), r.begin(), r.end());
    }
    return config_matrix(dim, std::move(ranks), std::move(flat));
  }

  int dim() const noexcept { return dim_; }
  int cols() const noexcept { return cols_; }
  int blocks() const noexcept { return static_cast<int>(ranks_.size()); }
  const std::vector<int>& ranks() const noexcept { return ranks_; }
  std::span<const int> entries() const noexcept { return entries_; }

  /// First global column of block k (0-based); block_offset(K) == M.
  int block_offset(int k) const noexcept { return offsets_[static_cast<std::size_t>(k)]; }

  /// Zero outside the matrix.
  int operator()(int row, int col) const noexcept {
    if (row < 0 || row >= dim_ || col < 0 || col >= cols_) return 0;
    return entries_[static_cast<std::size_t>(row * cols_ + col)];
  }

  /// Zero outside block k.
  int block_entry(int k, int row, int col) const noexcept {
    if (col < 0 || col >= ranks_[static_cast<std::size_t>(k)]) return 0;
    return (*this)(row, block_offset(k) + col);
  }

  std::vector<std::vector<int>> rows() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(dim_));
    for (int i = 0; i < dim_; ++i)
      out[static_cast<std::size_t>(i)].assign(entries_.begin() + i * cols_,
                                              entries_.begin() + (i + 1) * cols_);
    return out;
  }

  friend bool operator==(const config_matrix&, const config_matrix&) = default;

 private:
  int dim_;
  int cols_ = 0;
  std::vector<int> ranks_;
  std::vector<int> entries_;
  std::vector<int> offsets_;
};

/// Which of the five certificate properties failed first.
enum class config_property { none, nonnegative, row_sum, column_sum, row_dominance, column_dominance };

struct validation_report {
  bool valid = true;
  config_property violated = config_property::none;
  int row = -1;
  int col = -1;
  int block = -1;
  std::string message;

  explicit operator bool() const noexcept { return valid; }
};

/// Checks (i) nonnegativity, (ii) row sums = M, (iii) column sums = N,
/// (iv) row-sum dominance across the whole matrix and (v) column-sum
/// dominance inside each block, stopping at the first violation.
inline validation_report validate_config(const config_matrix& a) {
  const int n = a.dim(), m = a.cols();
  auto fail = [](config_property p, int row, int col, int block, std::string msg) {
    return validation_report{false, p, row, col, block, std::move(msg)};
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      if (a(i, j) < 0) return fail(config_property::nonnegative, i, j, -1, "negative entry");
  for (int i = 0; i < n; ++i) {
    int s = 0;
    for (int j = 0; j < m; ++j) s += a(i, j);
    if (s != m) return fail(config_property::row_sum, i, -1, -1, "row sum " + std::to_string(s));
  }
  for (int j = 0; j < m; ++j) {
    int s = 0;
    for (int i = 0; i < n; ++i) s += a(i, j);
    if (s != n) return fail(config_property::column_sum, -1, j, -1, "column sum " + std::to_string(s));
  }
  for (int i = 0; i + 1 < n; ++i) {
    int diff = 0;
    for (int l = 0; l < m; ++l) {
      if (diff < a(i + 1, l))
        return fail(config_property::row_dominance, i + 1, l, -1, "row-sum dominance fails");
      diff += a(i, l) - a(i + 1, l);
    }
  }
  for (int k = 0; k < a.blocks(); ++k) {
    const int width = a.ranks()[static_cast<std::size_t>(k)];
    for (int j = 0; j + 1 < width; ++j) {
      int diff = 0;
      for (int l = 0; l < n; ++l) {
        if (diff < a.block_entry(k, l, j + 1))
          return fail(config_property::column_dominance, l, a.block_offset(k) + j + 1, k,
                      "column-sum dominance fails in block " + std::to_string(k + 1));
        diff += a.block_entry(k, l, j) - a.block_entry(k, l, j + 1);
      }
    }
  }
  return {};
}

inline void require_valid(const config_matrix& a) {
  if (auto report = validate_config(a); !report)
    throw error(errc::invalid_certificate, report.message);
}

/// Row sums of the leading k blocks, as padded vectors (index 0 is the
/// empty prefix, index K the full matrix).
inline std::vector<std::vector<int>> prefix_row_sums(const config_matrix& a) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(a.dim()), 0);
  out.push_back(cur);
  for (int k = 0; k < a.blocks(); ++k) {
    for (int i = 0; i < a.dim(); ++i)
      for (int j = a.block_offset(k); j < a.block_offset(k + 1); ++j)
        cur[static_cast<std::size_t>(i)] += a(i, j);
    out.push_back(cur);
  }
  return out;
}

/// μ^0 = ∅ ⊆ μ^1 ⊆ … ⊆ μ^K = (M^N).
inline std::vector<partition> mu_chain(const config_matrix& a) {
  require_valid(a);
  std::vector<partition> out;
  for (auto& sums : prefix_row_sums(a)) out.emplace_back(std::move(sums));
  return out;
}

/// One box of a rendered tableau: block index and value, both 1-based.
struct tableau_cell {
  int block;
  int value;
  friend bool operator==(const tableau_cell&, const tableau_cell&) = default;
};

using tableau_grid = std::vector<std::vector<tableau_cell>>;

/// The union of skew LR tableaux for blocks 1..upto: row i of block k is
/// filled with A_k[i,1] ones, A_k[i,2] twos, and so on.
inline tableau_grid tableau_cells(const config_matrix& a, int upto) {
  tableau_grid grid(static_cast<std::size_t>(a.dim()));
  for (int k = 0; k < upto; ++k)
    for (int i = 0; i < a.dim(); ++i)
      for (int v = 0; v < a.ranks()[static_cast<std::size_t>(k)]; ++v)
        for (int c = 0; c < a.block_entry(k, i, v); ++c)
          grid[static_cast<std::size_t>(i)].push_back({k + 1, v + 1});
  while (!grid.empty() && grid.back().empty()) grid.pop_back();
  return grid;
}

inline std::string format_tableau(const tableau_grid& grid) {
  std::size_t width = 0;
  for (const auto& row : grid)
    for (const auto& c : row)
      width = std::max(width, std::to_string(c.block).size() + 1 + std::to_string(c.value).size());
  std::ostringstream out;
  for (const auto& row : grid) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      std::string tok = std::to_string(row[j].block) + ":" + std::to_string(row[j].value);
      if (j + 1 < row.size()) tok.resize(width, ' ');
      out << tok << (j + 1 < row.size() ? " " : "");
    }
    out << '\n';
  }
  return out.str();
}

/// Text rendering of blocks 1..upto (all blocks when upto < 0), one
/// "k:v" token per box.
inline std::string render_tableaux(const config_matrix& a, int upto = -1) {
  require_valid(a);
  return format_tableau(tableau_cells(a, upto < 0 ? a.blocks() : upto));
}

/// Inverse of render_tableaux for a complete rendering: rebuilds the
/// certificate for dimension `dim` (rows missing from the text are empty).
inline config_matrix parse_tableaux(const std::string& text, int dim) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<tableau_cell>> grid;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    std::vector<tableau_cell> row;
    while (ls >> tok) {
      auto colon = tok.find(':');
      if (colon == std::string::npos) throw error(errc::parse_error, "bad tableau cell '" + tok + "'");
      try {
        row.push_back({std::stoi(tok.substr(0, colon)), std::stoi(tok.substr(colon + 1))});
      } catch (const std::exception&) {
        throw error(errc::parse_error, "bad tableau cell '" + tok + "'");
      }
    }
    grid.push_back(std::move(row));
  }
  while (!grid.empty() && grid.back().empty()) grid.pop_back();
  if (static_cast<int>(grid.size()) > dim) throw error(errc::parse_error, "more rows than dimension");

  std::map<int, int> width;
  for (const auto& row : grid)
    for (const auto& c : row) {
      if (c.block < 1 || c.value < 1) throw error(errc::parse_error, "cell indices are 1-based");
      width[c.block] = std::max(width[c.block], c.value);
    }
  std::vector<int> ranks;
  for (int k = 1; k <= static_cast<int>(width.size()); ++k) {
    if (!width.contains(k)) throw error(errc::parse_error, "missing block " + std::to_string(k));
    ranks.push_back(width[k]);
  }
  std::vector<int> offsets(ranks.size() + 1, 0);
  std::partial_sum(ranks.begin(), ranks.end(), offsets.begin() + 1);
  const int m = offsets.back();
  std::vector<int> entries(static_cast<std::size_t>(dim * m), 0);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto& row = grid[i];
    for (std::size_t j = 0; j + 1 < row.size(); ++j) {
      auto a = row[j], b = row[j + 1];
      if (a.block > b.block || (a.block == b.block && a.value > b.value))
        throw error(errc::parse_error, "row " + std::to_string(i + 1) + " is not weakly increasing");
    }
    for (const auto& c : row)
      ++entries[i * static_cast<std::size_t>(m) +
                static_cast<std::size_t>(offsets[static_cast<std::size_t>(c.block - 1)] + c.value - 1)];
  }
  return config_matrix(dim, std::move(ranks), std::move(entries));
}

}  // namespace tff
