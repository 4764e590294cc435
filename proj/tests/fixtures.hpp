#pragma once

// Published certificates, tableaux and tables used as reference data.
// Tableaux are written one row per '|' with "k:v" tokens, "k:vxR" meaning
// R repeated cells.

#include <cmath>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "tff/config_matrix.hpp"
#include "tff/partition.hpp"
#include "tff/rational.hpp"
#include "tff/realize.hpp"

namespace fixtures {

using rows_t = std::vector<std::vector<int>>;

// (2,2,2,2) in dimension 5.
inline tff::config_matrix twos_n5() {
  return tff::config_matrix::from_rows(5, {2, 2, 2, 2},
                                       rows_t{{5, 0, 3, 0, 0, 0, 0, 0},
                                              {0, 5, 0, 1, 2, 0, 0, 0},
                                              {0, 0, 2, 2, 2, 2, 0, 0},
                                              {0, 0, 0, 2, 1, 0, 5, 0},
                                              {0, 0, 0, 0, 0, 3, 0, 5}});
}

// (3,2,1,1,1) in dimension 5.
inline tff::config_matrix hook_n5() {
  return tff::config_matrix::from_rows(5, {3, 2, 1, 1, 1},
                                       rows_t{{5, 0, 0, 3, 0, 0, 0, 0},
                                              {0, 5, 0, 0, 3, 0, 0, 0},
                                              {0, 0, 5, 0, 0, 3, 0, 0},
                                              {0, 0, 0, 2, 0, 2, 4, 0},
                                              {0, 0, 0, 0, 2, 0, 1, 5}});
}

// (2,2,2,1) in dimension 4, and its spatial image (3,2,2,2).
inline tff::config_matrix seven_fourths() {
  return tff::config_matrix::from_rows(4, {2, 2, 2, 1},
                                       rows_t{{4, 0, 3, 0, 0, 0, 0},
                                              {0, 4, 0, 1, 2, 0, 0},
                                              {0, 0, 1, 2, 2, 2, 0},
                                              {0, 0, 0, 1, 0, 2, 4}});
}

inline tff::config_matrix seven_fourths_spatial() {
  return tff::config_matrix::from_rows(4, {3, 2, 2, 2},
                                       rows_t{{4, 0, 0, 4, 0, 1, 0, 0, 0},
                                              {0, 4, 0, 0, 2, 2, 1, 0, 0},
                                              {0, 0, 4, 0, 0, 1, 0, 4, 0},
                                              {0, 0, 0, 0, 2, 0, 3, 0, 4}});
}

// Naimark image of seven_fourths(): (2,2,2,1) in dimension 3.
inline tff::config_matrix seven_fourths_naimark() {
  return tff::config_matrix::from_rows(3, {2, 2, 2, 1},
                                       rows_t{{3, 0, 3, 0, 1, 0, 0},
                                              {0, 3, 0, 1, 2, 1, 0},
                                              {0, 0, 0, 2, 0, 2, 3}});
}

// Letter matrices T_k of seven_fourths(), stacked, and their complements S_k.
inline const std::vector<std::string> seven_fourths_letters = {
    "1111000", "1111000", "1000111", "1110100", "0001111", "0110011", "0001111"};
inline const std::vector<std::string> seven_fourths_complements = {
    "1110000", "1110000", "0001110", "1101000", "0000111", "0011001", "0000111"};

// Binary summands of block 2 of twos_n5(); each pair is the row (0-based)
// holding the unit of column 1 and column 2.
inline const std::vector<std::pair<int, int>> twos_n5_block2_summands = {{0, 1}, {0, 2}, {0, 2}, {2, 3}, {2, 3}};

// Printed tableaux of twos_n5() for the leading 1..4 blocks.
inline const std::vector<std::string> twos_n5_prefix_tableaux = {
    "1:1x5 | 1:2x5",
    "1:1x5 2:1x3 | 1:2x5 2:2 | 2:1x2 2:2x2 | 2:2x2",
    "1:1x5 2:1x3 | 1:2x5 2:2 3:1x2 | 2:1x2 2:2x2 3:1x2 3:2x2 | 2:2x2 3:1 | 3:2x3",
    "1:1x5 2:1x3 | 1:2x5 2:2 3:1x2 | 2:1x2 2:2x2 3:1x2 3:2x2 | 2:2x2 3:1 4:1x5 | 3:2x3 4:2x5",
};

inline const std::string hook_n5_tableau =
    "1:1x5 2:1x3 | 1:2x5 2:2x3 | 1:3x5 3:1x3 | 2:1x2 3:1x2 4:1x4 | 2:2x2 4:1 5:1x5";
inline const std::string seven_fourths_tableau =
    "1:1x4 2:1x3 | 1:2x4 2:2 3:1x2 | 2:1 2:2x2 3:1x2 3:2x2 | 2:2 3:2x2 4:1x4";
inline const std::string seven_fourths_naimark_tableau =
    "1:1x3 2:1x3 3:1 | 1:2x3 2:2 3:1x2 3:2 | 2:2x2 3:2x2 4:1x3";

// (4,2,2,2,1) in dimension 6.
inline const std::string frame_tableau =
    "1:1x6 2:1x5 | 1:2x6 2:2x3 3:1x2 | 1:3x6 3:1x3 3:2x2 | 1:4x6 4:1x5 | "
    "2:1 2:2x2 3:1 3:2 4:1 4:2x5 | 2:2 3:2x3 4:2 5:1x6";

struct printed_tableau {
  int dim;
  std::vector<int> ranks;
  std::string text;
};

// Further published tableaux (certificates given only as tableaux).
inline const std::vector<printed_tableau> gallery = {
    {3, {3, 2, 1}, "1:1x3 2:1x3 | 1:2x3 2:2x3 | 1:3x3 3:1x3"},
    {3, {2, 1, 1, 1}, "1:1x3 2:1x2 | 1:2x3 3:1x2 | 2:1 3:1 4:1x3"},
    {3, {1, 1, 1, 1}, "1:1x3 2:1 | 2:1x2 3:1x2 | 3:1 4:1x3"},
    {5, {2, 2, 2, 2}, "1:1x5 2:1x3 | 1:2x5 2:2 3:1x2 | 2:1x2 2:2x2 3:1x2 3:2x2 | 2:2x2 3:1 4:1x5 | 3:2x3 4:2x5"},
    {7, {4, 3, 3, 1, 1},
     "1:1x7 2:1x5 | 1:2x7 2:2x5 | 1:3x7 2:3x2 3:1x3 | 1:4x7 3:1x2 3:2x3 | 2:1x2 2:3x3 3:1x2 3:2x2 3:3x3 | "
     "2:2x2 3:2x2 3:3x2 4:1x6 | 2:3x2 3:3x2 4:1 5:1x7"},
    {7, {3, 2, 2, 2, 1},
     "1:1x7 2:1x3 | 1:2x7 2:2x3 | 1:3x7 3:1x3 | 2:1x4 3:1x3 3:2x3 | 2:2x4 3:2 4:1x5 | 3:1 3:2x2 4:1x2 4:2x5 | "
     "3:2 4:2x2 5:1x7"},
    {6, {4, 2, 2, 2, 1}, frame_tableau},
};

// (3,3,3,3) in dimension 5 as printed. Block 3 is not a lattice word: row 2
// holds three 2s below only two 1s. The unique certificate moves one 3:1 cell
// from row 4 up to row 2 and one 3:2 cell down.
inline const printed_tableau misprinted_threes_n5 = {
    5, {3, 3, 3, 3},
    "1:1x5 2:1x5 3:1x2 | 1:2x5 2:2x3 3:1 3:2x3 | 1:3x5 2:3 3:1 4:1x5 | 2:2x2 2:3x2 3:1 3:2x2 4:2x5 | "
    "2:3x2 3:3x5 4:3x5"};
inline const std::string threes_n5_tableau =
    "1:1x5 2:1x5 3:1x2 | 1:2x5 2:2x3 3:1x2 3:2x2 | 1:3x5 2:3 3:1 4:1x5 | 2:2x2 2:3x2 3:2x3 4:2x5 | "
    "2:3x2 3:3x5 4:3x5";

/// Expands the compact notation into one tableau_cell row per '|'.
inline tff::tableau_grid expand(const std::string& compact) {
  tff::tableau_grid grid(1);
  std::istringstream in(compact);
  std::string tok;
  while (in >> tok) {
    if (tok == "|") {
      grid.emplace_back();
      continue;
    }
    const auto colon = tok.find(':');
    const auto x = tok.find('x');
    const int block = std::stoi(tok.substr(0, colon));
    const int value = std::stoi(tok.substr(colon + 1, x == std::string::npos ? std::string::npos : x - colon - 1));
    const int repeat = x == std::string::npos ? 1 : std::stoi(tok.substr(x + 1));
    for (int r = 0; r < repeat; ++r) grid.back().push_back({block, value});
  }
  return grid;
}

/// The same tableau in the plain "k:v" text accepted by parse_tableaux.
inline std::string plain_text(const std::string& compact) {
  std::ostringstream out;
  for (const auto& row : expand(compact)) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j].block << ':' << row[j].value;
    out << '\n';
  }
  return out.str();
}

// Orthonormal block bases of a tight fusion frame with ranks (4,2,2,2,1)
// in R^6, written as the 6 x 11 concatenated matrix.
inline Eigen::MatrixXd frame_basis() {
  const double s = std::sqrt(5.0 / 72), t = 1 / (2 * std::sqrt(2.0)), r5 = std::sqrt(5.0), q = std::sqrt(5.0 / 12),
               r3 = std::sqrt(3.0), u = 1 / (2 * std::sqrt(6.0)), w = std::sqrt(55.0 / 72), r11 = std::sqrt(11.0);
  Eigen::MatrixXd m(6, 11);
  m << 1, 0, 0, 0, 5.0 / 6, 0, -s, 0, s, 0, 0,
      0, 1, 0, 0, 0, 0.5, -t, -1.0 / 3, -t, 1.0 / 3, 1.0 / 3,
      0, 0, 1, 0, 0, 0, 0, r5 / 3, 0, r5 / 6, r5 / 6,
      0, 0, 0, 1, 0, 0, 0, 0, 0, q, -q,
      0, 0, 0, 0, 0, -r3 / 2, u, -1 / r3, u, 1 / r3, 1 / r3,
      0, 0, 0, 0, -r11 / 6, 0, -w, 0, w, 0, 0;
  return m;
}

inline tff::projection_set frame_projection_set() {
  const Eigen::MatrixXd m = frame_basis();
  tff::projection_set s;
  s.dim = 6;
  s.alpha = tff::rational(11, 6);
  int at = 0;
  for (int r : {4, 2, 2, 2, 1}) {
    s.bases.emplace_back(m.middleCols(at, r));
    at += r;
  }
  return s;
}

// Eigenvalues of the partial sums P_1 + ... + P_k, k = 1..5, times 6.
inline const std::vector<std::vector<int>> frame_partial_spectra_x6 = {
    {6, 6, 6, 6, 0, 0}, {11, 9, 6, 6, 3, 1}, {11, 11, 11, 6, 5, 4}, {11, 11, 11, 11, 11, 5}, {11, 11, 11, 11, 11, 11}};

struct table_cell {
  int m;
  int n;
  std::vector<std::vector<int>> maximal;
};

// Published lists of maximal sequences for 3 <= N <= 9, alpha = M/N <= 2,
// transcribed as printed.
inline const std::vector<table_cell> maximal_tables = {
    {3, 3, {{3}}},
    {4, 3, {{1, 1, 1, 1}}},
    {5, 3, {{2, 1, 1, 1}}},
    {6, 3, {{3, 3}}},
    {4, 4, {{4}}},
    {5, 4, {{1, 1, 1, 1, 1}}},
    {6, 4, {{2, 2, 2}}},
    {7, 4, {{3, 1, 1, 1, 1}, {2, 2, 2, 1}}},
    {8, 4, {{4, 4}}},
    {5, 5, {{5}}},
    {6, 5, {{1, 1, 1, 1, 1, 1}}},
    {7, 5, {{2, 2, 1, 1, 1}}},
    {8, 5, {{3, 2, 1, 1, 1}, {2, 2, 2, 2}}},
    {9, 5, {{4, 1, 1, 1, 1, 1}, {3, 2, 2, 2}}},
    {10, 5, {{5, 5}}},
    {6, 6, {{6}}},
    {7, 6, {{1, 1, 1, 1, 1, 1, 1}}},
    {8, 6, {{2, 2, 2, 2}}},
    {9, 6, {{3, 3, 3}}},
    {10, 6, {{4, 2, 2, 2}}},
    {11, 6, {{5, 1, 1, 1, 1, 1, 1}, {4, 2, 2, 2, 1}, {3, 3, 3, 2}}},
    {12, 6, {{6, 6}}},
    {7, 7, {{7}}},
    {8, 7, {{1, 1, 1, 1, 1, 1, 1, 1}}},
    {9, 7, {{2, 2, 2, 1, 1, 1}}},
    {10, 7, {{3, 3, 1, 1, 1, 1}, {3, 2, 2, 2, 1}}},
    {11, 7, {{4, 3, 1, 1, 1, 1}, {4, 2, 2, 2, 1}}},
    {12, 7, {{5, 2, 2, 1, 1, 1}, {4, 3, 3, 1, 1}, {3, 3, 3, 3}}},
    {13, 7, {{6, 1, 1, 1, 1, 1, 1, 1}, {5, 2, 2, 2, 2}, {4, 3, 3, 3}}},
    {14, 7, {{7, 7}}},
    {8, 8, {{8}}},
    {9, 8, {{1, 1, 1, 1, 1, 1, 1, 1, 1}}},
    {10, 8, {{2, 2, 2, 2, 2}}},
    {11, 8, {{3, 2, 2, 2, 2}, {3, 3, 2, 1, 1, 1}}},
    {12, 8, {{4, 4, 4}}},
    {13, 8, {{5, 3, 2, 1, 1, 1}, {5, 2, 2, 2, 2}, {4, 4, 2, 2, 1}}},
    {14, 8, {{6, 2, 2, 2, 2}, {5, 3, 3, 2, 1}, {4, 4, 4, 2}}},
    {15, 8, {{7, 1, 1, 1, 1, 1, 1, 1}, {6, 2, 2, 2, 2, 1}, {5, 3, 3, 2, 2}, {4, 4, 4, 3}}},
    {16, 8, {{8, 8}}},
    {9, 9, {{9}}},
    {10, 9, {{1, 1, 1, 1, 1, 1, 1, 1, 1, 1}}},
    {11, 9, {{2, 2, 2, 2, 1, 1, 1}}},
    {12, 9, {{3, 3, 3, 3}}},
    {13, 9, {{4, 4, 1, 1, 1, 1, 1}, {4, 3, 2, 2, 2}, {3, 3, 3, 3, 1}}},
    {14, 9, {{5, 4, 1, 1, 1, 1, 1}, {5, 3, 2, 2, 2}, {4, 3, 3, 3, 1}}},
    {15, 9, {{6, 3, 3, 3}}},
    {16, 9, {{7, 2, 2, 2, 1, 1, 1}, {6, 3, 3, 3, 1}, {5, 4, 4, 2, 1}, {4, 4, 4, 4}}},
    {17, 9, {{8, 1, 1, 1, 1, 1, 1, 1, 1, 1}, {7, 2, 2, 2, 2, 2}, {6, 3, 3, 3, 2}, {5, 4, 4, 4}}},
    {18, 9, {{9, 9}}},
};

}  // namespace fixtures
