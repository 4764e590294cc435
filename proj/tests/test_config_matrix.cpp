#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tff/config_matrix.hpp"
#include "tff/search.hpp"

using tff::config_matrix;
using tff::config_property;

TEST(ConfigMatrix, Shape) {
  const auto a = fixtures::twos_n5();
  EXPECT_EQ(a.dim(), 5);
  EXPECT_EQ(a.cols(), 8);
  EXPECT_EQ(a.blocks(), 4);
  EXPECT_EQ(a.block_offset(2), 4);
  EXPECT_EQ(a.block_entry(1, 2, 1), 2);
  EXPECT_EQ(a(7, 0), 0);
  EXPECT_EQ(a.block_entry(1, 0, 2), 0);
}

TEST(ConfigMatrix, DimensionMismatch) {
  try {
    config_matrix(2, {1, 1}, {1, 1, 1});
    FAIL();
  } catch (const tff::error& e) {
    EXPECT_EQ(e.code(), tff::errc::dimension_mismatch);
  }
  EXPECT_THROW(config_matrix::from_rows(2, {1, 1}, {{1, 1}}), tff::error);
  EXPECT_THROW(config_matrix::from_rows(2, {1, 1}, {{1, 1, 0}, {1}}), tff::error);
  EXPECT_THROW(config_matrix(1, {0, 1}, {0}), tff::error);
}

TEST(Validate, PublishedCertificates) {
  EXPECT_TRUE(tff::validate_config(fixtures::twos_n5()).valid);
  EXPECT_TRUE(tff::validate_config(fixtures::hook_n5()).valid);
  EXPECT_TRUE(tff::validate_config(fixtures::seven_fourths()).valid);
  EXPECT_TRUE(tff::validate_config(fixtures::seven_fourths_spatial()).valid);
  EXPECT_TRUE(tff::validate_config(fixtures::seven_fourths_naimark()).valid);
  EXPECT_TRUE(tff::validate_config(config_matrix(1, {1, 1}, {1, 1})).valid);
}

TEST(Validate, ReportsFirstViolation) {
  auto rows = fixtures::twos_n5().rows();
  auto with = [](fixtures::rows_t r) { return tff::validate_config(config_matrix::from_rows(5, {2, 2, 2, 2}, r)); };

  auto neg = rows;
  neg[0][0] = -1;
  neg[0][1] = 1;
  neg[1][0] = 1;
  neg[1][1] = 4;
  EXPECT_EQ(with(neg).violated, config_property::nonnegative);

  auto row_sum = rows;
  row_sum[0][0] = 4;
  EXPECT_EQ(with(row_sum).violated, config_property::row_sum);
  EXPECT_EQ(with(row_sum).row, 0);

  // Swap two whole columns across blocks: row and column sums survive.
  auto swapped = rows;
  for (auto& r : swapped) std::swap(r[0], r[6]);
  const auto rep = with(swapped);
  EXPECT_FALSE(rep.valid);
  EXPECT_EQ(rep.violated, config_property::row_dominance);
  EXPECT_EQ(rep.row, 1);

  const auto col_dom = tff::validate_config(config_matrix(1, {2}, {1, 1}));
  EXPECT_EQ(col_dom.violated, config_property::column_dominance);
  EXPECT_EQ(col_dom.block, 0);
  EXPECT_EQ(tff::validate_config(config_matrix(2, {1, 1}, {2, 0, 1, 1})).violated, config_property::column_sum);
  EXPECT_EQ(tff::validate_config(config_matrix(2, {1, 1}, {0, 2, 2, 0})).violated, config_property::row_dominance);
}

TEST(Validate, AgreesWithDirectTranscription) {
  // Every small nonnegative matrix, valid or not.
  int column_only = 0;
  for (const auto& [n, m] : {std::pair{1, 4}, std::pair{2, 4}, std::pair{3, 3}})
    for (const auto& ranks : oracles::rank_sequences(m, n)) {
      std::vector<int> entries(static_cast<std::size_t>(n * m), 0);
      std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == entries.size()) {
          const config_matrix a(n, ranks, entries);
          const auto rep = tff::validate_config(a);
          EXPECT_EQ(rep.valid, oracles::satisfies_properties(a.rows(), ranks));
          if (rep.violated == config_property::column_dominance) ++column_only;
          return;
        }
        for (int v = 0; v <= n; ++v) {
          entries[i] = v;
          rec(i + 1);
        }
      };
      rec(0);
    }
  EXPECT_GT(column_only, 0);
}

TEST(MuChain, Examples) {
  const auto chain = tff::mu_chain(fixtures::twos_n5());
  ASSERT_EQ(chain.size(), 5u);
  EXPECT_EQ(chain[0], tff::partition{});
  EXPECT_EQ(chain[1], tff::partition({5, 5}));
  EXPECT_EQ(chain[4], tff::partition::rectangle(8, 5));

  const auto frame = tff::parse_tableaux(fixtures::plain_text(fixtures::frame_tableau), 6);
  ASSERT_TRUE(tff::validate_config(frame).valid);
  const auto fchain = tff::mu_chain(frame);
  EXPECT_EQ(fchain[4], tff::partition({11, 11, 11, 11, 11, 5}));
  for (std::size_t k = 1; k < fchain.size(); ++k) EXPECT_EQ(fchain[k].padded(6), fixtures::frame_partial_spectra_x6[k - 1]);
}

TEST(MuChain, InvalidCertificate) {
  try {
    tff::mu_chain(config_matrix(2, {1, 1}, {0, 2, 2, 0}));
    FAIL();
  } catch (const tff::error& e) {
    EXPECT_EQ(e.code(), tff::errc::invalid_certificate);
  }
}

TEST(MuChain, ChainInvariantsOnSearchedCertificates) {
  for (int n = 2; n <= 5; ++n)
    for (int m = n; m <= n + 4; ++m)
      for (const auto& ranks : oracles::rank_sequences(m, n)) {
        auto a = tff::find_config(ranks, n);
        if (!a) continue;
        const auto chain = tff::mu_chain(*a);
        int sigma = 0;
        for (std::size_t k = 1; k < chain.size(); ++k) {
          sigma += ranks[k - 1];
          EXPECT_TRUE(tff::contains(chain[k], chain[k - 1]));
          EXPECT_TRUE(tff::fits_in_rectangle(chain[k], m, n));
          EXPECT_EQ(chain[k].size(), n * sigma);
        }
      }
}

TEST(Tableaux, PublishedPrefixRenderings) {
  const auto a = fixtures::twos_n5();
  for (int k = 1; k <= 4; ++k)
    EXPECT_EQ(tff::tableau_cells(a, k), fixtures::expand(fixtures::twos_n5_prefix_tableaux[static_cast<std::size_t>(k - 1)]))
        << "blocks 1.." << k;
  EXPECT_EQ(tff::tableau_cells(fixtures::hook_n5(), 5), fixtures::expand(fixtures::hook_n5_tableau));
  EXPECT_EQ(tff::tableau_cells(fixtures::seven_fourths(), 4), fixtures::expand(fixtures::seven_fourths_tableau));
}

TEST(Tableaux, SingleBlockIsRowConstant) {
  for (int n = 1; n <= 5; ++n) {
    auto a = tff::find_config(std::vector<int>{n}, n);
    ASSERT_TRUE(a);
    const auto grid = tff::tableau_cells(*a, 1);
    ASSERT_EQ(static_cast<int>(grid.size()), n);
    for (int i = 0; i < n; ++i) {
      ASSERT_EQ(static_cast<int>(grid[static_cast<std::size_t>(i)].size()), n);
      for (const auto& c : grid[static_cast<std::size_t>(i)]) EXPECT_EQ(c, (tff::tableau_cell{1, i + 1}));
    }
  }
}

TEST(Tableaux, TextFormat) {
  const std::string text = tff::render_tableaux(fixtures::seven_fourths(), 1);
  EXPECT_EQ(text, "1:1 1:1 1:1 1:1\n1:2 1:2 1:2 1:2\n");
  const std::string wide = tff::render_tableaux(tff::parse_tableaux(fixtures::plain_text(fixtures::frame_tableau), 6));
  EXPECT_NE(wide.find("5:1"), std::string::npos);
  EXPECT_THROW(tff::render_tableaux(config_matrix(2, {1, 1}, {0, 2, 2, 0})), tff::error);
}

TEST(Tableaux, GalleryParsesToValidCertificates) {
  for (const auto& t : fixtures::gallery) {
    const auto a = tff::parse_tableaux(fixtures::plain_text(t.text), t.dim);
    EXPECT_EQ(a.ranks(), t.ranks) << t.text;
    EXPECT_TRUE(tff::validate_config(a).valid) << t.text;
    EXPECT_EQ(tff::tableau_cells(a, a.blocks()), fixtures::expand(t.text));
  }
}

TEST(Tableaux, MisprintedThreesInDimensionFive) {
  const auto& t = fixtures::misprinted_threes_n5;
  const auto printed = tff::parse_tableaux(fixtures::plain_text(t.text), t.dim);
  const auto rep = tff::validate_config(printed);
  EXPECT_FALSE(rep.valid);
  EXPECT_EQ(rep.violated, config_property::column_dominance);
  EXPECT_EQ(rep.block, 2);

  EXPECT_EQ(tff::count_configs(t.ranks, t.dim), 1u);
  const auto a = tff::find_config(t.ranks, t.dim);
  ASSERT_TRUE(a);
  EXPECT_EQ(tff::tableau_cells(*a, a->blocks()), fixtures::expand(fixtures::threes_n5_tableau));
}

TEST(Tableaux, RenderParseRoundTrip) {
  for (int n = 2; n <= 5; ++n)
    for (int m = n + 1; m <= n + 4; ++m)
      for (const auto& ranks : oracles::rank_sequences(m, n)) {
        auto a = tff::find_config(ranks, n);
        if (!a) continue;
        EXPECT_EQ(tff::parse_tableaux(tff::render_tableaux(*a), n), *a);
      }
}

TEST(Tableaux, ParseErrors) {
  EXPECT_THROW(tff::parse_tableaux("1:1 x\n", 2), tff::error);
  EXPECT_THROW(tff::parse_tableaux("1:2 1:1\n", 2), tff::error);
  EXPECT_THROW(tff::parse_tableaux("2:1\n", 1), tff::error);
  EXPECT_THROW(tff::parse_tableaux("1:1\n1:2\n1:3\n", 2), tff::error);
}
