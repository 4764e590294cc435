#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tff/config_matrix.hpp"
#include "tff/error.hpp"
#include "tff/partition.hpp"
#include "tff/rational.hpp"
#include "tff/realize.hpp"
#include "tff/tff.hpp"

namespace tff {

using json = nlohmann::json;

namespace detail {

template <class F>
auto parsing(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw error(errc::parse_error, std::string(what) + ": " + e.what());
  }
}

}  // namespace detail

inline json to_json(const partition& p) { return json(p.vec()); }

inline partition partition_from_json(const json& j) {
  return detail::parsing("partition", [&] {
    if (!j.is_array()) throw error(errc::parse_error, "partition must be a JSON array");
    return partition(j.get<std::vector<int>>());
  });
}

inline json to_json(const config_matrix& a) {
  return {{"dim", a.dim()}, {"ranks", a.ranks()}, {"entries", a.rows()}};
}

/// Shape is checked here; certificate properties are left to validate_config.
inline config_matrix config_from_json(const json& j) {
  return detail::parsing("configuration matrix", [&] {
    return config_matrix::from_rows(j.at("dim").get<int>(), j.at("ranks").get<std::vector<int>>(),
                                    j.at("entries").get<std::vector<std::vector<int>>>());
  });
}

enum class dual_kind { spatial, naimark };

inline json to_json(const config_matrix& dual, dual_kind kind, const std::vector<int>& source_ranks) {
  json j = to_json(dual);
  j["dual"] = kind == dual_kind::spatial ? "spatial" : "naimark";
  j["source_ranks"] = source_ranks;
  return j;
}

inline json to_json(const rational& alpha, int dim, const std::vector<partition>& maximal) {
  json list = json::array();
  for (const auto& p : maximal) list.push_back(to_json(p));
  return {{"alpha", to_string(alpha)}, {"dim", dim}, {"maximal", std::move(list)}};
}

inline json to_json(const tff_enumeration& e) { return to_json(e.alpha, e.dim, e.maximal); }

/// Reads {"alpha", "dim", "maximal"}; members are not serialized.
inline tff_enumeration enumeration_from_json(const json& j) {
  return detail::parsing("enumeration", [&] {
    tff_enumeration e{parse_rational(j.at("alpha").get<std::string>()), j.at("dim").get<int>(), {}, {}};
    for (const auto& p : j.at("maximal")) e.maximal.push_back(partition_from_json(p));
    return e;
  });
}

inline json to_json(const projection_set& s) {
  json blocks = json::array();
  for (const auto& u : s.bases) {
    json columns = json::array();
    for (Eigen::Index c = 0; c < u.cols(); ++c) {
      std::vector<double> column(u.col(c).data(), u.col(c).data() + u.rows());
      columns.push_back(std::move(column));
    }
    blocks.push_back({{"rank", u.cols()}, {"basis", std::move(columns)}});
  }
  return {{"dim", s.dim}, {"alpha", to_string(s.alpha)}, {"blocks", std::move(blocks)}};
}

inline projection_set projection_set_from_json(const json& j) {
  return detail::parsing("projection set", [&] {
    projection_set s;
    s.dim = j.at("dim").get<int>();
    s.alpha = parse_rational(j.at("alpha").get<std::string>());
    for (const auto& b : j.at("blocks")) {
      const int rank = b.at("rank").get<int>();
      const auto columns = b.at("basis").get<std::vector<std::vector<double>>>();
      if (static_cast<int>(columns.size()) != rank)
        throw error(errc::parse_error, "block rank does not match its column count");
      Eigen::MatrixXd u(s.dim, rank);
      for (int c = 0; c < rank; ++c) {
        if (static_cast<int>(columns[static_cast<std::size_t>(c)].size()) != s.dim)
          throw error(errc::parse_error, "basis column length does not match dim");
        for (int r = 0; r < s.dim; ++r) u(r, c) = columns[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
      }
      s.bases.push_back(std::move(u));
    }
    return s;
  });
}

}  // namespace tff
