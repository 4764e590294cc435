#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "tff/cli.hpp"
#include "tff/config_matrix.hpp"
#include "tff/dualities.hpp"
#include "tff/io.hpp"
#include "tff/partition.hpp"
#include "tff/rational.hpp"
#include "tff/realize.hpp"
#include "tff/search.hpp"
#include "tff/tff.hpp"

namespace tff::cli {

namespace detail {

inline std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw error(errc::parse_error, "not an integer list: '" + text + "'");
    }
    if (used != item.size()) throw error(errc::parse_error, "not an integer list: '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw error(errc::parse_error, "empty rank list");
  return out;
}

inline partition parse_ranks(const std::string& text, std::ostream& err) {
  auto v = parse_int_list(text);
  if (!std::ranges::is_sorted(v, std::greater<>())) {
    err << "warning: ranks " << text << " are not weakly decreasing; sorting\n";
    std::ranges::sort(v, std::greater<>());
  }
  if (std::ranges::any_of(v, [](int x) { return x <= 0; }))
    throw error(errc::invalid_ranks, "ranks must be positive");
  return partition(v);
}

/// "3/2:1,1/2:1" → {3/2 ↦ 1, 1/2 ↦ 1}.
inline multiplicity_fn parse_multiplicity(const std::string& text) {
  multiplicity_fn m;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos) throw error(errc::parse_error, "expected value:multiplicity, got '" + item + "'");
    const rational value = parse_rational(item.substr(0, colon));
    const auto mult = parse_int_list(item.substr(colon + 1));
    if (mult.size() != 1) throw error(errc::parse_error, "bad multiplicity in '" + item + "'");
    m[value] += mult.front();
  }
  return m;
}

inline json read_json(const std::string& path) {
  try {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw error(errc::parse_error, "cannot open " + path);
    return json::parse(in);
  } catch (const json::exception& e) {
    throw error(errc::parse_error, path + ": " + e.what());
  }
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw error(errc::parse_error, "cannot write " + path);
  out << text;
}

inline std::string format_rows(const config_matrix& a) {
  std::ostringstream out;
  for (const auto& row : a.rows()) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << '\n';
  }
  return out.str();
}

inline std::string alpha_label(const partition& ranks, int dim) { return to_string(rational(ranks.size(), dim)); }

/// Worker count for independent jobs: hardware concurrency, capped by
/// TFF_THREADS when set to a positive integer.
inline unsigned thread_budget() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("TFF_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap > 0) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  return n;
}

/// Maximal elements of every cell (α, N) with 1 ≤ α ≤ 2 and N ≤ max_dim,
/// ordered by N then α. Cells are computed on up to thread_budget() threads.
inline std::vector<tff_enumeration> all_cells(int max_dim) {
  std::vector<std::pair<int, int>> cells;
  for (int n = 1; n <= max_dim; ++n)
    for (int m = n; m <= 2 * n; ++m) cells.emplace_back(m, n);
  std::vector<tff_enumeration> out(cells.size());
  auto work = [&](std::size_t i) {
    const auto [m, n] = cells[i];
    const rational alpha(m, n);
    out[i] = tff_enumeration{alpha, n, {}, maximal_elements(alpha, n)};
  };
  const unsigned workers = std::min<unsigned>(thread_budget(), static_cast<unsigned>(cells.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) work(i);
    return out;
  }
  // Largest cells sit at the end; hand them out first.
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> failures(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i; (i = next++) < cells.size();) work(cells.size() - 1 - i);
      } catch (...) {
        failures[w] = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  for (auto& f : failures)
    if (f) std::rethrow_exception(f);
  return out;
}

}  // namespace detail

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tight fusion frame sequences: decision, certificates, dualities and realization", "tff"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output")->configurable(false);

  int dim = 0, upto = -1, max_dim = 9, max_restarts = 20, p = 0, q = 0;
  std::string ranks_text, alpha_text, input, output, csv_path, mult_text;
  std::uint64_t seed = 0;
  double tol = 1e-8;
  bool all = false, spatial = false, naimark = false, reduce = false, strip = false;

  auto add_instance = [&](CLI::App* sub) {
    sub->add_option("--dim,-n", dim, "ambient dimension N")->required()->check(CLI::PositiveNumber);
    sub->add_option("--ranks,-r", ranks_text, "comma-separated ranks, e.g. 4,2,2,2,1")->required();
  };

  auto* decide_cmd = app.add_subcommand("decide", "decide membership and print a certificate");
  add_instance(decide_cmd);
  auto* count_cmd = app.add_subcommand("count", "count certificates (an LR coefficient)");
  add_instance(count_cmd);
  auto* cert_cmd = app.add_subcommand("certificate", "emit a certificate");
  add_instance(cert_cmd);

  auto* tableau_cmd = app.add_subcommand("tableau", "render the tableaux of a certificate");
  tableau_cmd->add_option("--dim,-n", dim, "ambient dimension N")->check(CLI::PositiveNumber);
  tableau_cmd->add_option("--ranks,-r", ranks_text, "comma-separated ranks; searches for a certificate");
  auto* tableau_in = tableau_cmd->add_option("--input,-i", input, "certificate JSON ('-' for stdin)");
  tableau_cmd->add_option("--upto", upto, "render only the first k blocks");
  tableau_in->excludes(tableau_cmd->get_option("--ranks"));

  auto* maximal_cmd = app.add_subcommand("maximal", "maximal sequences of TFF(alpha, N)");
  auto* max_alpha = maximal_cmd->add_option("--alpha,-a", alpha_text, "frame bound p/q");
  auto* max_dim_opt = maximal_cmd->add_option("--dim,-n", dim, "ambient dimension N")->check(CLI::PositiveNumber);
  auto* max_all = maximal_cmd->add_flag("--all", all, "every cell 1 <= alpha <= 2, N <= --max-dim");
  maximal_cmd->add_option("--max-dim", max_dim, "largest N for --all (default 9)")->check(CLI::PositiveNumber)->needs(max_all);
  max_all->excludes(max_alpha)->excludes(max_dim_opt);
  max_alpha->needs(max_dim_opt);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "every sequence in TFF(alpha, N)");
  enumerate_cmd->add_option("--alpha,-a", alpha_text, "frame bound p/q")->required();
  enumerate_cmd->add_option("--dim,-n", dim, "ambient dimension N")->required()->check(CLI::PositiveNumber);

  auto* dual_cmd = app.add_subcommand("dual", "sequence-level dualities");
  dual_cmd->add_option("--dim,-n", dim, "ambient dimension N")->required()->check(CLI::PositiveNumber);
  dual_cmd->add_option("--ranks,-r", ranks_text, "comma-separated ranks");
  dual_cmd->add_option("--alpha,-a", alpha_text, "frame bound p/q (--alpha-reduce)");
  auto* d_sp = dual_cmd->add_flag("--spatial", spatial, "complement every subspace");
  auto* d_na = dual_cmd->add_flag("--naimark", naimark, "same ranks in dimension M - N");
  auto* d_re = dual_cmd->add_flag("--alpha-reduce", reduce, "equivalent bound alpha/(alpha-1) in dimension N(alpha-1)");
  auto* d_st = dual_cmd->add_flag("--strip", strip, "drop a leading rank N(alpha - 1)");
  for (auto* a : {d_sp, d_na, d_re, d_st})
    for (auto* b : {d_sp, d_na, d_re, d_st})
      if (a != b) a->excludes(b);

  auto* dual_cfg_cmd = app.add_subcommand("dual-config", "dual of a certificate");
  dual_cfg_cmd->add_option("--input,-i", input, "certificate JSON ('-' for stdin)")->required();
  auto* c_sp = dual_cfg_cmd->add_flag("--spatial", spatial, "spatial dual certificate");
  auto* c_na = dual_cfg_cmd->add_flag("--naimark", naimark, "Naimark dual certificate");
  c_sp->excludes(c_na);
  c_na->excludes(c_sp);

  auto* realize_cmd = app.add_subcommand("realize", "numerically construct projections");
  add_instance(realize_cmd);
  realize_cmd->add_option("--seed", seed, "random seed")->required();
  realize_cmd->add_option("--tol", tol, "residual tolerance (default 1e-8)")->check(CLI::PositiveNumber);
  realize_cmd->add_option("--max-restarts", max_restarts, "restarts before giving up (default 20)")->check(CLI::NonNegativeNumber);
  realize_cmd->add_option("--csv", csv_path, "also write the concatenated basis as CSV");
  realize_cmd->add_option("--output,-o", output, "write the projection set JSON here");

  auto* verify_cmd = app.add_subcommand("verify", "check a projection set");
  verify_cmd->add_option("--input,-i", input, "projection set JSON ('-' for stdin)")->required();
  verify_cmd->add_option("--tol", tol, "tolerance (default 1e-8)")->check(CLI::NonNegativeNumber);

  auto* bounds_cmd = app.add_subcommand("check-bounds", "first-three-ranks and k-block filters");
  add_instance(bounds_cmd);

  auto* two_cmd = app.add_subcommand("two-proj", "construct P, Q with a prescribed spectrum of P + Q");
  two_cmd->add_option("-p", p, "rank of P")->required()->check(CLI::NonNegativeNumber);
  two_cmd->add_option("-q", q, "rank of Q")->required()->check(CLI::NonNegativeNumber);
  two_cmd->add_option("--dim,-n", dim, "ambient dimension N")->required()->check(CLI::PositiveNumber);
  two_cmd->add_option("--mult,-m", mult_text, "eigenvalue:multiplicity list, e.g. 3/2:1,1/2:1")->required();

  for (auto* sub : app.get_subcommands({}))
    sub->add_flag("--json", as_json, "machine-readable output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return usage;
  }

  auto usage_error = [&](const std::string& msg) {
    err << "error: " << msg << '\n';
    return static_cast<int>(usage);
  };

  try {
    if (decide_cmd->parsed()) {
      const auto ranks = detail::parse_ranks(ranks_text, err);
      const auto d = decide(ranks, dim, true);
      if (as_json) {
        json j{{"ranks", to_json(ranks)}, {"dim", dim}, {"alpha", detail::alpha_label(ranks, dim)}, {"tff", d.is_tff}};
        if (d.certificate) j["certificate"] = to_json(*d.certificate);
        out << j.dump() << '\n';
      } else {
        out << to_string(ranks) << " in TFF(" << detail::alpha_label(ranks, dim) << ", " << dim
            << "): " << (d.is_tff ? "yes" : "no") << '\n';
        if (d.certificate) out << "certificate (" << dim << "x" << ranks.size() << "):\n" << detail::format_rows(*d.certificate);
      }
      return d.is_tff ? success : negative;
    }

    if (count_cmd->parsed()) {
      const auto ranks = detail::parse_ranks(ranks_text, err);
      tff_instance::make(ranks, dim);
      const auto c = count_configs(ranks, dim);
      if (as_json)
        out << json{{"ranks", to_json(ranks)}, {"dim", dim}, {"count", c}}.dump() << '\n';
      else
        out << c << '\n';
      return c > 0 ? success : negative;
    }

    if (cert_cmd->parsed()) {
      const auto ranks = detail::parse_ranks(ranks_text, err);
      const auto d = decide(ranks, dim, true);
      if (!d.certificate) {
        if (as_json) out << json{{"ranks", to_json(ranks)}, {"dim", dim}, {"certificate", nullptr}}.dump() << '\n';
        else out << "no certificate\n";
        return negative;
      }
      if (as_json) out << to_json(*d.certificate).dump() << '\n';
      else out << detail::format_rows(*d.certificate);
      return success;
    }

    if (tableau_cmd->parsed()) {
      std::optional<config_matrix> a;
      if (!input.empty()) {
        a = config_from_json(detail::read_json(input));
      } else {
        if (ranks_text.empty() || dim <= 0) return usage_error("tableau needs --input or --dim with --ranks");
        a = decide(detail::parse_ranks(ranks_text, err), dim, true).certificate;
        if (!a) {
          out << "no certificate\n";
          return negative;
        }
      }
      require_valid(*a);
      if (upto > a->blocks()) return usage_error("--upto exceeds the number of blocks");
      const std::string grid = render_tableaux(*a, upto);
      if (as_json) out << json{{"tableau", grid}}.dump() << '\n';
      else out << grid;
      return success;
    }

    if (maximal_cmd->parsed()) {
      if (all) {
        const auto cells = detail::all_cells(max_dim);
        if (as_json) {
          json tables = json::array();
          for (const auto& c : cells) tables.push_back(to_json(c));
          out << json{{"tables", std::move(tables)}}.dump() << '\n';
        } else {
          for (const auto& c : cells) {
            out << "N=" << c.dim << " alpha=" << to_string(c.alpha) << ":";
            for (const auto& mx : c.maximal) out << ' ' << to_string(mx);
            out << '\n';
          }
        }
        return success;
      }
      if (alpha_text.empty()) return usage_error("maximal needs --alpha with --dim, or --all");
      const rational alpha = parse_rational(alpha_text);
      const auto mx = maximal_elements(alpha, dim);
      if (as_json) {
        out << to_json(alpha, dim, mx).dump() << '\n';
      } else {
        for (const auto& p_ : mx) out << to_string(p_) << '\n';
      }
      return success;
    }

    if (enumerate_cmd->parsed()) {
      const rational alpha = parse_rational(alpha_text);
      const auto e = enumerate_tff_full(alpha, dim);
      if (as_json) {
        json j = to_json(e);
        json members = json::array();
        for (const auto& m : e.members) members.push_back(to_json(m));
        j["members"] = std::move(members);
        out << j.dump() << '\n';
      } else {
        for (const auto& m : e.members) out << to_string(m) << '\n';
      }
      return e.members.empty() ? negative : success;
    }

    if (dual_cmd->parsed()) {
      if (!(spatial || naimark || reduce || strip))
        return usage_error("dual needs one of --spatial, --naimark, --alpha-reduce, --strip");
      if (reduce) {
        if (alpha_text.empty()) return usage_error("--alpha-reduce needs --alpha");
        const auto r = alpha_reduce(parse_rational(alpha_text), dim);
        if (as_json) out << json{{"alpha", to_string(r.alpha)}, {"dim", r.dim}}.dump() << '\n';
        else out << "TFF(" << alpha_text << ", " << dim << ") = TFF(" << to_string(r.alpha) << ", " << r.dim << ")\n";
        return success;
      }
      if (ranks_text.empty()) return usage_error("dual needs --ranks");
      const auto ranks = detail::parse_ranks(ranks_text, err);
      const dual_instance d = spatial ? spatial_dual(ranks, dim) : naimark ? naimark_dual(ranks, dim) : recur_strip(ranks, dim);
      if (as_json) {
        out << json{{"ranks", to_json(d.ranks)}, {"dim", d.dim}, {"alpha", to_string(d.alpha)},
                    {"dropped_zero_parts", d.dropped_zero_parts}}.dump()
            << '\n';
      } else {
        out << to_string(d.ranks) << " in dimension " << d.dim << ", alpha " << to_string(d.alpha);
        if (d.dropped_zero_parts) out << " (zero parts dropped)";
        out << '\n';
      }
      return success;
    }

    if (dual_cfg_cmd->parsed()) {
      if (!(spatial || naimark)) return usage_error("dual-config needs --spatial or --naimark");
      const auto a = config_from_json(detail::read_json(input));
      const auto b = spatial ? config_spatial_dual(a) : config_naimark_dual(a);
      if (as_json) out << to_json(b, spatial ? dual_kind::spatial : dual_kind::naimark, a.ranks()).dump() << '\n';
      else out << detail::format_rows(b);
      return success;
    }

    if (realize_cmd->parsed()) {
      const auto ranks = detail::parse_ranks(ranks_text, err);
      realize_options opt;
      opt.seed = seed;
      opt.tol = tol;
      opt.max_restarts = max_restarts;
      const auto s = realize_tff(ranks, dim, opt);
      const auto report = verify_tff(s, s.alpha, tol);
      if (!csv_path.empty()) detail::write_text(csv_path, to_csv(s));
      const std::string doc = to_json(s).dump() + "\n";
      if (!output.empty()) detail::write_text(output, doc);
      if (as_json || output.empty()) out << doc;
      if (!as_json) err << "residual " << report.sum_residual << '\n';
      return success;
    }

    if (verify_cmd->parsed()) {
      const auto s = projection_set_from_json(detail::read_json(input));
      const auto r = verify_tff(s, s.alpha, tol);
      if (as_json) {
        out << json{{"pass", r.pass}, {"sum_residual", r.sum_residual}, {"orthonormality", r.orthonormality},
                    {"idempotence", r.idempotence}, {"ranks", r.numerical_ranks}, {"expected_ranks", r.expected_ranks}}
                   .dump()
            << '\n';
      } else {
        out << (r.pass ? "pass" : "fail") << ": sum residual " << r.sum_residual << '\n';
        for (std::size_t k = 0; k < r.orthonormality.size(); ++k)
          out << "  block " << k + 1 << ": rank " << r.numerical_ranks[k] << "/" << r.expected_ranks[k]
              << ", orthonormality " << r.orthonormality[k] << ", idempotence " << r.idempotence[k] << '\n';
      }
      return r.pass ? success : negative;
    }

    if (bounds_cmd->parsed()) {
      const auto ranks = detail::parse_ranks(ranks_text, err);
      const auto inst = tff_instance::make(ranks, dim);
      std::optional<bool> first3;
      if (inst.alpha > 1 && inst.alpha < 2) first3 = first3_check(ranks[0], ranks[1], ranks[2], inst.alpha, dim);
      const bool kb = k_block_bound(ranks, dim, inst.alpha);
      const bool ok = first3.value_or(true) && kb;
      if (as_json) {
        json j{{"ranks", to_json(ranks)}, {"dim", dim}, {"alpha", to_string(inst.alpha)}, {"k_block", kb}};
        j["first3"] = first3 ? json(*first3) : json(nullptr);
        out << j.dump() << '\n';
      } else {
        out << "first three ranks: " << (first3 ? (*first3 ? "pass" : "fail") : "n/a (alpha outside (1,2))") << '\n'
            << "k-block bound: " << (kb ? "pass" : "fail") << '\n';
      }
      return ok ? success : negative;
    }

    if (two_cmd->parsed()) {
      const auto m = detail::parse_multiplicity(mult_text);
      if (!validate_multiplicity(p, q, dim, m)) {
        if (as_json) out << json{{"valid", false}}.dump() << '\n';
        else out << "invalid multiplicity function\n";
        return negative;
      }
      const auto [pm, qm] = two_projection_sum(p, q, dim, m);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(pm + qm, Eigen::EigenvaluesOnly);
      std::vector<double> spectrum(eig.eigenvalues().data(), eig.eigenvalues().data() + dim);
      std::ranges::sort(spectrum, std::greater<>());
      auto rows = [](const Eigen::MatrixXd& x) {
        std::vector<std::vector<double>> r(static_cast<std::size_t>(x.rows()));
        for (Eigen::Index i = 0; i < x.rows(); ++i)
          for (Eigen::Index j = 0; j < x.cols(); ++j) r[static_cast<std::size_t>(i)].push_back(x(i, j));
        return r;
      };
      if (as_json) {
        out << json{{"valid", true}, {"P", rows(pm)}, {"Q", rows(qm)}, {"spectrum", spectrum}}.dump() << '\n';
      } else {
        out << "spectrum of P+Q:";
        for (double v : spectrum) out << ' ' << v;
        out << '\n';
      }
      return success;
    }
  } catch (const convergence_error& e) {
    err << "error: " << e.what() << '\n';
    return internal;
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == errc::convergence_failure ? internal : usage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return internal;
  }
  return usage_error("no subcommand");
}

}  // namespace tff::cli
