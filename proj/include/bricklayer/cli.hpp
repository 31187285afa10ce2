#pragma once

#include "bricklayer/io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace bricklayer {

inline constexpr const char* kToolVersion = "bricklayer 0.1.0";

// Exit codes: 0 success / no violations, 1 verified-claim violation,
// 2 usage error, 3 numerical non-convergence.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNoConvergence = 3;

namespace cli_detail {

struct ParsedGraph {
  Adjacency adj;
  std::optional<LabeledGraph> labeled;    // absent for bare stars
  std::optional<std::pair<int, int>> ball;  // (d, r) when spec'd as a ball
  std::string description;
};

/// Mini-language: bricklayer:n[,a]  ball:d,r  star:n  hamming:d,a  file:path
inline ParsedGraph parse_graph_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw std::domain_error("graph spec needs kind:args");
  const std::string kind = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);
  std::vector<std::string> parts;
  std::stringstream ss(rest);
  for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
  auto num = [&](std::size_t i) -> std::uint64_t {
    if (i >= parts.size()) throw std::domain_error("graph spec " + kind + ": missing argument");
    return std::stoull(parts[i]);
  };
  ParsedGraph out;
  out.description = spec;
  if (kind == "bricklayer") {
    const std::uint64_t n = num(0);
    const int a = parts.size() > 1 ? static_cast<int>(num(1)) : 2;
    out.labeled = bricklayer_graph(n, a);
    out.adj = out.labeled->adj;
  } else if (kind == "ball") {
    const int d = static_cast<int>(num(0)), r = static_cast<int>(num(1));
    out.labeled = hamming_ball(d, r);
    out.ball = {d, r};
    out.adj = out.labeled->adj;
  } else if (kind == "star") {
    out.adj = star_graph(static_cast<std::uint32_t>(num(0))).adjacency();
  } else if (kind == "hamming") {
    out.labeled = hamming_graph(static_cast<int>(num(0)), static_cast<int>(num(1)));
    out.adj = out.labeled->adj;
  } else if (kind == "file") {
    std::ifstream in(rest);
    if (!in) throw std::domain_error("cannot open graph file " + rest);
    Json j = Json::parse(in);
    out.labeled = graph_from_json(j);
    out.adj = out.labeled->adj;
  } else {
    throw std::domain_error("unknown graph kind '" + kind + "'");
  }
  return out;
}

struct OutputTarget {
  std::ostream* stream;
  std::unique_ptr<std::ofstream> file;
  bool is_file = false;
};

inline OutputTarget open_output(const std::string& path, std::ostream& fallback) {
  OutputTarget t;
  if (path.empty()) {
    t.stream = &fallback;
    return t;
  }
  std::string full = path;
  if (const char* dir = std::getenv("BRICKLAYER_OUT_DIR");
      dir != nullptr && !path.empty() && path.front() != '/')
    full = std::string(dir) + "/" + path;
  t.file = std::make_unique<std::ofstream>(full);
  if (!*t.file) throw std::domain_error("cannot open output file " + full);
  t.stream = t.file.get();
  t.is_file = true;
  return t;
}

inline std::string command_line(const std::vector<std::string>& args) {
  std::string s = "bricklayer";
  for (const auto& a : args) s += " " + a;
  return s;
}

inline void provenance_comment(std::ostream& out, const std::vector<std::string>& args,
                               std::uint64_t seed) {
  out << "# " << kToolVersion << " | cmd: " << command_line(args) << " | seed: " << seed << "\n";
}

inline void provenance_jsonl(std::ostream& out, const std::vector<std::string>& args,
                             std::uint64_t seed) {
  out << Json{{"provenance",
               {{"tool", kToolVersion}, {"cmd", command_line(args)}, {"seed", seed}}}}
             .dump()
      << "\n";
}

}  // namespace cli_detail

/// Full command-line driver; main() forwards here. Streams are injectable so
/// the suite can run subcommands in-process.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"hypercube-subgraph eigenvalue toolkit"};
  app.require_subcommand(1);
  int threads = 1;
  app.add_option("--threads", threads, "worker pool size for range sweeps");

  // --- figure1 ---
  auto* fig = app.add_subcommand("figure1", "eigenvalue row of the first bricklayer graphs");
  std::uint64_t fig_nmax = 16;
  std::string fig_format = "pretty", fig_output;
  fig->add_option("--n-max", fig_nmax, "largest n");
  fig->add_option("--format", fig_format, "pretty|csv|json")
      ->check(CLI::IsMember({"pretty", "csv", "json"}));
  fig->add_option("--output", fig_output, "write to file instead of stdout");

  // --- verify ---
  auto* ver = app.add_subcommand("verify", "run a verification scope, JSON lines + summary");
  std::string scope;
  std::uint64_t ver_nmax = 0;
  int ver_k = 3, ver_kto = 0, ver_dmin = 5, ver_dmax = 20, ver_a = 3, probe_N = 1;
  double probe_eps = 0.5, ver_tol = 1e-12;
  std::string ver_output;
  ver->add_option("--scope", scope, "theorem|staircase|minus|plus|conjecture|asymptotic")
      ->required()
      ->check(CLI::IsMember({"theorem", "staircase", "minus", "plus", "conjecture", "asymptotic"}));
  ver->add_option("--n-max", ver_nmax, "sweep bound (theorem: 1024, conjecture: a^4)");
  ver->add_option("--k", ver_k, "staircase step to confirm numerically");
  ver->add_option("--k-to", ver_kto, "run the staircase induction from k=3 up to this k");
  ver->add_option("--d-min", ver_dmin, "first d for the bound chains / probe");
  ver->add_option("--d-max", ver_dmax, "last d for the bound chains / probe");
  ver->add_option("--a", ver_a, "alphabet size for the conjecture scope");
  ver->add_option("--N", probe_N, "offset in log2(2^d - N) for the asymptotic probe");
  ver->add_option("--eps", probe_eps, "offset in log2(2^d + eps) for the asymptotic probe");
  ver->add_option("--tol", ver_tol, "eigensolver tolerance");
  ver->add_option("--output", ver_output, "write to file instead of stdout");

  // --- search ---
  auto* sea = app.add_subcommand("search", "maximal-eigenvalue induced subgraphs");
  int sea_d = 3, sea_dmax = 25;
  std::uint64_t sea_n = 4, sea_samples = 10000, sea_seed = 0;
  std::string sea_mode = "exhaustive", sea_output;
  sea->add_option("--d", sea_d, "hypercube dimension");
  sea->add_option("--n", sea_n, "subgraph vertex count");
  sea->add_option("--mode", sea_mode, "exhaustive|sample|star-table")
      ->check(CLI::IsMember({"exhaustive", "sample", "star-table"}));
  sea->add_option("--samples", sea_samples, "sample count for mode=sample");
  sea->add_option("--seed", sea_seed, "RNG seed for mode=sample");
  sea->add_option("--d-max", sea_dmax, "last d for mode=star-table");
  sea->add_option("--output", sea_output, "write to file instead of stdout");

  // --- simulate ---
  auto* sim = app.add_subcommand("simulate", "mutation-selection dynamics trajectory (CSV)");
  std::string sim_graph = "bricklayer:3", sim_output;
  double sim_mu = 0.01, sim_fitness = 1.0;
  long sim_t = 10000;
  sim->add_option("--graph", sim_graph, "graph spec (bricklayer:n[,a] ball:d,r hamming:d,a file:path)");
  sim->add_option("--mu", sim_mu, "per-letter mutation rate");
  sim->add_option("--fitness", sim_fitness, "raw reproductive rate");
  sim->add_option("--generations", sim_t, "generations to simulate");
  sim->add_option("--output", sim_output, "write to file instead of stdout");

  // --- poly ---
  auto* pol = app.add_subcommand("poly", "exact polynomial families");
  std::string pol_family, pol_format = "json", pol_output;
  int pol_d = 3, pol_r = 1, pol_k = 3;
  pol->add_option("--family", pol_family, "ball|f|power|minus|plus")
      ->required()
      ->check(CLI::IsMember({"ball", "f", "power", "minus", "plus"}));
  pol->add_option("--d", pol_d, "dimension parameter");
  pol->add_option("--r", pol_r, "ball radius (family=ball)");
  pol->add_option("--k", pol_k, "recursion depth (family=f)");
  pol->add_option("--format", pol_format, "json|pretty")->check(CLI::IsMember({"json", "pretty"}));
  pol->add_option("--output", pol_output, "write to file instead of stdout");

  // --- eig ---
  auto* eig = app.add_subcommand("eig", "principal eigenvalue of a graph");
  std::string eig_graph, eig_method = "auto", eig_output;
  double eig_tol = 1e-12;
  long eig_maxit = 1000000;
  bool eig_vec = false;
  eig->add_option("--graph", eig_graph, "graph spec")->required();
  eig->add_option("--method", eig_method, "auto|power|lanczos|reduced|charpoly")
      ->check(CLI::IsMember({"auto", "power", "lanczos", "reduced", "charpoly"}));
  eig->add_option("--tol", eig_tol, "residual tolerance");
  eig->add_option("--max-iter", eig_maxit, "power iteration cap");
  eig->add_flag("--eigenvector", eig_vec, "emit the eigenvector too");
  eig->add_option("--output", eig_output, "write to file instead of stdout");

  try {
    std::vector<const char*> argv{"bricklayer"};
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (fig->parsed()) {
      auto target = cli_detail::open_output(fig_output, out);
      std::ostream& os = *target.stream;
      if (target.is_file && fig_format != "json") cli_detail::provenance_comment(os, args, 0);
      if (target.is_file && fig_format == "json") cli_detail::provenance_jsonl(os, args, 0);
      if (fig_format == "pretty") {
        os << "   n      lambda_n       log2(n)        margin\n";
        for (std::uint64_t n = 1; n <= fig_nmax; ++n) {
          const double lam = detail::bricklayer_lambda(n).value;
          const double l2 = std::log2(static_cast<double>(n));
          os << std::setw(4) << n << "  " << std::setw(12) << std::setprecision(8) << std::fixed
             << lam << "  " << std::setw(12) << l2 << "  " << std::setw(12) << (l2 - lam)
             << "\n";
          os.unsetf(std::ios::fixed);
        }
      } else {
        if (fig_format == "csv") os << "n,lambda,log2n,margin\n";
        for (std::uint64_t n = 1; n <= fig_nmax; ++n) {
          const double lam = detail::bricklayer_lambda(n).value;
          const double l2 = std::log2(static_cast<double>(n));
          if (fig_format == "csv")
            os << n << ',' << Json(lam).dump() << ',' << Json(l2).dump() << ','
               << Json(l2 - lam).dump() << "\n";
          else
            os << Json{{"n", n}, {"lambda", lam}, {"log2n", l2}, {"margin", l2 - lam}}.dump()
               << "\n";
        }
      }
      return kExitOk;
    }

    if (ver->parsed()) {
      auto target = cli_detail::open_output(ver_output, out);
      std::ostream& os = *target.stream;
      if (target.is_file) cli_detail::provenance_jsonl(os, args, 0);
      bool violation = false;
      if (scope == "theorem") {
        const auto reports = check_theorem(ver_nmax == 0 ? 1024 : ver_nmax, threads, ver_tol);
        for (const auto& r : reports) os << to_json(r).dump() << "\n";
        const auto s = summarize(reports);
        os << to_json(s).dump() << "\n";
        violation = s.violated > 0;
      } else if (scope == "staircase") {
        if (ver_kto >= 3) {
          const auto ind = staircase_induction(3, ver_kto);
          os << to_json(ind).dump() << "\n";
          violation = ind.certified_up_to < (std::uint64_t(1) << (ver_kto + 2));
        } else {
          const auto rep = check_staircase(ver_k, threads);
          os << to_json(rep).dump() << "\n";
          violation = !(rep.condition_holds && rep.doubled_holds && rep.expansion_holds &&
                        rep.condition_next_holds);
        }
      } else if (scope == "minus" || scope == "plus") {
        for (int d = ver_dmin; d <= ver_dmax; ++d) {
          const ChainReport rep = scope == "minus" ? check_minus_chain(d) : check_plus_chain(d);
          os << to_json(rep).dump() << "\n";
          violation = violation || !rep.conclusion_holds;
        }
      } else if (scope == "conjecture") {
        const std::uint64_t nmax =
            ver_nmax == 0 ? static_cast<std::uint64_t>(std::pow(ver_a, 4)) : ver_nmax;
        const auto reports = check_conjecture(ver_a, nmax, threads, ver_tol);
        for (const auto& r : reports) {
          os << to_json(r).dump() << "\n";
          if (r.verdict == Verdict::violated && r.witness) {
            const bool confirmed = conjecture_violation_confirmed(*r.witness, ver_a);
            const std::string name = "counterexample_a" + std::to_string(ver_a) + "_n" +
                                     std::to_string(r.index) + ".json";
            auto artifact = cli_detail::open_output(name, err);
            *artifact.stream << Json{{"report", to_json(r)},
                                     {"char_poly_confirmed", confirmed}}
                                    .dump(2)
                             << "\n";
            err << "conjecture violation candidate written to " << name
                << " (char-poly confirmed: " << (confirmed ? "yes" : "no") << ")\n";
          }
        }
        os << to_json(summarize(reports)).dump() << "\n";
        // A conjecture violation is a finding, not a failure: exit 0 regardless.
      } else if (scope == "asymptotic") {
        const auto rep = asymptotic_probe(probe_N, probe_eps, ver_dmin, ver_dmax);
        for (const auto& row : rep.rows) os << to_json(row).dump() << "\n";
        Json summary{{"minus_monotone", rep.minus_monotone}, {"plus_monotone", rep.plus_monotone}};
        if (rep.least_d_minus) summary["least_d_minus"] = *rep.least_d_minus;
        if (rep.least_d_plus) summary["least_d_plus"] = *rep.least_d_plus;
        os << summary.dump() << "\n";
      }
      return violation ? kExitViolation : kExitOk;
    }

    if (sea->parsed()) {
      auto target = cli_detail::open_output(sea_output, out);
      std::ostream& os = *target.stream;
      if (target.is_file) cli_detail::provenance_jsonl(os, args, sea_seed);
      if (sea_mode == "exhaustive") {
        os << to_json(exhaustive_max_eig(sea_d, sea_n)).dump() << "\n";
      } else if (sea_mode == "sample") {
        os << to_json(sample_max_eig(sea_d, sea_n, sea_samples, sea_seed)).dump() << "\n";
      } else {
        for (const auto& row : star_vs_bricklayer_table(sea_dmax))
          os << to_json(row).dump() << "\n";
      }
      return kExitOk;
    }

    if (sim->parsed()) {
      const auto pg = cli_detail::parse_graph_spec(sim_graph);
      if (!pg.labeled)
        throw std::domain_error("simulate needs a Hamming-embedded graph (not a bare star)");
      auto target = cli_detail::open_output(sim_output, out);
      std::ostream& os = *target.stream;
      if (target.is_file) cli_detail::provenance_comment(os, args, 0);
      const auto result = evolve(*pg.labeled, MutationParams{sim_mu, sim_fitness},
                                 uniform_state(*pg.labeled), sim_t);
      write_trajectory_csv(os, result.trajectory);
      return kExitOk;
    }

    if (pol->parsed()) {
      auto target = cli_detail::open_output(pol_output, out);
      std::ostream& os = *target.stream;
      Json j;
      std::string pretty;
      if (pol_family == "ball") {
        const Polynomial p = ball_poly(pol_d, pol_r);
        j = to_json(p);
        pretty = p.str("L");
      } else if (pol_family == "f") {
        const BivariatePoly f = f_poly(pol_k);
        j = to_json(f);
        pretty = "f_" + std::to_string(pol_k) + "(d, L)";
      } else {
        const Polynomial p = pol_family == "power"   ? P_power(pol_d)
                             : pol_family == "minus" ? P_minus(pol_d)
                                                     : P_plus(pol_d);
        j = to_json(p);
        pretty = p.str("L");
      }
      if (pol_format == "pretty")
        os << pretty << "\n";
      else
        os << j.dump() << "\n";
      return kExitOk;
    }

    if (eig->parsed()) {
      const auto pg = cli_detail::parse_graph_spec(eig_graph);
      auto target = cli_detail::open_output(eig_output, out);
      std::ostream& os = *target.stream;
      SpectralResult result;
      if (eig_method == "power") {
        result = principal_eigenvalue_power(pg.adj, eig_tol, eig_maxit);
      } else if (eig_method == "lanczos") {
        result = principal_eigenvalue_lanczos(pg.adj, std::max(eig_tol, 1e-11));
      } else if (eig_method == "reduced") {
        if (!pg.ball) throw std::domain_error("--method reduced needs a ball:d,r graph spec");
        auto ball = ball_eigenvalue_reduced(pg.ball->first, pg.ball->second, eig_tol);
        result = ball.spectral;
        if (eig_vec) {
          result.eigenvector = lift_distance_profile(pg.ball->first, pg.ball->second, ball.profile);
        }
      } else if (eig_method == "charpoly") {
        if (!pg.labeled) throw std::domain_error("--method charpoly needs a labeled graph");
        result.lambda = char_poly_largest_root(*pg.labeled);
        result.method = EigMethod::char_poly;
        result.residual = 1e-13;
        result.eigenvector.clear();
      } else {
        result = principal_eigenvalue_auto(pg.adj, eig_tol);
      }
      os << to_json(result, eig_vec && eig_method != "charpoly").dump() << "\n";
      return kExitOk;
    }
  } catch (const ConvergenceError& e) {
    err << "did not converge: " << e.what() << " (last lambda " << e.last_iterate.lambda
        << ", residual " << e.last_iterate.residual << ")\n";
    return kExitNoConvergence;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace bricklayer
