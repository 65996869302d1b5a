// nilcone-lab command line: classify | invariants | cone | springer | sweep | all

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nilab/nilcone.hpp"
#include "nilab/runners.hpp"
#include "nilab/springer.hpp"
#include "nilab/sweep.hpp"

namespace {

using namespace nilab;

struct GlobalOpts {
  std::string config_path;
  std::string out_path;
  std::string format = "md";
  std::optional<uint32_t> threads;
  std::optional<uint64_t> seed;
  std::optional<uint64_t> sample;
};

RunConfig resolve_config(const GlobalOpts& g) {
  RunConfig cfg;
  if (!g.config_path.empty()) cfg = load_config(g.config_path);
  if (g.threads) cfg.threads = *g.threads;
  if (g.seed) cfg.seed = *g.seed;
  if (g.sample) cfg.sample_size = *g.sample;
  cfg.validate();
  return cfg;
}

std::vector<std::pair<LieType, uint32_t>> parse_systems(const std::string& type_arg,
                                                        std::optional<uint32_t> rank) {
  if (type_arg.empty()) throw CLI::ValidationError("--type", "type is required");
  LieType t = lie_type_from_char(type_arg[0]);
  if (type_arg.size() > 1) {
    uint32_t r = static_cast<uint32_t>(std::stoul(type_arg.substr(1)));
    return {{t, r}};
  }
  if (rank) return {{t, *rank}};
  // default rank ranges per type
  std::vector<std::pair<LieType, uint32_t>> out;
  switch (t) {
    case LieType::A: for (uint32_t r = 1; r <= 4; ++r) out.push_back({t, r}); break;
    case LieType::B:
    case LieType::C: for (uint32_t r = 2; r <= 4; ++r) out.push_back({t, r}); break;
    case LieType::D: for (uint32_t r = 3; r <= 5; ++r) out.push_back({t, r}); break;
    case LieType::E: for (uint32_t r = 6; r <= 8; ++r) out.push_back({t, r}); break;
    case LieType::F: out.push_back({t, 4}); break;
    case LieType::G: out.push_back({t, 2}); break;
  }
  return out;
}

int emit_report(Report& report, const GlobalOpts& g, const std::string& extra_markdown = "",
                const std::string& extra_csv = "") {
  if (g.format == "json") {
    std::cout << report.to_json().dump(2) << "\n";
  } else if (g.format == "csv") {
    if (extra_csv.empty())
      std::cout << "(csv output is only available for sweep row tables)\n" << report.to_markdown();
    else
      std::cout << extra_csv;
  } else {
    if (!extra_markdown.empty()) std::cout << extra_markdown << "\n";
    std::cout << report.to_markdown();
  }
  if (!g.out_path.empty()) {
    std::ofstream out(g.out_path);
    if (!out) {
      std::cerr << "cannot write report to " << g.out_path << "\n";
      return 1;
    }
    out << report.to_json().dump(2) << "\n";
  }
  return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nilcone-lab: computational checks for modular invariant rings, nilpotent cones "
               "of pgl_n over small finite fields, springer fibers, and centralizer bounds"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_option("--config", g.config_path, "configuration file (key = value lines)");
  app.add_option("--out", g.out_path, "write the JSON report to this file");
  app.add_option("--format", g.format, "stdout format: md, json or csv")
      ->check(CLI::IsMember({"md", "json", "csv"}));
  uint32_t threads_opt = 0;
  uint64_t seed_opt = 0, sample_opt = 0;
  auto* to = app.add_option("--threads", threads_opt, "worker thread budget");
  auto* so = app.add_option("--seed", seed_opt, "seed for sampled modes");
  auto* po = app.add_option("--sample", sample_opt, "sample size (0 = exhaustive)");

  // classify
  auto* classify = app.add_subcommand("classify", "prime classification table for a type");
  classify->fallthrough();
  std::string cl_type;
  std::optional<uint32_t> cl_rank;
  std::vector<uint32_t> cl_primes{2, 3, 5, 7, 11, 13};
  classify->add_option("--type", cl_type, "Lie type, e.g. G2, A3 or a bare letter")->required();
  classify->add_option("--rank", cl_rank, "rank when --type is a bare letter");
  classify->add_option("--primes", cl_primes, "primes to classify")->delimiter(',');

  // invariants
  auto* inv = app.add_subcommand("invariants", "invariant-ring certificate for a family");
  inv->fallthrough();
  std::string inv_family;
  uint32_t inv_n = 3, inv_p = 3, inv_maxdeg = 12;
  inv->add_option("--family", inv_family, "sn-quotient or g2-weyl")
      ->required()
      ->check(CLI::IsMember({"sn-quotient", "g2-weyl"}));
  inv->add_option("--n", inv_n, "symmetric group degree (sn-quotient)");
  inv->add_option("--p", inv_p, "prime")->required();
  inv->add_option("--max-degree", inv_maxdeg, "degree cap for the generator search");

  // cone
  auto* cone = app.add_subcommand("cone", "nilpotent cone checks for pgl_n over F_q");
  cone->fallthrough();
  uint32_t cn_n = 3, cn_p = 3, cn_k = 1;
  std::vector<std::string> cn_checks;
  cone->add_option("--n", cn_n, "matrix size n")->required();
  cone->add_option("--p", cn_p, "prime")->required();
  cone->add_option("--k", cn_k, "field extension degree");
  cone->add_option("--checks", cn_checks,
                   "subset of count,orbits,smooth-regular,codim,kw,steinberg")
      ->delimiter(',');

  // springer
  auto* springer = app.add_subcommand("springer", "springer fiber checks for pgl_n over F_q");
  springer->fallthrough();
  uint32_t sp_n = 3, sp_p = 3, sp_k = 1;
  std::vector<uint32_t> sp_partition;
  bool sp_two_q = false;
  springer->add_option("--n", sp_n, "matrix size n")->required();
  springer->add_option("--p", sp_p, "prime")->required();
  springer->add_option("--k", sp_k, "field extension degree");
  springer->add_option("--partition", sp_partition, "restrict to one Jordan type")->delimiter(',');
  springer->add_flag("--two-q", sp_two_q, "also count fibers over F_{q^2} when feasible");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "centralizer-bound inequality sweep");
  sweep->fallthrough();
  std::vector<std::string> sw_types{"B", "C", "D"};
  uint32_t sw_maxrank = 25;
  bool sw_exact_a = false;
  sweep->add_option("--types", sw_types, "subset of A,B,C,D")->delimiter(',');
  sweep->add_option("--max-rank", sw_maxrank, "largest rank to sweep");
  sweep->add_flag("--exact-a", sw_exact_a, "exact centralizer dimension in type A");

  auto* all = app.add_subcommand("all", "full default battery");
  all->fallthrough();
  (void)all;

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (to->count()) g.threads = threads_opt;
  if (so->count()) g.seed = seed_opt;
  if (po->count()) g.sample = sample_opt;

  try {
    RunConfig cfg = resolve_config(g);
    Report report;
    report.toolkit_version = kToolkitVersion;
    report.seed = cfg.seed;
    auto t0 = std::chrono::steady_clock::now();
    std::string extra_md, extra_csv;

    if (*classify) {
      report.command = "classify";
      auto systems = parse_systems(cl_type, cl_rank);
      auto rows = classify_table(systems, cl_primes);
      report.params = {{"type", cl_type}, {"primes", cl_primes}, {"table", classify_rows_json(rows)},
                       {"config", cfg.to_json()}};
      extra_md = classify_rows_markdown(rows);
      // validate the requested systems against the literature lists
      bool ok = true;
      for (auto [t, rank] : systems) {
        RootSystemData rs = build_root_system(t, rank);
        auto [dim_b, r] = table_values(rs);
        ok = ok && rs.dim_borel() == dim_b;
      }
      report.checks.push_back(make_check("classify-table-cross-check", ok, true, ok,
                                         anchors::kDimTable,
                                         "positive-root count agrees with the table"));
    } else if (*inv) {
      report.command = "invariants";
      report.params = {{"family", inv_family}, {"n", inv_n}, {"p", inv_p},
                       {"max_degree", inv_maxdeg}, {"config", cfg.to_json()}};
      auto run = run_invariant_checks(inv_family, inv_n, inv_p, inv_maxdeg, cfg);
      report.params["certificate"] = run.certificate;
      report.checks = std::move(run.checks);
    } else if (*cone) {
      report.command = "cone";
      report.params = {{"n", cn_n}, {"p", cn_p}, {"k", cn_k}, {"checks", cn_checks},
                       {"config", cfg.to_json()}};
      report.checks = run_cone_checks(cn_n, cn_p, cn_k, cn_checks, cfg);
    } else if (*springer) {
      report.command = "springer";
      std::optional<Partition> part;
      if (!sp_partition.empty()) part = Partition(sp_partition.begin(), sp_partition.end());
      report.params = {{"n", sp_n}, {"p", sp_p}, {"k", sp_k}, {"two_q", sp_two_q},
                       {"config", cfg.to_json()}};
      if (part) report.params["partition"] = partition_to_string(*part);
      report.checks = run_springer_checks(sp_n, sp_p, sp_k, part, sp_two_q, cfg);
    } else if (*sweep) {
      report.command = "sweep";
      std::vector<LieType> types;
      for (const auto& s : sw_types) types.push_back(lie_type_from_char(s.empty() ? '?' : s[0]));
      report.params = {{"types", sw_types}, {"max_rank", sw_maxrank}, {"exact_a", sw_exact_a},
                       {"config", cfg.to_json()}};
      auto rows = run_sweep(types, sw_maxrank, sw_exact_a);
      report.params["rows"] = sweep_rows_json(rows);
      extra_csv = sweep_rows_csv(rows);
      report.checks = run_sweep_checks(types, sw_maxrank, sw_exact_a);
    } else {
      report.command = "all";
      report.params = {{"config", cfg.to_json()}};
      report.checks = run_all_battery(cfg);
    }

    auto t1 = std::chrono::steady_clock::now();
    report.duration_ms =
        static_cast<uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count());
    return emit_report(report, g, extra_md, extra_csv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
