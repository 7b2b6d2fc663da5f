#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "biorder/pipeline.hpp"

namespace {

using biorder::RingSpec;
using biorder::RunConfig;

// Shared ring/config flags for all subcommands.
struct CommonOpts {
  std::string ring_kind = "gfmatrix";
  int n = 2;
  std::uint32_t q = 2;
  std::uint32_t m = 6;
  std::string file;
  std::string order_file;
  std::uint64_t max_order = biorder::RingTable::kDefaultMaxOrder;
  std::uint64_t seed = 1;
  std::string out;

  void attach(CLI::App* app) {
    app->add_option("--ring", ring_kind,
                    "ring source: gfmatrix | zmod | table")
        ->check(CLI::IsMember({"gfmatrix", "zmod", "table"}));
    app->add_option("--n", n, "matrix dimension (gfmatrix)");
    app->add_option("--q", q, "prime field order (gfmatrix)");
    app->add_option("--m", m, "modulus (zmod)");
    app->add_option("--file", file, "CSV multiplication (+ addition) table");
    app->add_option("--order-file", order_file,
                    "raw partial order: count, then 'a b' pairs meaning a <= b");
    app->add_option("--max-order", max_order, "element-count budget");
    app->add_option("--seed", seed, "seed for every sampled check");
    app->add_option("--out", out, "output path (default stdout)");
  }

  RunConfig to_config() const {
    RunConfig config;
    if (!order_file.empty()) {
      config.ring.source = RingSpec::Source::order_file;
      config.ring.file = order_file;
    } else if (ring_kind == "gfmatrix") {
      config.ring.source = RingSpec::Source::gf_matrix;
      config.ring.n = n;
      config.ring.q = q;
    } else if (ring_kind == "zmod") {
      config.ring.source = RingSpec::Source::z_mod;
      config.ring.m = m;
    } else {
      config.ring.source = RingSpec::Source::table_file;
      config.ring.file = file;
      if (file.empty())
        throw biorder::ConfigError("--ring table requires --file");
    }
    config.ring.max_order = max_order;
    config.seed = seed;
    config.out_path = out;
    return config;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"biorder: extract the biordered set of idempotents of a "
               "finite ring or semigroup and verify its structure"};
  app.require_subcommand(1);

  CommonOpts verify_opts, export_opts, bench_opts;
  std::vector<std::string> checks = {"all"};
  std::vector<std::string> axiom_filter;
  std::string budget = "auto";
  std::vector<std::uint32_t> basis;
  bool timings = false;

  CLI::App* verify =
      app.add_subcommand("verify", "run checks and write a report");
  verify_opts.attach(verify);
  verify->add_option("--checks", checks,
                     "axioms | baer | lattice | distances | idpersp | basis "
                     "| all (comma separated)")
      ->delimiter(',');
  verify->add_option("--axioms", axiom_filter,
                     "restrict axiom records: e1,e2,e2dual,e3")
      ->delimiter(',')
      ->check(CLI::IsMember({"e1", "e2", "e2dual", "e3"}));
  verify->add_option("--budget", budget, "auto | full | sampled")
      ->check(CLI::IsMember({"auto", "full", "sampled"}));
  verify->add_option("--basis", basis,
                     "candidate basis elements (comma separated indices)")
      ->delimiter(',');
  verify->add_flag("--timings", timings,
                   "record wall-clock per check (breaks byte-determinism)");

  std::string what = "biorder";
  std::string format = "json";
  CLI::App* exp = app.add_subcommand("export", "export structures");
  export_opts.attach(exp);
  exp->add_option("--what", what, "biorder | lattice | graph")
      ->check(CLI::IsMember({"biorder", "lattice", "graph"}));
  exp->add_option("--format", format, "json | dot")
      ->check(CLI::IsMember({"json", "dot"}));

  CLI::App* bench = app.add_subcommand("bench", "stage timing table");
  bench_opts.ring_kind = "gfmatrix";
  bench_opts.n = 4;
  bench_opts.attach(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      RunConfig config = verify_opts.to_config();
      config.checks = checks;
      config.axiom_filter = axiom_filter;
      config.basis = basis;
      config.timings = timings;
      if (budget == "full")
        config.budget = RunConfig::Budget::full;
      else if (budget == "sampled")
        config.budget = RunConfig::Budget::sampled;
      return biorder::cmd_verify(config, std::cout, std::cerr);
    }
    if (exp->parsed()) {
      RunConfig config = export_opts.to_config();
      return biorder::cmd_export(config, what, format, std::cout, std::cerr);
    }
    RunConfig config = bench_opts.to_config();
    return biorder::cmd_bench(config, std::cout, std::cerr);
  } catch (const biorder::ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 3;
  } catch (const biorder::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }
}
