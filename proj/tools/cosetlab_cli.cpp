// Command-line front end. Builds a config JSON from flags, hands it to
// the C API, and writes the report to stdout or --out. Wall-clock goes to
// stderr so reports stay byte-identical for a given (config, seed).
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cosetlab/cosetlab.h"

namespace {

using nlohmann::json;

struct CommonArgs {
  uint64_t seed = 0;
  std::string out;
  std::string csv;
};

void add_common(CLI::App* sub, CommonArgs& args) {
  sub->add_option("--seed", args.seed, "master random seed (mandatory)")->required();
  sub->add_option("--out", args.out, "report file (default stdout)");
  sub->add_option("--csv", args.csv, "also write a flat CSV summary");
}

// Copies flag values into the config only when the user set them, so the
// library's defaults stay authoritative.
void set_if(CLI::App* sub, const std::string& flag, json& cfg, const std::string& key,
            const json& value) {
  const CLI::Option* opt = sub->get_option_no_throw(flag);
  if (opt && opt->count() > 0) cfg[key] = value;
}

void write_csv(const std::string& path, const json& report) {
  std::ofstream f(path);
  f << "key,value\n";
  f << "pass," << (report["pass"].get<bool>() ? 1 : 0) << "\n";
  f << "version," << report["version"].get<std::string>() << "\n";
  for (const auto& [k, v] : report["results"].items())
    if (v.is_primitive()) f << k << "," << v.dump() << "\n";
}

int emit(const CommonArgs& args, const char* report_json) {
  if (args.out.empty()) {
    std::cout << report_json;
  } else {
    std::ofstream f(args.out, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot open " << args.out << "\n";
      return COSETLAB_ERR_CONFIG;
    }
    f << report_json;
  }
  if (!args.csv.empty()) write_csv(args.csv, json::parse(report_json));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coset-state simulation laboratory"};
  app.require_subcommand(1);
  app.set_version_flag("--version", []() { return std::string(cosetlab_version()); });

  CommonArgs common;
  json cfg;
  int trials = 0, n = 0, d = 0, c = 0, k = 0, dims = 0;
  std::string scheme, variant, strategy;
  bool trace = false, duplicate_id = false, cheat_duplicate = false;

  CLI::App* correctness = app.add_subcommand("correctness", "scheme round-trip suites");
  add_common(correctness, common);
  correctness->add_option("--scheme", scheme)->check(CLI::IsMember({"cp-pke", "cp-fe", "duality"}));
  correctness->add_option("--n", n);
  correctness->add_option("--d", d);
  correctness->add_option("--c", c);
  correctness->add_option("--trials", trials);

  CLI::App* moe = app.add_subcommand("moe", "monogamy-of-entanglement games");
  add_common(moe, common);
  moe->add_option("--variant", variant)->check(CLI::IsMember({"single", "multi", "coll"}));
  moe->add_option("--strategy", strategy);
  moe->add_option("--n", n);
  moe->add_option("--d", d);
  moe->add_option("--c", c);
  moe->add_option("--trials", trials);
  moe->add_flag("--trace", trace, "embed per-trial traces in the report");
  moe->add_flag("--duplicate-id", duplicate_id, "coll: query the challenge id twice");

  CLI::App* antipiracy = app.add_subcommand("antipiracy", "anti-piracy games");
  add_common(antipiracy, common);
  antipiracy->add_option("--scheme", scheme)->check(CLI::IsMember({"cp-pke", "cp-fe"}));
  antipiracy->add_option("--strategy", strategy);
  antipiracy->add_option("--k", k, "number of quantum key queries");
  antipiracy->add_option("--trials", trials);
  antipiracy->add_flag("--trace", trace);
  antipiracy->add_flag("--cheat-duplicate", cheat_duplicate,
                       "hand the pirate a duplicate key (impossible honestly)");

  CLI::App* lemmas = app.add_subcommand("lemmas", "measurement lemma verification");
  add_common(lemmas, common);
  lemmas->add_option("--dims", dims, "max register dimension");
  lemmas->add_option("--trials", trials);

  CLI::App* bench = app.add_subcommand("bench", "deterministic workload sweep");
  add_common(bench, common);
  bench->add_option("--n", n);
  bench->add_option("--d", d);
  bench->add_option("--c", c);
  bench->add_option("--trials", trials);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : COSETLAB_ERR_CONFIG;
  }

  CLI::App* sub = app.get_subcommands().front();
  cfg["command"] = sub->get_name();
  cfg["seed"] = common.seed;
  set_if(sub, "--trials", cfg, "trials", trials);
  set_if(sub, "--n", cfg, "n", n);
  set_if(sub, "--d", cfg, "d", d);
  set_if(sub, "--c", cfg, "c", c);
  set_if(sub, "--k", cfg, "k", k);
  set_if(sub, "--dims", cfg, "dims", dims);
  set_if(sub, "--scheme", cfg, "scheme", scheme);
  set_if(sub, "--variant", cfg, "variant", variant);
  set_if(sub, "--strategy", cfg, "strategy", strategy);
  set_if(sub, "--trace", cfg, "trace", trace);
  set_if(sub, "--duplicate-id", cfg, "duplicate_id", duplicate_id);
  set_if(sub, "--cheat-duplicate", cfg, "cheat_duplicate", cheat_duplicate);

  cosetlab_experiment* e = cosetlab_experiment_create(cfg.dump().c_str());
  if (!e) {
    std::cerr << "error: " << cosetlab_last_error() << "\n";
    return COSETLAB_ERR_CONFIG;
  }

  auto start = std::chrono::steady_clock::now();
  int status = cosetlab_experiment_run(e);
  auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);

  if (status != COSETLAB_OK && status != COSETLAB_ERR_FAILED) {
    std::cerr << "error: " << cosetlab_last_error() << "\n";
    cosetlab_experiment_destroy(e);
    return status;
  }

  int emit_status = emit(common, cosetlab_experiment_report(e));
  std::cerr << "wall-clock: " << elapsed.count() << " s\n";
  cosetlab_experiment_destroy(e);
  return emit_status != 0 ? emit_status : status;
}
