#include "crn/errors.hpp"
#include "crn/network.hpp"
#include "crn/report.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <random>
#include <string>

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kParse = 2, kContract = 3, kCapability = 4 };

struct Common {
  std::string seed = "0";
  unsigned trials = 3;
  std::string format = "text";

  crn::RunOptions options() const {
    crn::RunOptions o;
    o.trials = trials;
    if (seed == "random") {
      o.seed = (static_cast<std::uint64_t>(std::random_device{}()) << 32) | std::random_device{}();
    } else {
      std::size_t used = 0;
      o.seed = std::stoull(seed, &used);
      if (used != seed.size()) throw std::invalid_argument(seed);
    }
    return o;
  }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--seed", c.seed, "Random seed (integer or 'random')")->default_str("0");
  cmd->add_option("--trials", c.trials, "Rate samples per genericity round")
      ->default_val(3)
      ->check(CLI::PositiveNumber);
  cmd->add_option("--format", c.format, "Output format")
      ->default_str("text")
      ->check(CLI::IsMember({"text", "json"}));
}

void emit(const crn::Json& report, const Common& c) {
  if (c.format == "json")
    std::cout << report.dump(2) << '\n';
  else
    std::cout << crn::render_text(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Binomial steady states and mixed volumes of mass-action reaction networks", "crn"};
  app.require_subcommand(1);

  Common common;
  std::string path;
  std::string method = "det";
  std::string generators = "pdsc";
  std::size_t m = 0;
  bool check = false;

  auto* analyze = app.add_subcommand("analyze", "Run the full analysis pipeline on a network file");
  analyze->add_option("file", path, "Network file")->required();
  add_common(analyze, common);

  auto* mixedvol = app.add_subcommand("mixedvol", "Mixed volume of the steady-state system");
  mixedvol->add_option("file", path, "Network file")->required();
  mixedvol->add_option("--method", method, "det, ie, cells or all")
      ->default_str("det")
      ->check(CLI::IsMember({"det", "ie", "cells", "all"}));
  mixedvol->add_option("--generators", generators, "pdsc, odes, or odes:A,B,... for chosen species")
      ->default_str("pdsc");
  add_common(mixedvol, common);

  auto* soc = app.add_subcommand("soc", "Species-overlapping cycle SOC_m and its mixed volume");
  soc->add_option("m", m, "Cycle length (m >= 3)")->required();
  soc->add_flag("--check", check, "Compare the closed form with the computed methods");
  add_common(soc, common);

  auto* coloring = app.add_subcommand("cycle-coloring", "Edge coloring certificate of a directed cycle");
  coloring->add_option("file", path, "Network file")->required();
  add_common(coloring, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    crn::RunOptions options;
    try {
      options = common.options();
    } catch (const std::exception&) {
      std::cerr << "error: --seed must be a nonnegative integer or 'random'\n";
      return kParse;
    }

    if (analyze->parsed()) {
      emit(crn::analyze_report(crn::load_network(path), options), common);
    } else if (mixedvol->parsed()) {
      const crn::Network n = crn::load_network(path);
      emit(crn::mixedvol_report(n, crn::parse_method(method), crn::parse_generator_choice(generators),
                                options),
           common);
    } else if (soc->parsed()) {
      const crn::Json report = crn::soc_report(m, check, options);
      emit(report, common);
      if (check && !report["check"]["passed"].get<bool>()) return kCheckFailed;
    } else if (coloring->parsed()) {
      emit(crn::cycle_coloring_report(crn::load_network(path), options), common);
    }
  } catch (const crn::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const crn::ContractError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kContract;
  } catch (const crn::DimensionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kContract;
  } catch (const crn::CapabilityError& e) {
    std::cerr << "capability cap: " << e.what() << '\n';
    return kCapability;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kOk;
}
