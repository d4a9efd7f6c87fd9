#pragma once

#include "crn/network.hpp"
#include "crn/partition_mv.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace crn {

using Json = nlohmann::ordered_json;

struct RunOptions {
  std::uint64_t seed = 0;
  unsigned trials = 3;
};

enum class MethodChoice { Determinant, InclusionExclusion, MixedCells, All };

/// "det", "ie", "cells" or "all". Throws ContractError otherwise.
MethodChoice parse_method(const std::string& text);

/// Which polynomials stand in for the steady-state ideal.
struct GeneratorChoice {
  enum class Kind { Pdsc, Odes } kind = Kind::Pdsc;
  std::vector<std::string> species;  ///< explicit ODE right-hand sides; empty = automatic
};

/// "pdsc", "odes" or "odes:B,C". Throws ContractError otherwise.
GeneratorChoice parse_generator_choice(const std::string& text);

/// Largest system handled by the inclusion-exclusion and cell oracles in reports.
inline constexpr std::size_t kOracleCap = 6;

/// Full pipeline: matrices, deficiency, PDSC, generators, partitionability,
/// and every applicable mixed-volume method.
Json analyze_report(const Network& n, const RunOptions& options);

/// Throws ContractError when the requested system cannot be formed or is not
/// square, and CapabilityError when an oracle method exceeds its cap.
Json mixedvol_report(const Network& n, MethodChoice method, const GeneratorChoice& generators,
                     const RunOptions& options);

/// SOC_m in the network file format with its closed-form mixed volume. With
/// check, also computes the determinant (and the oracles for m <= 6) and
/// records whether everything matches under "check.passed".
Json soc_report(std::size_t m, bool check, const RunOptions& options);

/// Throws ContractError when n is not a directed cycle.
Json cycle_coloring_report(const Network& n, const RunOptions& options);

/// Indented "key: value" rendering of a report.
std::string render_text(const Json& report);

}  // namespace crn
