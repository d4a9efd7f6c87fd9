#pragma once

#include "crn/binomiality.hpp"
#include "crn/network.hpp"

#include <optional>
#include <string>
#include <vector>

namespace crn {

/// Species-overlapping cycle: species X_1..X_m, complexes X_i + X_{i+1} (indices
/// mod m), reactions X_i + X_{i+1} -> X_{i+1} + X_{i+2} with labels k1..km.
/// Species are named A, B, C, ... while m <= 26. Throws ContractError for m < 3.
Network soc_network(std::size_t m);

/// Every complex has exactly one incoming and one outgoing reaction, and the
/// graph is connected.
bool is_directed_cycle(const Network& n);

/// Reaction indices in cycle order, starting with the reaction that leaves complex 0.
std::vector<std::size_t> cycle_order(const Network& n);

/// Edge coloring of a directed cycle: colors[r] in 1..count for reaction r.
struct Coloring {
  std::vector<std::size_t> colors;
  std::size_t count() const;
};

struct ColoringOutcome {
  std::optional<Coloring> coloring;
  std::optional<PdscCertificate> certificate;
  std::string refusal;
};

/// Colors each reaction by the kernel block containing its source complex.
/// Throws ContractError when n is not a directed cycle.
ColoringOutcome cycle_coloring(const Network& n, const PdscOptions& options = {});

struct ColorBalance {
  std::size_t color = 0;
  std::vector<std::size_t> heads;  ///< source vertices of the color's path subgraph
  std::vector<std::size_t> tails;  ///< sink vertices
  IntVector head_sum;
  IntVector tail_sum;
  bool balanced = false;
};

struct ColoringCheck {
  bool valid = false;
  std::vector<ColorBalance> colors;
};

/// Checks that every color's heads and tails have equal complex sums.
/// Throws ContractError for non-cycles and for colorings that are not
/// surjective onto 1..count or do not cover every reaction.
ColoringCheck verify_coloring(const Network& n, const Coloring& c);

/// 1 for odd m, m/2 for even m.
Integer soc_closed_form_mv(std::size_t m);

}  // namespace crn
