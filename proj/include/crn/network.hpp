#pragma once

#include "crn/errors.hpp"
#include "crn/linalg.hpp"
#include "crn/rational.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace crn {

struct Reaction {
  std::size_t source = 0;
  std::size_t target = 0;
  std::string rate_label;
};

/// Mass-action reaction network: a loop-free directed graph on distinct complexes.
class Network {
 public:
  Network() = default;

  /// Validates and builds a network. Throws ContractError on duplicate complexes,
  /// negative coefficients, loops, parallel edges, or bad indices.
  Network(std::vector<std::string> species, std::vector<IntVector> complexes,
          std::vector<Reaction> reactions);

  std::size_t species_count() const { return species_.size(); }
  std::size_t complex_count() const { return complexes_.size(); }
  std::size_t reaction_count() const { return reactions_.size(); }

  const std::vector<std::string>& species() const { return species_; }
  const std::vector<IntVector>& complexes() const { return complexes_; }
  const std::vector<Reaction>& reactions() const { return reactions_; }
  const IntVector& complex(std::size_t i) const { return complexes_.at(i); }

  /// Rate labels in reaction order.
  std::vector<std::string> rate_labels() const;

  /// Human-readable complex, e.g. "A + 2 C" or "0".
  std::string complex_name(std::size_t i) const;
  std::string format_complex(const IntVector& y) const;

 private:
  std::vector<std::string> species_;
  std::vector<IntVector> complexes_;
  std::vector<Reaction> reactions_;
};

/// Positive rate constant per rate label.
class RateAssignment {
 public:
  RateAssignment() = default;
  explicit RateAssignment(std::map<std::string, Rational> values);

  /// Sets one rate. Throws ContractError unless value > 0.
  void set(const std::string& label, const Rational& value);
  const Rational& at(const std::string& label) const;
  bool contains(const std::string& label) const { return values_.count(label) != 0; }
  const std::map<std::string, Rational>& values() const { return values_; }

  /// The rate of every reaction, in reaction order.
  RationalVector per_reaction(const Network& n) const;

  friend bool operator==(const RateAssignment&, const RateAssignment&) = default;

 private:
  std::map<std::string, Rational> values_;
};

/// Rates drawn uniformly from the integers [1, 2^16].
RateAssignment random_rates(const Network& n, std::mt19937_64& rng);

/// All rates equal to one.
RateAssignment unit_rates(const Network& n);

struct ConservationLaw {
  RationalVector w;
  std::string constant;
};

/// Reads the text network format:
///
///     species: A B C
///     A + B -> 2 C ; k1      # comment
///     2 C -> A + B ; k2
///
/// Complexes are numbered in order of first appearance.
Network parse_network(std::string_view text);
Network load_network(const std::string& path);

/// Writes a network back in the text format accepted by parse_network.
std::string format_network(const Network& n);

/// Y^t: s x m, column i is complex y_i.
IntegerMatrix complex_matrix(const Network& n);

/// A_kappa^t: m x m; entry (j,i) = kappa_ij for a reaction y_i -> y_j, columns sum to zero.
RationalMatrix laplacian_transpose(const Network& n, const RateAssignment& rates);

/// Sigma = Y^t A_kappa^t, the complex-to-species rate matrix.
RationalMatrix sigma_matrix(const Network& n, const RateAssignment& rates);

/// N: s x r, column for y_i -> y_j is y_j - y_i.
IntegerMatrix stoichiometric_matrix(const Network& n);

/// RREF-canonical basis of the left kernel of N, with constants c1, c2, ...
std::vector<ConservationLaw> conservation_space(const Network& n);

struct LinkageStructure {
  /// Weakly connected components, each sorted, ordered by smallest complex.
  std::vector<std::vector<std::size_t>> linkage_classes;
  /// Terminal strongly connected components, grouped per linkage class.
  std::vector<std::vector<std::vector<std::size_t>>> terminal_classes;

  std::size_t linkage_count() const { return linkage_classes.size(); }
  std::size_t terminal_count() const;
  bool one_terminal_per_linkage_class() const;
};

LinkageStructure linkage_structure(const Network& n);

struct Deficiency {
  std::size_t kernel = 0;         ///< dim ker(Y^t A^t) - dim ker(A^t)
  std::size_t combinatorial = 0;  ///< m - l - rank(N)
  bool agree = false;
};

Deficiency deficiency(const Network& n, const RateAssignment& rates);

}  // namespace crn
