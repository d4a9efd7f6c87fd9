#pragma once

#include "crn/network.hpp"
#include "crn/polyhedral.hpp"
#include "crn/polynomial.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace crn {

/// Disjoint 0/1 conservation vectors spanning the conservation space, and the
/// grading check of every generator against them.
struct PartitionCertificate {
  std::vector<IntVector> w_list;
  std::vector<bool> multihomogeneous;  ///< per generator
  bool fast_path = false;              ///< grading implied by weak connectivity
};

/// A generator with two exponent vectors of different degree under w.
struct GradingWitness {
  IntVector w;
  IntVector a;
  IntVector b;
  std::size_t generator = 0;
};

struct PartitionOutcome {
  std::optional<PartitionCertificate> certificate;
  std::string refusal;
  std::optional<GradingWitness> witness;
  bool ok() const { return certificate.has_value(); }
};

PartitionOutcome partitionable_check(const Network& n, const std::vector<Polynomial>& generators);
PartitionOutcome partitionable_check(const Network& n, const std::vector<Binomial>& generators);

/// True iff the reaction graph has a single linkage class. Then every complex
/// has the same degree under each conservation vector, so any generator
/// whose monomials are complexes is multihomogeneous.
bool weakly_connected_multihomogeneity(const Network& n);

enum class MvMethod { Determinant, InclusionExclusion, MixedCells, ClosedForm };

std::string to_string(MvMethod m);

/// A parallelotope: one segment per equation of the square system.
struct CellDescription {
  std::vector<std::array<IntVector, 2>> edges;
  Integer volume;
};

struct CellConfirmation {
  std::size_t cells = 0;
  Integer volume;
  std::uint64_t seed = 0;
  bool agrees = false;
};

struct MVReport {
  Integer value;
  MvMethod method = MvMethod::Determinant;
  std::vector<std::size_t> alpha;  ///< 0-based species index per conservation vector
  std::optional<CellDescription> cell;
  bool conditional = false;        ///< det != 0 and no cell has been found yet
  std::optional<CellConfirmation> confirmation;
  std::vector<std::string> generators;
};

/// Columns expo1 - expo2 for each generator, then e_{alpha_j} for each w_j.
IntegerMatrix alpha_matrix(const std::vector<Binomial>& generators,
                           const std::vector<std::size_t>& alpha, std::size_t species);

/// |det M_alpha|. Throws ContractError unless generators.size() + k = s and
/// alpha_j lies in supp(w_j); alpha defaults to the smallest index of each support.
MVReport fast_mixed_volume(const PartitionCertificate& cert, const std::vector<Binomial>& generators,
                           std::optional<std::vector<std::size_t>> alpha = std::nullopt);

/// Whether |det M_alpha| is the same for every alpha in supp(w_1) x ... x supp(w_k).
bool alpha_invariance(const PartitionCertificate& cert, const std::vector<Binomial>& generators);

/// The candidate mixed cell sum conv(expo1, expo2) + sum conv(0, e_alpha_j),
/// or nullopt when its edges are dependent.
std::optional<CellDescription> predicted_mixed_cell(const PartitionCertificate& cert,
                                                    const std::vector<Binomial>& generators,
                                                    const std::vector<std::size_t>& alpha);

/// Supports of the square system: each binomial, then {0} + {e_a : a in supp(w_j)}.
std::vector<PointConfiguration> binomial_system(const PartitionCertificate& cert,
                                                const std::vector<Binomial>& generators);

/// Runs mixed-cell enumeration on the system and records the outcome. A
/// nonzero determinant is confirmed when the enumerated volume equals it.
/// Systems larger than the cell-enumeration cap are left conditional.
void confirm_with_cells(MVReport& report, const PartitionCertificate& cert,
                        const std::vector<Binomial>& generators, std::uint64_t seed);

}  // namespace crn
