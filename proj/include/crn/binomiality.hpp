#pragma once

#include "crn/network.hpp"
#include "crn/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace crn {

struct SupportBlock {
  std::vector<std::size_t> indices;  ///< sorted coordinates
  std::size_t dimension = 0;         ///< dimension of the subspace restricted to the block
  bool supported() const { return dimension > 0; }
  friend bool operator==(const SupportBlock&, const SupportBlock&) = default;
};

/// Finest coordinate partition along which span(basis) splits as a direct sum.
///
/// Coordinates are joined when some vector of the canonical (RREF) basis is
/// nonzero on both; the RREF basis of a direct sum is the union of the RREF
/// bases of its summands, so the connected components are exactly the finest
/// blocks. Coordinates outside every support come back as singleton blocks of
/// dimension 0. Blocks are ordered by their smallest coordinate.
std::vector<SupportBlock> support_partition(const std::vector<RationalVector>& basis,
                                            std::size_t length);

/// Witness for a basis of ker(Sigma) with disjoint supports covering all complexes.
struct PdscCertificate {
  std::size_t d = 0;
  std::vector<std::vector<std::size_t>> partition;  ///< I_1..I_d, 0-based complex indices
  std::vector<RationalVector> basis;                 ///< b^i, supp(b^i) = I_i, first entry 1
  RateAssignment rates;                              ///< the sample the basis was computed for
};

struct PdscOutcome {
  std::optional<PdscCertificate> certificate;
  std::string refusal;            ///< empty on success
  std::size_t kernel_dimension = 0;
  RateAssignment rates;           ///< first sample of the accepted round
  std::size_t rounds = 1;         ///< sampling rounds needed to reach agreement
  bool ok() const { return certificate.has_value(); }
};

struct PdscOptions {
  unsigned trials = 3;
  std::uint64_t seed = 0;
  unsigned max_rounds = 5;
};

/// Decides the disjoint-support kernel condition for generic rate constants.
/// Each round draws `trials` independent rate samples; all samples must yield
/// the same kernel dimension and support partition, otherwise a new round is
/// drawn. Throws NonGenericError after max_rounds disagreeing rounds.
PdscOutcome pdsc_check(const Network& n, const PdscOptions& options = {});

/// Same decision for one fixed rate assignment.
PdscOutcome pdsc_check_at(const Network& n, const RateAssignment& rates);

/// m - d binomials b_{j'} x^{y_{j2}} - b_{j2} x^{y_{j'}}, j' = min(I_j), with
/// denominators cleared. Ordered by block, then by j2.
std::vector<Binomial> binomial_generators(const PdscCertificate& cert, const Network& n);

/// True when every basis vector has nonzero entries of a single sign.
bool sign_condition(const PdscCertificate& cert);

struct Squareness {
  bool square = false;
  std::size_t binomials = 0;
  std::size_t conservation_laws = 0;
  std::size_t species = 0;
  bool one_terminal_per_linkage_class = false;
};

Squareness squareness_check(const Network& n, const PdscCertificate& cert);

}  // namespace crn
