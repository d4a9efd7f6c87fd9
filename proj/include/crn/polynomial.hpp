#pragma once

#include "crn/network.hpp"
#include "crn/rational.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace crn {

/// Sparse polynomial with exact coefficients. Terms are kept in descending
/// lexicographic order of exponent vectors; zero coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<IntVector, Rational, std::greater<IntVector>>;

  Polynomial() = default;
  explicit Polynomial(std::size_t variables) : variables_(variables) {}

  void add_term(const Rational& coeff, const IntVector& exponent);

  std::size_t variables() const { return variables_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }

  /// Exponent vectors of the nonzero terms, in term order.
  std::vector<IntVector> support() const;

  /// Coefficient vector against a fixed list of monomials; throws ContractError
  /// if a term uses a monomial outside the list.
  RationalVector coefficients_over(const std::vector<IntVector>& monomials) const;

  std::string to_string(const std::vector<std::string>& variable_names) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::size_t variables_ = 0;
  TermMap terms_;
};

/// coeff1 * x^expo1 + coeff2 * x^expo2 with both coefficients nonzero and distinct exponents.
struct Binomial {
  Rational coeff1;
  Rational coeff2;
  IntVector expo1;
  IntVector expo2;

  /// Throws ContractError if the invariants do not hold.
  void validate() const;
  Polynomial to_polynomial() const;
  IntVector edge() const { return expo1 - expo2; }
};

/// The polynomial as a binomial, or nullopt when it does not have exactly two terms.
std::optional<Binomial> as_binomial(const Polynomial& p);

/// The mass-action right-hand sides f = Sigma x^{Y^t}, one per species (possibly zero).
std::vector<Polynomial> ode_polynomials(const Network& n, const RateAssignment& rates);

/// The first maximal linearly independent subset of the ODE right-hand sides,
/// scanning species in declaration order. Returns species indices.
std::vector<std::size_t> independent_ode_indices(const Network& n, const RateAssignment& rates);

}  // namespace crn
