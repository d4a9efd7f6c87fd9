#include "crn/polynomial.hpp"

#include <sstream>

namespace crn {

void Polynomial::add_term(const Rational& coeff, const IntVector& exponent) {
  if (exponent.size() != variables_) throw DimensionError("exponent length mismatch");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

std::vector<IntVector> Polynomial::support() const {
  std::vector<IntVector> out;
  for (const auto& [e, c] : terms_) out.push_back(e);
  return out;
}

RationalVector Polynomial::coefficients_over(const std::vector<IntVector>& monomials) const {
  RationalVector out(monomials.size(), 0);
  for (const auto& [e, c] : terms_) {
    std::size_t i = 0;
    while (i < monomials.size() && monomials[i] != e) ++i;
    if (i == monomials.size()) throw ContractError("term outside the monomial list");
    out[i] = c;
  }
  return out;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;

    std::string mono;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x_" + (k < names.size() ? names[k] : std::to_string(k + 1));
      if (e[k] != 1) mono += "^" + e[k].get_str();
    }
    if (mono.empty()) {
      os << crn::to_string(mag);
    } else {
      if (mag != 1) os << crn::to_string(mag) << "*";
      os << mono;
    }
  }
  return os.str();
}

void Binomial::validate() const {
  if (coeff1 == 0 || coeff2 == 0) throw ContractError("binomial with a zero coefficient");
  if (expo1.size() != expo2.size()) throw ContractError("binomial exponent length mismatch");
  if (expo1 == expo2) throw ContractError("binomial with equal exponents");
}

Polynomial Binomial::to_polynomial() const {
  Polynomial p(expo1.size());
  p.add_term(coeff1, expo1);
  p.add_term(coeff2, expo2);
  return p;
}

std::optional<Binomial> as_binomial(const Polynomial& p) {
  if (p.term_count() != 2) return std::nullopt;
  Binomial out;
  auto it = p.terms().begin();
  out.expo1 = it->first;
  out.coeff1 = it->second;
  ++it;
  out.expo2 = it->first;
  out.coeff2 = it->second;
  return out;
}

std::vector<Polynomial> ode_polynomials(const Network& n, const RateAssignment& rates) {
  const auto sigma = sigma_matrix(n, rates);
  std::vector<Polynomial> out;
  for (std::size_t k = 0; k < n.species_count(); ++k) {
    Polynomial f(n.species_count());
    for (std::size_t i = 0; i < n.complex_count(); ++i) f.add_term(sigma(k, i), n.complex(i));
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<std::size_t> independent_ode_indices(const Network& n, const RateAssignment& rates) {
  const auto sigma = sigma_matrix(n, rates);
  std::vector<std::size_t> chosen;
  std::vector<RationalVector> rows;
  for (std::size_t k = 0; k < sigma.rows(); ++k) {
    rows.push_back(sigma.row(k));
    if (rank(RationalMatrix::from_rows(rows, sigma.cols())) == rows.size()) {
      chosen.push_back(k);
    } else {
      rows.pop_back();
    }
  }
  return chosen;
}

}  // namespace crn
