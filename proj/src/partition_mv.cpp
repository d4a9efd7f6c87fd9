#include "crn/partition_mv.hpp"

#include "crn/binomiality.hpp"

#include <algorithm>
#include <set>

namespace crn {

namespace {

std::optional<GradingWitness> grading_witness(const Polynomial& p, const IntVector& w) {
  if (p.term_count() < 2) return std::nullopt;
  const auto& terms = p.terms();
  const IntVector& a = terms.begin()->first;
  const Integer degree = dot(w, a);
  for (const auto& [b, coeff] : terms)
    if (dot(w, b) != degree) return GradingWitness{w, a, b, 0};
  return std::nullopt;
}

}  // namespace

bool weakly_connected_multihomogeneity(const Network& n) {
  return n.complex_count() > 0 && linkage_structure(n).linkage_count() == 1;
}

PartitionOutcome partitionable_check(const Network& n, const std::vector<Polynomial>& generators) {
  if (generators.empty()) throw ContractError("partitionability needs at least one generator");
  const std::size_t s = n.species_count();
  PartitionOutcome out;

  std::vector<RationalVector> laws;
  for (auto& law : conservation_space(n)) laws.push_back(std::move(law.w));

  PartitionCertificate cert;
  for (const auto& block : support_partition(laws, s)) {
    if (!block.supported()) continue;
    if (block.dimension > 1) {
      out.refusal = "the conservation space has no disjoint-support basis";
      return out;
    }
    // A 1-dimensional block is spanned by the law restricted to it.
    for (const auto& law : canonical_span_basis(laws, s)) {
      if (law[block.indices.front()] == 0) continue;
      const Rational& first = law[block.indices.front()];
      IntVector w(s, 0);
      for (auto i : block.indices) {
        if (law[i] != first) {
          out.refusal = "conservation law " + to_string(law) + " is not a 0/1 vector up to scaling";
          return out;
        }
        w[i] = 1;
      }
      cert.w_list.push_back(std::move(w));
    }
  }

  std::set<IntVector> complexes(n.complexes().begin(), n.complexes().end());
  const bool monomials_are_complexes =
      std::all_of(generators.begin(), generators.end(), [&](const Polynomial& p) {
        return std::all_of(p.terms().begin(), p.terms().end(),
                           [&](const auto& term) { return complexes.count(term.first) != 0; });
      });
  if (monomials_are_complexes && weakly_connected_multihomogeneity(n)) {
    cert.fast_path = true;
    cert.multihomogeneous.assign(generators.size(), true);
    out.certificate = std::move(cert);
    return out;
  }

  for (std::size_t g = 0; g < generators.size(); ++g) {
    for (const auto& w : cert.w_list) {
      if (auto witness = grading_witness(generators[g], w)) {
        witness->generator = g;
        out.refusal = "generator " + std::to_string(g + 1) + " is not homogeneous for w = " +
                      to_string(w);
        out.witness = std::move(witness);
        return out;
      }
    }
    cert.multihomogeneous.push_back(true);
  }
  out.certificate = std::move(cert);
  return out;
}

PartitionOutcome partitionable_check(const Network& n, const std::vector<Binomial>& generators) {
  std::vector<Polynomial> polys;
  for (const auto& b : generators) polys.push_back(b.to_polynomial());
  return partitionable_check(n, polys);
}

std::string to_string(MvMethod m) {
  switch (m) {
    case MvMethod::Determinant: return "determinant";
    case MvMethod::InclusionExclusion: return "inclusion-exclusion";
    case MvMethod::MixedCells: return "mixed-cells";
    case MvMethod::ClosedForm: return "closed-form";
  }
  return "unknown";
}

namespace {

std::size_t species_of(const PartitionCertificate& cert) {
  return cert.w_list.empty() ? 0 : cert.w_list.front().size();
}

void check_square(const PartitionCertificate& cert, const std::vector<Binomial>& generators) {
  if (generators.empty()) throw ContractError("no binomial generators");
  const std::size_t s = generators.front().expo1.size();
  if (generators.size() + cert.w_list.size() != s)
    throw ContractError("need exactly s - k = " +
                        std::to_string(static_cast<long>(s) - static_cast<long>(cert.w_list.size())) +
                        " binomials, got " + std::to_string(generators.size()));
  if (!cert.w_list.empty() && species_of(cert) != s)
    throw DimensionError("conservation vectors and generators disagree on the species count");
}

std::vector<std::vector<std::size_t>> supports(const PartitionCertificate& cert) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& w : cert.w_list) {
    std::vector<std::size_t> supp;
    for (std::size_t a = 0; a < w.size(); ++a)
      if (w[a] != 0) supp.push_back(a);
    out.push_back(std::move(supp));
  }
  return out;
}

}  // namespace

IntegerMatrix alpha_matrix(const std::vector<Binomial>& generators,
                           const std::vector<std::size_t>& alpha, std::size_t species) {
  std::vector<IntVector> columns;
  for (const auto& g : generators) columns.push_back(g.edge());
  for (auto a : alpha) columns.push_back(unit_vector(species, a));
  return IntegerMatrix::from_columns(columns, species);
}

MVReport fast_mixed_volume(const PartitionCertificate& cert, const std::vector<Binomial>& generators,
                           std::optional<std::vector<std::size_t>> alpha) {
  check_square(cert, generators);
  const std::size_t s = generators.front().expo1.size();
  const auto supp = supports(cert);

  std::vector<std::size_t> chosen;
  if (alpha) {
    if (alpha->size() != supp.size()) throw ContractError("one alpha index per conservation vector");
    for (std::size_t j = 0; j < supp.size(); ++j)
      if (!std::binary_search(supp[j].begin(), supp[j].end(), (*alpha)[j]))
        throw ContractError("alpha_" + std::to_string(j + 1) + " = " +
                            std::to_string((*alpha)[j] + 1) + " is outside supp(w_" +
                            std::to_string(j + 1) + ")");
    chosen = *alpha;
  } else {
    for (const auto& sj : supp) chosen.push_back(sj.front());
  }

  MVReport report;
  report.method = MvMethod::Determinant;
  report.value = abs(determinant(alpha_matrix(generators, chosen, s)));
  report.alpha = chosen;
  report.conditional = report.value != 0;
  report.cell = predicted_mixed_cell(cert, generators, chosen);
  return report;
}

bool alpha_invariance(const PartitionCertificate& cert, const std::vector<Binomial>& generators) {
  check_square(cert, generators);
  const std::size_t s = generators.front().expo1.size();
  const auto supp = supports(cert);

  std::vector<std::size_t> odometer(supp.size(), 0);
  std::optional<Integer> first;
  for (;;) {
    std::vector<std::size_t> alpha;
    for (std::size_t j = 0; j < supp.size(); ++j) alpha.push_back(supp[j][odometer[j]]);
    const Integer v = abs(determinant(alpha_matrix(generators, alpha, s)));
    if (!first)
      first = v;
    else if (*first != v)
      return false;

    std::size_t j = 0;
    while (j < supp.size() && ++odometer[j] == supp[j].size()) odometer[j++] = 0;
    if (j == supp.size()) return true;
  }
}

std::optional<CellDescription> predicted_mixed_cell(const PartitionCertificate& cert,
                                                    const std::vector<Binomial>& generators,
                                                    const std::vector<std::size_t>& alpha) {
  check_square(cert, generators);
  const std::size_t s = generators.front().expo1.size();
  const Integer det = abs(determinant(alpha_matrix(generators, alpha, s)));
  if (det == 0) return std::nullopt;
  CellDescription cell;
  for (const auto& g : generators) cell.edges.push_back({g.expo1, g.expo2});
  for (auto a : alpha) cell.edges.push_back({IntVector(s, 0), unit_vector(s, a)});
  cell.volume = det;
  return cell;
}

std::vector<PointConfiguration> binomial_system(const PartitionCertificate& cert,
                                                const std::vector<Binomial>& generators) {
  std::vector<PointConfiguration> configs;
  for (const auto& g : generators) configs.emplace_back(std::vector<IntVector>{g.expo1, g.expo2});
  for (const auto& w : cert.w_list) configs.push_back(conservation_support(to_rational(w)));
  return configs;
}

void confirm_with_cells(MVReport& report, const PartitionCertificate& cert,
                        const std::vector<Binomial>& generators, std::uint64_t seed) {
  check_square(cert, generators);
  if (generators.size() + cert.w_list.size() > kMaxCellEnumeration) return;
  const CellEnumeration e = enumerate_mixed_cells(binomial_system(cert, generators), seed);
  CellConfirmation c;
  c.cells = e.cells.size();
  c.volume = e.total_volume().get_num();
  c.seed = seed;
  c.agrees = c.volume == report.value;
  report.confirmation = c;
  if (c.agrees) report.conditional = false;
}

}  // namespace crn
