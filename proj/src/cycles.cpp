#include "crn/cycles.hpp"

#include <algorithm>
#include <stdexcept>

namespace crn {

Network soc_network(std::size_t m) {
  if (m < 3) throw ContractError("SOC_m needs m >= 3, got " + std::to_string(m));
  std::vector<std::string> species;
  for (std::size_t i = 0; i < m; ++i)
    species.push_back(m <= 26 ? std::string(1, static_cast<char>('A' + i)) : "X" + std::to_string(i + 1));

  std::vector<IntVector> complexes;
  for (std::size_t i = 0; i < m; ++i) complexes.push_back(unit_vector(m, i) + unit_vector(m, (i + 1) % m));

  std::vector<Reaction> reactions;
  for (std::size_t i = 0; i < m; ++i) reactions.push_back({i, (i + 1) % m, "k" + std::to_string(i + 1)});
  return Network(std::move(species), std::move(complexes), std::move(reactions));
}

bool is_directed_cycle(const Network& n) {
  const std::size_t m = n.complex_count();
  if (m < 2 || n.reaction_count() != m) return false;
  std::vector<int> in(m, 0), out(m, 0);
  for (const auto& r : n.reactions()) {
    ++out[r.source];
    ++in[r.target];
  }
  for (std::size_t i = 0; i < m; ++i)
    if (in[i] != 1 || out[i] != 1) return false;
  return linkage_structure(n).linkage_count() == 1;
}

namespace {

void require_cycle(const Network& n) {
  if (!is_directed_cycle(n)) throw ContractError("the network is not a single directed cycle");
}

std::vector<std::size_t> outgoing_reaction(const Network& n) {
  std::vector<std::size_t> out(n.complex_count());
  for (std::size_t r = 0; r < n.reaction_count(); ++r) out[n.reactions()[r].source] = r;
  return out;
}

}  // namespace

std::vector<std::size_t> cycle_order(const Network& n) {
  require_cycle(n);
  const auto leaving = outgoing_reaction(n);
  std::vector<std::size_t> order;
  std::size_t at = 0;
  do {
    order.push_back(leaving[at]);
    at = n.reactions()[leaving[at]].target;
  } while (at != 0);
  return order;
}

std::size_t Coloring::count() const {
  return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end());
}

ColoringOutcome cycle_coloring(const Network& n, const PdscOptions& options) {
  require_cycle(n);
  ColoringOutcome out;
  PdscOutcome pdsc = pdsc_check(n, options);
  if (!pdsc.ok()) {
    out.refusal = pdsc.refusal;
    return out;
  }
  const PdscCertificate& cert = *pdsc.certificate;
  const auto leaving = outgoing_reaction(n);
  const RationalVector kappa = cert.rates.per_reaction(n);

  Coloring coloring;
  coloring.colors.assign(n.reaction_count(), 0);
  for (std::size_t block = 0; block < cert.partition.size(); ++block) {
    // On a cycle the kernel vector is kappa^{-1} on each block, up to scale.
    const auto& indices = cert.partition[block];
    const Rational scale = cert.basis[block][indices.front()] * kappa[leaving[indices.front()]];
    for (auto i : indices) {
      if (cert.basis[block][i] * kappa[leaving[i]] != scale)
        throw std::logic_error("kernel block is not proportional to the inverse rates");
      coloring.colors[leaving[i]] = block + 1;
    }
  }
  if (!verify_coloring(n, coloring).valid)
    throw std::logic_error("constructed coloring fails the head/tail balance");
  out.coloring = std::move(coloring);
  out.certificate = cert;
  return out;
}

ColoringCheck verify_coloring(const Network& n, const Coloring& c) {
  require_cycle(n);
  if (c.colors.size() != n.reaction_count()) throw ContractError("coloring must cover every reaction");
  const std::size_t d = c.count();
  std::vector<bool> used(d + 1, false);
  for (auto color : c.colors) {
    if (color == 0) throw ContractError("colors are numbered from 1");
    used[color] = true;
  }
  for (std::size_t l = 1; l <= d; ++l)
    if (!used[l]) throw ContractError("color " + std::to_string(l) + " is unused");

  const std::size_t m = n.complex_count();
  const std::size_t s = n.species_count();
  ColoringCheck check;
  check.valid = true;
  for (std::size_t l = 1; l <= d; ++l) {
    ColorBalance bal;
    bal.color = l;
    bal.head_sum = IntVector(s, 0);
    bal.tail_sum = IntVector(s, 0);
    if (d > 1) {
      std::vector<int> in(m, 0), out(m, 0);
      for (std::size_t r = 0; r < n.reaction_count(); ++r) {
        if (c.colors[r] != l) continue;
        ++out[n.reactions()[r].source];
        ++in[n.reactions()[r].target];
      }
      for (std::size_t v = 0; v < m; ++v) {
        if (out[v] > 0 && in[v] == 0) {
          bal.heads.push_back(v);
          bal.head_sum = bal.head_sum + n.complex(v);
        }
        if (in[v] > 0 && out[v] == 0) {
          bal.tails.push_back(v);
          bal.tail_sum = bal.tail_sum + n.complex(v);
        }
      }
    }
    bal.balanced = bal.head_sum == bal.tail_sum;
    check.valid = check.valid && bal.balanced;
    check.colors.push_back(std::move(bal));
  }
  return check;
}

Integer soc_closed_form_mv(std::size_t m) {
  if (m < 3) throw ContractError("SOC_m needs m >= 3, got " + std::to_string(m));
  return m % 2 == 1 ? Integer(1) : Integer(static_cast<unsigned long>(m / 2));
}

}  // namespace crn
