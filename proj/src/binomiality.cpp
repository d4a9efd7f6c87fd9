#include "crn/binomiality.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

namespace crn {

std::vector<SupportBlock> support_partition(const std::vector<RationalVector>& basis,
                                            std::size_t length) {
  std::vector<std::size_t> parent(length);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };

  std::vector<RationalVector> canonical;
  if (!basis.empty()) canonical = canonical_span_basis(basis, length);

  std::vector<bool> covered(length, false);
  for (const auto& v : canonical) {
    std::size_t first = length;
    for (std::size_t i = 0; i < length; ++i) {
      if (v[i] == 0) continue;
      covered[i] = true;
      if (first == length)
        first = i;
      else
        parent[find(i)] = find(first);
    }
  }

  std::vector<SupportBlock> blocks;
  std::vector<std::size_t> block_of_root(length, length);
  for (std::size_t i = 0; i < length; ++i) {
    const std::size_t r = find(i);
    if (block_of_root[r] == length) {
      block_of_root[r] = blocks.size();
      blocks.emplace_back();
    }
    blocks[block_of_root[r]].indices.push_back(i);
  }
  for (const auto& v : canonical) {
    auto it = std::find_if(v.begin(), v.end(), [](const Rational& q) { return q != 0; });
    blocks[block_of_root[find(static_cast<std::size_t>(it - v.begin()))]].dimension++;
  }
  for (std::size_t i = 0; i < length; ++i)
    if (!covered[i]) blocks[block_of_root[find(i)]].dimension = 0;
  return blocks;
}

// ---------------------------------------------------------------------------

PdscOutcome pdsc_check_at(const Network& n, const RateAssignment& rates) {
  const std::size_t m = n.complex_count();
  const auto kernel = kernel_basis(sigma_matrix(n, rates));

  PdscOutcome out;
  out.rates = rates;
  out.kernel_dimension = kernel.size();
  if (kernel.empty()) {
    out.refusal = "d = 0: ker(Sigma) is trivial";
    return out;
  }

  const auto blocks = support_partition(kernel, m);
  for (const auto& b : blocks) {
    if (!b.supported()) {
      out.refusal = "complex " + std::to_string(b.indices.front() + 1) +
                    " lies outside the support of ker(Sigma)";
      return out;
    }
    if (b.dimension > 1) {
      out.refusal = "ker(Sigma) restricted to complexes {";
      for (std::size_t i = 0; i < b.indices.size(); ++i)
        out.refusal += (i ? "," : "") + std::to_string(b.indices[i] + 1);
      out.refusal += "} has dimension " + std::to_string(b.dimension) +
                     "; no disjoint-support basis exists";
      return out;
    }
  }

  PdscCertificate cert;
  cert.d = blocks.size();
  cert.rates = rates;
  const auto canonical = canonical_span_basis(kernel, m);
  for (const auto& b : blocks) {
    cert.partition.push_back(b.indices);
    // The unique canonical vector supported on this block; its pivot is 1.
    for (const auto& v : canonical)
      if (v[b.indices.front()] != 0) cert.basis.push_back(v);
  }
  out.certificate = std::move(cert);
  return out;
}

namespace {

bool same_decision(const PdscOutcome& a, const PdscOutcome& b) {
  if (a.kernel_dimension != b.kernel_dimension || a.ok() != b.ok()) return false;
  if (a.ok()) return a.certificate->partition == b.certificate->partition;
  return a.refusal == b.refusal;
}

}  // namespace

PdscOutcome pdsc_check(const Network& n, const PdscOptions& options) {
  if (options.trials == 0) throw ContractError("pdsc_check needs at least one trial");
  std::mt19937_64 rng(options.seed);
  for (unsigned round = 1; round <= options.max_rounds; ++round) {
    std::vector<PdscOutcome> samples;
    for (unsigned t = 0; t < options.trials; ++t)
      samples.push_back(pdsc_check_at(n, random_rates(n, rng)));
    const bool agree = std::all_of(samples.begin(), samples.end(),
                                   [&](const PdscOutcome& s) { return same_decision(s, samples[0]); });
    if (agree) {
      samples[0].rounds = round;
      return samples[0];
    }
  }
  throw NonGenericError("rate samples disagree on ker(Sigma) after " +
                        std::to_string(options.max_rounds) + " rounds");
}

std::vector<Binomial> binomial_generators(const PdscCertificate& cert, const Network& n) {
  std::vector<Binomial> out;
  for (std::size_t j = 0; j < cert.partition.size(); ++j) {
    const auto& block = cert.partition[j];
    const auto& b = cert.basis[j];
    const std::size_t lead = block.front();
    for (std::size_t t = 1; t < block.size(); ++t) {
      const std::size_t other = block[t];
      Rational c1 = b[lead];
      Rational c2 = -b[other];
      const Integer l = lcm_of_denominators({c1, c2});
      c1 *= l;
      c2 *= l;
      Binomial g{c1, c2, n.complex(other), n.complex(lead)};
      g.validate();
      out.push_back(std::move(g));
    }
  }
  return out;
}

bool sign_condition(const PdscCertificate& cert) {
  for (const auto& b : cert.basis) {
    int sign = 0;
    for (const auto& q : b) {
      const int sq = sgn(q);
      if (sq == 0) continue;
      if (sign == 0)
        sign = sq;
      else if (sq != sign)
        return false;
    }
  }
  return true;
}

Squareness squareness_check(const Network& n, const PdscCertificate& cert) {
  Squareness sq;
  sq.binomials = n.complex_count() - cert.d;
  sq.conservation_laws = conservation_space(n).size();
  sq.species = n.species_count();
  sq.square = sq.binomials + sq.conservation_laws == sq.species;
  sq.one_terminal_per_linkage_class = linkage_structure(n).one_terminal_per_linkage_class();
  return sq;
}

}  // namespace crn
