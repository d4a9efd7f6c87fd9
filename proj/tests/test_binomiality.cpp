#include <doctest.h>

#include "crn/binomiality.hpp"
#include "crn/cycles.hpp"
#include "oracles.hpp"

#include <random>

using namespace crn;

namespace {

IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

RationalVector rv(std::initializer_list<Rational> xs) { return RationalVector(xs); }

std::vector<std::vector<std::size_t>> blocks_of(const std::vector<SupportBlock>& b) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& x : b) out.push_back(x.indices);
  return out;
}

// The generator's coefficient vector over the complexes lies in the row space
// of Sigma, i.e. the generator is a constant-coefficient combination of the ODEs.
bool in_ode_span(const Binomial& g, const Network& n, const RateAssignment& rates) {
  const RationalVector c = g.to_polynomial().coefficients_over(n.complexes());
  const RationalMatrix sigma = sigma_matrix(n, rates);
  std::vector<RationalVector> rows;
  for (std::size_t i = 0; i < sigma.rows(); ++i) rows.push_back(sigma.row(i));
  const std::size_t before = rank(RationalMatrix::from_rows(rows, n.complex_count()));
  rows.push_back(c);
  return rank(RationalMatrix::from_rows(rows, n.complex_count())) == before;
}

// First directed cycle over small lattice vectors that fails the kernel condition.
std::vector<IntVector> first_refusing_cycle() {
  for (std::size_t s = 1; s <= 4; ++s) {
    const auto pool = oracle::lattice_vectors(s, 2);
    std::vector<IntVector> found;
    oracle::for_each_cycle(pool.size(), 5, [&](const std::vector<std::size_t>& idx) {
      std::vector<IntVector> cycle;
      for (auto i : idx) cycle.push_back(pool[i]);
      if (!pdsc_check(oracle::cycle_network(cycle)).ok()) {
        found = cycle;
        return false;
      }
      return true;
    });
    if (!found.empty()) return found;
  }
  return {};
}

}  // namespace

TEST_CASE("support partition") {
  SUBCASE("full support gives one block") {
    const auto b = support_partition({rv({1, 2, 3, 4})}, 4);
    REQUIRE(b.size() == 1);
    CHECK(b[0].indices == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK(b[0].dimension == 1);
  }
  SUBCASE("kernel of the 4-cycle splits into odd and even complexes") {
    const Network n = soc_network(4);
    std::mt19937_64 rng(8);
    const auto k = kernel_basis(sigma_matrix(n, random_rates(n, rng)));
    const auto b = support_partition(k, 4);
    CHECK(blocks_of(b) == std::vector<std::vector<std::size_t>>{{0, 2}, {1, 3}});
  }
  SUBCASE("chained co-occurrence merges blocks") {
    const auto b = support_partition({rv({1, 1, 0}), rv({0, 1, 1})}, 3);
    REQUIRE(b.size() == 1);
    CHECK(b[0].dimension == 2);
  }
  SUBCASE("uncovered coordinates are unsupported singletons") {
    const auto b = support_partition({rv({0, 1, 1})}, 3);
    REQUIRE(b.size() == 2);
    CHECK(b[0].indices == std::vector<std::size_t>{0});
    CHECK_FALSE(b[0].supported());
    CHECK(b[1].supported());
  }
  SUBCASE("empty basis") {
    const auto b = support_partition({}, 2);
    CHECK(b.size() == 2);
    CHECK_FALSE(b[0].supported());
  }
}

TEST_CASE("support partition is a partition on random subspaces") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> entry(-1, 1);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = 2 + trial % 6;
    std::vector<RationalVector> vs(1 + trial % 3, RationalVector(m));
    for (auto& v : vs)
      for (auto& x : v) x = entry(rng);
    const auto blocks = support_partition(vs, m);
    std::vector<int> seen(m, 0);
    for (const auto& b : blocks)
      for (auto i : b.indices) ++seen[i];
    for (int c : seen) CHECK(c == 1);
    std::size_t total = 0;
    for (const auto& b : blocks) total += b.dimension;
    CHECK(total == rank(RationalMatrix::from_rows(vs, m)));
  }
}

TEST_CASE("kernel condition on the species-overlapping cycles") {
  SUBCASE("SOC_3 has one block carrying the inverse rates") {
    const auto out = pdsc_check(soc_network(3));
    REQUIRE(out.ok());
    const auto& cert = *out.certificate;
    CHECK(cert.d == 1);
    CHECK(cert.partition == std::vector<std::vector<std::size_t>>{{0, 1, 2}});
    const RationalVector kappa = cert.rates.per_reaction(soc_network(3));
    RationalVector inv;
    for (const auto& k : kappa) inv.push_back(1 / k);
    CHECK(same_span({cert.basis[0]}, {inv}, 3));
    CHECK(cert.basis[0][0] == 1);
  }
  SUBCASE("SOC_4 splits into two blocks") {
    const auto out = pdsc_check(soc_network(4));
    REQUIRE(out.ok());
    CHECK(out.certificate->d == 2);
    CHECK(out.certificate->partition == std::vector<std::vector<std::size_t>>{{0, 2}, {1, 3}});
  }
  SUBCASE("a network without complexes has a trivial kernel") {
    const auto out = pdsc_check(parse_network("species: A\n"));
    CHECK_FALSE(out.ok());
    CHECK(out.refusal.rfind("d = 0", 0) == 0);
  }
  SUBCASE("the generating-set network leaves complex A outside the kernel support") {
    const auto out = pdsc_check(load_network(CRN_FIXTURE_DIR "/genset.crn"));
    CHECK_FALSE(out.ok());
    CHECK(out.kernel_dimension == 1);
  }
}

TEST_CASE("the refusing cycle fixture is the first one found by search") {
  const auto cycle = first_refusing_cycle();
  REQUIRE_FALSE(cycle.empty());
  const Network fixture = load_network(CRN_FIXTURE_DIR "/non_pdsc_cycle.crn");
  CHECK(fixture.complexes() == cycle);
  CHECK(is_directed_cycle(fixture));
  const auto out = pdsc_check(fixture);
  CHECK_FALSE(out.ok());
  MESSAGE("refusal: " << out.refusal);
}

TEST_CASE("certificates do not depend on the rate sample") {
  for (const char* file : {"/soc4.crn", "/soc6.crn", "/disjoint_pairs.crn", "/intro.crn"}) {
    const Network n = load_network(std::string(CRN_FIXTURE_DIR) + file);
    const auto first = pdsc_check(n, {3, 0, 5});
    REQUIRE(first.ok());
    for (std::uint64_t seed = 1; seed < 8; ++seed) {
      const auto again = pdsc_check(n, {3, seed, 5});
      REQUIRE(again.ok());
      CHECK(again.certificate->partition == first.certificate->partition);
    }
  }
}

TEST_CASE("certificate invariants on random networks") {
  std::mt19937_64 rng(404);
  int certified = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Network n = oracle::random_network(3, 6, rng);
    const auto out = pdsc_check(n, {3, static_cast<std::uint64_t>(trial), 5});
    if (!out.ok()) continue;
    ++certified;
    const auto& cert = *out.certificate;
    const RationalMatrix sigma = sigma_matrix(n, cert.rates);
    std::vector<int> seen(n.complex_count(), 0);
    for (std::size_t j = 0; j < cert.d; ++j) {
      CHECK(is_zero(sigma * cert.basis[j]));
      for (std::size_t i = 0; i < n.complex_count(); ++i) {
        const bool in_block = std::count(cert.partition[j].begin(), cert.partition[j].end(), i) != 0;
        CHECK((cert.basis[j][i] != 0) == in_block);
      }
      for (auto i : cert.partition[j]) ++seen[i];
    }
    for (int c : seen) CHECK(c == 1);
    CHECK(rank(RationalMatrix::from_rows(cert.basis, n.complex_count())) == cert.d);

    const auto gens = binomial_generators(cert, n);
    CHECK(gens.size() == n.complex_count() - cert.d);
    for (const auto& g : gens) CHECK(in_ode_span(g, n, cert.rates));
  }
  CHECK(certified > 20);
}

TEST_CASE("binomial generators") {
  SUBCASE("SOC_3: the first generator is proportional to f_A") {
    const Network n = soc_network(3);
    const auto out = pdsc_check(n);
    REQUIRE(out.ok());
    const auto gens = binomial_generators(*out.certificate, n);
    REQUIRE(gens.size() == 2);
    const RateAssignment& k = out.certificate->rates;
    // f_A = k2 x_B x_C - k1 x_A x_B
    const RationalVector fa = {-k.at("k1"), k.at("k2"), 0};
    CHECK(same_span({gens[0].to_polynomial().coefficients_over(n.complexes())}, {fa}, 3));
    for (const auto& g : gens) CHECK(in_ode_span(g, n, k));
  }
  SUBCASE("A + B <-> 2C gives one binomial proportional to k1 x_A x_B - k2 x_C^2") {
    const Network n = load_network(CRN_FIXTURE_DIR "/intro.crn");
    const auto out = pdsc_check(n);
    REQUIRE(out.ok());
    const auto gens = binomial_generators(*out.certificate, n);
    REQUIRE(gens.size() == 1);
    const RateAssignment& k = out.certificate->rates;
    CHECK(same_span({gens[0].to_polynomial().coefficients_over(n.complexes())},
                    {rv({k.at("k1"), -k.at("k2")})}, 2));
    CHECK(gens[0].coeff1.get_den() == 1);
    CHECK(gens[0].coeff2.get_den() == 1);
  }
  SUBCASE("no reactions: d = m and no generators") {
    const Network n({"A", "B"}, {iv({1, 0}), iv({0, 1})}, {});
    const auto out = pdsc_check(n);
    REQUIRE(out.ok());
    CHECK(out.certificate->d == 2);
    CHECK(binomial_generators(*out.certificate, n).empty());
  }
}

TEST_CASE("sign condition") {
  for (std::size_t m = 3; m <= 8; ++m) {
    const auto out = pdsc_check(soc_network(m));
    REQUIRE(out.ok());
    CHECK(sign_condition(*out.certificate));
  }
  PdscCertificate mixed;
  mixed.d = 1;
  mixed.partition = {{0, 1}};
  mixed.basis = {rv({1, -1})};
  CHECK_FALSE(sign_condition(mixed));
}

TEST_CASE("squareness") {
  auto check = [](const Network& n, std::size_t binomials, std::size_t laws) {
    const auto out = pdsc_check(n);
    REQUIRE(out.ok());
    const Squareness sq = squareness_check(n, *out.certificate);
    CHECK(sq.binomials == binomials);
    CHECK(sq.conservation_laws == laws);
    CHECK(sq.square);
    CHECK(sq.one_terminal_per_linkage_class);
  };
  check(soc_network(5), 4, 1);
  check(soc_network(4), 2, 2);
  check(load_network(CRN_FIXTURE_DIR "/intro.crn"), 1, 2);
}

TEST_CASE("binomial validation") {
  CHECK_THROWS_AS((Binomial{0, 1, iv({1}), iv({0})}.validate()), ContractError);
  CHECK_THROWS_AS((Binomial{1, 1, iv({1}), iv({1})}.validate()), ContractError);
  CHECK_NOTHROW((Binomial{1, -1, iv({1}), iv({0})}.validate()));
}
