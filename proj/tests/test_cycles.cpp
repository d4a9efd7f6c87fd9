#include <doctest.h>

#include "crn/binomiality.hpp"
#include "crn/cycles.hpp"
#include "crn/partition_mv.hpp"
#include "crn/polyhedral.hpp"
#include "oracles.hpp"

using namespace crn;

namespace {

IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

using Colors = std::vector<std::size_t>;

}  // namespace

TEST_CASE("species-overlapping cycles") {
  const Network n4 = soc_network(4);
  CHECK(n4.species() == std::vector<std::string>{"A", "B", "C", "D"});
  CHECK(format_network(n4).find("A + B -> B + C ; k1") != std::string::npos);
  CHECK(n4.complexes() ==
        std::vector<IntVector>{iv({1, 1, 0, 0}), iv({0, 1, 1, 0}), iv({0, 0, 1, 1}), iv({1, 0, 0, 1})});
  const Network n3 = soc_network(3);
  CHECK(n3.complexes() == std::vector<IntVector>{iv({1, 1, 0}), iv({0, 1, 1}), iv({1, 0, 1})});
  CHECK(n3.complexes() == load_network(CRN_FIXTURE_DIR "/soc3.crn").complexes());
  CHECK(soc_network(27).species()[26] == "X27");
  CHECK_THROWS_AS(soc_network(2), ContractError);
}

TEST_CASE("cycle detection") {
  CHECK(is_directed_cycle(soc_network(5)));
  CHECK(is_directed_cycle(load_network(CRN_FIXTURE_DIR "/intro.crn")));
  CHECK_FALSE(is_directed_cycle(load_network(CRN_FIXTURE_DIR "/edelstein.crn")));
  CHECK_FALSE(is_directed_cycle(load_network(CRN_FIXTURE_DIR "/disjoint_pairs.crn")));
  CHECK_FALSE(is_directed_cycle(load_network(CRN_FIXTURE_DIR "/genset.crn")));

  // Reactions listed out of order still form one cycle.
  const Network shuffled = parse_network("species: A B C\nB -> C ; k2\nA -> B ; k1\nC -> A ; k3\n");
  CHECK(is_directed_cycle(shuffled));
  CHECK(cycle_order(shuffled) == std::vector<std::size_t>{0, 2, 1});
}

TEST_CASE("colorings from the kernel certificate") {
  const auto c4 = cycle_coloring(soc_network(4));
  REQUIRE(c4.coloring.has_value());
  CHECK(c4.coloring->colors == Colors{1, 2, 1, 2});
  CHECK(c4.coloring->count() == 2);

  const auto c5 = cycle_coloring(soc_network(5));
  REQUIRE(c5.coloring.has_value());
  CHECK(c5.coloring->colors == Colors{1, 1, 1, 1, 1});

  const auto refused = cycle_coloring(load_network(CRN_FIXTURE_DIR "/non_pdsc_cycle.crn"));
  CHECK_FALSE(refused.coloring.has_value());
  CHECK_FALSE(refused.refusal.empty());

  CHECK_THROWS_AS(cycle_coloring(load_network(CRN_FIXTURE_DIR "/edelstein.crn")), ContractError);
}

TEST_CASE("verifying colorings") {
  const Network n4 = soc_network(4);
  const ColoringCheck good = verify_coloring(n4, {{1, 2, 1, 2}});
  CHECK(good.valid);
  REQUIRE(good.colors.size() == 2);
  CHECK(good.colors[0].head_sum == iv({1, 1, 1, 1}));
  CHECK(good.colors[0].tail_sum == iv({1, 1, 1, 1}));
  // Color 1 covers y1 -> y2 and y3 -> y4: heads y1, y3, tails y2, y4 (0-based 0, 2 and 1, 3).
  CHECK(good.colors[0].heads == std::vector<std::size_t>{0, 2});
  CHECK(good.colors[0].tails == std::vector<std::size_t>{1, 3});

  const ColoringCheck bad = verify_coloring(n4, {{1, 1, 2, 2}});
  CHECK_FALSE(bad.valid);
  CHECK(bad.colors[0].heads == std::vector<std::size_t>{0});
  CHECK(bad.colors[0].tails == std::vector<std::size_t>{2});
  CHECK(bad.colors[0].head_sum == iv({1, 1, 0, 0}));
  CHECK(bad.colors[0].tail_sum == iv({0, 0, 1, 1}));

  const ColoringCheck single = verify_coloring(soc_network(3), {{1, 1, 1}});
  CHECK(single.valid);
  CHECK(single.colors[0].heads.empty());
  CHECK(single.colors[0].tails.empty());

  CHECK_THROWS_AS(verify_coloring(n4, {{1, 2, 1}}), ContractError);
  CHECK_THROWS_AS(verify_coloring(n4, {{1, 3, 1, 3}}), ContractError);
  CHECK_THROWS_AS(verify_coloring(n4, {{0, 1, 1, 1}}), ContractError);
  CHECK_THROWS_AS(verify_coloring(load_network(CRN_FIXTURE_DIR "/genset.crn"), {{1, 1, 1}}), ContractError);
}

TEST_CASE("closed-form mixed volume") {
  CHECK(soc_closed_form_mv(3) == 1);
  CHECK(soc_closed_form_mv(7) == 1);
  CHECK(soc_closed_form_mv(8) == 4);
  CHECK_THROWS_AS(soc_closed_form_mv(2), ContractError);
}

TEST_CASE("cycle colorings agree with an exhaustive search") {
  // Small sweep; the acceptance run covers the full range.
  const auto pool = oracle::lattice_vectors(2, 2);
  std::size_t cycles = 0, certified = 0;
  oracle::for_each_cycle(pool.size(), 4, [&](const std::vector<std::size_t>& idx) {
    std::vector<IntVector> complexes;
    for (auto i : idx) complexes.push_back(pool[i]);
    const Network n = oracle::cycle_network(complexes);
    const auto pdsc = pdsc_check(n);
    const auto col = cycle_coloring(n);
    CHECK(pdsc.ok() == col.coloring.has_value());
    ++cycles;
    if (col.coloring) {
      ++certified;
      CHECK(verify_coloring(n, *col.coloring).valid);
      CHECK(oracle::balanced_coloring_exists(complexes, col.coloring->count()));
      CHECK(sign_condition(*col.certificate));
    }
    return true;
  });
  CHECK(cycles > 100);
  CHECK(certified > 10);
}

TEST_CASE("closed form matches the determinant and the oracles") {
  for (std::size_t m = 3; m <= 12; ++m) {
    CAPTURE(m);
    const Network n = soc_network(m);
    const auto pdsc = pdsc_check(n);
    REQUIRE(pdsc.ok());
    const auto gens = binomial_generators(*pdsc.certificate, n);
    const auto part = partitionable_check(n, gens);
    REQUIRE(part.ok());
    const Integer det = fast_mixed_volume(*part.certificate, gens).value;
    CHECK(det == soc_closed_form_mv(m));
    if (m <= 6) {
      const auto configs = binomial_system(*part.certificate, gens);
      CHECK(mixed_volume_ie(configs) == Rational(det));
      CHECK(mixed_volume_cells(configs, m) == Rational(det));
    }
  }
}
