#include <doctest.h>

#include "crn/cycles.hpp"
#include "crn/network.hpp"
#include "crn/polynomial.hpp"
#include "oracles.hpp"

#include <random>

using namespace crn;

namespace {

const char* kIntro = "species: A B C\nA + B -> 2 C ; k1\n2 C -> A + B ; k2\n";

IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

RationalVector rv(std::initializer_list<long> xs) {
  RationalVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

std::vector<RationalVector> laws_of(const Network& n) {
  std::vector<RationalVector> out;
  for (const auto& law : conservation_space(n)) out.push_back(law.w);
  return out;
}

std::size_t parse_error_line(const std::string& text) {
  try {
    parse_network(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("parsing the reversible pair A + B <-> 2C") {
  const Network n = parse_network(kIntro);
  CHECK(n.species_count() == 3);
  CHECK(n.complex_count() == 2);
  CHECK(n.reaction_count() == 2);
  CHECK(n.complex(0) == iv({1, 1, 0}));
  CHECK(n.complex(1) == iv({0, 0, 2}));
  CHECK(n.reactions()[1].rate_label == "k2");
}

TEST_CASE("parsing the 4-cycle file") {
  const Network n = load_network(CRN_FIXTURE_DIR "/soc4.crn");
  CHECK(n.complex_count() == 4);
  CHECK(n.species_count() == 4);
  CHECK(n.reaction_count() == 4);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(parse_error_line("species: A\nA -> A ; k\n") == 2);
  CHECK(parse_error_line("species: A B\n\n# c\nA -> Z ; k\n") == 4);
  CHECK(parse_error_line("species: A B\nA -> 0 B ; k\n") == 2);
  CHECK(parse_error_line("species: A B\nA -> -1 B ; k\n") == 2);
  CHECK(parse_error_line("species: A B\nA -> B\n") == 2);
  CHECK(parse_error_line("species: A B\nA <-> B ; k\n") == 2);
  CHECK(parse_error_line("species: A B\nA -> B ; k1\nA -> B ; k2\n") == 3);
  CHECK(parse_error_line("species: A B\nA -> B ; k1\nB -> A ; k1\n") == 3);
  CHECK(parse_error_line("A -> B ; k1\n") == 1);
  CHECK(parse_error_line("species: A A\n") == 1);
}

TEST_CASE("the zero complex and comments are accepted") {
  const Network n = parse_network("# inflow\nspecies: A\n0 -> A ; k1 # in\nA -> 0 ; k2\n");
  CHECK(n.complex_count() == 2);
  CHECK(n.complex(0) == iv({0}));
  CHECK(n.complex_name(0) == "0");
}

TEST_CASE("the network constructor enforces its invariants") {
  CHECK_THROWS_AS(Network({"A"}, {iv({1}), iv({1})}, {}), ContractError);
  CHECK_THROWS_AS(Network({"A"}, {iv({1})}, {{0, 0, "k"}}), ContractError);
  CHECK_THROWS_AS(Network({"A"}, {iv({-1})}, {}), ContractError);
  CHECK_THROWS_AS(Network({"A"}, {iv({1}), iv({2})}, {{0, 2, "k"}}), ContractError);
}

TEST_CASE("format_network round-trips") {
  for (const Network& n : {parse_network(kIntro), soc_network(5), load_network(CRN_FIXTURE_DIR "/edelstein.crn")}) {
    const Network back = parse_network(format_network(n));
    CHECK(back.complexes() == n.complexes());
    CHECK(back.species() == n.species());
    CHECK(back.rate_labels() == n.rate_labels());
  }
}

TEST_CASE("rate assignments") {
  RateAssignment r;
  CHECK_THROWS_AS(r.set("k", 0), ContractError);
  CHECK_THROWS_AS(r.set("k", -1), ContractError);
  r.set("k1", 3);
  CHECK_THROWS_AS(sigma_matrix(parse_network(kIntro), r), ContractError);
  std::mt19937_64 rng(1);
  const RateAssignment random = random_rates(soc_network(4), rng);
  for (const auto& [label, value] : random.values()) {
    CHECK(value >= 1);
    CHECK(value <= 65536);
    CHECK(value.get_den() == 1);
  }
}

TEST_CASE("complex matrix") {
  const IntegerMatrix y = complex_matrix(parse_network(kIntro));
  CHECK(y == IntegerMatrix{{1, 0}, {1, 0}, {0, 2}});

  const IntegerMatrix y5 = complex_matrix(soc_network(5));
  for (std::size_t i = 0; i < 5; ++i)
    CHECK(y5.column(i) == unit_vector(5, i) + unit_vector(5, (i + 1) % 5));

  const Network single({"A"}, {iv({1})}, {});
  CHECK(complex_matrix(single) == IntegerMatrix{{1}});
}

TEST_CASE("complex-to-species rate matrix") {
  const Network intro = parse_network(kIntro);
  RateAssignment k;
  k.set("k1", 3);
  k.set("k2", 5);
  CHECK(sigma_matrix(intro, k) == RationalMatrix{{-3, 5}, {-3, 5}, {6, -10}});

  // SOC_3 with unit rates: rows carry the coefficients of f_A, f_B, f_C.
  const Network soc3 = soc_network(3);
  const RationalMatrix sigma = sigma_matrix(soc3, unit_rates(soc3));
  // f_A = k2 x_B x_C - k1 x_A x_B; complexes are A+B, B+C, C+A.
  CHECK(sigma.row(0) == rv({-1, 1, 0}));
  CHECK(sigma.row(1) == rv({0, -1, 1}));
  const auto odes = ode_polynomials(soc3, unit_rates(soc3));
  Polynomial fa(3);
  fa.add_term(1, iv({0, 1, 1}));
  fa.add_term(-1, iv({1, 1, 0}));
  CHECK(odes[0] == fa);
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(odes[i].coefficients_over(soc3.complexes()) == sigma.row(i));
}

TEST_CASE("stoichiometric matrix") {
  CHECK(stoichiometric_matrix(parse_network(kIntro)) == IntegerMatrix{{-1, 1}, {-1, 1}, {2, -2}});

  const IntegerMatrix n4 = stoichiometric_matrix(soc_network(4));
  for (std::size_t i = 0; i < 4; ++i) {
    IntVector expected = unit_vector(4, (i + 2) % 4) - unit_vector(4, i);
    CHECK(n4.column(i) == expected);
  }

  const Network one({"A", "B"}, {iv({1, 0}), iv({0, 1})}, {{0, 1, "k"}});
  CHECK(stoichiometric_matrix(one) == IntegerMatrix{{-1}, {1}});
}

TEST_CASE("conservation space") {
  const auto intro = laws_of(parse_network(kIntro));
  CHECK(intro.size() == 2);
  CHECK(same_span(intro, {rv({1, -1, 0}), rv({0, 2, 1})}, 3));

  CHECK(same_span(laws_of(soc_network(3)), {rv({1, 1, 1})}, 3));
  const auto soc4 = laws_of(soc_network(4));
  CHECK(soc4.size() == 2);
  CHECK(same_span(soc4, {rv({1, 0, 1, 0}), rv({0, 1, 0, 1})}, 4));

  const auto laws = conservation_space(parse_network(kIntro));
  CHECK(laws[0].constant == "c1");
  CHECK(laws[1].constant == "c2");
}

TEST_CASE("linkage classes and terminal classes") {
  const auto cycle = linkage_structure(soc_network(6));
  CHECK(cycle.linkage_count() == 1);
  CHECK(cycle.terminal_count() == 1);
  CHECK(cycle.terminal_classes[0][0].size() == 6);

  const auto edel = linkage_structure(load_network(CRN_FIXTURE_DIR "/edelstein.crn"));
  CHECK(edel.linkage_count() == 2);

  const auto intro = linkage_structure(parse_network(kIntro));
  CHECK(intro.linkage_count() == 1);
  CHECK(intro.terminal_count() == 1);

  // A -> B, A -> C: two terminal classes in one linkage class.
  const Network fork({"A", "B", "C"}, {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})},
                     {{0, 1, "k1"}, {0, 2, "k2"}});
  const auto f = linkage_structure(fork);
  CHECK(f.linkage_count() == 1);
  CHECK(f.terminal_count() == 2);
  CHECK_FALSE(f.one_terminal_per_linkage_class());
}

TEST_CASE("deficiency") {
  const Network intro = parse_network(kIntro);
  const Deficiency d = deficiency(intro, unit_rates(intro));
  CHECK(d.kernel == 0);
  CHECK(d.combinatorial == 0);
  CHECK(d.agree);

  // SOC_5: the five columns e_{i+2} - e_i span the sum-zero hyperplane, so rank N = 4.
  const Network soc5 = soc_network(5);
  std::mt19937_64 rng(3);
  const Deficiency d5 = deficiency(soc5, random_rates(soc5, rng));
  CHECK(d5.combinatorial == 5 - 1 - 4);
  CHECK(d5.kernel == d5.combinatorial);
  CHECK(d5.agree);

  CHECK(linkage_structure(load_network(CRN_FIXTURE_DIR "/disjoint_pairs.crn")).linkage_count() == 2);
  const Network edel = load_network(CRN_FIXTURE_DIR "/edelstein.crn");
  CHECK(deficiency(edel, unit_rates(edel)).combinatorial == 1);
}

TEST_CASE("matrix identities on random networks") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 150; ++trial) {
    const Network n = oracle::random_network(4, 8, rng);
    const RateAssignment k = random_rates(n, rng);
    const RationalMatrix a = laplacian_transpose(n, k);
    const IntegerMatrix y = complex_matrix(n);
    const RationalMatrix sigma = sigma_matrix(n, k);
    const std::size_t m = n.complex_count();

    for (std::size_t j = 0; j < m; ++j) {
      Rational col = 0;
      for (std::size_t i = 0; i < m; ++i) col += a(i, j);
      CHECK(col == 0);
    }
    for (std::size_t i = 0; i < n.species_count(); ++i)
      for (std::size_t j = 0; j < m; ++j) {
        Rational e = 0;
        for (std::size_t t = 0; t < m; ++t) e += Rational(y(i, t)) * a(t, j);
        CHECK(sigma(i, j) == e);
      }

    const IntegerMatrix nm = stoichiometric_matrix(n);
    for (const auto& law : conservation_space(n)) {
      CHECK_FALSE(is_zero(law.w));
      CHECK(is_zero(to_rational(nm).transpose() * law.w));
    }

    const auto links = linkage_structure(n);
    CHECK(m - rank(a) == links.terminal_count());
    const Deficiency d = deficiency(n, k);
    if (links.one_terminal_per_linkage_class()) CHECK(d.agree);
  }
}
