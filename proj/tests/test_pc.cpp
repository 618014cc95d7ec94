#include <doctest.h>

#include <random>
#include <set>

#include "multbound/families.hpp"
#include "multbound/pc.hpp"
#include "multbound/table_group.hpp"

using namespace multbound;

namespace {

const char* kHeisenberg = "p 3\nn 3\ncomm 2 1 : g3 1\n";

NormalWord word(std::vector<int> e) { return NormalWord{std::move(e)}; }

}  // namespace

TEST_CASE("parse: cyclic group with default relations") {
  const PcPresentation pres = parse_presentation("p 3\nn 1\n");
  CHECK(pres.prime == 3);
  CHECK(pres.ngens == 1);
  CHECK(pres.powers[0].is_identity());
  CHECK(consistency_check(pres).consistent);
  CHECK(materialize_table(pres).order() == 3);
}

TEST_CASE("parse: heisenberg group has order 27") {
  const PcPresentation pres = parse_presentation(kHeisenberg);
  CHECK(consistency_check(pres).consistent);
  const TableGroup g = materialize_table(pres);
  CHECK(g.order() == 27);
  CHECK_FALSE(g.is_abelian());
}

TEST_CASE("parse: errors") {
  // commutator index order
  CHECK_THROWS_AS(parse_presentation("p 3\nn 2\ncomm 1 2 : g2 1\n"), ParseError);
  // right-hand side must use higher generators only
  CHECK_THROWS_AS(parse_presentation("p 3\nn 3\npow 2 : g1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("p 3\nn 3\ncomm 3 2 : g2 1\n"), ParseError);
  // exponents in [1, p-1]
  CHECK_THROWS_AS(parse_presentation("p 3\nn 2\npow 1 : g2 3\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("p 4\nn 1\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("p 3\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("p 3\nn 2\nfoo 1\n"), ParseError);
  try {
    parse_presentation("p 3\nn 2\n# fine\ncomm 1 2 : g2 1\n");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
}

TEST_CASE("parse: comments and format round trip") {
  const PcPresentation pres = parse_presentation("# c9 x c3\np 3  # prime\nn 3\npow 1 : g2 1\n\n");
  const PcPresentation again = parse_presentation(format_presentation(pres));
  CHECK(again.powers == pres.powers);
  CHECK(again.commutators == pres.commutators);
}

TEST_CASE("collect: normal forms") {
  const PcPresentation ab = PcPresentation::elementary(3, 2);
  const std::vector<int> w21 = {2, 1};
  CHECK(collect(w21, ab) == word({1, 1}));

  const PcPresentation heis = parse_presentation(kHeisenberg);
  CHECK(collect(w21, heis) == word({1, 1, 1}));

  const PcPresentation c9 = parse_presentation("p 3\nn 2\npow 1 : g2 1\n");
  const std::vector<int> w111 = {1, 1, 1};
  CHECK(collect(w111, c9) == word({0, 1}));

  const std::vector<int> inv = {-1, 1, -2, 2};
  CHECK(collect(inv, heis).is_identity());
}

TEST_CASE("collect is a projection") {
  const PcPresentation heis = parse_presentation(kHeisenberg);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> letter(1, 3), sign(0, 1), len(0, 12);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> w;
    for (int i = len(rng); i > 0; --i) w.push_back(sign(rng) ? letter(rng) : -letter(rng));
    const NormalWord once = collect(w, heis);
    const std::vector<int> again = letters_of(once);
    CHECK(collect(again, heis) == once);
  }
}

TEST_CASE("element arithmetic") {
  const PcPresentation c3 = PcPresentation::elementary(3, 1);
  CHECK(inverse(c3.generator(0), c3) == word({2}));

  const PcPresentation heis = parse_presentation(kHeisenberg);
  const NormalWord e = heis.identity();
  for (std::size_t i = 0; i < 27; ++i) {
    const NormalWord x = word_from_index(i, 3, 3);
    CHECK(multiply(e, x, heis) == x);
    CHECK(multiply(x, e, heis) == x);
    CHECK(multiply(x, inverse(x, heis), heis).is_identity());
    CHECK(power(x, 3, heis).is_identity());
    CHECK(word_index(x, 3) == i);
  }
  const NormalWord g1 = heis.generator(0), g2 = heis.generator(1);
  CHECK(multiply(g1, g2, heis) != multiply(g2, g1, heis));
  // g2 g1 = g1 g2 [g2, g1]
  CHECK(multiply(g2, g1, heis) == multiply(multiply(g1, g2, heis), heis.generator(2), heis));

  const PcPresentation c9 = parse_presentation("p 3\nn 2\npow 1 : g2 1\n");
  CHECK(power(c9.generator(0), 3, c9) == c9.generator(1));
  CHECK(power(c9.generator(0), 9, c9).is_identity());
  CHECK(power(c9.generator(0), -1, c9) == inverse(c9.generator(0), c9));
}

TEST_CASE("commutators") {
  const PcPresentation heis = parse_presentation(kHeisenberg);
  const NormalWord g1 = heis.generator(0), g2 = heis.generator(1);
  CHECK(commutator(g1, g1, heis).is_identity());
  CHECK(commutator(g2, g1, heis) == heis.generator(2));

  const PcPresentation ab = parse_presentation("p 2\nn 3\npow 1 : g2 1\n");
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b)
      CHECK(commutator(word_from_index(a, 2, 3), word_from_index(b, 2, 3), ab).is_identity());

  // [x, y][y, x] = 1 on random pairs of a class-3 group
  const PcPresentation wr = builtin_family("wreath_pp", {3}).presentation;
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::size_t> pick(0, 80);
  for (int trial = 0; trial < 100; ++trial) {
    const NormalWord x = word_from_index(pick(rng), 3, 4), y = word_from_index(pick(rng), 3, 4);
    CHECK(multiply(commutator(x, y, wr), commutator(y, x, wr), wr).is_identity());
  }
}

TEST_CASE("consistency check") {
  CHECK(consistency_check(parse_presentation(kHeisenberg)).consistent);
  CHECK(consistency_check(PcPresentation::elementary(5, 3)).consistent);

  // [g2, g1] = g2^2 is not a word in higher generators, so it never reaches the overlap tests
  CHECK_THROWS_AS(parse_presentation("p 3\nn 2\npow 1 : g2 1\ncomm 2 1 : g2 2\n"), ParseError);

  // g2 = g1^3 must commute with g1
  const ConsistencyResult bad = consistency_check(parse_presentation("p 3\nn 3\npow 1 : g2 1\ncomm 2 1 : g3 1\n"));
  CHECK_FALSE(bad.consistent);
  CHECK_FALSE(bad.failing_test.empty());
  REQUIRE(bad.lhs);
  REQUIRE(bad.rhs);
  CHECK(*bad.lhs != *bad.rhs);

  const ConsistencyResult file = consistency_check(read_presentation_file(MULTBOUND_TEST_DATA "/invalid/inconsistent.pc"));
  CHECK_FALSE(file.consistent);
  CHECK_THROWS_AS(materialize_table(read_presentation_file(MULTBOUND_TEST_DATA "/invalid/inconsistent.pc")),
                  GroupError);
}

TEST_CASE("builtin families are consistent and have distinct normal words") {
  for (const auto& e : builtin_corpus(128)) {
    CAPTURE(e.id);
    REQUIRE(consistency_check(e.presentation).consistent);
    const TableGroup g = materialize_table(e.presentation);
    std::size_t expect = 1;
    for (int i = 0; i < e.presentation.ngens; ++i) expect *= static_cast<std::size_t>(e.presentation.prime);
    CHECK(g.order() == expect);
    CHECK(g.associativity_failures(1000, 99) == 0);
    std::set<NormalWord> words(g.labels()->begin(), g.labels()->end());
    CHECK(words.size() == expect);
  }
}

TEST_CASE("materialize: tables") {
  const TableGroup c3 = materialize_table(PcPresentation::elementary(3, 1));
  for (Elem a = 0; a < 3; ++a)
    for (Elem b = 0; b < 3; ++b) CHECK(c3.mul(a, b) == (a + b) % 3);

  const TableGroup wr = materialize_table(builtin_family("wreath_pp", {3}).presentation);
  CHECK(wr.order() == 81);
  CHECK_FALSE(wr.is_abelian());

  CHECK_THROWS_AS(materialize_table(PcPresentation::elementary(2, 12)), GroupError);
  CHECK(materialize_table(PcPresentation::elementary(2, 12), 4096).order() == 4096);
}

TEST_CASE("direct product") {
  const PcPresentation heis = parse_presentation(kHeisenberg);
  const PcPresentation prod = direct_product(heis, PcPresentation::elementary(3, 1));
  CHECK(prod.ngens == 4);
  CHECK(consistency_check(prod).consistent);
  CHECK(materialize_table(prod).order() == 81);
  CHECK_THROWS(direct_product(heis, PcPresentation::elementary(2, 1)));
}
