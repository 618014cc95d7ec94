#include <doctest.h>

#include <set>

#include "multbound/families.hpp"
#include "multbound/structure.hpp"

using namespace multbound;

namespace {

TableGroup table(const CorpusEntry& e) { return materialize_table(e.presentation); }

}  // namespace

TEST_CASE("family examples") {
  const CorpusEntry ab = parse_family_spec("abelian(3,9)");
  CHECK(ab.id == "abelian(9,3)");
  CHECK(ab.source == "builtin");
  const TableGroup a = table(ab);
  CHECK(a.order() == 27);
  CHECK(abelian_invariants(a) == AbelianType(3, {2, 1}));

  const TableGroup d8 = table(parse_family_spec("dihedral(8)"));
  CHECK(d8.order() == 8);
  CHECK(center(d8).order() == 2);

  const TableGroup w = table(parse_family_spec("wreath_pp(3)"));
  const GroupProfile pr = group_profile(w);
  CHECK(w.order() == 81);
  CHECK(pr.c == 3);
  CHECK(pr.flags.is_maximal_class);
}

TEST_CASE("families have the advertised shape") {
  struct Case {
    const char* spec;
    std::size_t order;
    int c;
    int z;
    int t;
  };
  for (const Case& k : {Case{"heisenberg(5)", 125, 2, 1, 0}, Case{"extraspecial(3,1,minus)", 27, 2, 1, 1},
                        Case{"extraspecial(3,2,plus)", 243, 2, 1, 0}, Case{"extraspecial(2,2,plus)", 32, 2, 1, 1},
                        Case{"extraspecial(2,2,minus)", 32, 2, 1, 1}, Case{"quaternion(16)", 16, 3, 1, 2},
                        Case{"semidihedral(16)", 16, 3, 1, 2}, Case{"dihedral(64)", 64, 5, 1, 4},
                        Case{"modular(2,4)", 16, 2, 2, 2}, Case{"modular(3,3)", 27, 2, 1, 1},
                        Case{"free_class2_exp_p(3,3)", 729, 2, 3, 0}, Case{"elementary(5,2)", 25, 1, 2, 0}}) {
    CAPTURE(k.spec);
    const GroupProfile pr = group_profile(table(parse_family_spec(k.spec)));
    CHECK(exact_log(k.order, pr.p) == pr.n);
    CHECK(pr.c == k.c);
    CHECK(pr.z == k.z);
    CHECK(pr.t == k.t);
  }
  // the two extraspecial 2-groups of order 32 differ in their number of involutions
  auto involutions = [](const TableGroup& g) {
    int count = 0;
    for (Elem x = 0; x < g.order(); ++x) count += g.log_elem_order(x) == 1;
    return count;
  };
  CHECK(involutions(table(parse_family_spec("extraspecial(2,2,plus)"))) == 19);
  CHECK(involutions(table(parse_family_spec("extraspecial(2,2,minus)"))) == 11);
  CHECK(involutions(table(parse_family_spec("quaternion(8)"))) == 1);
  CHECK(involutions(table(parse_family_spec("dihedral(8)"))) == 5);
}

TEST_CASE("family errors") {
  CHECK_THROWS_AS(parse_family_spec("nosuch(3)"), FamilyError);
  CHECK_THROWS_AS(parse_family_spec("dihedral(12)"), FamilyError);
  CHECK_THROWS_AS(parse_family_spec("dihedral(4)"), FamilyError);
  CHECK_THROWS_AS(parse_family_spec("semidihedral(8)"), FamilyError);
  CHECK_THROWS_AS(parse_family_spec("abelian(2,3)"), FamilyError);
  CHECK_THROWS_AS(parse_family_spec("heisenberg(4)"), FamilyError);
  CHECK_THROWS_AS(parse_family_spec("extraspecial(3,1,other)"), FamilyError);
  CHECK_THROWS_AS(parse_family_spec("free_class2_exp_p(2,3)"), FamilyError);
  CHECK_THROWS_AS(parse_family_spec("elementary(2,12)"), FamilyError);
  CHECK_THROWS_AS(parse_family_spec("wreath_pp(x)"), FamilyError);
  CHECK_THROWS_AS(builtin_family("modular", {2, 3}), FamilyError);
  CHECK_FALSE(is_family_spec("tests/data/foo.pc"));
  CHECK(is_family_spec("dihedral(8)"));
}

TEST_CASE("loading files and specs") {
  const CorpusEntry f = load_entry(MULTBOUND_TEST_DATA "/order81/maxclass_a.pc");
  CHECK(f.source == MULTBOUND_TEST_DATA "/order81/maxclass_a.pc");
  CHECK(table(f).order() == 81);
  CHECK(group_profile(table(f)).flags.is_maximal_class);
  CHECK(load_entry("quaternion(8)").id == "quaternion(8)");
  CHECK_THROWS(load_entry(MULTBOUND_TEST_DATA "/does_not_exist.pc"));
}

TEST_CASE("builtin corpus") {
  const auto corpus = builtin_corpus(128);
  std::set<std::string> ids;
  for (const auto& e : corpus) {
    CHECK(ids.insert(e.id).second);
    CHECK(table(e).order() <= 128);
  }
  for (std::size_t i = 1; i < corpus.size(); ++i) CHECK(corpus[i - 1].id < corpus[i].id);
  for (const char* id : {"dihedral(8)", "quaternion(8)", "heisenberg(3)", "heisenberg(5)", "wreath_pp(3)",
                         "extraspecial(2,3,minus)", "semidihedral(128)", "abelian(2,2,2,2,2,2,2)", "abelian(125)"})
    CHECK(ids.count(id) == 1);
  CHECK(ids.count("extraspecial(3,1,plus)") == 0);

  // all 15 groups of order 81 among p = 3 abelian groups, plus named ones
  std::size_t ab81 = 0;
  for (const auto& e : builtin_corpus(81, {"abelian"}))
    if (table(e).order() == 81) ++ab81;
  CHECK(ab81 == 5);

  const auto only = builtin_corpus(16, {"dihedral", "quaternion"});
  CHECK(only.size() == 4);
  CHECK_THROWS_AS(builtin_corpus(16, {"nosuch"}), FamilyError);

  const auto names = family_names();
  CHECK(names.size() == 10);
}
