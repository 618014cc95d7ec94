#include <doctest.h>

#include <filesystem>
#include <map>

#include "multbound/families.hpp"
#include "multbound/structure.hpp"

using namespace multbound;

namespace {

TableGroup family(const std::string& spec) { return materialize_table(parse_family_spec(spec).presentation); }

std::vector<std::size_t> orders(const std::vector<Subgroup>& series) {
  std::vector<std::size_t> out;
  for (const auto& s : series) out.push_back(s.order());
  return out;
}

// Abelian type by brute force: try every sorted exponent list of the right
// size and compare element-order counts with the direct sum.
AbelianType brute_type(const TableGroup& g) {
  std::map<int, std::size_t> counts;
  for (Elem x = 0; x < g.order(); ++x) counts[g.log_elem_order(x)]++;
  const int n = g.log_order();
  std::vector<std::vector<int>> parts;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, int maxpart) -> void {
    if (left == 0) {
      parts.push_back(cur);
      return;
    }
    for (int a = std::min(left, maxpart); a >= 1; --a) {
      cur.push_back(a);
      self(self, left - a, a);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  for (const auto& part : parts) {
    // #{x : x^{p^j} = 1} in the direct sum is p^{sum min(a_i, j)}
    std::map<int, std::size_t> c;
    std::size_t prev = 1;
    for (int j = 1; j <= n; ++j) {
      std::size_t omega = 1;
      for (int a : part)
        for (int s = 0; s < std::min(a, j); ++s) omega *= static_cast<std::size_t>(g.prime());
      c[j] = omega - prev;
      prev = omega;
    }
    c[0] = 1;
    bool same = true;
    for (int j = 0; j <= n; ++j) same &= (counts.count(j) ? counts[j] : 0) == (c.count(j) ? c[j] : 0);
    if (same) return AbelianType(g.prime(), part);
  }
  return {};
}

}  // namespace

TEST_CASE("center") {
  const TableGroup ab = family("abelian(9,3)");
  CHECK(center(ab) == whole_group(ab));

  const TableGroup heis = family("heisenberg(3)");
  const Subgroup z = center(heis);
  CHECK(z.order() == 3);
  CHECK(z == lower_central_series(heis)[1]);

  const TableGroup d8 = family("dihedral(8)");
  CHECK(center(d8).order() == 2);

  // direct scan
  for (const auto& spec : {"dihedral(16)", "quaternion(16)", "wreath_pp(3)", "extraspecial(2,2,minus)"}) {
    const TableGroup g = family(spec);
    std::size_t count = 0;
    for (Elem x = 0; x < g.order(); ++x) {
      bool central = true;
      for (Elem y = 0; y < g.order() && central; ++y) central = g.mul(x, y) == g.mul(y, x);
      count += central;
      CHECK(center(g).contains(x) == central);
    }
    CHECK(center(g).order() == count);
  }
}

TEST_CASE("lower central series") {
  CHECK(orders(lower_central_series(family("abelian(4,2)"))) == std::vector<std::size_t>{8, 1});
  CHECK(orders(lower_central_series(family("heisenberg(3)"))) == std::vector<std::size_t>{27, 3, 1});
  CHECK(orders(lower_central_series(family("wreath_pp(3)"))) == std::vector<std::size_t>{81, 9, 3, 1});
  CHECK(orders(lower_central_series(family("dihedral(32)"))) == std::vector<std::size_t>{32, 8, 4, 2, 1});
  CHECK(orders(lower_central_series(TableGroup::trivial(2))) == std::vector<std::size_t>{1});
}

TEST_CASE("frattini and agemo") {
  const TableGroup e9 = family("elementary(3,2)");
  const FrattiniAgemo fe = frattini_agemo(e9);
  CHECK(fe.frattini.is_trivial());
  CHECK(fe.agemo.is_trivial());
  CHECK(min_generators(e9) == 2);

  const TableGroup m27 = family("extraspecial(3,1,minus)");
  const FrattiniAgemo fm = frattini_agemo(m27);
  CHECK(fm.agemo == center(m27));
  CHECK(fm.agemo.order() == 3);

  const TableGroup heis = family("heisenberg(3)");
  const FrattiniAgemo fh = frattini_agemo(heis);
  CHECK(fh.agemo.is_trivial());
  CHECK(fh.frattini == lower_central_series(heis)[1]);
}

TEST_CASE("quotients") {
  const TableGroup heis = family("heisenberg(3)");
  CHECK(quotient(heis, whole_group(heis)).group.order() == 1);

  const Quotient hz = quotient(heis, center(heis));
  CHECK(hz.group.order() == 9);
  CHECK(hz.group.is_abelian());
  CHECK(abelian_invariants(hz.group) == AbelianType(3, {1, 1}));

  const TableGroup d8 = family("dihedral(8)");
  const Quotient dz = quotient(d8, center(d8));
  CHECK(abelian_invariants(dz.group) == AbelianType(2, {1, 1}));
  for (Elem a = 0; a < 8; ++a)
    for (Elem b = 0; b < 8; ++b) CHECK(dz.projection[d8.mul(a, b)] == dz.group.mul(dz.projection[a], dz.projection[b]));

  // a non-normal subgroup of D8: a reflection
  Elem refl = 0;
  for (Elem x = 0; x < 8; ++x)
    if (x != d8.identity() && d8.mul(x, x) == d8.identity() && !center(d8).contains(x)) refl = x;
  const std::vector<Elem> gens = {refl};
  const Subgroup s = generated_subgroup(d8, gens);
  CHECK_FALSE(is_normal(d8, s));
  CHECK_THROWS_AS(quotient(d8, s), GroupError);
}

TEST_CASE("abelian invariants") {
  CHECK(abelian_invariants(family("abelian(9)")) == AbelianType(3, {2}));
  CHECK(abelian_invariants(quotient(family("heisenberg(3)"), lower_central_series(family("heisenberg(3)"))[1]).group) ==
        AbelianType(3, {1, 1}));
  const TableGroup d8 = family("dihedral(8)");
  CHECK(abelian_invariants(quotient(d8, lower_central_series(d8)[1]).group) == AbelianType(2, {1, 1}));
  CHECK_THROWS_AS(abelian_invariants(d8), GroupError);

  for (const auto& e : builtin_corpus(81, {"abelian"})) {
    CAPTURE(e.id);
    const TableGroup g = materialize_table(e.presentation);
    const AbelianType t = abelian_invariants(g);
    CHECK(t.log_order() == g.log_order());
    CHECK(t == brute_type(g));
  }
}

TEST_CASE("profiles") {
  const GroupProfile e27 = group_profile(family("elementary(3,3)"));
  CHECK(e27.n == 3);
  CHECK(e27.k == 0);
  CHECK(e27.d == 3);
  CHECK(e27.c == 1);
  CHECK(e27.flags.is_abelian);

  const GroupProfile h = group_profile(family("heisenberg(3)"));
  CHECK(h.n == 3);
  CHECK(h.k == 1);
  CHECK(h.d == 2);
  CHECK(h.c == 2);
  CHECK(h.delta == 2);
  CHECK(h.gamma == 1);
  CHECK(h.t == 0);
  CHECK(h.flags.is_special);
  CHECK(h.flags.is_maximal_class);  // c = n - 1 at order p^3

  const GroupProfile w = group_profile(family("wreath_pp(3)"));
  CHECK(w.n == 4);
  CHECK(w.k == 2);
  CHECK(w.d == 2);
  CHECK(w.c == 3);
  CHECK(w.delta == 2);
  CHECK(w.gamma == 1);
  CHECK(w.flags.is_maximal_class);

  const GroupProfile q8 = group_profile(family("quaternion(8)"));
  CHECK(q8.t == 1);
  CHECK(q8.flags.has_Gp_in_gamma2);
  CHECK(q8.flags.has_Gp_cyclic_p);
  CHECK(q8.flags.has_Gp_equal_gamma2);
}

TEST_CASE("profile invariants over the corpus") {
  std::vector<std::string> files;
  for (const auto& f : std::filesystem::directory_iterator(MULTBOUND_TEST_DATA "/order81")) files.push_back(f.path());
  std::vector<CorpusEntry> entries = builtin_corpus(128);
  for (const auto& f : files) entries.push_back(load_entry(f));
  for (const auto& e : entries) {
    CAPTURE(e.id);
    const TableGroup g = materialize_table(e.presentation);
    const GroupProfile pr = group_profile(g);
    const auto lcs = lower_central_series(g);
    CHECK(1 <= pr.d);
    CHECK(pr.d <= pr.n - pr.k);
    CHECK(pr.delta <= pr.d);
    CHECK(pr.gamma <= pr.k);
    CHECK(pr.flags.is_maximal_class == (pr.n >= 2 && pr.c == pr.n - 1));
    if (pr.flags.is_abelian) continue;
    CHECK(pr.k < pr.n);
    CHECK(pr.mu() >= 2);
    CHECK(pr.nu() >= 2);
    if (pr.c == 2) {
      CHECK(lcs[1].is_subset_of(center(g)));
      if (pr.flags.has_Gp_in_gamma2) {
        CHECK(pr.gamma == pr.k);
        CHECK(abelian_invariants(g, lcs[1]).is_elementary());
      }
    }
    // gamma_i(G/Z) = gamma_i(G)Z/Z
    const Quotient q = quotient(g, center(g));
    const auto qlcs = lower_central_series(q.group);
    for (std::size_t i = 0; i < qlcs.size(); ++i) {
      const Subgroup gz = join(g, lcs[i], center(g));
      CHECK(qlcs[i].order() * center(g).order() == gz.order());
    }
  }
}
