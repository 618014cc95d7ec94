#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "multbound/cohomology.hpp"
#include "multbound/ellis_wiegold.hpp"
#include "multbound/families.hpp"

using namespace multbound;

namespace {

struct Fixture {
  PcPresentation pres;
  TableGroup g;
  explicit Fixture(const std::string& spec)
      : pres(parse_family_spec(spec).presentation), g(materialize_table(pres)) {}
  Elem gen(int i) const { return static_cast<Elem>(word_index(pres.generator(i), pres.prime)); }
};

std::vector<Elem> central_times_derived(const EllisWiegoldContext& ctx) {
  const Subgroup n = join(ctx.group(), ctx.center(), ctx.lower_central()[1]);
  return {n.elements().begin(), n.elements().end()};
}

}  // namespace

TEST_CASE("section basis coordinates are additive and bijective") {
  for (const auto& spec : {"heisenberg(3)", "dihedral(16)", "wreath_pp(3)", "modular(3,4)", "abelian(4,2)"}) {
    CAPTURE(spec);
    Fixture f(spec);
    const auto lcs = lower_central_series(f.g);
    const Subgroup h = whole_group(f.g);
    const Subgroup k = lcs.size() > 1 ? lcs[1] : trivial_subgroup(f.g);
    const SectionBasis b(f.g, h, k);
    CHECK(b.type().log_order() + exact_log(k.order(), f.g.prime()) == f.g.log_order());
    CHECK(b.basis().size() == b.type().exps.size());
    std::set<std::vector<int>> seen;
    for (Elem x = 0; x < f.g.order(); ++x) {
      seen.insert(b.coords(x));
      CHECK(b.coords(b.element(b.coords(x))) == b.coords(x));
      for (Elem y = 0; y < f.g.order(); y += 3) {
        const auto& cx = b.coords(x);
        const auto& cy = b.coords(y);
        const auto& cxy = b.coords(f.g.mul(x, y));
        for (std::size_t i = 0; i < cx.size(); ++i) {
          int mod = 1;
          for (int s = 0; s < b.type().exps[i]; ++s) mod *= f.g.prime();
          CHECK(cxy[i] == (cx[i] + cy[i]) % mod);
        }
      }
    }
    std::size_t expect = 1;
    for (int s = 0; s < b.type().log_order(); ++s) expect *= static_cast<std::size_t>(f.g.prime());
    CHECK(seen.size() == expect);
  }
}

TEST_CASE("tensor elements") {
  Fixture f("heisenberg(3)");
  const EllisWiegoldContext ctx(f.g);
  const SectionBasis& gbar = ctx.reduced_abelianization();
  const SectionBasis& l2 = ctx.lcs_factor(2);
  CHECK(gbar.type() == AbelianType(3, {1, 1}));
  CHECK(l2.type() == AbelianType(3, {1}));
  const Elem z = f.gen(2), x = f.gen(0);
  TensorElement t = TensorElement::pure(l2, z, gbar, x);
  CHECK(t.size() == 2);
  CHECK_FALSE(t.is_zero());
  CHECK((t + t + t).is_zero());
  t += TensorElement::pure(l2, f.g.inv(z), gbar, x);
  CHECK(t.is_zero());
  CHECK(TensorElement::pure(l2, f.g.identity(), gbar, x).is_zero());
}

TEST_CASE("normed commutators") {
  Fixture f("heisenberg(3)");
  const Elem x = f.gen(0), y = f.gen(1);
  const std::vector<Elem> one = {x}, two = {x, y}, three = {x, y, x};
  CHECK(normed_commutator(f.g, one, Side::left) == x);
  CHECK(normed_commutator(f.g, two, Side::left) == f.g.comm(x, y));
  CHECK(normed_commutator(f.g, two, Side::right) == f.g.comm(x, y));
  CHECK(normed_commutator(f.g, three, Side::left) == f.g.identity());
  CHECK_THROWS_AS(normed_commutator(f.g, std::span<const Elem>{}, Side::left), std::invalid_argument);

  Fixture w("wreath_pp(3)");
  const Elem a = w.gen(0), b = w.gen(1);
  const std::vector<Elem> abb = {a, b, b};
  CHECK(normed_commutator(w.g, abb, Side::left) == w.g.comm(w.g.comm(a, b), b));
  CHECK(normed_commutator(w.g, abb, Side::right) == w.g.comm(a, w.g.comm(b, b)));
}

TEST_CASE("psi_eval examples") {
  Fixture h("heisenberg(3)");
  const EllisWiegoldContext hc(h.g);
  const std::vector<Elem> xyx = {h.gen(0), h.gen(1), h.gen(0)};
  CHECK(psi_eval(hc, 2, xyx).is_zero());
  // central entries give zero
  const std::vector<Elem> central = {h.gen(2), h.gen(0), h.gen(1)};
  CHECK(psi_eval(hc, 2, central).is_zero());
  CHECK_THROWS_AS(psi_eval(hc, 3, std::vector<Elem>{0, 0, 0, 0}), std::out_of_range);
  CHECK_THROWS_AS(psi_eval(hc, 2, std::vector<Elem>{0, 0}), std::out_of_range);

  // abelian groups have class 1, so no weight is in range
  Fixture a("abelian(3,3)");
  const EllisWiegoldContext ac(a.g);
  CHECK_THROWS_AS(psi_eval(ac, 2, std::vector<Elem>{0, 1, 2}), std::out_of_range);

  Fixture fr("free_class2_exp_p(3,3)");
  const EllisWiegoldContext fc(fr.g);
  const std::vector<Elem> xyz = {fr.gen(0), fr.gen(1), fr.gen(2)};
  const TensorElement t = psi_eval(fc, 2, xyz);
  CHECK_FALSE(t.is_zero());
  int units = 0, nonzero = 0;
  for (std::size_t u = 0; u < fc.lcs_factor(2).type().exps.size(); ++u)
    for (std::size_t v = 0; v < fc.reduced_abelianization().type().exps.size(); ++v) {
      if (t.entry(u, v) == 0) continue;
      ++nonzero;
      units += t.entry(u, v) % 3 != 0;
    }
  CHECK(nonzero == 3);
  CHECK(units == 3);
}

TEST_CASE("psi image sizes") {
  Fixture h("heisenberg(3)");
  CHECK(psi_image_log_size(EllisWiegoldContext(h.g), 2) == 0);

  Fixture fr("free_class2_exp_p(3,3)");
  const EllisWiegoldContext fc(fr.g);
  CHECK(psi_image_log_size(fc, 2) >= 1);
  CHECK(psi_image_log_size(fc, 2) == psi_image_log_size_all_tuples(fc, 2));

  Fixture w("wreath_pp(3)");
  const EllisWiegoldContext wc(w.g);
  CHECK(psi_image_log_size(wc, 3) >= 0);
  CHECK(psi_image_log_size(wc, 3) == psi_image_log_size_all_tuples(wc, 3));
  CHECK(psi_image_log_size(wc, 2) == psi_image_log_size_all_tuples(wc, 2));
  CHECK_THROWS_AS(psi_image_log_size(wc, 4), std::out_of_range);
}

TEST_CASE("psi is independent of representatives and additive") {
  std::mt19937 rng(23);
  for (const auto& spec : {"heisenberg(3)", "free_class2_exp_p(3,3)", "extraspecial(2,2,plus)", "dihedral(16)",
                           "wreath_pp(3)", "semidihedral(32)"}) {
    CAPTURE(spec);
    Fixture f(spec);
    const EllisWiegoldContext ctx(f.g);
    const auto shift = central_times_derived(ctx);
    std::uniform_int_distribution<std::size_t> any(0, f.g.order() - 1), sh(0, shift.size() - 1);
    for (int i = 2; i <= ctx.nilpotency_class(); ++i) {
      for (int trial = 0; trial < 30; ++trial) {
        std::vector<Elem> tuple(i + 1), moved(i + 1);
        for (int s = 0; s <= i; ++s) {
          tuple[s] = static_cast<Elem>(any(rng));
          moved[s] = f.g.mul(tuple[s], shift[sh(rng)]);
        }
        CHECK(psi_eval(ctx, i, tuple) == psi_eval(ctx, i, moved));
      }
    }
    if (ctx.nilpotency_class() != 2) continue;
    for (int trial = 0; trial < 30; ++trial) {
      const Elem x = static_cast<Elem>(any(rng)), y = static_cast<Elem>(any(rng));
      const Elem z = static_cast<Elem>(any(rng)), w = static_cast<Elem>(any(rng));
      const std::vector<Elem> xy = {f.g.mul(x, y), z, w}, xs = {x, z, w}, ys = {y, z, w};
      CHECK(psi_eval(ctx, 2, xy) == psi_eval(ctx, 2, xs) + psi_eval(ctx, 2, ys));
    }
  }
}

TEST_CASE("ellis-wiegold inequality") {
  Fixture h("heisenberg(3)");
  const EwInequality e = ew_inequality(EllisWiegoldContext(h.g), multiplier_type(h.g).log_order);
  CHECK(e.lhs == 3);
  CHECK(e.rhs == 3);
  CHECK(e.rhs <= e.rhs_relaxed);

  Fixture d("dihedral(8)");
  const EllisWiegoldContext dc(d.g);
  const EwInequality ed = ew_inequality(dc, multiplier_type(d.g).log_order);
  CHECK(ed.lhs == 1 + 1 + psi_image_log_size(dc, 2));
  CHECK(ed.lhs <= ed.rhs);
  CHECK(ed.rhs <= ed.rhs_relaxed);

  Fixture a("abelian(3,3)");
  CHECK_THROWS_AS(ew_inequality(EllisWiegoldContext(a.g), 1), std::invalid_argument);
}

TEST_CASE("v subgroup") {
  CHECK(v_subgroup_log_size(Fixture("heisenberg(5)").g) == 0);
  CHECK(v_subgroup_log_size(Fixture("free_class2_exp_p(3,3)").g) == 0);
  // t = 1, d = 2: all of gamma_2 (x) G/gamma_2
  CHECK(v_subgroup_log_size(Fixture("extraspecial(3,1,minus)").g) == 2);
  CHECK(v_subgroup_log_size(Fixture("extraspecial(5,1,minus)").g) == 2);
  CHECK_THROWS_AS(v_subgroup_log_size(Fixture("quaternion(8)").g), HypothesisError);
  CHECK_THROWS_AS(v_subgroup_log_size(Fixture("abelian(3,3)").g), HypothesisError);
  CHECK_THROWS_AS(v_subgroup_log_size(Fixture("wreath_pp(3)").g), HypothesisError);
  CHECK_THROWS_AS(v_subgroup_log_size(Fixture("modular(3,4)").g), HypothesisError);
}
