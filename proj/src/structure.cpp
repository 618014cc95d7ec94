#include "multbound/structure.hpp"

#include <algorithm>
#include <string>

namespace multbound {

Subgroup::Subgroup(std::size_t parent_order, std::vector<Elem> elements)
    : elements_(std::move(elements)), member_(parent_order, false) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  for (Elem x : elements_) {
    if (x >= parent_order) throw GroupError("subgroup element out of range");
    member_[x] = true;
  }
}

bool Subgroup::is_subset_of(const Subgroup& o) const {
  return std::all_of(elements_.begin(), elements_.end(), [&](Elem x) { return o.contains(x); });
}

Subgroup generated_subgroup(const TableGroup& g, std::span<const Elem> gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<Elem> elems{g.identity()};
  in[g.identity()] = 1;
  std::vector<Elem> used;
  for (Elem x : gens) {
    if (in[x]) continue;
    used.push_back(x);
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (Elem s : used) {
        Elem y = g.mul(elems[i], s);
        if (!in[y]) {
          in[y] = 1;
          elems.push_back(y);
        }
      }
  }
  return Subgroup(g.order(), std::move(elems));
}

Subgroup whole_group(const TableGroup& g) {
  std::vector<Elem> all(g.order());
  for (Elem x = 0; x < g.order(); ++x) all[x] = x;
  return Subgroup(g.order(), std::move(all));
}

Subgroup trivial_subgroup(const TableGroup& g) { return Subgroup(g.order(), {g.identity()}); }

Subgroup join(const TableGroup& g, const Subgroup& a, const Subgroup& b) {
  std::vector<Elem> gens(a.elements().begin(), a.elements().end());
  gens.insert(gens.end(), b.elements().begin(), b.elements().end());
  return generated_subgroup(g, gens);
}

void require_subgroup(const TableGroup& g, const Subgroup& s) {
  if (s.order() == 0 || !s.contains(g.identity())) throw GroupError("not a subgroup: no identity");
  for (Elem a : s.elements())
    for (Elem b : s.elements())
      if (!s.contains(g.mul(a, b))) throw GroupError("not a subgroup: not closed");
}

bool is_normal(const TableGroup& g, const Subgroup& n) {
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y : n.elements())
      if (!n.contains(g.mul(g.mul(g.inv(x), y), x))) return false;
  return true;
}

Subgroup center(const TableGroup& g) {
  std::vector<Elem> z;
  for (Elem x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Elem y = 0; y < g.order() && central; ++y) central = g.mul(x, y) == g.mul(y, x);
    if (central) z.push_back(x);
  }
  return Subgroup(g.order(), std::move(z));
}

std::vector<Subgroup> lower_central_series(const TableGroup& g) {
  std::vector<Subgroup> series{whole_group(g)};
  while (!series.back().is_trivial()) {
    std::vector<char> seen(g.order(), 0);
    std::vector<Elem> comms;
    for (Elem x : series.back().elements())
      for (Elem y = 0; y < g.order(); ++y) {
        Elem c = g.comm(x, y);
        if (!seen[c]) {
          seen[c] = 1;
          comms.push_back(c);
        }
      }
    Subgroup next = generated_subgroup(g, comms);
    if (next.order() == series.back().order())
      throw GroupError("lower central series stalls: group is not nilpotent");
    series.push_back(std::move(next));
  }
  return series;
}

FrattiniAgemo frattini_agemo(const TableGroup& g) {
  std::vector<Elem> powers;
  for (Elem x = 0; x < g.order(); ++x) powers.push_back(g.pow(x, g.prime()));
  Subgroup agemo = generated_subgroup(g, powers);
  auto lcs = lower_central_series(g);
  Subgroup derived = lcs.size() > 1 ? lcs[1] : trivial_subgroup(g);
  return {join(g, agemo, derived), std::move(agemo)};
}

Quotient quotient(const TableGroup& g, const Subgroup& n) {
  require_subgroup(g, n);
  if (!is_normal(g, n)) throw GroupError("quotient by a non-normal subgroup");
  const std::size_t none = g.order();
  std::vector<Elem> proj(g.order(), static_cast<Elem>(none));
  std::vector<Elem> reps;
  for (Elem x = 0; x < g.order(); ++x) {
    if (proj[x] != none) continue;
    Elem id = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem y : n.elements()) proj[g.mul(x, y)] = id;
  }
  const std::size_t m = reps.size();
  std::vector<Elem> table(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) table[a * m + b] = proj[g.mul(reps[a], reps[b])];
  return {TableGroup(g.prime(), std::move(table)), std::move(proj)};
}

AbelianType section_type(const TableGroup& g, const Subgroup& h, const Subgroup& k) {
  const int p = g.prime();
  for (Elem x : h.elements())
    for (Elem y : h.elements())
      if (!k.contains(g.comm(x, y))) throw GroupError("section is not abelian");
  const int total = exact_log(h.order() / k.order(), p);
  if (total < 0 || h.order() % k.order() != 0) throw GroupError("bad section orders");

  // s_j = log_p #{x in H/K : x^{p^j} = 1} = sum_i min(a_i, j)
  std::vector<int> s{0};
  std::vector<Elem> cur(h.elements().begin(), h.elements().end());
  while (s.back() < total) {
    std::size_t count = 0;
    for (Elem& x : cur) {
      x = g.pow(x, p);
      if (k.contains(x)) ++count;
    }
    int sj = exact_log(count / k.order(), p);
    if (sj < 0 || sj <= s.back()) throw GroupError("inconsistent order counts in section");
    s.push_back(sj);
  }
  std::vector<int> exps;
  const int levels = static_cast<int>(s.size()) - 1;
  for (int j = 1; j <= levels; ++j) {
    int at_least_j = s[j] - s[j - 1];
    int at_least_next = j < levels ? s[j + 1] - s[j] : 0;
    for (int r = 0; r < at_least_j - at_least_next; ++r) exps.push_back(j);
  }
  return AbelianType(p, std::move(exps));
}

AbelianType abelian_invariants(const TableGroup& g) {
  if (!g.is_abelian()) throw GroupError("abelian invariants of a nonabelian group");
  return section_type(g, whole_group(g), trivial_subgroup(g));
}

AbelianType abelian_invariants(const TableGroup& g, const Subgroup& s) {
  return section_type(g, s, trivial_subgroup(g));
}

int min_generators(const TableGroup& g) {
  auto fa = frattini_agemo(g);
  return g.log_order() - exact_log(fa.frattini.order(), g.prime());
}

GroupProfile group_profile(const TableGroup& g) {
  const int p = g.prime();
  GroupProfile pr;
  pr.p = p;
  pr.n = g.log_order();
  auto lcs = lower_central_series(g);
  pr.c = static_cast<int>(lcs.size()) - 1;
  Subgroup derived = lcs.size() > 1 ? lcs[1] : trivial_subgroup(g);
  pr.k = exact_log(derived.order(), p);
  auto fa = frattini_agemo(g);
  pr.d = pr.n - exact_log(fa.frattini.order(), p);
  pr.t = exact_log(fa.agemo.order(), p);
  Subgroup z = center(g);
  pr.z = exact_log(z.order(), p);
  pr.delta = min_generators(quotient(g, z).group);
  pr.gamma = pr.c >= 2 ? section_type(g, lcs[1], lcs[2]).rank() : 0;

  pr.flags.is_abelian = pr.c <= 1;
  pr.flags.is_special = pr.c == 2 && z == derived && derived == fa.frattini;
  pr.flags.is_maximal_class = pr.n >= 2 && pr.c == pr.n - 1;
  pr.flags.has_Gp_in_gamma2 = fa.agemo.is_subset_of(derived);
  pr.flags.has_Gp_cyclic_p = pr.t == 1;
  pr.flags.has_Gp_equal_gamma2 = fa.agemo == derived;
  return pr;
}

}  // namespace multbound
