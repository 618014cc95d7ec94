#include "multbound/ellis_wiegold.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "multbound/linalg.hpp"

namespace multbound {

namespace {

std::int64_t ipow(int p, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

}  // namespace

// Bases are built greedily in H/K: take a coset of maximal order p^a modulo
// the span B of the basis so far, write x^{p^a} = prod b_j^{s_j}, and replace x
// by x prod b_j^{-s_j / p^a}. Maximality of the earlier choices makes every
// s_j divisible by p^a, so the corrected element has order p^a and meets B
// trivially.
SectionBasis::SectionBasis(const TableGroup& g, const Subgroup& h, const Subgroup& k)
    : h_(h), coset_(g.order(), -1) {
  if (!k.is_subset_of(h)) throw std::invalid_argument("section H/K needs K <= H");
  const int p = g.prime();

  // Cosets hK.
  for (Elem x : h.elements()) {
    if (coset_[x] >= 0) continue;
    const int id = static_cast<int>(coset_rep_.size());
    coset_rep_.push_back(x);
    for (Elem y : k.elements()) coset_[g.mul(x, y)] = id;
  }
  const std::size_t q = coset_rep_.size();
  for (Elem x : h.elements())
    if (coset_[x] < 0) throw GroupError("K is not normal in H");
  std::vector<int> table(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) {
      table[a * q + b] = coset_[g.mul(coset_rep_[a], coset_rep_[b])];
      if (b < a && table[a * q + b] != table[b * q + a])
        throw GroupError("section H/K is not abelian");
    }
  const int one = coset_[g.identity()];
  auto qmul = [&](int a, int b) { return table[a * q + b]; };
  auto qpow = [&](int a, std::int64_t e) {
    int r = one;
    for (std::int64_t i = 0; i < e; ++i) r = qmul(r, a);
    return r;
  };

  std::vector<char> in_span(q, 0);
  in_span[one] = 1;
  std::size_t span_size = 1;
  std::vector<int> basis_cosets;
  std::vector<int> exps;
  while (span_size < q) {
    // Order of each coset modulo the current span.
    int best = -1, best_a = 0;
    for (std::size_t x = 0; x < q; ++x) {
      int a = 0, y = static_cast<int>(x);
      while (!in_span[y]) {
        y = qpow(y, p);
        ++a;
      }
      if (a > best_a) {
        best_a = a;
        best = static_cast<int>(x);
      }
    }
    // x^{p^a} as a word in the basis.
    int target = qpow(best, ipow(p, best_a));
    std::vector<int> s(basis_cosets.size(), 0);
    {
      // Enumerate the span in mixed radix to find the coordinates of target.
      std::vector<int> c(basis_cosets.size(), 0);
      bool found = false;
      while (true) {
        int v = one;
        for (std::size_t j = 0; j < c.size(); ++j) v = qmul(v, qpow(basis_cosets[j], c[j]));
        if (v == target) {
          s = c;
          found = true;
          break;
        }
        std::size_t j = 0;
        while (j < c.size() && ++c[j] == ipow(p, exps[j])) c[j++] = 0;
        if (j == c.size()) break;
      }
      if (!found) throw std::logic_error("basis power lookup failed");
    }
    int x = best;
    const std::int64_t pa = ipow(p, best_a);
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (s[j] % pa != 0) throw std::logic_error("basis adjustment not divisible");
      const std::int64_t ord = ipow(p, exps[j]);
      const std::int64_t e = ((-(s[j] / pa)) % ord + ord) % ord;
      x = qmul(x, qpow(basis_cosets[j], e));
    }
    basis_cosets.push_back(x);
    exps.push_back(best_a);
    // Extend the span by the powers of x.
    std::vector<int> old;
    for (std::size_t y = 0; y < q; ++y)
      if (in_span[y]) old.push_back(static_cast<int>(y));
    int xp = x;
    for (std::int64_t e = 1; e < pa; ++e, xp = qmul(xp, x))
      for (int y : old) {
        int z = qmul(y, xp);
        if (in_span[z]) throw std::logic_error("basis element meets the span");
        in_span[z] = 1;
        ++span_size;
      }
  }

  // Coordinates of every coset; the basis is kept in descending exponent order.
  std::vector<std::size_t> idx(exps.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return exps[a] > exps[b]; });
  std::vector<int> sorted_exps;
  for (std::size_t i : idx) {
    basis_.push_back(coset_rep_[basis_cosets[i]]);
    sorted_exps.push_back(exps[i]);
    radix_.push_back(static_cast<int>(ipow(p, exps[i])));
  }
  type_ = AbelianType(p, sorted_exps);

  coset_coords_.assign(q, {});
  coord_to_coset_.assign(q, 0);
  std::vector<int> c(radix_.size(), 0);
  for (std::size_t n = 0; n < q; ++n) {
    int v = one;
    for (std::size_t j = 0; j < c.size(); ++j) v = qmul(v, qpow(coset_[basis_[j]], c[j]));
    if (!coset_coords_[v].empty() || (c.empty() && n > 0)) throw std::logic_error("coordinates not bijective");
    coset_coords_[v] = c;
    coord_to_coset_[n] = static_cast<std::size_t>(v);
    for (std::size_t j = 0; j < c.size() && ++c[j] == radix_[j]; ++j) c[j] = 0;
  }
}

const std::vector<int>& SectionBasis::coords(Elem x) const {
  if (x >= coset_.size() || coset_[x] < 0) throw std::out_of_range("element outside the section");
  return coset_coords_[coset_[x]];
}

Elem SectionBasis::element(std::span<const int> coords) const {
  if (coords.size() != radix_.size()) throw std::invalid_argument("coordinate length mismatch");
  std::size_t n = 0, w = 1;
  for (std::size_t j = 0; j < coords.size(); ++j) {
    n += static_cast<std::size_t>(((coords[j] % radix_[j]) + radix_[j]) % radix_[j]) * w;
    w *= static_cast<std::size_t>(radix_[j]);
  }
  return coset_rep_[coord_to_coset_[n]];
}

TensorElement::TensorElement(const AbelianType& left, const AbelianType& right)
    : p_(left.prime), cols_(right.exps.size()) {
  if (left.prime != right.prime) throw std::invalid_argument("prime mismatch in tensor product");
  for (int a : left.exps)
    for (int b : right.exps) {
      local_.push_back(std::min(a, b));
      mod_.push_back(ipow(p_, std::min(a, b)));
    }
  entries_.assign(local_.size(), 0);
}

TensorElement TensorElement::pure(const SectionBasis& left, Elem x, const SectionBasis& right, Elem y) {
  TensorElement t(left.type(), right.type());
  const auto& cx = left.coords(x);
  const auto& cy = right.coords(y);
  for (std::size_t u = 0; u < cx.size(); ++u)
    for (std::size_t v = 0; v < cy.size(); ++v) {
      const std::size_t i = u * t.cols_ + v;
      t.entries_[i] = (static_cast<std::int64_t>(cx[u]) * cy[v]) % t.mod_[i];
    }
  return t;
}

bool TensorElement::is_zero() const {
  for (auto e : entries_)
    if (e != 0) return false;
  return true;
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  if (o.local_ != local_) throw std::invalid_argument("tensor shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] = (entries_[i] + o.entries_[i]) % mod_[i];
  return *this;
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
  TensorElement r = *this;
  r += o;
  return r;
}

int TensorElement::top_exponent() const {
  int top = 0;
  for (int l : local_) top = std::max(top, l);
  return top;
}

std::vector<std::int64_t> TensorElement::embedded(int top) const {
  std::vector<std::int64_t> out(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (local_[i] > top) throw std::invalid_argument("embedding exponent too small");
    out[i] = entries_[i] * ipow(p_, top - local_[i]);
  }
  return out;
}

Elem normed_commutator(const TableGroup& g, std::span<const Elem> elems, Side side) {
  if (elems.empty()) throw std::invalid_argument("normed commutator of an empty list");
  if (side == Side::left) {
    Elem r = elems.front();
    for (std::size_t i = 1; i < elems.size(); ++i) r = g.comm(r, elems[i]);
    return r;
  }
  Elem r = elems.back();
  for (std::size_t i = elems.size() - 1; i-- > 0;) r = g.comm(elems[i], r);
  return r;
}

namespace {

std::vector<SectionBasis> make_factors(const TableGroup& g, const std::vector<Subgroup>& lcs) {
  std::vector<SectionBasis> out;
  for (std::size_t i = 1; i + 1 < lcs.size(); ++i) out.emplace_back(g, lcs[i], lcs[i + 1]);
  return out;
}

SectionBasis make_gbar(const TableGroup& g, const std::vector<Subgroup>& lcs, const Subgroup& z) {
  Subgroup derived = lcs.size() > 1 ? lcs[1] : trivial_subgroup(g);
  return SectionBasis(g, whole_group(g), join(g, derived, z));
}

}  // namespace

EllisWiegoldContext::EllisWiegoldContext(const TableGroup& g)
    : g_(&g),
      lcs_(lower_central_series(g)),
      center_(multbound::center(g)),
      gbar_(make_gbar(g, lcs_, center_)),
      factors_(make_factors(g, lcs_)) {}

const SectionBasis& EllisWiegoldContext::lcs_factor(int i) const {
  if (i < 2 || i > nilpotency_class()) throw std::out_of_range("lower central factor index out of range");
  return factors_[static_cast<std::size_t>(i - 2)];
}

// Slot s (1-based) carries [R, L] (x) x_s with R = [x_{s+1}, .., x_{i+1}]_r and
// L = [x_1, .., x_{s-1}]_l; an empty side drops out, which gives the first and
// last terms of the sum.
TensorElement psi_eval(const EllisWiegoldContext& ctx, int i, std::span<const Elem> tuple) {
  if (i < 2 || i > ctx.nilpotency_class())
    throw std::out_of_range("Psi_" + std::to_string(i) + " needs 2 <= i <= class");
  if (tuple.size() != static_cast<std::size_t>(i + 1))
    throw std::out_of_range("Psi_" + std::to_string(i) + " takes " + std::to_string(i + 1) + " arguments");
  const TableGroup& g = ctx.group();
  const SectionBasis& left = ctx.lcs_factor(i);
  const SectionBasis& right = ctx.reduced_abelianization();
  TensorElement sum(left.type(), right.type());
  const std::size_t len = tuple.size();
  for (std::size_t s = len; s >= 1; --s) {
    auto r_part = tuple.subspan(s);         // x_{s+1} .. x_{i+1}
    auto l_part = tuple.subspan(0, s - 1);  // x_1 .. x_{s-1}
    Elem term;
    if (l_part.empty())
      term = normed_commutator(g, r_part, Side::right);
    else if (r_part.empty())
      term = normed_commutator(g, l_part, Side::left);
    else
      term = g.comm(normed_commutator(g, r_part, Side::right), normed_commutator(g, l_part, Side::left));
    if (!left.contains(term)) throw std::logic_error("Psi term outside gamma_i");
    sum += TensorElement::pure(left, term, right, tuple[s - 1]);
  }
  return sum;
}

namespace {

template <class Visit>
void for_each_tuple(std::span<const Elem> pool, std::size_t len, Visit&& visit) {
  if (pool.empty()) return;
  std::vector<std::size_t> c(len, 0);
  std::vector<Elem> t(len);
  while (true) {
    for (std::size_t j = 0; j < len; ++j) t[j] = pool[c[j]];
    visit(std::span<const Elem>(t));
    std::size_t j = 0;
    while (j < len && ++c[j] == pool.size()) c[j++] = 0;
    if (j == len) return;
  }
}

int image_span(const EllisWiegoldContext& ctx, int i, std::span<const Elem> pool) {
  if (i < 2 || i > ctx.nilpotency_class())
    throw std::out_of_range("Psi_" + std::to_string(i) + " needs 2 <= i <= class");
  TensorElement shape(ctx.lcs_factor(i).type(), ctx.reduced_abelianization().type());
  const int top = shape.top_exponent();
  if (shape.size() == 0 || top == 0) return 0;
  ModEchelon ech(ctx.group().prime(), top, shape.size());
  for_each_tuple(pool, static_cast<std::size_t>(i + 1), [&](std::span<const Elem> t) {
    TensorElement v = psi_eval(ctx, i, t);
    if (!v.is_zero()) ech.insert(v.embedded(top));
  });
  return ech.log_span_order();
}

}  // namespace

int psi_image_log_size(const EllisWiegoldContext& ctx, int i) {
  const auto& gb = ctx.reduced_abelianization();
  return image_span(ctx, i, gb.basis());
}

int psi_image_log_size_all_tuples(const EllisWiegoldContext& ctx, int i) {
  const auto& gb = ctx.reduced_abelianization();
  std::vector<Elem> reps;
  std::vector<int> c(gb.type().exps.size(), 0);
  const int p = ctx.group().prime();
  while (true) {
    reps.push_back(gb.element(c));
    std::size_t j = 0;
    while (j < c.size() && ++c[j] == ipow(p, gb.type().exps[j])) c[j++] = 0;
    if (j == c.size()) break;
  }
  return image_span(ctx, i, reps);
}

EwInequality ew_inequality(const EllisWiegoldContext& ctx, int log_multiplier) {
  const TableGroup& g = ctx.group();
  const int c = ctx.nilpotency_class();
  if (c < 2) throw std::invalid_argument("the Ellis-Wiegold inequality needs a nonabelian group");
  const auto& lcs = ctx.lower_central();
  const AbelianType ab = section_type(g, whole_group(g), lcs[1]);
  const int m_ab = abelian_multiplier(ab).log_order();
  const int k = exact_log(lcs[1].order(), g.prime());
  const AbelianType& gbar = ctx.reduced_abelianization().type();

  EwInequality r;
  r.log_multiplier = log_multiplier;
  r.lhs = log_multiplier + k;
  r.rhs = m_ab;
  for (int i = 2; i <= c; ++i) {
    const int im = psi_image_log_size(ctx, i);
    r.psi_image.push_back(im);
    r.lhs += im;
    r.rhs += tensor_type(ctx.lcs_factor(i).type(), gbar).log_order();
  }
  r.rhs_relaxed = m_ab + k * gbar.rank();
  return r;
}

int v_subgroup_log_size(const TableGroup& g) {
  const int p = g.prime();
  if (p == 2) throw HypothesisError("V-subgroup formula needs an odd prime");
  const auto lcs = lower_central_series(g);
  if (lcs.size() != 3) throw HypothesisError("V-subgroup formula needs nilpotency class 2");
  SectionBasis right(g, whole_group(g), lcs[1]);
  if (!right.type().is_elementary()) throw HypothesisError("V-subgroup formula needs G/gamma_2 elementary abelian");
  SectionBasis left(g, lcs[1], trivial_subgroup(g));
  TensorElement shape(left.type(), right.type());
  const int top = shape.top_exponent();
  if (top == 0) return 0;
  ModEchelon ech(p, top, shape.size());
  for (Elem x = 0; x < g.order(); ++x) {
    TensorElement v = TensorElement::pure(left, g.pow(x, p), right, x);
    if (!v.is_zero()) ech.insert(v.embedded(top));
  }
  return ech.log_span_order();
}

}  // namespace multbound
