#include "multbound/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace multbound {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::int64_t Rational::floor() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(Rational a, Rational b) { return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_); }
Rational operator-(Rational a, Rational b) { return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_); }
Rational operator*(Rational a, Rational b) { return Rational(a.num_ * b.num_, a.den_ * b.den_); }
std::strong_ordering operator<=>(Rational a, Rational b) { return a.num_ * b.den_ <=> b.num_ * a.den_; }

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::vacuous: return "vacuous";
    case Verdict::skipped: return "skipped";
  }
  return "?";
}

const char* to_string(BoundKind k) { return k == BoundKind::upper ? "upper" : "lower"; }

std::int64_t descending_sum(int d, int lo, int hi) {
  std::int64_t s = 0;
  for (int i = lo; i <= hi; ++i) s += d - i;
  return s;
}

namespace {

BoundValue make(std::string name, Rational e, BoundKind kind = BoundKind::upper) {
  BoundValue b;
  b.name = std::move(name);
  b.exponent = e;
  b.kind = kind;
  b.applicable = true;
  return b;
}

void require(BoundValue& b, bool ok, const char* reason) {
  if (b.applicable && !ok) {
    b.applicable = false;
    b.reason = reason;
  }
}

Rational generators_derived_exponent(const GroupProfile& pr) {
  return Rational((pr.d - 1) * (pr.n + pr.k), 2) - Rational(pr.d - 2);
}

Rational refined_exponent(const GroupProfile& pr, int upper) {
  return Rational((pr.d - 1) * (pr.n + pr.k), 2) - Rational(descending_sum(pr.d, 2, upper));
}

std::int64_t pairs(int d) { return static_cast<std::int64_t>(d) * (d - 1) / 2; }

}  // namespace

std::vector<BoundValue> classical_bounds(const GroupProfile& pr) {
  const bool nonabelian = !pr.flags.is_abelian;
  std::vector<BoundValue> out;
  out.push_back(make("green", Rational(static_cast<std::int64_t>(pr.n) * (pr.n - 1), 2)));

  out.push_back(make("gaschutz_two_generator", Rational(pr.n - 1)));
  require(out.back(), pr.d == 2, "needs d(G) = 2");

  out.push_back(make("niroomand", Rational(static_cast<std::int64_t>(pr.n - pr.k - 1) * (pr.n + pr.k - 2), 2) + Rational(1)));
  require(out.back(), nonabelian, "needs G nonabelian");

  out.push_back(make("generators_derived", nonabelian ? generators_derived_exponent(pr) : Rational(0)));
  require(out.back(), nonabelian, "needs G nonabelian");

  const int p = pr.p;
  const std::int64_t ceil_part = pr.n >= 1 ? (pr.n - 1 + (p - 2)) / (p - 1) : 0;
  out.push_back(make("moravec_maximal_class", Rational(p + 1, 2) * Rational(ceil_part)));
  require(out.back(), pr.flags.is_maximal_class, "needs G of maximal class");
  require(out.back(), pr.n > p + 1, "needs n > p + 1");
  return out;
}

BoundValue class_refined_bound(const GroupProfile& pr) {
  if (pr.flags.is_abelian) {
    BoundValue b = make("class_refined", Rational(0));
    require(b, false, "needs G nonabelian");
    return b;
  }
  return make("class_refined", refined_exponent(pr, pr.mu()));
}

BoundValue commutator_rank_refined_bound(const GroupProfile& pr) {
  if (pr.flags.is_abelian) {
    BoundValue b = make("commutator_rank_refined", Rational(0));
    require(b, false, "needs G nonabelian");
    return b;
  }
  return make("commutator_rank_refined", refined_exponent(pr, pr.nu()));
}

std::vector<BoundValue> class_two_bounds(const GroupProfile& pr) {
  const int d = pr.d, k = pr.k, p = pr.p;
  const bool base = pr.c == 2 && pr.flags.has_Gp_in_gamma2;
  const char* base_reason = pr.c != 2 ? "needs nilpotency class 2" : "needs G^p <= gamma_2(G)";
  std::vector<BoundValue> out;

  out.push_back(make("class2_lower", Rational(pairs(d) - k), BoundKind::lower));
  require(out.back(), base, base_reason);

  const Rational general = d <= k + 1 ? Rational(static_cast<std::int64_t>(d - 1) * (k + 1))
                                      : Rational(pairs(d) + pairs(k + 1));
  out.push_back(make("class2_upper", general));
  require(out.back(), base, base_reason);

  // For p = 2 the proof argues such a group is dihedral or quaternion of
  // order 8, so |M(G)| <= 2.
  Rational cyclic = p == 2 ? Rational(1)
                           : (d <= k ? Rational(static_cast<std::int64_t>(d - 1) * k - 1)
                                     : Rational(pairs(d) + pairs(k) - 1));
  out.push_back(make("class2_cyclic_agemo", cyclic));
  require(out.back(), base, base_reason);
  require(out.back(), pr.flags.has_Gp_cyclic_p, "needs G^p of order p");
  if (out.back().applicable && p == 2) out.back().reason = "p = 2: dihedral/quaternion dichotomy";

  out.push_back(make("class2_agemo_derived", Rational(pairs(d)) + Rational(static_cast<std::int64_t>(k) * (k - 3), 2)));
  require(out.back(), base, base_reason);
  require(out.back(), p % 2 == 1, "needs p odd");
  require(out.back(), pr.flags.has_Gp_equal_gamma2, "needs G^p = gamma_2(G)");

  struct Special {
    const char* name;
    int z;
    int offset;
    BoundKind kind;
  };
  for (const Special& s : {Special{"special_center_p2_lower", 2, -2, BoundKind::lower},
                           Special{"special_center_p2_upper", 2, 3, BoundKind::upper},
                           Special{"special_center_p3_lower", 3, -3, BoundKind::lower},
                           Special{"special_center_p3_upper", 3, 6, BoundKind::upper}}) {
    out.push_back(make(s.name, Rational(pairs(d) + s.offset), s.kind));
    require(out.back(), pr.flags.is_special, "needs G special");
    require(out.back(), pr.z == s.z, s.z == 2 ? "needs |Z(G)| = p^2" : "needs |Z(G)| = p^3");
  }
  return out;
}

std::vector<BoundValue> large_special_bounds(const GroupProfile& pr) {
  std::vector<BoundValue> out;
  out.push_back(make("special_p3_large", Rational(pairs(pr.d) + 2)));
  out.push_back(make("special_p3_large_agemo", Rational(pairs(pr.d) - 2)));
  for (auto& b : out) {
    require(b, pr.p % 2 == 1, "needs p odd");
    require(b, pr.flags.is_special, "needs G special");
    require(b, pr.z == 3, "needs |Z(G)| = p^3");
    require(b, pr.n >= 13, "needs |G| >= p^13");
    b.oracle_unverifiable = true;
  }
  require(out[1], pr.flags.has_Gp_equal_gamma2, "needs G^p = gamma_2(G)");
  return out;
}

BoundValue maximal_class_half_bound(const GroupProfile& pr) {
  BoundValue b = make("maximal_class_half", Rational(pr.n, 2));
  require(b, pr.p % 2 == 1, "needs p odd");
  require(b, pr.flags.is_maximal_class, "needs G of maximal class");
  require(b, pr.n >= 4, "needs n >= 4");
  return b;
}

std::vector<BoundValue> all_bounds(const GroupProfile& pr) {
  std::vector<BoundValue> out = classical_bounds(pr);
  out.push_back(class_refined_bound(pr));
  out.push_back(commutator_rank_refined_bound(pr));
  for (auto& b : class_two_bounds(pr)) out.push_back(std::move(b));
  for (auto& b : large_special_bounds(pr)) out.push_back(std::move(b));
  out.push_back(maximal_class_half_bound(pr));
  return out;
}

Verdict bound_verdict(const BoundValue& b, std::optional<int> m) {
  if (!b.applicable) return Verdict::vacuous;
  if (!m) return Verdict::skipped;
  const Rational mm(*m);
  const bool ok = b.kind == BoundKind::upper ? mm <= b.exponent : b.exponent <= mm;
  return ok ? Verdict::pass : Verdict::fail;
}

bool class_refined_equals_generators_derived(const GroupProfile& pr) {
  return descending_sum(pr.d, 3, pr.mu()) == 0;
}

std::vector<PropertyResult> dominance_checks(const GroupProfile& pr) {
  std::vector<PropertyResult> out;
  auto le = [&](std::string name, Rational a, Rational b) {
    PropertyResult r{std::move(name), pr.flags.is_abelian ? Verdict::vacuous : (a <= b ? Verdict::pass : Verdict::fail), a, b, {}};
    out.push_back(std::move(r));
  };
  const BoundValue by_generators = classical_bounds(pr)[3];
  const BoundValue nir = classical_bounds(pr)[2];
  const BoundValue t1 = class_refined_bound(pr);
  const BoundValue t2 = commutator_rank_refined_bound(pr);
  le("class_refined_le_generators_derived", t1.exponent, by_generators.exponent);
  le("commutator_rank_refined_le_generators_derived", t2.exponent, by_generators.exponent);
  le("generators_derived_le_niroomand", by_generators.exponent, nir.exponent);
  if (!pr.flags.is_abelian && pr.d > pr.n - pr.k) out.back().verdict = Verdict::vacuous;

  PropertyResult eq{"class_refined_equality_condition", Verdict::vacuous, t1.exponent, by_generators.exponent, {}};
  if (!pr.flags.is_abelian) {
    const bool equal = t1.exponent == by_generators.exponent;
    eq.verdict = equal == class_refined_equals_generators_derived(pr) ? Verdict::pass : Verdict::fail;
    eq.note = equal ? "equal" : "strict";
  }
  out.push_back(eq);

  // Under the class-2 hypotheses n = d + k, and with gamma = k the
  // commutator-rank bound must reproduce the general class-2 upper bound.
  PropertyResult agree{"class2_upper_matches_commutator_rank", Verdict::vacuous, 0, 0, {}};
  if (pr.c == 2 && pr.flags.has_Gp_in_gamma2) {
    GroupProfile q = pr;
    q.gamma = q.k;
    q.n = q.d + q.k;
    agree.lhs = class_two_bounds(pr)[1].exponent;
    agree.rhs = commutator_rank_refined_bound(q).exponent;
    agree.verdict = agree.lhs == agree.rhs ? Verdict::pass : Verdict::fail;
  }
  out.push_back(agree);
  return out;
}

std::optional<int> BoundReport::log_multiplier() const {
  if (!multiplier) return std::nullopt;
  return multiplier->log_order();
}

std::size_t BoundReport::count(Verdict v) const {
  return static_cast<std::size_t>(std::count(verdicts.begin(), verdicts.end(), v));
}

BoundReport check_report(std::string id, const GroupProfile& pr, std::optional<AbelianType> multiplier) {
  BoundReport r;
  r.id = std::move(id);
  r.profile = pr;
  r.multiplier = std::move(multiplier);
  r.bounds = all_bounds(pr);
  const auto m = r.log_multiplier();
  for (const auto& b : r.bounds) r.verdicts.push_back(b.oracle_unverifiable && b.applicable ? Verdict::skipped : bound_verdict(b, m));
  r.dominance = dominance_checks(pr);
  return r;
}

}  // namespace multbound
