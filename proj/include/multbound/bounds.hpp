// Closed-form bounds on log_p |M(G)| with their hypotheses, verdicts against
// an oracle value, and the arithmetic relations between the formulas.

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "multbound/abelian.hpp"
#include "multbound/structure.hpp"

namespace multbound {

/// Exact rational with a positive denominator in lowest terms.
class Rational {
 public:
  Rational(std::int64_t num = 0, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  std::int64_t floor() const;
  std::string to_string() const;

  friend Rational operator+(Rational a, Rational b);
  friend Rational operator-(Rational a, Rational b);
  friend Rational operator*(Rational a, Rational b);
  friend bool operator==(Rational a, Rational b) = default;
  friend std::strong_ordering operator<=>(Rational a, Rational b);

 private:
  std::int64_t num_, den_;
};

enum class BoundKind { upper, lower };

struct BoundValue {
  std::string name;
  Rational exponent;  ///< the bound is p^exponent
  BoundKind kind = BoundKind::upper;
  bool applicable = false;
  /// The violated hypothesis when not applicable; otherwise empty or a note.
  std::string reason;
  /// Hypotheses force |G| beyond anything the oracle can handle.
  bool oracle_unverifiable = false;
};

enum class Verdict { pass, fail, vacuous, skipped };
const char* to_string(Verdict v);
const char* to_string(BoundKind k);

/// Green, Gaschutz (two generators), Niroomand, the d-based bound it refines
/// to, and Moravec's maximal-class bound.
std::vector<BoundValue> classical_bounds(const GroupProfile& pr);
/// (d-1)(n+k)/2 - sum_{i=2}^{min(d,c)} (d-i).
BoundValue class_refined_bound(const GroupProfile& pr);
/// (d-1)(n+k)/2 - sum_{i=2}^{min(d,gamma+1)} (d-i).
BoundValue commutator_rank_refined_bound(const GroupProfile& pr);
/// Class-2 groups with G^p <= gamma_2: general lower/upper bounds, the
/// refinements for cyclic G^p of order p and for G^p = gamma_2, and special
/// groups with centre of order p^2 or p^3.
std::vector<BoundValue> class_two_bounds(const GroupProfile& pr);
/// Large special groups with centre of order p^3 (|G| >= p^13).
std::vector<BoundValue> large_special_bounds(const GroupProfile& pr);
/// p odd, maximal class, n >= 4: exponent n/2.
BoundValue maximal_class_half_bound(const GroupProfile& pr);

/// Every bound above, in a fixed order.
std::vector<BoundValue> all_bounds(const GroupProfile& pr);

/// Upper bound: m <= exponent; lower: exponent <= m. Inapplicable bounds are
/// vacuous, missing oracle values give skipped.
Verdict bound_verdict(const BoundValue& b, std::optional<int> m);

/// A named check with the two quantities compared (log_p values).
struct PropertyResult {
  std::string name;
  Verdict verdict = Verdict::skipped;
  Rational lhs, rhs;
  std::string note;
};

/// The sum of (d - i) for i = lo..hi (zero when hi < lo).
std::int64_t descending_sum(int d, int lo, int hi);

/// The class-refined bound equals the d-based one exactly when the terms
/// i = 3..min(d,c) of its correction sum vanish.
bool class_refined_equals_generators_derived(const GroupProfile& pr);

/// Relations between the formulas that hold by arithmetic alone.
std::vector<PropertyResult> dominance_checks(const GroupProfile& pr);

struct BoundReport {
  std::string id;
  GroupProfile profile;
  std::optional<AbelianType> multiplier;
  std::vector<BoundValue> bounds;
  std::vector<Verdict> verdicts;  ///< parallel to bounds
  std::vector<PropertyResult> dominance;

  std::optional<int> log_multiplier() const;
  std::size_t count(Verdict v) const;
};

BoundReport check_report(std::string id, const GroupProfile& pr, std::optional<AbelianType> multiplier);

}  // namespace multbound
