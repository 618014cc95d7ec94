// The maps Psi_i from the (i+1)-fold tensor power of G/gamma_2(G)Z(G) to
// gamma_i/gamma_{i+1} (x) G/gamma_2(G)Z(G), their image orders, the
// Ellis-Wiegold inequality built from them, and the subgroup generated by
// x^p (x) x gamma_2(G).

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "multbound/abelian.hpp"
#include "multbound/structure.hpp"

namespace multbound {

/// A cyclic decomposition of the abelian section H/K of G with a coordinate
/// lookup for every element of H.
class SectionBasis {
 public:
  SectionBasis(const TableGroup& g, const Subgroup& h, const Subgroup& k);

  const AbelianType& type() const { return type_; }
  /// Lifts in H of the chosen generators, one per cyclic factor.
  std::span<const Elem> basis() const { return basis_; }
  /// Coordinates of x H-coset modulo K; x must lie in H.
  const std::vector<int>& coords(Elem x) const;
  bool contains(Elem x) const { return h_.contains(x); }
  /// The element of H (a coset representative) with the given coordinates.
  Elem element(std::span<const int> coords) const;

 private:
  AbelianType type_;
  Subgroup h_;
  std::vector<Elem> basis_;
  std::vector<int> coset_;                    // element -> coset id (H only)
  std::vector<std::vector<int>> coset_coords_;
  std::vector<Elem> coset_rep_;
  std::vector<int> radix_;                    // p^{a_i}
  std::vector<std::size_t> coord_to_coset_;   // mixed-radix index -> coset
};

/// An element of A (x) B in the coordinates of fixed section bases: entry
/// (u, v) lives in Z/p^{min(a_u, b_v)}.
class TensorElement {
 public:
  TensorElement(const AbelianType& left, const AbelianType& right);

  static TensorElement pure(const SectionBasis& left, Elem x, const SectionBasis& right, Elem y);

  std::size_t size() const { return entries_.size(); }
  std::int64_t entry(std::size_t u, std::size_t v) const { return entries_[u * cols_ + v]; }
  /// log_p of the modulus of entry (u, v).
  int entry_exponent(std::size_t u, std::size_t v) const { return local_[u * cols_ + v]; }
  bool is_zero() const;

  TensorElement& operator+=(const TensorElement& o);
  TensorElement operator+(const TensorElement& o) const;
  bool operator==(const TensorElement& o) const { return entries_ == o.entries_; }

  /// Entries scaled into Z/p^top, top = the largest local exponent, so that
  /// spans in the embedded module have the same order.
  std::vector<std::int64_t> embedded(int top) const;
  int top_exponent() const;

 private:
  int p_;
  std::size_t cols_;
  std::vector<int> local_;
  std::vector<std::int64_t> mod_;
  std::vector<std::int64_t> entries_;
};

enum class Side { left, right };

/// Left: [..[[x1, x2], x3], .., xi]; right: [x1, [.., [x_{i-1}, x_i]..]].
/// A single element is returned as is. Throws std::invalid_argument on an
/// empty list.
Elem normed_commutator(const TableGroup& g, std::span<const Elem> elems, Side side);

/// Section data shared by all Psi evaluations on one group. Built eagerly.
class EllisWiegoldContext {
 public:
  explicit EllisWiegoldContext(const TableGroup& g);

  const TableGroup& group() const { return *g_; }
  int nilpotency_class() const { return static_cast<int>(lcs_.size()) - 1; }
  const std::vector<Subgroup>& lower_central() const { return lcs_; }
  const Subgroup& center() const { return center_; }
  /// Basis of G/gamma_2(G)Z(G).
  const SectionBasis& reduced_abelianization() const { return gbar_; }
  /// Basis of gamma_i/gamma_{i+1}, 2 <= i <= c.
  const SectionBasis& lcs_factor(int i) const;

 private:
  const TableGroup* g_;
  std::vector<Subgroup> lcs_;
  Subgroup center_;
  SectionBasis gbar_;
  std::vector<SectionBasis> factors_;  // index i - 2
};

/// Psi_i(x_1 (x) ... (x) x_{i+1}) evaluated on representatives. Throws
/// std::out_of_range unless 2 <= i <= c and the tuple has i + 1 entries.
TensorElement psi_eval(const EllisWiegoldContext& ctx, int i, std::span<const Elem> tuple);

/// log_p |Im Psi_i|, spanned by Psi_i on all tuples of basis lifts of
/// G/gamma_2(G)Z(G).
int psi_image_log_size(const EllisWiegoldContext& ctx, int i);
/// The same order spanned over tuples of every element of G/gamma_2(G)Z(G)
/// (one representative per coset). Exponential; for cross-checks only.
int psi_image_log_size_all_tuples(const EllisWiegoldContext& ctx, int i);

struct EwInequality {
  int log_multiplier = 0;  ///< m
  int lhs = 0;          ///< log_p |M(G)| |gamma_2| prod |Im Psi_i|
  int rhs = 0;          ///< log_p |M(G^ab)| prod |gamma_i/gamma_{i+1} (x) Gbar^ab|
  int rhs_relaxed = 0;  ///< log_p |M(G^ab)| p^{k delta}
  std::vector<int> psi_image;  ///< log sizes for i = 2..c
};

/// Needs log_p |M(G)| from the oracle. Throws std::invalid_argument for an
/// abelian group.
EwInequality ew_inequality(const EllisWiegoldContext& ctx, int log_multiplier);

class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// log_p of the order of <x^p (x) x gamma_2(G) : x in G> inside
/// gamma_2(G) (x) G/gamma_2(G). Requires p odd, class 2 and G/gamma_2(G)
/// elementary abelian; throws HypothesisError otherwise.
int v_subgroup_log_size(const TableGroup& g);

}  // namespace multbound
