// Finite abelian p-groups described by their cyclic decomposition, with
// closed forms for tensor products, Hom/Ext into cyclic groups and the Schur
// multiplier.

#pragma once

#include <string>
#include <vector>

namespace multbound {

/// The group Z/p^{a_1} + ... + Z/p^{a_r}, a_1 >= ... >= a_r >= 1.
struct AbelianType {
  int prime = 2;
  std::vector<int> exps;

  AbelianType() = default;
  /// Sorts `exps` descending and drops zero entries.
  AbelianType(int prime, std::vector<int> exps);

  /// From cyclic orders such as {9, 3}; throws std::invalid_argument when an
  /// order is not a power of `prime`.
  static AbelianType from_orders(int prime, const std::vector<long long>& orders);

  bool is_trivial() const { return exps.empty(); }
  int rank() const { return static_cast<int>(exps.size()); }
  /// log_p of the order.
  int log_order() const;
  bool is_elementary() const;
  /// e.g. "[9, 3]"
  std::string to_string() const;

  bool operator==(const AbelianType&) const = default;
};

/// A (x) B; |A (x) B| = p^{sum min(a_u, b_v)}. Throws on a prime mismatch.
AbelianType tensor_type(const AbelianType& a, const AbelianType& b);

struct HomExt {
  AbelianType hom;
  AbelianType ext;
};

/// Hom(A, Z/p^j) and Ext(A, Z/p^j), both the componentwise min with j.
HomExt hom_ext_type(const AbelianType& a, int j);

/// M(A) = sum over i < j of Z/p^{min(a_i, a_j)}.
AbelianType abelian_multiplier(const AbelianType& a);

}  // namespace multbound
