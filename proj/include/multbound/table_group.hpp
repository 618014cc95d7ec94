// Finite groups given by a full multiplication table over element indices.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "multbound/pc.hpp"

namespace multbound {

using Elem = std::uint32_t;

class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultTableCap = 2048;

class TableGroup {
 public:
  /// `table` is row-major: table[a * order + b] = a * b. The order must be a
  /// power of `prime`. Identity and inverses are located and the group
  /// axioms are checked (associativity on a deterministic random sample).
  TableGroup(int prime, std::vector<Elem> table,
             std::optional<std::vector<NormalWord>> labels = std::nullopt);

  /// The trivial group.
  static TableGroup trivial(int prime);

  int prime() const { return prime_; }
  std::size_t order() const { return order_; }
  /// log_p of the order.
  int log_order() const { return log_order_; }
  Elem identity() const { return id_; }

  Elem mul(Elem a, Elem b) const { return table_[a * order_ + b]; }
  Elem inv(Elem a) const { return inverse_[a]; }
  Elem pow(Elem a, long long k) const;
  /// a^-1 b^-1 a b
  Elem comm(Elem a, Elem b) const { return mul(mul(inverse_[a], inverse_[b]), mul(a, b)); }
  /// Smallest k >= 0 with a^(p^k) = 1.
  int log_elem_order(Elem a) const;

  bool is_abelian() const;

  const std::optional<std::vector<NormalWord>>& labels() const { return labels_; }
  std::span<const Elem> table() const { return table_; }

  /// The same group with element i renamed to perm[i].
  TableGroup relabeled(std::span<const Elem> perm) const;

  /// Counts of failed associativity checks over `samples` random triples.
  std::size_t associativity_failures(std::size_t samples, std::uint64_t seed) const;

 private:
  int prime_;
  std::size_t order_;
  int log_order_;
  Elem id_;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::optional<std::vector<NormalWord>> labels_;
};

/// Builds the multiplication table of a consistent presentation by
/// collection. Element indices follow word_index(). Throws GroupError when
/// p^n exceeds `cap` or the presentation is inconsistent.
TableGroup materialize_table(const PcPresentation& pres,
                             std::size_t cap = kDefaultTableCap);

/// log_p(value) when value is a power of p, otherwise -1.
int exact_log(std::size_t value, int prime);

}  // namespace multbound
