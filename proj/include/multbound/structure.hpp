// Subgroups, series, quotients and the numeric invariants of a p-group.

#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "multbound/abelian.hpp"
#include "multbound/table_group.hpp"

namespace multbound {

/// A subgroup stored as its sorted element set.
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(std::size_t parent_order, std::vector<Elem> elements);

  std::size_t order() const { return elements_.size(); }
  bool contains(Elem x) const { return member_[x]; }
  std::span<const Elem> elements() const { return elements_; }
  bool is_trivial() const { return elements_.size() == 1; }
  bool operator==(const Subgroup& o) const { return elements_ == o.elements_; }
  /// True when every element of *this lies in `o`.
  bool is_subset_of(const Subgroup& o) const;

 private:
  std::vector<Elem> elements_;
  std::vector<bool> member_;
};

/// The subgroup generated by `gens` (the trivial subgroup for no generators).
Subgroup generated_subgroup(const TableGroup& g, std::span<const Elem> gens);
Subgroup whole_group(const TableGroup& g);
Subgroup trivial_subgroup(const TableGroup& g);
/// <A, B>
Subgroup join(const TableGroup& g, const Subgroup& a, const Subgroup& b);

/// Throws GroupError unless `s` is closed under the product of `g`.
void require_subgroup(const TableGroup& g, const Subgroup& s);
bool is_normal(const TableGroup& g, const Subgroup& n);

Subgroup center(const TableGroup& g);
/// gamma_1 = G, gamma_2, ..., ending with the trivial subgroup. The list has
/// c + 1 entries for a group of class c (a single entry for the trivial group).
std::vector<Subgroup> lower_central_series(const TableGroup& g);

struct FrattiniAgemo {
  Subgroup frattini;
  Subgroup agemo;  ///< generated by all p-th powers
};
FrattiniAgemo frattini_agemo(const TableGroup& g);

struct Quotient {
  TableGroup group;
  /// projection[x] is the coset of x in `group`.
  std::vector<Elem> projection;
};
/// G/N for a normal subgroup N. Throws GroupError if N is not normal.
Quotient quotient(const TableGroup& g, const Subgroup& n);

/// Type of the abelian section H/K (K normal in H, H/K abelian), recovered
/// from the counts #{x in H : x^{p^j} in K}.
AbelianType section_type(const TableGroup& g, const Subgroup& h, const Subgroup& k);
/// Type of an abelian group. Throws GroupError for a nonabelian group.
AbelianType abelian_invariants(const TableGroup& g);
AbelianType abelian_invariants(const TableGroup& g, const Subgroup& s);

/// d(G) = log_p |G : Phi(G)|.
int min_generators(const TableGroup& g);

struct ProfileFlags {
  bool is_abelian = false;
  bool is_special = false;
  bool is_maximal_class = false;
  bool has_Gp_in_gamma2 = false;
  bool has_Gp_cyclic_p = false;
  bool has_Gp_equal_gamma2 = false;
};

struct GroupProfile {
  int p = 2;
  int n = 0;      ///< log_p |G|
  int k = 0;      ///< log_p |gamma_2(G)|
  int d = 0;      ///< d(G)
  int c = 0;      ///< nilpotency class
  int delta = 0;  ///< d(G/Z(G))
  int gamma = 0;  ///< d(gamma_2(G)/gamma_3(G))
  int t = 0;      ///< log_p |G^p|
  int z = 0;      ///< log_p |Z(G)|
  ProfileFlags flags;

  int mu() const { return std::min(d, c); }
  int nu() const { return std::min(d, gamma + 1); }
};

GroupProfile group_profile(const TableGroup& g);

}  // namespace multbound
