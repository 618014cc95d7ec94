// Brute-force second cohomology with trivial coefficients Z/p^j and the
// Schur multiplier recovered from it by universal coefficients.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "multbound/abelian.hpp"
#include "multbound/table_group.hpp"

namespace multbound {

inline constexpr std::size_t kDefaultOracleCap = 128;

class OracleCapExceeded : public GroupError {
 public:
  using GroupError::GroupError;
};

struct H2Size {
  int level = 1;     ///< j
  int log_z2 = 0;    ///< log_p |Z^2(G, Z/p^j)| (normalised cocycles)
  int log_b2 = 0;    ///< log_p |B^2(G, Z/p^j)|
  int log_h2() const { return log_z2 - log_b2; }
};

/// |H^2(G, Z/p^j)| as exponents of p. Throws OracleCapExceeded when
/// |G| > cap.
H2Size h2_size(const TableGroup& g, int level, std::size_t cap = kDefaultOracleCap);

struct MultiplierResult {
  std::string id;
  AbelianType type;   ///< M(G)
  int log_order = 0;  ///< m with |M(G)| = p^m
  /// h[j-1] = log_p |H^2(G, Z/p^j)| for j = 1..e, p^e >= |G|.
  std::vector<int> h;
  /// q[j-1] = h[j-1] - log_p |Ext(G^ab, Z/p^j)| = log_p |Hom(M(G), Z/p^j)|.
  std::vector<int> q;
};

/// Computes M(G) from the level sweep j = 1..e. Throws OracleCapExceeded,
/// or std::logic_error if the Hom-size sequence is not that of a finite
/// abelian group.
MultiplierResult multiplier_type(const TableGroup& g, std::size_t cap = kDefaultOracleCap);

/// Inverts q_j = sum_i min(m_i, j) for j = 1..e (with all m_i <= e).
AbelianType type_from_hom_sizes(int prime, const std::vector<int>& q);

}  // namespace multbound
