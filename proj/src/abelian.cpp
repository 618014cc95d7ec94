#include "multbound/abelian.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace multbound {

AbelianType::AbelianType(int prime_, std::vector<int> exps_) : prime(prime_), exps(std::move(exps_)) {
  std::erase_if(exps, [](int a) { return a == 0; });
  if (std::any_of(exps.begin(), exps.end(), [](int a) { return a < 0; }))
    throw std::invalid_argument("negative exponent in abelian type");
  std::sort(exps.begin(), exps.end(), std::greater<>());
}

AbelianType AbelianType::from_orders(int prime, const std::vector<long long>& orders) {
  std::vector<int> exps;
  for (long long q : orders) {
    if (q < 1) throw std::invalid_argument("cyclic order must be positive");
    int a = 0;
    while (q % prime == 0) {
      q /= prime;
      ++a;
    }
    if (q != 1) throw std::invalid_argument("cyclic order is not a power of p");
    exps.push_back(a);
  }
  return AbelianType(prime, std::move(exps));
}

int AbelianType::log_order() const { return std::accumulate(exps.begin(), exps.end(), 0); }

bool AbelianType::is_elementary() const {
  return std::all_of(exps.begin(), exps.end(), [](int a) { return a == 1; });
}

std::string AbelianType::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < exps.size(); ++i) {
    long long q = 1;
    for (int t = 0; t < exps[i]; ++t) q *= prime;
    s += (i ? ", " : "") + std::to_string(q);
  }
  return s + "]";
}

AbelianType tensor_type(const AbelianType& a, const AbelianType& b) {
  if (!a.is_trivial() && !b.is_trivial() && a.prime != b.prime)
    throw std::invalid_argument("tensor product of groups for different primes");
  std::vector<int> out;
  for (int x : a.exps)
    for (int y : b.exps) out.push_back(std::min(x, y));
  return AbelianType(a.is_trivial() ? b.prime : a.prime, std::move(out));
}

HomExt hom_ext_type(const AbelianType& a, int j) {
  if (j < 1) throw std::invalid_argument("coefficient level must be >= 1");
  std::vector<int> m;
  for (int x : a.exps) m.push_back(std::min(x, j));
  AbelianType t(a.prime, m);
  return {t, t};
}

AbelianType abelian_multiplier(const AbelianType& a) {
  std::vector<int> out;
  for (std::size_t i = 0; i < a.exps.size(); ++i)
    for (std::size_t j = i + 1; j < a.exps.size(); ++j)
      out.push_back(std::min(a.exps[i], a.exps[j]));
  return AbelianType(a.prime, std::move(out));
}

}  // namespace multbound
