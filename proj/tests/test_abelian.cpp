#include <doctest.h>

#include <set>
#include <stdexcept>

#include "multbound/abelian.hpp"
#include "multbound/linalg.hpp"

using namespace multbound;

namespace {

int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Every type with order at most p^maxlog.
std::vector<AbelianType> all_types(int p, int maxlog) {
  std::vector<AbelianType> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, int maxpart) -> void {
    out.emplace_back(p, cur);
    for (int a = std::min(left, maxpart); a >= 1; --a) {
      cur.push_back(a);
      self(self, left - a, a);
      cur.pop_back();
    }
  };
  rec(rec, maxlog, maxlog);
  return out;
}

// |A (x) B| as the order of the image of the universal bilinear map: span
// of the rows x_u (x) y_v over all element pairs, coordinates in the pairwise
// cyclic factors embedded in Z/p^top.
int brute_tensor_log(const AbelianType& a, const AbelianType& b) {
  const int p = a.prime;
  int top = 1;
  for (int x : a.exps) top = std::max(top, x);
  std::vector<std::vector<int>> ea, eb;
  auto elements = [&](const AbelianType& t, std::vector<std::vector<int>>& out) {
    std::vector<int> v(t.exps.size(), 0);
    while (true) {
      out.push_back(v);
      std::size_t i = 0;
      for (; i < v.size(); ++i) {
        if (++v[i] < ipow(p, t.exps[i])) break;
        v[i] = 0;
      }
      if (i == v.size()) break;
    }
  };
  elements(a, ea);
  elements(b, eb);
  ModMatrix m{p, top, a.exps.size() * b.exps.size(), {}};
  for (const auto& x : ea)
    for (const auto& y : eb) {
      std::vector<std::int64_t> row;
      for (std::size_t u = 0; u < a.exps.size(); ++u)
        for (std::size_t v = 0; v < b.exps.size(); ++v) {
          const int local = std::min(a.exps[u], b.exps[v]);
          const std::int64_t mod = ipow(p, local);
          row.push_back((static_cast<std::int64_t>(x[u]) * y[v] % mod) * ipow(p, top - local));
        }
      m.rows.push_back(row);
    }
  // the embedded coordinate (u,v) lives in p^{top-local} Z/p^top, of order p^local
  return span_log_order(m);
}

// |Hom(Z/p^a, Z/p^j)| by counting images of the generator.
int brute_hom_log(int p, int a, int j) {
  int count = 0;
  const int pa = ipow(p, a), pj = ipow(p, j);
  for (int y = 0; y < pj; ++y)
    if (static_cast<long long>(y) * pa % pj == 0) ++count;
  int log = 0;
  while (count > 1) {
    count /= p;
    ++log;
  }
  return log;
}

}  // namespace

TEST_CASE("abelian type basics") {
  const AbelianType t(3, {1, 2, 0});
  CHECK(t.exps == std::vector<int>{2, 1});
  CHECK(t.log_order() == 3);
  CHECK(t.to_string() == "[9, 3]");
  CHECK_FALSE(t.is_elementary());
  CHECK(AbelianType::from_orders(2, {2, 8}) == AbelianType(2, {3, 1}));
  CHECK_THROWS_AS(AbelianType::from_orders(2, {6}), std::invalid_argument);
  CHECK(AbelianType(5, {}).is_trivial());
}

TEST_CASE("tensor closed form") {
  CHECK(tensor_type(AbelianType(3, {}), AbelianType(3, {2, 1})).is_trivial());
  CHECK(tensor_type(AbelianType(3, {1}), AbelianType(3, {1, 1})) == AbelianType(3, {1, 1}));
  CHECK(tensor_type(AbelianType(3, {2}), AbelianType(3, {1})) == AbelianType(3, {1}));
  CHECK(brute_tensor_log(AbelianType(3, {2}), AbelianType(3, {1})) == 1);
  CHECK_THROWS(tensor_type(AbelianType(2, {1}), AbelianType(3, {1})));
}

TEST_CASE("tensor sizes match the bilinear image") {
  for (int p : {2, 3}) {
    const auto types = all_types(p, p == 2 ? 4 : 3);
    for (const auto& a : types)
      for (const auto& b : types) {
        if (a.log_order() + b.log_order() > (p == 2 ? 7 : 6)) continue;
        CAPTURE(a.to_string());
        CAPTURE(b.to_string());
        const AbelianType t = tensor_type(a, b);
        CHECK(t == tensor_type(b, a));
        CHECK(t.log_order() == brute_tensor_log(a, b));
      }
  }
}

TEST_CASE("hom and ext") {
  const HomExt triv = hom_ext_type(AbelianType(2, {}), 3);
  CHECK(triv.hom.is_trivial());
  CHECK(triv.ext.is_trivial());
  const HomExt c9 = hom_ext_type(AbelianType(3, {2}), 1);
  CHECK(c9.hom == AbelianType(3, {1}));
  CHECK(c9.ext == AbelianType(3, {1}));
  const HomExt v4 = hom_ext_type(AbelianType(2, {1, 1}), 2);
  CHECK(v4.hom == AbelianType(2, {1, 1}));
  CHECK(v4.ext == AbelianType(2, {1, 1}));
  for (int p : {2, 3})
    for (int a = 1; a <= 3; ++a)
      for (int j = 1; j <= 3; ++j) CHECK(hom_ext_type(AbelianType(p, {a}), j).hom.log_order() == brute_hom_log(p, a, j));
}

TEST_CASE("abelian multiplier closed form") {
  CHECK(abelian_multiplier(AbelianType(5, {3})).is_trivial());
  const AbelianType m = abelian_multiplier(AbelianType(3, {1, 1, 1}));
  CHECK(m.log_order() == 3);
  CHECK(m.is_elementary());
  CHECK(abelian_multiplier(AbelianType(2, {2, 1})) == AbelianType(2, {1}));
  for (int d = 1; d <= 5; ++d) CHECK(abelian_multiplier(AbelianType(2, std::vector<int>(d, 1))).log_order() == d * (d - 1) / 2);
}
