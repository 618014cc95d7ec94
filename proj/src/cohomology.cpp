#include "multbound/cohomology.hpp"

#include <algorithm>
#include <stdexcept>

#include "multbound/linalg.hpp"
#include "multbound/structure.hpp"

namespace multbound {

// Normalised 2-cocycles are parametrised by their values u(x, s) = f(x, s) for
// x != 1 and s in a generating set S. Along a breadth-first spanning tree of
// the Cayley graph (edges w -> w s) the cocycle identity
//   f(x, w s) = f(x w, s) + f(x, w) - f(w, s)
// determines every f(x, y) from the u's. A function built this way is a
// cocycle iff (df)(x, y, s) = 0 for all x, y and s in S: applying d to df
// shows (df)(x, y, z s) = (df)(x, y, z) whenever the s-conditions hold, and
// (df)(x, y, 1) = 0. The conditions are integer-linear in the u's, so one
// echelon form modulo p^E serves every level j <= E.
namespace {

using SparseVec = std::vector<std::pair<std::uint32_t, std::int64_t>>;

SparseVec combine(const SparseVec& a, const SparseVec& b, std::int64_t sign) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, sign * b[j].second);
      ++j;
    } else {
      std::int64_t v = a[i].second + sign * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

void add_term(SparseVec& v, std::uint32_t col, std::int64_t coef) {
  auto it = std::lower_bound(v.begin(), v.end(), col,
                             [](const auto& e, std::uint32_t c) { return e.first < c; });
  if (it != v.end() && it->first == col) {
    it->second += coef;
    if (it->second == 0) v.erase(it);
  } else {
    v.insert(it, {col, coef});
  }
}

std::vector<Elem> frattini_transversal(const TableGroup& g) {
  auto fa = frattini_agemo(g);
  std::vector<Elem> gens;
  Subgroup cur = fa.frattini;
  for (Elem x = 0; x < g.order(); ++x) {
    if (cur.contains(x)) continue;
    gens.push_back(x);
    std::vector<Elem> next(cur.elements().begin(), cur.elements().end());
    next.push_back(x);
    cur = generated_subgroup(g, next);
  }
  return gens;
}

struct CocycleSystem {
  std::size_t unknowns = 0;
  ModEchelon cocycles;
  ModEchelon coboundaries;
};

int level_cap(const TableGroup& g) {
  int e = 0;
  std::size_t q = 1;
  while (q < g.order()) {
    q *= static_cast<std::size_t>(g.prime());
    ++e;
  }
  return e;
}

CocycleSystem build_system(const TableGroup& g, int modulus_exp) {
  const std::size_t N = g.order();
  const Elem one = g.identity();
  const std::vector<Elem> gens = frattini_transversal(g);
  const std::size_t d = gens.size();

  std::vector<std::uint32_t> pos(N, 0);  // position among non-identity elements
  {
    std::uint32_t k = 0;
    for (Elem x = 0; x < N; ++x)
      if (x != one) pos[x] = k++;
  }
  const std::size_t U = (N - 1) * d;
  auto unknown = [&](Elem x, std::size_t s) {
    return static_cast<std::uint32_t>(pos[x] * d + s);
  };

  // Spanning tree of the right Cayley graph.
  std::vector<Elem> order{one}, parent(N, one);
  std::vector<std::size_t> via(N, 0);
  std::vector<char> seen(N, 0);
  seen[one] = 1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t s = 0; s < d; ++s) {
      Elem y = g.mul(order[i], gens[s]);
      if (!seen[y]) {
        seen[y] = 1;
        parent[y] = order[i];
        via[y] = s;
        order.push_back(y);
      }
    }
  if (order.size() != N) throw std::logic_error("generating set does not generate");

  CocycleSystem sys{U, ModEchelon(g.prime(), modulus_exp, U),
                    ModEchelon(g.prime(), modulus_exp, N - 1)};

  std::vector<SparseVec> f(N);  // f[y] = f(x, y) for the current x
  SparseVec row;
  for (Elem x = 0; x < N; ++x) {
    if (x == one) continue;
    f[one].clear();
    for (std::size_t i = 1; i < N; ++i) {
      Elem y = order[i], w = parent[y];
      std::size_t s = via[y];
      SparseVec v = f[w];
      Elem xw = g.mul(x, w);
      if (xw != one) add_term(v, unknown(xw, s), 1);
      if (w != one) add_term(v, unknown(w, s), -1);
      f[y] = std::move(v);
    }
    for (Elem y = 0; y < N; ++y) {
      if (y == one) continue;
      Elem xy = g.mul(x, y);
      for (std::size_t s = 0; s < d; ++s) {
        // (df)(x, y, s) = f(y, s) - f(xy, s) + f(x, ys) - f(x, y)
        row = combine(f[g.mul(y, gens[s])], f[y], -1);
        add_term(row, unknown(y, s), 1);
        if (xy != one) add_term(row, unknown(xy, s), -1);
        if (!row.empty()) sys.cocycles.insert_sparse(row);
      }
    }
  }

  // Coboundaries of normalised 1-cochains: (dc)(x, y) = c(x) + c(y) - c(xy).
  for (Elem x = 0; x < N; ++x) {
    if (x == one) continue;
    for (Elem y = 0; y < N; ++y) {
      if (y == one) continue;
      row.clear();
      add_term(row, pos[x], 1);
      add_term(row, pos[y], 1);
      Elem xy = g.mul(x, y);
      if (xy != one) add_term(row, pos[xy], -1);
      if (!row.empty()) sys.coboundaries.insert_sparse(row);
    }
  }
  return sys;
}

/// log_p of the span of `basis` reduced modulo p^level.
int span_at_level(const ModEchelon& ech, int level) {
  if (level == ech.exponent()) return ech.log_span_order();
  ModEchelon lower(ech.prime(), level, ech.cols());
  for (const auto& r : ech.basis_rows()) lower.insert(r);
  return lower.log_span_order();
}

void check_cap(const TableGroup& g, std::size_t cap) {
  if (g.order() > cap)
    throw OracleCapExceeded("group order " + std::to_string(g.order()) +
                            " exceeds oracle cap " + std::to_string(cap));
}

H2Size level_size(const CocycleSystem& sys, int level) {
  H2Size h;
  h.level = level;
  h.log_z2 = level * static_cast<int>(sys.unknowns) - span_at_level(sys.cocycles, level);
  h.log_b2 = span_at_level(sys.coboundaries, level);
  return h;
}

}  // namespace

H2Size h2_size(const TableGroup& g, int level, std::size_t cap) {
  check_cap(g, cap);
  if (level < 1) throw std::invalid_argument("coefficient level must be >= 1");
  if (g.order() == 1) return H2Size{level, 0, 0};
  auto sys = build_system(g, level);
  return level_size(sys, level);
}

AbelianType type_from_hom_sizes(int prime, const std::vector<int>& q) {
  const int e = static_cast<int>(q.size());
  std::vector<int> at_least(e + 2, 0);  // at_least[j] = #{i : m_i >= j}
  int prev = 0;
  for (int j = 1; j <= e; ++j) {
    at_least[j] = q[j - 1] - prev;
    prev = q[j - 1];
    if (at_least[j] < 0) throw std::logic_error("Hom sizes decrease with the level");
    if (j > 1 && at_least[j] > at_least[j - 1])
      throw std::logic_error("Hom-size increments are not non-increasing");
  }
  std::vector<int> exps;
  for (int j = 1; j <= e; ++j)
    for (int r = 0; r < at_least[j] - at_least[j + 1]; ++r) exps.push_back(j);
  return AbelianType(prime, std::move(exps));
}

MultiplierResult multiplier_type(const TableGroup& g, std::size_t cap) {
  check_cap(g, cap);
  MultiplierResult res;
  res.type = AbelianType(g.prime(), {});
  const int e = level_cap(g);
  if (e == 0) return res;

  auto lcs = lower_central_series(g);
  Subgroup derived = lcs.size() > 1 ? lcs[1] : trivial_subgroup(g);
  AbelianType ab = section_type(g, whole_group(g), derived);

  auto sys = build_system(g, e);
  for (int j = 1; j <= e; ++j) {
    H2Size h = level_size(sys, j);
    res.h.push_back(h.log_h2());
    res.q.push_back(h.log_h2() - hom_ext_type(ab, j).ext.log_order());
  }
  res.type = type_from_hom_sizes(g.prime(), res.q);
  res.log_order = res.type.log_order();
  return res;
}

}  // namespace multbound
