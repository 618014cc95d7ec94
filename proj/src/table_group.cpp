#include "multbound/table_group.hpp"

#include <random>
#include <string>

namespace multbound {

int exact_log(std::size_t value, int prime) {
  if (value == 0) return -1;
  int k = 0;
  while (value % prime == 0) {
    value /= prime;
    ++k;
  }
  return value == 1 ? k : -1;
}

TableGroup::TableGroup(int prime, std::vector<Elem> table,
                       std::optional<std::vector<NormalWord>> labels)
    : prime_(prime), table_(std::move(table)), labels_(std::move(labels)) {
  if (!is_prime(prime)) throw GroupError("not a prime: " + std::to_string(prime));
  std::size_t n = 0;
  while (n * n < table_.size()) ++n;
  if (n * n != table_.size() || n == 0) throw GroupError("table is not square");
  order_ = n;
  log_order_ = exact_log(n, prime);
  if (log_order_ < 0) throw GroupError("order " + std::to_string(n) + " is not a power of p");
  if (labels_ && labels_->size() != n) throw GroupError("label count mismatch");
  for (Elem x : table_)
    if (x >= n) throw GroupError("table entry out of range");

  bool found = false;
  for (Elem e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (Elem a = 0; a < n && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) {
      id_ = e;
      found = true;
    }
  }
  if (!found) throw GroupError("no identity element");

  // Each row must be a permutation (Latin square) for inverses to exist.
  inverse_.assign(n, static_cast<Elem>(n));
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b)
      if (mul(a, b) == id_) {
        inverse_[a] = b;
        break;
      }
    if (inverse_[a] == n || mul(inverse_[a], a) != id_)
      throw GroupError("element without a two-sided inverse");
  }
  if (associativity_failures(std::min<std::size_t>(1000, n * n * n), 0x5eed) != 0)
    throw GroupError("table is not associative");
}

TableGroup TableGroup::trivial(int prime) { return TableGroup(prime, std::vector<Elem>{0}); }

Elem TableGroup::pow(Elem a, long long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Elem out = id_;
  while (k > 0) {
    if (k & 1) out = mul(out, a);
    a = mul(a, a);
    k >>= 1;
  }
  return out;
}

int TableGroup::log_elem_order(Elem a) const {
  int k = 0;
  while (a != id_) {
    a = pow(a, prime_);
    ++k;
  }
  return k;
}

bool TableGroup::is_abelian() const {
  for (Elem a = 0; a < order_; ++a)
    for (Elem b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

TableGroup TableGroup::relabeled(std::span<const Elem> perm) const {
  if (perm.size() != order_) throw GroupError("permutation size mismatch");
  std::vector<Elem> t(order_ * order_);
  for (Elem a = 0; a < order_; ++a)
    for (Elem b = 0; b < order_; ++b) t[perm[a] * order_ + perm[b]] = perm[mul(a, b)];
  std::optional<std::vector<NormalWord>> labels;
  if (labels_) {
    labels.emplace(order_);
    for (Elem a = 0; a < order_; ++a) (*labels)[perm[a]] = (*labels_)[a];
  }
  return TableGroup(prime_, std::move(t), std::move(labels));
}

std::size_t TableGroup::associativity_failures(std::size_t samples, std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(order_ - 1));
  std::size_t bad = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    Elem a = pick(rng), b = pick(rng), c = pick(rng);
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) ++bad;
  }
  return bad;
}

TableGroup materialize_table(const PcPresentation& pres, std::size_t cap) {
  pres.validate();
  std::size_t order = 1;
  for (int i = 0; i < pres.ngens; ++i) {
    order *= static_cast<std::size_t>(pres.prime);
    if (order > cap)
      throw GroupError("group order exceeds table cap of " + std::to_string(cap));
  }
  if (auto r = consistency_check(pres); !r.consistent)
    throw GroupError("inconsistent presentation (overlap " + r.failing_test + ")");

  const int n = pres.ngens;
  std::vector<NormalWord> words(order);
  for (std::size_t i = 0; i < order; ++i) words[i] = word_from_index(i, pres.prime, n);

  // Right multiplication by each generator is collected directly; every other
  // product follows from b = b' g_k where g_k is the last letter of b.
  std::vector<Elem> by_gen(order * n);
  for (std::size_t a = 0; a < order; ++a)
    for (int k = 0; k < n; ++k)
      by_gen[a * n + k] = static_cast<Elem>(
          word_index(multiply(words[a], pres.generator(k), pres), pres.prime));
  std::vector<std::size_t> place(n);
  for (int k = 0; k < n; ++k) {
    place[k] = 1;
    for (int t = k + 1; t < n; ++t) place[k] *= pres.prime;
  }

  std::vector<Elem> table(order * order);
  for (std::size_t a = 0; a < order; ++a) {
    table[a * order] = static_cast<Elem>(a);
    for (std::size_t b = 1; b < order; ++b) {
      int last = n - 1;
      while (words[b].exponents[last] == 0) --last;
      std::size_t prefix = b - place[last];
      table[a * order + b] = by_gen[table[a * order + prefix] * n + last];
    }
  }
  return TableGroup(pres.prime, std::move(table), std::move(words));
}

}  // namespace multbound
