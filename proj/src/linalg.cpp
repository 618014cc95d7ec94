#include "multbound/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <tuple>

namespace multbound {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in matrix arithmetic");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in matrix arithmetic");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in matrix arithmetic");
  return r;
}

}  // namespace

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      std::int64_t a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        out(i, j) = checked_add(out(i, j), checked_mul(a, o(k, j)));
    }
  return out;
}

std::vector<std::int64_t> smith_normal_form(IntMatrix m) {
  const std::size_t R = m.rows(), C = m.cols();
  const std::size_t D = std::min(R, C);
  auto swap_rows = [&](std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < C; ++j) std::swap(m(a, j), m(b, j));
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < R; ++i) std::swap(m(i, a), m(i, b));
  };

  for (std::size_t t = 0; t < D; ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pr = R, pc = C;
      for (std::size_t i = t; i < R; ++i)
        for (std::size_t j = t; j < C; ++j)
          if (m(i, j) != 0 && (pr == R || std::llabs(m(i, j)) < std::llabs(m(pr, pc)))) {
            pr = i;
            pc = j;
          }
      if (pr == R) {
        std::vector<std::int64_t> out;
        for (std::size_t s = 0; s < D; ++s) out.push_back(s < t ? std::llabs(m(s, s)) : 0);
        return out;
      }
      swap_rows(t, pr);
      swap_cols(t, pc);
      const std::int64_t piv = m(t, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < R; ++i) {
        std::int64_t q = m(i, t) / piv;
        if (q != 0)
          for (std::size_t j = t; j < C; ++j) m(i, j) = checked_sub(m(i, j), checked_mul(q, m(t, j)));
        if (m(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        std::int64_t q = m(t, j) / piv;
        if (q != 0)
          for (std::size_t i = t; i < R; ++i) m(i, j) = checked_sub(m(i, j), checked_mul(q, m(i, t)));
        if (m(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Enforce the divisibility chain: fold an offending row into row t.
      std::size_t bad = R;
      for (std::size_t i = t + 1; i < R && bad == R; ++i)
        for (std::size_t j = t + 1; j < C; ++j)
          if (m(i, j) % piv != 0) {
            bad = i;
            break;
          }
      if (bad == R) break;
      for (std::size_t j = t; j < C; ++j) m(t, j) = checked_add(m(t, j), m(bad, j));
    }
  }
  std::vector<std::int64_t> out;
  for (std::size_t s = 0; s < D; ++s) out.push_back(std::llabs(m(s, s)));
  return out;
}

int valuation(std::int64_t x, int p) {
  if (x == 0) throw std::invalid_argument("valuation of zero");
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

ModEchelon::ModEchelon(int prime, int exponent, std::size_t cols)
    : p_(prime), e_(exponent), cols_(cols), pivot_(cols), pivot_val_(cols, -1) {
  if (exponent < 1) throw std::invalid_argument("modulus exponent must be >= 1");
  pow_.push_back(1);
  for (int i = 0; i < exponent; ++i) {
    if (pow_.back() > (std::int64_t{1} << 30) / prime)
      throw std::overflow_error("modulus p^e too large");
    pow_.push_back(pow_.back() * prime);
  }
  mod_ = pow_.back();
}

std::int64_t ModEchelon::unit_inverse(std::int64_t u) const {
  // extended Euclid on (u, p^e)
  std::int64_t a = u, b = mod_, x0 = 1, x1 = 0;
  while (b != 0) {
    std::int64_t q = a / b;
    std::tie(a, b) = std::make_pair(b, a - q * b);
    std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
  }
  if (a != 1) throw std::logic_error("not a unit");
  return ((x0 % mod_) + mod_) % mod_;
}

void ModEchelon::insert(std::span<const std::int64_t> row) {
  if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
  std::vector<std::int64_t> r(row.begin(), row.end());
  for (auto& x : r) x = ((x % mod_) + mod_) % mod_;
  reduce_and_place(std::move(r));
}

void ModEchelon::insert_sparse(std::span<const std::pair<std::uint32_t, std::int64_t>> entries) {
  std::vector<std::int64_t> r(cols_, 0);
  for (auto [c, v] : entries) {
    if (c >= cols_) throw std::invalid_argument("column out of range");
    r[c] = (((r[c] + v) % mod_) + mod_) % mod_;
  }
  reduce_and_place(std::move(r));
}

void ModEchelon::reduce_and_place(std::vector<std::int64_t> first) {
  pending_.push_back(std::move(first));
  while (!pending_.empty()) {
    std::vector<std::int64_t> r = std::move(pending_.back());
    pending_.pop_back();
    for (std::size_t c = 0; c < cols_; ++c) {
      if (r[c] == 0) continue;
      const int v = valuation(r[c], p_);
      if (pivot_val_[c] < 0 || v < pivot_val_[c]) {
        // Normalise so the leading entry is exactly p^v.
        const std::int64_t scale = unit_inverse(r[c] / pow_[v]);
        for (std::size_t j = c; j < cols_; ++j) r[j] = (r[j] * scale) % mod_;
        if (v > 0) {
          std::vector<std::int64_t> ann(cols_, 0);
          for (std::size_t j = c; j < cols_; ++j) ann[j] = (r[j] * pow_[e_ - v]) % mod_;
          pending_.push_back(std::move(ann));
        }
        if (pivot_val_[c] < 0) {
          pivot_[c] = std::move(r);
          pivot_val_[c] = v;
          break;
        }
        std::swap(r, pivot_[c]);
        pivot_val_[c] = v;
      }
      // r[c] is divisible by the pivot entry p^{pivot_val_[c]}.
      const auto& piv = pivot_[c];
      const std::int64_t q = (r[c] / pow_[pivot_val_[c]]) % mod_;
      const std::int64_t neg = mod_ - q;
      for (std::size_t j = c; j < cols_; ++j)
        if (piv[j] != 0) r[j] = (r[j] + neg * piv[j]) % mod_;
    }
  }
}

int ModEchelon::log_span_order() const {
  int total = 0;
  for (int v : pivot_val_)
    if (v >= 0) total += e_ - v;
  return total;
}

std::size_t ModEchelon::pivot_count() const {
  return static_cast<std::size_t>(std::count_if(pivot_val_.begin(), pivot_val_.end(),
                                                [](int v) { return v >= 0; }));
}

std::vector<std::vector<std::int64_t>> ModEchelon::basis_rows() const {
  std::vector<std::vector<std::int64_t>> out;
  for (std::size_t c = 0; c < cols_; ++c)
    if (pivot_val_[c] >= 0) out.push_back(pivot_[c]);
  return out;
}

int span_log_order(const ModMatrix& m) {
  ModEchelon ech(m.prime, m.exponent, m.cols);
  for (const auto& r : m.rows) ech.insert(r);
  return ech.log_span_order();
}

}  // namespace multbound
