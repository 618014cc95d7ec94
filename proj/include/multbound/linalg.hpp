// Exact linear algebra over Z and over Z/p^e.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace multbound {

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& o) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::int64_t> a_;
};

/// Invariant factors d_1 | d_2 | ... (non-negative, min(rows, cols) entries,
/// zeros last). Throws std::overflow_error if an intermediate leaves int64.
std::vector<std::int64_t> smith_normal_form(IntMatrix m);

/// p-adic valuation of a nonzero integer.
int valuation(std::int64_t x, int p);

/// Incremental echelon form over Z/p^e that tracks the order of the row span.
///
/// Pivots are normalised to p^v. Whenever a pivot with v > 0 is placed, its
/// annihilator multiple p^(e-v) * row is fed back in, so the stored rows form a
/// Howell-type basis and the span has order p^(sum over pivots of e - v).
class ModEchelon {
 public:
  ModEchelon(int prime, int exponent, std::size_t cols);

  int prime() const { return p_; }
  int exponent() const { return e_; }
  std::int64_t modulus() const { return mod_; }
  std::size_t cols() const { return cols_; }

  /// Adds a row (entries are reduced mod p^e first).
  void insert(std::span<const std::int64_t> row);
  /// Adds a sparse row given as (column, value) pairs.
  void insert_sparse(std::span<const std::pair<std::uint32_t, std::int64_t>> entries);

  /// log_p of the order of the span of every row inserted so far.
  int log_span_order() const;
  std::size_t pivot_count() const;
  /// The stored pivot rows; they generate the same submodule.
  std::vector<std::vector<std::int64_t>> basis_rows() const;

 private:
  void reduce_and_place(std::vector<std::int64_t> row);
  std::int64_t unit_inverse(std::int64_t u) const;

  int p_;
  int e_;
  std::int64_t mod_;
  std::size_t cols_;
  std::vector<std::int64_t> pow_;  // p^0 .. p^e
  std::vector<std::vector<std::int64_t>> pivot_;
  std::vector<int> pivot_val_;  // -1 when column has no pivot
  std::vector<std::vector<std::int64_t>> pending_;
};

/// A matrix over Z/p^e given by its rows.
struct ModMatrix {
  int prime = 2;
  int exponent = 1;
  std::size_t cols = 0;
  std::vector<std::vector<std::int64_t>> rows;
};

/// log_p of the order of the subgroup of (Z/p^e)^cols generated by the rows.
int span_log_order(const ModMatrix& m);

}  // namespace multbound
