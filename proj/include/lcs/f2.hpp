#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcs/errors.hpp"

namespace lcs {

/// Dense bit vector over GF(2). Addition is XOR.
class F2Vector {
 public:
  F2Vector() = default;
  explicit F2Vector(std::size_t len) : len_(len), words_((len + 63) / 64, 0) {}

  static F2Vector from_string(std::string_view bits);

  std::size_t size() const { return len_; }

  bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i, bool v) {
    std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (v)
      words_[i / 64] |= mask;
    else
      words_[i / 64] &= ~mask;
  }
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  F2Vector& operator^=(const F2Vector& o);
  friend F2Vector operator+(F2Vector a, const F2Vector& b) { return a ^= b; }

  bool operator==(const F2Vector& o) const = default;

  bool is_zero() const;
  /// Parity of the bitwise AND, i.e. the standard dot product mod 2.
  bool dot(const F2Vector& o) const;
  /// Dot product over the integers (for quartic phase arithmetic).
  int dot_int(const F2Vector& o) const;
  std::size_t weight() const;

  /// Lexicographic order reading bit 0 first, 0 < 1.
  bool lex_less(const F2Vector& o) const;

  /// Concatenate [*this | tail].
  F2Vector concat(const F2Vector& tail) const;
  F2Vector slice(std::size_t begin, std::size_t end) const;

  std::string to_string() const;

 private:
  std::size_t len_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Dense row-major bit matrix over GF(2).
class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows, F2Vector(cols)) {}

  static F2Matrix identity(std::size_t n);
  static F2Matrix from_rows(const std::vector<F2Vector>& rows);
  /// Rows given as strings of 0/1 characters.
  static F2Matrix from_strings(const std::vector<std::string>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t i, std::size_t j) const { return data_[i].get(j); }
  void set(std::size_t i, std::size_t j, bool v) { data_[i].set(j, v); }

  const F2Vector& row(std::size_t i) const { return data_[i]; }
  void set_row(std::size_t i, const F2Vector& v);
  void add_row(std::size_t dst, std::size_t src) { data_[dst] ^= data_[src]; }
  void swap_rows(std::size_t i, std::size_t j) { std::swap(data_[i], data_[j]); }
  void add_col(std::size_t dst, std::size_t src);
  void swap_cols(std::size_t i, std::size_t j);

  bool operator==(const F2Matrix& o) const = default;
  bool is_zero() const;
  bool is_symmetric() const;

  F2Matrix transposed() const;
  /// Paste `block` with its top-left corner at (i, j).
  void paste(std::size_t i, std::size_t j, const F2Matrix& block);
  F2Matrix block(std::size_t i, std::size_t j, std::size_t h, std::size_t w) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<F2Vector> data_;
};

F2Matrix multiply(const F2Matrix& a, const F2Matrix& b);
inline F2Matrix operator*(const F2Matrix& a, const F2Matrix& b) { return multiply(a, b); }
/// Row vector times matrix.
F2Vector operator*(const F2Vector& v, const F2Matrix& a);

struct RowReduceResult {
  F2Matrix rref;
  std::vector<std::size_t> pivots;
  F2Matrix transform;  // transform * input = rref; always invertible
};

/// Gaussian elimination with first-nonzero (lowest row index) pivot selection.
RowReduceResult row_reduce(const F2Matrix& a);

std::size_t rank(const F2Matrix& a);

/// Throws SingularMatrix if rank < n.
F2Matrix inverse(const F2Matrix& a);

struct AffineSolution {
  F2Vector particular;
  std::vector<F2Vector> kernel_basis;
};

/// Solve A x^T = b^T. Returns nullopt when b is outside the column space.
std::optional<AffineSolution> solve_affine(const F2Matrix& a, const F2Vector& b);

/// Lexicographically smallest element of particular + span(kernel_basis).
F2Vector lex_min_affine(const AffineSolution& sol);

}  // namespace lcs
