#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "mihull/rat.hpp"

namespace mihull {

/// Fixed-length vector of rationals.
class RatVec {
 public:
  RatVec() = default;
  explicit RatVec(std::size_t n) : e_(n) {}
  RatVec(std::vector<Rat> entries) : e_(std::move(entries)) {}
  RatVec(std::initializer_list<Rat> entries) : e_(entries) {}

  std::size_t size() const { return e_.size(); }
  Rat& operator[](std::size_t i) { return e_[i]; }
  const Rat& operator[](std::size_t i) const { return e_[i]; }
  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }
  auto begin() { return e_.begin(); }
  auto end() { return e_.end(); }
  const std::vector<Rat>& entries() const { return e_; }

  bool operator==(const RatVec& o) const { return e_ == o.e_; }
  /// Canonical order: lexicographic by exact rational value.
  bool operator<(const RatVec& o) const;

  RatVec head(std::size_t n) const;
  RatVec tail(std::size_t n) const;

 private:
  std::vector<Rat> e_;
};

RatVec operator+(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a, const RatVec& b);
RatVec operator*(const Rat& s, const RatVec& v);
Rat dot(const RatVec& a, const RatVec& b);
bool is_zero(const RatVec& v);
bool is_integral(const RatVec& v);

/// Row-major rectangular matrix of rationals.
class RatMat {
 public:
  RatMat() = default;
  RatMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  RatMat(std::initializer_list<std::initializer_list<Rat>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  RatVec row(std::size_t i) const;
  void set_row(std::size_t i, const RatVec& v);

  static RatMat from_rows(const std::vector<RatVec>& rows, std::size_t cols);
  static RatMat identity(std::size_t n);

  bool operator==(const RatMat& o) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

/// Exact determinant; fraction-free (Bareiss) elimination on an
/// integer-cleared copy. 0x0 matrix gives 1.
Rat mat_det(const RatMat& m);

/// Determinant of an integer matrix, Bareiss elimination.
Int int_mat_det(const std::vector<std::vector<Int>>& m);

/// Unique solution of a nonsingular square system; SingularMatrix otherwise.
RatVec mat_solve(const RatMat& m, const RatVec& rhs);

std::size_t mat_rank(const RatMat& m);

std::size_t encoding_size(const RatVec& v);
std::size_t encoding_size(const RatMat& m);

/// Reduced row echelon form.
struct Rref {
  RatMat mat;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
};
Rref rref(const RatMat& m);

/// Basis of the right nullspace {x : Mx = 0}.
std::vector<RatVec> kernel_basis(const RatMat& m);

/// Scales a rational row to integer entries with gcd 1; sign of the first
/// nonzero entry is preserved. Zero rows stay zero.
std::vector<Int> primitive_integer_row(const RatVec& v);
RatVec primitive_integer_vec(const RatVec& v);

/// Canonical sort + exact dedup of a point list.
std::vector<RatVec> sort_unique_points(std::vector<RatVec> pts);

}  // namespace mihull
