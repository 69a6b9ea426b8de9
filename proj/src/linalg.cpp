#include "mihull/linalg.hpp"

#include <algorithm>

namespace mihull {

bool RatVec::operator<(const RatVec& o) const {
  const std::size_t n = std::min(size(), o.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (e_[i] != o.e_[i]) return e_[i] < o.e_[i];
  }
  return size() < o.size();
}

RatVec RatVec::head(std::size_t n) const {
  return RatVec(std::vector<Rat>(e_.begin(), e_.begin() + n));
}

RatVec RatVec::tail(std::size_t n) const {
  return RatVec(std::vector<Rat>(e_.end() - n, e_.end()));
}

RatVec operator+(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec operator-(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVec operator*(const Rat& s, const RatVec& v) {
  RatVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

Rat dot(const RatVec& a, const RatVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const RatVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& q) { return q == 0; });
}

bool is_integral(const RatVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& q) { return is_integer(q); });
}

RatMat::RatMat(std::initializer_list<std::initializer_list<Rat>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) raise(Errc::DimensionMismatch, "ragged matrix initializer");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

RatVec RatMat::row(std::size_t i) const {
  RatVec r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

void RatMat::set_row(std::size_t i, const RatVec& v) {
  for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

RatMat RatMat::from_rows(const std::vector<RatVec>& rows, std::size_t cols) {
  RatMat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

RatMat RatMat::identity(std::size_t n) {
  RatMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Int int_mat_det(const std::vector<std::vector<Int>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<Int>> a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t piv = k;
      while (piv < n && a[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : Int(-a[n - 1][n - 1]);
}

Rat mat_det(const RatMat& m) {
  if (m.rows() != m.cols()) raise(Errc::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Clear denominators row by row; track the accumulated scale.
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
  Int scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Int l = 1;
    for (std::size_t j = 0; j < n; ++j) l = boost::multiprecision::lcm(l, rat_den(m.at(i, j)));
    for (std::size_t j = 0; j < n; ++j) {
      const Rat& q = m.at(i, j);
      a[i][j] = rat_num(q) * (l / rat_den(q));
    }
    scale *= l;
  }
  return make_rat(int_mat_det(a), scale);
}

RatVec mat_solve(const RatMat& m, const RatVec& rhs) {
  if (m.rows() != m.cols()) raise(Errc::DimensionMismatch, "solve with non-square matrix");
  if (rhs.size() != m.rows()) raise(Errc::DimensionMismatch, "solve rhs length mismatch");
  const std::size_t n = m.rows();
  RatMat a(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a.at(i, j) = m.at(i, j);
    a.at(i, n) = rhs[i];
  }
  std::vector<std::size_t> rows(n);
  for (std::size_t i = 0; i < n; ++i) rows[i] = i;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a.at(rows[piv], k) == 0) ++piv;
    if (piv == n) raise(Errc::SingularMatrix, "singular system");
    std::swap(rows[k], rows[piv]);
    const Rat pivot = a.at(rows[k], k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Rat f = a.at(rows[i], k) / pivot;
      if (f == 0) continue;
      for (std::size_t j = k; j <= n; ++j) a.at(rows[i], j) -= f * a.at(rows[k], j);
    }
  }
  RatVec x(n);
  for (std::size_t k = n; k-- > 0;) {
    Rat s = a.at(rows[k], n);
    for (std::size_t j = k + 1; j < n; ++j) s -= a.at(rows[k], j) * x[j];
    x[k] = s / a.at(rows[k], k);
  }
  return x;
}

std::size_t mat_rank(const RatMat& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) return 0;
  // Fraction-free elimination on an integer-cleared copy.
  std::vector<std::vector<Int>> a(rows, std::vector<Int>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    Int l = 1;
    for (std::size_t j = 0; j < cols; ++j) l = boost::multiprecision::lcm(l, rat_den(m.at(i, j)));
    for (std::size_t j = 0; j < cols; ++j) {
      const Rat& q = m.at(i, j);
      a[i][j] = rat_num(q) * (l / rat_den(q));
    }
  }
  std::size_t rank = 0;
  Int prev = 1;
  std::size_t col = 0;
  for (; rank < rows && col < cols; ++col) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[rank], a[piv]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        a[i][j] = (a[i][j] * a[rank][col] - a[i][col] * a[rank][j]) / prev;
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

std::size_t encoding_size(const RatVec& v) {
  std::size_t s = 0;
  for (const Rat& q : v) s += encoding_size(q);
  return s;
}

std::size_t encoding_size(const RatMat& m) {
  std::size_t s = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) s += encoding_size(m.at(i, j));
  return s;
}

Rref rref(const RatMat& m) {
  Rref out;
  out.mat = m;
  RatMat& a = out.mat;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t piv = r;
    while (piv < rows && a.at(piv, col) == 0) ++piv;
    if (piv == rows) continue;
    for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(r, j), a.at(piv, j));
    const Rat pivot = a.at(r, col);
    for (std::size_t j = 0; j < cols; ++j) a.at(r, j) /= pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a.at(i, col) == 0) continue;
      const Rat f = a.at(i, col);
      for (std::size_t j = 0; j < cols; ++j) a.at(i, j) -= f * a.at(r, j);
    }
    out.pivot_cols.push_back(col);
    ++r;
  }
  out.rank = r;
  return out;
}

std::vector<RatVec> kernel_basis(const RatMat& m) {
  const std::size_t cols = m.cols();
  if (cols == 0) return {};
  if (m.rows() == 0) {
    std::vector<RatVec> basis;
    for (std::size_t j = 0; j < cols; ++j) {
      RatVec e(cols);
      e[j] = 1;
      basis.push_back(e);
    }
    return basis;
  }
  Rref r = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    RatVec v(cols);
    v[free_col] = 1;
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) {
      v[r.pivot_cols[i]] = -r.mat.at(i, free_col);
    }
    basis.push_back(v);
  }
  return basis;
}

std::vector<Int> primitive_integer_row(const RatVec& v) {
  Int l = 1;
  for (const Rat& q : v) l = boost::multiprecision::lcm(l, rat_den(q));
  std::vector<Int> out(v.size());
  Int g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = rat_num(v[i]) * (l / rat_den(v[i]));
    g = boost::multiprecision::gcd(g, out[i]);
  }
  if (g > 1) {
    for (Int& x : out) x /= g;
  }
  return out;
}

RatVec primitive_integer_vec(const RatVec& v) {
  std::vector<Int> ints = primitive_integer_row(v);
  RatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(ints[i]);
  return out;
}

std::vector<RatVec> sort_unique_points(std::vector<RatVec> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

}  // namespace mihull
