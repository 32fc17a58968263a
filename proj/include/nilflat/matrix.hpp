#pragma once

#include <optional>
#include <utility>

#include "rational.hpp"

namespace nilflat {

/// Dense exact rational matrix.
class Mat {
public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Rat(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& operator()(int i, int j) { return a_[i * cols_ + j]; }
  const Rat& operator()(int i, int j) const { return a_[i * cols_ + j]; }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  bool is_zero() const {
    for (auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw error("matrix product shape mismatch");
    Mat c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (int j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  friend Mat operator+(const Mat& a, const Mat& b) {
    Mat c(a.rows_, a.cols_);
    for (size_t i = 0; i < c.a_.size(); ++i) c.a_[i] = a.a_[i] + b.a_[i];
    return c;
  }

  friend Mat operator-(const Mat& a, const Mat& b) {
    Mat c(a.rows_, a.cols_);
    for (size_t i = 0; i < c.a_.size(); ++i) c.a_[i] = a.a_[i] - b.a_[i];
    return c;
  }

  Mat scaled(const Rat& c) const {
    Mat m = *this;
    for (auto& x : m.a_) x *= c;
    return m;
  }

  RatVec apply(const RatVec& v) const {
    if ((int)v.size() != cols_) throw error("matrix apply shape mismatch");
    RatVec r(rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (!(*this)(i, j).is_zero()) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  RatVec row(int i) const {
    RatVec r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
  }

  RatVec col(int j) const {
    RatVec c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  void set_col(int j, const RatVec& v) {
    for (int i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
  }

  /// In-place reduced row echelon form; returns pivot columns.
  std::vector<int> rref() {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
      int p = -1;
      for (int i = r; i < rows_; ++i)
        if (!(*this)(i, c).is_zero()) {
          p = i;
          break;
        }
      if (p < 0) continue;
      if (p != r)
        for (int j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(r, j));
      Rat inv = (*this)(r, c).inv();
      for (int j = 0; j < cols_; ++j) (*this)(r, j) *= inv;
      for (int i = 0; i < rows_; ++i) {
        if (i == r || (*this)(i, c).is_zero()) continue;
        Rat f = (*this)(i, c);
        for (int j = 0; j < cols_; ++j) (*this)(i, j) -= f * (*this)(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  int rank() const {
    Mat m = *this;
    return (int)m.rref().size();
  }

  /// Canonical kernel basis: one vector per free column, unit at its free
  /// column, zero at the other free columns (from the RREF).
  std::vector<RatVec> kernel_basis() const {
    Mat m = *this;
    auto pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (int f = 0; f < cols_; ++f) {
      if (is_pivot[f]) continue;
      RatVec v(cols_);
      v[f] = Rat(1);
      for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m((int)r, f);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  Rat det() const {
    if (rows_ != cols_) throw error("determinant of non-square matrix");
    Mat m = *this;
    Rat d(1);
    for (int c = 0; c < cols_; ++c) {
      int p = -1;
      for (int i = c; i < rows_; ++i)
        if (!m(i, c).is_zero()) {
          p = i;
          break;
        }
      if (p < 0) return Rat(0);
      if (p != c) {
        for (int j = 0; j < cols_; ++j) std::swap(m(p, j), m(c, j));
        d = -d;
      }
      d *= m(c, c);
      Rat inv = m(c, c).inv();
      for (int i = c + 1; i < rows_; ++i) {
        if (m(i, c).is_zero()) continue;
        Rat f = m(i, c) * inv;
        for (int j = c; j < cols_; ++j) m(i, j) -= f * m(c, j);
      }
    }
    return d;
  }

  std::optional<Mat> inverse() const {
    if (rows_ != cols_) throw error("inverse of non-square matrix");
    int n = rows_;
    Mat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
      aug(i, n + i) = Rat(1);
    }
    auto pivots = aug.rref();
    if ((int)pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    Mat inv(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
  }

  /// Signature (p, q) of a symmetric matrix, by exact congruence diagonalization.
  std::pair<int, int> signature() const {
    if (rows_ != cols_) throw error("signature of non-square matrix");
    Mat m = *this;
    int n = rows_, p = 0, q = 0;
    auto swap_rc = [&](int i, int j) {
      for (int c = 0; c < n; ++c) std::swap(m(i, c), m(j, c));
      for (int r = 0; r < n; ++r) std::swap(m(r, i), m(r, j));
    };
    for (int i = 0; i < n; ++i) {
      if (m(i, i).is_zero()) {
        int j = -1;
        for (int k = i + 1; k < n; ++k)
          if (!m(k, k).is_zero()) {
            j = k;
            break;
          }
        if (j >= 0) {
          swap_rc(i, j);
        } else {
          for (int k = i + 1; k < n; ++k)
            if (!m(i, k).is_zero()) {
              j = k;
              break;
            }
          if (j < 0) continue;  // zero row in the remaining block
          for (int c = 0; c < n; ++c) m(i, c) += m(j, c);
          for (int r = 0; r < n; ++r) m(r, i) += m(r, j);
        }
      }
      Rat d = m(i, i);
      for (int k = i + 1; k < n; ++k) {
        if (m(k, i).is_zero()) continue;
        Rat f = m(k, i) / d;
        for (int c = 0; c < n; ++c) m(k, c) -= f * m(i, c);
        for (int r = 0; r < n; ++r) m(r, k) -= f * m(r, i);
      }
      (d.sign() > 0 ? p : q) += 1;
    }
    return {p, q};
  }

  std::string str() const {
    std::string s;
    for (int i = 0; i < rows_; ++i) {
      s += i ? "\n[" : "[";
      for (int j = 0; j < cols_; ++j) {
        if (j) s += " ";
        s += (*this)(i, j).str();
      }
      s += "]";
    }
    return s;
  }

private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

/// Matrix whose columns are the given vectors.
inline Mat from_columns(const std::vector<RatVec>& cols, int rows) {
  Mat m(rows, (int)cols.size());
  for (int j = 0; j < (int)cols.size(); ++j) m.set_col(j, cols[j]);
  return m;
}

/// Extends the columns of M (full column rank) to a basis, by appending
/// standard basis vectors in order.
inline Mat complete_to_basis(const Mat& m) {
  int n = m.rows();
  std::vector<RatVec> chosen;
  for (int j = 0; j < m.cols(); ++j) chosen.push_back(m.col(j));
  for (int e = 0; e < n && (int)chosen.size() < n; ++e) {
    Mat ext(n, (int)chosen.size() + 1);
    for (int j = 0; j < (int)chosen.size(); ++j) ext.set_col(j, chosen[j]);
    RatVec unit(n);
    unit[e] = Rat(1);
    ext.set_col((int)chosen.size(), unit);
    if (ext.rank() == (int)chosen.size() + 1) chosen.push_back(unit);
  }
  if ((int)chosen.size() != n) throw error("complete_to_basis: input not full column rank");
  return from_columns(chosen, n);
}

/// Is v in the column span of M?
inline bool in_column_span(const Mat& m, const RatVec& v) {
  Mat ext(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) ext(i, j) = m(i, j);
  ext.set_col(m.cols(), v);
  return ext.rank() == m.rank();
}

}  // namespace nilflat
