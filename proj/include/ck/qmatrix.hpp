#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ck/rational.hpp"

namespace ck {

// Dense matrix over Q. Sizes stay small (a few hundred at most) and entries
// stay exact, so plain row-major storage with explicit elimination is enough.
class QMat {
 public:
  QMat() = default;
  QMat(long rows, long cols)
      : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows * cols)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix size");
  }

  static QMat identity(long n) {
    QMat m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  long rows() const { return rows_; }
  long cols() const { return cols_; }

  Rat& at(long r, long c) { return a_[static_cast<std::size_t>(r * cols_ + c)]; }
  const Rat& at(long r, long c) const { return a_[static_cast<std::size_t>(r * cols_ + c)]; }

  bool is_zero() const {
    for (const Rat& x : a_)
      if (sgn(x) != 0) return false;
    return true;
  }

  Rat trace() const {
    Rat t = 0;
    for (long i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
    return t;
  }

  QMat transposed() const {
    QMat m(cols_, rows_);
    for (long r = 0; r < rows_; ++r)
      for (long c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
    return m;
  }

  friend bool operator==(const QMat& x, const QMat& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

  friend QMat operator+(const QMat& x, const QMat& y) {
    require_same_shape(x, y);
    QMat m(x.rows_, x.cols_);
    for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] = x.a_[i] + y.a_[i];
    return m;
  }

  friend QMat operator-(const QMat& x, const QMat& y) {
    require_same_shape(x, y);
    QMat m(x.rows_, x.cols_);
    for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] = x.a_[i] - y.a_[i];
    return m;
  }

  friend QMat operator-(const QMat& x) {
    QMat m(x.rows_, x.cols_);
    for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] = -x.a_[i];
    return m;
  }

  friend QMat operator*(const Rat& s, const QMat& x) {
    QMat m(x.rows_, x.cols_);
    for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] = s * x.a_[i];
    return m;
  }

  // Skips zero entries of the left factor; the representation matrices this
  // library multiplies are signed permutations, so that makes products cheap.
  friend QMat operator*(const QMat& x, const QMat& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("matrix product shape mismatch");
    QMat m(x.rows_, y.cols_);
    for (long r = 0; r < x.rows_; ++r)
      for (long k = 0; k < x.cols_; ++k) {
        const Rat& xv = x.at(r, k);
        if (sgn(xv) == 0) continue;
        for (long c = 0; c < y.cols_; ++c) {
          const Rat& yv = y.at(k, c);
          if (sgn(yv) != 0) m.at(r, c) += xv * yv;
        }
      }
    return m;
  }

 private:
  static void require_same_shape(const QMat& x, const QMat& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
      throw std::invalid_argument("matrix shape mismatch");
  }

  long rows_ = 0;
  long cols_ = 0;
  std::vector<Rat> a_;
};

inline QMat kron(const QMat& x, const QMat& y) {
  QMat m(x.rows() * y.rows(), x.cols() * y.cols());
  for (long r = 0; r < x.rows(); ++r)
    for (long c = 0; c < x.cols(); ++c) {
      const Rat& xv = x.at(r, c);
      if (sgn(xv) == 0) continue;
      for (long s = 0; s < y.rows(); ++s)
        for (long d = 0; d < y.cols(); ++d) {
          const Rat& yv = y.at(s, d);
          if (sgn(yv) != 0) m.at(r * y.rows() + s, c * y.cols() + d) = xv * yv;
        }
    }
  return m;
}

inline QMat block_diag(const QMat& x, const QMat& y) {
  QMat m(x.rows() + y.rows(), x.cols() + y.cols());
  for (long r = 0; r < x.rows(); ++r)
    for (long c = 0; c < x.cols(); ++c) m.at(r, c) = x.at(r, c);
  for (long r = 0; r < y.rows(); ++r)
    for (long c = 0; c < y.cols(); ++c) m.at(x.rows() + r, x.cols() + c) = y.at(r, c);
  return m;
}

inline QMat from_rows(const std::vector<std::vector<Rat>>& rows) {
  const long nr = static_cast<long>(rows.size());
  const long nc = nr == 0 ? 0 : static_cast<long>(rows.front().size());
  QMat m(nr, nc);
  for (long r = 0; r < nr; ++r) {
    if (static_cast<long>(rows[static_cast<std::size_t>(r)].size()) != nc)
      throw std::invalid_argument("ragged matrix literal");
    for (long c = 0; c < nc; ++c)
      m.at(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  }
  return m;
}

// Row echelon rank via exact elimination.
inline long rank(QMat m) {
  long rk = 0;
  for (long c = 0; c < m.cols() && rk < m.rows(); ++c) {
    long pivot = -1;
    for (long r = rk; r < m.rows(); ++r)
      if (sgn(m.at(r, c)) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rk)
      for (long j = c; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(rk, j));
    const Rat inv = 1 / m.at(rk, c);
    for (long j = c; j < m.cols(); ++j) m.at(rk, j) *= inv;
    for (long r = 0; r < m.rows(); ++r) {
      if (r == rk || sgn(m.at(r, c)) == 0) continue;
      const Rat f = m.at(r, c);
      for (long j = c; j < m.cols(); ++j) m.at(r, j) -= f * m.at(rk, j);
    }
    ++rk;
  }
  return rk;
}

inline Rat det(QMat m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  Rat d = 1;
  const long n = m.rows();
  for (long c = 0; c < n; ++c) {
    long pivot = -1;
    for (long r = c; r < n; ++r)
      if (sgn(m.at(r, c)) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return Rat(0);
    if (pivot != c) {
      for (long j = c; j < n; ++j) std::swap(m.at(pivot, j), m.at(c, j));
      d = -d;
    }
    d *= m.at(c, c);
    const Rat inv = 1 / m.at(c, c);
    for (long r = c + 1; r < n; ++r) {
      if (sgn(m.at(r, c)) == 0) continue;
      const Rat f = m.at(r, c) * inv;
      for (long j = c; j < n; ++j) m.at(r, j) -= f * m.at(c, j);
    }
  }
  return d;
}

inline QMat inverse(QMat m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const long n = m.rows();
  QMat inv = QMat::identity(n);
  for (long c = 0; c < n; ++c) {
    long pivot = -1;
    for (long r = c; r < n; ++r)
      if (sgn(m.at(r, c)) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw std::domain_error("inverse of singular matrix");
    if (pivot != c)
      for (long j = 0; j < n; ++j) {
        std::swap(m.at(pivot, j), m.at(c, j));
        std::swap(inv.at(pivot, j), inv.at(c, j));
      }
    const Rat f = 1 / m.at(c, c);
    for (long j = 0; j < n; ++j) {
      m.at(c, j) *= f;
      inv.at(c, j) *= f;
    }
    for (long r = 0; r < n; ++r) {
      if (r == c || sgn(m.at(r, c)) == 0) continue;
      const Rat g = m.at(r, c);
      for (long j = 0; j < n; ++j) {
        m.at(r, j) -= g * m.at(c, j);
        inv.at(r, j) -= g * inv.at(c, j);
      }
    }
  }
  return inv;
}

// Reduced row echelon form with zero rows dropped: the canonical spanning
// matrix of the row space, so two row spans are equal iff their rrefs are.
inline QMat rref(QMat m) {
  long rk = 0;
  for (long c = 0; c < m.cols() && rk < m.rows(); ++c) {
    long pivot = -1;
    for (long r = rk; r < m.rows(); ++r)
      if (sgn(m.at(r, c)) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rk)
      for (long j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(rk, j));
    const Rat inv = 1 / m.at(rk, c);
    for (long j = 0; j < m.cols(); ++j) m.at(rk, j) *= inv;
    for (long r = 0; r < m.rows(); ++r) {
      if (r == rk || sgn(m.at(r, c)) == 0) continue;
      const Rat f = m.at(r, c);
      for (long j = 0; j < m.cols(); ++j) m.at(r, j) -= f * m.at(rk, j);
    }
    ++rk;
  }
  QMat out(rk, m.cols());
  for (long r = 0; r < rk; ++r)
    for (long j = 0; j < m.cols(); ++j) out.at(r, j) = m.at(r, j);
  return out;
}

inline QMat vstack(const QMat& x, const QMat& y) {
  if (x.cols() != y.cols()) throw std::invalid_argument("vstack column mismatch");
  QMat m(x.rows() + y.rows(), x.cols());
  for (long r = 0; r < x.rows(); ++r)
    for (long c = 0; c < x.cols(); ++c) m.at(r, c) = x.at(r, c);
  for (long r = 0; r < y.rows(); ++r)
    for (long c = 0; c < y.cols(); ++c) m.at(x.rows() + r, c) = y.at(r, c);
  return m;
}

// Basis (as rows) of {x : m x = 0}.
inline QMat null_space(const QMat& m) {
  const QMat e = rref(m);
  std::vector<long> pivot_col(e.rows());
  std::vector<bool> is_pivot(m.cols(), false);
  for (long r = 0; r < e.rows(); ++r) {
    long c = 0;
    while (sgn(e.at(r, c)) == 0) ++c;
    pivot_col[r] = c;
    is_pivot[c] = true;
  }
  QMat basis(m.cols() - e.rows(), m.cols());
  long k = 0;
  for (long free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis.at(k, free) = 1;
    for (long r = 0; r < e.rows(); ++r) basis.at(k, pivot_col[r]) = -e.at(r, free);
    ++k;
  }
  return basis;
}

}  // namespace ck
