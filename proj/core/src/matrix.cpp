#include "k3dream/matrix.hpp"

#include <sstream>

#include "k3dream/errors.hpp"

namespace k3dream {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InternalError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

void IntMatrix::set_row(std::size_t i, const IntVector& v) {
  if (v.size() != cols_) throw InternalError("set_row size mismatch");
  std::copy(v.begin(), v.end(), data_.begin() + i * cols_);
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool IntMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

Int IntMatrix::det() const {
  if (!is_square()) throw InternalError("determinant of non-square matrix");
  std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix a(*this);
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(a.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? " [" : "[");
    for (std::size_t j = 0; j < cols_; ++j)
      os << at(i, j).get_str() << (j + 1 < cols_ ? "," : "");
    os << "]";
  }
  os << "]";
  return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw InternalError("matrix product shape");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      for (std::size_t j = 0; j < b.cols(); ++j)
        c.at(i, j) += a.at(i, k) * b.at(k, j);
  return c;
}

IntVector operator*(const IntMatrix& a, const IntVector& v) {
  if (a.cols() != v.size()) throw InternalError("matrix-vector shape");
  IntVector w(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) w[i] += a.at(i, j) * v[j];
  return w;
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InternalError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RatMatrix::RatMatrix(const IntMatrix& m) : RatMatrix(m.rows(), m.cols()) {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = Rat(m.at(i, j));
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatVector RatMatrix::row(std::size_t i) const {
  return RatVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool RatMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

Rat RatMatrix::det() const {
  if (!is_square()) throw InternalError("determinant of non-square matrix");
  std::size_t n = rows_;
  if (n == 0) return 1;
  RatMatrix a(*this);
  Rat result = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a.at(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      result = -result;
    }
    result *= a.at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      Rat f = a.at(i, k) / a.at(k, k);
      if (f == 0) continue;
      for (std::size_t j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
    }
  }
  return result;
}

RatMatrix RatMatrix::inverse() const {
  if (!is_square()) throw InternalError("inverse of non-square matrix");
  std::size_t n = rows_;
  RatMatrix a(*this);
  RatMatrix inv = identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a.at(p, k) == 0) ++p;
    if (p == n) throw SingularSystem("matrix is not invertible");
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a.at(k, j), a.at(p, j));
        std::swap(inv.at(k, j), inv.at(p, j));
      }
    }
    Rat piv = a.at(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a.at(k, j) /= piv;
      inv.at(k, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a.at(i, k) == 0) continue;
      Rat f = a.at(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(k, j);
        inv.at(i, j) -= f * inv.at(k, j);
      }
    }
  }
  return inv;
}

std::string RatMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? " [" : "[");
    for (std::size_t j = 0; j < cols_; ++j)
      os << at(i, j).get_str() << (j + 1 < cols_ ? "," : "");
    os << "]";
  }
  os << "]";
  return os.str();
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw InternalError("matrix product shape");
  RatMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      for (std::size_t j = 0; j < b.cols(); ++j)
        c.at(i, j) += a.at(i, k) * b.at(k, j);
  return c;
}

RatVector operator*(const RatMatrix& a, const RatVector& v) {
  if (a.cols() != v.size()) throw InternalError("matrix-vector shape");
  RatVector w(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) w[i] += a.at(i, j) * v[j];
  return w;
}

Rat gram_pair(const RatMatrix& gram, const RatVector& v, const RatVector& w) {
  if (v.size() != gram.rows() || w.size() != gram.cols())
    throw InternalError("gram_pair shape");
  Rat s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < w.size(); ++j) s += v[i] * gram.at(i, j) * w[j];
  }
  return s;
}

Int gram_pair(const IntMatrix& gram, const IntVector& v, const IntVector& w) {
  if (v.size() != gram.rows() || w.size() != gram.cols())
    throw InternalError("gram_pair shape");
  Int s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < w.size(); ++j) s += v[i] * gram.at(i, j) * w[j];
  }
  return s;
}

RatVector to_rat(const IntVector& v) {
  RatVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

Rat dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw InternalError("dot shape");
  Rat s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::string to_string(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += v[i].get_str() + (i + 1 < v.size() ? "," : "");
  return s + ")";
}

std::string to_string(const RatVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += v[i].get_str() + (i + 1 < v.size() ? "," : "");
  return s + ")";
}

} // namespace k3dream
