#ifndef K3DREAM_MATRIX_HPP
#define K3DREAM_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "k3dream/numbers.hpp"

namespace k3dream {

// Dense matrix over exact integers. Small sizes only; no sparsity.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  IntVector row(std::size_t i) const;
  void set_row(std::size_t i, const IntVector& v);

  IntMatrix transposed() const;
  bool is_symmetric() const;
  bool is_square() const { return rows_ == cols_; }

  // Fraction-free Bareiss elimination; exact for any square input.
  Int det() const;

  bool operator==(const IntMatrix& o) const = default;

  std::string str() const;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& v);

// Dense matrix over exact rationals (canonical reduced representation).
class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows);
  explicit RatMatrix(const IntMatrix& m);

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  RatVector row(std::size_t i) const;

  RatMatrix transposed() const;
  bool is_symmetric() const;
  bool is_square() const { return rows_ == cols_; }

  Rat det() const;
  // Gauss-Jordan inverse; throws SingularSystem when rank deficient.
  RatMatrix inverse() const;

  bool operator==(const RatMatrix& o) const = default;

  std::string str() const;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> data_;
};

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatVector operator*(const RatMatrix& a, const RatVector& v);

// v^T G w with respect to a symmetric Gram matrix.
Rat gram_pair(const RatMatrix& gram, const RatVector& v, const RatVector& w);
Int gram_pair(const IntMatrix& gram, const IntVector& v, const IntVector& w);

RatVector to_rat(const IntVector& v);
Rat dot(const RatVector& a, const RatVector& b);

std::string to_string(const IntVector& v);
std::string to_string(const RatVector& v);

} // namespace k3dream

#endif
