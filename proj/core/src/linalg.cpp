#include "k3dream/linalg.hpp"

#include <algorithm>

#include "k3dream/errors.hpp"

namespace k3dream {

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void negate_row(IntMatrix& m, std::size_t i) {
  for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = -m.at(i, j);
}

// row[dst] -= q * row[src]
void submul_row(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j)
    m.at(dst, j) -= q * m.at(src, j);
}

} // namespace

HnfResult hermite_normal_form(const IntMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0)
    throw InternalError("hermite_normal_form of empty matrix");
  IntMatrix h(m);
  IntMatrix u = IntMatrix::identity(m.rows());
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < h.cols() && pivot_row < h.rows(); ++col) {
    // Clear the column below pivot_row by gcd steps on row pairs.
    while (true) {
      std::size_t best = h.rows();
      for (std::size_t i = pivot_row; i < h.rows(); ++i) {
        if (h.at(i, col) == 0) continue;
        if (best == h.rows() ||
            cmp(abs(h.at(i, col)), abs(h.at(best, col))) < 0)
          best = i;
      }
      if (best == h.rows()) break; // column empty below
      swap_rows(h, pivot_row, best);
      swap_rows(u, pivot_row, best);
      bool cleared = true;
      for (std::size_t i = pivot_row + 1; i < h.rows(); ++i) {
        if (h.at(i, col) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), h.at(i, col).get_mpz_t(),
                   h.at(pivot_row, col).get_mpz_t());
        submul_row(h, i, pivot_row, q);
        submul_row(u, i, pivot_row, q);
        if (h.at(i, col) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (h.at(pivot_row, col) == 0) continue; // no pivot in this column
    if (h.at(pivot_row, col) < 0) {
      negate_row(h, pivot_row);
      negate_row(u, pivot_row);
    }
    // Reduce entries above the pivot into [0, pivot).
    for (std::size_t i = 0; i < pivot_row; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h.at(i, col).get_mpz_t(),
                 h.at(pivot_row, col).get_mpz_t());
      submul_row(h, i, pivot_row, q);
      submul_row(u, i, pivot_row, q);
    }
    ++pivot_row;
  }
  return {h, u};
}

std::vector<IntVector> integer_kernel(const IntMatrix& m) {
  if (m.cols() == 0) return {};
  if (m.rows() == 0) {
    std::vector<IntVector> basis;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      IntVector e(m.cols());
      e[j] = 1;
      basis.push_back(e);
    }
    return basis;
  }
  // Right kernel of m = left kernel of m^T: take the rows of the unimodular
  // transform that map onto zero rows of the HNF. Unimodularity makes the
  // result saturated.
  HnfResult hnf = hermite_normal_form(m.transposed());
  std::vector<IntVector> basis;
  for (std::size_t i = 0; i < hnf.h.rows(); ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < hnf.h.cols(); ++j)
      if (hnf.h.at(i, j) != 0) {
        zero = false;
        break;
      }
    if (zero) basis.push_back(hnf.u.row(i));
  }
  if (basis.empty()) return {};
  // Canonicalize the basis itself via HNF.
  IntMatrix b(basis.size(), m.cols());
  for (std::size_t i = 0; i < basis.size(); ++i) b.set_row(i, basis[i]);
  HnfResult canon = hermite_normal_form(b);
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < canon.h.rows(); ++i) {
    IntVector r = canon.h.row(i);
    if (std::any_of(r.begin(), r.end(), [](const Int& x) { return x != 0; }))
      out.push_back(r);
  }
  return out;
}

ComplementResult orthogonal_complement(
    const IntMatrix& gram, const std::vector<std::size_t>& indices) {
  if (!gram.is_symmetric())
    throw InternalError("orthogonal_complement needs a symmetric gram");
  for (std::size_t idx : indices)
    if (idx >= gram.rows()) throw IndexOutOfRange("complement index");

  std::vector<IntVector> basis;
  if (indices.empty()) {
    for (std::size_t j = 0; j < gram.cols(); ++j) {
      IntVector e(gram.cols());
      e[j] = 1;
      basis.push_back(e);
    }
  } else {
    IntMatrix conditions(indices.size(), gram.cols());
    for (std::size_t r = 0; r < indices.size(); ++r)
      conditions.set_row(r, gram.row(indices[r]));
    basis = integer_kernel(conditions);
  }

  // One size-reduction sweep against earlier basis vectors; keeps worked
  // examples in their published diagonal form.
  for (std::size_t j = 1; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      Int bii = gram_pair(gram, basis[i], basis[i]);
      if (bii == 0) continue;
      Int bij = gram_pair(gram, basis[i], basis[j]);
      Int t = round_nearest(make_rat(bij, bii));
      if (t == 0) continue;
      for (std::size_t k = 0; k < basis[j].size(); ++k)
        basis[j][k] -= t * basis[i][k];
    }
  }

  IntMatrix cgram(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j)
      cgram.at(i, j) = gram_pair(gram, basis[i], basis[j]);
  return {basis, cgram};
}

RatVector solve_linear(const RatMatrix& a, const RatVector& b) {
  if (a.rows() != b.size()) throw InternalError("solve_linear shape");
  if (a.rows() < a.cols())
    throw SingularSystem("fewer equations than unknowns");
  std::size_t rows = a.rows(), cols = a.cols();
  RatMatrix w(a);
  RatVector rhs(b);
  std::vector<std::size_t> pivot_of_col(cols, rows);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t p = rank;
    while (p < rows && w.at(p, col) == 0) ++p;
    if (p == rows) continue;
    if (p != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(w.at(rank, j), w.at(p, j));
      std::swap(rhs[rank], rhs[p]);
    }
    Rat piv = w.at(rank, col);
    for (std::size_t j = 0; j < cols; ++j) w.at(rank, j) /= piv;
    rhs[rank] /= piv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || w.at(i, col) == 0) continue;
      Rat f = w.at(i, col);
      for (std::size_t j = 0; j < cols; ++j) w.at(i, j) -= f * w.at(rank, j);
      rhs[i] -= f * rhs[rank];
    }
    pivot_of_col[col] = rank;
    ++rank;
  }
  for (std::size_t i = rank; i < rows; ++i)
    if (rhs[i] != 0) throw InconsistentSystem("no exact solution");
  if (rank < cols) throw SingularSystem("system does not determine all unknowns");
  RatVector x(cols);
  for (std::size_t col = 0; col < cols; ++col) x[col] = rhs[pivot_of_col[col]];
  // Re-verify every original equation; the overdetermined contract is exact.
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Rat s;
    for (std::size_t j = 0; j < cols; ++j) s += a.at(i, j) * x[j];
    if (s != b[i]) throw InconsistentSystem("residual is nonzero");
  }
  return x;
}

} // namespace k3dream
