#ifndef SEGREKIT_POLY_MATRIX_HPP
#define SEGREKIT_POLY_MATRIX_HPP

#include <vector>

#include "segrekit/polynomial.hpp"

namespace segrekit {

// Dense matrix over Q(i)[v] for the fraction-free (Bareiss) kernels.
// Entries must be univariate in the same variable (constants are fine).
class PolyMatrix {
 public:
  PolyMatrix(std::size_t rows, std::size_t cols, Var v)
      : rows_(rows), cols_(cols), var_(v), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Var var() const { return var_; }

  Poly& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Poly& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void set_row(std::size_t i, const std::vector<Poly>& row) {
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = row[j];
  }

  // Rank over the rational function field Q(i)(v), computed fraction-free:
  // division-free row combinations with per-row content stripping, so the
  // result is exact and coefficient growth stays bounded.
  std::size_t rank() const { return PolyMatrix(*this).eliminate_rank(); }

  // Determinant of a square matrix via Bareiss.
  Poly det() const {
    if (rows_ != cols_) throw std::invalid_argument("det: matrix not square");
    Poly d;
    PolyMatrix work(*this);
    std::size_t r = work.eliminate(&d);
    if (r < rows_) return Poly();  // singular
    return d;
  }

 private:
  // new_row = pivot * row - row[col] * pivot_row, then strip the scalar
  // content of each new row.  Row scaling by nonzero elements preserves rank
  // over the field, so the count of nonzero pivot rows is the exact rank.
  std::size_t eliminate_rank() {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
      std::size_t best = rows_;
      int best_deg = -1;
      for (std::size_t i = rank; i < rows_; ++i) {
        const Poly& p = at(i, col);
        if (p.is_zero()) continue;
        int d = p.degree_in(var_);
        if (best == rows_ || d < best_deg) {
          best = i;
          best_deg = d;
        }
      }
      if (best == rows_) continue;
      if (best != rank)
        for (std::size_t j = 0; j < cols_; ++j) std::swap(at(best, j), at(rank, j));
      const Poly pivot = at(rank, col);
      for (std::size_t i = rank + 1; i < rows_; ++i) {
        if (at(i, col).is_zero()) continue;
        for (std::size_t j = col + 1; j < cols_; ++j)
          at(i, j) = at(i, j) * pivot - at(i, col) * at(rank, j);
        at(i, col) = Poly();
        strip_content(i);
      }
      ++rank;
    }
    return rank;
  }

  void strip_content(std::size_t row) {
    mpz_class num_gcd = 0, den_lcm = 1;
    for (std::size_t j = 0; j < cols_; ++j)
      for (const auto& [m, c] : at(row, j).terms())
        for (const Rat* r : {&c.re(), &c.im()}) {
          if (*r == 0) continue;
          mpz_class n = abs(r->get_num());
          mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
          mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), r->get_den().get_mpz_t());
        }
    if (num_gcd == 0) return;
    Rat scale(den_lcm, num_gcd);
    scale.canonicalize();
    ComplexRational s{scale};
    for (std::size_t j = 0; j < cols_; ++j) at(row, j) = s * at(row, j);
  }

  // Fraction-free Gaussian elimination; returns the rank.  When det_out is
  // non-null and the matrix is square of full rank, *det_out is set to the
  // determinant (last pivot, sign-corrected for row swaps).
  std::size_t eliminate(Poly* det_out) {
    const Poly one = Poly::constant(1);
    Poly prev = one;
    int sign = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
      // pick the lowest-degree nonzero pivot in this column to limit growth
      std::size_t best = rows_;
      int best_deg = -1;
      for (std::size_t i = rank; i < rows_; ++i) {
        const Poly& p = at(i, col);
        if (p.is_zero()) continue;
        int d = p.degree_in(var_);
        if (best == rows_ || d < best_deg) {
          best = i;
          best_deg = d;
        }
      }
      if (best == rows_) continue;
      if (best != rank) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap(at(best, j), at(rank, j));
        sign = -sign;
      }
      const Poly pivot = at(rank, col);
      for (std::size_t i = rank + 1; i < rows_; ++i) {
        for (std::size_t j = col + 1; j < cols_; ++j) {
          Poly t = at(i, j) * pivot - at(i, col) * at(rank, j);
          at(i, j) = (prev == one) ? t : divide_exact(t, prev, var_);
        }
        at(i, col) = Poly();
      }
      prev = pivot;
      ++rank;
    }
    if (det_out != nullptr && rank == rows_ && rows_ == cols_) {
      Poly d = at(rows_ - 1, cols_ - 1);
      *det_out = (sign < 0) ? -d : d;
    }
    return rank;
  }

  std::size_t rows_, cols_;
  Var var_;
  std::vector<Poly> data_;
};

// Sylvester-matrix resultant of two polynomials in the eliminated variable
// elim; the entries (and the result) are polynomials in the other variables.
// Both inputs must have positive degree in elim.
Poly resultant(const Poly& a, const Poly& b, Var elim, Var kept);

}  // namespace segrekit

#endif
