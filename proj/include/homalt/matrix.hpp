#pragma once

#include <cstddef>
#include <vector>

#include "homalt/rational.hpp"

namespace homalt {

/// Dense rational matrix, row-major.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool operator==(const Matrix& other) const = default;

  Matrix transpose() const;
  Matrix operator*(const Matrix& other) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix scaled(const Rational& c) const;

  Vec apply(const Vec& v) const;
  Vec column(std::size_t j) const;
  bool is_zero() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

/*
 * Exact rank / solving via fraction-free (Bareiss) elimination: rows are
 * scaled to integers first, then every eliminated entry is a minor of the
 * scaled matrix and all divisions are exact. No pivoting heuristics are
 * needed beyond "first nonzero".
 */
std::size_t rank(const Matrix& m);

/// Unique solution of H v = r for square invertible H. Throws SingularMatrix.
Vec solve_square(const Matrix& h, const Vec& r);

/// Throws SingularMatrix when not invertible.
Matrix inverse(const Matrix& m);

/// Basis of {v : M v = 0}, deterministic order (free columns left to right).
std::vector<Vec> nullspace(const Matrix& m);

/// One-time Bareiss forward elimination of a square matrix, reusable for
/// many right-hand sides (the recorded row operations are replayed on each).
class FactoredMatrix {
 public:
  explicit FactoredMatrix(const Matrix& h);

  bool singular() const { return singular_; }
  std::size_t size() const { return n_; }

  /// Solves H v = r. Throws SingularMatrix when the factorization failed.
  Vec solve(const Vec& r) const;

 private:
  struct Swap {
    std::size_t a, b;
  };
  struct Elimination {
    std::size_t pivot_row;
    Int pivot, divisor;                            // divisor = previous pivot
    std::vector<std::pair<std::size_t, Int>> mults;  // (row, multiplier)
  };
  struct Op {
    bool is_swap;
    Swap swap;
    Elimination elim;
  };

  std::size_t n_;
  bool singular_;
  std::vector<Rational> row_scale_;  // applied to the rhs before replay
  std::vector<Op> ops_;
  std::vector<std::vector<Int>> upper_;  // final eliminated integer rows
};

}  // namespace homalt
