#include "homalt/matrix.hpp"

#include <utility>

#include "homalt/errors.hpp"

namespace homalt {

namespace {

Int lcm_int(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd(a, b) * b;
}

// Clears denominators row by row; the returned scales are the multipliers
// that were applied (always positive), so solutions and rank are unchanged.
std::vector<std::vector<Int>> integerize(const Matrix& m, std::vector<Rational>* scales) {
  std::vector<std::vector<Int>> rows(m.rows(), std::vector<Int>(m.cols()));
  if (scales) scales->assign(m.rows(), Rational(1));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Int l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) l = lcm_int(l, denominator(m(i, j)));
    if (l == 0) l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rational v = m(i, j) * l;
      rows[i][j] = numerator(v);
    }
    if (scales) (*scales)[i] = Rational(l);
  }
  return rows;
}

Int exact_div(const Int& a, const Int& b) {
  Int q, r;
  divide_qr(a, b, q, r);
  if (r != 0) throw Error("internal: fraction-free elimination produced a non-exact division");
  return q;
}

}  // namespace

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) throw DimensionMismatch("matrix product shape mismatch");
  Matrix r(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) r(i, j) += a * other(k, j);
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + other.data_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionMismatch("matrix difference shape mismatch");
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - other.data_[i];
  return r;
}

Matrix Matrix::scaled(const Rational& c) const {
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = c * data_[i];
  return r;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix apply shape mismatch");
  Vec r(rows_, Rational(0));
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j] == 0) continue;
    for (std::size_t i = 0; i < rows_; ++i) r[i] += (*this)(i, j) * v[j];
  }
  return r;
}

Vec Matrix::column(std::size_t j) const {
  if (j >= cols_) throw IndexOutOfRange("column index out of range");
  Vec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

bool Matrix::is_zero() const {
  for (const Rational& x : data_)
    if (x != 0) return false;
  return true;
}

std::size_t rank(const Matrix& m) {
  auto a = integerize(m, nullptr);
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  Int prev = 1;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t p = r;
    while (p < rows && a[p][col] == 0) ++p;
    if (p == rows) continue;  // no pivot in this column
    std::swap(a[r], a[p]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        a[i][j] = exact_div(a[i][j] * a[r][col] - a[i][col] * a[r][j], prev);
      }
      a[i][col] = 0;
    }
    prev = a[r][col];
    ++r;
  }
  return r;
}

FactoredMatrix::FactoredMatrix(const Matrix& h) : n_(h.rows()), singular_(false) {
  if (h.rows() != h.cols()) throw DimensionMismatch("factorization requires a square matrix");
  upper_ = integerize(h, &row_scale_);
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n_; ++k) {
    std::size_t p = k;
    while (p < n_ && upper_[p][k] == 0) ++p;
    if (p == n_) {
      singular_ = true;
      return;
    }
    if (p != k) {
      std::swap(upper_[k], upper_[p]);
      ops_.push_back(Op{true, Swap{k, p}, {}});
    }
    Elimination e;
    e.pivot_row = k;
    e.pivot = upper_[k][k];
    e.divisor = prev;
    for (std::size_t i = k + 1; i < n_; ++i) {
      if (upper_[i][k] == 0) continue;
      e.mults.emplace_back(i, upper_[i][k]);
      for (std::size_t j = k + 1; j < n_; ++j) {
        upper_[i][j] = exact_div(upper_[i][j] * e.pivot - upper_[i][k] * upper_[k][j], prev);
      }
      upper_[i][k] = 0;
    }
    // rows untouched by the subtraction still need the Bareiss rescale
    for (std::size_t i = k + 1; i < n_; ++i) {
      bool touched = false;
      for (auto& [row, mult] : e.mults) touched |= (row == i);
      if (touched) continue;
      for (std::size_t j = k + 1; j < n_; ++j) {
        upper_[i][j] = exact_div(upper_[i][j] * e.pivot, prev);
      }
    }
    prev = e.pivot;
    ops_.push_back(Op{false, {}, std::move(e)});
  }
  if (n_ > 0 && upper_[n_ - 1][n_ - 1] == 0) singular_ = true;
}

Vec FactoredMatrix::solve(const Vec& r) const {
  if (singular_) throw SingularMatrix("matrix is singular");
  if (r.size() != n_) throw DimensionMismatch("rhs size mismatch");
  Vec b(n_);
  for (std::size_t i = 0; i < n_; ++i) b[i] = r[i] * row_scale_[i];
  for (const Op& op : ops_) {
    if (op.is_swap) {
      std::swap(b[op.swap.a], b[op.swap.b]);
      continue;
    }
    const Elimination& e = op.elim;
    const std::size_t k = e.pivot_row;
    std::vector<bool> touched(n_, false);
    for (const auto& [row, mult] : e.mults) {
      b[row] = (b[row] * e.pivot - Rational(mult) * b[k]) / Rational(e.divisor);
      touched[row] = true;
    }
    for (std::size_t i = k + 1; i < n_; ++i) {
      if (!touched[i]) b[i] = b[i] * e.pivot / Rational(e.divisor);
    }
  }
  Vec x(n_, Rational(0));
  for (std::size_t ii = n_; ii-- > 0;) {
    Rational acc = b[ii];
    for (std::size_t j = ii + 1; j < n_; ++j) acc -= Rational(upper_[ii][j]) * x[j];
    x[ii] = acc / Rational(upper_[ii][ii]);
  }
  return x;
}

Vec solve_square(const Matrix& h, const Vec& r) {
  FactoredMatrix f(h);
  if (f.singular()) throw SingularMatrix("matrix is singular");
  return f.solve(r);
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse requires a square matrix");
  FactoredMatrix f(m);
  if (f.singular()) throw SingularMatrix("matrix is singular");
  const std::size_t n = m.rows();
  Matrix inv(n, n);
  Vec unit(n, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    unit[j] = 1;
    Vec col = f.solve(unit);
    unit[j] = 0;
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = col[i];
  }
  return inv;
}

std::vector<Vec> nullspace(const Matrix& m) {
  // Plain rational RREF; exact, and entry growth is irrelevant at this scale.
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<Vec> a(rows, Vec(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j);

  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t p = r;
    while (p < rows && a[p][col] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[r], a[p]);
    Rational inv_pivot = Rational(1) / a[r][col];
    for (std::size_t j = col; j < cols; ++j) a[r][j] *= inv_pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][col] == 0) continue;
      Rational f = a[i][col];
      for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(col);
    ++r;
  }

  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    Vec v(cols, Rational(0));
    v[free_col] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -a[i][free_col];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace homalt
