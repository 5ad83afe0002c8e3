#include <doctest.h>

#include <random>

#include "homalt/errors.hpp"
#include "homalt/matrix.hpp"

using namespace homalt;

namespace {

Matrix from_rows(const std::vector<std::vector<int>>& rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

Matrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 3);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational(num(rng), den(rng));
  return m;
}

// Test-local rank oracle: plain rational Gaussian elimination, no Bareiss.
std::size_t plain_rank(Matrix m) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t p = r;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(p, j));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, col) == 0) continue;
      Rational f = m(i, col) / m(r, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

}  // namespace

TEST_CASE("rank of frozen examples") {
  CHECK(rank(from_rows({{1, 0}, {0, 0}})) == 1);
  CHECK(rank(Matrix::identity(4)) == 4);
  CHECK(rank(from_rows({{1, 2}, {2, 4}})) == 1);  // second row is twice the first
  CHECK(rank(Matrix(0, 0)) == 0);
  CHECK(rank(Matrix(3, 2)) == 0);
}

TEST_CASE("rank agrees with a plain elimination oracle on random matrices") {
  std::mt19937_64 rng(20240811);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
    Matrix m = random_matrix(rows, cols, rng);
    CHECK(rank(m) == plain_rank(m));
  }
}

TEST_CASE("rank is invariant under row swaps and nonzero scalings") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> scale_num(1, 4);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t rows = 2 + rng() % 4, cols = 1 + rng() % 5;
    Matrix m = random_matrix(rows, cols, rng);
    std::size_t expected = rank(m);
    std::size_t a = rng() % rows, b = rng() % rows;
    for (std::size_t j = 0; j < cols; ++j) std::swap(m(a, j), m(b, j));
    Rational c(scale_num(rng), 2);
    for (std::size_t j = 0; j < cols; ++j) m(0, j) *= c;
    CHECK(rank(m) == expected);
  }
}

TEST_CASE("solve_square frozen examples") {
  CHECK(solve_square(Matrix::identity(2), {Rational(3), Rational(5)}) ==
        Vec{Rational(3), Rational(5)});
  CHECK(solve_square(from_rows({{2, 0}, {0, 4}}), {Rational(1), Rational(1)}) ==
        Vec{Rational(1, 2), Rational(1, 4)});
  // back-substitution case
  CHECK(solve_square(from_rows({{1, 1}, {0, 1}}), {Rational(2), Rational(1)}) ==
        Vec{Rational(1), Rational(1)});
  CHECK_THROWS_AS(solve_square(from_rows({{1, 2}, {2, 4}}), {Rational(1), Rational(0)}),
                  SingularMatrix);
}

TEST_CASE("solve_square round-trips random systems") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 1 + rng() % 5;
    Matrix h = random_matrix(n, n, rng);
    if (rank(h) != n) continue;
    Vec v(n);
    std::uniform_int_distribution<int> num(-6, 6);
    for (std::size_t i = 0; i < n; ++i) v[i] = Rational(num(rng), 1 + static_cast<int>(rng() % 2));
    CHECK(solve_square(h, h.apply(v)) == v);
  }
}

TEST_CASE("FactoredMatrix reuses one factorization for many right-hand sides") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + rng() % 5;
    Matrix h = random_matrix(n, n, rng);
    if (rank(h) != n) continue;
    FactoredMatrix f(h);
    REQUIRE(!f.singular());
    for (int rhs = 0; rhs < 4; ++rhs) {
      Vec r(n);
      std::uniform_int_distribution<int> num(-6, 6);
      for (std::size_t i = 0; i < n; ++i) r[i] = num(rng);
      CHECK(f.solve(r) == solve_square(h, r));
    }
  }
  FactoredMatrix singular(from_rows({{1, 2}, {2, 4}}));
  CHECK(singular.singular());
  CHECK_THROWS_AS(singular.solve({Rational(1), Rational(0)}), SingularMatrix);
}

TEST_CASE("inverse") {
  CHECK(inverse(Matrix::identity(3)) == Matrix::identity(3));
  Matrix d = from_rows({{2, 0}, {0, 3}});
  Matrix expected(2, 2);
  expected(0, 0) = Rational(1, 2);
  expected(1, 1) = Rational(1, 3);
  CHECK(inverse(d) == expected);
  CHECK_THROWS_AS(inverse(from_rows({{0, 0}, {0, 0}})), SingularMatrix);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + rng() % 4;
    Matrix m = random_matrix(n, n, rng);
    if (rank(m) != n) continue;
    CHECK(m * inverse(m) == Matrix::identity(n));
  }
}

TEST_CASE("nullspace vectors solve M v = 0 and count the corank") {
  Matrix m = from_rows({{1, 2}, {2, 4}});
  auto basis = nullspace(m);
  REQUIRE(basis.size() == 1);
  CHECK(is_zero(m.apply(basis[0])));

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 5;
    Matrix a = random_matrix(rows, cols, rng);
    auto kernel = nullspace(a);
    CHECK(kernel.size() == cols - rank(a));
    for (const Vec& v : kernel) CHECK(is_zero(a.apply(v)));
  }
}

TEST_CASE("dimension mismatches throw") {
  CHECK_THROWS_AS(Matrix(2, 3) * Matrix(2, 3), DimensionMismatch);
  CHECK_THROWS_AS(Matrix(2, 2).apply(Vec(3)), DimensionMismatch);
  CHECK_THROWS_AS(FactoredMatrix(Matrix(2, 3)), DimensionMismatch);
}

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("6/4") == Rational(3, 2));  // normalized to lowest terms
  CHECK(format_rational(Rational(3, 2)) == "3/2");
  CHECK(format_rational(Rational(-8, 4)) == "-2");
  CHECK(format_rational(Rational(0)) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), RationalError);
  CHECK_THROWS_AS(parse_rational("1/-2"), RationalError);
  CHECK_THROWS_AS(parse_rational("a"), RationalError);
  CHECK_THROWS_AS(parse_rational(""), RationalError);
  CHECK_THROWS_AS(parse_rational("1.5"), RationalError);
}
