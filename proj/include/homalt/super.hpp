#pragma once

#include <string>
#include <vector>

#include "homalt/matrix.hpp"
#include "homalt/rational.hpp"

namespace homalt {

/// Koszul sign of transposing homogeneous elements of the given degrees:
/// -1 when both are odd, +1 otherwise.
inline int koszul_sign(int d1, int d2) { return (d1 == 1 && d2 == 1) ? -1 : 1; }

/// (-1)^exponent for non-negative integer exponents (only parity matters).
inline int sign_pow(unsigned exponent) { return (exponent & 1u) ? -1 : 1; }

/// Z2-graded vector space with an ordered homogeneous basis, even vectors
/// first. Basis index i is even iff i < even_dim().
class SuperSpace {
 public:
  SuperSpace() : even_dim_(0), odd_dim_(0) {}
  SuperSpace(std::size_t even_dim, std::size_t odd_dim,
             std::vector<std::string> basis_names = {});

  std::size_t even_dim() const { return even_dim_; }
  std::size_t odd_dim() const { return odd_dim_; }
  std::size_t dim() const { return even_dim_ + odd_dim_; }

  int degree(std::size_t i) const;
  const std::vector<std::string>& basis_names() const { return names_; }

  bool operator==(const SuperSpace& other) const = default;

 private:
  std::size_t even_dim_, odd_dim_;
  std::vector<std::string> names_;
};

/// Homogeneous linear map in column convention: column j holds the image of
/// basis vector j. Even maps are block-diagonal for the even/odd split, odd
/// maps block-antidiagonal; the constructor rejects anything else.
class GradedMap {
 public:
  GradedMap(SuperSpace space, Matrix matrix, int degree);

  static GradedMap identity(const SuperSpace& space);
  static GradedMap zero(const SuperSpace& space, int degree = 0);

  const SuperSpace& space() const { return space_; }
  const Matrix& matrix() const { return matrix_; }
  int degree() const { return degree_; }

  Vec apply(const Vec& v) const { return matrix_.apply(v); }
  Vec column(std::size_t j) const { return matrix_.column(j); }
  bool is_identity() const;

  bool operator==(const GradedMap& other) const = default;

 private:
  SuperSpace space_;
  Matrix matrix_;
  int degree_;
};

/// f after g; degrees add mod 2.
GradedMap compose(const GradedMap& f, const GradedMap& g);

/// Inverse map (same degree). Throws SingularMatrix.
GradedMap invert(const GradedMap& m);

/// n-fold composition, n = 0 giving the identity.
GradedMap power(const GradedMap& m, unsigned n);

/// Linear combinations of maps of equal degree on the same space.
GradedMap add(const GradedMap& f, const GradedMap& g);
GradedMap sub(const GradedMap& f, const GradedMap& g);

}  // namespace homalt
