#pragma once

#include <cstddef>

#include "homalt/report.hpp"
#include "homalt/super.hpp"

namespace homalt {

/// Rank-3 structure-constant tensor: c(i,j,k) is the e_k coordinate of the
/// product of basis vectors e_i and e_j.
class Tensor3 {
 public:
  Tensor3() : n_(0) {}
  explicit Tensor3(std::size_t n) : n_(n), data_(n * n * n, Rational(0)) {}

  std::size_t dim() const { return n_; }
  Rational& at(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * n_ + j) * n_ + k]; }
  const Rational& at(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * n_ + j) * n_ + k];
  }

  bool operator==(const Tensor3& other) const = default;
  bool is_zero() const;

  Tensor3 operator+(const Tensor3& other) const;
  Tensor3 scaled(const Rational& c) const;

 private:
  std::size_t n_;
  std::vector<Rational> data_;
};

/*
 * A Z2-graded algebra with a twist: an even bilinear product given by exact
 * structure constants together with an even linear twist map. The product
 * must respect the grading (deg of e_i e_j components equals deg i + deg j
 * mod 2); the constructor rejects violations. Whether the twist is a
 * self-morphism of the product is a named check, not an invariant, since
 * several constructions need it as an explicit precondition on user data.
 */
class HomAlgebra {
 public:
  HomAlgebra(SuperSpace space, Tensor3 product, GradedMap twist);

  const SuperSpace& space() const { return space_; }
  const Tensor3& product() const { return product_; }
  const GradedMap& twist() const { return twist_; }
  std::size_t dim() const { return space_.dim(); }

  /// Coordinates of e_i e_j.
  Vec product_of(std::size_t i, std::size_t j) const;

  /// Bilinear extension of the product to coordinate vectors.
  Vec mul(const Vec& u, const Vec& v) const;

 private:
  SuperSpace space_;
  Tensor3 product_;
  GradedMap twist_;
};

/// Twisted associator of basis vectors: (e_i e_j) a(e_k) - a(e_i) (e_j e_k).
Vec associator(const HomAlgebra& a, std::size_t i, std::size_t j, std::size_t k);

AxiomReport check_multiplicative(const HomAlgebra& a);
AxiomReport check_hom_associative(const HomAlgebra& a);
AxiomReport check_left_alternative(const HomAlgebra& a);
AxiomReport check_right_alternative(const HomAlgebra& a);
/// Conjunction of the left and right checks (two entries).
AxiomReport check_alternative(const HomAlgebra& a);
AxiomReport check_flexible(const HomAlgebra& a);
AxiomReport check_cyclic_associator(const HomAlgebra& a);

/// Super-anticommutativity plus the twisted quartic Malcev identity, as two
/// separate report entries.
AxiomReport check_hom_malcev(const HomAlgebra& bracket);

/// Product compatibility f(xy) = f(x)f(y) and twist compatibility fa = a'f,
/// as two entries. The weak variant reports the product entry only.
AxiomReport check_morphism(const GradedMap& f, const HomAlgebra& a, const HomAlgebra& b);
AxiomReport check_weak_morphism(const GradedMap& f, const HomAlgebra& a, const HomAlgebra& b);

/// Opposite product x y -> -(-1)^{|x||y|} y x, same twist.
HomAlgebra opposite(const HomAlgebra& a);

/// Pushes the product through a self-morphism and composes it onto the
/// twist. Throws NotAMorphism when beta is not a morphism of a.
HomAlgebra yau_twist(const HomAlgebra& a, const GradedMap& beta);

/// Inverse of the twist applied to both product arguments; resulting twist
/// is the identity. Requires an invertible, multiplicative twist.
HomAlgebra untwist(const HomAlgebra& a);

/// Product x y -> a^n(x) a^n(y) with twist a^{n+1}. Requires multiplicativity.
HomAlgebra alpha_power_twist(const HomAlgebra& a, unsigned n);

/// Super-commutator [x,y] = xy - (-1)^{|x||y|} yx as a new product, same twist.
HomAlgebra commutator_bracket(const HomAlgebra& a);

}  // namespace homalt
