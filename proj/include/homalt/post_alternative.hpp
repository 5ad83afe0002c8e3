#pragma once

#include "homalt/bilinear_form.hpp"
#include "homalt/hom_algebra.hpp"
#include "homalt/operators.hpp"

namespace homalt {

/// Triple of even graded products (prec, succ, dot) sharing one even twist.
/// A pre-alternative structure is the special case dot = 0.
class PostAltStructure {
 public:
  PostAltStructure(SuperSpace space, Tensor3 prec, Tensor3 succ, Tensor3 dot, GradedMap twist);

  const SuperSpace& space() const { return space_; }
  const Tensor3& prec() const { return prec_; }
  const Tensor3& succ() const { return succ_; }
  const Tensor3& dot() const { return dot_; }
  const GradedMap& twist() const { return twist_; }
  std::size_t dim() const { return space_.dim(); }
  bool dot_is_zero() const { return dot_.is_zero(); }

  Vec mul_prec(const Vec& u, const Vec& v) const;
  Vec mul_succ(const Vec& u, const Vec& v) const;
  Vec mul_dot(const Vec& u, const Vec& v) const;
  /// Three-term sum product prec + succ + dot.
  Vec mul_sum(const Vec& u, const Vec& v) const;
  /// Two-term sum prec + succ (the pre-alternative reduction).
  Vec mul_sum2(const Vec& u, const Vec& v) const;

 private:
  Vec mul_with(const Tensor3& t, const Vec& u, const Vec& v) const;

  SuperSpace space_;
  Tensor3 prec_, succ_, dot_;
  GradedMap twist_;
};

/// Sum product prec + succ + dot as an algebra with the same twist.
HomAlgebra bullet(const PostAltStructure& p);

/// The ten compatibility axioms, one report entry each, evaluated verbatim
/// on all basis triples (the sum product expanded inline).
AxiomReport check_post_alternative(const PostAltStructure& p);

/// The four-identity reduction for dot = 0. Throws NotPreAlt otherwise.
AxiomReport check_pre_alternative(const PostAltStructure& p);

/// Pre-alternative associators (dot must vanish; sum product is two-term):
///   ass_l = (x sum y) succ a(z) - a(x) succ (y succ z)
///   ass_m = (x succ y) prec a(z) - a(x) succ (y prec z)
///   ass_r = (x prec y) prec a(z) - a(x) prec (y sum z)
Vec ass_l(const PostAltStructure& p, std::size_t i, std::size_t j, std::size_t k);
Vec ass_m(const PostAltStructure& p, std::size_t i, std::size_t j, std::size_t k);
Vec ass_r(const PostAltStructure& p, std::size_t i, std::size_t j, std::size_t k);

/// Splitting along a Rota-Baxter operator: x prec y = x R(y),
/// x succ y = R(x) y, dot = weight * product.
PostAltStructure rb_to_postalt(const HomAlgebra& a, const RotaBaxterOp& r);

/// Pushes all three products through a morphism and composes it onto the
/// twist. Throws NotAMorphism.
PostAltStructure postalt_yau_twist(const PostAltStructure& p, const GradedMap& beta);

/*
 * Splitting along a symplectic form (regular twist required): the products
 * are defined implicitly by
 *   w(x prec y, a^2(z)) = w(x, a^{-1}(y) z)
 *   w(x succ y, a^2(z)) = (-1)^{|x|(|y|+|z|)} w(y, z a^{-1}(x))
 * and recovered by one exact linear solve per basis pair against the matrix
 * H(i,k) = w(e_i, a^2(e_k)), factored once. dot = 0.
 */
PostAltStructure symplectic_split(const HomAlgebra& a, const BilinearForm& w);

/// True iff prec + succ equals the algebra product tensor exactly.
bool check_bullet_equals_product(const HomAlgebra& a, const BilinearForm& w,
                                 const PostAltStructure& p);

}  // namespace homalt
