#pragma once

#include "homalt/bilinear_form.hpp"
#include "homalt/hom_algebra.hpp"
#include "homalt/report.hpp"
#include "homalt/super.hpp"

namespace homalt {

/// Weighted Rota-Baxter operator candidate. The map must be even;
/// commutation with the host algebra's twist is checked, never assumed.
class RotaBaxterOp {
 public:
  RotaBaxterOp(GradedMap map, Rational weight);

  const GradedMap& map() const { return map_; }
  const Rational& weight() const { return weight_; }

 private:
  GradedMap map_;
  Rational weight_;
};

/// Homogeneous map together with the twist power k of the Leibniz rule it is
/// tested against; the map's degree doubles as the derivation degree.
struct DerivationCandidate {
  GradedMap map;
  unsigned power = 0;
};

/// Twisted graded Leibniz rule
/// D(xy) = D(x) a^k(y) + (-1)^{|x||D|} a^k(x) D(y) on basis pairs.
AxiomReport check_superderivation(const HomAlgebra& a, const DerivationCandidate& d);

/// <D(x), y> + (-1)^{|x||D|} <x, D(y)> = 0 on basis pairs; when phi is given,
/// commutation phi D = D phi is a second entry.
AxiomReport check_antisymmetric(const BilinearForm& f, const DerivationCandidate& d,
                                const GradedMap* phi = nullptr);

/// Graded commutator D1 D2 - (-1)^{|D1||D2|} D2 D1; powers add.
DerivationCandidate derivation_bracket(const DerivationCandidate& d1,
                                       const DerivationCandidate& d2);

/// Three entries: evenness, twist commutation, and
/// R(x) R(y) = R(R(x) y + x R(y) + weight x y) on basis pairs.
AxiomReport check_rota_baxter(const HomAlgebra& a, const RotaBaxterOp& r);

/// x o y = R(x) y + x R(y) + weight x y, same twist. Requires an alternative
/// algebra and a verified Rota-Baxter operator.
HomAlgebra rb_derived_product(const HomAlgebra& a, const RotaBaxterOp& r);

/// Gram identity M^T G + G M + weight G = 0.
AxiomReport check_rb_form_compat(const BilinearForm& f, const RotaBaxterOp& r);

/// Form x, y -> <R^{-1}(x), y> for an invertible weight-0 operator on an
/// alpha-invariant pseudo-Euclidean structure; the result is symplectic.
BilinearForm rb_symplectic(const HomAlgebra& a, const BilinearForm& f, const RotaBaxterOp& r);

/// Exact basis of the space of a^k-superderivations of the given degree,
/// found by solving the Leibniz constraints (they are linear in the map).
std::vector<GradedMap> superderivation_space(const HomAlgebra& a, unsigned power, int degree);

/// Same, restricted to maps antisymmetric for f (and commuting with phi when
/// given).
std::vector<GradedMap> antisymmetric_derivation_space(const HomAlgebra& a, const BilinearForm& f,
                                                      unsigned power, int degree,
                                                      const GradedMap* phi = nullptr);

}  // namespace homalt
