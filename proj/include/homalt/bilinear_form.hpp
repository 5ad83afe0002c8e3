#pragma once

#include "homalt/hom_algebra.hpp"
#include "homalt/matrix.hpp"
#include "homalt/report.hpp"
#include "homalt/super.hpp"

namespace homalt {

enum class FormFlavor { supersymmetric, super_skew };
enum class FormParity { even, odd };

/// Bilinear form as a Gram matrix gram(i,j) = <e_i, e_j>, with a declared
/// symmetry flavor and parity. The declaration is a claim about the data:
/// check_form_shape verifies it, a mismatch is a shape failure rather than a
/// silent reinterpretation.
class BilinearForm {
 public:
  BilinearForm(SuperSpace space, Matrix gram, FormFlavor flavor, FormParity parity);

  const SuperSpace& space() const { return space_; }
  const Matrix& gram() const { return gram_; }
  FormFlavor flavor() const { return flavor_; }
  FormParity parity() const { return parity_; }
  std::size_t dim() const { return space_.dim(); }

  Rational eval(const Vec& u, const Vec& v) const;

 private:
  SuperSpace space_;
  Matrix gram_;
  FormFlavor flavor_;
  FormParity parity_;
};

/// Declared flavor and parity against the Gram matrix (two entries).
AxiomReport check_form_shape(const BilinearForm& f);

/// True iff the Gram matrix has full rank.
bool check_nondegenerate(const BilinearForm& f);

/// <xy, z> = <x, yz> on basis triples.
AxiomReport check_invariant(const HomAlgebra& a, const BilinearForm& f);

/// <xy, phi(z)> = <phi(x), yz> on basis triples; phi must be even.
AxiomReport check_phi_invariant(const HomAlgebra& a, const BilinearForm& f, const GradedMap& phi);

/// <alpha(x), alpha(y)> = <x, y>, i.e. M^T G M = G.
AxiomReport check_alpha_compatible(const BilinearForm& f, const GradedMap& alpha);

/// Conjunction: supersymmetric even shape, nondegeneracy, (phi-)invariance
/// and twist compatibility. A failed nondegeneracy entry carries a kernel
/// vector as its defect.
AxiomReport check_pseudo_euclidean(const HomAlgebra& a, const BilinearForm& f,
                                   const GradedMap* phi = nullptr);

/// True iff M^T G' M = G.
bool check_isometry(const GradedMap& f, const BilinearForm& from, const BilinearForm& to);

struct PeTwist {
  HomAlgebra algebra;
  BilinearForm form;
  GradedMap phi;
};

/// Yau twist of a pseudo-Euclidean structure by a morphism-and-isometry;
/// the same form is returned, phi-invariant for phi = beta.
PeTwist pe_yau_twist(const HomAlgebra& a, const BilinearForm& f, const GradedMap& beta);

/// Quadratic compatibility of a bracket structure with a form and phi:
/// shape, nondegeneracy, twist compatibility and
/// <[x,y], phi(z)> + (-1)^{|x||y|} <phi(y), [x,z]> = 0.
AxiomReport check_phi_quadratic_malcev(const HomAlgebra& bracket, const BilinearForm& b,
                                       const GradedMap& phi);

/// Conjunction: super-skew even shape, nondegeneracy, and the twisted cyclic
/// closedness identity.
AxiomReport check_symplectic(const HomAlgebra& a, const BilinearForm& w);

/// Same closedness suite evaluated on a bracket structure.
AxiomReport check_symplectic_malcev(const HomAlgebra& bracket, const BilinearForm& w);

/// omega(x, y) = <D(x), y> for an even invertible antisymmetric
/// superderivation D of an alpha-invariant pseudo-Euclidean structure.
BilinearForm derivation_symplectic(const HomAlgebra& a, const BilinearForm& f, const GradedMap& d);

struct SymplecticOpposite {
  HomAlgebra algebra;
  BilinearForm form;
};

/// Opposite algebra with the same symplectic form.
SymplecticOpposite opposite_symplectic(const HomAlgebra& a, const BilinearForm& w);

}  // namespace homalt
