#include "homalt/bilinear_form.hpp"

#include "homalt/errors.hpp"
#include "scan.hpp"

namespace homalt {

namespace {

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n, Rational(0));
  v[i] = 1;
  return v;
}

AxiomEntry declaration_failure(std::string name) {
  return AxiomEntry{std::move(name), false, Witness{{}, {Rational(1)}}};
}

AxiomEntry scan_parity(std::string name, const BilinearForm& f, FormParity parity) {
  const SuperSpace& s = f.space();
  auto defect = [&](const std::vector<std::size_t>& t) -> Vec {
    bool must_vanish = parity == FormParity::even
                           ? s.degree(t[0]) != s.degree(t[1])
                           : s.degree(t[0]) == s.degree(t[1]);
    if (must_vanish && f.gram()(t[0], t[1]) != 0) return {f.gram()(t[0], t[1])};
    return {Rational(0)};
  };
  return detail::scan(std::move(name), f.dim(), 2, defect);
}

AxiomEntry scan_flavor(std::string name, const BilinearForm& f, FormFlavor flavor) {
  const SuperSpace& s = f.space();
  auto defect = [&](const std::vector<std::size_t>& t) -> Vec {
    int sign = koszul_sign(s.degree(t[0]), s.degree(t[1]));
    if (flavor == FormFlavor::super_skew) sign = -sign;
    return {f.gram()(t[0], t[1]) - sign * f.gram()(t[1], t[0])};
  };
  return detail::scan(std::move(name), f.dim(), 2, defect);
}

AxiomEntry nondegenerate_entry(const BilinearForm& f) {
  AxiomEntry entry{"nondegenerate", true, std::nullopt};
  if (rank(f.gram()) != f.dim()) {
    entry.holds = false;
    std::vector<Vec> kernel = nullspace(f.gram().transpose());  // x with <x, .> = 0
    entry.witness = Witness{{}, kernel.empty() ? Vec{Rational(1)} : kernel.front()};
  }
  return entry;
}

AxiomEntry alpha_compat_entry(std::string name, const BilinearForm& f, const GradedMap& alpha) {
  Matrix d = alpha.matrix().transpose() * f.gram() * alpha.matrix() - f.gram();
  auto defect = [&](const std::vector<std::size_t>& t) -> Vec { return {d(t[0], t[1])}; };
  return detail::scan(std::move(name), f.dim(), 2, defect);
}

}  // namespace

BilinearForm::BilinearForm(SuperSpace space, Matrix gram, FormFlavor flavor, FormParity parity)
    : space_(std::move(space)), gram_(std::move(gram)), flavor_(flavor), parity_(parity) {
  if (gram_.rows() != space_.dim() || gram_.cols() != space_.dim())
    throw DimensionMismatch("gram matrix does not match space dimension");
}

Rational BilinearForm::eval(const Vec& u, const Vec& v) const {
  if (u.size() != dim() || v.size() != dim()) throw DimensionMismatch("vector size mismatch");
  Rational acc(0);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (v[j] == 0) continue;
      acc += u[i] * gram_(i, j) * v[j];
    }
  }
  return acc;
}

AxiomReport check_form_shape(const BilinearForm& f) {
  AxiomReport r;
  r.entries.push_back(scan_parity("parity", f, f.parity()));
  r.entries.push_back(scan_flavor("flavor", f, f.flavor()));
  return r;
}

bool check_nondegenerate(const BilinearForm& f) { return rank(f.gram()) == f.dim(); }

AxiomReport check_invariant(const HomAlgebra& a, const BilinearForm& f) {
  auto defect = [&](const std::vector<std::size_t>& t) -> Vec {
    Rational lhs = f.eval(a.product_of(t[0], t[1]), unit_vec(a.dim(), t[2]));
    Rational rhs = f.eval(unit_vec(a.dim(), t[0]), a.product_of(t[1], t[2]));
    return {lhs - rhs};
  };
  return {{detail::scan("invariance", a.dim(), 3, defect)}};
}

AxiomReport check_phi_invariant(const HomAlgebra& a, const BilinearForm& f, const GradedMap& phi) {
  if (phi.degree() != 0) throw GradingError("phi must be even");
  auto defect = [&](const std::vector<std::size_t>& t) -> Vec {
    Rational lhs = f.eval(a.product_of(t[0], t[1]), phi.column(t[2]));
    Rational rhs = f.eval(phi.column(t[0]), a.product_of(t[1], t[2]));
    return {lhs - rhs};
  };
  return {{detail::scan("phi-invariance", a.dim(), 3, defect)}};
}

AxiomReport check_alpha_compatible(const BilinearForm& f, const GradedMap& alpha) {
  if (alpha.degree() != 0) throw GradingError("twist map must be even");
  return {{alpha_compat_entry("alpha-compatibility", f, alpha)}};
}

AxiomReport check_pseudo_euclidean(const HomAlgebra& a, const BilinearForm& f,
                                   const GradedMap* phi) {
  AxiomReport r;
  if (f.flavor() != FormFlavor::supersymmetric)
    r.entries.push_back(declaration_failure("shape-supersymmetric"));
  else
    r.entries.push_back(scan_flavor("shape-supersymmetric", f, FormFlavor::supersymmetric));
  if (f.parity() != FormParity::even)
    r.entries.push_back(declaration_failure("shape-even"));
  else
    r.entries.push_back(scan_parity("shape-even", f, FormParity::even));
  r.entries.push_back(nondegenerate_entry(f));
  if (phi != nullptr)
    r.append(check_phi_invariant(a, f, *phi));
  else
    r.append(check_invariant(a, f));
  r.entries.push_back(alpha_compat_entry("alpha-compatibility", f, a.twist()));
  return r;
}

bool check_isometry(const GradedMap& f, const BilinearForm& from, const BilinearForm& to) {
  if (from.dim() != to.dim() || f.space().dim() != from.dim())
    throw DimensionMismatch("isometry check requires equal dimensions");
  Matrix lhs = f.matrix().transpose() * to.gram() * f.matrix();
  return lhs == from.gram();
}

PeTwist pe_yau_twist(const HomAlgebra& a, const BilinearForm& f, const GradedMap& beta) {
  if (!check_pseudo_euclidean(a, f).all_hold())
    throw NotPseudoEuclidean("input structure is not pseudo-Euclidean");
  if (!check_morphism(beta, a, a).all_hold())
    throw NotAMorphism("twisting map is not a self-morphism");
  if (!check_isometry(beta, f, f)) throw NotAnIsometry("twisting map does not preserve the form");
  return PeTwist{yau_twist(a, beta), f, beta};
}

AxiomReport check_phi_quadratic_malcev(const HomAlgebra& bracket, const BilinearForm& b,
                                       const GradedMap& phi) {
  if (phi.degree() != 0) throw GradingError("phi must be even");
  AxiomReport r;
  if (b.flavor() != FormFlavor::supersymmetric)
    r.entries.push_back(declaration_failure("shape-supersymmetric"));
  else
    r.entries.push_back(scan_flavor("shape-supersymmetric", b, FormFlavor::supersymmetric));
  if (b.parity() != FormParity::even)
    r.entries.push_back(declaration_failure("shape-even"));
  else
    r.entries.push_back(scan_parity("shape-even", b, FormParity::even));
  r.entries.push_back(nondegenerate_entry(b));
  r.entries.push_back(alpha_compat_entry("alpha-compatibility", b, bracket.twist()));
  const SuperSpace& s = bracket.space();
  auto defect = [&](const std::vector<std::size_t>& t) -> Vec {
    int sign = koszul_sign(s.degree(t[0]), s.degree(t[1]));
    Rational lhs = b.eval(bracket.product_of(t[0], t[1]), phi.column(t[2]));
    Rational rhs = b.eval(phi.column(t[1]), bracket.product_of(t[0], t[2]));
    return {lhs + sign * rhs};
  };
  r.entries.push_back(detail::scan("quadratic-invariance", bracket.dim(), 3, defect));
  return r;
}

AxiomReport check_symplectic(const HomAlgebra& a, const BilinearForm& w) {
  AxiomReport r;
  if (w.flavor() != FormFlavor::super_skew)
    r.entries.push_back(declaration_failure("shape-super-skew"));
  else
    r.entries.push_back(scan_flavor("shape-super-skew", w, FormFlavor::super_skew));
  if (w.parity() != FormParity::even)
    r.entries.push_back(declaration_failure("shape-even"));
  else
    r.entries.push_back(scan_parity("shape-even", w, FormParity::even));
  r.entries.push_back(nondegenerate_entry(w));
  const SuperSpace& s = a.space();
  auto defect = [&](const std::vector<std::size_t>& t) -> Vec {
    unsigned dx = s.degree(t[0]), dy = s.degree(t[1]), dz = s.degree(t[2]);
    Rational acc = sign_pow(dx * dz) * w.eval(a.twist().column(t[0]), a.product_of(t[1], t[2]));
    acc += sign_pow(dy * dx) * w.eval(a.twist().column(t[1]), a.product_of(t[2], t[0]));
    acc += sign_pow(dz * dy) * w.eval(a.twist().column(t[2]), a.product_of(t[0], t[1]));
    return Vec{acc};
  };
  r.entries.push_back(detail::scan("closedness", a.dim(), 3, defect));
  return r;
}

AxiomReport check_symplectic_malcev(const HomAlgebra& bracket, const BilinearForm& w) {
  return check_symplectic(bracket, w);
}

SymplecticOpposite opposite_symplectic(const HomAlgebra& a, const BilinearForm& w) {
  if (!check_symplectic(a, w).all_hold()) throw NotSymplectic("input form is not symplectic");
  if (!check_alternative(a).all_hold())
    throw NotAlternative("opposite-symplectic construction requires an alternative product");
  return SymplecticOpposite{opposite(a), w};
}

}  // namespace homalt
