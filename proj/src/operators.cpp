#include "homalt/operators.hpp"

#include "homalt/errors.hpp"
#include "scan.hpp"

namespace homalt {

namespace {

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n, Rational(0));
  v[i] = 1;
  return v;
}

// Positions (row, col) a map of the given degree may populate.
std::vector<std::pair<std::size_t, std::size_t>> allowed_positions(const SuperSpace& s,
                                                                   int degree) {
  std::vector<std::pair<std::size_t, std::size_t>> pos;
  for (std::size_t r = 0; r < s.dim(); ++r)
    for (std::size_t c = 0; c < s.dim(); ++c)
      if ((s.degree(r) + s.degree(c)) % 2 == degree) pos.emplace_back(r, c);
  return pos;
}

GradedMap map_from_solution(const SuperSpace& s, int degree,
                            const std::vector<std::pair<std::size_t, std::size_t>>& pos,
                            const Vec& solution) {
  Matrix m(s.dim(), s.dim());
  for (std::size_t u = 0; u < pos.size(); ++u) m(pos[u].first, pos[u].second) = solution[u];
  return GradedMap(s, std::move(m), degree);
}

}  // namespace

RotaBaxterOp::RotaBaxterOp(GradedMap map, Rational weight)
    : map_(std::move(map)), weight_(std::move(weight)) {
  if (map_.degree() != 0) throw GradingError("Rota-Baxter operator must be even");
}

AxiomReport check_superderivation(const HomAlgebra& a, const DerivationCandidate& d) {
  if (!(d.map.space() == a.space()))
    throw DimensionMismatch("derivation candidate lives on a different space");
  const SuperSpace& s = a.space();
  const GradedMap ak = power(a.twist(), d.power);
  auto defect = [&](const std::vector<std::size_t>& t) {
    Vec lhs = d.map.apply(a.product_of(t[0], t[1]));
    Vec rhs = a.mul(d.map.column(t[0]), ak.column(t[1]));
    int sign = koszul_sign(s.degree(t[0]), d.map.degree());
    rhs = add(rhs, scale(sign, a.mul(ak.column(t[0]), d.map.column(t[1]))));
    return sub(lhs, rhs);
  };
  return {{detail::scan("leibniz", a.dim(), 2, defect)}};
}

AxiomReport check_antisymmetric(const BilinearForm& f, const DerivationCandidate& d,
                                const GradedMap* phi) {
  if (!(d.map.space() == f.space()))
    throw DimensionMismatch("derivation candidate lives on a different space");
  const SuperSpace& s = f.space();
  auto defect = [&](const std::vector<std::size_t>& t) -> Vec {
    Rational lhs = f.eval(d.map.column(t[0]), unit_vec(f.dim(), t[1]));
    Rational rhs = f.eval(unit_vec(f.dim(), t[0]), d.map.column(t[1]));
    int sign = koszul_sign(s.degree(t[0]), d.map.degree());
    return {lhs + sign * rhs};
  };
  AxiomReport r{{detail::scan("antisymmetry", f.dim(), 2, defect)}};
  if (phi != nullptr) {
    Matrix commutator = phi->matrix() * d.map.matrix() - d.map.matrix() * phi->matrix();
    auto comm_defect = [&](const std::vector<std::size_t>& t) -> Vec {
      return {commutator(t[0], t[1])};
    };
    r.entries.push_back(detail::scan("phi-commutation", f.dim(), 2, comm_defect));
  }
  return r;
}

DerivationCandidate derivation_bracket(const DerivationCandidate& d1,
                                       const DerivationCandidate& d2) {
  if (!(d1.map.space() == d2.map.space()))
    throw DimensionMismatch("derivation bracket requires the same space");
  int sign = koszul_sign(d1.map.degree(), d2.map.degree());
  int degree = (d1.map.degree() + d2.map.degree()) % 2;
  Matrix m = d1.map.matrix() * d2.map.matrix() -
             (d2.map.matrix() * d1.map.matrix()).scaled(sign);
  return DerivationCandidate{GradedMap(d1.map.space(), std::move(m), degree),
                             d1.power + d2.power};
}

AxiomReport check_rota_baxter(const HomAlgebra& a, const RotaBaxterOp& r) {
  if (!(r.map().space() == a.space()))
    throw DimensionMismatch("operator lives on a different space");
  AxiomReport report;
  report.entries.push_back(AxiomEntry{"even", r.map().degree() == 0, std::nullopt});

  Matrix comm = r.map().matrix() * a.twist().matrix() - a.twist().matrix() * r.map().matrix();
  auto comm_defect = [&](const std::vector<std::size_t>& t) -> Vec {
    return {comm(t[0], t[1])};
  };
  report.entries.push_back(detail::scan("alpha-commutation", a.dim(), 2, comm_defect));

  auto rb_defect = [&](const std::vector<std::size_t>& t) {
    Vec lhs = a.mul(r.map().column(t[0]), r.map().column(t[1]));
    Vec inner = a.mul(r.map().column(t[0]), unit_vec(a.dim(), t[1]));
    inner = add(inner, a.mul(unit_vec(a.dim(), t[0]), r.map().column(t[1])));
    inner = add(inner, scale(r.weight(), a.product_of(t[0], t[1])));
    return sub(lhs, r.map().apply(inner));
  };
  report.entries.push_back(detail::scan("rota-baxter", a.dim(), 2, rb_defect));
  return report;
}

HomAlgebra rb_derived_product(const HomAlgebra& a, const RotaBaxterOp& r) {
  if (!check_alternative(a).all_hold())
    throw NotAlternative("derived product requires an alternative algebra");
  if (!check_rota_baxter(a, r).all_hold())
    throw NotRotaBaxter("operator fails the Rota-Baxter identity");
  Tensor3 t(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Vec v = a.mul(r.map().column(i), unit_vec(a.dim(), j));
      v = add(v, a.mul(unit_vec(a.dim(), i), r.map().column(j)));
      v = add(v, scale(r.weight(), a.product_of(i, j)));
      for (std::size_t k = 0; k < a.dim(); ++k) t.at(i, j, k) = v[k];
    }
  return HomAlgebra(a.space(), std::move(t), a.twist());
}

AxiomReport check_rb_form_compat(const BilinearForm& f, const RotaBaxterOp& r) {
  if (!(r.map().space() == f.space()))
    throw DimensionMismatch("operator lives on a different space");
  const Matrix& m = r.map().matrix();
  Matrix d = m.transpose() * f.gram() + f.gram() * m + f.gram().scaled(r.weight());
  auto defect = [&](const std::vector<std::size_t>& t) -> Vec { return {d(t[0], t[1])}; };
  return {{detail::scan("form-compatibility", f.dim(), 2, defect)}};
}

BilinearForm rb_symplectic(const HomAlgebra& a, const BilinearForm& f, const RotaBaxterOp& r) {
  if (r.weight() != 0) throw WrongWeight("symplectic construction requires weight 0");
  Matrix inv;
  try {
    inv = inverse(r.map().matrix());
  } catch (const SingularMatrix&) {
    throw SingularMatrix("Rota-Baxter operator must be invertible");
  }
  if (!check_pseudo_euclidean(a, f, &a.twist()).all_hold())
    throw PreconditionFailed("input structure is not twist-invariant pseudo-Euclidean");
  if (!check_rota_baxter(a, r).all_hold())
    throw PreconditionFailed("operator fails the Rota-Baxter identity");
  if (!check_rb_form_compat(f, r).all_hold())
    throw PreconditionFailed("operator is not compatible with the form");
  return BilinearForm(a.space(), inv.transpose() * f.gram(), FormFlavor::super_skew,
                      FormParity::even);
}

// Declared in bilinear_form.hpp; lives here with the derivation checks.
BilinearForm derivation_symplectic(const HomAlgebra& a, const BilinearForm& f,
                                   const GradedMap& d) {
  if (d.degree() != 0) throw NotADerivation("an even superderivation is required");
  if (!check_pseudo_euclidean(a, f, &a.twist()).all_hold())
    throw NotPseudoEuclidean("input structure is not twist-invariant pseudo-Euclidean");
  DerivationCandidate cand{d, 0};
  if (!check_superderivation(a, cand).all_hold())
    throw NotADerivation("map fails the Leibniz rule");
  if (!check_antisymmetric(f, cand).all_hold())
    throw NotAntisymmetric("map is not antisymmetric for the form");
  if (rank(d.matrix()) != a.dim())
    throw SingularMatrix("derivation must be invertible");
  return BilinearForm(a.space(), d.matrix().transpose() * f.gram(), FormFlavor::super_skew,
                      FormParity::even);
}

std::vector<GradedMap> superderivation_space(const HomAlgebra& a, unsigned twist_power,
                                             int degree) {
  const SuperSpace& s = a.space();
  const std::size_t n = s.dim();
  auto pos = allowed_positions(s, degree);
  std::vector<std::size_t> slot(n * n, pos.size());
  for (std::size_t u = 0; u < pos.size(); ++u) slot[pos[u].first * n + pos[u].second] = u;

  const GradedMap ak = power(a.twist(), twist_power);
  // coefficient tables: right[m][j] = e_m a^k(e_j), left[i][m] = a^k(e_i) e_m
  std::vector<std::vector<Vec>> right(n, std::vector<Vec>(n)), left(n, std::vector<Vec>(n));
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t j = 0; j < n; ++j) {
      right[m][j] = a.mul(unit_vec(n, m), ak.column(j));
      left[j][m] = a.mul(ak.column(j), unit_vec(n, m));
    }

  Matrix sys(n * n * n, pos.size());
  std::size_t row = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec cij = a.product_of(i, j);
      int sign = koszul_sign(s.degree(i), degree);
      for (std::size_t k = 0; k < n; ++k, ++row) {
        for (std::size_t m = 0; m < n; ++m) {
          if (std::size_t u = slot[k * n + m]; u < pos.size()) sys(row, u) += cij[m];
          if (std::size_t u = slot[m * n + i]; u < pos.size()) sys(row, u) -= right[m][j][k];
          if (std::size_t u = slot[m * n + j]; u < pos.size())
            sys(row, u) -= sign * left[i][m][k];
        }
      }
    }

  std::vector<GradedMap> basis;
  for (const Vec& v : nullspace(sys)) basis.push_back(map_from_solution(s, degree, pos, v));
  return basis;
}

std::vector<GradedMap> antisymmetric_derivation_space(const HomAlgebra& a, const BilinearForm& f,
                                                      unsigned twist_power, int degree,
                                                      const GradedMap* phi) {
  const SuperSpace& s = a.space();
  const std::size_t n = s.dim();
  std::vector<GradedMap> der = superderivation_space(a, twist_power, degree);
  if (der.empty()) return der;

  // Antisymmetry (and optional phi-commutation) cut out a subspace of the
  // derivation space; solve for coefficients of the derivation basis.
  std::size_t extra_rows = n * n * (phi ? 2 : 1);
  Matrix sys(extra_rows, der.size());
  for (std::size_t u = 0; u < der.size(); ++u) {
    const Matrix& m = der[u].matrix();
    Matrix anti = m.transpose() * f.gram();
    std::size_t row = 0;
    for (std::size_t i = 0; i < n; ++i) {
      int sign = koszul_sign(s.degree(i), degree);
      for (std::size_t j = 0; j < n; ++j, ++row) {
        Rational value = anti(i, j);
        Rational mirrored(0);
        for (std::size_t mm = 0; mm < n; ++mm) mirrored += f.gram()(i, mm) * m(mm, j);
        sys(row, u) = value + sign * mirrored;
      }
    }
    if (phi != nullptr) {
      Matrix comm = phi->matrix() * m - m * phi->matrix();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j, ++row) sys(row, u) = comm(i, j);
    }
  }

  std::vector<GradedMap> basis;
  for (const Vec& coeffs : nullspace(sys)) {
    Matrix m(n, n);
    for (std::size_t u = 0; u < der.size(); ++u)
      if (coeffs[u] != 0) m = m + der[u].matrix().scaled(coeffs[u]);
    basis.push_back(GradedMap(s, std::move(m), degree));
  }
  return basis;
}

}  // namespace homalt
