#include "homalt/hom_algebra.hpp"

#include <functional>

#include "homalt/errors.hpp"
#include "scan.hpp"

namespace homalt {

bool Tensor3::is_zero() const {
  for (const Rational& x : data_)
    if (x != 0) return false;
  return true;
}

Tensor3 Tensor3::operator+(const Tensor3& other) const {
  if (n_ != other.n_) throw DimensionMismatch("tensor sum dimension mismatch");
  Tensor3 r(n_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + other.data_[i];
  return r;
}

Tensor3 Tensor3::scaled(const Rational& c) const {
  Tensor3 r(n_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = c * data_[i];
  return r;
}

namespace {

void check_tensor_grading(const SuperSpace& space, const Tensor3& t, const char* what) {
  for (std::size_t i = 0; i < space.dim(); ++i)
    for (std::size_t j = 0; j < space.dim(); ++j)
      for (std::size_t k = 0; k < space.dim(); ++k) {
        if (t.at(i, j, k) == 0) continue;
        if (space.degree(k) != (space.degree(i) + space.degree(j)) % 2) {
          throw GradingError(std::string(what) + " entry (" + std::to_string(i) + "," +
                             std::to_string(j) + "," + std::to_string(k) +
                             ") violates the grading");
        }
      }
}

Tensor3 tensor_from_pairs(std::size_t n, const std::function<Vec(std::size_t, std::size_t)>& entry) {
  Tensor3 t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec v = entry(i, j);
      for (std::size_t k = 0; k < n; ++k) t.at(i, j, k) = v[k];
    }
  return t;
}

}  // namespace

HomAlgebra::HomAlgebra(SuperSpace space, Tensor3 product, GradedMap twist)
    : space_(std::move(space)), product_(std::move(product)), twist_(std::move(twist)) {
  if (product_.dim() != space_.dim())
    throw DimensionMismatch("product tensor does not match space dimension");
  if (!(twist_.space() == space_)) throw DimensionMismatch("twist map lives on a different space");
  if (twist_.degree() != 0) throw GradingError("twist map must be even");
  check_tensor_grading(space_, product_, "product");
}

Vec HomAlgebra::product_of(std::size_t i, std::size_t j) const {
  if (i >= dim() || j >= dim()) throw IndexOutOfRange("basis index out of range");
  Vec v(dim());
  for (std::size_t k = 0; k < dim(); ++k) v[k] = product_.at(i, j, k);
  return v;
}

Vec HomAlgebra::mul(const Vec& u, const Vec& v) const {
  if (u.size() != dim() || v.size() != dim()) throw DimensionMismatch("vector size mismatch");
  Vec r(dim(), Rational(0));
  for (std::size_t i = 0; i < dim(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (v[j] == 0) continue;
      Rational c = u[i] * v[j];
      for (std::size_t k = 0; k < dim(); ++k) {
        const Rational& t = product_.at(i, j, k);
        if (t != 0) r[k] += c * t;
      }
    }
  }
  return r;
}

Vec associator(const HomAlgebra& a, std::size_t i, std::size_t j, std::size_t k) {
  if (i >= a.dim() || j >= a.dim() || k >= a.dim())
    throw IndexOutOfRange("basis index out of range");
  Vec left = a.mul(a.product_of(i, j), a.twist().column(k));
  Vec right = a.mul(a.twist().column(i), a.product_of(j, k));
  return sub(left, right);
}

AxiomReport check_multiplicative(const HomAlgebra& a) {
  auto defect = [&](const std::vector<std::size_t>& t) {
    Vec lhs = a.twist().apply(a.product_of(t[0], t[1]));
    Vec rhs = a.mul(a.twist().column(t[0]), a.twist().column(t[1]));
    return sub(lhs, rhs);
  };
  return {{detail::scan("multiplicative", a.dim(), 2, defect)}};
}

AxiomReport check_hom_associative(const HomAlgebra& a) {
  auto defect = [&](const std::vector<std::size_t>& t) { return associator(a, t[0], t[1], t[2]); };
  return {{detail::scan("hom-associative", a.dim(), 3, defect)}};
}

AxiomReport check_left_alternative(const HomAlgebra& a) {
  const SuperSpace& s = a.space();
  auto defect = [&](const std::vector<std::size_t>& t) {
    int sign = koszul_sign(s.degree(t[0]), s.degree(t[1]));
    return add(associator(a, t[0], t[1], t[2]),
               scale(sign, associator(a, t[1], t[0], t[2])));
  };
  return {{detail::scan("left-alternative", a.dim(), 3, defect)}};
}

AxiomReport check_right_alternative(const HomAlgebra& a) {
  const SuperSpace& s = a.space();
  auto defect = [&](const std::vector<std::size_t>& t) {
    int sign = koszul_sign(s.degree(t[1]), s.degree(t[2]));
    return add(associator(a, t[0], t[1], t[2]),
               scale(sign, associator(a, t[0], t[2], t[1])));
  };
  return {{detail::scan("right-alternative", a.dim(), 3, defect)}};
}

AxiomReport check_alternative(const HomAlgebra& a) {
  AxiomReport r = check_left_alternative(a);
  r.append(check_right_alternative(a));
  return r;
}

AxiomReport check_flexible(const HomAlgebra& a) {
  const SuperSpace& s = a.space();
  auto defect = [&](const std::vector<std::size_t>& t) {
    unsigned dx = s.degree(t[0]), dy = s.degree(t[1]), dz = s.degree(t[2]);
    int sign = sign_pow(dx * dy + dx * dz + dy * dz);
    return add(associator(a, t[0], t[1], t[2]),
               scale(sign, associator(a, t[2], t[1], t[0])));
  };
  return {{detail::scan("flexible", a.dim(), 3, defect)}};
}

AxiomReport check_cyclic_associator(const HomAlgebra& a) {
  const SuperSpace& s = a.space();
  auto defect = [&](const std::vector<std::size_t>& t) {
    unsigned dx = s.degree(t[0]), dy = s.degree(t[1]), dz = s.degree(t[2]);
    int sign = sign_pow(dx * (dy + dz));
    return sub(associator(a, t[0], t[1], t[2]),
               scale(sign, associator(a, t[1], t[2], t[0])));
  };
  return {{detail::scan("cyclic-associator", a.dim(), 3, defect)}};
}

AxiomReport check_hom_malcev(const HomAlgebra& l) {
  const SuperSpace& s = l.space();
  auto anti = [&](const std::vector<std::size_t>& t) {
    int sign = koszul_sign(s.degree(t[0]), s.degree(t[1]));
    return add(l.product_of(t[0], t[1]), scale(sign, l.product_of(t[1], t[0])));
  };
  AxiomReport report{{detail::scan("antisymmetry", l.dim(), 2, anti)}};

  const GradedMap alpha2 = compose(l.twist(), l.twist());
  auto quartic = [&](const std::vector<std::size_t>& t) {
    std::size_t x = t[0], y = t[1], z = t[2], w = t[3];
    unsigned dx = s.degree(x), dy = s.degree(y), dz = s.degree(z), dt = s.degree(w);
    Vec t1 = l.mul(l.mul(l.product_of(x, y), l.twist().column(z)), alpha2.column(w));
    Vec t2 = l.mul(l.mul(l.product_of(y, z), l.twist().column(w)), alpha2.column(x));
    Vec t3 = l.mul(l.mul(l.product_of(z, w), l.twist().column(x)), alpha2.column(y));
    Vec t4 = l.mul(l.mul(l.product_of(w, x), l.twist().column(y)), alpha2.column(z));
    Vec lhs = l.mul(l.twist().apply(l.product_of(x, z)), l.twist().apply(l.product_of(y, w)));
    Vec d = t1;
    d = add(d, scale(sign_pow(dx * (dy + dz + dt)), t2));
    d = add(d, scale(sign_pow((dx + dy) * (dz + dt)), t3));
    d = add(d, scale(sign_pow(dt * (dx + dy + dz)), t4));
    d = sub(d, scale(sign_pow(dy * dz), lhs));
    return d;
  };
  report.entries.push_back(detail::scan("malcev-identity", l.dim(), 4, quartic));
  return report;
}

AxiomReport check_morphism(const GradedMap& f, const HomAlgebra& a, const HomAlgebra& b) {
  if (a.dim() != b.dim() || f.space().dim() != a.dim())
    throw DimensionMismatch("morphism check requires equal dimensions");
  AxiomReport r = check_weak_morphism(f, a, b);
  auto twist_defect = [&](const std::vector<std::size_t>& t) {
    Vec lhs = f.apply(a.twist().column(t[0]));
    Vec rhs = b.twist().apply(f.column(t[0]));
    return sub(lhs, rhs);
  };
  r.entries.push_back(detail::scan("twist-compatibility", a.dim(), 1, twist_defect));
  return r;
}

AxiomReport check_weak_morphism(const GradedMap& f, const HomAlgebra& a, const HomAlgebra& b) {
  if (a.dim() != b.dim() || f.space().dim() != a.dim())
    throw DimensionMismatch("morphism check requires equal dimensions");
  auto defect = [&](const std::vector<std::size_t>& t) {
    Vec lhs = f.apply(a.product_of(t[0], t[1]));
    Vec rhs = b.mul(f.column(t[0]), f.column(t[1]));
    return sub(lhs, rhs);
  };
  return {{detail::scan("product-compatibility", a.dim(), 2, defect)}};
}

HomAlgebra opposite(const HomAlgebra& a) {
  const SuperSpace& s = a.space();
  Tensor3 op(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      int sign = -koszul_sign(s.degree(i), s.degree(j));
      for (std::size_t k = 0; k < a.dim(); ++k) op.at(i, j, k) = sign * a.product().at(j, i, k);
    }
  return HomAlgebra(s, std::move(op), a.twist());
}

HomAlgebra yau_twist(const HomAlgebra& a, const GradedMap& beta) {
  if (!check_morphism(beta, a, a).all_hold())
    throw NotAMorphism("twisting map is not a self-morphism");
  Tensor3 t = tensor_from_pairs(
      a.dim(), [&](std::size_t i, std::size_t j) { return beta.apply(a.product_of(i, j)); });
  return HomAlgebra(a.space(), std::move(t), compose(beta, a.twist()));
}

HomAlgebra untwist(const HomAlgebra& a) {
  if (!check_multiplicative(a).all_hold())
    throw NotMultiplicative("untwisting requires a multiplicative twist");
  GradedMap inv = invert(a.twist());
  Tensor3 t = tensor_from_pairs(
      a.dim(), [&](std::size_t i, std::size_t j) { return a.mul(inv.column(i), inv.column(j)); });
  return HomAlgebra(a.space(), std::move(t), GradedMap::identity(a.space()));
}

HomAlgebra alpha_power_twist(const HomAlgebra& a, unsigned n) {
  if (!check_multiplicative(a).all_hold())
    throw NotMultiplicative("twist-power construction requires multiplicativity");
  GradedMap an = power(a.twist(), n);
  Tensor3 t = tensor_from_pairs(
      a.dim(), [&](std::size_t i, std::size_t j) { return a.mul(an.column(i), an.column(j)); });
  return HomAlgebra(a.space(), std::move(t), power(a.twist(), n + 1));
}

HomAlgebra commutator_bracket(const HomAlgebra& a) {
  const SuperSpace& s = a.space();
  Tensor3 b(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      int sign = koszul_sign(s.degree(i), s.degree(j));
      for (std::size_t k = 0; k < a.dim(); ++k)
        b.at(i, j, k) = a.product().at(i, j, k) - sign * a.product().at(j, i, k);
    }
  return HomAlgebra(s, std::move(b), a.twist());
}

}  // namespace homalt
