#include "homalt/post_alternative.hpp"

#include "homalt/errors.hpp"
#include "scan.hpp"

namespace homalt {

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

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n, Rational(0));
  v[i] = 1;
  return v;
}

Vec tensor_row(const Tensor3& t, std::size_t i, std::size_t j) {
  Vec v(t.dim());
  for (std::size_t k = 0; k < t.dim(); ++k) v[k] = t.at(i, j, k);
  return v;
}

}  // namespace

PostAltStructure::PostAltStructure(SuperSpace space, Tensor3 prec, Tensor3 succ, Tensor3 dot,
                                   GradedMap twist)
    : space_(std::move(space)),
      prec_(std::move(prec)),
      succ_(std::move(succ)),
      dot_(std::move(dot)),
      twist_(std::move(twist)) {
  if (prec_.dim() != space_.dim() || succ_.dim() != space_.dim() || dot_.dim() != space_.dim())
    throw DimensionMismatch("product tensors do not match space dimension");
  if (!(twist_.space() == space_)) throw DimensionMismatch("twist map lives on a different space");
  if (twist_.degree() != 0) throw GradingError("twist map must be even");
  check_tensor_grading(space_, prec_, "prec");
  check_tensor_grading(space_, succ_, "succ");
  check_tensor_grading(space_, dot_, "dot");
}

Vec PostAltStructure::mul_with(const Tensor3& t, const Vec& u, const Vec& v) const {
  if (u.size() != dim() || v.size() != dim()) throw DimensionMismatch("vector size mismatch");
  Vec r(dim(), Rational(0));
  for (std::size_t i = 0; i < dim(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (v[j] == 0) continue;
      Rational c = u[i] * v[j];
      for (std::size_t k = 0; k < dim(); ++k) {
        const Rational& x = t.at(i, j, k);
        if (x != 0) r[k] += c * x;
      }
    }
  }
  return r;
}

Vec PostAltStructure::mul_prec(const Vec& u, const Vec& v) const { return mul_with(prec_, u, v); }
Vec PostAltStructure::mul_succ(const Vec& u, const Vec& v) const { return mul_with(succ_, u, v); }
Vec PostAltStructure::mul_dot(const Vec& u, const Vec& v) const { return mul_with(dot_, u, v); }

Vec PostAltStructure::mul_sum(const Vec& u, const Vec& v) const {
  return add(add(mul_prec(u, v), mul_succ(u, v)), mul_dot(u, v));
}

Vec PostAltStructure::mul_sum2(const Vec& u, const Vec& v) const {
  return add(mul_prec(u, v), mul_succ(u, v));
}

HomAlgebra bullet(const PostAltStructure& p) {
  return HomAlgebra(p.space(), p.prec() + p.succ() + p.dot(), p.twist());
}

AxiomReport check_post_alternative(const PostAltStructure& p) {
  const SuperSpace& s = p.space();
  const std::size_t n = p.dim();
  // Aliases keep each axiom close to its displayed form; the sum product
  // here is always the three-term one.
  auto prec = [&](const Vec& u, const Vec& v) { return p.mul_prec(u, v); };
  auto succ = [&](const Vec& u, const Vec& v) { return p.mul_succ(u, v); };
  auto dot = [&](const Vec& u, const Vec& v) { return p.mul_dot(u, v); };
  auto sum = [&](const Vec& u, const Vec& v) { return p.mul_sum(u, v); };
  auto tw = [&](std::size_t i) { return p.twist().column(i); };

  AxiomReport r;
  auto run = [&](std::string name, auto defect) {
    r.entries.push_back(detail::scan(std::move(name), n, 3, defect));
  };

  run("post-alt-1", [&](const std::vector<std::size_t>& t) {
    Vec x = unit_vec(n, t[0]), y = unit_vec(n, t[1]), z = unit_vec(n, t[2]);
    int sxy = koszul_sign(s.degree(t[0]), s.degree(t[1]));
    Vec d = sub(dot(dot(x, y), tw(t[2])), dot(tw(t[0]), dot(y, z)));
    d = add(d, scale(sxy, sub(dot(dot(y, x), tw(t[2])), dot(tw(t[1]), dot(x, z)))));
    return d;
  });
  run("post-alt-2", [&](const std::vector<std::size_t>& t) {
    Vec x = unit_vec(n, t[0]), y = unit_vec(n, t[1]), z = unit_vec(n, t[2]);
    int syz = koszul_sign(s.degree(t[1]), s.degree(t[2]));
    Vec d = sub(dot(dot(x, y), tw(t[2])), dot(tw(t[0]), dot(y, z)));
    d = add(d, scale(syz, sub(dot(dot(x, z), tw(t[1])), dot(tw(t[0]), dot(z, y)))));
    return d;
  });
  run("post-alt-3", [&](const std::vector<std::size_t>& t) {
    Vec x = unit_vec(n, t[0]), y = unit_vec(n, t[1]), z = unit_vec(n, t[2]);
    int sxy = koszul_sign(s.degree(t[0]), s.degree(t[1]));
    Vec d = sub(prec(dot(x, y), tw(t[2])), dot(tw(t[0]), prec(y, z)));
    d = add(d, scale(sxy, sub(prec(dot(y, x), tw(t[2])), dot(tw(t[1]), prec(x, z)))));
    return d;
  });
  run("post-alt-4", [&](const std::vector<std::size_t>& t) {
    Vec x = unit_vec(n, t[0]), y = unit_vec(n, t[1]), z = unit_vec(n, t[2]);
    int syz = koszul_sign(s.degree(t[1]), s.degree(t[2]));
    Vec d = sub(dot(succ(x, y), tw(t[2])), succ(tw(t[0]), dot(y, z)));
    d = add(d, scale(syz, sub(dot(succ(x, z), tw(t[1])), succ(tw(t[0]), dot(z, y)))));
    return d;
  });
  run("post-alt-5", [&](const std::vector<std::size_t>& t) {
    Vec x = unit_vec(n, t[0]), y = unit_vec(n, t[1]), z = unit_vec(n, t[2]);
    int sxy = koszul_sign(s.degree(t[0]), s.degree(t[1]));
    Vec d = sub(dot(succ(y, x), tw(t[2])), dot(tw(t[0]), succ(y, z)));
    d = add(d, scale(sxy, sub(dot(prec(x, y), tw(t[2])), succ(tw(t[1]), dot(x, z)))));
    return d;
  });
  run("post-alt-6", [&](const std::vector<std::size_t>& t) {
    Vec x = unit_vec(n, t[0]), y = unit_vec(n, t[1]), z = unit_vec(n, t[2]);
    int sxy = koszul_sign(s.degree(t[0]), s.degree(t[1]));
    Vec d = sub(dot(prec(z, x), tw(t[1])), dot(tw(t[2]), succ(x, y)));
    d = add(d, scale(sxy, sub(prec(dot(z, y), tw(t[0])), dot(tw(t[2]), prec(y, x)))));
    return d;
  });
  run("post-alt-7", [&](const std::vector<std::size_t>& t) {
    Vec x = unit_vec(n, t[0]), y = unit_vec(n, t[1]), z = unit_vec(n, t[2]);
    int sxy = koszul_sign(s.degree(t[0]), s.degree(t[1]));
    Vec d = sub(prec(succ(x, y), tw(t[2])), succ(tw(t[0]), prec(y, z)));
    d = add(d, scale(sxy, sub(prec(prec(y, x), tw(t[2])), prec(tw(t[1]), sum(x, z)))));
    return d;
  });
  run("post-alt-8", [&](const std::vector<std::size_t>& t) {
    Vec x = unit_vec(n, t[0]), y = unit_vec(n, t[1]), z = unit_vec(n, t[2]);
    int syz = koszul_sign(s.degree(t[1]), s.degree(t[2]));
    Vec d = sub(prec(succ(x, y), tw(t[2])), succ(tw(t[0]), prec(y, z)));
    d = add(d, scale(syz, sub(succ(sum(x, z), tw(t[1])), succ(tw(t[0]), succ(z, y)))));
    return d;
  });
  run("post-alt-9", [&](const std::vector<std::size_t>& t) {
    Vec x = unit_vec(n, t[0]), y = unit_vec(n, t[1]), z = unit_vec(n, t[2]);
    int sxy = koszul_sign(s.degree(t[0]), s.degree(t[1]));
    Vec d = sub(succ(sum(x, y), tw(t[2])), succ(tw(t[0]), succ(y, z)));
    d = add(d, scale(sxy, sub(succ(sum(y, x), tw(t[2])), succ(tw(t[1]), succ(x, z)))));
    return d;
  });
  run("post-alt-10", [&](const std::vector<std::size_t>& t) {
    Vec x = unit_vec(n, t[0]), y = unit_vec(n, t[1]), z = unit_vec(n, t[2]);
    int sxy = koszul_sign(s.degree(t[0]), s.degree(t[1]));
    Vec d = sub(prec(prec(z, x), tw(t[1])), prec(tw(t[2]), sum(x, y)));
    d = add(d, scale(sxy, sub(prec(prec(z, y), tw(t[0])), prec(tw(t[2]), sum(y, x)))));
    return d;
  });
  return r;
}

Vec ass_l(const PostAltStructure& p, std::size_t i, std::size_t j, std::size_t k) {
  if (!p.dot_is_zero()) throw NotPreAlt("dot product must vanish");
  const std::size_t n = p.dim();
  Vec x = unit_vec(n, i), y = unit_vec(n, j), z = unit_vec(n, k);
  return sub(p.mul_succ(p.mul_sum2(x, y), p.twist().column(k)),
             p.mul_succ(p.twist().column(i), p.mul_succ(y, z)));
}

Vec ass_m(const PostAltStructure& p, std::size_t i, std::size_t j, std::size_t k) {
  if (!p.dot_is_zero()) throw NotPreAlt("dot product must vanish");
  const std::size_t n = p.dim();
  Vec x = unit_vec(n, i), y = unit_vec(n, j), z = unit_vec(n, k);
  return sub(p.mul_prec(p.mul_succ(x, y), p.twist().column(k)),
             p.mul_succ(p.twist().column(i), p.mul_prec(y, z)));
}

Vec ass_r(const PostAltStructure& p, std::size_t i, std::size_t j, std::size_t k) {
  if (!p.dot_is_zero()) throw NotPreAlt("dot product must vanish");
  const std::size_t n = p.dim();
  Vec x = unit_vec(n, i), y = unit_vec(n, j), z = unit_vec(n, k);
  return sub(p.mul_prec(p.mul_prec(x, y), p.twist().column(k)),
             p.mul_prec(p.twist().column(i), p.mul_sum2(y, z)));
}

AxiomReport check_pre_alternative(const PostAltStructure& p) {
  if (!p.dot_is_zero()) throw NotPreAlt("dot product must vanish");
  const SuperSpace& s = p.space();
  AxiomReport r;
  auto deg = [&](std::size_t i) { return s.degree(i); };
  r.entries.push_back(detail::scan("pre-alt-1", p.dim(), 3, [&](const std::vector<std::size_t>& t) {
    int sign = koszul_sign(deg(t[0]), deg(t[1]));
    return add(ass_m(p, t[0], t[1], t[2]), scale(sign, ass_r(p, t[1], t[0], t[2])));
  }));
  r.entries.push_back(detail::scan("pre-alt-2", p.dim(), 3, [&](const std::vector<std::size_t>& t) {
    int sign = koszul_sign(deg(t[2]), deg(t[1]));
    return add(ass_m(p, t[0], t[1], t[2]), scale(sign, ass_l(p, t[0], t[2], t[1])));
  }));
  r.entries.push_back(detail::scan("pre-alt-3", p.dim(), 3, [&](const std::vector<std::size_t>& t) {
    int sign = koszul_sign(deg(t[0]), deg(t[1]));
    return add(ass_l(p, t[0], t[1], t[2]), scale(sign, ass_l(p, t[1], t[0], t[2])));
  }));
  r.entries.push_back(detail::scan("pre-alt-4", p.dim(), 3, [&](const std::vector<std::size_t>& t) {
    int sign = koszul_sign(deg(t[2]), deg(t[1]));
    return add(ass_r(p, t[0], t[1], t[2]), scale(sign, ass_r(p, t[0], t[2], t[1])));
  }));
  return r;
}

PostAltStructure rb_to_postalt(const HomAlgebra& a, const RotaBaxterOp& r) {
  if (!check_alternative(a).all_hold())
    throw NotAlternative("splitting requires an alternative algebra");
  if (!check_rota_baxter(a, r).all_hold())
    throw NotRotaBaxter("operator fails the Rota-Baxter identity");
  const std::size_t n = a.dim();
  Tensor3 prec(n), succ(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec pv = a.mul(unit_vec(n, i), r.map().column(j));
      Vec sv = a.mul(r.map().column(i), unit_vec(n, j));
      for (std::size_t k = 0; k < n; ++k) {
        prec.at(i, j, k) = pv[k];
        succ.at(i, j, k) = sv[k];
      }
    }
  Tensor3 dot = a.product().scaled(r.weight());
  return PostAltStructure(a.space(), std::move(prec), std::move(succ), std::move(dot), a.twist());
}

PostAltStructure postalt_yau_twist(const PostAltStructure& p, const GradedMap& beta) {
  if (!(beta.space() == p.space())) throw DimensionMismatch("morphism lives on a different space");
  // beta must be a morphism of all three products and commute with the twist.
  for (const Tensor3* t : {&p.prec(), &p.succ(), &p.dot()}) {
    HomAlgebra partial(p.space(), *t, p.twist());
    if (!check_morphism(beta, partial, partial).all_hold())
      throw NotAMorphism("twisting map is not a morphism of all three products");
  }
  const std::size_t n = p.dim();
  Tensor3 prec(n), succ(n), dot(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec pv = beta.apply(tensor_row(p.prec(), i, j));
      Vec sv = beta.apply(tensor_row(p.succ(), i, j));
      Vec dv = beta.apply(tensor_row(p.dot(), i, j));
      for (std::size_t k = 0; k < n; ++k) {
        prec.at(i, j, k) = pv[k];
        succ.at(i, j, k) = sv[k];
        dot.at(i, j, k) = dv[k];
      }
    }
  return PostAltStructure(p.space(), std::move(prec), std::move(succ), std::move(dot),
                          compose(beta, p.twist()));
}

PostAltStructure symplectic_split(const HomAlgebra& a, const BilinearForm& w) {
  GradedMap alpha_inv = GradedMap::identity(a.space());
  try {
    alpha_inv = invert(a.twist());
  } catch (const SingularMatrix&) {
    throw PreconditionFailed("splitting requires an invertible twist");
  }
  if (!check_symplectic(a, w).all_hold())
    throw PreconditionFailed("input form is not symplectic");
  if (!check_alternative(a).all_hold())
    throw PreconditionFailed("splitting requires an alternative algebra");

  const std::size_t n = a.dim();
  const SuperSpace& s = a.space();
  const GradedMap alpha2 = compose(a.twist(), a.twist());
  // H(i,k) = w(e_i, a^2(e_k)); each product column solves H^T v = rhs.
  Matrix h = w.gram() * alpha2.matrix();
  FactoredMatrix solver(h.transpose());
  if (solver.singular())
    throw SingularMatrix("nondegenerate form and invertible twist expected");

  Tensor3 prec(n), succ(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec ei = unit_vec(n, i);
    for (std::size_t j = 0; j < n; ++j) {
      Vec aj = alpha_inv.column(j);
      Vec rhs_prec(n), rhs_succ(n);
      for (std::size_t k = 0; k < n; ++k) {
        rhs_prec[k] = w.eval(ei, a.mul(aj, unit_vec(n, k)));
        int sign = sign_pow(static_cast<unsigned>(s.degree(i)) *
                            (static_cast<unsigned>(s.degree(j)) +
                             static_cast<unsigned>(s.degree(k))));
        rhs_succ[k] =
            sign * w.eval(unit_vec(n, j), a.mul(unit_vec(n, k), alpha_inv.column(i)));
      }
      Vec pv = solver.solve(rhs_prec);
      Vec sv = solver.solve(rhs_succ);
      for (std::size_t k = 0; k < n; ++k) {
        prec.at(i, j, k) = pv[k];
        succ.at(i, j, k) = sv[k];
      }
    }
  }
  // Construction validates the grading of the solved tensors; a failure here
  // would indicate a parity bug in the sign engine.
  return PostAltStructure(s, std::move(prec), std::move(succ), Tensor3(n), a.twist());
}

bool check_bullet_equals_product(const HomAlgebra& a, const BilinearForm& /*w*/,
                                 const PostAltStructure& p) {
  if (p.dim() != a.dim()) throw DimensionMismatch("structure lives on a different space");
  return p.prec() + p.succ() == a.product();
}

}  // namespace homalt
