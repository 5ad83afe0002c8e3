#include "homalt/oracle.hpp"

#include <random>

#include "homalt/errors.hpp"

namespace homalt::oracle {

namespace {

// Sign arithmetic local to the oracle: (-1)^e from the exponent's parity.
int psign(unsigned e) { return 1 - 2 * static_cast<int>(e & 1u); }

Vec vadd(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec vsub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec vscale(int c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

bool vzero(const Vec& a) {
  for (const Rational& x : a)
    if (x != 0) return false;
  return true;
}

// Element-wise product loop, independent of the checker implementations.
Vec prod(const Tensor3& t, const Vec& u, const Vec& v) {
  const std::size_t n = t.dim();
  Vec out(n, Rational(0));
  for (std::size_t k = 0; k < n; ++k) {
    Rational acc(0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) acc += u[i] * v[j] * t.at(i, j, k);
    out[k] = acc;
  }
  return out;
}

Vec mapply(const Matrix& m, const Vec& u) {
  Vec out(m.rows(), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rational acc(0);
    for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * u[j];
    out[i] = acc;
  }
  return out;
}

Rational feval(const Matrix& g, const Vec& u, const Vec& v) {
  Rational acc(0);
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) acc += u[i] * g(i, j) * v[j];
  return acc;
}

struct Sample {
  Vec vec;
  unsigned deg = 0;
};

Sample random_homogeneous(const SuperSpace& s, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  unsigned deg;
  if (s.even_dim() == 0)
    deg = 1;
  else if (s.odd_dim() == 0)
    deg = 0;
  else
    deg = static_cast<unsigned>(std::uniform_int_distribution<int>(0, 1)(rng));
  Sample sample;
  sample.deg = deg;
  sample.vec.assign(s.dim(), Rational(0));
  std::size_t lo = deg == 0 ? 0 : s.even_dim();
  std::size_t hi = deg == 0 ? s.even_dim() : s.dim();
  for (int attempt = 0; attempt < 16; ++attempt) {
    bool nonzero = false;
    for (std::size_t i = lo; i < hi; ++i) {
      int c = coeff(rng);
      sample.vec[i] = c;
      nonzero = nonzero || c != 0;
    }
    if (nonzero) break;
  }
  return sample;
}

Vec assoc(const HomAlgebra& a, const Vec& x, const Vec& y, const Vec& z) {
  Vec left = prod(a.product(), prod(a.product(), x, y), mapply(a.twist().matrix(), z));
  Vec right = prod(a.product(), mapply(a.twist().matrix(), x), prod(a.product(), y, z));
  return vsub(left, right);
}

unsigned algebra_arity(const std::string& identity) {
  if (identity == "multiplicative" || identity == "malcev-antisymmetry") return 2;
  if (identity == "hom-malcev") return 4;
  return 3;
}

bool algebra_trial(const HomAlgebra& a, const std::string& id, const std::vector<Sample>& s) {
  const Matrix& tw = a.twist().matrix();
  if (id == "hom-associative") return vzero(assoc(a, s[0].vec, s[1].vec, s[2].vec));
  if (id == "left-alternative") {
    Vec d = vadd(assoc(a, s[0].vec, s[1].vec, s[2].vec),
                 vscale(psign(s[0].deg * s[1].deg), assoc(a, s[1].vec, s[0].vec, s[2].vec)));
    return vzero(d);
  }
  if (id == "right-alternative") {
    Vec d = vadd(assoc(a, s[0].vec, s[1].vec, s[2].vec),
                 vscale(psign(s[1].deg * s[2].deg), assoc(a, s[0].vec, s[2].vec, s[1].vec)));
    return vzero(d);
  }
  if (id == "flexible") {
    unsigned e = s[0].deg * s[1].deg + s[0].deg * s[2].deg + s[1].deg * s[2].deg;
    Vec d = vadd(assoc(a, s[0].vec, s[1].vec, s[2].vec),
                 vscale(psign(e), assoc(a, s[2].vec, s[1].vec, s[0].vec)));
    return vzero(d);
  }
  if (id == "cyclic-associator") {
    Vec d = vsub(assoc(a, s[0].vec, s[1].vec, s[2].vec),
                 vscale(psign(s[0].deg * (s[1].deg + s[2].deg)),
                        assoc(a, s[1].vec, s[2].vec, s[0].vec)));
    return vzero(d);
  }
  if (id == "multiplicative") {
    Vec d = vsub(mapply(tw, prod(a.product(), s[0].vec, s[1].vec)),
                 prod(a.product(), mapply(tw, s[0].vec), mapply(tw, s[1].vec)));
    return vzero(d);
  }
  if (id == "malcev-antisymmetry") {
    Vec d = vadd(prod(a.product(), s[0].vec, s[1].vec),
                 vscale(psign(s[0].deg * s[1].deg), prod(a.product(), s[1].vec, s[0].vec)));
    return vzero(d);
  }
  if (id == "hom-malcev") {
    const Vec &x = s[0].vec, &y = s[1].vec, &z = s[2].vec, &t = s[3].vec;
    unsigned dx = s[0].deg, dy = s[1].deg, dz = s[2].deg, dt = s[3].deg;
    auto br = [&](const Vec& u, const Vec& v) { return prod(a.product(), u, v); };
    auto al = [&](const Vec& u) { return mapply(tw, u); };
    Vec t1 = br(br(br(x, y), al(z)), al(al(t)));
    Vec t2 = br(br(br(y, z), al(t)), al(al(x)));
    Vec t3 = br(br(br(z, t), al(x)), al(al(y)));
    Vec t4 = br(br(br(t, x), al(y)), al(al(z)));
    Vec lhs = br(al(br(x, z)), al(br(y, t)));
    Vec d = t1;
    d = vadd(d, vscale(psign(dx * (dy + dz + dt)), t2));
    d = vadd(d, vscale(psign((dx + dy) * (dz + dt)), t3));
    d = vadd(d, vscale(psign(dt * (dx + dy + dz)), t4));
    d = vsub(d, vscale(psign(dy * dz), lhs));
    return vzero(d);
  }
  throw UnknownIdentity("unknown algebra identity '" + id + "'");
}

bool form_trial(const HomAlgebra& a, const BilinearForm& f, const std::string& id,
                const std::vector<Sample>& s) {
  const Matrix& g = f.gram();
  const Matrix& tw = a.twist().matrix();
  if (id == "supersymmetric")
    return feval(g, s[0].vec, s[1].vec) ==
           psign(s[0].deg * s[1].deg) * feval(g, s[1].vec, s[0].vec);
  if (id == "super-skew")
    return feval(g, s[0].vec, s[1].vec) ==
           -psign(s[0].deg * s[1].deg) * feval(g, s[1].vec, s[0].vec);
  if (id == "invariant")
    return feval(g, prod(a.product(), s[0].vec, s[1].vec), s[2].vec) ==
           feval(g, s[0].vec, prod(a.product(), s[1].vec, s[2].vec));
  if (id == "alpha-compatible")
    return feval(g, mapply(tw, s[0].vec), mapply(tw, s[1].vec)) == feval(g, s[0].vec, s[1].vec);
  if (id == "closedness") {
    Rational acc = psign(s[0].deg * s[2].deg) *
                   feval(g, mapply(tw, s[0].vec), prod(a.product(), s[1].vec, s[2].vec));
    acc += psign(s[1].deg * s[0].deg) *
           feval(g, mapply(tw, s[1].vec), prod(a.product(), s[2].vec, s[0].vec));
    acc += psign(s[2].deg * s[1].deg) *
           feval(g, mapply(tw, s[2].vec), prod(a.product(), s[0].vec, s[1].vec));
    return acc == 0;
  }
  throw UnknownIdentity("unknown form identity '" + id + "'");
}

bool postalt_trial(const PostAltStructure& p, const std::string& id,
                   const std::vector<Sample>& s) {
  const Matrix& tw = p.twist().matrix();
  auto pr = [&](const Vec& u, const Vec& v) { return prod(p.prec(), u, v); };
  auto su = [&](const Vec& u, const Vec& v) { return prod(p.succ(), u, v); };
  auto dt = [&](const Vec& u, const Vec& v) { return prod(p.dot(), u, v); };
  auto b3 = [&](const Vec& u, const Vec& v) { return vadd(vadd(pr(u, v), su(u, v)), dt(u, v)); };
  auto b2 = [&](const Vec& u, const Vec& v) { return vadd(pr(u, v), su(u, v)); };
  auto al = [&](const Vec& u) { return mapply(tw, u); };
  const Vec &x = s[0].vec, &y = s[1].vec, &z = s[2].vec;
  int sxy = psign(s[0].deg * s[1].deg);
  int syz = psign(s[1].deg * s[2].deg);
  int szy = psign(s[2].deg * s[1].deg);

  if (id == "post-alt-1")
    return vzero(vadd(vsub(dt(dt(x, y), al(z)), dt(al(x), dt(y, z))),
                      vscale(sxy, vsub(dt(dt(y, x), al(z)), dt(al(y), dt(x, z))))));
  if (id == "post-alt-2")
    return vzero(vadd(vsub(dt(dt(x, y), al(z)), dt(al(x), dt(y, z))),
                      vscale(syz, vsub(dt(dt(x, z), al(y)), dt(al(x), dt(z, y))))));
  if (id == "post-alt-3")
    return vzero(vadd(vsub(pr(dt(x, y), al(z)), dt(al(x), pr(y, z))),
                      vscale(sxy, vsub(pr(dt(y, x), al(z)), dt(al(y), pr(x, z))))));
  if (id == "post-alt-4")
    return vzero(vadd(vsub(dt(su(x, y), al(z)), su(al(x), dt(y, z))),
                      vscale(syz, vsub(dt(su(x, z), al(y)), su(al(x), dt(z, y))))));
  if (id == "post-alt-5")
    return vzero(vadd(vsub(dt(su(y, x), al(z)), dt(al(x), su(y, z))),
                      vscale(sxy, vsub(dt(pr(x, y), al(z)), su(al(y), dt(x, z))))));
  if (id == "post-alt-6")
    return vzero(vadd(vsub(dt(pr(z, x), al(y)), dt(al(z), su(x, y))),
                      vscale(sxy, vsub(pr(dt(z, y), al(x)), dt(al(z), pr(y, x))))));
  if (id == "post-alt-7")
    return vzero(vadd(vsub(pr(su(x, y), al(z)), su(al(x), pr(y, z))),
                      vscale(sxy, vsub(pr(pr(y, x), al(z)), pr(al(y), b3(x, z))))));
  if (id == "post-alt-8")
    return vzero(vadd(vsub(pr(su(x, y), al(z)), su(al(x), pr(y, z))),
                      vscale(syz, vsub(su(b3(x, z), al(y)), su(al(x), su(z, y))))));
  if (id == "post-alt-9")
    return vzero(vadd(vsub(su(b3(x, y), al(z)), su(al(x), su(y, z))),
                      vscale(sxy, vsub(su(b3(y, x), al(z)), su(al(y), su(x, z))))));
  if (id == "post-alt-10")
    return vzero(vadd(vsub(pr(pr(z, x), al(y)), pr(al(z), b3(x, y))),
                      vscale(sxy, vsub(pr(pr(z, y), al(x)), pr(al(z), b3(y, x))))));

  auto assl = [&](const Vec& u, const Vec& v, const Vec& w) {
    return vsub(su(b2(u, v), al(w)), su(al(u), su(v, w)));
  };
  auto assm = [&](const Vec& u, const Vec& v, const Vec& w) {
    return vsub(pr(su(u, v), al(w)), su(al(u), pr(v, w)));
  };
  auto assr = [&](const Vec& u, const Vec& v, const Vec& w) {
    return vsub(pr(pr(u, v), al(w)), pr(al(u), b2(v, w)));
  };
  if (id == "pre-alt-1" || id == "pre-alt-2" || id == "pre-alt-3" || id == "pre-alt-4") {
    if (!p.dot_is_zero()) throw NotPreAlt("dot product must vanish");
    if (id == "pre-alt-1") return vzero(vadd(assm(x, y, z), vscale(sxy, assr(y, x, z))));
    if (id == "pre-alt-2") return vzero(vadd(assm(x, y, z), vscale(szy, assl(x, z, y))));
    if (id == "pre-alt-3") return vzero(vadd(assl(x, y, z), vscale(sxy, assl(y, x, z))));
    return vzero(vadd(assr(x, y, z), vscale(szy, assr(x, z, y))));
  }
  throw UnknownIdentity("unknown split-structure identity '" + id + "'");
}

template <class Trial>
bool run_trials(const SuperSpace& space, unsigned arity, unsigned trials, std::uint64_t seed,
                Trial&& trial) {
  if (space.dim() == 0) return true;
  std::mt19937_64 rng(seed);
  for (unsigned n = 0; n < trials; ++n) {
    std::vector<Sample> samples;
    for (unsigned i = 0; i < arity; ++i) samples.push_back(random_homogeneous(space, rng));
    if (!trial(samples)) return false;
  }
  return true;
}

}  // namespace

bool oracle_check(const HomAlgebra& a, const std::string& identity, unsigned trials,
                  std::uint64_t seed) {
  algebra_trial(a, identity, std::vector<Sample>(algebra_arity(identity),
                                                 Sample{zero_vec(a.dim()), 0}));  // name check
  return run_trials(a.space(), algebra_arity(identity), trials, seed,
                    [&](const std::vector<Sample>& s) { return algebra_trial(a, identity, s); });
}

bool oracle_check(const HomAlgebra& a, const BilinearForm& f, const std::string& identity,
                  unsigned trials, std::uint64_t seed) {
  unsigned arity = (identity == "invariant" || identity == "closedness") ? 3 : 2;
  form_trial(a, f, identity, std::vector<Sample>(arity, Sample{zero_vec(a.dim()), 0}));
  return run_trials(a.space(), arity, trials, seed,
                    [&](const std::vector<Sample>& s) { return form_trial(a, f, identity, s); });
}

bool oracle_check(const PostAltStructure& p, const std::string& identity, unsigned trials,
                  std::uint64_t seed) {
  postalt_trial(p, identity, std::vector<Sample>(3, Sample{zero_vec(p.dim()), 0}));
  return run_trials(p.space(), 3, trials, seed,
                    [&](const std::vector<Sample>& s) { return postalt_trial(p, identity, s); });
}

std::vector<std::string> algebra_identities() {
  return {"hom-associative", "left-alternative", "right-alternative", "flexible",
          "cyclic-associator", "multiplicative", "malcev-antisymmetry", "hom-malcev"};
}

std::vector<std::string> form_identities() {
  return {"supersymmetric", "super-skew", "invariant", "alpha-compatible", "closedness"};
}

std::vector<std::string> postalt_identities() {
  return {"post-alt-1", "post-alt-2", "post-alt-3", "post-alt-4", "post-alt-5",
          "post-alt-6", "post-alt-7", "post-alt-8", "post-alt-9", "post-alt-10",
          "pre-alt-1",  "pre-alt-2",  "pre-alt-3",  "pre-alt-4"};
}

}  // namespace homalt::oracle
