#pragma once

#include <random>
#include <string>
#include <vector>

#include "homalt/document.hpp"
#include "homalt/fixtures.hpp"

namespace testutil {

using namespace homalt;

inline HomAlgebra make_algebra(const std::string& fixture) {
  return document_algebra(generate_fixture(fixture));
}

inline BilinearForm make_form(const std::string& fixture, const std::string& form) {
  AlgebraDocument doc = generate_fixture(fixture);
  const FormSpec* spec = find_form(doc, form);
  REQUIRE(spec != nullptr);
  return document_form(doc, *spec);
}

inline GradedMap make_operator(const std::string& fixture, const std::string& name) {
  AlgebraDocument doc = generate_fixture(fixture);
  const OperatorSpec* spec = find_operator(doc, name);
  REQUIRE(spec != nullptr);
  return document_map(doc, *spec);
}

inline Rational random_nonzero_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  int n = num(rng);
  if (n == 0) n = 1;
  return Rational(n, den(rng));
}

inline GradedMap diagonal_map(const SuperSpace& space, const Vec& diag) {
  Matrix m(space.dim(), space.dim());
  for (std::size_t i = 0; i < space.dim(); ++i) m(i, i) = diag[i];
  return GradedMap(space, std::move(m), 0);
}

/// A verified random automorphism of the named fixture's algebra. Every
/// returned map passes check_morphism against the fixture.
inline GradedMap random_automorphism(const std::string& fixture, const HomAlgebra& a,
                                     std::mt19937_64& rng) {
  if (fixture == "dual") {
    return diagonal_map(a.space(), {Rational(1), random_nonzero_rational(rng)});
  }
  if (fixture == "grassmann(1)") {
    return diagonal_map(a.space(), {Rational(1), random_nonzero_rational(rng)});
  }
  if (fixture == "grassmann(2)") {
    Rational c = random_nonzero_rational(rng);
    Rational d = random_nonzero_rational(rng);
    return diagonal_map(a.space(), {Rational(1), c * d, c, d});
  }
  if (fixture == "oct") {
    GradedMap beta = make_operator("oct", "beta");
    return (rng() % 2 == 0) ? beta : GradedMap::identity(a.space());
  }
  if (fixture == "nilpe4") {
    Rational c = random_nonzero_rational(rng);
    Rational d = random_nonzero_rational(rng);
    return diagonal_map(a.space(), {c, c * c, c * d, d});
  }
  // zero products: any invertible even map is an automorphism
  Matrix m(a.dim(), a.dim());
  std::uniform_int_distribution<int> entry(-2, 2);
  do {
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j) {
        bool same_block = a.space().degree(i) == a.space().degree(j);
        m(i, j) = same_block ? Rational(entry(rng)) : Rational(0);
      }
  } while (rank(m) != a.dim());
  return GradedMap(a.space(), std::move(m), 0);
}

/// Fixture names whose algebras are alternative (broken2 is excluded).
inline std::vector<std::string> alternative_fixtures() {
  return {"zero(1|0)", "zero(2|0)", "zero(0|2)", "dual",
          "grassmann(1)", "grassmann(2)", "oct", "nilpe4"};
}

}  // namespace testutil
