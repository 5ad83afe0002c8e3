#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "homalt/bilinear_form.hpp"
#include "homalt/hom_algebra.hpp"
#include "homalt/post_alternative.hpp"

namespace homalt::oracle {

/*
 * Independent verification path for the basis-tuple checkers: each identity
 * is evaluated on random homogeneous linear combinations of basis vectors
 * with small integer coefficients, using this module's own product loops and
 * sign arithmetic (nothing here calls the checker implementations). Exact
 * comparison to zero; deterministic for a fixed seed.
 */

/// Identities on an algebra: hom-associative, left-alternative,
/// right-alternative, flexible, cyclic-associator, multiplicative,
/// malcev-antisymmetry, hom-malcev. Throws UnknownIdentity.
bool oracle_check(const HomAlgebra& a, const std::string& identity, unsigned trials,
                  std::uint64_t seed);

/// Identities on a form over an algebra: supersymmetric, super-skew,
/// invariant, alpha-compatible, closedness.
bool oracle_check(const HomAlgebra& a, const BilinearForm& f, const std::string& identity,
                  unsigned trials, std::uint64_t seed);

/// Identities on a split structure: post-alt-1 .. post-alt-10 and, when the
/// dot product vanishes, pre-alt-1 .. pre-alt-4.
bool oracle_check(const PostAltStructure& p, const std::string& identity, unsigned trials,
                  std::uint64_t seed);

std::vector<std::string> algebra_identities();
std::vector<std::string> form_identities();
std::vector<std::string> postalt_identities();

}  // namespace homalt::oracle
