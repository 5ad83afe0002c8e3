#pragma once

#include <string>

#include "homalt/document.hpp"

namespace homalt {

/*
 * Deterministic fixture catalog. Fixtures ship with the forms and operators
 * their standard constructions use, so the catalog doubles as regression
 * data for the whole pipeline.
 *
 *   zero(p|q)   zero product on a p|q space; the 2|0 and 0|2 cases carry
 *               canonical pseudo-Euclidean and symplectic forms
 *   dual        Q[x]/(x^2), basis {1, x}, with the hyperbolic invariant
 *               form, a weight-0 Rota-Baxter operator and a derivation
 *   grassmann(n) exterior algebra on n odd generators (even subsets of the
 *               generator set come first); n = 2 carries its invariant form
 *   oct         octonions by three Cayley-Dickson doublings of the
 *               rationals, with the trace form and the doubling-conjugation
 *               automorphism
 *   broken2     e0 e0 = e1, e1 e1 = e0 on a 2|0 space; left alternativity
 *               fails, kept as a negative control
 *   nilpe4      4-dimensional nilpotent algebra a a = b, a g = g a = f with
 *               a hyperbolic invariant form and an invertible antisymmetric
 *               derivation diag(1, 2, -1, -2)
 */
AlgebraDocument fixture_zero(std::size_t even_dim, std::size_t odd_dim);
AlgebraDocument fixture_dual();
AlgebraDocument fixture_grassmann(unsigned generators);
AlgebraDocument fixture_oct();
AlgebraDocument fixture_broken2();
AlgebraDocument fixture_nilpe4();

/// Parses names like "dual", "oct", "zero(0|2)", "grassmann(2)".
/// Throws UnknownFixture.
AlgebraDocument generate_fixture(const std::string& name);

/// Names accepted by generate_fixture, for catalog-wide tests.
std::vector<std::string> fixture_catalog();

}  // namespace homalt
