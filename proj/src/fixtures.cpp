#include "homalt/fixtures.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <optional>
#include <tuple>

#include "homalt/errors.hpp"

namespace homalt {

namespace {

void set_entry(AlgebraDocument& doc, std::size_t i, std::size_t j, std::size_t k, Rational v) {
  doc.product.push_back({i, j, k, std::move(v)});
}

std::vector<std::vector<Rational>> rational_matrix(std::size_t n) {
  return std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, Rational(0)));
}

std::vector<std::vector<Rational>> identity_matrix(std::size_t n) {
  auto m = rational_matrix(n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

void sort_product(AlgebraDocument& doc) {
  std::sort(doc.product.begin(), doc.product.end(),
            [](const ProductEntry& a, const ProductEntry& b) {
              return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
            });
}

// Basis multiplication table of a Cayley-Dickson power of the rationals:
// products of basis vectors are signed basis vectors, and every basis vector
// other than the unit conjugates to its negative.
struct MonomialTable {
  std::size_t n = 1;
  std::vector<std::vector<int>> sign{{1}};
  std::vector<std::vector<std::size_t>> index{{0}};

  int conj(std::size_t i) const { return i == 0 ? 1 : -1; }

  // (a,b)(c,d) = (ac - d*b, da + bc*)
  void doubled() {
    std::size_t m = 2 * n;
    std::vector<std::vector<int>> s(m, std::vector<int>(m));
    std::vector<std::vector<std::size_t>> x(m, std::vector<std::size_t>(m));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        s[i][j] = sign[i][j];
        x[i][j] = index[i][j];
        s[i][n + j] = sign[j][i];
        x[i][n + j] = n + index[j][i];
        s[n + i][j] = sign[i][j] * conj(j);
        x[n + i][j] = n + index[i][j];
        s[n + i][n + j] = -conj(j) * sign[j][i];
        x[n + i][n + j] = index[j][i];
      }
    n = m;
    sign = std::move(s);
    index = std::move(x);
  }
};

}  // namespace

AlgebraDocument fixture_zero(std::size_t even_dim, std::size_t odd_dim) {
  AlgebraDocument doc;
  doc.even_dim = even_dim;
  doc.odd_dim = odd_dim;
  std::size_t dim = even_dim + odd_dim;
  for (std::size_t i = 0; i < dim; ++i) doc.basis_names.push_back("e" + std::to_string(i));
  doc.alpha = identity_matrix(dim);
  if (even_dim == 2 && odd_dim == 0) {
    FormSpec psi{"psi", FormFlavor::supersymmetric, FormParity::even, identity_matrix(2)};
    doc.forms.push_back(std::move(psi));
    auto j = rational_matrix(2);
    j[0][1] = 1;
    j[1][0] = -1;
    doc.forms.push_back({"omega", FormFlavor::super_skew, FormParity::even, j});
    OperatorSpec d{"D", OperatorKind::derivation, j, 0, 0, Rational(0)};
    doc.operators.push_back(std::move(d));
  }
  if (even_dim == 0 && odd_dim == 2) {
    auto psi = rational_matrix(2);
    psi[0][1] = 1;
    psi[1][0] = -1;
    doc.forms.push_back({"psi", FormFlavor::supersymmetric, FormParity::even, psi});
    auto omega = rational_matrix(2);
    omega[0][1] = 1;
    omega[1][0] = 1;
    doc.forms.push_back({"omega", FormFlavor::super_skew, FormParity::even, omega});
    auto d = rational_matrix(2);
    d[0][0] = 1;
    d[1][1] = -1;
    doc.operators.push_back({"D", OperatorKind::derivation, d, 0, 0, Rational(0)});
    doc.operators.push_back({"R", OperatorKind::rotabaxter, d, 0, 0, Rational(0)});
  }
  return doc;
}

AlgebraDocument fixture_dual() {
  AlgebraDocument doc;
  doc.even_dim = 2;
  doc.odd_dim = 0;
  doc.basis_names = {"1", "x"};
  set_entry(doc, 0, 0, 0, 1);
  set_entry(doc, 0, 1, 1, 1);
  set_entry(doc, 1, 0, 1, 1);
  doc.alpha = identity_matrix(2);

  auto psi = rational_matrix(2);
  psi[0][1] = 1;
  psi[1][0] = 1;
  doc.forms.push_back({"psi", FormFlavor::supersymmetric, FormParity::even, psi});

  auto r = rational_matrix(2);  // R(1) = x, R(x) = 0
  r[1][0] = 1;
  doc.operators.push_back({"R", OperatorKind::rotabaxter, r, 0, 0, Rational(0)});
  auto d = rational_matrix(2);  // D(1) = 0, D(x) = x
  d[1][1] = 1;
  doc.operators.push_back({"D", OperatorKind::derivation, d, 0, 0, Rational(0)});
  auto beta = rational_matrix(2);  // x -> 2x automorphism
  beta[0][0] = 1;
  beta[1][1] = 2;
  doc.operators.push_back({"beta", OperatorKind::morphism, beta, 0, 0, Rational(0)});
  return doc;
}

AlgebraDocument fixture_grassmann(unsigned generators) {
  if (generators == 0 || generators > 6) throw UnknownFixture("grassmann(n) needs 1 <= n <= 6");
  const std::uint32_t subsets = 1u << generators;

  // Even-cardinality subsets first, then odd; within a block by cardinality
  // and numeric value. position[s] is the basis index of subset s.
  std::vector<std::uint32_t> order;
  for (std::uint32_t s = 0; s < subsets; ++s) order.push_back(s);
  std::stable_sort(order.begin(), order.end(), [](std::uint32_t a, std::uint32_t b) {
    auto key = [](std::uint32_t s) {
      return std::tuple<int, int, std::uint32_t>(std::popcount(s) % 2, std::popcount(s), s);
    };
    return key(a) < key(b);
  });
  std::vector<std::size_t> position(subsets);
  for (std::size_t idx = 0; idx < order.size(); ++idx) position[order[idx]] = idx;

  AlgebraDocument doc;
  doc.even_dim = subsets / 2;
  doc.odd_dim = subsets / 2;
  for (std::uint32_t s : order) {
    if (s == 0) {
      doc.basis_names.push_back("1");
      continue;
    }
    std::string name = "e";
    for (unsigned g = 0; g < generators; ++g)
      if (s & (1u << g)) name += std::to_string(g + 1);
    doc.basis_names.push_back(name);
  }

  for (std::uint32_t s : order)
    for (std::uint32_t t : order) {
      if (s & t) continue;  // repeated generator
      int inversions = 0;
      for (unsigned gs = 0; gs < generators; ++gs) {
        if (!(s & (1u << gs))) continue;
        for (unsigned gt = 0; gt < generators; ++gt)
          if ((t & (1u << gt)) && gt < gs) ++inversions;
      }
      set_entry(doc, position[s], position[t], position[s | t],
                (inversions % 2 == 0) ? 1 : -1);
    }
  sort_product(doc);
  doc.alpha = identity_matrix(subsets);

  if (generators == 2) {
    // pairing on complementary subsets; basis order {1, e12, e1, e2}
    auto psi = rational_matrix(4);
    psi[0][1] = 1;
    psi[1][0] = 1;
    psi[2][3] = 1;
    psi[3][2] = -1;
    doc.forms.push_back({"psi", FormFlavor::supersymmetric, FormParity::even, psi});
    auto swap = rational_matrix(4);  // e1 <-> e2, e12 -> -e12
    swap[0][0] = 1;
    swap[1][1] = -1;
    swap[2][3] = 1;
    swap[3][2] = 1;
    doc.operators.push_back({"swap", OperatorKind::morphism, swap, 0, 0, Rational(0)});
    auto beta = rational_matrix(4);  // generator scaling by 2
    beta[0][0] = 1;
    beta[1][1] = 4;
    beta[2][2] = 2;
    beta[3][3] = 2;
    doc.operators.push_back({"beta", OperatorKind::morphism, beta, 0, 0, Rational(0)});
  }
  return doc;
}

AlgebraDocument fixture_oct() {
  MonomialTable table;
  for (int step = 0; step < 3; ++step) table.doubled();

  AlgebraDocument doc;
  doc.even_dim = 8;
  doc.odd_dim = 0;
  for (std::size_t i = 0; i < 8; ++i) doc.basis_names.push_back("e" + std::to_string(i));
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      set_entry(doc, i, j, table.index[i][j], table.sign[i][j]);
  sort_product(doc);
  doc.alpha = identity_matrix(8);

  // trace form <x, y> = coefficient of the unit in xy; invariant, unlike
  // the euclidean gram which is kept as a negative control
  auto trace = rational_matrix(8);
  trace[0][0] = 1;
  for (std::size_t i = 1; i < 8; ++i) trace[i][i] = -1;
  doc.forms.push_back({"trace", FormFlavor::supersymmetric, FormParity::even, trace});
  doc.forms.push_back({"euclid", FormFlavor::supersymmetric, FormParity::even,
                       identity_matrix(8)});

  auto beta = identity_matrix(8);  // doubling conjugation (a,b) -> (a,-b)
  for (std::size_t i = 4; i < 8; ++i) beta[i][i] = -1;
  doc.operators.push_back({"beta", OperatorKind::morphism, beta, 0, 0, Rational(0)});
  return doc;
}

AlgebraDocument fixture_broken2() {
  AlgebraDocument doc;
  doc.even_dim = 2;
  doc.odd_dim = 0;
  doc.basis_names = {"e0", "e1"};
  set_entry(doc, 0, 0, 1, 1);
  set_entry(doc, 1, 1, 0, 1);
  doc.alpha = identity_matrix(2);
  return doc;
}

AlgebraDocument fixture_nilpe4() {
  AlgebraDocument doc;
  doc.even_dim = 4;
  doc.odd_dim = 0;
  doc.basis_names = {"a", "b", "f", "g"};
  set_entry(doc, 0, 0, 1, 1);  // a a = b
  set_entry(doc, 0, 3, 2, 1);  // a g = f
  set_entry(doc, 3, 0, 2, 1);  // g a = f
  doc.alpha = identity_matrix(4);

  auto psi = rational_matrix(4);  // hyperbolic pairing (a,f), (b,g)
  psi[0][2] = 1;
  psi[2][0] = 1;
  psi[1][3] = 1;
  psi[3][1] = 1;
  doc.forms.push_back({"psi", FormFlavor::supersymmetric, FormParity::even, psi});

  auto d = rational_matrix(4);  // grading derivation, antisymmetric for psi
  d[0][0] = 1;
  d[1][1] = 2;
  d[2][2] = -1;
  d[3][3] = -2;
  doc.operators.push_back({"D", OperatorKind::derivation, d, 0, 0, Rational(0)});

  auto beta = rational_matrix(4);  // isometric automorphism, sign flip on a, f
  beta[0][0] = -1;
  beta[1][1] = 1;
  beta[2][2] = -1;
  beta[3][3] = 1;
  doc.operators.push_back({"beta", OperatorKind::morphism, beta, 0, 0, Rational(0)});
  return doc;
}

AlgebraDocument generate_fixture(const std::string& name) {
  std::string lower;
  for (char c : name) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "dual") return fixture_dual();
  if (lower == "oct") return fixture_oct();
  if (lower == "broken2") return fixture_broken2();
  if (lower == "nilpe4") return fixture_nilpe4();
  auto parse_args = [&](const std::string& prefix) -> std::optional<std::string> {
    if (lower.rfind(prefix + "(", 0) != 0 || lower.back() != ')') return std::nullopt;
    return lower.substr(prefix.size() + 1, lower.size() - prefix.size() - 2);
  };
  if (auto args = parse_args("zero")) {
    auto bar = args->find('|');
    if (bar != std::string::npos) {
      try {
        std::size_t p = std::stoul(args->substr(0, bar));
        std::size_t q = std::stoul(args->substr(bar + 1));
        if (p + q <= 64) return fixture_zero(p, q);
      } catch (const std::exception&) {
      }
    }
    throw UnknownFixture("zero fixture wants zero(p|q) with small p, q");
  }
  if (auto args = parse_args("grassmann")) {
    try {
      return fixture_grassmann(static_cast<unsigned>(std::stoul(*args)));
    } catch (const UnknownFixture&) {
      throw;
    } catch (const std::exception&) {
    }
    throw UnknownFixture("grassmann fixture wants grassmann(n)");
  }
  throw UnknownFixture("unknown fixture '" + name + "'");
}

std::vector<std::string> fixture_catalog() {
  return {"zero(1|0)", "zero(2|0)", "zero(0|2)", "dual", "grassmann(1)", "grassmann(2)",
          "oct", "broken2", "nilpe4"};
}

}  // namespace homalt
