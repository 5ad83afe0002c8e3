#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homalt/bilinear_form.hpp"
#include "homalt/hom_algebra.hpp"
#include "homalt/operators.hpp"
#include "homalt/post_alternative.hpp"

namespace homalt {

/// Sparse tensor entry: e_i e_j has e_k coordinate value.
struct ProductEntry {
  std::size_t i = 0, j = 0, k = 0;
  Rational value;

  bool operator==(const ProductEntry&) const = default;
};

struct FormSpec {
  std::string name;
  FormFlavor flavor = FormFlavor::supersymmetric;
  FormParity parity = FormParity::even;
  std::vector<std::vector<Rational>> gram;

  bool operator==(const FormSpec&) const = default;
};

enum class OperatorKind { derivation, rotabaxter, morphism };

struct OperatorSpec {
  std::string name;
  OperatorKind kind = OperatorKind::morphism;
  std::vector<std::vector<Rational>> matrix;
  int degree = 0;       // derivations only
  unsigned power = 0;   // derivations only
  Rational weight = 0;  // rotabaxter only

  bool operator==(const OperatorSpec&) const = default;
};

struct PostAltSpec {
  std::vector<ProductEntry> prec, succ, dot;

  bool operator==(const PostAltSpec&) const = default;
};

/*
 * On-disk algebra description. JSON with 0-based indices, rationals as
 * strings "p" or "p/q", sparse product entries. Parsing canonicalizes:
 * entries are sorted by (i,j,k), zero values dropped, defaults filled in
 * (alpha = identity, basis names e0..), so parse(serialize(d)) == d and
 * serialize is byte-stable.
 */
struct AlgebraDocument {
  std::size_t even_dim = 0, odd_dim = 0;
  std::vector<std::string> basis_names;
  std::vector<ProductEntry> product;
  std::vector<std::vector<Rational>> alpha;
  std::vector<FormSpec> forms;
  std::vector<OperatorSpec> operators;
  std::optional<PostAltSpec> postalt;

  bool operator==(const AlgebraDocument&) const = default;
};

/// Throws ParseError / SchemaError / RangeError / RationalError.
AlgebraDocument parse_document(const std::string& text);
std::string serialize_document(const AlgebraDocument& doc);

SuperSpace document_space(const AlgebraDocument& doc);
HomAlgebra document_algebra(const AlgebraDocument& doc);
BilinearForm document_form(const AlgebraDocument& doc, const FormSpec& spec);
GradedMap document_map(const AlgebraDocument& doc, const OperatorSpec& spec);
PostAltStructure document_postalt(const AlgebraDocument& doc);

const FormSpec* find_form(const AlgebraDocument& doc, const std::string& name);
const OperatorSpec* find_operator(const AlgebraDocument& doc, const std::string& name);

/// Writes a core object back into document fields.
std::vector<ProductEntry> sparse_entries(const Tensor3& t);
std::vector<std::vector<Rational>> dense_matrix(const Matrix& m);
AlgebraDocument make_document(const HomAlgebra& a);
FormSpec make_form_spec(std::string name, const BilinearForm& f);

}  // namespace homalt
