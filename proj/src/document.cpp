#include "homalt/document.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "homalt/errors.hpp"

namespace homalt {

namespace {

using nlohmann::ordered_json;

void require_object(const ordered_json& obj, std::initializer_list<const char*> required,
                    std::initializer_list<const char*> optional, const std::string& where) {
  if (!obj.is_object()) throw SchemaError(where + " must be an object");
  for (const char* k : required)
    if (!obj.contains(k)) throw SchemaError(where + " is missing key '" + std::string(k) + "'");
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* k : required) known = known || item.key() == k;
    for (const char* k : optional) known = known || item.key() == k;
    if (!known) throw SchemaError(where + " has unknown key '" + item.key() + "'");
  }
}

std::size_t get_dim(const ordered_json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw SchemaError(where + " must be a non-negative integer");
  return static_cast<std::size_t>(v.get<long long>());
}

std::size_t get_index(const ordered_json& v, std::size_t dim, const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw SchemaError(where + " must be a non-negative integer");
  auto idx = static_cast<std::size_t>(v.get<long long>());
  if (idx >= dim) throw RangeError(where + " index " + std::to_string(idx) + " out of range");
  return idx;
}

Rational get_rational(const ordered_json& v, const std::string& where) {
  if (!v.is_string()) throw SchemaError(where + " must be a rational string");
  return parse_rational(v.get<std::string>());
}

std::string get_string(const ordered_json& v, const std::string& where) {
  if (!v.is_string()) throw SchemaError(where + " must be a string");
  return v.get<std::string>();
}

std::vector<std::vector<Rational>> get_matrix(const ordered_json& v, std::size_t dim,
                                              const std::string& where) {
  if (!v.is_array() || v.size() != dim)
    throw SchemaError(where + " must be a " + std::to_string(dim) + "-row matrix");
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : v) {
    if (!row.is_array() || row.size() != dim)
      throw SchemaError(where + " rows must have " + std::to_string(dim) + " entries");
    std::vector<Rational> r;
    for (const auto& cell : row) r.push_back(get_rational(cell, where));
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<ProductEntry> get_entries(const ordered_json& v, std::size_t dim,
                                      const std::string& where) {
  if (!v.is_array()) throw SchemaError(where + " must be an array of entries");
  std::vector<ProductEntry> entries;
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  for (const auto& item : v) {
    require_object(item, {"i", "j", "k", "value"}, {}, where + " entry");
    ProductEntry e;
    e.i = get_index(item["i"], dim, where + ".i");
    e.j = get_index(item["j"], dim, where + ".j");
    e.k = get_index(item["k"], dim, where + ".k");
    e.value = get_rational(item["value"], where + ".value");
    if (!seen.insert({e.i, e.j, e.k}).second)
      throw SchemaError(where + " has a duplicate entry (" + std::to_string(e.i) + "," +
                        std::to_string(e.j) + "," + std::to_string(e.k) + ")");
    if (e.value != 0) entries.push_back(std::move(e));
  }
  std::sort(entries.begin(), entries.end(), [](const ProductEntry& a, const ProductEntry& b) {
    return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
  });
  return entries;
}

ordered_json entries_json(const std::vector<ProductEntry>& entries) {
  ordered_json arr = ordered_json::array();
  for (const ProductEntry& e : entries) {
    ordered_json o;
    o["i"] = e.i;
    o["j"] = e.j;
    o["k"] = e.k;
    o["value"] = format_rational(e.value);
    arr.push_back(std::move(o));
  }
  return arr;
}

ordered_json matrix_json(const std::vector<std::vector<Rational>>& m) {
  ordered_json arr = ordered_json::array();
  for (const auto& row : m) {
    ordered_json r = ordered_json::array();
    for (const Rational& x : row) r.push_back(format_rational(x));
    arr.push_back(std::move(r));
  }
  return arr;
}

std::vector<std::vector<Rational>> identity_entries(std::size_t n) {
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Matrix to_matrix(const std::vector<std::vector<Rational>>& rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

Tensor3 to_tensor(std::size_t n, const std::vector<ProductEntry>& entries) {
  Tensor3 t(n);
  for (const ProductEntry& e : entries) t.at(e.i, e.j, e.k) = e.value;
  return t;
}

std::string flavor_name(FormFlavor f) {
  return f == FormFlavor::supersymmetric ? "supersymmetric" : "super-skew";
}

std::string kind_name(OperatorKind k) {
  switch (k) {
    case OperatorKind::derivation: return "derivation";
    case OperatorKind::rotabaxter: return "rotabaxter";
    default: return "morphism";
  }
}

}  // namespace

AlgebraDocument parse_document(const std::string& text) {
  ordered_json root;
  try {
    root = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  require_object(root, {"evenDim", "oddDim", "product"},
                 {"basisNames", "alpha", "forms", "operators", "postalt"}, "document");

  AlgebraDocument doc;
  doc.even_dim = get_dim(root["evenDim"], "evenDim");
  doc.odd_dim = get_dim(root["oddDim"], "oddDim");
  const std::size_t dim = doc.even_dim + doc.odd_dim;

  if (root.contains("basisNames")) {
    if (!root["basisNames"].is_array())
      throw SchemaError("basisNames must be an array of strings");
    for (const auto& n : root["basisNames"]) {
      if (!n.is_string()) throw SchemaError("basisNames must be an array of strings");
      doc.basis_names.push_back(n.get<std::string>());
    }
    if (doc.basis_names.size() != dim)
      throw SchemaError("basisNames length does not match the dimension");
    std::set<std::string> uniq(doc.basis_names.begin(), doc.basis_names.end());
    if (uniq.size() != doc.basis_names.size())
      throw SchemaError("basisNames must be pairwise distinct");
  } else {
    for (std::size_t i = 0; i < dim; ++i) doc.basis_names.push_back("e" + std::to_string(i));
  }

  doc.product = get_entries(root["product"], dim, "product");
  doc.alpha = root.contains("alpha") ? get_matrix(root["alpha"], dim, "alpha")
                                     : identity_entries(dim);

  if (root.contains("forms")) {
    if (!root["forms"].is_array()) throw SchemaError("forms must be an array");
    std::set<std::string> names;
    for (const auto& item : root["forms"]) {
      require_object(item, {"name", "flavor", "parity", "gram"}, {}, "form");
      FormSpec spec;
      spec.name = get_string(item["name"], "form name");
      if (!names.insert(spec.name).second)
        throw SchemaError("duplicate form name '" + spec.name + "'");
      std::string flavor = get_string(item["flavor"], "form flavor");
      if (flavor == "supersymmetric") spec.flavor = FormFlavor::supersymmetric;
      else if (flavor == "super-skew") spec.flavor = FormFlavor::super_skew;
      else throw SchemaError("unknown form flavor '" + flavor + "'");
      std::string parity = get_string(item["parity"], "form parity");
      if (parity == "even") spec.parity = FormParity::even;
      else if (parity == "odd") spec.parity = FormParity::odd;
      else throw SchemaError("unknown form parity '" + parity + "'");
      spec.gram = get_matrix(item["gram"], dim, "gram of form '" + spec.name + "'");
      doc.forms.push_back(std::move(spec));
    }
  }

  if (root.contains("operators")) {
    if (!root["operators"].is_array()) throw SchemaError("operators must be an array");
    std::set<std::string> names;
    for (const auto& item : root["operators"]) {
      if (!item.is_object() || !item.contains("kind") || !item["kind"].is_string())
        throw SchemaError("operator entries need a string 'kind'");
      std::string kind = item["kind"].get<std::string>();
      OperatorSpec spec;
      if (kind == "derivation") {
        require_object(item, {"name", "kind", "matrix"}, {"degree", "power"}, "derivation");
        spec.kind = OperatorKind::derivation;
        if (item.contains("degree")) {
          long long d = item["degree"].is_number_integer() ? item["degree"].get<long long>() : -1;
          if (d != 0 && d != 1) throw SchemaError("derivation degree must be 0 or 1");
          spec.degree = static_cast<int>(d);
        }
        if (item.contains("power"))
          spec.power = static_cast<unsigned>(get_dim(item["power"], "power"));
      } else if (kind == "rotabaxter") {
        require_object(item, {"name", "kind", "matrix"}, {"weight"}, "rotabaxter operator");
        spec.kind = OperatorKind::rotabaxter;
        if (item.contains("weight")) spec.weight = get_rational(item["weight"], "weight");
      } else if (kind == "morphism") {
        require_object(item, {"name", "kind", "matrix"}, {}, "morphism");
        spec.kind = OperatorKind::morphism;
      } else {
        throw SchemaError("unknown operator kind '" + kind + "'");
      }
      spec.name = get_string(item["name"], "operator name");
      if (!names.insert(spec.name).second)
        throw SchemaError("duplicate operator name '" + spec.name + "'");
      spec.matrix = get_matrix(item["matrix"], dim, "matrix of operator '" + spec.name + "'");
      doc.operators.push_back(std::move(spec));
    }
  }

  if (root.contains("postalt")) {
    require_object(root["postalt"], {"prec", "succ", "dot"}, {}, "postalt");
    PostAltSpec spec;
    spec.prec = get_entries(root["postalt"]["prec"], dim, "postalt.prec");
    spec.succ = get_entries(root["postalt"]["succ"], dim, "postalt.succ");
    spec.dot = get_entries(root["postalt"]["dot"], dim, "postalt.dot");
    doc.postalt = std::move(spec);
  }
  return doc;
}

std::string serialize_document(const AlgebraDocument& doc) {
  ordered_json root;
  root["evenDim"] = doc.even_dim;
  root["oddDim"] = doc.odd_dim;
  root["basisNames"] = doc.basis_names;
  root["product"] = entries_json(doc.product);
  root["alpha"] = matrix_json(doc.alpha);
  if (!doc.forms.empty()) {
    ordered_json arr = ordered_json::array();
    for (const FormSpec& f : doc.forms) {
      ordered_json o;
      o["name"] = f.name;
      o["flavor"] = flavor_name(f.flavor);
      o["parity"] = f.parity == FormParity::even ? "even" : "odd";
      o["gram"] = matrix_json(f.gram);
      arr.push_back(std::move(o));
    }
    root["forms"] = std::move(arr);
  }
  if (!doc.operators.empty()) {
    ordered_json arr = ordered_json::array();
    for (const OperatorSpec& op : doc.operators) {
      ordered_json o;
      o["name"] = op.name;
      o["kind"] = kind_name(op.kind);
      o["matrix"] = matrix_json(op.matrix);
      if (op.kind == OperatorKind::derivation) {
        o["degree"] = op.degree;
        o["power"] = op.power;
      }
      if (op.kind == OperatorKind::rotabaxter) o["weight"] = format_rational(op.weight);
      arr.push_back(std::move(o));
    }
    root["operators"] = std::move(arr);
  }
  if (doc.postalt) {
    ordered_json o;
    o["prec"] = entries_json(doc.postalt->prec);
    o["succ"] = entries_json(doc.postalt->succ);
    o["dot"] = entries_json(doc.postalt->dot);
    root["postalt"] = std::move(o);
  }
  return root.dump(2) + "\n";
}

SuperSpace document_space(const AlgebraDocument& doc) {
  return SuperSpace(doc.even_dim, doc.odd_dim, doc.basis_names);
}

HomAlgebra document_algebra(const AlgebraDocument& doc) {
  SuperSpace space = document_space(doc);
  Tensor3 t = to_tensor(space.dim(), doc.product);
  GradedMap alpha(space, to_matrix(doc.alpha), 0);
  return HomAlgebra(std::move(space), std::move(t), std::move(alpha));
}

BilinearForm document_form(const AlgebraDocument& doc, const FormSpec& spec) {
  return BilinearForm(document_space(doc), to_matrix(spec.gram), spec.flavor, spec.parity);
}

GradedMap document_map(const AlgebraDocument& doc, const OperatorSpec& spec) {
  int degree = spec.kind == OperatorKind::derivation ? spec.degree : 0;
  return GradedMap(document_space(doc), to_matrix(spec.matrix), degree);
}

PostAltStructure document_postalt(const AlgebraDocument& doc) {
  if (!doc.postalt) throw SchemaError("document has no postalt section");
  SuperSpace space = document_space(doc);
  GradedMap alpha(space, to_matrix(doc.alpha), 0);
  return PostAltStructure(space, to_tensor(space.dim(), doc.postalt->prec),
                          to_tensor(space.dim(), doc.postalt->succ),
                          to_tensor(space.dim(), doc.postalt->dot), std::move(alpha));
}

const FormSpec* find_form(const AlgebraDocument& doc, const std::string& name) {
  for (const FormSpec& f : doc.forms)
    if (f.name == name) return &f;
  return nullptr;
}

const OperatorSpec* find_operator(const AlgebraDocument& doc, const std::string& name) {
  for (const OperatorSpec& op : doc.operators)
    if (op.name == name) return &op;
  return nullptr;
}

std::vector<ProductEntry> sparse_entries(const Tensor3& t) {
  std::vector<ProductEntry> entries;
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = 0; j < t.dim(); ++j)
      for (std::size_t k = 0; k < t.dim(); ++k)
        if (t.at(i, j, k) != 0) entries.push_back({i, j, k, t.at(i, j, k)});
  return entries;
}

std::vector<std::vector<Rational>> dense_matrix(const Matrix& m) {
  std::vector<std::vector<Rational>> rows(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
  return rows;
}

AlgebraDocument make_document(const HomAlgebra& a) {
  AlgebraDocument doc;
  doc.even_dim = a.space().even_dim();
  doc.odd_dim = a.space().odd_dim();
  doc.basis_names = a.space().basis_names();
  doc.product = sparse_entries(a.product());
  doc.alpha = dense_matrix(a.twist().matrix());
  return doc;
}

FormSpec make_form_spec(std::string name, const BilinearForm& f) {
  FormSpec spec;
  spec.name = std::move(name);
  spec.flavor = f.flavor();
  spec.parity = f.parity();
  spec.gram = dense_matrix(f.gram());
  return spec;
}

}  // namespace homalt
