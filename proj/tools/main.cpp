// Command-line front end: check identity suites, run the constructions,
// emit fixtures, and cross-check with the randomized oracle.
//
// Exit codes: 0 all checks hold, 1 a property fails, 2 input/usage error.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "homalt/document.hpp"
#include "homalt/errors.hpp"
#include "homalt/fixtures.hpp"
#include "homalt/oracle.hpp"

namespace {

using namespace homalt;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << text;
}

std::string witness_string(const Witness& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.indices.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w.indices[i]);
  }
  s += ")";
  return s;
}

std::string defect_string(const Vec& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += ",";
    s += format_rational(d[i]);
  }
  s += ")";
  return s;
}

void print_report(const std::string& suite, const AxiomReport& report, bool json_output) {
  if (json_output) {
    nlohmann::ordered_json root;
    root["suite"] = suite;
    nlohmann::ordered_json axioms = nlohmann::ordered_json::array();
    for (const AxiomEntry& e : report.entries) {
      nlohmann::ordered_json o;
      o["name"] = e.name;
      o["holds"] = e.holds;
      if (e.witness) {
        o["witness"] = e.witness->indices;
        nlohmann::ordered_json defect = nlohmann::ordered_json::array();
        for (const Rational& x : e.witness->defect) defect.push_back(format_rational(x));
        o["defect"] = std::move(defect);
      } else {
        o["witness"] = nullptr;
        o["defect"] = nullptr;
      }
      axioms.push_back(std::move(o));
    }
    root["axioms"] = std::move(axioms);
    root["exit"] = report.all_hold() ? 0 : 1;
    std::cout << root.dump(2) << "\n";
    return;
  }
  for (const AxiomEntry& e : report.entries) {
    if (e.holds) {
      std::cout << "[ok]   " << e.name << "\n";
    } else {
      std::cout << "[FAIL] " << e.name << "  witness=" << witness_string(*e.witness)
                << " defect=" << defect_string(e.witness->defect) << "\n";
    }
  }
}

const FormSpec& pick_form(const AlgebraDocument& doc, const std::string& requested,
                          FormFlavor wanted, const char* suite) {
  if (!requested.empty()) {
    const FormSpec* f = find_form(doc, requested);
    if (!f) throw SchemaError("document has no form named '" + requested + "'");
    return *f;
  }
  for (const FormSpec& f : doc.forms)
    if (f.flavor == wanted) return f;
  throw SchemaError(std::string("suite '") + suite + "' needs a form; none found in the document");
}

const OperatorSpec& pick_operator(const AlgebraDocument& doc, const std::string& requested,
                                  OperatorKind kind, const char* what) {
  if (!requested.empty()) {
    const OperatorSpec* op = find_operator(doc, requested);
    if (!op) throw SchemaError("document has no operator named '" + requested + "'");
    if (op->kind != kind)
      throw SchemaError("operator '" + requested + "' has the wrong kind for " + what);
    return *op;
  }
  for (const OperatorSpec& op : doc.operators)
    if (op.kind == kind) return op;
  throw SchemaError(std::string("no ") + what + " operator found in the document");
}

// Operator references in --param values: first a name in the document, then
// a path to a JSON file holding either a bare operator object or a document
// with exactly one operator of the wanted kind. An empty reference picks the
// document's first operator of the wanted kind.
OperatorSpec resolve_operator_ref(const AlgebraDocument& doc, const std::string& ref,
                                  OperatorKind kind, const char* what) {
  if (ref.empty()) return pick_operator(doc, "", kind, what);
  if (const OperatorSpec* op = find_operator(doc, ref)) {
    if (op->kind != kind)
      throw SchemaError("operator '" + ref + "' has the wrong kind for " + what);
    return *op;
  }
  if (std::filesystem::exists(ref)) {
    AlgebraDocument other = parse_document(read_file(ref));
    if (other.even_dim != doc.even_dim || other.odd_dim != doc.odd_dim)
      throw SchemaError("operator file '" + ref + "' has mismatched dimensions");
    const OperatorSpec* found = nullptr;
    for (const OperatorSpec& op : other.operators) {
      if (op.kind != kind) continue;
      if (found) throw SchemaError("operator file '" + ref + "' is ambiguous; name one operator");
      found = &op;
    }
    if (!found) throw SchemaError("operator file '" + ref + "' holds no suitable operator");
    return *found;
  }
  throw SchemaError("cannot resolve operator reference '" + ref + "'");
}

std::map<std::string, std::string> parse_params(const std::vector<std::string>& raw) {
  std::map<std::string, std::string> params;
  for (const std::string& kv : raw) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw SchemaError("--param wants name=value, got '" + kv + "'");
    params[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  return params;
}

std::string param_or(const std::map<std::string, std::string>& params, const std::string& key,
                     const std::string& fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

int run_check(const std::string& file, const std::string& suite, const std::string& form_name,
              const std::string& op_name, const std::string& phi_name, bool json_output) {
  AlgebraDocument doc = parse_document(read_file(file));
  AxiomReport report;
  if (suite == "alternative") {
    report = check_alternative(document_algebra(doc));
  } else if (suite == "pe") {
    HomAlgebra a = document_algebra(doc);
    BilinearForm f = document_form(doc, pick_form(doc, form_name, FormFlavor::supersymmetric, "pe"));
    if (!phi_name.empty()) {
      const OperatorSpec* phi = find_operator(doc, phi_name);
      if (!phi) throw SchemaError("document has no operator named '" + phi_name + "'");
      GradedMap phi_map = document_map(doc, *phi);
      report = check_pseudo_euclidean(a, f, &phi_map);
    } else {
      report = check_pseudo_euclidean(a, f);
    }
  } else if (suite == "symplectic") {
    HomAlgebra a = document_algebra(doc);
    BilinearForm w =
        document_form(doc, pick_form(doc, form_name, FormFlavor::super_skew, "symplectic"));
    report = check_symplectic(a, w);
  } else if (suite == "malcev") {
    report = check_hom_malcev(document_algebra(doc));
  } else if (suite == "postalt") {
    report = check_post_alternative(document_postalt(doc));
  } else if (suite == "prealt") {
    report = check_pre_alternative(document_postalt(doc));
  } else if (suite == "rb") {
    HomAlgebra a = document_algebra(doc);
    const OperatorSpec& spec = pick_operator(doc, op_name, OperatorKind::rotabaxter, "rb");
    RotaBaxterOp r(document_map(doc, spec), spec.weight);
    report = check_rota_baxter(a, r);
  } else {
    throw SchemaError("unknown suite '" + suite + "'");
  }
  print_report(suite, report, json_output);
  return report.all_hold() ? 0 : 1;
}

int run_construct(const std::string& file, const std::string& op,
                  const std::vector<std::string>& raw_params, const std::string& out) {
  AlgebraDocument doc = parse_document(read_file(file));
  auto params = parse_params(raw_params);
  HomAlgebra a = document_algebra(doc);

  auto algebra_output = [&](const HomAlgebra& result) {
    AlgebraDocument next = make_document(result);
    next.forms = doc.forms;
    next.operators = doc.operators;
    return next;
  };
  auto postalt_output = [&](const PostAltStructure& p) {
    AlgebraDocument next = doc;
    next.postalt = PostAltSpec{sparse_entries(p.prec()), sparse_entries(p.succ()),
                               sparse_entries(p.dot())};
    return next;
  };
  auto with_form = [&](BilinearForm f, const std::string& name) {
    AlgebraDocument next = doc;
    if (find_form(next, name))
      throw SchemaError("output form name '" + name + "' already exists; pass out=<name>");
    next.forms.push_back(make_form_spec(name, f));
    return next;
  };

  AlgebraDocument result;
  if (op == "opposite") {
    result = algebra_output(opposite(a));
  } else if (op == "yau-twist") {
    OperatorSpec beta = resolve_operator_ref(doc, param_or(params, "beta", ""),
                                             OperatorKind::morphism, "yau-twist");
    result = algebra_output(yau_twist(a, document_map(doc, beta)));
  } else if (op == "untwist") {
    result = algebra_output(untwist(a));
  } else if (op == "alpha-power") {
    std::string n = param_or(params, "n", "");
    if (n.empty()) throw SchemaError("alpha-power wants --param n=<non-negative integer>");
    result = algebra_output(alpha_power_twist(a, static_cast<unsigned>(std::stoul(n))));
  } else if (op == "commutator") {
    result = algebra_output(commutator_bracket(a));
  } else if (op == "rb-split" || op == "rb-derived") {
    OperatorSpec spec =
        resolve_operator_ref(doc, param_or(params, "R", ""), OperatorKind::rotabaxter, op.c_str());
    RotaBaxterOp r(document_map(doc, spec), spec.weight);
    if (op == "rb-split")
      result = postalt_output(rb_to_postalt(a, r));
    else
      result = algebra_output(rb_derived_product(a, r));
  } else if (op == "bullet") {
    result = algebra_output(bullet(document_postalt(doc)));
    result.postalt.reset();
  } else if (op == "deriv-symplectic") {
    const FormSpec& fs = pick_form(doc, param_or(params, "form", ""),
                                   FormFlavor::supersymmetric, "deriv-symplectic");
    OperatorSpec d = resolve_operator_ref(doc, param_or(params, "D", ""),
                                          OperatorKind::derivation, "deriv-symplectic");
    BilinearForm omega = derivation_symplectic(a, document_form(doc, fs), document_map(doc, d));
    result = with_form(omega, param_or(params, "out", "omega"));
  } else if (op == "rb-symplectic") {
    const FormSpec& fs = pick_form(doc, param_or(params, "form", ""),
                                   FormFlavor::supersymmetric, "rb-symplectic");
    OperatorSpec spec = resolve_operator_ref(doc, param_or(params, "R", ""),
                                             OperatorKind::rotabaxter, "rb-symplectic");
    RotaBaxterOp r(document_map(doc, spec), spec.weight);
    BilinearForm omega = rb_symplectic(a, document_form(doc, fs), r);
    result = with_form(omega, param_or(params, "out", "psi_R"));
  } else if (op == "symplectic-split") {
    const FormSpec& fs = pick_form(doc, param_or(params, "form", ""),
                                   FormFlavor::super_skew, "symplectic-split");
    result = postalt_output(symplectic_split(a, document_form(doc, fs)));
  } else {
    throw SchemaError("unknown construction '" + op + "'");
  }
  write_output(out, serialize_document(result));
  return 0;
}

int run_oracle(const std::string& file, const std::string& identity, unsigned trials,
               std::uint64_t seed, const std::string& form_name) {
  AlgebraDocument doc = parse_document(read_file(file));
  bool agreed;
  auto postalt_ids = oracle::postalt_identities();
  bool is_postalt =
      std::find(postalt_ids.begin(), postalt_ids.end(), identity) != postalt_ids.end();
  auto form_ids = oracle::form_identities();
  bool is_form = std::find(form_ids.begin(), form_ids.end(), identity) != form_ids.end();
  if (is_postalt) {
    agreed = oracle::oracle_check(document_postalt(doc), identity, trials, seed);
  } else if (is_form) {
    HomAlgebra a = document_algebra(doc);
    FormFlavor wanted =
        (identity == "super-skew" || identity == "closedness") ? FormFlavor::super_skew
                                                               : FormFlavor::supersymmetric;
    BilinearForm f = document_form(doc, pick_form(doc, form_name, wanted, "oracle"));
    agreed = oracle::oracle_check(a, f, identity, trials, seed);
  } else {
    agreed = oracle::oracle_check(document_algebra(doc), identity, trials, seed);
  }
  std::cout << (agreed ? "holds" : "violated") << "\n";
  return agreed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification and construction toolkit for graded twisted algebras"
               " given by exact structure constants"};
  app.require_subcommand(1);

  std::string file, suite = "alternative", form_name, op_name, phi_name;
  bool json_output = false;
  CLI::App* check = app.add_subcommand("check", "run an identity suite on a document");
  check->add_option("file", file, "algebra document")->required();
  check->add_option("--suite", suite,
                    "alternative|pe|symplectic|malcev|postalt|prealt|rb (default alternative)");
  check->add_option("--form", form_name, "form name for pe/symplectic suites");
  check->add_option("--operator", op_name, "operator name for the rb suite");
  check->add_option("--phi", phi_name, "morphism name for the phi-variant pe suite");
  check->add_flag("--json", json_output, "machine-readable report");

  std::string cfile, cop, cout_path = "-";
  std::vector<std::string> cparams;
  CLI::App* construct = app.add_subcommand("construct", "run a construction, write the result");
  construct->add_option("file", cfile, "algebra document")->required();
  construct->add_option("--op", cop,
                        "opposite|yau-twist|untwist|alpha-power|commutator|rb-split|rb-derived|"
                        "bullet|deriv-symplectic|rb-symplectic|symplectic-split")
      ->required();
  construct->add_option("--param", cparams, "name=value construction parameters");
  construct->add_option("-o,--output", cout_path, "output path (default stdout)");

  std::string fname, fout = "-";
  CLI::App* fixture = app.add_subcommand("fixture", "emit a catalog fixture");
  fixture->add_option("name", fname, "dual, oct, broken2, nilpe4, zero(p|q), grassmann(n)")
      ->required();
  fixture->add_option("-o,--output", fout, "output path (default stdout)");

  std::string ofile, oidentity, oform;
  unsigned otrials = 100;
  std::uint64_t oseed = 0;
  CLI::App* oracle_cmd = app.add_subcommand("oracle", "randomized independent identity check");
  oracle_cmd->add_option("file", ofile, "algebra document")->required();
  oracle_cmd->add_option("--identity", oidentity, "identity name")->required();
  oracle_cmd->add_option("--trials", otrials, "number of random trials (default 100)");
  oracle_cmd->add_option("--seed", oseed, "RNG seed (default 0)");
  oracle_cmd->add_option("--form", oform, "form name for form identities");

  try {
    app.parse(argc, argv);
    if (check->parsed())
      return run_check(file, suite, form_name, op_name, phi_name, json_output);
    if (construct->parsed()) return run_construct(cfile, cop, cparams, cout_path);
    if (fixture->parsed()) {
      write_output(fout, serialize_document(generate_fixture(fname)));
      return 0;
    }
    if (oracle_cmd->parsed()) return run_oracle(ofile, oidentity, otrials, oseed, oform);
    return 2;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  } catch (const homalt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
