// folia: compute with infinitesimal foliations presented by polynomial
// generator sets: Jordan-algebra classification of the degree-two basic
// space, Clifford systems, generation-degree checks, foliated-map
// varieties, moduli of invariant subspaces, and symmetry witnesses.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "folia/basic_space.hpp"
#include "folia/error.hpp"
#include "folia/json_io.hpp"
#include "folia/symmetry.hpp"

using namespace folia;

namespace {

struct GlobalOpts {
  std::uint64_t seed = 12345;
  double tol = 1e-9;
  int dmax = 4;
  std::size_t sample_cap = 4000;
  std::string format = "text";
};

BasicOptions basic_opts(const GlobalOpts& g) {
  BasicOptions o;
  o.seed = g.seed;
  o.tol = g.tol;
  o.sample_cap = g.sample_cap;
  return o;
}

Json read_json_arg(const std::string& arg) {
  if (!arg.empty() && (arg[0] == '[' || arg[0] == '{')) return Json::parse(arg);
  std::ifstream in(arg);
  if (!in) throw InputError("cannot open file: " + arg);
  Json j;
  in >> j;
  return j;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

/// Model grammar: diag:K,k,n | so:k,n | clifford:m,k | trivial:n |
/// product:(spec;spec) | composed:m,k:file.json
FoliationModel parse_model_spec(const std::string& spec) {
  if (spec.rfind("diag:", 0) == 0) {
    auto parts = split(spec.substr(5), ',');
    if (parts.size() != 3) throw InputError("diag:K,k,n");
    Field f = parts[0] == "R"   ? Field::R
              : parts[0] == "C" ? Field::C
              : parts[0] == "H" ? Field::H
                                : throw InputError("field must be R, C, or H");
    return diagonal_model(f, std::stoul(parts[1]), std::stoul(parts[2]));
  }
  if (spec.rfind("so:", 0) == 0) {
    auto parts = split(spec.substr(3), ',');
    if (parts.size() != 2) throw InputError("so:k,n");
    return so_model(std::stoul(parts[0]), std::stoul(parts[1]));
  }
  if (spec.rfind("clifford:", 0) == 0) {
    auto parts = split(spec.substr(9), ',');
    if (parts.size() != 2) throw InputError("clifford:m,k");
    auto c = build_clifford(std::stoul(parts[0]), std::stoul(parts[1]));
    if (has_disconnected_leaves(c))
      std::cerr << "warning: C_{" << c.m << "," << parts[1]
                << "}: disconnected leaves; computations refer to the connected "
                   "refinement\n";
    return clifford_model(c);
  }
  if (spec.rfind("trivial:", 0) == 0) return trivial_model(std::stoul(spec.substr(8)));
  if (spec.rfind("product:(", 0) == 0 && spec.back() == ')') {
    std::string inner = spec.substr(9, spec.size() - 10);
    int depth = 0;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (inner[i] == '(') ++depth;
      if (inner[i] == ')') --depth;
      // '+' is an alias for ';' (shells and build scripts eat semicolons)
      if ((inner[i] == ';' || inner[i] == '+') && depth == 0)
        return product_model(parse_model_spec(inner.substr(0, i)),
                             parse_model_spec(inner.substr(i + 1)));
    }
    throw InputError("product:(spec;spec)");
  }
  if (spec.rfind("composed:", 0) == 0) {
    auto rest = spec.substr(9);
    auto second_colon = rest.find(':');
    if (second_colon == std::string::npos) throw InputError("composed:m,k:file.json");
    auto parts = split(rest.substr(0, second_colon), ',');
    if (parts.size() != 2) throw InputError("composed:m,k:file.json");
    auto c = build_clifford(std::stoul(parts[0]), std::stoul(parts[1]));
    Json gens = read_json_arg(rest.substr(second_colon + 1));
    std::vector<Polynomial> f0;
    for (const auto& g : gens) f0.push_back(polynomial_from_json(g));
    return composed_model(c, f0);
  }
  throw InputError("unknown model spec: " + spec);
}

std::string factor_line(const SimpleFactor& f) {
  std::ostringstream os;
  os << factor_type_name(f.type) << "(" << f.param << ")";
  if (!f.note.empty()) os << " [" << f.note << "]";
  os << ", multiplicity " << f.multiplicity << ", dim V_i = " << f.subspace_dim;
  return os.str();
}

std::string poly_with_names(const Polynomial& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Rat a = abs(c);
    std::vector<std::string> tokens;
    if (a != 1 || total_degree(e) == 0) tokens.push_back(rat_to_string(a));
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      std::string t = names[i];
      if (e[i] > 1) t += "^" + std::to_string(e[i]);
      tokens.push_back(std::move(t));
    }
    for (std::size_t i = 0; i < tokens.size(); ++i) os << (i ? "*" : "") << tokens[i];
    first = false;
  }
  return os.str();
}

int cmd_classify(const std::string& input, const GlobalOpts& g) {
  Json j = read_json_arg(input);
  std::vector<Matrix> seed;
  if (j.is_object() && j.contains("P")) {
    // a serialized Clifford system works directly as a seed
    for (const auto& mj : j["P"]) seed.push_back(matrix_from_json(mj));
  } else {
    for (const auto& mj : j) seed.push_back(matrix_from_json(mj));
  }
  auto algebra = JordanAlgebra::close(seed);
  auto factors = decompose(algebra, g.tol, g.seed);
  if (g.format == "json") {
    Json out;
    out["algebra_dim"] = algebra.dim();
    out["factors"] = factors_to_json(factors);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "Jordan algebra: dim " << algebra.dim() << " on R^"
              << algebra.ambient_dim() << ", " << factors.size() << " simple factor"
              << (factors.size() == 1 ? "" : "s") << "\n";
    for (const auto& f : factors) std::cout << "  " << factor_line(f) << "\n";
  }
  return 0;
}

int cmd_clifford(std::size_t m, std::size_t k, bool verify, const std::string& psi_arg,
                 const std::string& slice_arg, const GlobalOpts& g) {
  auto c = build_clifford(m, k);
  if (has_disconnected_leaves(c))
    std::cerr << "warning: C_{" << m << "," << k << "}: disconnected leaves\n";
  if (verify) {
    bool ok = verify_relations(c);
    std::cout << (ok ? "relations hold exactly" : "relations FAIL") << "\n";
    return ok ? 0 : 1;
  }
  if (!psi_arg.empty()) {
    VecR x = vector_from_json(read_json_arg(psi_arg));
    VecR y = psi(c, x);
    if (g.format == "json") {
      std::cout << vector_to_json(y).dump() << "\n";
    } else {
      std::cout << "(";
      for (std::size_t i = 0; i < y.size(); ++i)
        std::cout << (i ? ", " : "") << rat_to_string(y[i]);
      std::cout << ")\n";
    }
    return 0;
  }
  if (!slice_arg.empty()) {
    VecR y = vector_from_json(read_json_arg(slice_arg));
    auto x = slice_point(c, y, g.tol);
    std::ostringstream os;
    os.precision(17);
    os << "[";
    for (std::size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i];
    os << "]";
    std::cout << os.str() << "\n";
    return 0;
  }
  if (g.format == "json") {
    std::cout << clifford_to_json(c).dump(2) << "\n";
  } else {
    std::cout << "C_{" << m << "," << k << "}: " << m + 1 << " generators on R^"
              << 2 * c.l << ", relations "
              << (verify_relations(c) ? "hold" : "FAIL") << "\n";
  }
  return 0;
}

int cmd_fft(const std::string& spec, const GlobalOpts& g, bool expect_equal) {
  auto m = parse_model_spec(spec);
  BasicOptions opt = basic_opts(g);
  auto rows = fft_check(m, g.dmax, opt);
  bool all_equal = true;
  if (g.format == "json") {
    std::cout << fft_to_json(rows).dump(2) << "\n";
    for (const auto& r : rows) all_equal = all_equal && r.equal;
  } else {
    for (const auto& r : rows) {
      std::cout << "degree " << r.degree << ": generated " << r.generated << ", basic "
                << r.basic;
      if (r.equal) std::cout << ", equal\n";
      else std::cout << ", GAP " << (r.basic - r.generated) << "\n";
      all_equal = all_equal && r.equal;
    }
  }
  return (expect_equal && !all_equal) ? 1 : 0;
}

int cmd_hom(const std::string& src_spec, const std::string& tgt_spec,
            const std::string& mode_name, const std::string& test_arg,
            const GlobalOpts& g) {
  auto src = parse_model_spec(src_spec);
  auto tgt = tgt_spec.empty() ? parse_model_spec(src_spec) : parse_model_spec(tgt_spec);
  HomMode mode = mode_name == "onto" ? HomMode::Onto : HomMode::Into;
  BasicOptions opt = basic_opts(g);
  if (!test_arg.empty()) {
    Matrix phi = matrix_from_json(read_json_arg(test_arg));
    bool into = is_foliated(src, tgt, phi, HomMode::Into, opt);
    bool onto = into && is_foliated(src, tgt, phi, HomMode::Onto, opt);
    std::cout << "into: " << (into ? "true" : "false")
              << ", onto: " << (onto ? "true" : "false") << "\n";
    return 0;
  }
  auto hv = hom_equations(src, tgt, mode, opt);
  if (g.format == "json") {
    std::cout << equations_to_json(hv).dump(2) << "\n";
  } else {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < tgt.dim; ++i)
      for (std::size_t j = 0; j < src.dim; ++j)
        names.push_back("phi_" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
    std::cout << hv.equations.size() << " equations ("
              << (mode == HomMode::Onto ? "onto" : "into") << " mode)\n";
    for (const auto& e : hv.equations)
      std::cout << "  " << poly_with_names(e, names) << " = 0\n";
  }
  return 0;
}

int cmd_moduli(const std::string& spec, const GlobalOpts& g) {
  auto m = parse_model_spec(spec);
  auto r = f2(m, basic_opts(g));
  auto reports = moduli_report(r.factors);
  if (g.format == "json") {
    std::cout << moduli_to_json(reports).dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < reports.size(); ++i) {
      std::cout << reports[i].factor_type << ": ";
      for (std::size_t c = 0; c < reports[i].components.size(); ++c)
        std::cout << (c ? " | " : "") << reports[i].components[c];
      std::cout << " (dims";
      for (auto d : reports[i].dims) std::cout << " " << d;
      std::cout << ")\n";
    }
  }
  return 0;
}

int cmd_symmetry(const std::string& spec, const std::string& u_arg,
                 const std::string& w_arg, const GlobalOpts& g) {
  auto m = parse_model_spec(spec);
  BasicOptions opt = basic_opts(g);
  auto r = f2(m, opt);
  if (!u_arg.empty() || !w_arg.empty()) {
    if (u_arg.empty() || w_arg.empty())
      throw InputError("--witness needs both U.json and W.json");
    std::vector<VecR> u, w;
    for (const auto& v : read_json_arg(u_arg)) u.push_back(vector_from_json(v));
    for (const auto& v : read_json_arg(w_arg)) w.push_back(vector_from_json(v));
    Matrix g2 = transitivity_witness(m, r, u, w, opt);
    std::cout << "witness (verified: g(U) = W, orthogonal, foliated onto):\n";
    std::cout << matrix_to_json(g2).dump(2) << "\n";
    return 0;
  }
  auto gens = orthogonal_hessians(r, m);
  bool ok = verify_foliated_symmetries(m, gens, 50, g.seed, opt);
  std::cout << gens.size() << " orthogonal-Hessian generators; generators and 50 "
            << "random words foliated (onto): " << (ok ? "true" : "false") << "\n";
  if (g.format == "json") {
    Json out = Json::array();
    for (const auto& gm : gens) out.push_back(matrix_to_json(gm));
    std::cout << out.dump(2) << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_trivial(const std::string& spec, const GlobalOpts& g) {
  auto m = parse_model_spec(spec);
  auto basis = trivial_factors(m, basic_opts(g));
  if (g.format == "json") {
    Json out = Json::array();
    for (const auto& p : basis) out.push_back(polynomial_to_json(p));
    std::cout << out.dump(2) << "\n";
  } else if (basis.empty()) {
    std::cout << "no trivial factor (dim R[V]^F_1 = 0)\n";
  } else {
    std::cout << "trivial factor: dim R[V]^F_1 = " << basis.size()
              << "; the foliation splits along the orthogonal complement of the "
                 "common kernel\n";
    for (const auto& p : basis) std::cout << "  " << p.to_string() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"computations with infinitesimal foliations and their Jordan algebras"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  GlobalOpts g;
  app.add_option("--seed", g.seed, "seed pinning all sampled randomness");
  app.add_option("--tol", g.tol, "float tolerance context");
  app.add_option("--dmax", g.dmax, "degree cap for graded scans");
  app.add_option("--sample-cap", g.sample_cap, "oracle sample cap per block");
  app.add_option("--format", g.format, "text | json");

  auto* classify = app.add_subcommand("classify", "close, decompose and classify");
  std::string input;
  classify->add_option("--input", input, "JSON list of symmetric matrices")->required();

  auto* clifford = app.add_subcommand("clifford", "Clifford systems C_{m,k}");
  std::size_t m = 1, k = 1;
  bool verify = false;
  std::string psi_arg, slice_arg;
  clifford->add_option("--m", m)->required();
  clifford->add_option("--k", k);
  clifford->add_flag("--verify", verify, "exit 0 iff the relations hold exactly");
  clifford->add_option("--psi", psi_arg, "evaluate psi at x (JSON vector)");
  clifford->add_option("--slice", slice_arg, "preimage of an image point (JSON vector)");

  auto* fft = app.add_subcommand("fft", "generation-in-degree-two check");
  std::string fft_model;
  bool expect_equal = false;
  fft->add_option("--model", fft_model)->required();
  fft->add_flag("--expect-equal", expect_equal, "exit 1 on any gap");

  auto* hom = app.add_subcommand("hom", "variety of foliated linear maps");
  std::string hom_src, hom_tgt, hom_mode = "into", hom_test;
  hom->add_option("--source", hom_src)->required();
  hom->add_option("--target", hom_tgt);
  hom->add_option("--mode", hom_mode, "into | onto");
  hom->add_option("--test", hom_test, "JSON matrix: report its verdicts");

  auto* moduli = app.add_subcommand("moduli", "moduli of invariant subspaces");
  std::string moduli_model;
  moduli->add_option("--model", moduli_model)->required();

  auto* symmetry = app.add_subcommand("symmetry", "orthogonal-Hessian symmetries");
  std::string sym_model, sym_u, sym_w;
  symmetry->add_option("--model", sym_model)->required();
  symmetry->add_option("--witness-u", sym_u, "U basis (JSON list of vectors)");
  symmetry->add_option("--witness-w", sym_w, "W basis (JSON list of vectors)");

  auto* trivial = app.add_subcommand("trivial", "degree-one basic space");
  std::string trivial_model;
  trivial->add_option("--model", trivial_model)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*classify) return cmd_classify(input, g);
    if (*clifford) return cmd_clifford(m, k, verify, psi_arg, slice_arg, g);
    if (*fft) return cmd_fft(fft_model, g, expect_equal);
    if (*hom) return cmd_hom(hom_src, hom_tgt, hom_mode, hom_test, g);
    if (*moduli) return cmd_moduli(moduli_model, g);
    if (*symmetry) return cmd_symmetry(sym_model, sym_u, sym_w, g);
    if (*trivial) return cmd_trivial(trivial_model, g);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
