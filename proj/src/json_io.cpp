#include "folia/json_io.hpp"

#include "folia/error.hpp"

namespace folia {

namespace {

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  if (j.is_number_integer()) return Rat((long)j.get<long long>());
  if (j.is_number_float()) return rat_from_double(j.get<double>());
  throw InputError("expected a rational: string \"p/q\" or number");
}

}  // namespace

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array())
    throw InputError("matrix: expected an array of arrays");
  Matrix m(j.size(), j[0].size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (j[i].size() != m.cols()) throw InputError("matrix: ragged rows");
    for (std::size_t c = 0; c < m.cols(); ++c) m.set(i, c, rat_from_json(j[i][c]));
  }
  return m;
}

Json vector_to_json(const VecR& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rat_to_string(x));
  return a;
}

VecR vector_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("vector: expected an array");
  VecR v;
  v.reserve(j.size());
  for (const auto& x : j) v.push_back(rat_from_json(x));
  return v;
}

Json polynomial_to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json t;
    t["exp"] = e;
    t["coef"] = rat_to_string(c);
    terms.push_back(std::move(t));
  }
  Json j;
  j["vars"] = p.vars();
  j["terms"] = std::move(terms);
  return j;
}

Polynomial polynomial_from_json(const Json& j) {
  if (!j.contains("vars") || !j.contains("terms"))
    throw InputError("polynomial: need \"vars\" and \"terms\"");
  Polynomial p(j["vars"].get<std::size_t>());
  for (const auto& t : j["terms"]) {
    Expo e = t["exp"].get<Expo>();
    p.add_term(e, rat_from_json(t["coef"]));
  }
  return p;
}

Json clifford_to_json(const CliffordSystem& c) {
  Json j;
  j["m"] = c.m;
  j["l"] = c.l;
  Json ps = Json::array();
  for (const auto& p : c.P) ps.push_back(matrix_to_json(p));
  j["P"] = std::move(ps);
  return j;
}

CliffordSystem clifford_from_json(const Json& j) {
  CliffordSystem c;
  c.m = j.at("m").get<std::size_t>();
  c.l = j.at("l").get<std::size_t>();
  for (const auto& p : j.at("P")) c.P.push_back(matrix_from_json(p));
  if (c.P.size() != c.m + 1) throw InputError("clifford: expected m+1 matrices");
  return c;
}

Json model_to_json(const FoliationModel& m) {
  Json j;
  j["dim"] = m.dim;
  Json gens = Json::array();
  for (const auto& g : m.generators) gens.push_back(polynomial_to_json(g));
  j["generators"] = std::move(gens);
  j["provenance"] = m.provenance;
  if (m.disconnected_warning) j["disconnected_leaves"] = true;
  return j;
}

Json factors_to_json(const std::vector<SimpleFactor>& factors) {
  Json out = Json::array();
  for (const auto& f : factors) {
    Json j;
    j["type"] = factor_type_name(f.type);
    j["n_or_m"] = f.param;
    j["multiplicity"] = f.multiplicity;
    j["subspace_dim"] = f.subspace_dim;
    j["jordan_rank"] = f.jordan_rank;
    j["projector"] = matrix_to_json(f.projector);
    if (!f.note.empty()) j["note"] = f.note;
    out.push_back(std::move(j));
  }
  return out;
}

Json fft_to_json(const std::vector<FftRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    Json j;
    j["degree"] = r.degree;
    j["generated"] = r.generated;
    j["basic"] = r.basic;
    j["equal"] = r.equal;
    out.push_back(std::move(j));
  }
  return out;
}

Json moduli_to_json(const std::vector<ModuliFactorReport>& reports) {
  Json out = Json::array();
  for (const auto& r : reports) {
    Json j;
    j["factor"] = r.factor_type;
    j["dims"] = r.dims;
    j["components"] = r.components;
    out.push_back(std::move(j));
  }
  return out;
}

Json equations_to_json(const HomVariety& hv) {
  Json names = Json::array();
  for (std::size_t i = 0; i < hv.target_dim; ++i)
    for (std::size_t j = 0; j < hv.source_dim; ++j)
      names.push_back("phi_" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
  Json eqs = Json::array();
  for (const auto& e : hv.equations) eqs.push_back(polynomial_to_json(e));
  Json j;
  j["mode"] = hv.mode == HomMode::Into ? "into" : "onto";
  j["source_dim"] = hv.source_dim;
  j["target_dim"] = hv.target_dim;
  j["variables"] = std::move(names);
  j["equations"] = std::move(eqs);
  return j;
}

}  // namespace folia
