#include "quea/config.hpp"

#include <fstream>
#include <json.hpp>

namespace quea {

namespace {

using nlohmann::json;

Rational rat_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::exception& e) {
      throw SchemaError(path, e.what());
    }
  }
  throw SchemaError(path, "expected integer or \"a/b\" string");
}

RatMat mat_from_json(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) throw SchemaError(path, "expected a non-empty row array");
  std::vector<VecQ> rows;
  for (size_t i = 0; i < j.size(); ++i) {
    const auto& r = j[i];
    if (!r.is_array()) throw SchemaError(path, "row " + std::to_string(i) + " is not an array");
    VecQ v;
    for (size_t k = 0; k < r.size(); ++k)
      v.push_back(rat_from_json(r[k], path + "[" + std::to_string(i) + "][" + std::to_string(k) + "]"));
    rows.push_back(v);
  }
  return RatMat::from_rows(rows);
}

long mat_denominator(const RatMat& m) { return m.denominator(); }

Lattice lattice_from_json(const json& j, const std::string& path, const CartanDatum& c,
                          const std::optional<TwistMatrix>& psi) {
  if (j.is_string()) {
    std::string name = j.get<std::string>();
    if (name == "Q") return Lattice::root_lattice(c.rank);
    if (name == "P") {
      if (!c.finite_type) throw SchemaError(path, "P requires a finite-type Cartan matrix");
      RatMat w = fundamental_weights(c);
      std::vector<VecQ> rows;
      for (int i = 0; i < c.rank; ++i) rows.push_back(w.row(i));
      return Lattice(rows);
    }
    if (name == "Q_psi") {
      if (!psi) throw SchemaError(path, "Q_psi requires a psi matrix in the config");
      return q_psi_lattice(c, *psi);
    }
    throw SchemaError(path, "unknown lattice name: " + name);
  }
  RatMat m = mat_from_json(j, path);
  std::vector<VecQ> rows;
  for (int i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return Lattice(rows);
}

}  // namespace

RatMat parse_matrix_json(const std::string& text) {
  json j = json::parse(text);
  return mat_from_json(j, "$");
}

RunConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw SchemaError("$", e.what());
  }
  if (!j.is_object()) throw SchemaError("$", "config must be a JSON object");
  RunConfig cfg;
  if (!j.contains("cartan")) throw SchemaError("$.cartan", "missing");
  if (j["cartan"].is_string()) {
    auto m = named_cartan(j["cartan"].get<std::string>());
    if (!m) throw SchemaError("$.cartan", "unknown named type");
    cfg.cartan = build_cartan(*m);
  } else {
    cfg.cartan = build_cartan(mat_from_json(j["cartan"], "$.cartan"));
  }
  long N = 1;
  if (j.contains("psi")) {
    RatMat m = mat_from_json(j["psi"], "$.psi");
    if (m.rows() != cfg.cartan.rank || m.cols() != cfg.cartan.rank)
      throw SchemaError("$.psi", "dimension mismatch with the Cartan matrix");
    cfg.psi = TwistMatrix::make(m);
    N = std::lcm(N, mat_denominator(m));
  }
  if (j.contains("R")) {
    RatMat m = mat_from_json(j["R"], "$.R");
    if (m.rows() != cfg.cartan.rank || m.cols() != cfg.cartan.rank)
      throw SchemaError("$.R", "dimension mismatch with the Cartan matrix");
    cfg.R = MultiparamExponent{m};
    if (!is_cartan_type(cfg.cartan, *cfg.R))
      throw InconsistentData("R is not of Cartan type over the given Cartan matrix");
    N = std::lcm(N, mat_denominator(m));
  }
  if (j.contains("S")) {
    RatMat m = mat_from_json(j["S"], "$.S");
    cfg.S = CocycleMatrix{m};
    N = std::lcm(N, mat_denominator(m));
  }
  if (j.contains("lattices")) {
    const auto& l = j["lattices"];
    if (!l.is_object()) throw SchemaError("$.lattices", "expected object with plus/minus");
    if (l.contains("plus"))
      cfg.lattice_plus = lattice_from_json(l["plus"], "$.lattices.plus", cfg.cartan, cfg.psi);
    if (l.contains("minus"))
      cfg.lattice_minus = lattice_from_json(l["minus"], "$.lattices.minus", cfg.cartan, cfg.psi);
  }
  if (j.contains("degree_bound")) {
    cfg.degree_bound = j["degree_bound"].get<int>();
    if (cfg.degree_bound < 0 || cfg.degree_bound > 8)
      throw SchemaError("$.degree_bound", "must be between 0 and 8");
  }
  if (j.contains("seed")) cfg.seed = j["seed"].get<unsigned long>();
  if (j.contains("output")) {
    std::string o = j["output"].get<std::string>();
    if (o == "text")
      cfg.output = OutputMode::text;
    else if (o == "json")
      cfg.output = OutputMode::json;
    else
      throw SchemaError("$.output", "expected \"text\" or \"json\"");
  }
  // root order: lcm of declared exponent denominators, lattice denominators,
  // and the index products needed by larger-torus pairings
  long lat_den = 1, idx = 1;
  Lattice q = Lattice::root_lattice(cfg.cartan.rank);
  for (auto* lp : {&cfg.lattice_plus, &cfg.lattice_minus}) {
    if (!lp->has_value()) continue;
    lat_den = std::lcm(lat_den, (*lp)->denominator());
    if ((*lp)->contains_lattice(q)) {
      Integer c = (*lp)->index_over(q);
      idx *= static_cast<long>(c.get_si());
    }
  }
  N = std::lcm(N, lat_den);
  N = std::lcm(N, lat_den * lat_den);
  N = std::lcm(N, idx);
  cfg.scalar_ctx.root_order = N;
  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("$", "cannot open config file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_config(text);
}

}  // namespace quea
