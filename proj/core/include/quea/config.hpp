#pragma once

#include <optional>
#include <string>

#include "quea/multiparam.hpp"
#include "quea/scalar.hpp"

namespace quea {

struct SchemaError : std::runtime_error {
  SchemaError(const std::string& path, const std::string& m)
      : std::runtime_error("config error at " + path + ": " + m) {}
};
struct InconsistentData : std::runtime_error {
  InconsistentData(const std::string& m) : std::runtime_error(m) {}
};

enum class OutputMode { text, json };

struct RunConfig {
  CartanDatum cartan;
  std::optional<TwistMatrix> psi;
  std::optional<MultiparamExponent> R;
  std::optional<CocycleMatrix> S;
  std::optional<Lattice> lattice_plus, lattice_minus;
  int degree_bound = 4;
  unsigned long seed = 1;
  OutputMode output = OutputMode::text;
  ScalarContext scalar_ctx;  // root order N, derived
};

// Parses a JSON document (text, not a path).  Rational entries are JSON
// strings "a/b" or integers.  Lattices accept "Q", "P", "Q_psi" or an
// explicit row matrix.
RunConfig parse_config(const std::string& json_text);
RunConfig parse_config_file(const std::string& path);

// Rational matrix from parsed JSON rows (helper shared with the CLI).
RatMat parse_matrix_json(const std::string& json_text);

}  // namespace quea
