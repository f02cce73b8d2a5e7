// Command-line front end: builds algebras from JSON configs, reduces
// expressions, evaluates pairings and cocycles, prints twist tables and
// runs the theorem-verification suites.
//
// Exit codes: 0 = success, 1 = a verification check failed, 2 = bad input.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>

#include "quea/config.hpp"
#include "quea/expr.hpp"
#include "quea/qnum.hpp"
#include "quea/quantum.hpp"
#include "quea/twist.hpp"
#include "quea/verify.hpp"

using namespace quea;
using nlohmann::json;

namespace {

struct CommonOpts {
  std::string type;        // named Cartan type
  std::string cartan_json; // explicit matrix
  std::string psi_json, R_json, S_json;
  std::string lattice_plus = "Q", lattice_minus = "Q";
  std::string config_path;
  int degree_bound = 4;
  unsigned long seed = 1;
  bool json_out = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--type", o.type, "named Cartan type (A1,A2,A3,B2,C3,D4,G2)");
  cmd->add_option("--cartan", o.cartan_json, "explicit Cartan matrix as JSON rows");
  cmd->add_option("--psi", o.psi_json, "twist matrix Psi as JSON rows");
  cmd->add_option("--R", o.R_json, "multiparameter exponent matrix as JSON rows");
  cmd->add_option("--S", o.S_json, "cocycle exponent matrix as JSON rows");
  cmd->add_option("--lattice-plus", o.lattice_plus, "K-side lattice: Q, P, Q_psi or JSON rows");
  cmd->add_option("--lattice-minus", o.lattice_minus, "L-side lattice: Q, P, Q_psi or JSON rows");
  cmd->add_option("--config", o.config_path, "read a JSON config file instead of flags");
  cmd->add_option("--degree-bound", o.degree_bound, "degree bound for exhaustive checks");
  cmd->add_option("--seed", o.seed, "random seed");
  cmd->add_flag("--json", o.json_out, "emit a JSON report");
}

std::string quote_if_needed(const std::string& s) {
  // wrap bare lattice names so they parse as JSON strings
  if (!s.empty() && (s[0] == '[' || s[0] == '{' || s[0] == '"')) return s;
  return "\"" + s + "\"";
}

RunConfig make_config(const CommonOpts& o) {
  if (!o.config_path.empty()) return parse_config_file(o.config_path);
  json j;
  if (!o.type.empty())
    j["cartan"] = o.type;
  else if (!o.cartan_json.empty())
    j["cartan"] = json::parse(o.cartan_json);
  else
    throw SchemaError("$.cartan", "give --type, --cartan or --config");
  if (!o.psi_json.empty()) j["psi"] = json::parse(o.psi_json);
  if (!o.R_json.empty()) j["R"] = json::parse(o.R_json);
  if (!o.S_json.empty()) j["S"] = json::parse(o.S_json);
  j["lattices"]["plus"] = json::parse(quote_if_needed(o.lattice_plus));
  j["lattices"]["minus"] = json::parse(quote_if_needed(o.lattice_minus));
  j["degree_bound"] = o.degree_bound;
  j["seed"] = o.seed;
  j["output"] = o.json_out ? "json" : "text";
  return parse_config(j.dump());
}

std::string mat_str(const RatMat& m) {
  std::string s = "[";
  for (int i = 0; i < m.rows(); ++i) {
    if (i) s += ",";
    s += "[";
    for (int j = 0; j < m.cols(); ++j) {
      if (j) s += ",";
      s += m.at(i, j).get_str();
    }
    s += "]";
  }
  return s + "]";
}

json mat_json(const RatMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).get_str());
    rows.push_back(row);
  }
  return rows;
}

json report_json(const VerificationReport& rep) {
  json j;
  j["suite"] = rep.suite;
  json params = json::object();
  for (auto& [k, v] : rep.params) params[k] = v;
  j["params"] = params;
  json checks = json::array();
  for (auto& c : rep.checks) {
    json e;
    e["name"] = c.name;
    e["status"] = c.pass ? "pass" : "fail";
    if (!c.witness.empty()) e["witness"] = c.witness;
    checks.push_back(e);
  }
  j["checks"] = checks;
  j["timing_ms"] = rep.timing_ms;
  return j;
}

int emit_report(const VerificationReport& rep, bool json_out) {
  if (json_out) {
    std::cout << report_json(rep).dump(2) << "\n";
  } else {
    std::cout << "suite: " << rep.suite << "\n";
    for (auto& c : rep.checks) {
      std::cout << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
      if (!c.pass && !c.witness.empty()) std::cout << "  [" << c.witness << "]";
      std::cout << "\n";
    }
    std::cout << (rep.all_pass() ? "ALL CHECKS PASSED" : "CHECK FAILURES PRESENT") << "\n";
  }
  return rep.all_pass() ? 0 : 1;
}

HopfAlgebra build_from_config(const RunConfig& cfg, Flavor flavor) {
  Lattice q = Lattice::root_lattice(cfg.cartan.rank);
  Lattice gp = cfg.lattice_plus.value_or(q);
  Lattice gm = cfg.lattice_minus.value_or(q);
  MultiparamExponent R =
      cfg.R ? *cfg.R : (cfg.psi ? theta(cfg.cartan, *cfg.psi) : MultiparamExponent{cfg.cartan.DA});
  return build_mpquea(cfg.cartan, R, gp, gm, flavor);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polynomial multiparameter and twisted QUEA toolkit"};
  app.require_subcommand(1);

  CommonOpts mp_o, build_o, reduce_o, pair_o, coc_o, twist_o, verify_o;

  auto* mp = app.add_subcommand("mp", "multiparameter matrix operations");
  add_common(mp, mp_o);
  std::string mp_op;
  std::string mp_R2;
  mp->add_option("op", mp_op,
                 "theta | xi | sigma-from-psi | psi-from-sigma | canonical | is-cartan | dynkin | "
                 "equiv | witness | approx")
      ->required();
  mp->add_option("--R2", mp_R2, "second exponent matrix for equiv/witness/approx");

  auto* build = app.add_subcommand("build", "build an algebra and print a summary");
  add_common(build, build_o);
  std::string build_flavor = "full";
  build->add_option("--flavor", build_flavor, "full | borel-plus | borel-minus");

  auto* reduce = app.add_subcommand("reduce", "normal form of an expression");
  add_common(reduce, reduce_o);
  std::string reduce_expr;
  reduce->add_option("expr", reduce_expr, "expression to reduce")->required();

  auto* pair = app.add_subcommand("pair", "skew-Hopf pairing of two Borel expressions");
  add_common(pair, pair_o);
  std::string pair_x, pair_y, pair_conv = "mp";
  pair->add_option("x", pair_x, "element of the plus Borel")->required();
  pair->add_option("y", pair_y, "element of the minus Borel")->required();
  pair->add_option("--convention", pair_conv, "mp | canonical");

  auto* coc = app.add_subcommand("cocycle", "toral cocycle evaluation and deformed product");
  add_common(coc, coc_o);
  std::string coc_x, coc_y;
  coc->add_option("x", coc_x)->required();
  coc->add_option("y", coc_y)->required();

  auto* twist = app.add_subcommand("twist", "twisted coproduct/antipode tables");
  add_common(twist, twist_o);
  std::string twist_lattice = "Q_psi";
  bool twist_doubled = false;
  twist->add_option("--lattice", twist_lattice, "torus lattice: Q, P, Q_psi or JSON rows");
  twist->add_flag("--doubled", twist_doubled, "use the doubled-torus tables");

  auto* verify = app.add_subcommand("verify", "run a theorem-verification suite");
  add_common(verify, verify_o);
  std::string suite;
  verify->add_option("suite", suite,
                     "duality | iso-double | iso-borel-plus | iso-borel-minus | iso-g | "
                     "cocycle-equiv | approx-iso | approx-iso-chevalley")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*mp) {
      RunConfig cfg = make_config(mp_o);
      const CartanDatum& c = cfg.cartan;
      auto need_psi = [&]() -> const TwistMatrix& {
        if (!cfg.psi) throw SchemaError("$.psi", "this operation needs --psi");
        return *cfg.psi;
      };
      auto need_R = [&]() -> const MultiparamExponent& {
        if (!cfg.R) throw SchemaError("$.R", "this operation needs --R");
        return *cfg.R;
      };
      if (mp_op == "theta") {
        std::cout << mat_str(theta(c, need_psi()).R) << "\n";
      } else if (mp_op == "xi") {
        std::cout << mat_str(xi(c, need_R()).psi) << "\n";
      } else if (mp_op == "sigma-from-psi") {
        std::cout << mat_str(sigma_from_psi(c, need_psi()).S) << "\n";
      } else if (mp_op == "psi-from-sigma") {
        if (!cfg.S) throw SchemaError("$.S", "this operation needs --S");
        std::cout << mat_str(psi_from_sigma(c, *cfg.S).psi) << "\n";
      } else if (mp_op == "canonical") {
        std::cout << mat_str(canonical_of(c, need_R()).R) << "\n";
      } else if (mp_op == "is-cartan") {
        bool ok = is_cartan_type(c, need_R());
        std::cout << (ok ? "yes" : "no") << "\n";
        return ok ? 0 : 1;
      } else if (mp_op == "dynkin") {
        std::cout << dynkin_diagram(need_R()).text() << "\n";
      } else if (mp_op == "equiv" || mp_op == "witness" || mp_op == "approx") {
        if (mp_R2.empty()) throw SchemaError("$", "--R2 required");
        MultiparamExponent r2{parse_matrix_json(mp_R2)};
        if (mp_op == "equiv") {
          bool ok = twist_equivalent(need_R(), r2);
          std::cout << (ok ? "equivalent" : "not equivalent") << "\n";
          return ok ? 0 : 1;
        } else if (mp_op == "witness") {
          std::cout << mat_str(equivalence_witness(need_R(), r2).N) << "\n";
        } else {
          auto res = approx_equivalent(need_R(), r2);
          if (!res) {
            std::cout << "none\n";
            return 1;
          }
          std::cout << "gamma = (";
          for (size_t i = 0; i < res->gamma.size(); ++i)
            std::cout << (i ? " " : "") << res->gamma[i] + 1;
          std::cout << "), chevalley = " << (res->chevalley ? "true" : "false") << "\n";
        }
      } else {
        throw SchemaError("$", "unknown mp operation: " + mp_op);
      }
      return 0;
    }

    if (*build) {
      RunConfig cfg = make_config(build_o);
      Flavor fl = build_flavor == "borel-plus"    ? Flavor::borel_plus
                  : build_flavor == "borel-minus" ? Flavor::borel_minus
                                                  : Flavor::full;
      HopfAlgebra h = build_from_config(cfg, fl);
      const AlgebraSpec& s = *h.spec;
      Lattice q = Lattice::root_lattice(s.n());
      json out;
      out["rank"] = s.n();
      out["flavor"] = build_flavor;
      out["root_order_N"] = cfg.scalar_ctx.root_order;
      out["rewrite_rules"] = s.serre_rules.size();
      out["generators"] = json::array();
      if (s.has_E()) out["generators"].push_back("E1.." + std::to_string(s.n()));
      if (s.has_F()) out["generators"].push_back("F1.." + std::to_string(s.n()));
      out["generators"].push_back("K_gamma");
      if (s.doubled) out["generators"].push_back("L_gamma");
      out["lattice_index_plus"] = s.gamma_plus.contains_lattice(q)
                                      ? s.gamma_plus.index_over(q).get_str()
                                      : std::string("n/a");
      out["lattice_index_minus"] = s.gamma_minus.contains_lattice(q)
                                       ? s.gamma_minus.index_over(q).get_str()
                                       : std::string("n/a");
      out["R"] = mat_json(s.R);
      if (build_o.json_out) {
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "rank " << s.n() << " " << build_flavor << " algebra, "
                  << s.serre_rules.size() << " oriented Serre rules, N = "
                  << cfg.scalar_ctx.root_order << "\n"
                  << "R = " << mat_str(s.R) << "\n"
                  << "[Gamma_+ : Q] = " << out["lattice_index_plus"].get<std::string>()
                  << ", [Gamma_- : Q] = " << out["lattice_index_minus"].get<std::string>() << "\n";
      }
      return 0;
    }

    if (*reduce) {
      RunConfig cfg = make_config(reduce_o);
      HopfAlgebra h = build_from_config(cfg, Flavor::full);
      AlgebraElement x = parse_expression(*h.spec, reduce_expr);
      std::cout << render_element(x) << "\n";
      return 0;
    }

    if (*pair) {
      RunConfig cfg = make_config(pair_o);
      PairingConvention conv =
          pair_conv == "canonical" ? PairingConvention::canonical : PairingConvention::mp;
      Lattice q = Lattice::root_lattice(cfg.cartan.rank);
      Lattice gp = cfg.lattice_plus.value_or(q);
      Lattice gm = cfg.lattice_minus.value_or(q);
      MultiparamExponent R = cfg.R ? *cfg.R
                                   : (cfg.psi ? theta(cfg.cartan, *cfg.psi)
                                              : MultiparamExponent{cfg.cartan.DA});
      HopfAlgebra plus, minus;
      if (conv == PairingConvention::mp) {
        plus = build_mpquea(cfg.cartan, R, gp, gm, Flavor::borel_plus);
        minus = build_mpquea(cfg.cartan, R, gp, gm, Flavor::borel_minus);
      } else {
        int n = cfg.cartan.rank;
        std::vector<VecQ> prow, mrow;
        for (auto& b : gp.basis()) prow.push_back(vq_concat(b, vq_zero(n)));
        for (auto& b : gm.basis()) mrow.push_back(vq_concat(b, vq_zero(n)));
        plus = build_canonical(cfg.cartan, Lattice(prow), false, Flavor::borel_plus);
        minus = build_canonical(cfg.cartan, Lattice(mrow), false, Flavor::borel_minus);
      }
      AlgebraElement x = parse_expression(*plus.spec, pair_x);
      AlgebraElement y = parse_expression(*minus.spec, pair_y);
      PairingContext ctx(plus, minus, conv);
      std::cout << render_scalar(pairing_eval(ctx, x, y)) << "\n";
      return 0;
    }

    if (*coc) {
      RunConfig cfg = make_config(coc_o);
      if (!cfg.S) throw SchemaError("$.S", "cocycle evaluation needs --S");
      HopfAlgebra h = build_from_config(cfg, Flavor::full);
      ToralCocycle sig{*cfg.S, h.spec.get(), nullptr};
      AlgebraElement x = parse_expression(*h.spec, coc_x);
      AlgebraElement y = parse_expression(*h.spec, coc_y);
      std::cout << "sigma(x,y) = " << render_scalar(cocycle_eval(sig, x, y)) << "\n";
      std::cout << "x *_sigma y = " << render_element(deformed_product(h, sig, x, y)) << "\n";
      return 0;
    }

    if (*twist) {
      RunConfig cfg = make_config(twist_o);
      if (!cfg.psi) throw SchemaError("$.psi", "twist needs --psi");
      const CartanDatum& c = cfg.cartan;
      int n = c.rank;
      Lattice gamma = Lattice::root_lattice(n);
      {
        json j = json::parse(quote_if_needed(twist_lattice));
        if (j.is_string()) {
          std::string name = j.get<std::string>();
          if (name == "Q")
            gamma = Lattice::root_lattice(n);
          else if (name == "Q_psi")
            gamma = q_psi_lattice(c, *cfg.psi);
          else if (name == "P") {
            RatMat w = fundamental_weights(c);
            std::vector<VecQ> rows;
            for (int i = 0; i < n; ++i) rows.push_back(w.row(i));
            gamma = Lattice(rows);
          } else
            throw SchemaError("$.lattice", "unknown lattice name");
        } else {
          RatMat m = parse_matrix_json(twist_lattice);
          std::vector<VecQ> rows;
          for (int i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
          gamma = Lattice(rows);
        }
      }
      auto cond = hopf_subalgebra_condition(c, *cfg.psi, Lattice::root_lattice(n));
      std::cout << "psi_pm(Q) in Q: " << (cond.holds ? "yes" : ("no (" + cond.witness + ")"))
                << "\n";
      if (twist_doubled) {
        Lattice g2 = lattice_sum(q_psi_doubled_plus(c, *cfg.psi), q_psi_doubled_minus(c, *cfg.psi));
        TwistedHopfSpec t = build_twquea(c, *cfg.psi, g2, true);
        for (int i = 0; i < n; ++i) {
          std::cout << "Delta(E" << i + 1 << ") = ";
          // render the table tensor
          bool first = true;
          for (auto& [ws, cf] : t.twisted.delta_E[i].terms()) {
            if (!first) std::cout << " + ";
            std::cout << render_word(ws[0]) << " (x) " << render_word(ws[1]);
            first = false;
          }
          std::cout << "\n";
          std::cout << "S(E" << i + 1 << ") = " << render_element(t.twisted.s_E[i]) << "\n";
        }
      } else {
        TwistedHopfSpec t = build_twquea(c, *cfg.psi, gamma, false);
        for (int i = 0; i < n; ++i) {
          std::cout << "Delta(E" << i + 1 << ") = ";
          bool first = true;
          for (auto& [ws, cf] : t.twisted.delta_E[i].terms()) {
            if (!first) std::cout << " + ";
            std::cout << render_word(ws[0]) << " (x) " << render_word(ws[1]);
            first = false;
          }
          std::cout << "\n";
          std::cout << "Delta(F" << i + 1 << ") = ";
          first = true;
          for (auto& [ws, cf] : t.twisted.delta_F[i].terms()) {
            if (!first) std::cout << " + ";
            std::cout << render_word(ws[0]) << " (x) " << render_word(ws[1]);
            first = false;
          }
          std::cout << "\n";
          std::cout << "S(E" << i + 1 << ") = " << render_element(t.twisted.s_E[i]) << "\n";
          std::cout << "S(F" << i + 1 << ") = " << render_element(t.twisted.s_F[i]) << "\n";
        }
      }
      return 0;
    }

    if (*verify) {
      RunConfig cfg = make_config(verify_o);
      const CartanDatum& c = cfg.cartan;
      int n = c.rank;
      Lattice q = Lattice::root_lattice(n);
      Lattice gp = cfg.lattice_plus.value_or(q);
      Lattice gm = cfg.lattice_minus.value_or(q);
      std::mt19937_64 rng(cfg.seed);
      VerificationReport rep;
      if (suite == "duality") {
        TwistMatrix psi = cfg.psi ? *cfg.psi : random_antisymmetric_psi(rng, n);
        CocycleMatrix S = cfg.S ? *cfg.S : sigma_from_psi(c, psi);
        rep = verify_duality(c, psi, S, gp, gm);
      } else if (suite == "iso-double") {
        TwistMatrix psi = cfg.psi ? *cfg.psi : random_antisymmetric_psi(rng, n);
        rep = verify_iso_double(c, psi, gp, gm);
      } else if (suite == "iso-borel-plus" || suite == "iso-borel-minus") {
        TwistMatrix psi = cfg.psi ? *cfg.psi : random_antisymmetric_psi(rng, n);
        rep = verify_iso_borel(c, psi, gp,
                               suite == "iso-borel-plus" ? Flavor::borel_plus : Flavor::borel_minus);
      } else if (suite == "iso-g") {
        TwistMatrix psi = cfg.psi ? *cfg.psi : random_antisymmetric_psi(rng, n, true);
        rep = verify_iso_g(c, psi, gp);
      } else if (suite == "cocycle-equiv") {
        MultiparamExponent r2 = cfg.R ? *cfg.R
                                      : (cfg.psi ? theta(c, *cfg.psi) : random_cartan_R(rng, c));
        rep = verify_cocycle_equiv(c, MultiparamExponent{c.DA}, r2, gp, gm);
      } else if (suite == "approx-iso" || suite == "approx-iso-chevalley") {
        MultiparamExponent R = cfg.R ? *cfg.R : random_cartan_R(rng, c);
        std::vector<int> gamma(n);
        for (int i = 0; i < n; ++i) gamma[i] = i;
        rep = verify_approx_iso(c, R, gamma, suite == "approx-iso-chevalley");
      } else {
        throw SchemaError("$", "unknown suite: " + suite);
      }
      // echo the run parameters into the report
      rep.params.emplace_back("cartan", mat_str(c.A));
      if (cfg.psi) rep.params.emplace_back("psi", mat_str(cfg.psi->psi));
      if (cfg.R) rep.params.emplace_back("R", mat_str(cfg.R->R));
      if (cfg.S) rep.params.emplace_back("S", mat_str(cfg.S->S));
      rep.params.emplace_back("seed", std::to_string(cfg.seed));
      rep.params.emplace_back("degree_bound", std::to_string(cfg.degree_bound));
      rep.params.emplace_back("root_order_N", std::to_string(cfg.scalar_ctx.root_order));
      return emit_report(rep, verify_o.json_out);
    }
  } catch (const SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InconsistentData& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
