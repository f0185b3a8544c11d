#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "gtutte/engine.hpp"
#include "gtutte/errors.hpp"
#include "gtutte/io.hpp"
#include "gtutte/matroid.hpp"
#include "gtutte/root_system.hpp"
#include "gtutte/topology.hpp"

using nlohmann::json;
using namespace gtutte;

namespace {

struct CommonOpts {
  std::string file;
  std::string group_spec;
  std::size_t max_naive = 24;
  unsigned long max_enumeration = 100'000'000UL;
  bool as_json = false;

  EngineOptions engine() const { return EngineOptions{max_naive, true}; }
  TopologyOptions topology() const {
    return TopologyOptions{engine(), max_enumeration};
  }
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_group) {
  cmd->add_option("file", o.file, "arrangement JSON file ('-' for stdin)")
      ->required();
  auto* g = cmd->add_option("--group", o.group_spec,
                            "coefficient group, e.g. \"Z/4\", \"S1 x R\"");
  if (needs_group) g->required(false);
  cmd->add_option("--max-naive", o.max_naive,
                  "cap on list length for 2^n sublist sweeps");
  cmd->add_option("--max-enumeration", o.max_enumeration,
                  "candidate-tuple budget for brute-force counting");
  cmd->add_flag("--json", o.as_json, "emit a JSON document instead of text");
}

json read_json_file(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    buf << in.rdbuf();
  }
  try {
    return json::parse(buf.str());
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Arrangement load_arrangement(const CommonOpts& o) {
  return arrangement_from_json(read_json_file(o.file));
}

TargetGroup resolve_group(const CommonOpts& o, const Arrangement& a) {
  if (!o.group_spec.empty()) return parse_group_spec(o.group_spec);
  if (a.group) return *a.group;
  throw ParseError("no coefficient group: pass --group or embed one in the file");
}

void emit_poly(const CommonOpts& o, const UniPoly& p, const std::string& var) {
  if (o.as_json) {
    json out;
    out["variables"] = json::array({var});
    out["terms"] = poly_to_json(p);
    out["text"] = p.str(var);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << p.str(var) << "\n";
  }
}

int run_tutte(const CommonOpts& o, const std::string& method) {
  Arrangement a = load_arrangement(o);
  TargetGroup g = resolve_group(o, a);
  BiPoly t = (method == "naive") ? g_tutte_naive(a.list, g, o.engine())
                                 : g_tutte_dc(a.list, g, o.engine());
  if (o.as_json) {
    json out;
    out["variables"] = json::array({"x", "y"});
    out["terms"] = poly_to_json(t);
    out["text"] = t.str();
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << t.str() << "\n";
  }
  return 0;
}

int run_chi(const CommonOpts& o) {
  Arrangement a = load_arrangement(o);
  emit_poly(o, g_characteristic(a.list, resolve_group(o, a), o.engine()), "t");
  return 0;
}

int run_zeta(const CommonOpts& o) {
  Arrangement a = load_arrangement(o);
  LaurentMulti z = multivariate_z(a.list, resolve_group(o, a), o.engine());
  if (o.as_json) {
    json vars = json::array({"q"});
    for (std::size_t i = 0; i < z.nvars(); ++i)
      vars.push_back("v" + std::to_string(i + 1));
    json out;
    out["variables"] = std::move(vars);
    out["terms"] = poly_to_json(z);
    out["text"] = z.str();
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << z.str() << "\n";
  }
  return 0;
}

int run_count(const CommonOpts& o, bool oracle) {
  Arrangement a = load_arrangement(o);
  TargetGroup g = resolve_group(o, a);
  Int n = oracle ? point_count_bruteforce(a.list, g, o.topology())
                 : point_count_formula(a.list, g, o.engine());
  if (o.as_json) {
    json out;
    out["count"] = int_to_json(n);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << n.get_str() << "\n";
  }
  return 0;
}

int run_euler(const CommonOpts& o) {
  Arrangement a = load_arrangement(o);
  auto [e_semi, e_top] =
      euler_characteristic(a.list, resolve_group(o, a), o.engine());
  if (o.as_json) {
    json out;
    out["e_semi"] = int_to_json(e_semi);
    out["e_top"] = int_to_json(e_top);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "e_semi = " << e_semi.get_str() << "\n"
              << "e_top = " << e_top.get_str() << "\n";
  }
  return 0;
}

int run_poincare(const CommonOpts& o) {
  Arrangement a = load_arrangement(o);
  emit_poly(o, poincare_polynomial(a.list, resolve_group(o, a), o.engine()),
            "t");
  return 0;
}

int run_quasipoly(const CommonOpts& o) {
  Arrangement a = load_arrangement(o);
  QuasiPolynomial qp = quasi_polynomial(a.list, o.topology());
  if (o.as_json) {
    json cs = json::array();
    for (const auto& [k, f] : qp.constituents) {
      json c;
      c["divisor"] = int_to_json(k);
      c["terms"] = poly_to_json(f);
      c["text"] = f.str("q");
      cs.push_back(std::move(c));
    }
    json out;
    out["period"] = int_to_json(qp.period);
    out["constituents"] = std::move(cs);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "period = " << qp.period.get_str() << "\n";
    for (const auto& [k, f] : qp.constituents)
      std::cout << "f_" << k.get_str() << " = " << f.str("q") << "\n";
  }
  return 0;
}

int run_dual(const CommonOpts& o) {
  Arrangement a = load_arrangement(o);
  auto [dual_group, dual_list] = dual_construction(a.list);
  Arrangement d{std::move(dual_list), a.group};
  std::cout << arrangement_to_json(d).dump(2) << "\n";
  return 0;
}

int run_verify(const CommonOpts& o, const std::vector<std::string>& axioms,
               const std::vector<std::string>& convolution, bool duality) {
  Arrangement a = load_arrangement(o);
  TargetGroup g = resolve_group(o, a);
  std::vector<Axiom> to_check;
  if (axioms.empty() && convolution.empty() && !duality) {
    to_check = {Axiom::A1, Axiom::A2, Axiom::A3, Axiom::A4, Axiom::A5,
                Axiom::P};
  } else {
    for (const std::string& s : axioms) {
      if (s == "1") to_check.push_back(Axiom::A1);
      else if (s == "2") to_check.push_back(Axiom::A2);
      else if (s == "3") to_check.push_back(Axiom::A3);
      else if (s == "4") to_check.push_back(Axiom::A4);
      else if (s == "5") to_check.push_back(Axiom::A5);
      else if (s == "P" || s == "p") to_check.push_back(Axiom::P);
      else throw ParseError("unknown axiom \"" + s + "\" (use 1,2,3,4,5,P)");
    }
  }
  json checks = json::array();
  bool all_pass = true;
  auto note = [&](const std::string& name, bool pass,
                  const std::string& witness) {
    all_pass = all_pass && pass;
    if (o.as_json) {
      json c;
      c["check"] = name;
      c["pass"] = pass;
      if (!witness.empty()) c["witness"] = witness;
      checks.push_back(std::move(c));
    } else {
      std::cout << name << ": " << (pass ? "pass" : "fail");
      if (!witness.empty()) std::cout << "  " << witness;
      std::cout << "\n";
    }
  };
  for (Axiom ax : to_check) {
    AxiomReport r = check_axiom(ax, a.list, g, o.engine());
    note("axiom " + axiom_name(ax), r.holds,
         r.witness ? r.witness->str() : "");
  }
  if (!convolution.empty()) {
    if (convolution.size() != 2)
      throw ParseError("--convolution needs exactly two group specs");
    TargetGroup g1 = parse_group_spec(convolution[0]);
    TargetGroup g2 = parse_group_spec(convolution[1]);
    note("convolution", convolution_check(a.list, g1, g2, o.engine()), "");
  }
  if (duality) note("duality", duality_check(a.list, g, o.engine()), "");
  if (o.as_json) {
    json out;
    out["checks"] = std::move(checks);
    out["all_pass"] = all_pass;
    std::cout << out.dump(2) << "\n";
  }
  return 0;
}

int run_root_system(const std::string& type_name, std::size_t rank,
                    bool rank_given) {
  RootSystemType type = root_system_type_from_string(type_name);
  std::size_t use_rank = rank;
  if (!rank_given) {
    switch (type) {
      case RootSystemType::E6: use_rank = 6; break;
      case RootSystemType::E7: use_rank = 7; break;
      case RootSystemType::E8: use_rank = 8; break;
      case RootSystemType::F4: use_rank = 4; break;
      case RootSystemType::G2: use_rank = 2; break;
      default:
        throw ParseError("--rank is required for types A, B, C, D");
    }
  }
  RootSystemData data = positive_roots(type, use_rank);
  Arrangement a{std::move(data.positive_roots), std::nullopt};
  std::cout << arrangement_to_json(a).dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Tutte/characteristic/Z polynomials of group arrangements"};
  app.require_subcommand(1);

  CommonOpts opt;
  std::string method = "dc";
  bool oracle = false;
  std::vector<std::string> axioms;
  std::vector<std::string> convolution;
  bool duality = false;
  std::string rs_type;
  std::size_t rs_rank = 0;

  auto* tutte = app.add_subcommand("tutte", "bivariate Tutte-type polynomial");
  add_common(tutte, opt, true);
  tutte->add_option("--method", method, "naive | dc")
      ->check(CLI::IsMember({"naive", "dc"}));

  auto* chi = app.add_subcommand("chi", "characteristic polynomial");
  add_common(chi, opt, true);

  auto* zeta = app.add_subcommand("zeta", "multivariate Z polynomial");
  add_common(zeta, opt, true);

  auto* count = app.add_subcommand("count", "complement points (finite group)");
  add_common(count, opt, true);
  count->add_flag("--oracle", oracle, "force brute-force enumeration");

  auto* euler = app.add_subcommand("euler", "Euler characteristics");
  add_common(euler, opt, true);

  auto* poincare = app.add_subcommand("poincare", "Poincare polynomial");
  add_common(poincare, opt, true);

  auto* quasipoly =
      app.add_subcommand("quasipoly", "characteristic quasi-polynomial");
  add_common(quasipoly, opt, false);

  auto* dual = app.add_subcommand("dual", "dual arrangement");
  add_common(dual, opt, false);

  auto* verify = app.add_subcommand("verify", "axiom / identity checks");
  add_common(verify, opt, true);
  verify->add_option("--axioms", axioms, "subset of 1,2,3,4,5,P")
      ->delimiter(',');
  verify->add_option("--convolution", convolution,
                     "two group specs G1 G2")
      ->expected(2);
  verify->add_flag("--duality", duality, "check the dual arrangement");

  auto* root = app.add_subcommand("root-system", "positive-root arrangement");
  auto* type_opt =
      root->add_option("--type", rs_type, "A, B, C, D, E6, E7, E8, F4, G2");
  type_opt->required();
  auto* rank_opt = root->add_option("--rank", rs_rank, "rank for A/B/C/D");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (tutte->parsed()) return run_tutte(opt, method);
    if (chi->parsed()) return run_chi(opt);
    if (zeta->parsed()) return run_zeta(opt);
    if (count->parsed()) return run_count(opt, oracle);
    if (euler->parsed()) return run_euler(opt);
    if (poincare->parsed()) return run_poincare(opt);
    if (quasipoly->parsed()) return run_quasipoly(opt);
    if (dual->parsed()) return run_dual(opt);
    if (verify->parsed()) return run_verify(opt, axioms, convolution, duality);
    if (root->parsed())
      return run_root_system(rs_type, rs_rank, rank_opt->count() > 0);
  } catch (const DomainError& e) {
    json err;
    err["error"] = e.code;
    err["message"] = e.what();
    std::cerr << err.dump() << "\n";
    return 1;
  }
  return 2;
}
