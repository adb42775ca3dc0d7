// Command line front end: ingest presentations, braids, complexes, HNN data
// and cut graphs; run the pipelines; emit deterministic JSON (the machine
// contract) or a loose human-readable rendering.
//
// Exit codes: 0 = computed verdict (including obstructed), 1 = input error
// or oracle mismatch, 2 = inconclusive/degenerate outcome.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "novikit/io.hpp"
#include "novikit/oracle.hpp"
#include "novikit/torsion.hpp"

using namespace novikit;
using io::Json;

namespace {

struct CommonOpts {
  std::string input_path;
  std::string braid;
  std::string phi;
  std::string format = "json";
  int horizon = 0;  // 0 = unset; fall back to env then 32
  std::string direction = "both";
  bool oracle = false;
};

int effective_horizon(const CommonOpts& o) {
  if (o.horizon > 0) return o.horizon;
  if (const char* env = std::getenv("NOVIKOV_HORIZON")) {
    int h = std::atoi(env);
    if (h > 0) return h;
  }
  return 32;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(errc::invalid, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json load_json(const std::string& path) {
  auto text = slurp(path);
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error(errc::parse, "invalid JSON in '" + path + "'");
  return j;
}

groups::Presentation load_presentation(const CommonOpts& o) {
  if (!o.braid.empty()) return groups::braid_to_knot_group(io::parse_braid(o.braid));
  if (o.input_path.empty())
    throw Error(errc::invalid, "no input: pass a presentation file or --braid");
  std::string text = slurp(o.input_path);
  // sniff: JSON object or the gens:/rel: text format
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
    return io::presentation_from_json(Json::parse(text));
  return io::presentation_from_text(text);
}

std::optional<groups::CohomologyClass> load_phi(const CommonOpts& o,
                                                const groups::Presentation& p) {
  if (o.phi.empty()) return std::nullopt;
  return groups::cohomology_class(p, io::parse_covector(o.phi, p.gens));
}

void emit(const CommonOpts& o, const Json& j, const std::string& human) {
  if (o.format == "text")
    std::cout << human;
  else
    std::cout << j.dump(2) << "\n";
}

Json verdict_json(const torsion::FiberVerdict& v) {
  io::VarNames t = io::VarNames::defaults(1);
  Json out;
  out["tau"] = io::to_string(v.tau, t);
  out["degree"] = v.tau_degree ? Json(io::rat_to_string(*v.tau_degree)) : Json("-inf");
  out["monic"] = v.monic;
  out["novikov"] = Json{{"plus", v.novikov_plus}, {"minus", v.novikov_minus}};
  out["bound"] =
      v.thurston_lower_bound ? Json(io::rat_to_string(*v.thurston_lower_bound)) : Json(nullptr);
  out["verdict"] = v.passed ? "passed" : "obstructed";
  if (!v.passed) out["obstruction"] = v.obstruction;
  if (v.phi_scale != 1) out["phi_scale"] = io::rat_to_string(v.phi_scale);
  out["caveats"] = v.caveats;
  return out;
}

// rerun the two directional verdicts through the slow level solver
Json oracle_diff(const novikov::BasedComplex& cx, bool plus, bool minus, int horizon,
                 bool& agrees) {
  laurent::Laurent det = laurent::determinant(novikov::core_matrix(cx));
  auto run = [&](int dir) -> std::string {
    if (det.is_zero()) return "not_invertible";
    switch (oracle::poly_invertible(det, dir, horizon)) {
      case oracle::Verdict::invertible_to_horizon: return "invertible";
      case oracle::Verdict::not_invertible: return "not_invertible";
      case oracle::Verdict::degenerate: return "degenerate";
    }
    return "degenerate";
  };
  std::string p = run(+1), m = run(-1);
  agrees = (p == (plus ? "invertible" : "not_invertible")) &&
           (m == (minus ? "invertible" : "not_invertible"));
  Json out;
  out["plus"] = p;
  out["minus"] = m;
  out["agrees"] = agrees;
  return out;
}

int cmd_knot_pipeline(const std::string& command, const CommonOpts& o) {
  groups::Presentation p = load_presentation(o);
  torsion::FiberVerdict v = torsion::fiber_check(p, load_phi(o, p));
  io::VarNames t = io::VarNames::defaults(1);

  Json out;
  out["command"] = command;
  if (command == "alexander") {
    laurent::Laurent alex(1);
    if (!v.tau.is_zero()) alex = v.tau.value->num;
    out["alexander"] = io::to_string(alex, t);
    out["degree"] = v.tau.is_zero() ? Json("-inf")
                                    : Json(io::rat_to_string(*laurent::deg_phi(
                                          alex, laurent::Phi::ones(1))));
    out["monic"] = !v.tau.is_zero() && laurent::is_monic(alex);
  } else if (command == "torsion") {
    out["tau"] = io::to_string(v.tau, t);
    out["degree"] = v.tau_degree ? Json(io::rat_to_string(*v.tau_degree)) : Json("-inf");
    out["monic"] = v.monic;
  } else if (command == "delta0") {
    out["delta0"] = io::rat_to_string(torsion::delta_zero(p));
  } else {
    out = verdict_json(v);
    out["command"] = command;
  }

  bool agrees = true;
  if (o.oracle) {
    groups::GammaMap gamma = groups::gamma_from_phi(
        p, load_phi(o, p) ? groups::clear_to_primitive(*load_phi(o, p)).first
                          : groups::induced_phi(p).at(0));
    torsion::PresentationComplex px =
        torsion::build_complex(p, gamma, laurent::Phi::ones(1));
    out["oracle"] =
        oracle_diff(px.complex, v.novikov_plus, v.novikov_minus, effective_horizon(o), agrees);
  }

  std::ostringstream human;
  human << command << ": " << out.dump(2) << "\n";
  emit(o, out, human.str());
  return agrees ? 0 : 1;
}

int cmd_novikov(const CommonOpts& o, const std::string& poly) {
  const int horizon = effective_horizon(o);
  Json out;
  out["command"] = "novikov";
  int exit_code = 0;
  bool agrees = true;

  auto dir_list = [&]() -> std::vector<int> {
    if (o.direction == "+") return {+1};
    if (o.direction == "-") return {-1};
    return {+1, -1};
  };

  if (!poly.empty()) {
    io::VarNames vars;
    if (!o.phi.empty() && o.phi.find('=') != std::string::npos) {
      std::istringstream in(o.phi);
      std::string item;
      while (std::getline(in, item, ',')) {
        auto eq = item.find('=');
        if (eq != std::string::npos) {
          std::string name = item.substr(0, eq);
          name.erase(std::remove_if(name.begin(), name.end(),
                                    [](unsigned char c) { return std::isspace(c); }),
                     name.end());
          vars.names.push_back(name);
        }
      }
    }
    if (vars.names.empty()) vars = io::VarNames::defaults(1);
    laurent::Laurent p = io::parse_laurent(poly, vars);
    laurent::Phi phi = o.phi.empty()
                           ? laurent::Phi::ones(p.vars)
                           : laurent::Phi{io::parse_covector(o.phi, vars.names)};
    out["poly"] = io::to_string(p, vars);
    Json dirs;
    for (int d : dir_list()) {
      Json side;
      bool inv = novikov::laurent_invertible(p, phi, d);
      side["invertible"] = inv;
      if (inv) {
        auto s = novikov::invert_scalar(p, phi, d, horizon);
        side["inverse"] = io::to_string(*s, vars);
      }
      if (o.oracle && p.vars == 1) {
        auto verdict = oracle::poly_invertible(p, d, horizon);
        bool okay = (verdict == oracle::Verdict::invertible_to_horizon) == inv;
        side["oracle_agrees"] = okay;
        agrees = agrees && okay;
      }
      dirs[d > 0 ? "plus" : "minus"] = std::move(side);
    }
    out["directions"] = std::move(dirs);
  } else if (!o.input_path.empty()) {
    Json j = load_json(o.input_path);
    io::VarNames vars;
    if (j.contains("d1")) {
      novikov::BasedComplex cx = io::complex_from_json(j, &vars);
      laurent::Phi phi = o.phi.empty()
                             ? laurent::Phi::ones(cx.vars)
                             : laurent::Phi{io::parse_covector(o.phi, vars.names)};
      Json dirs;
      for (int d : dir_list()) {
        dirs[d > 0 ? "plus" : "minus"] = novikov::acyclicity_test(cx, phi, d);
      }
      out["acyclic"] = std::move(dirs);
    } else if (j.contains("matrix")) {
      vars.names = j.contains("vars") ? j["vars"].get<std::vector<std::string>>()
                                      : io::VarNames::defaults(1).names;
      const int nv = static_cast<int>(vars.names.size());
      novikov::Matrix m;
      for (const auto& row : j["matrix"]) {
        std::vector<laurent::Laurent> r;
        for (const auto& e : row) r.push_back(io::laurent_from_json(e, nv));
        m.push_back(std::move(r));
      }
      laurent::Phi phi = o.phi.empty()
                             ? laurent::Phi::ones(nv)
                             : laurent::Phi{io::parse_covector(o.phi, vars.names)};
      Json dirs;
      for (int d : dir_list()) {
        Json side;
        novikov::InvertResult r = novikov::invert_matrix(m, phi, horizon, d);
        switch (r.status) {
          case novikov::InvertStatus::invertible: {
            side["status"] = "invertible";
            Json inv = Json::array();
            for (const auto& row : r.inverse) {
              Json jr = Json::array();
              for (const auto& s : row) jr.push_back(io::to_string(s, vars));
              inv.push_back(std::move(jr));
            }
            side["inverse"] = std::move(inv);
            break;
          }
          case novikov::InvertStatus::not_invertible:
            side["status"] = "not_invertible";
            side["reason"] = r.reason;
            break;
          case novikov::InvertStatus::degenerate:
            side["status"] = "degenerate";
            side["reason"] = r.reason;
            exit_code = 2;
            break;
        }
        if (o.oracle && nv == 1) {
          auto verdict = oracle::matrix_invertible(m, d, horizon);
          bool both_degenerate = r.status == novikov::InvertStatus::degenerate &&
                                 verdict == oracle::Verdict::degenerate;
          bool okay = both_degenerate ||
                      ((verdict == oracle::Verdict::invertible_to_horizon) ==
                       (r.status == novikov::InvertStatus::invertible));
          side["oracle_agrees"] = okay;
          agrees = agrees && okay;
        }
        dirs[d > 0 ? "plus" : "minus"] = std::move(side);
      }
      out["directions"] = std::move(dirs);
    } else {
      throw Error(errc::invalid, "expected a complex (d1/d2) or a matrix in the input");
    }
  } else {
    throw Error(errc::invalid, "no input: pass --poly or a JSON file");
  }

  std::ostringstream human;
  human << "novikov: " << out.dump(2) << "\n";
  emit(o, out, human.str());
  if (!agrees) return 1;
  return exit_code;
}

int cmd_cone(const CommonOpts& o) {
  Json out;
  out["command"] = "cone";
  torsion::Cone cone;
  io::VarNames vars = io::VarNames::defaults(1);
  if (!o.input_path.empty() && o.braid.empty()) {
    Json j = load_json(o.input_path);
    novikov::BasedComplex cx = io::complex_from_json(j, &vars);
    laurent::Phi phi = o.phi.empty() ? laurent::Phi::ones(cx.vars)
                                     : laurent::Phi{io::parse_covector(o.phi, vars.names)};
    cone = torsion::fibered_cone_probe(cx, phi);
  } else {
    groups::Presentation p = load_presentation(o);
    auto phi_sel = load_phi(o, p);
    groups::CohomologyClass phi =
        phi_sel ? groups::clear_to_primitive(*phi_sel).first : groups::induced_phi(p).at(0);
    groups::GammaMap gamma = groups::gamma_from_phi(p, phi);
    torsion::PresentationComplex px =
        torsion::build_complex(p, gamma, laurent::Phi::ones(1));
    cone = torsion::fibered_cone_probe(px.complex, laurent::Phi::ones(1));
  }
  auto render = [&](const std::vector<laurent::Exp>& exps, const char* rel) {
    Json arr = Json::array();
    for (const auto& e : exps) {
      std::string lhs;
      for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!lhs.empty()) lhs += " + ";
        std::string coef = e[i] == 1 ? "" : std::to_string(e[i]) + "*";
        lhs += coef + "psi(" + vars.names[i] + ")";
      }
      if (lhs.empty()) lhs = "0";
      arr.push_back(lhs + " " + rel + " 0");
    }
    return arr;
  };
  out["positive"] = render(cone.positive, ">");
  out["nonzero"] = render(cone.nonzero, "!=");
  std::ostringstream human;
  human << "cone: " << out.dump(2) << "\n";
  emit(o, out, human.str());
  return 0;
}

int cmd_hnn(const CommonOpts& o, int depth) {
  if (o.input_path.empty()) throw Error(errc::invalid, "hnn-witness needs a JSON input file");
  hnn::HnnData h = io::hnn_from_json(load_json(o.input_path));
  Json out;
  out["command"] = "hnn-witness";
  switch (hnn::is_ascending_free_base(h)) {
    case hnn::Ascending::ascending: out["ascending"] = "ascending"; break;
    case hnn::Ascending::not_ascending: out["ascending"] = "not_ascending"; break;
    case hnn::Ascending::unknown: out["ascending"] = "unknown"; break;
  }
  int exit_code = 0;
  if (h.base.relators.empty()) {
    hnn::TruncatedCosetAction act = hnn::build_truncated_action(h, depth);
    out["cosets"] = act.x_size;
    out["truncated"] = act.truncated;
    auto w = hnn::witness_series(act);
    if (w) {
      Json fs = Json::array();
      for (const auto& f : w->f) {
        Json row = Json::array();
        for (const auto& x : f) row.push_back(x.get_str());
        fs.push_back(std::move(row));
      }
      out["witness"] = std::move(fs);
    } else {
      out["witness"] = nullptr;
    }
    if (act.truncated) exit_code = 2;  // enumeration did not close
  } else {
    out["witness"] = nullptr;
    out["note"] = "base has relators; coset enumeration is out of reach";
    exit_code = 2;
  }
  std::ostringstream human;
  human << "hnn-witness: " << out.dump(2) << "\n";
  emit(o, out, human.str());
  return exit_code;
}

int cmd_weight_reduce(const CommonOpts& o, const std::string& weights, bool relax,
                      bool phi_primitive, bool tau_nonzero, bool obstruction) {
  if (o.input_path.empty()) throw Error(errc::invalid, "weight-reduce needs a JSON input file");
  surfaces::CutGraph g = io::cutgraph_from_json(load_json(o.input_path));
  surfaces::Weight w0 = surfaces::Weight::ones(g.edges.size());
  if (!weights.empty()) {
    w0.w.clear();
    for (int x : io::parse_braid(weights)) w0.w.push_back(x);
  }
  Json out;
  out["command"] = "weight-reduce";
  if (obstruction) {
    surfaces::ObstructionReport rep =
        surfaces::connectedness_obstruction(g, w0, phi_primitive, tau_nonzero);
    switch (rep.verdict) {
      case surfaces::Obstruction::contradiction: out["verdict"] = "contradiction"; break;
      case surfaces::Obstruction::no_obstruction: out["verdict"] = "no_obstruction"; break;
      case surfaces::Obstruction::consistent: out["verdict"] = "consistent"; break;
    }
    out["detail"] = rep.detail;
    out["reduction"] = io::weight_report_to_json(g, rep.reduction);
  } else {
    surfaces::WeightReport rep = surfaces::reduce_weights(g, w0, relax);
    out["reduction"] = io::weight_report_to_json(g, rep);
  }
  std::ostringstream human;
  human << "weight-reduce: " << out.dump(2) << "\n";
  emit(o, out, human.str());
  return 0;
}

int cmd_heisenberg(const CommonOpts& o) {
  pc::Group h = pc::Group::heisenberg();
  pc::Grading gr = pc::grading(h, {Rat(1), Rat(0), Rat(0)});
  Json out;
  out["command"] = "heisenberg-demo";
  out["rule"] = "y*x = x*y*z^-1, z central";

  auto x = pc::Element::of(pc::ExpTuple{1, 0, 0});
  auto y = pc::Element::of(pc::ExpTuple{0, 1, 0});
  auto one = pc::Element::of(h.id());

  out["collect"] = Json{
      {"y*x", io::pc_element_to_json(pc::Element::of(pc::collect(h, {{1, 1}, {0, 1}})))},
      {"(xy)^2", io::pc_element_to_json(
                     pc::Element::of(pc::collect(h, {{0, 1}, {1, 1}, {0, 1}, {1, 1}})))}};
  out["commutator_defect"] =
      io::pc_element_to_json(pc::sub(pc::multiply(h, x, y), pc::multiply(h, y, x)));

  auto report = [&](const pc::Element& e) -> std::string {
    switch (pc::invertibility(h, e, gr).status) {
      case pc::Invertibility::invertible: return "invertible";
      case pc::Invertibility::not_invertible: return "not_invertible";
      case pc::Invertibility::degenerate: return "degenerate";
    }
    return "degenerate";
  };
  out["invertibility"] = Json{
      {"1 - x", report(pc::sub(one, x))},
      {"2 - x", report(pc::sub(pc::add(one, one), x))},
      {"y - x", report(pc::sub(y, x))}};
  std::ostringstream human;
  human << "heisenberg-demo: " << out.dump(2) << "\n";
  emit(o, out, human.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"novikit: torsion, Novikov homology vanishing and fiberedness obstructions "
               "for group presentations"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string poly, weights;
  int depth = 8;
  bool relax = false, phi_primitive = false, tau_nonzero = false, obstruction = false;

  auto add_common = [&](CLI::App* sub, bool with_input = true) {
    if (with_input) sub->add_option("input", opts.input_path, "input file");
    sub->add_option("--braid", opts.braid, "comma-separated braid word, e.g. 1,1,1");
    sub->add_option("--phi", opts.phi, "cohomology class, e.g. a=1,b=0");
    sub->add_option("--horizon", opts.horizon, "series precision in levels (default 32)");
    sub->add_option("--direction", opts.direction, "+, - or both")
        ->check(CLI::IsMember({"+", "-", "both"}));
    sub->add_option("--format", opts.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_flag("--oracle", opts.oracle, "diff verdicts against the slow level solver");
  };

  add_common(app.add_subcommand("alexander", "Alexander polynomial of a knot presentation"));
  add_common(app.add_subcommand("torsion", "Reidemeister torsion of a presentation"));
  add_common(app.add_subcommand("fiber-check", "full fiberedness obstruction pipeline"));
  add_common(app.add_subcommand("delta0", "degree invariant of a knot presentation"));

  auto* nov = app.add_subcommand("novikov", "invertibility over the Novikov completion");
  add_common(nov);
  nov->add_option("--poly", poly, "Laurent polynomial, e.g. '1 - t'");

  add_common(app.add_subcommand("cone", "open cone of classes with persistent vanishing"));

  auto* hnnc = app.add_subcommand("hnn-witness", "ascending test and kernel witness");
  add_common(hnnc);
  hnnc->add_option("--depth", depth, "coset enumeration depth (default 8)");

  auto* wr = app.add_subcommand("weight-reduce", "surface weight reduction");
  add_common(wr);
  wr->add_option("--weights", weights, "starting weight, default all ones");
  wr->add_flag("--relax", relax, "apply complexity-decreasing moves instead of erroring");
  wr->add_flag("--obstruction", obstruction, "run the connectedness obstruction consumer");
  wr->add_flag("--phi-primitive", phi_primitive, "the dual class is primitive");
  wr->add_flag("--tau-nonzero", tau_nonzero, "the torsion of the ambient pair is nonzero");

  add_common(app.add_subcommand("heisenberg-demo", "pc arithmetic showcase"), false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("alexander")) return cmd_knot_pipeline("alexander", opts);
    if (app.got_subcommand("torsion")) return cmd_knot_pipeline("torsion", opts);
    if (app.got_subcommand("fiber-check")) return cmd_knot_pipeline("fiber-check", opts);
    if (app.got_subcommand("delta0")) return cmd_knot_pipeline("delta0", opts);
    if (app.got_subcommand("novikov")) return cmd_novikov(opts, poly);
    if (app.got_subcommand("cone")) return cmd_cone(opts);
    if (app.got_subcommand("hnn-witness")) return cmd_hnn(opts, depth);
    if (app.got_subcommand("weight-reduce"))
      return cmd_weight_reduce(opts, weights, relax, phi_primitive, tau_nonzero, obstruction);
    if (app.got_subcommand("heisenberg-demo")) return cmd_heisenberg(opts);
  } catch (const Error& e) {
    Json err;
    err["error"] = e.code();
    err["message"] = e.what();
    std::cout << err.dump(2) << "\n";
    return 1;
  } catch (const std::exception& e) {
    Json err;
    err["error"] = "InternalError";
    err["message"] = e.what();
    std::cout << err.dump(2) << "\n";
    return 1;
  }
  return 1;
}
