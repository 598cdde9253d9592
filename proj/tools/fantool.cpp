// fantool: build, validate, check and certify simplicial toric fan data.
// JSON in, JSON/DOT/text out. Exit codes: 0 = ran (verdicts are data),
// 1 = an --expect assertion failed, 2 = invalid input.

#include <toric/json_io.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using namespace toric;

namespace {

struct CliError {
  int code;
  std::string message;
};

std::string read_text(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw CliError{2, "cannot open input file '" + path + "'"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const std::exception& e) {
    throw CliError{2, std::string("malformed JSON: ") + e.what()};
  }
}

Fan load_fan(const std::string& path) {
  try {
    return fan_from_json(parse_json(read_text(path)));
  } catch (const CliError&) {
    throw;
  } catch (const std::exception& e) {
    throw CliError{2, std::string("invalid fan: ") + e.what()};
  }
}

void write_text(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw CliError{2, "cannot open output file '" + path + "'"};
  out << content;
}

void emit(const std::string& path, const Json& j) { write_text(path, j.dump(2) + "\n"); }

Fan validated_fan(const std::string& path) {
  Fan f = load_fan(path);
  auto report = fan_validate(f);
  if (!report.ok)
    throw CliError{2, "fan fails validation (run the validate subcommand for the report)"};
  return f;
}

RatVec parse_params(const std::string& csv) {
  RatVec out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(rat_from_string(item));
    } catch (const std::exception& e) {
      throw CliError{2, std::string("bad parameter '") + item + "': " + e.what()};
    }
  }
  if (out.empty()) throw CliError{2, "empty parameter list"};
  return out;
}

int check_expectations(const std::string& expect, const Json& props) {
  std::stringstream ss(expect);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    bool want = true;
    std::string name = tok;
    if (name.front() == '!') {
      want = false;
      name = name.substr(1);
    }
    if (!props.contains(name) || props.at(name).is_null())
      throw CliError{2, "expectation on unchecked property '" + name + "'"};
    if (props.at(name).get<bool>() != want) {
      std::cerr << "expectation failed: " << tok << "\n";
      return 1;
    }
  }
  return 0;
}

}  // namespace

namespace {

int run(int argc, char** argv) {
  CLI::App app{"exact toolkit for simplicial toric fans"};
  app.require_subcommand(1);

  // paperfan
  auto* paperfan = app.add_subcommand("paperfan", "build the family fan for a given n");
  std::size_t family_n = 3;
  std::string out_path;
  paperfan->add_option("n", family_n, "family parameter (n >= 3)")->required();
  paperfan->add_option("-o,--output", out_path, "output file (default stdout)");

  // validate
  auto* validate = app.add_subcommand("validate", "check the pairwise-face axiom");
  std::string fan_path = "-";
  std::string expect_valid;
  validate->add_option("fan", fan_path, "fan JSON file or - for stdin");
  validate->add_option("--expect", expect_valid, "valid | invalid (exit 1 on mismatch)");

  // props
  auto* props = app.add_subcommand("props", "smoothness / completeness / projectivity");
  std::string props_fan = "-";
  std::string checks = "smooth,complete,projective";
  std::string cert_path, expect_props;
  props->add_option("fan", props_fan, "fan JSON file or - for stdin");
  props->add_option("--check", checks, "comma list from smooth,complete,projective");
  props->add_option("--certificate", cert_path, "write the projectivity verdict JSON here");
  props->add_option("--expect", expect_props,
                    "comma list of properties, prefix ! to negate (exit 1 on mismatch)");

  // primcoll
  auto* primcoll = app.add_subcommand("primcoll", "primitive collections");
  std::string primcoll_fan = "-";
  primcoll->add_option("fan", primcoll_fan, "fan JSON file or - for stdin");

  // star
  auto* star = app.add_subcommand("star", "star (quotient) fan at a ray");
  std::string star_fan_path = "-";
  std::size_t star_ray = 0;
  star->add_option("fan", star_fan_path, "fan JSON file or - for stdin");
  star->add_option("--ray", star_ray, "ray index")->required();
  star->add_option("-o,--output", out_path, "output file (default stdout)");

  // cox
  auto* cox = app.add_subcommand("cox", "quasitorus data of the Cox construction");
  std::string cox_fan = "-";
  cox->add_option("fan", cox_fan, "fan JSON file or - for stdin");

  // dualfan
  auto* dualfan = app.add_subcommand("dualfan", "complete fan dual to a lattice polytope");
  std::string poly_path = "-";
  dualfan->add_option("polytope", poly_path, "polytope JSON file or - for stdin");
  dualfan->add_option("-o,--output", out_path, "output file (default stdout)");

  // act
  auto* act = app.add_subcommand("act", "apply the additive action upstairs");
  std::string act_fan = "-", act_point, act_params;
  act->add_option("fan", act_fan, "family fan JSON file or - for stdin");
  act->add_option("--point", act_point, "point JSON file")->required();
  act->add_option("--params", act_params, "comma-separated rational parameters")->required();
  act->add_option("-o,--output", out_path, "output file (default stdout)");

  // orbitdim
  auto* orbitdim = app.add_subcommand("orbitdim", "additive orbit dimension at a point");
  std::string od_fan = "-", od_point;
  orbitdim->add_option("fan", od_fan, "family fan JSON file or - for stdin");
  orbitdim->add_option("--point", od_point, "point JSON file")->required();

  // report3
  auto* report3 = app.add_subcommand("report3", "orbit structure report for n = 3");
  bool report_text = false;
  report3->add_flag("--text", report_text, "human-readable text instead of JSON");
  report3->add_option("-o,--output", out_path, "output file (default stdout)");

  // isom
  auto* isom = app.add_subcommand("isom", "lattice isomorphism between two fans");
  std::string fan1_path, fan2_path, expect_isom;
  isom->add_option("fan1", fan1_path, "first fan JSON file")->required();
  isom->add_option("fan2", fan2_path, "second fan JSON file")->required();
  isom->add_option("--expect", expect_isom, "yes | no (exit 1 on mismatch)");

  // export-dot
  auto* dot = app.add_subcommand("export-dot", "orbit poset as a Graphviz digraph");
  std::string dot_fan = "-";
  dot->add_option("fan", dot_fan, "fan JSON file or - for stdin");
  dot->add_option("-o,--output", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*paperfan) {
      if (family_n < 3) throw CliError{2, "paperfan: n must be at least 3"};
      emit(out_path, fan_to_json(build_paper_fan(family_n)));
      return 0;
    }

    if (*validate) {
      Fan f = load_fan(fan_path);
      auto report = fan_validate(f);
      emit("", validation_to_json(report));
      if (!expect_valid.empty()) {
        if (expect_valid != "valid" && expect_valid != "invalid")
          throw CliError{2, "validate --expect takes 'valid' or 'invalid'"};
        if ((expect_valid == "valid") != report.ok) {
          std::cerr << "expectation failed: fan is " << (report.ok ? "valid" : "invalid") << "\n";
          return 1;
        }
      }
      return 0;
    }

    if (*props) {
      Fan f = validated_fan(props_fan);
      bool want_smooth = checks.find("smooth") != std::string::npos;
      bool want_complete = checks.find("complete") != std::string::npos;
      bool want_projective = checks.find("projective") != std::string::npos;
      Json result;
      result["smooth"] = want_smooth ? Json(is_smooth(f)) : Json(nullptr);
      result["complete"] = want_complete ? Json(is_complete(f)) : Json(nullptr);
      result["projective"] = nullptr;
      if (want_projective) {
        if (!is_complete(f))
          throw CliError{2, "projectivity is defined for complete fans only"};
        auto verdict = is_projective(f);
        bool evidence_ok = verdict.projective
                               ? verify_support_function(f, *verdict.support)
                               : verify_farkas(verdict.system, *verdict.certificate);
        if (!evidence_ok) throw CliError{2, "internal error: verdict evidence failed re-check"};
        result["projective"] = verdict.projective;
        if (!cert_path.empty()) emit(cert_path, verdict_to_json(verdict));
      }
      emit("", result);
      if (!expect_props.empty()) return check_expectations(expect_props, result);
      return 0;
    }

    if (*primcoll) {
      Fan f = validated_fan(primcoll_fan);
      Json result;
      Json list = Json::array();
      for (const auto& c : primitive_collections(f)) {
        Json entry = Json::array();
        for (std::size_t i : c) entry.push_back(i);
        list.push_back(entry);
      }
      result["primitive_collections"] = list;
      emit("", result);
      return 0;
    }

    if (*star) {
      Fan f = validated_fan(star_fan_path);
      if (star_ray >= f.rays().size()) throw CliError{2, "star: ray index out of range"};
      emit(out_path, star_fan_to_json(star_fan(f, ConeRef{{star_ray}})));
      return 0;
    }

    if (*cox) {
      // Quasitorus data depends on the rays alone; structural fan invariants
      // are enough here.
      Fan f = load_fan(cox_fan);
      emit("", quasitorus_to_json(quasitorus(f)));
      return 0;
    }

    if (*dualfan) {
      Polytope p;
      try {
        p = polytope_from_json(parse_json(read_text(poly_path)));
      } catch (const CliError&) {
        throw;
      } catch (const std::exception& e) {
        throw CliError{2, std::string("invalid polytope: ") + e.what()};
      }
      emit(out_path, fan_to_json(dual_fan_of_polytope(p)));
      return 0;
    }

    if (*act) {
      Fan f = load_fan(act_fan);
      PointY y = point_from_json(parse_json(read_text(act_point)));
      AdditiveParams c{parse_params(act_params)};
      emit(out_path, point_to_json(additive_act(c, y, f)));
      return 0;
    }

    if (*orbitdim) {
      Fan f = load_fan(od_fan);
      PointY y = point_from_json(parse_json(read_text(od_point)));
      Json result;
      result["dimension"] = orbit_dimension(quotient_map(y, f), f);
      emit("", result);
      return 0;
    }

    if (*report3) {
      OrbitReport rep = ga_orbit_report(3);
      if (report_text) {
        write_text(out_path, orbit_report_text(rep));
      } else {
        Json result;
        result["orbit_report"] = orbit_report_to_json(rep);
        result["star_check"] = star_check_to_json(component_star_check());
        emit(out_path, result);
      }
      return 0;
    }

    if (*isom) {
      Fan f1 = load_fan(fan1_path);
      Fan f2 = load_fan(fan2_path);
      auto witness = fan_isomorphic(f1, f2);
      Json result;
      result["isomorphic"] = witness.has_value();
      result["matrix"] = witness ? int_mat_to_json(*witness) : Json(nullptr);
      emit("", result);
      if (!expect_isom.empty()) {
        if (expect_isom != "yes" && expect_isom != "no")
          throw CliError{2, "isom --expect takes 'yes' or 'no'"};
        if ((expect_isom == "yes") != witness.has_value()) {
          std::cerr << "expectation failed: fans are " << (witness ? "" : "not ")
                    << "isomorphic\n";
          return 1;
        }
      }
      return 0;
    }

    if (*dot) {
      Fan f = validated_fan(dot_fan);
      write_text(out_path, orbit_poset_dot(f));
      return 0;
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (...) {
    std::cerr << "error: unexpected failure\n";
    return 2;
  }
}
