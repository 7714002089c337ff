// quandloid: command-line front end over the library.
//
//   quandloid quandle  validate|analyze|enumerate
//   quandloid diagram  parse|presentation|omega-minus|r1|r2|closure|tietze
//   quandloid color    count|matrix|profile
//   quandloid dtable
//
// Domain errors go to stderr as {"error": {...}} with exit status 2.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "quandloid/json_io.hpp"

using namespace quandloid;

namespace {

enum class Format { Json, Csv, Text };

struct Options {
  std::string format = "json";
  std::string caps_spec;

  // quandle source
  std::string named;
  std::string quandle_file;

  std::string in;
  std::string pres;
  std::size_t order = 3;
  std::size_t classes = 0;

  std::size_t component = 0;
  std::size_t component_b = 0;
  std::size_t position = 0;
  std::size_t position_b = 0;
  std::string end = "head";
  std::string over;
  std::string sign = "+";
  bool over_first = false;
  std::string shortcut;
  bool full = false;
  bool link_type = false;

  std::string targets;
  std::vector<Element> basepoints;

  std::size_t m_max = 0;
  std::size_t n_max = 6;
  std::vector<std::string> ks;
};

Format format_of(const Options& o) {
  if (o.format == "csv") return Format::Csv;
  if (o.format == "text") return Format::Text;
  return Format::Json;
}

Caps caps_of(const Options& o) {
  return o.caps_spec.empty() ? Caps::from_environment() : Caps::parse(o.caps_spec);
}

int parse_sign(const std::string& s) {
  if (s == "+" || s == "+1" || s == "1") return 1;
  if (s == "-" || s == "-1") return -1;
  throw Error(ErrorCode::InvalidArgument, "sign must be + or -, got '" + s + "'");
}

FiniteQuandle load_quandle(const Options& o) {
  if (!o.named.empty() && !o.quandle_file.empty()) {
    throw Error(ErrorCode::InvalidArgument, "give either --named or --quandle, not both");
  }
  if (!o.named.empty()) return named_quandle(o.named, caps_of(o));
  if (!o.quandle_file.empty()) return quandle_from_json(Json::parse(read_file(o.quandle_file)));
  throw Error(ErrorCode::InvalidArgument, "a target quandle is required (--named or --quandle)");
}

bool is_presentation_file(const std::string& path) {
  const auto ext = std::filesystem::path(path).extension();
  if (ext == ".pres") return true;
  if (ext == ".json") return Json::parse(read_file(path)).contains("generators");
  return false;
}

LinkoidDiagram load_diagram(const std::string& path) {
  if (std::filesystem::path(path).extension() == ".json") return diagram_from_json(Json::parse(read_file(path)));
  return parse_diagram(read_file(path));
}

// .pres and presentation JSON are read as given; anything else is a diagram
QuandlePresentation load_presentation(const std::string& path) {
  if (!is_presentation_file(path)) return fundamental_presentation(load_diagram(path));
  if (std::filesystem::path(path).extension() == ".json") return presentation_from_json(Json::parse(read_file(path)));
  return parse_presentation(read_file(path));
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

void emit(const QuandlePresentation& p, Format f) {
  if (f == Format::Text) {
    std::cout << render_presentation(p);
  } else {
    emit(presentation_to_json(p));
  }
}

void emit(const LinkoidDiagram& d, Format f) {
  if (f == Format::Text) {
    std::cout << render_diagram(d);
  } else {
    emit(diagram_to_json(d));
  }
}

// ---------------------------------------------------------------------------

void quandle_validate(const Options& o) {
  const auto q = load_quandle(o);
  if (format_of(o) == Format::Text) {
    std::cout << "valid quandle of order " << q.size() << '\n';
  } else {
    emit(Json{{"valid", true}, {"size", q.size()}});
  }
}

void quandle_analyze(const Options& o) {
  const auto caps = caps_of(o);
  const auto q = load_quandle(o);
  const auto aut = automorphism_group(q, caps);
  Json d_n = Json::array(), homogeneous_n = Json::array();
  for (std::size_t n = 1; n <= caps.pointed_arity; ++n) {
    d_n.push_back(orbit_classes(q, n, caps).size());
    homogeneous_n.push_back(is_n_homogeneous(q, n, caps));
  }
  Json stabilizers = Json::array();
  for (Element x = 0; x < static_cast<Element>(q.size()); ++x) stabilizers.push_back(stabilizer_transitive(q, x, caps));

  Json report{{"size", q.size()},
              {"aut_order", aut.order()},
              {"inn_order", inner_group(q).order()},
              {"components", algebraic_components(q)},
              {"faithful", is_faithful(q)},
              {"connected", is_connected(q)},
              {"homogeneous", is_homogeneous(q, caps)},
              {"cyclic_type", is_cyclic_type(q)},
              {"two_point_homogeneous", is_two_point_homogeneous(q)},
              {"stabilizer_transitive", stabilizers},
              {"d_n", d_n},
              {"n_homogeneous", homogeneous_n},
              {"uniform", is_uniform(q, caps)}};
  if (o.classes > 0) report["orbit_classes"] = orbit_classes(q, o.classes, caps);

  if (format_of(o) == Format::Text) {
    for (const auto& [key, value] : report.items()) std::cout << key << ": " << value.dump() << '\n';
  } else {
    emit(report);
  }
}

void quandle_enumerate(const Options& o) {
  for (const auto& q : enumerate_quandles(o.order, caps_of(o))) std::cout << quandle_to_json(q).dump() << '\n';
}

void diagram_parse(const Options& o) {
  const auto d = load_diagram(o.in);
  if (format_of(o) == Format::Text) {
    std::cout << render_diagram(d);
    return;
  }
  auto j = diagram_to_json(d);
  for (auto& [key, value] : arcs_to_json(derive_arcs(d)).items()) j[key] = value;
  emit(j);
}

void diagram_presentation(const Options& o) { emit(fundamental_presentation(load_diagram(o.in)), format_of(o)); }

End end_of(const Options& o) {
  if (o.end == "head") return End::Head;
  if (o.end == "leg") return End::Leg;
  throw Error(ErrorCode::InvalidArgument, "--end must be leg or head");
}

void diagram_omega_minus(const Options& o) {
  if (o.over.empty()) throw Error(ErrorCode::InvalidArgument, "--over is required");
  const auto sign = parse_sign(o.sign);
  const auto end = end_of(o);
  if (is_presentation_file(o.in)) {
    const auto index = 2 * o.component + (end == End::Head ? 1 : 0);
    emit(omega_minus_presentation(load_presentation(o.in), index, o.over, sign), format_of(o));
  } else {
    emit(apply_omega_minus(load_diagram(o.in), o.component, end, o.over, sign), format_of(o));
  }
}

void diagram_r1(const Options& o) {
  emit(apply_r1(load_diagram(o.in), o.component, o.position, parse_sign(o.sign), o.over_first), format_of(o));
}

void diagram_r2(const Options& o) {
  emit(apply_r2(load_diagram(o.in), o.component, o.position, o.component_b, o.position_b, parse_sign(o.sign)),
       format_of(o));
}

void diagram_closure(const Options& o) {
  emit(add_closure_relation(load_presentation(o.in), parse_shortcut(o.shortcut)), format_of(o));
}

void diagram_tietze(const Options& o) {
  TietzeOptions options;
  if (o.full) options.max_growth = std::nullopt;
  emit(tietze_eliminate(load_presentation(o.in), options), format_of(o));
}

void color_count(const Options& o) {
  const auto count = counting_invariant(load_presentation(o.pres), load_quandle(o));
  if (format_of(o) == Format::Json) {
    emit(Json{{"count", count}});
  } else {
    std::cout << count << '\n';
  }
}

void color_matrix(const Options& o) {
  const auto caps = caps_of(o);
  const auto m = counting_matrix(load_presentation(o.pres), load_quandle(o));
  const auto report = matrix_report(m, o.link_type, caps);
  switch (format_of(o)) {
    case Format::Csv:
      std::cout << matrix_to_csv(m);
      break;
    case Format::Text:
      for (const auto& row : m.entries) {
        for (std::size_t j = 0; j < row.size(); ++j) std::cout << (j ? " " : "") << row[j];
        std::cout << '\n';
      }
      std::cout << "trace " << report.trace << "\nsum " << report.sum << '\n';
      for (const auto& v : report.violations) std::cout << "violation: " << v << '\n';
      break;
    case Format::Json:
      emit(matrix_to_json(m, report));
      break;
  }
}

std::vector<PointedQuandle> load_targets(const Options& o) {
  if (!o.targets.empty()) {
    const auto j = Json::parse(read_file(o.targets));
    std::vector<PointedQuandle> targets;
    if (j.is_array()) {
      for (const auto& t : j) targets.push_back(pointed_from_json(t));
    } else {
      targets.push_back(pointed_from_json(j));
    }
    return targets;
  }
  if (!o.named.empty() || !o.quandle_file.empty()) return {PointedQuandle(load_quandle(o), o.basepoints)};
  return default_profile_battery(4, caps_of(o));
}

void color_profile(const Options& o) {
  const auto profile = pointed_profile(load_presentation(o.pres), load_targets(o));
  if (format_of(o) == Format::Json) {
    std::cout << Json(profile).dump() << '\n';
  } else {
    for (std::size_t i = 0; i < profile.size(); ++i) std::cout << (i ? (format_of(o) == Format::Csv ? "," : " ") : "") << profile[i];
    std::cout << '\n';
  }
}

void dtable(const Options& o) {
  std::vector<Cardinality> ks;
  for (const auto& k : o.ks) {
    if (k == "inf" || k == "unbounded") {
      ks.push_back(kUnbounded);
    } else {
      try {
        ks.push_back(static_cast<std::size_t>(std::stoul(k)));
      } catch (const std::exception&) {
        throw Error(ErrorCode::InvalidArgument, "--k takes integers or 'inf', got '" + k + "'");
      }
    }
  }
  if (ks.empty()) ks.push_back(kUnbounded);

  std::cout << "m,n,k,value\n";
  std::size_t omitted = 0;
  for (const auto& k : ks) {
    for (std::size_t m = 0; m <= o.m_max; ++m) {
      if (k && m > *k) {
        omitted += o.n_max + 1;
        continue;
      }
      for (std::size_t n = 0; n <= o.n_max; ++n) {
        std::cout << m << ',' << n << ',' << (k ? std::to_string(*k) : "inf") << ',' << partition_count(m, n, k) << '\n';
      }
    }
  }
  if (omitted) std::cerr << "omitted " << omitted << " rows with m > k\n";
}

void add_quandle_source(CLI::App* cmd, Options& o) {
  cmd->add_option("--named", o.named, "t<n>, r<n>, v3, tet4 or census:<order>:<index>");
  cmd->add_option("--quandle", o.quandle_file, "quandle JSON file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quandle invariants of knotoids and linkoids"};
  app.require_subcommand(1);
  app.fallthrough();  // --format and --caps may follow the subcommand
  Options o;
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--caps", o.caps_spec, "size caps, e.g. group=9,arity=5 (default: $QUANDLOID_CAPS)");

  auto* quandle = app.add_subcommand("quandle", "finite quandles")->require_subcommand(1);
  auto* validate = quandle->add_subcommand("validate", "check the quandle axioms");
  add_quandle_source(validate, o);
  auto* analyze = quandle->add_subcommand("analyze", "groups, predicates and pointed counts");
  add_quandle_source(analyze, o);
  analyze->add_option("--classes", o.classes, "also list the orbit classes of n-tuples");
  auto* enumerate = quandle->add_subcommand("enumerate", "census of one order as JSON lines");
  enumerate->add_option("--order", o.order)->required();

  auto* diagram = app.add_subcommand("diagram", "linkoid diagrams and presentations")->require_subcommand(1);
  auto* parse = diagram->add_subcommand("parse", "validate a diagram and list its arcs");
  auto* presentation = diagram->add_subcommand("presentation", "fundamental pointed presentation");
  auto* omega = diagram->add_subcommand("omega-minus", "forbidden under-move at an endpoint");
  omega->add_option("--component", o.component);
  omega->add_option("--end", o.end)->check(CLI::IsMember({"leg", "head"}));
  omega->add_option("--over", o.over, "arc (or generator) passed under")->required();
  omega->add_option("--sign", o.sign);
  auto* r1 = diagram->add_subcommand("r1", "insert a kink");
  r1->add_option("--component", o.component);
  r1->add_option("--position", o.position);
  r1->add_option("--sign", o.sign);
  r1->add_flag("--over-first", o.over_first);
  auto* r2 = diagram->add_subcommand("r2", "push strand A over strand B");
  r2->add_option("--component", o.component);
  r2->add_option("--position", o.position);
  r2->add_option("--component-b", o.component_b);
  r2->add_option("--position-b", o.position_b);
  r2->add_option("--sign", o.sign);
  auto* closure = diagram->add_subcommand("closure", "add the closing relation along a shortcut");
  closure->add_option("--shortcut", o.shortcut, "e.g. \"b+ c-\"");
  auto* tietze = diagram->add_subcommand("tietze", "eliminate defined generators");
  tietze->add_flag("--full", o.full, "allow relations to grow");
  for (auto* cmd : {parse, presentation, omega, r1, r2, closure, tietze}) cmd->add_option("--in", o.in)->required();

  auto* color = app.add_subcommand("color", "coloring counts")->require_subcommand(1);
  auto* count = color->add_subcommand("count", "unpointed coloring count");
  auto* matrix = color->add_subcommand("matrix", "quandle counting matrix with checks");
  matrix->add_flag("--link-type", o.link_type, "report the closure count and faithful checks");
  auto* profile = color->add_subcommand("profile", "pointed counts against a list of targets");
  profile->add_option("--targets", o.targets, "JSON pointed quandle or array of them");
  profile->add_option("--basepoints", o.basepoints, "basepoints for --named/--quandle");
  for (auto* cmd : {count, matrix, profile}) {
    cmd->add_option("--pres", o.pres, "presentation (.pres/.json) or diagram file")->required();
    add_quandle_source(cmd, o);
  }

  auto* dt = app.add_subcommand("dtable", "CSV of d_{m,n,k}");
  dt->add_option("--m-max", o.m_max);
  dt->add_option("--n-max", o.n_max);
  dt->add_option("--k", o.ks, "k values, 'inf' for unbounded (repeatable)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) quandle_validate(o);
    if (*analyze) quandle_analyze(o);
    if (*enumerate) quandle_enumerate(o);
    if (*parse) diagram_parse(o);
    if (*presentation) diagram_presentation(o);
    if (*omega) diagram_omega_minus(o);
    if (*r1) diagram_r1(o);
    if (*r2) diagram_r2(o);
    if (*closure) diagram_closure(o);
    if (*tietze) diagram_tietze(o);
    if (*count) color_count(o);
    if (*matrix) color_matrix(o);
    if (*profile) color_profile(o);
    if (*dt) dtable(o);
  } catch (const Error& e) {
    std::cerr << error_to_json(e).dump(2) << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << error_to_json(Error(ErrorCode::SyntaxError, std::string("json: ") + e.what())).dump(2) << '\n';
    return 2;
  }
  return 0;
}
