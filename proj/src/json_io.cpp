#include "quandloid/json_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace quandloid {

namespace {

[[noreturn]] void bad_json(const std::string& what) {
  throw Error(ErrorCode::SyntaxError, "json: " + what);
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) bad_json(std::string("missing field '") + name + "'");
  return j.at(name);
}

template <typename T>
T as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    bad_json(std::string("field '") + what + "' has the wrong type");
  }
}

}  // namespace

Json quandle_to_json(const FiniteQuandle& q) {
  return Json{{"size", q.size()}, {"table", q.table()}};
}

FiniteQuandle quandle_from_json(const Json& j) {
  auto size = as<std::size_t>(field(j, "size"), "size");
  auto table = as<Table>(field(j, "table"), "table");
  return validate_table(size, table);
}

Json pointed_to_json(const PointedQuandle& p) {
  auto j = quandle_to_json(p.quandle());
  j["basepoints"] = p.basepoints();
  return j;
}

PointedQuandle pointed_from_json(const Json& j) {
  return PointedQuandle(quandle_from_json(j), as<Tuple>(field(j, "basepoints"), "basepoints"));
}

Json word_to_json(const QuandleWord& w) {
  Json tail = Json::array();
  for (const auto& s : w.tail) tail.push_back(Json{{"generator", s.generator}, {"exponent", s.exponent}});
  return Json{{"base", w.base}, {"tail", tail}};
}

QuandleWord word_from_json(const Json& j) {
  QuandleWord w;
  w.base = as<std::string>(field(j, "base"), "base");
  if (j.contains("tail")) {
    for (const auto& s : j.at("tail")) {
      w.tail.push_back({as<std::string>(field(s, "generator"), "generator"), as<int>(field(s, "exponent"), "exponent")});
    }
  }
  return w;
}

Json presentation_to_json(const QuandlePresentation& p) {
  Json relations = Json::array();
  for (const auto& r : p.relations) relations.push_back(Json{{"lhs", word_to_json(r.lhs)}, {"rhs", word_to_json(r.rhs)}});
  return Json{{"generators", p.generators}, {"relations", relations}, {"basepoints", p.basepoints}};
}

QuandlePresentation presentation_from_json(const Json& j) {
  QuandlePresentation p;
  p.generators = as<std::vector<std::string>>(field(j, "generators"), "generators");
  for (const auto& r : field(j, "relations")) p.relations.push_back({word_from_json(field(r, "lhs")), word_from_json(field(r, "rhs"))});
  if (j.contains("basepoints")) p.basepoints = as<std::vector<std::string>>(j.at("basepoints"), "basepoints");
  p.validate();
  return p;
}

Json diagram_to_json(const LinkoidDiagram& d) {
  Json components = Json::array();
  for (const auto& c : d.components()) {
    Json passages = Json::array();
    for (const auto& p : c.passages) {
      passages.push_back(Json{{"crossing", p.crossing}, {"role", p.role == Role::Over ? "over" : "under"}, {"sign", p.sign}});
    }
    components.push_back(Json{{"kind", c.kind == ComponentKind::Open ? "open" : "closed"}, {"passages", passages}});
  }
  return Json{{"components", components}};
}

LinkoidDiagram diagram_from_json(const Json& j) {
  std::vector<Component> components;
  for (const auto& c : field(j, "components")) {
    Component component;
    auto kind = as<std::string>(field(c, "kind"), "kind");
    if (kind != "open" && kind != "closed") bad_json("component kind must be 'open' or 'closed'");
    component.kind = kind == "open" ? ComponentKind::Open : ComponentKind::Closed;
    for (const auto& p : field(c, "passages")) {
      auto role = as<std::string>(field(p, "role"), "role");
      if (role != "over" && role != "under") bad_json("passage role must be 'over' or 'under'");
      component.passages.push_back({as<std::string>(field(p, "crossing"), "crossing"),
                                    role == "over" ? Role::Over : Role::Under, as<int>(field(p, "sign"), "sign")});
    }
    components.push_back(std::move(component));
  }
  return LinkoidDiagram(std::move(components));
}

Json arcs_to_json(const ArcLayout& layout) {
  Json arcs = Json::array();
  for (const auto& a : layout.arcs) {
    arcs.push_back(Json{{"id", a.id},
                        {"component", a.component},
                        {"over_passages", a.over_passages},
                        {"leg", a.carries_leg},
                        {"head", a.carries_head}});
  }
  Json crossings = Json::array();
  for (const auto& x : layout.crossings) {
    crossings.push_back(Json{{"crossing", x.crossing},
                             {"sign", x.sign},
                             {"in", layout.arcs[x.in_arc].id},
                             {"out", layout.arcs[x.out_arc].id},
                             {"over", layout.arcs[x.over_arc].id}});
  }
  return Json{{"arcs", arcs}, {"crossings", crossings}};
}

Json coloring_to_json(const Coloring& c) {
  Json j = Json::object();
  for (std::size_t i = 0; i < c.generators.size(); ++i) j[c.generators[i]] = c.values[i];
  return j;
}

Json matrix_to_json(const CountingMatrix& m, const MatrixReport& report) {
  Json checks{{"entries_nonnegative", report.entries_nonnegative},
              {"diagonal_positive", report.diagonal_positive},
              {"is_identity", report.is_identity},
              {"only_trivial_colorings", report.only_trivial_colorings},
              {"component_diagonal_equal", report.component_diagonal_equal}};
  if (report.homogeneous_diagonal_equal) checks["homogeneous_diagonal_equal"] = *report.homogeneous_diagonal_equal;
  if (report.two_homogeneous_off_diagonal_equal) {
    checks["two_homogeneous_off_diagonal_equal"] = *report.two_homogeneous_off_diagonal_equal;
  }
  if (report.closure_count) checks["closure_count"] = *report.closure_count;
  if (report.faithful_off_diagonal_zero) checks["faithful_off_diagonal_zero"] = *report.faithful_off_diagonal_zero;
  checks["violations"] = report.violations;
  return Json{{"target", quandle_to_json(m.target)},
              {"matrix", m.entries},
              {"trace", report.trace},
              {"sum", report.sum},
              {"checks", checks}};
}

std::string matrix_to_csv(const CountingMatrix& m) {
  std::ostringstream out;
  for (const auto& row : m.entries) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << row[j];
    out << '\n';
  }
  return out.str();
}

Json error_to_json(const Error& e) {
  Json j{{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}};
  if (!e.witness().empty()) j["witness"] = e.witness();
  if (!e.subject().empty()) j["subject"] = e.subject();
  return Json{{"error", j}};
}

namespace {

std::size_t parse_index(std::string_view text, std::string_view name) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::InvalidArgument, "bad quandle name '" + std::string(name) + "'");
  }
  return value;
}

}  // namespace

FiniteQuandle named_quandle(std::string_view name, const Caps& caps) {
  if (name == "v3") return make_v3();
  if (name == "tet4") return make_tetrahedron();
  if (name.starts_with("census:")) {
    auto rest = name.substr(7);
    auto colon = rest.find(':');
    if (colon == std::string_view::npos) throw Error(ErrorCode::InvalidArgument, "expected census:<order>:<index>");
    auto order = parse_index(rest.substr(0, colon), name);
    auto index = parse_index(rest.substr(colon + 1), name);
    auto census = enumerate_quandles(order, caps);
    if (index >= census.size()) {
      throw Error(ErrorCode::OutOfRange,
                  "census of order " + std::to_string(order) + " has " + std::to_string(census.size()) + " classes",
                  {std::int64_t(index)});
    }
    return census[index];
  }
  if (name.size() > 1 && (name[0] == 't' || name[0] == 'r')) {
    auto n = parse_index(name.substr(1), name);
    return name[0] == 't' ? make_trivial(n) : make_dihedral(n);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown quandle name '" + std::string(name) + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path, {}, path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace quandloid
