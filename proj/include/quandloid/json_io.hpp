#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "quandloid/coloring.hpp"
#include "quandloid/diagram.hpp"
#include "quandloid/pointed.hpp"
#include "quandloid/presentation.hpp"
#include "quandloid/quandle.hpp"

namespace quandloid {

using Json = nlohmann::ordered_json;

// {"size": k, "table": [[...]]}; the pointed form adds "basepoints".
Json quandle_to_json(const FiniteQuandle& q);
FiniteQuandle quandle_from_json(const Json& j);
Json pointed_to_json(const PointedQuandle& p);
PointedQuandle pointed_from_json(const Json& j);

Json word_to_json(const QuandleWord& w);
QuandleWord word_from_json(const Json& j);
Json presentation_to_json(const QuandlePresentation& p);
QuandlePresentation presentation_from_json(const Json& j);

Json diagram_to_json(const LinkoidDiagram& d);
LinkoidDiagram diagram_from_json(const Json& j);
Json arcs_to_json(const ArcLayout& layout);

Json coloring_to_json(const Coloring& c);
/// {"target": ..., "matrix": [[...]], "trace": t, "sum": s, "checks": {...}}
Json matrix_to_json(const CountingMatrix& m, const MatrixReport& report);
std::string matrix_to_csv(const CountingMatrix& m);

Json error_to_json(const Error& e);

/// t<n>, r<n>, v3, tet4, census:<order>:<index> (index 0-based).
FiniteQuandle named_quandle(std::string_view name, const Caps& caps = {});

/// Reads a whole file; IoError if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace quandloid
