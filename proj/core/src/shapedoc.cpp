#include "hypkonvex/shapedoc.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hypkonvex/errors.hpp"
#include "hypkonvex/supportfn.hpp"

namespace hypkonvex::shapedoc {
namespace {

using nlohmann::json;

Vec2 point(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ParseError("expected a point [x, y]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

const json& field(const json& doc, const char* name) {
  if (!doc.contains(name)) throw ParseError(std::string("missing field \"") + name + "\"");
  return doc.at(name);
}

ShapeDoc from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("shape document must be a JSON object");
  const json& type = field(doc, "type");
  if (!type.is_string()) throw ParseError("\"type\" must be a string");
  const std::string t = type.get<std::string>();
  if (t == "ellipse") {
    const json& m = field(doc, "matrix");
    if (!m.is_array() || m.size() != 2) throw ParseError("\"matrix\" must be [[a, b], [c, d]]");
    const Vec2 r0 = point(m[0]), r1 = point(m[1]);
    return Ellipse(Mat2{r0.x, r0.y, r1.x, r1.y});
  }
  if (t == "segment") return Segment(point(field(doc, "endpoint")));
  if (t == "polygon") {
    const json& vs = field(doc, "vertices");
    if (!vs.is_array()) throw ParseError("\"vertices\" must be an array of points");
    std::vector<Vec2> v;
    for (const auto& p : vs) v.push_back(point(p));
    return Polygon(std::move(v));
  }
  if (t == "samples") {
    const json& g = field(doc, "grid");
    if (!g.is_number_unsigned()) throw ParseError("\"grid\" must be a positive integer");
    const json& vals = field(doc, "values");
    if (!vals.is_array()) throw ParseError("\"values\" must be an array");
    Samples s{g.get<std::size_t>(), {}};
    for (const auto& x : vals) {
      if (!x.is_number()) throw ParseError("\"values\" must hold numbers");
      s.values.push_back(x.get<double>());
    }
    if (s.values.size() != s.grid) throw ParseError("\"values\" length differs from \"grid\"");
    EvenFn check(s.values);  // validates grid size and evenness
    return s;
  }
  throw ParseError("unknown shape type \"" + t + "\"");
}

}  // namespace

ShapeDoc parse(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  try {
    return from_json(doc);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("invalid shape: ") + e.what());
  }
}

ShapeDoc load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::string dump(const ShapeDoc& doc) {
  json j;
  if (const auto* e = std::get_if<Ellipse>(&doc)) {
    const Mat2& m = e->matrix();
    j = {{"type", "ellipse"}, {"matrix", {{m.a, m.b}, {m.c, m.d}}}};
  } else if (const auto* s = std::get_if<Segment>(&doc)) {
    j = {{"type", "segment"}, {"endpoint", {s->endpoint().x, s->endpoint().y}}};
  } else if (const auto* p = std::get_if<Polygon>(&doc)) {
    json vs = json::array();
    for (const auto& v : p->vertices()) vs.push_back({v.x, v.y});
    j = {{"type", "polygon"}, {"vertices", vs}};
  } else {
    const auto& sm = std::get<Samples>(doc);
    j = {{"type", "samples"}, {"grid", sm.grid}, {"values", sm.values}};
  }
  return j.dump();
}

EvenFn to_even_fn(const ShapeDoc& doc, std::size_t M) {
  if (const auto* e = std::get_if<Ellipse>(&doc)) return supportfn::from_ellipse(*e, M);
  if (const auto* s = std::get_if<Segment>(&doc)) return supportfn::from_segment(*s, M);
  if (const auto* p = std::get_if<Polygon>(&doc)) return supportfn::from_polygon(*p, M);
  const auto& sm = std::get<Samples>(doc);
  EvenFn src(sm.values);
  if (sm.grid == M) return src;
  return EvenFn::from_function(M, [&](double t) { return src.eval_at(t); });
}

}  // namespace hypkonvex::shapedoc
