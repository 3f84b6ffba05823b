#include "cohk/dsl/io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "cohk/errors.hpp"

namespace cohk::io {

namespace {

using nlohmann::json;

json parse_json(std::string_view text, const char* what) {
  json j = json::parse(text.begin(), text.end(), nullptr, false);
  if (j.is_discarded()) throw InputError(std::string(what) + ": not valid JSON");
  if (!j.is_object()) throw InputError(std::string(what) + ": top level must be an object");
  return j;
}

const json& field(const json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw InputError(where + ": missing field \"" + key + "\"");
  return *it;
}

double real_of(const json& j, const std::string& where) {
  if (!j.is_number()) throw InputError(where + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw InputError(where + ": number must be finite");
  return v;
}

Complex complex_of(const json& j, const std::string& where) {
  if (j.is_number()) return real_of(j, where);
  if (!j.is_array() || j.size() != 2) throw InputError(where + ": expected [re, im] or a number");
  return {real_of(j[0], where + "[0]"), real_of(j[1], where + "[1]")};
}

std::vector<Complex> coords_of(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array of coordinates");
  std::vector<Complex> c;
  for (std::size_t i = 0; i < j.size(); ++i) c.push_back(complex_of(j[i], where + "[" + std::to_string(i) + "]"));
  return c;
}

Point point_of(const json& j, const std::string& where) {
  std::vector<Complex> c = coords_of(j, where);
  if (c.empty()) throw InputError(where + ": a point needs at least one coordinate");
  return Point(std::move(c));
}

std::size_t size_of(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 1) throw InputError(where + ": expected a positive integer");
  return static_cast<std::size_t>(j.get<long long>());
}

bool bool_of(const json& obj, const char* key, bool fallback, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_boolean()) throw InputError(where + "." + key + ": expected true or false");
  return it->get<bool>();
}

}  // namespace

PointSet parse_point_set(std::string_view text) {
  const json j = parse_json(text, "point set");
  const std::size_t d = size_of(field(j, "dimension", "point set"), "point set.dimension");
  const json& rows = field(j, "points", "point set");
  if (!rows.is_array() || rows.empty()) throw InputError("point set.points: expected a nonempty array");
  std::vector<std::string> tags;
  if (const auto it = j.find("tags"); it != j.end()) {
    if (!it->is_array() || it->size() != rows.size())
      throw InputError("point set.tags: expected one string per point");
    for (const json& t : *it) {
      if (!t.is_string()) throw InputError("point set.tags: expected strings");
      tags.push_back(t.get<std::string>());
    }
  }
  std::vector<Point> pts;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string where = "point set.points[" + std::to_string(i) + "]";
    std::vector<Complex> c = coords_of(rows[i], where);
    if (c.size() != d)
      throw InputError(where + ": " + std::to_string(c.size()) + " coordinates, dimension is " + std::to_string(d));
    if (tags.empty())
      pts.emplace_back(std::move(c));
    else
      pts.emplace_back(std::move(c), tags[i]);
  }
  return PointSet(std::move(pts));
}

std::string write_point_set(const PointSet& pts) {
  json rows = json::array();
  json tags = json::array();
  bool tagged = false;
  for (const Point& p : pts) {
    json row = json::array();
    for (const Complex c : p.coords()) row.push_back({c.real(), c.imag()});
    rows.push_back(std::move(row));
    tags.push_back(p.tag().value_or(""));
    tagged = tagged || p.tag().has_value();
  }
  json out = {{"dimension", pts.dimension()}, {"points", rows}};
  if (tagged) out["tags"] = tags;
  return out.dump() + "\n";
}

Matrix parse_matrix(std::string_view text) {
  const json j = parse_json(text, "matrix");
  const json& rows = field(j, "matrix", "matrix file");
  if (!rows.is_array() || rows.empty()) throw InputError("matrix: expected a nonempty array of rows");
  const std::size_t n = rows.size();
  Matrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t r = 0; r < n; ++r) {
    const std::string where = "matrix[" + std::to_string(r) + "]";
    if (!rows[r].is_array() || rows[r].size() != n) throw InputError(where + ": matrix must be square");
    for (std::size_t c = 0; c < n; ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          complex_of(rows[r][c], where + "[" + std::to_string(c) + "]");
  }
  return m;
}

std::vector<VectorLiteral> parse_vectors(std::string_view text) {
  const json j = parse_json(text, "vectors");
  const json& list = field(j, "vectors", "vector file");
  if (!list.is_array() || list.empty()) throw InputError("vectors: expected a nonempty array");
  std::vector<VectorLiteral> out;
  for (std::size_t v = 0; v < list.size(); ++v) {
    const std::string where = "vectors[" + std::to_string(v) + "]";
    if (!list[v].is_object()) throw InputError(where + ": expected an object");
    const json& terms = field(list[v], "terms", where);
    if (!terms.is_array()) throw InputError(where + ".terms: expected an array");
    VectorLiteral lit;
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const std::string tw = where + ".terms[" + std::to_string(t) + "]";
      if (!terms[t].is_object()) throw InputError(tw + ": expected an object");
      lit.terms.push_back({complex_of(field(terms[t], "coef", tw), tw + ".coef"),
                           point_of(field(terms[t], "point", tw), tw + ".point")});
    }
    out.push_back(std::move(lit));
  }
  return out;
}

StencilFile parse_stencils(std::string_view text) {
  const json j = parse_json(text, "stencils");
  StencilFile f;
  f.base = coords_of(field(j, "base", "stencil file"), "stencils.base");
  if (f.base.empty()) throw InputError("stencils.base: needs at least one coordinate");
  f.domain_radius = std::numeric_limits<double>::infinity();
  if (const auto it = j.find("domain_radius"); it != j.end()) {
    f.domain_radius = real_of(*it, "stencils.domain_radius");
    if (f.domain_radius <= 0.0) throw InputError("stencils.domain_radius: must be positive");
  }
  const json& states = field(j, "states", "stencil file");
  if (!states.is_array() || states.empty()) throw InputError("stencils.states: expected a nonempty array");
  for (std::size_t s = 0; s < states.size(); ++s) {
    const std::string where = "stencils.states[" + std::to_string(s) + "]";
    const json& st = states[s];
    if (!st.is_object()) throw InputError(where + ": expected an object");
    if (const auto c = st.find("central"); c != st.end()) {
      const std::string cw = where + ".central";
      if (!c->is_object()) throw InputError(cw + ": expected an object");
      const json& axis = field(*c, "axis", cw);
      if (!axis.is_number_integer() || axis.get<long long>() < 0) throw InputError(cw + ".axis: expected an index");
      const json& order = field(*c, "order", cw);
      if (!order.is_number_integer()) throw InputError(cw + ".order: expected 1 or 2");
      double h = 0.0;
      if (const auto hs = c->find("h"); hs != c->end())
        h = real_of(*hs, cw + ".h");
      else
        h = default_step(f.base);
      Complex direction = 1.0;
      if (const auto d = c->find("direction"); d != c->end()) direction = complex_of(*d, cw + ".direction");
      try {
        f.states.push_back(central_difference(f.base.size(), static_cast<std::size_t>(axis.get<long long>()),
                                              order.get<int>(), h, bool_of(*c, "richardson", false, cw),
                                              direction));
      } catch (const DomainError& e) {
        throw InputError(cw + ": " + e.what());
      }
    } else if (const auto nodes = st.find("nodes"); nodes != st.end()) {
      if (!nodes->is_array() || nodes->empty()) throw InputError(where + ".nodes: expected a nonempty array");
      Stencil stencil;
      for (std::size_t i = 0; i < nodes->size(); ++i) {
        const std::string nw = where + ".nodes[" + std::to_string(i) + "]";
        const json& node = (*nodes)[i];
        if (!node.is_object()) throw InputError(nw + ": expected an object");
        std::vector<Complex> off = coords_of(field(node, "offset", nw), nw + ".offset");
        if (off.size() != f.base.size()) throw InputError(nw + ".offset: dimension differs from base");
        stencil.push_back({complex_of(field(node, "weight", nw), nw + ".weight"), std::move(off)});
      }
      f.states.push_back(std::move(stencil));
    } else {
      throw InputError(where + ": expected \"central\" or \"nodes\"");
    }
  }
  return f;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace cohk::io
