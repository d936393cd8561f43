#include "flatinc/config_io.hpp"

#include <fstream>
#include <sstream>
#include <algorithm>

#include "json.hpp"

#include "flatinc/error.hpp"

namespace flatinc {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& msg) {
  throw Error(ErrorCode::ParseError, "field " + field + ": " + msg);
}

std::string line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

Scalar parse_coord(const json& value, const std::string& field) {
  if (!value.is_string()) fail(field, "coordinate must be a rational string");
  const auto& s = value.get_ref<const std::string&>();
  auto q = parse_rational(s);
  if (!q) fail(field, "malformed rational '" + s + "'");
  return *q;
}

}  // namespace

MultiPointSet parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError,
                line_col(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
  }
  if (!doc.is_object()) fail("<root>", "expected an object");
  if (doc.contains("schema") && doc["schema"] != 1) fail("schema", "unsupported schema");
  if (!doc.contains("ambient_dim") || !doc["ambient_dim"].is_number_integer()) {
    fail("ambient_dim", "missing or not an integer");
  }
  const int d = doc["ambient_dim"].get<int>();
  if (d < 0) fail("ambient_dim", "must be >= 0");
  bool projective = false;
  if (doc.contains("projective")) {
    if (!doc["projective"].is_boolean()) fail("projective", "must be a boolean");
    projective = doc["projective"].get<bool>();
  }
  if (!doc.contains("points") || !doc["points"].is_array()) {
    fail("points", "missing or not an array");
  }

  std::vector<Point> pts;
  std::vector<Weight> mult;
  const auto& list = doc["points"];
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string field = "points[" + std::to_string(i) + "]";
    const json* coords = &list[i];
    Weight m = 1;
    if (list[i].is_object()) {
      if (!list[i].contains("coords")) fail(field, "missing coords");
      coords = &list[i]["coords"];
      if (list[i].contains("multiplicity")) {
        const auto& mj = list[i]["multiplicity"];
        if (!mj.is_number_integer() || mj.get<Weight>() < 1) {
          fail(field + ".multiplicity", "must be a positive integer");
        }
        m = mj.get<Weight>();
      }
    }
    if (!coords->is_array()) fail(field, "coordinates must be an array");
    const std::size_t expected = static_cast<std::size_t>(d) + (projective ? 1 : 0);
    if (coords->size() != expected) {
      fail(field, "expected " + std::to_string(expected) + " coordinates, got " +
                      std::to_string(coords->size()));
    }
    Vector v;
    for (std::size_t j = 0; j < coords->size(); ++j) {
      v.push_back(parse_coord((*coords)[j], field + ".coords[" + std::to_string(j) + "]"));
    }
    try {
      pts.push_back(projective ? Point::canonicalize(std::move(v))
                               : Point::embed_affine(v));
    } catch (const Error& e) {
      fail(field, e.what());
    }
    mult.push_back(m);
  }
  try {
    return MultiPointSet(d, std::move(pts), std::move(mult));
  } catch (const Error& e) {
    fail("points", e.what());
  }
}

MultiPointSet load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string serialize_config(const MultiPointSet& config) {
  const bool affine = std::all_of(config.points().begin(), config.points().end(),
                                  [](const Point& p) { return p.is_finite(); });
  json points = json::array();
  for (std::size_t i = 0; i < config.size(); ++i) {
    const auto& c = config[i].coords();
    json coords = json::array();
    for (std::size_t j = affine ? 1 : 0; j < c.size(); ++j) {
      coords.push_back(format_rational(c[j]));
    }
    if (config.multiplicity(i) == 1) {
      points.push_back(std::move(coords));
    } else {
      points.push_back({{"coords", std::move(coords)},
                        {"multiplicity", config.multiplicity(i)}});
    }
  }
  json doc = {{"schema", 1},
              {"ambient_dim", config.ambient_dim()},
              {"projective", !affine},
              {"points", std::move(points)}};
  return doc.dump(2) + "\n";
}

void save_config(const MultiPointSet& config, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParameterError, "cannot write " + path.string());
  out << serialize_config(config);
}

}  // namespace flatinc
