#include "ybalex/algebra_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ybalex {

namespace {

using nlohmann::json;

Scalar entry_scalar(const json& value, const std::string& where) {
  if (!value.is_string())
    throw SyntaxError("algebra entry " + where + " must be a string", 0);
  return parse_scalar(value.get<std::string>());
}

LinMap parse_map(const json& rows, int dim, const std::string& name) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != dim)
    throw SyntaxError("map \"" + name + "\" must have " +
                          std::to_string(dim) + " rows",
                      0);
  LinMap m = LinMap::Zero(dim, dim);
  for (int r = 0; r < dim; ++r) {
    const json& row = rows[r];
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      throw SyntaxError("map \"" + name + "\" row " + std::to_string(r) +
                            " must have " + std::to_string(dim) + " entries",
                        0);
    for (int c = 0; c < dim; ++c)
      m(r, c) = entry_scalar(row[c], name + "[" + std::to_string(r) + "][" +
                                         std::to_string(c) + "]");
  }
  return m;
}

}  // namespace

AlgebraFile parse_algebra_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SyntaxError(std::string("algebra file is not valid JSON: ") +
                          e.what(),
                      0);
  }
  if (!doc.is_object() || !doc.contains("dim") ||
      !doc["dim"].is_number_integer())
    throw SyntaxError("algebra file needs an integer \"dim\"", 0);
  const int dim = doc["dim"].get<int>();
  if (dim < 1) throw DimTooSmall("algebra dimension must be at least 1");

  if (!doc.contains("structure"))
    throw SyntaxError("algebra file needs a \"structure\" tensor", 0);
  const json& structure = doc["structure"];
  if (!structure.is_array() || static_cast<int>(structure.size()) != dim)
    throw SyntaxError("\"structure\" must be a dim x dim x dim tensor", 0);

  Algebra alg(dim);
  for (int i = 0; i < dim; ++i) {
    const json& plane = structure[i];
    if (!plane.is_array() || static_cast<int>(plane.size()) != dim)
      throw SyntaxError("\"structure\" must be a dim x dim x dim tensor", 0);
    for (int j = 0; j < dim; ++j) {
      const json& row = plane[j];
      if (!row.is_array() || static_cast<int>(row.size()) != dim)
        throw SyntaxError("\"structure\" must be a dim x dim x dim tensor", 0);
      for (int k = 0; k < dim; ++k)
        alg.c(i, j, k) =
            entry_scalar(row[k], "structure[" + std::to_string(i) + "][" +
                                     std::to_string(j) + "][" +
                                     std::to_string(k) + "]");
    }
  }
  validate(alg);

  AlgebraFile file{std::move(alg), std::nullopt};
  if (doc.contains("maps") && doc["maps"].is_object() &&
      doc["maps"].contains("mu"))
    file.mu = parse_map(doc["maps"]["mu"], dim, "mu");
  return file;
}

AlgebraFile load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open algebra file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra_json(buf.str());
}

std::string algebra_to_json(const AlgebraFile& file) {
  const int dim = file.algebra.dim();
  json structure = json::array();
  for (int i = 0; i < dim; ++i) {
    json plane = json::array();
    for (int j = 0; j < dim; ++j) {
      json row = json::array();
      for (int k = 0; k < dim; ++k)
        row.push_back(to_string(file.algebra.c(i, j, k)));
      plane.push_back(std::move(row));
    }
    structure.push_back(std::move(plane));
  }
  json doc{{"dim", dim}, {"structure", std::move(structure)}};
  if (file.mu) {
    json rows = json::array();
    for (int r = 0; r < dim; ++r) {
      json row = json::array();
      for (int c = 0; c < dim; ++c) row.push_back(to_string((*file.mu)(r, c)));
      rows.push_back(std::move(row));
    }
    doc["maps"] = json{{"mu", std::move(rows)}};
  }
  return doc.dump(2);
}

}  // namespace ybalex
