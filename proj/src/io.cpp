#include "wba/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace wba {

namespace {

int indexIn(const Json& v, int n, const char* what) {
  if (!v.is_number_integer()) throw ParseError(std::string(what) + ": index is not an integer");
  const auto i = v.get<long long>();
  if (i < 0 || i >= n) throw ParseError(std::string(what) + ": index out of range");
  return static_cast<int>(i);
}

Scalar scalarOf(const Json& v, const char* what) {
  if (v.is_number_integer()) return Scalar(v.get<long>());
  if (!v.is_string()) throw ParseError(std::string(what) + ": scalar must be a string");
  try {
    return parseScalar(v.get<std::string>());
  } catch (const std::invalid_argument&) {
    throw ParseError(std::string(what) + ": malformed scalar \"" + v.get<std::string>() + "\"");
  }
}

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return doc.at(key);
}

int dimOf(const Json& doc) {
  const Json& d = field(doc, "dim");
  if (!d.is_number_integer() || d.get<long long>() < 1 || d.get<long long>() > 4096) throw ParseError("dim must be a positive integer");
  return d.get<int>();
}

std::vector<std::string> labelsOf(const Json& doc, int n) {
  std::vector<std::string> labels;
  if (!doc.contains("basis")) {
    for (int i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i + 1));
    return labels;
  }
  const Json& b = doc.at("basis");
  if (!b.is_array() || static_cast<int>(b.size()) != n) throw ParseError("basis must list dim labels");
  for (const auto& l : b) {
    if (!l.is_string()) throw ParseError("basis labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  return labels;
}

void format(const Json& v, int depth, std::ostringstream& out) {
  const std::string pad(static_cast<size_t>(2 * (depth + 1)), ' ');
  const std::string close(static_cast<size_t>(2 * depth), ' ');
  if (v.is_object()) {
    if (v.empty()) {
      out << "{}";
      return;
    }
    out << "{\n";
    bool first = true;
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (!first) out << ",\n";
      first = false;
      out << pad << Json(it.key()).dump() << ": ";
      format(it.value(), depth + 1, out);
    }
    out << "\n" << close << "}";
  } else if (v.is_array()) {
    bool flat = true;
    for (const auto& e : v) flat = flat && !e.is_object() && !(e.is_array() && !e.empty() && (e[0].is_array() || e[0].is_object()));
    if (flat && (v.empty() || !v[0].is_array())) {
      out << v.dump();
      return;
    }
    out << "[\n";
    for (size_t i = 0; i < v.size(); ++i) {
      out << pad;
      if (v[i].is_array() && flat)
        out << v[i].dump();
      else
        format(v[i], depth + 1, out);
      out << (i + 1 < v.size() ? ",\n" : "\n");
    }
    out << close << "]";
  } else {
    out << v.dump();
  }
}

}  // namespace

Json vectorToJson(const Vector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(toString(x));
  return a;
}

Vector jsonToVector(const Json& doc, int n) {
  if (!doc.is_array() || static_cast<int>(doc.size()) != n) throw ParseError("expected a list of " + std::to_string(n) + " scalars");
  Vector v;
  for (const auto& x : doc) v.push_back(scalarOf(x, "vector"));
  return v;
}

Json matrixToSparse(const Matrix& m) {
  Json a = Json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (sgn(m(i, j)) != 0) a.push_back(Json::array({i, j, toString(m(i, j))}));
  return a;
}

Matrix sparseToMatrix(const Json& doc, int rows, int cols) {
  if (!doc.is_array()) throw ParseError("sparse matrix must be a list of [i, j, c]");
  Matrix m(rows, cols);
  for (const auto& e : doc) {
    if (!e.is_array() || e.size() != 3) throw ParseError("sparse matrix entries are [i, j, c]");
    m(indexIn(e[0], rows, "matrix"), indexIn(e[1], cols, "matrix")) += scalarOf(e[2], "matrix");
  }
  return m;
}

Matrix denseToMatrix(const Json& doc) {
  if (!doc.is_array() || doc.empty() || !doc[0].is_array()) throw ParseError("dense matrix must be a list of rows");
  const int cols = static_cast<int>(doc[0].size());
  std::vector<Vector> rows;
  for (const auto& r : doc) rows.push_back(jsonToVector(r, cols));
  return Matrix::fromRows(cols, rows);
}

Json matrixToDense(const Matrix& m) {
  Json a = Json::array();
  for (int i = 0; i < m.rows(); ++i) a.push_back(vectorToJson(m.row(i)));
  return a;
}

Algebra parseAlgebra(const Json& doc) {
  const int n = dimOf(doc);
  auto labels = labelsOf(doc, n);
  std::vector<Vector> prods(static_cast<size_t>(n) * n, zeroVector(n));
  const Json& mult = field(doc, "mult");
  if (!mult.is_array()) throw ParseError("mult must be a list");
  for (const auto& e : mult) {
    if (!e.is_array() || e.size() != 4) throw ParseError("mult entries are [i, j, k, c]");
    int i = indexIn(e[0], n, "mult"), j = indexIn(e[1], n, "mult"), k = indexIn(e[2], n, "mult");
    prods[static_cast<size_t>(i) * n + j][k] += scalarOf(e[3], "mult");
  }
  Vector unit = jsonToVector(field(doc, "unit"), n);
  try {
    return Algebra(labels, prods, unit);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Json algebraToJson(const Algebra& a) {
  Json doc;
  doc["field"] = "Q";
  doc["dim"] = a.dim();
  doc["basis"] = a.labels();
  Json mult = Json::array();
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      for (int k = 0; k < a.dim(); ++k)
        if (sgn(a.mult(i, j, k)) != 0) mult.push_back(Json::array({i, j, k, toString(a.mult(i, j, k))}));
  doc["mult"] = mult;
  doc["unit"] = vectorToJson(a.unit());
  return doc;
}

SpecFile parseSpec(const Json& doc) {
  if (!doc.is_object()) throw ParseError("top level must be an object");
  if (doc.contains("field") && doc.at("field") != "Q") throw ParseError("only the field Q is supported");
  const int n = dimOf(doc);
  Algebra alg = parseAlgebra(doc);
  std::vector<Matrix> cop(static_cast<size_t>(n), Matrix(n, n));
  const Json& comult = field(doc, "comult");
  if (!comult.is_array()) throw ParseError("comult must be a list");
  for (const auto& e : comult) {
    if (!e.is_array() || e.size() != 4) throw ParseError("comult entries are [k, i, j, c]");
    int k = indexIn(e[0], n, "comult"), i = indexIn(e[1], n, "comult"), j = indexIn(e[2], n, "comult");
    cop[k](i, j) += scalarOf(e[3], "comult");
  }
  Vector counit = jsonToVector(field(doc, "counit"), n);
  SpecFile s;
  try {
    s.algebra = WeakBialgebra(alg, cop, counit);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  if (doc.contains("extras")) {
    if (!doc.at("extras").is_object()) throw ParseError("extras must be an object");
    s.extras = doc.at("extras");
  }
  return s;
}

SpecFile parseSpecText(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parseSpec(doc);
}

SpecFile readSpecFile(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return parseSpecText(ss.str());
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  ss << in.rdbuf();
  return parseSpecText(ss.str());
}

Json specToJson(const SpecFile& spec) {
  const WeakBialgebra& a = spec.algebra;
  Json doc = algebraToJson(a.algebra());
  Json comult = Json::array();
  for (int k = 0; k < a.dim(); ++k)
    for (int i = 0; i < a.dim(); ++i)
      for (int j = 0; j < a.dim(); ++j)
        if (sgn(a.comult(k, i, j)) != 0) comult.push_back(Json::array({k, i, j, toString(a.comult(k, i, j))}));
  doc["comult"] = comult;
  doc["counit"] = vectorToJson(a.counit());
  if (!spec.extras.empty()) doc["extras"] = spec.extras;
  return doc;
}

std::string formatJson(const Json& doc) {
  std::ostringstream out;
  format(doc, 0, out);
  out << "\n";
  return out.str();
}

std::string emitSpec(const SpecFile& spec) { return formatJson(specToJson(spec)); }

SpecFile dualSpec(const SpecFile& spec) {
  SpecFile d{dual(spec.algebra), Json::object()};
  const int n = spec.algebra.dim();
  auto transposeSparse = [n](const Json& m) { return matrixToSparse(sparseToMatrix(m, n, n).transpose()); };
  auto flipRigidity = [&](const Json& r) {
    Json out = r;
    if (r.contains("S")) out["S"] = transposeSparse(r.at("S"));
    return out;
  };
  for (auto it = spec.extras.begin(); it != spec.extras.end(); ++it) {
    if (it.key() == "antipode")
      d.extras["antipode"] = transposeSparse(it.value());
    else if (it.key() == "rigidity")
      d.extras["coRigidity"] = flipRigidity(it.value());
    else if (it.key() == "coRigidity")
      d.extras["rigidity"] = flipRigidity(it.value());
    else
      d.extras[it.key()] = it.value();
  }
  return d;
}

}  // namespace wba
