#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "wba/weak_bialgebra.hpp"

namespace wba {

using Json = nlohmann::ordered_json;

/// Malformed input; the CLI maps it to exit code 2.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structure-constant file: the weak bialgebra plus named extras (antipode, rigidity, ...).
struct SpecFile {
  WeakBialgebra algebra;
  Json extras = Json::object();
};

SpecFile parseSpec(const Json& doc);
SpecFile parseSpecText(const std::string& text);
/// "-" reads standard input.
SpecFile readSpecFile(const std::string& path);

Json specToJson(const SpecFile& spec);
/// Deterministic text: one line per sparse entry, scalar lists inline.
std::string formatJson(const Json& doc);
std::string emitSpec(const SpecFile& spec);

/// Algebra-only documents (dim, basis, mult, unit) used by the construction inputs.
Algebra parseAlgebra(const Json& doc);
Json algebraToJson(const Algebra& a);

/// Sparse [i, j, "c"] entries, c = coefficient of e_i in the image of e_j.
Json matrixToSparse(const Matrix& m);
Matrix sparseToMatrix(const Json& doc, int rows, int cols);
Json vectorToJson(const Vector& v);
Vector jsonToVector(const Json& doc, int n);
/// Dense rows of scalar strings.
Matrix denseToMatrix(const Json& doc);
Json matrixToDense(const Matrix& m);

/// The dual file: transposed structure, "antipode" transposed, "rigidity" and "coRigidity" swapped
/// with their maps transposed; other extras pass through unchanged.
SpecFile dualSpec(const SpecFile& spec);

}  // namespace wba
