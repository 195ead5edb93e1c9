#include <gtest/gtest.h>

#include "wba/catalog.hpp"
#include "wba/io.hpp"
#include "wba/report.hpp"

using namespace wba;

TEST(Io, EmitParseRoundTrip) {
  for (const auto& nm : catalogNames()) {
    SpecFile s{catalog(nm).algebra, Json::object()};
    const std::string text = emitSpec(s);
    SpecFile back = parseSpecText(text);
    EXPECT_EQ(back.algebra, s.algebra) << nm;
    EXPECT_EQ(emitSpec(back), text) << nm;
  }
}

TEST(Io, DualSpecTransposesAntipode) {
  CatalogEntry e = catalog("bsz-dual:2");
  SpecFile s{e.algebra, Json::object()};
  s.extras["antipode"] = matrixToSparse(*e.antipode);
  SpecFile d = dualSpec(s);
  EXPECT_EQ(d.algebra, dual(e.algebra));
  EXPECT_EQ(sparseToMatrix(d.extras["antipode"], 4, 4), e.antipode->transpose());
  EXPECT_EQ(emitSpec(dualSpec(d)), emitSpec(s));
}

TEST(Io, MalformedInputIsAParseError) {
  EXPECT_THROW(parseSpecText("{"), ParseError);
  EXPECT_THROW(parseSpecText(R"({"dim": 1})"), ParseError);
  std::string text = emitSpec({catalog("group:Z2").algebra, Json::object()});
  Json doc = Json::parse(text);
  doc["unit"] = {"1", "x"};
  EXPECT_THROW(parseSpec(doc), ParseError);
  doc = Json::parse(text);
  doc["dim"] = 3;
  EXPECT_THROW(parseSpec(doc), ParseError);
}

TEST(Io, SparseAndDenseMatrices) {
  Matrix m = Matrix::fromRows(2, {{1, Scalar(-1, 3)}, {0, 2}});
  EXPECT_EQ(sparseToMatrix(matrixToSparse(m), 2, 2), m);
  EXPECT_EQ(denseToMatrix(matrixToDense(m)), m);
  EXPECT_EQ(jsonToVector(vectorToJson({1, Scalar(2, 5)}), 2), (Vector{1, Scalar(2, 5)}));
}

TEST(Report, FlagsForExample1) {
  Report r = buildReport({example1(), Json::object()});
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.doc["axioms"]["comonoidal"], true);
  EXPECT_EQ(r.doc["axioms"]["leftMonoidal"], false);
  EXPECT_NE(renderText(r.doc).find("comonoidal"), std::string::npos);
}

TEST(Report, InvalidInputIsNotOk) {
  WeakBialgebra a = catalog("group:Z2").algebra;
  std::vector<Matrix> cop{a.coproduct(0), a.coproduct(1)};
  Report r = buildReport({WeakBialgebra(a.algebra(), cop, {1, 0}), Json::object()});
  EXPECT_FALSE(r.ok);
}
