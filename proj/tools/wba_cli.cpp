// wba: command-line front end for the weak bialgebra library.
// Exit codes: 0 pass, 1 mathematical failure, 2 input failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "wba/antipode.hpp"
#include "wba/catalog.hpp"
#include "wba/constructions.hpp"
#include "wba/io.hpp"
#include "wba/repcat.hpp"
#include "wba/report.hpp"
#include "wba/rigidity.hpp"

using namespace wba;

namespace {

struct Options {
  std::string out;
  int witnessLimit = 1;
  std::string format = "json";
};

// A mathematical verdict that should end the command with exit code 1.
struct Verdict : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw ParseError("cannot write " + o.out);
  f << text;
}

void writeDoc(const Options& o, const Json& doc) { write(o, o.format == "text" ? renderText(doc) : formatJson(doc)); }

Json readJson(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path);
    ss << in.rdbuf();
  }
  try {
    return Json::parse(ss.str());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

const Json& need(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return doc.at(key);
}

RigidityStructure rigidityFrom(const Json& r, int n) {
  return RigidityStructure{r.contains("S") ? sparseToMatrix(r.at("S"), n, n) : Matrix::identity(n),
                           jsonToVector(need(r, "alpha"), n), jsonToVector(need(r, "beta"), n)};
}

Json rigidityTo(const RigidityStructure& r) {
  Json j;
  j["S"] = matrixToSparse(r.S);
  j["alpha"] = vectorToJson(r.alpha);
  j["beta"] = vectorToJson(r.beta);
  return j;
}

std::optional<Amalgamation> amalgamationFrom(const Json& doc, int n1, int n2) {
  if (!doc.contains("amalgamation")) return std::nullopt;
  Amalgamation am;
  for (const auto& g : doc.at("amalgamation")) am.generators.emplace_back(jsonToVector(need(g, "a1"), n1), jsonToVector(need(g, "a2"), n2));
  return am;
}

int cmdValidate(const Options& o, const std::string& path) {
  SpecFile s = readSpecFile(path);
  ValidationReport v = validate(s.algebra, o.witnessLimit);
  Json doc;
  doc["dim"] = s.algebra.dim();
  doc["validation"] = validationJson(v, s.algebra.labels(), o.witnessLimit);
  writeDoc(o, doc);
  return v.ok ? 0 : 1;
}

int cmdReport(const Options& o, const std::string& path) {
  Report r = buildReport(readSpecFile(path), ReportOptions{o.witnessLimit});
  writeDoc(o, r.doc);
  return r.ok ? 0 : 1;
}

int cmdDual(const Options& o, const std::string& path) {
  write(o, emitSpec(dualSpec(readSpecFile(path))));
  return 0;
}

int cmdAntipode(const Options& o, const std::string& path) {
  SpecFile s = readSpecFile(path);
  if (!validate(s.algebra).ok) throw Verdict("input is not a weak bialgebra");
  WeakHopfReport wh = classifyWeakHopf(s.algebra);
  Json doc;
  doc["antipode"] = antipodeJson(wh.antipode);
  doc["weakHopf"] = wh.weakHopf;
  if (auto pode = solvePode(s.algebra)) doc["pode"] = matrixToSparse(*pode);
  doc["theorems"] = theoremsJson(wh.checks);
  writeDoc(o, doc);
  return wh.antipode.kind == AntipodeStatus::Kind::None || !wh.checks.ok() ? 1 : 0;
}

int cmdRigidity(const Options& o, const std::string& sub, const std::vector<std::string>& files) {
  if (files.empty()) throw ParseError("missing input file");
  SpecFile s = readSpecFile(files[0]);
  const WeakBialgebra& a = s.algebra;
  const int n = a.dim();
  if (sub == "verify") {
    RigidityVerdict v = verifyRigidity(a, rigidityFrom(need(s.extras, "rigidity"), n));
    writeDoc(o, rigidityJson(v, a.labels(), o.witnessLimit));
    return v.preRigid ? 0 : 1;
  }
  if (sub == "twist") {
    const Json& t = need(s.extras, "twist");
    TwistPair tp{jsonToVector(need(t, "u"), n), jsonToVector(need(t, "ubar"), n)};
    RigidityStructure r;
    try {
      r = twist(a, rigidityFrom(need(s.extras, "rigidity"), n), tp);
    } catch (const std::invalid_argument& e) {
      throw Verdict(e.what());
    }
    SpecFile outSpec{a, s.extras};
    outSpec.extras.erase("twist");
    outSpec.extras["rigidity"] = rigidityTo(r);
    write(o, emitSpec(outSpec));
    return 0;
  }
  if (sub == "intertwine") {
    if (files.size() < 2) throw ParseError("intertwine needs two files");
    SpecFile s2 = readSpecFile(files[1]);
    if (!(s2.algebra == a)) throw ParseError("the two files describe different weak bialgebras");
    Intertwiners it = uniquenessIntertwiners(a, rigidityFrom(need(s.extras, "rigidity"), n),
                                             rigidityFrom(need(s2.extras, "rigidity"), n));
    Json doc;
    doc["u"] = vectorToJson(it.pair.u);
    doc["ubar"] = vectorToJson(it.pair.ubar);
    doc["table"] = theoremsJson(it.table);
    writeDoc(o, doc);
    return it.table.ok() ? 0 : 1;
  }
  if (sub == "example2") {
    Matrix sR = denseToMatrix(need(s.extras, "sR"));
    RigidityStructure r;
    try {
      r = buildExample2Rigidity(a, sR);
    } catch (const std::invalid_argument& e) {
      throw Verdict(e.what());
    }
    SpecFile outSpec{dual(a), Json::object()};
    outSpec.extras["rigidity"] = rigidityTo(r);
    write(o, emitSpec(outSpec));
    return 0;
  }
  throw ParseError("unknown rigidity subcommand " + sub);
}

int cmdConstruct(const Options& o, const std::string& sub, const std::string& path, const std::string& group,
                 const std::string& subgroup) {
  SpecFile result;
  try {
    if (sub == "adcross") {
      GroupPresentation g;
      try {
        g = GroupPresentation::byName(group).withSubgroup(subgroup);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
      }
      WeakHopfConstruction c = adCrossedProduct(g);
      result = SpecFile{c.algebra, Json::object()};
      result.extras["antipode"] = matrixToSparse(c.antipode);
    } else {
      if (path.empty()) throw ParseError("construct " + sub + " needs an input file");
      Json in = readJson(path);
      if (sub == "minimal") {
        Algebra a1 = parseAlgebra(need(in, "a1")), a2 = parseAlgebra(need(in, "a2"));
        Matrix p = denseToMatrix(need(in, "p"));
        result = SpecFile{minimalFromIdempotent(a1, a2, p, amalgamationFrom(in, a1.dim(), a2.dim())), Json::object()};
      } else if (sub == "minhopf") {
        Algebra a1 = parseAlgebra(need(in, "a1")), a2 = parseAlgebra(need(in, "a2"));
        WeakHopfConstruction c = minimalWeakHopf(a1, a2, jsonToVector(need(in, "omega"), a1.dim()),
                                                 denseToMatrix(need(in, "sR")), amalgamationFrom(in, a1.dim(), a2.dim()));
        result = SpecFile{c.algebra, Json::object()};
        result.extras["antipode"] = matrixToSparse(c.antipode);
      } else if (sub == "crossed") {
        CrossedProductData d;
        d.aL = parseAlgebra(need(in, "aL"));
        d.aR = parseAlgebra(need(in, "aR"));
        try {
          d.g = groupHopf(GroupPresentation::byName(need(in, "group").get<std::string>()));
        } catch (const std::invalid_argument& e) {
          throw ParseError(e.what());
        }
        for (const auto& m : need(in, "act")) d.act.push_back(denseToMatrix(m));
        d.omega = jsonToVector(need(in, "omega"), d.aL.dim());
        d.sR = denseToMatrix(need(in, "sR"));
        WeakHopfConstruction c = twoSidedCrossedProduct(d);
        result = SpecFile{c.algebra, Json::object()};
        result.extras["antipode"] = matrixToSparse(c.antipode);
      } else {
        throw ParseError("unknown construction " + sub);
      }
    }
  } catch (const ConstructionError& e) {
    Json doc;
    doc["error"] = e.what();
    doc["witness"] = witnessJson(e.witness, {});
    writeDoc(o, doc);
    return 1;
  }
  write(o, emitSpec(result));
  return 0;
}

int cmdCatalog(const Options& o, const std::string& sub, const std::string& name) {
  if (sub == "list") {
    Json doc = Json::array();
    for (const auto& nm : catalogNames()) doc.push_back(nm);
    if (o.format == "text") {
      std::string text;
      for (const auto& nm : catalogNames()) text += nm + "\n";
      write(o, text);
    } else {
      write(o, formatJson(doc));
    }
    return 0;
  }
  if (sub != "emit") throw ParseError("unknown catalog subcommand " + sub);
  CatalogEntry e;
  try {
    e = catalog(name);
  } catch (const std::invalid_argument& ex) {
    throw ParseError(ex.what());
  }
  SpecFile s{e.algebra, Json::object()};
  if (e.antipode) s.extras["antipode"] = matrixToSparse(*e.antipode);
  if (e.rigidity) s.extras["rigidity"] = rigidityTo(*e.rigidity);
  write(o, emitSpec(s));
  return 0;
}

int cmdRep(const Options& o, const std::string& sub, const std::string& path) {
  SpecFile s = readSpecFile(path);
  if (!validate(s.algebra).ok) throw Verdict("input is not a weak bialgebra");
  auto a = std::make_shared<const WeakBialgebra>(s.algebra);
  Json doc;
  bool ok = true;
  if (sub == "tensor") {
    ModuleRep reg = regularModule(a);
    TensorModule t = tensorModule(reg, reg);
    doc["regularDim"] = reg.dim;
    doc["tensorDim"] = t.module.dim;
    doc["truncated"] = t.module.dim < reg.dim * reg.dim;
    UnitModule e = unitModule(a);
    doc["unitTensorDim"] = tensorModule(e.module, e.module).module.dim;
    bool assoc = tensorAssociative(e.module, reg, e.module);
    doc["associative"] = assoc;
    ok = assoc;
  } else if (sub == "unit") {
    UnitModule e = unitModule(a);
    doc["dim"] = e.module.dim;
    doc["endomorphisms"] = intertwiners(e.module, e.module).basis.size();
    doc["checks"] = theoremsJson(e.checks);
    ok = e.checks.ok();
  } else if (sub == "end") {
    EndOfUnit e = endOfUnit(a);
    doc["unitEndomorphisms"] = e.ends.basis.size();
    doc["unitComoduleEndomorphisms"] = e.comoduleEnds.basis.size();
    doc["checks"] = theoremsJson(e.checks);
    ok = e.checks.ok();
  } else if (sub == "coherence") {
    CoherenceMaps c = coherenceMaps(regularModule(a));
    doc["leftUnitorLinear"] = c.leftLinear;
    doc["rightUnitorLinear"] = c.rightLinear;
    doc["checks"] = theoremsJson(c.checks);
    ok = c.checks.ok();
  } else {
    throw ParseError("unknown rep subcommand " + sub);
  }
  writeDoc(o, doc);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with finite-dimensional weak bialgebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--out", o.out, "Write the result to this path");
  app.add_option("--witness-limit", o.witnessLimit, "Witnesses reported per failed law")->check(CLI::PositiveNumber);
  app.add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  std::string file, sub, name, group, subgroup;
  std::vector<std::string> files;
  auto* validateCmd = app.add_subcommand("validate", "Check the weak bialgebra axioms");
  validateCmd->add_option("file", file)->required();
  auto* reportCmd = app.add_subcommand("report", "Axiom flags, antipode and theorem checks");
  reportCmd->add_option("file", file)->required();
  auto* dualCmd = app.add_subcommand("dual", "Emit the dual weak bialgebra");
  dualCmd->add_option("file", file)->required();
  auto* antipodeCmd = app.add_subcommand("antipode", "Solve for the antipode");
  antipodeCmd->add_option("file", file)->required();
  auto* rigidityCmd = app.add_subcommand("rigidity", "verify | twist | intertwine | example2");
  rigidityCmd->add_option("sub", sub)->required()->check(CLI::IsMember({"verify", "twist", "intertwine", "example2"}));
  rigidityCmd->add_option("files", files)->required();
  auto* constructCmd = app.add_subcommand("construct", "minimal | minhopf | crossed | adcross");
  constructCmd->add_option("sub", sub)->required()->check(CLI::IsMember({"minimal", "minhopf", "crossed", "adcross"}));
  constructCmd->add_option("file", file);
  constructCmd->add_option("--group", group, "Group for adcross (Z<n>, S3, V4)");
  constructCmd->add_option("--subgroup", subgroup, "Normal subgroup for adcross (1, A3, Z<d>, or the group)");
  auto* catalogCmd = app.add_subcommand("catalog", "list | emit <name>");
  catalogCmd->add_option("sub", sub)->required()->check(CLI::IsMember({"list", "emit"}));
  catalogCmd->add_option("name", name);
  auto* repCmd = app.add_subcommand("rep", "tensor | unit | end | coherence");
  repCmd->add_option("sub", sub)->required()->check(CLI::IsMember({"tensor", "unit", "end", "coherence"}));
  repCmd->add_option("file", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validateCmd) return cmdValidate(o, file);
    if (*reportCmd) return cmdReport(o, file);
    if (*dualCmd) return cmdDual(o, file);
    if (*antipodeCmd) return cmdAntipode(o, file);
    if (*rigidityCmd) return cmdRigidity(o, sub, files);
    if (*constructCmd) {
      if (sub == "adcross" && (group.empty() || subgroup.empty())) throw ParseError("adcross needs --group and --subgroup");
      return cmdConstruct(o, sub, file, group, subgroup);
    }
    if (*catalogCmd) {
      if (sub == "emit" && name.empty()) throw ParseError("catalog emit needs a name");
      return cmdCatalog(o, sub, name);
    }
    if (*repCmd) return cmdRep(o, sub, file);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Verdict& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return 1;
  } catch (const ConstructionError& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
