#include "wba/report.hpp"

#include <sstream>

#include "wba/constructions.hpp"
#include "wba/separability.hpp"

namespace wba {

namespace {

void flatten(const Json& v, const std::string& path, std::ostringstream& out) {
  if (v.is_object() && !v.empty()) {
    for (auto it = v.begin(); it != v.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
  } else if (v.is_array() && !v.empty() && (v[0].is_object() || v[0].is_array())) {
    for (size_t i = 0; i < v.size(); ++i) flatten(v[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out << path << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
}

}  // namespace

Json witnessJson(const Witness& w, const std::vector<std::string>& labels) {
  Json j;
  j["law"] = w.law;
  j["indices"] = w.indices;
  Json names = Json::array();
  for (int i : w.indices) names.push_back(i >= 0 && i < static_cast<int>(labels.size()) ? labels[i] : std::to_string(i));
  j["labels"] = names;
  return j;
}

Json validationJson(const ValidationReport& v, const std::vector<std::string>& labels, int witnessLimit) {
  Json j;
  j["ok"] = v.ok;
  Json ws = Json::array();
  for (size_t i = 0; i < v.violations.size() && static_cast<int>(i) < witnessLimit; ++i) ws.push_back(witnessJson(v.violations[i], labels));
  j["violations"] = ws;
  return j;
}

Json axiomsJson(const AxiomReport& a, const std::vector<std::string>& labels, int witnessLimit) {
  Json j;
  j["weakBialgebra"] = a.weakBialgebra;
  j["leftMonoidal"] = a.leftMonoidal;
  j["rightMonoidal"] = a.rightMonoidal;
  j["leftComonoidal"] = a.leftComonoidal;
  j["rightComonoidal"] = a.rightComonoidal;
  j["monoidal"] = a.monoidal;
  j["comonoidal"] = a.comonoidal;
  j["bimonoidal"] = a.bimonoidal;
  j["bszL"] = a.bszL;
  j["bszR"] = a.bszR;
  j["minimal"] = a.minimal;
  j["cominimal"] = a.cominimal;
  Json dims;
  dims["AL"] = a.dimAL;
  dims["AR"] = a.dimAR;
  dims["ALcapAR"] = a.dimALcapAR;
  dims["ALL"] = a.dimsAssp[L][L];
  dims["ALR"] = a.dimsAssp[L][R];
  dims["ARL"] = a.dimsAssp[R][L];
  dims["ARR"] = a.dimsAssp[R][R];
  dims["NLL"] = a.dimsN[L][L];
  dims["NLR"] = a.dimsN[L][R];
  dims["NRL"] = a.dimsN[R][L];
  dims["NRR"] = a.dimsN[R][R];
  j["dims"] = dims;
  Json ws = Json::array();
  for (size_t i = 0; i < a.witnesses.size() && static_cast<int>(i) < witnessLimit * 6; ++i)
    ws.push_back(witnessJson(a.witnesses[i], labels));
  j["witnesses"] = ws;
  return j;
}

Json antipodeJson(const AntipodeStatus& s) {
  Json j;
  j["kind"] = kindName(s.kind);
  j["antiMultiplicative"] = s.antiMultiplicative;
  j["antiComultiplicative"] = s.antiComultiplicative;
  j["bijective"] = s.bijective;
  j["podeInverse"] = s.podeInverse;
  j["normalRigidity"] = s.normalRigidity;
  j["uniquenessVerified"] = s.uniquenessVerified;
  j["map"] = s.map ? matrixToSparse(*s.map) : Json(nullptr);
  return j;
}

Json theoremsJson(const TheoremReport& t) {
  Json j;
  j["checks"] = t.checks().size();
  j["applicable"] = t.applicable();
  Json vs = Json::array();
  for (const auto& c : t.violations()) {
    Json v;
    v["name"] = c.name;
    v["detail"] = c.detail;
    vs.push_back(v);
  }
  j["violations"] = vs;
  return j;
}

Json rigidityJson(const RigidityVerdict& v, const std::vector<std::string>& labels, int witnessLimit) {
  Json j;
  j["status"] = v.status();
  j["preconditions"] = v.preconditions;
  j["normalized"] = v.normalized;
  j["preRigid"] = v.preRigid;
  j["rigid"] = v.rigid;
  j["normalizable"] = v.normalizable;
  j["normal"] = v.normal;
  Json ws = Json::array();
  for (size_t i = 0; i < v.witnesses.size() && static_cast<int>(i) < witnessLimit; ++i) ws.push_back(witnessJson(v.witnesses[i], labels));
  j["witnesses"] = ws;
  return j;
}

Report buildReport(const SpecFile& spec, const ReportOptions& opts) {
  const WeakBialgebra& a = spec.algebra;
  Report r;
  Json& doc = r.doc;
  doc["dim"] = a.dim();
  doc["basis"] = a.labels();
  ValidationReport v = validate(a, opts.witnessLimit);
  doc["validation"] = validationJson(v, a.labels(), opts.witnessLimit);
  if (!v.ok) return r;
  doc["axioms"] = axiomsJson(decideAxioms(a), a.labels(), opts.witnessLimit);
  WeakHopfReport wh = classifyWeakHopf(a);
  doc["antipode"] = antipodeJson(wh.antipode);
  doc["weakHopf"] = wh.weakHopf;
  doc["ordinaryHopf"] = wh.ordinaryHopf;
  SigmaMapProperties sp = sigmaMapProperties(a);
  doc["sigmaMaps"] = {{"antiMultiplicative", sp.antiMultiplicative}, {"bijective", sp.bijective},
                      {"barredInverse", sp.barredInverse}};
  TheoremReport all;
  all.append(structuralTheoremSuite(a));
  all.append(wh.checks);
  all.append(antipodeTheoremSuite(a));
  all.append(sigmaMapSuite(a));
  all.append(separabilitySuite(a).checks);
  all.append(rigidityTheoremSuite(a));
  all.append(cominimalChecks(a));
  if (spec.extras.contains("rigidity")) {
    const Json& rj = spec.extras.at("rigidity");
    const int n = a.dim();
    RigidityStructure rs{rj.contains("S") ? sparseToMatrix(rj.at("S"), n, n) : Matrix::identity(n),
                         jsonToVector(rj.at("alpha"), n), jsonToVector(rj.at("beta"), n)};
    doc["rigidity"] = rigidityJson(verifyRigidity(a, rs), a.labels(), opts.witnessLimit);
  }
  doc["theorems"] = theoremsJson(all);
  r.ok = all.ok();
  return r;
}

std::string renderText(const Json& doc) {
  std::ostringstream out;
  flatten(doc, "", out);
  return out.str();
}

}  // namespace wba
