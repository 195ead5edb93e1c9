#pragma once

#include <string>
#include <vector>

#include "wba/antipode.hpp"
#include "wba/io.hpp"
#include "wba/rigidity.hpp"
#include "wba/theorems.hpp"

namespace wba {

struct ReportOptions {
  int witnessLimit = 1;
};

Json witnessJson(const Witness& w, const std::vector<std::string>& labels);
Json validationJson(const ValidationReport& v, const std::vector<std::string>& labels, int witnessLimit);
Json axiomsJson(const AxiomReport& a, const std::vector<std::string>& labels, int witnessLimit);
Json antipodeJson(const AntipodeStatus& s);
/// Check counts plus every violated statement.
Json theoremsJson(const TheoremReport& t);
Json rigidityJson(const RigidityVerdict& v, const std::vector<std::string>& labels, int witnessLimit);

struct Report {
  Json doc;
  bool ok = false;  // validates and no theorem violations
};
/// Validation, axiom flags, antipode status, weak Hopf classification and every theorem suite.
Report buildReport(const SpecFile& spec, const ReportOptions& opts = {});

/// "path: value" lines, one per leaf, in document order.
std::string renderText(const Json& doc);

}  // namespace wba
