#pragma once

#include <functional>
#include <string>
#include <vector>

#include "wba/weak_bialgebra.hpp"

namespace wba {

/// One implication checked on one instance. The conclusion is only evaluated when the
/// hypotheses hold; otherwise conclusionHolds stays true and the check is vacuous.
struct TheoremCheck {
  std::string name;
  bool hypothesesMet = false;
  bool conclusionHolds = true;
  std::string detail;
};

class TheoremReport {
 public:
  void add(std::string name, bool hypotheses, const std::function<bool()>& conclusion, std::string detail = "");
  /// Unconditional statement.
  void add(std::string name, bool holds, std::string detail = "");
  void append(const TheoremReport& other);

  const std::vector<TheoremCheck>& checks() const { return checks_; }
  std::vector<TheoremCheck> violations() const;
  bool ok() const { return violations().empty(); }
  int applicable() const;

 private:
  std::vector<TheoremCheck> checks_;
};

/// The structural statements about counit projectors, monoidality axioms, fixed-point
/// subalgebras and their duals, evaluated exactly on one instance.
TheoremReport structuralTheoremSuite(const WeakBialgebra& a);

}  // namespace wba
