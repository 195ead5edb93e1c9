#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wba/rigidity.hpp"
#include "wba/weak_bialgebra.hpp"

namespace wba {

struct CatalogEntry {
  std::string name;
  WeakBialgebra algebra;
  std::optional<Matrix> antipode;
  std::optional<RigidityStructure> rigidity;
  std::string description;
};

/// Known names: trivial, example1, example1-dual, example2-rigidity, bsz-dual:<N>, group:<G>,
/// dualgroup:<G>, adcross:<G>,<H>, crossed, matrix-hopf:<N>. Throws std::invalid_argument otherwise.
CatalogEntry catalog(const std::string& name);
/// The names exercised by `catalog list` and the test suites.
std::vector<std::string> catalogNames();

/// The comonoidal, non-monoidal minimal instance K^3 ⊗ T_2 with its idempotent P.
WeakBialgebra example1();
/// S_R : A_R → A_L of the rigidity example, in the wedge bases of example1().
Matrix example2SR();

}  // namespace wba
