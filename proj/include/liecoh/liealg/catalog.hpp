#pragma once

#include <map>
#include <string>
#include <vector>

#include "liecoh/liealg/lie_algebra.hpp"

namespace liecoh {

struct CatalogEntry {
  std::string name;
  std::vector<std::string> params;
  std::string description;
};

/// Every named algebra, in listing order.
const std::vector<CatalogEntry>& catalog_entries();

/// Builds a named algebra. Integer parameters ("n") must be whole numbers.
/// Throws UnknownName, MissingParam or BadParam; the result always
/// satisfies the Jacobi identity.
LieAlgebra catalog(const std::string& name, const std::map<std::string, Scalar>& params = {});

}  // namespace liecoh
