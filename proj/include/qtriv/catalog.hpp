#pragma once

// Built-in structures, link diagrams and cocycles, addressed by name.

#include <stdexcept>
#include <string>
#include <vector>

#include "qtriv/algebra.hpp"
#include "qtriv/cohomology.hpp"
#include "qtriv/links.hpp"

namespace qtriv {

class CatalogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Names: R<n> (dihedral), trivial<n>, Q8-conj, S3-conj, Q8-core, S3-core,
// alex-mod<k> (Z_k[t^{±1}]/(1-t)^2), alex<m>-t<t>-s<s> (Alexander biquandle),
// and the fixed tables qt4, alex4-t1-s3, qt5, qt4-mirror.
FiniteBiquandle catalog_structure(const std::string& name);
// A fixed finite selection of the names above, used for exhaustive checks.
std::vector<std::string> catalog_structure_names();

std::vector<std::string> catalog_link_names();
// The 18 two- and three-component links of the invariant table, in table order.
std::vector<std::string> table_link_names();
std::string catalog_link_code(const std::string& name);
LinkDiagram catalog_link(const std::string& name);

struct CatalogCocycle {
  std::string structure;
  Cochain2 phi;
};
std::vector<std::string> catalog_cocycle_names();
CatalogCocycle catalog_cocycle(const std::string& name);

}  // namespace qtriv
