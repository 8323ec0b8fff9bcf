#pragma once

#include <string>
#include <vector>

#include "qham/linalg.hpp"

namespace qham {

// Catalog of local models: smooth affine spherical varieties of a reductive
// group, used as the oracle of the vertex-wise sphericity check.  A variety
// is recorded by the isomorphism type of its group (the "levi": classified
// simple components plus the invariant factors of the character lattice over
// each component's root lattice) together with the Hilbert basis of its
// weight monoid, written in adapted coordinates: the pairings of each basis
// element with the component simple coroots, components in canonical order,
// nodes in canonical order.  A smooth affine spherical variety is determined
// by its weight monoid, so (levi, basis) is a faithful key.

struct LeviComponent {
  std::string family = "A";
  int rank = 0;
  std::vector<Int> invariants;

  bool operator==(const LeviComponent&) const = default;
};

// Canonical catalog order: by family string, then rank, then invariants.
bool levi_component_less(const LeviComponent& a, const LeviComponent& b);

struct CatalogEntry {
  std::string name;
  std::vector<LeviComponent> levi;  // canonically sorted
  // Hilbert basis rows over the concatenated component nodes; entries are
  // the coroot pairings of the basis vectors, hence nonnegative integers.
  IMat basis;
  // Optional: spherical roots of the model as coefficient rows over the
  // concatenated levi simple roots; empty when not recorded.
  IMat spherical_roots;
  std::string note;
};

class LocalModelCatalog {
 public:
  // Parses and validates a catalog document:
  //   { "entries": [ { "name": str, "levi": [{"family","rank","invariants"}],
  //                    "basis": [[int,…],…], "spherical_roots": [[int,…],…]?,
  //                    "note": str? }, … ] }
  // Component lists are sorted canonically on load (basis and spherical-root
  // columns are permuted along).  Validation rejects duplicate names, ragged
  // or negative basis rows, and any entry whose basis is not the Hilbert
  // basis of the saturated monoid it generates (recomputed exactly).  Throws
  // std::invalid_argument with a diagnostic naming the offending entry.
  static LocalModelCatalog from_json_text(const std::string& text);

  // Reads the file and delegates to from_json_text; throws
  // std::runtime_error when the file cannot be read.
  static LocalModelCatalog from_file(const std::string& path);

  // The compiled-in default catalog.
  static const LocalModelCatalog& bundled();

  // The bundled catalog, unless the environment variable QHAM_CATALOG names
  // a file, which is then loaded instead.
  static LocalModelCatalog load_default();

  const std::vector<CatalogEntry>& entries() const { return entries_; }

  // Indices of the entries whose levi equals the given canonically sorted
  // component list.
  std::vector<int> entries_for(const std::vector<LeviComponent>& levi) const;

 private:
  std::vector<CatalogEntry> entries_;
};

// All permutations p of {0..n-1} with gcm[p[i]][p[j]] == gcm[i][j]: the
// symmetries of a Cartan matrix, enumerated by backtracking.
std::vector<std::vector<int>> gcm_automorphisms(const IMat& gcm);

}  // namespace qham
