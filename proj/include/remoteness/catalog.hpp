#pragma once

#include <optional>
#include <string>
#include <vector>

#include "remoteness/group.hpp"

namespace rem {

/// One transitive group shipped in the data file: generators plus the
/// expected order and remoteness. Entries with expected remoteness n-1 are
/// the table rows; the rest are controls whose remoteness must be n.
struct CatalogEntry {
  int degree = 0;
  int index = 0;              // listing index; best-effort where ambiguous
  long long order = 0;        // verified against the closure at load
  std::string note;           // cyclic | regular-noncyclic-sylow2 | dihedral |
                              // odd-order | paley | computed
  int expected_remoteness = 0;
  std::vector<Perm> generators;
  std::string provenance;     // free-text from the data file header

  bool in_table() const { return expected_remoteness == degree - 1; }
  std::string label() const {
    return "(" + std::to_string(degree) + "," + std::to_string(index) + ")";
  }
};

std::string default_catalog_path();

/// Parses the data file and verifies each entry's order and transitivity;
/// any mismatch aborts with the offending label.
std::vector<CatalogEntry> load_catalog(const std::string& path = default_catalog_path());

struct TableRow {
  CatalogEntry entry;
  int computed = 0;
  std::string method;
  std::optional<Perm> witness;
  bool ok = false;
};

struct TableReport {
  std::vector<TableRow> rows;
  bool all_ok = false;
  int degree6_groups = 0;
  bool degree6_none_at_n_minus_1 = true;

  std::string text() const;
};

/// Recomputes the remoteness of every catalog entry and compares it with the
/// expectation; also reports the degree-6 claim (no transitive group of
/// degree 6 has remoteness 5) over the shipped degree-6 entries.
TableReport verify_table(const std::vector<CatalogEntry>& entries, unsigned jobs = 0);

}  // namespace rem
