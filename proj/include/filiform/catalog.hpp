#pragma once

#include <iosfwd>

#include "filiform/json_io.hpp"

namespace filiform {

struct CatalogReport {
  int classes = 0;
  int records = 0;
  int unsupported = 0;
};

/// Reads algebra records as JSONL from `in` (blank lines skipped; lines
/// wrapping the record under "algebra", as emitted by orbit sampling, are
/// unwrapped), groups the decidable ones by canonical key (n, stratum,
/// formatted invariant components) and writes one JSONL line per class —
/// the canonical form as representative plus the member count — followed
/// by the undecidable records, passed through unmerged and flagged. All
/// records must share n.
CatalogReport run_catalog(std::istream& in, std::ostream& out);

}  // namespace filiform
