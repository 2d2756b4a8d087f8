#pragma once

#include <string>

#include "framekit/generators.hpp"

// Instance-file format (JSON).  Complex scalars are [re, im] pairs; NaN and
// infinity are rejected on parse and never produced.  Canonical layout:
//
// {
//   "field": "complex",
//   "operators": { "K": { "rows": 3, "cols": 3, "entries": [[0.0,0.0], ...] } },
//   "frames":    { "F": { "dim": 3, "vectors": [ [[1.0,0.0], ...], ... ] } },
//   "pairs":     { "pair": { "left": "F1", "right": "F2" } },
//   "tolerance": { "rank_rel": 1e-9, "psd_rel": 1e-9, "residual_rel": 1e-9 }
// }
//
// operator entries are row-major.  Pair members must name frames with equal
// counts.  serialize() emits a canonical form (sorted keys, shortest
// round-trip doubles): parse -> serialize is idempotent after the first
// serialization.

namespace framekit {

Instance parse_instance(const std::string& json_text);
Instance load_instance(const std::string& path);

std::string serialize_instance(const Instance& inst, bool pretty = false);
void save_instance(const Instance& inst, const std::string& path,
                   bool pretty = false);

}  // namespace framekit
