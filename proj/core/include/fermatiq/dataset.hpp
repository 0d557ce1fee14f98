#pragma once

#include <string>
#include <vector>

#include "fermatiq/newform.hpp"

namespace fermatiq {

/// Reads one newform data file:
///   { "d": 11,
///     "level": {"generator": [2,0], "exponent": 4},
///     "min_poly": [c0, c1, ...],
///     "eigenvalues": [ {"prime": "3.3.0.1", "a": [coeffs...]}, ... ] }
/// Prime labels are validated against the canonical labeling; the level
/// generator must be the canonical generator of a prime ideal. Throws
/// std::invalid_argument on schema or label violations.
NewformRecord load_newform(const std::string& path);

/// Loads every *.json file in the directory (sorted by file name).
/// Throws std::invalid_argument when the directory holds no newforms.
std::vector<NewformRecord> load_dataset(const std::string& dir);

/// Serializes a record in the ingestion schema (used by the fixture
/// generator and round-trip tests).
std::string newform_to_json(const NewformRecord& f);

}  // namespace fermatiq
