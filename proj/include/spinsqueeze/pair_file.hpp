#pragma once

#include <string>

#include "spinsqueeze/short_time.hpp"

// Pair-coupling input files: JSON documents of the form
//   {"n": 4, "terms": [{"k": 1, "l": 2, "m": [[..],[..],[..]]}, ...]}
// with 1-based sites k != l and real 3x3 matrices m.

namespace spinsqueeze::pairfile {

// Parses a JSON document; throws invalid_pairset_error on malformed input.
shorttime::PairCouplingSet parse(const std::string& json_text);

// Reads and parses a file; missing/unreadable files also raise
// invalid_pairset_error (bad input, not an output-side I/O failure).
shorttime::PairCouplingSet load(const std::string& path);

std::string to_json(const shorttime::PairCouplingSet& ps);

} // namespace spinsqueeze::pairfile
