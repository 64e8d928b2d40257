#pragma once

#include <stdexcept>

namespace domipoly {

// Malformed textual input (graph files, graph6 strings, polynomial text).
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A computation was refused because the input exceeds a configured order
// cap (brute force, canonicalization, enumeration). Refusal is explicit so
// callers never get a silent multi-hour run.
struct limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace domipoly
