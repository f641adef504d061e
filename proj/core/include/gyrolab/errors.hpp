#pragma once

#include <stdexcept>
#include <string>

namespace gyrolab {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input outside a carrier's domain (point on/outside the disk boundary,
// speed at or above c, index out of range).
struct domain_error : error {
    using error::error;
};

// Malformed file or string input: table JSON, CSV, word strings.
struct format_error : error {
    using error::error;
};

// A stated operation precondition does not hold for the given arguments.
struct precondition_error : error {
    using error::error;
};

// The carrier cannot support the requested operation (e.g. norm-ball
// sampling on a finite table with only the discrete metric).
struct unsupported_error : error {
    using error::error;
};

// A staged construction failed one of its per-step contracts; the message
// names the step and the failed check.
struct construction_error : error {
    using error::error;
};

} // namespace gyrolab
