#pragma once

#include <stdexcept>
#include <string>

namespace weil {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operands belong to different Weil algebras.
struct mixed_algebra_error : error {
    using error::error;
};

/// Source/target objects do not line up (composition, oplus of maps, homs).
struct object_mismatch_error : error {
    using error::error;
};

/// A map that must be valid is not (nilpotency or a forbidden relation fails).
struct invalid_map_error : error {
    using error::error;
};

/// A diagram or cone is structurally broken.
struct malformed_diagram_error : error {
    using error::error;
};

struct shape_mismatch_error : error {
    using error::error;
};

}  // namespace weil
