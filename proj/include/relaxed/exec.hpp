#pragma once

namespace relaxed {

// Selects between the OpenMP kernels and the serial reference path. Both
// must produce identical results; the serial path exists for testing.
enum class Exec { serial, parallel };

}  // namespace relaxed
