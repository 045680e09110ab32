#pragma once

namespace suncs {

// Execution policy for the data-parallel kernels. Every parallel path has a
// serial twin with identical results (bit-identical where stated); tests and
// the bench target compare them.
enum class Exec { serial, parallel };

}  // namespace suncs
