#pragma once

namespace ospnil {

/// Serial is the reference path used by tests; Parallel runs the OpenMP kernels.
/// Both produce identical, deterministically ordered results.
enum class ExecPolicy { Serial, Parallel };

/// Worker threads OpenMP would use (1 when built without OpenMP).
int max_threads();

}  // namespace ospnil
