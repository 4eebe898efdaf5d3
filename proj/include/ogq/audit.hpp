#pragma once

namespace ogq::audit {

/// Clears the floating-point status flags of the calling thread.
void begin();

/// True when a floating-point operation on this thread raised any status
/// flag (inexact, overflow, underflow, invalid, divide-by-zero) since begin().
bool floating_point_touched();

}  // namespace ogq::audit
