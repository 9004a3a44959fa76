#ifndef GINCALC_EXEC_HPP
#define GINCALC_EXEC_HPP

namespace gincalc {

/// Kernel selector. Every parallel kernel has a serial twin that computes
/// the identical result; tests compare the two and the bench target times
/// them. `parallel` falls back to the serial path when OpenMP is absent.
enum class ExecMode { serial, parallel };

}  // namespace gincalc

#endif
