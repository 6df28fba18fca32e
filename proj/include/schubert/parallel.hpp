#pragma once

namespace schubert {

/// Upper bound on worker threads used inside the compute modules. Results
/// never depend on this value; only wall time does. Defaults to 1.
unsigned max_threads() noexcept;
void set_max_threads(unsigned n) noexcept;

}  // namespace schubert
