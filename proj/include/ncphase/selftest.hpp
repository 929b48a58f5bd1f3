#pragma once

#include <iosfwd>

namespace ncphase {

// Fixed-seed invariant battery across all modules; prints one line per
// check. mutate flips the sign of the sigma12 block before the covariance
// cross-checks (negative control). Returns 0 iff every check passes.
int run_selftest(std::ostream& out, unsigned seed, bool mutate);

}  // namespace ncphase
