#pragma once

#include <cstdint>
#include <iosfwd>

namespace crg {

// Seeded invariant suites over every module; prints one line per suite and
// returns the number of failures.
int run_selftest(std::uint64_t seed, std::ostream& os);

}  // namespace crg
