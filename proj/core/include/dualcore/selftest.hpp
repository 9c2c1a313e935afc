#pragma once

#include <ostream>

namespace dualcore::selftest {

// Runs the full acceptance suite, printing one pass/fail line per criterion.
// Returns the number of failed criteria (0 on a green run).
int run_acceptance(std::ostream& out);

} // namespace dualcore::selftest
