#pragma once

#include <functional>

#include "secdt/mpc3/engine.hpp"

namespace secdt::mpc3 {

// Runs the same protocol body on three engine threads over in-process
// channels. The body must be deterministic given the ABB; dec() returns the
// same values on every party, so the caller usually keeps party 0's results.
// Exceptions from any party are rethrown.
void run_sim3(RingConfig ring, u64 seed,
              const std::function<void(Abb& abb, int party)>& body);

} // namespace secdt::mpc3
