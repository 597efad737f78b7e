#pragma once

// Umbrella header: exact predimension calculus over finite graphs, strong
// extensions and closures, free amalgamation and finite generic stages, the
// two-sorted anti-collapse class, support systems, finite-depth closure
// types, and the seeded property harness.

#include "genera/fuzz.hpp"
