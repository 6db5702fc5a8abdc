#pragma once

#include <gmpxx.h>

namespace partpeaks {

// Exact arbitrary-precision integer; every count and coefficient in the
// library uses this type.
using Integer = mpz_class;

}  // namespace partpeaks
