#pragma once

// Gupta's bound A(m), the admissible prime filter, and the scan-based
// membership decision.
//
// A(m) = m * prod over primes p with p-1 | m of p/(p-1). Every n with
// phi(n) = m satisfies m < n <= A(m), and every prime factor p of such
// an n has p-1 | m.

#include "invphi/arith.hpp"

namespace invphi {

struct GuptaBound {
    u64 m;
    std::vector<u64> admissible_primes;  // {p prime : p-1 | m}, increasing
    Rational value;                      // exact A(m), > m, not always integral
    u64 floor_value;
};

// All primes p with (p-1) | m: add 1 to each divisor of m and test primality.
std::vector<u64> admissible_primes(u64 m);

// Defined for m = 1 and even m; throws std::domain_error for odd m > 1.
GuptaBound gupta_bound(u64 m);

// phi^-1(m) by scanning (m, floor A(m)], skipping any n with an inadmissible
// prime factor. m = 1 returns {1, 2}; odd m > 1 returns {} without scanning.
std::vector<u64> scan_preimage(u64 m);

}  // namespace invphi
