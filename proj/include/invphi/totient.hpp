#pragma once

// Euler's totient and its elementary laws, plus a definition-based oracle.

#include "invphi/arith.hpp"

namespace invphi {

struct TotientValue {
    u64 n;
    u64 phi;  // phi(1) = phi(2) = 1; even for n >= 3; < n for n >= 2
};

// phi(n) via the product formula over the prime factorization.
u64 phi(u64 n);
u64 phi(const Factorization& f);

// phi(p^a) = p^(a-1) * (p - 1); throws std::overflow_error if p^a does not fit.
u64 phi_prime_power(u64 p, u64 alpha);

// Count of x in [1, n] with gcd(x, n) = 1. Quadratic by construction; this is
// the oracle, not a performance path.
u64 brute_phi(u64 n);

// phi(n) for every n in [lo, hi], computed by a windowed sieve.
std::vector<u64> phi_window(u64 lo, u64 hi);

}  // namespace invphi
