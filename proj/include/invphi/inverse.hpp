#pragma once

// Constructive inverse-totient enumeration and the structural analysis of
// phi^-1(m): parity counts, residue classes, Lehmer candidates.

#include <map>
#include <optional>

#include "invphi/gupta.hpp"

namespace invphi {

struct PreimageReport {
    u64 m;
    std::vector<u64> elements;  // phi^-1(m), increasing
    bool in_image;
    u64 odd_count;   // O(m)
    u64 even_count;  // E(m)
    std::optional<GuptaBound> bound;  // absent for odd m > 1
    std::map<u64, std::vector<u64>> residue_classes;  // nonempty classes mod m
    std::vector<u64> lehmer_candidates;  // elements = 1 (mod m)
};

// Exactly phi^-1(m), assembled constructively: admissible primes are consumed
// in decreasing order, each skipped or included as a power p^a whose totient
// p^(a-1)(p-1) divides the remaining quotient. Agrees with scan_preimage
// everywhere both are feasible.
std::vector<u64> inverse_phi(u64 m);

// Every derived field (parity counts, residue classes, Lehmer candidates)
// comes from the element list itself.
PreimageReport preimage_report(u64 m);
PreimageReport preimage_report(u64 m, std::vector<u64> elements);

// All composite n <= bound with phi(n) | n-1. No example is known; a nonempty
// result would answer Lehmer's question.
std::vector<u64> lehmer_search(u64 bound);

}  // namespace invphi
