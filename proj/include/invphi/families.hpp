#pragma once

// Family-specific membership results: 2p, 2^k*p, 2p^k, powers of two via
// Fermat numbers, factorials, the nonimage sets S(p), Sophie Germain scans,
// Korselt checks.

#include <optional>
#include <string>

#include "invphi/arith.hpp"

namespace invphi {

enum class Family { two_p, two_k_p, two_p_pow_k, pow2, factorial };

std::string family_name(Family f);

struct FamilyVerdict {
    u64 m;  // the target value
    Family family;
    bool in_image;
    std::optional<u64> witness;  // phi(witness) = m when present
    std::string reason;
};

// 2p is in the image iff 2p+1 is prime; witness 2p+1.
FamilyVerdict classify_2p(u64 p);

struct SophieScan {
    std::vector<u64> sophie_germain;    // p <= bound with 2p+1 prime
    std::vector<u64> safe_primes;       // the corresponding 2p+1
    std::vector<u64> image_members;     // 2p for Sophie Germain p
    std::vector<u64> nonimage_members;  // 2p for the remaining primes p <= bound
};

SophieScan sophie_scan(u64 bound);

// A safe prime q is 5 or q = 3 (mod 4). Throws std::domain_error unless q is
// a safe prime (q and (q-1)/2 both prime).
bool safe_prime_residue_check(u64 q);

// 2p^k for odd prime p != 3, k >= 1: in the image iff 2p^k+1 is prime; in
// that case 2p^k+1 = 3 (mod 4) and k is odd necessarily.
FamilyVerdict classify_2pk(u64 p, u64 k);

// 2*3^k is always in the image, witness 3^(k+1).
FamilyVerdict classify_2_3k(u64 k);

// Smallest l <= max_l with 2^l * p + 1 prime, if any. Primes with no such l
// at all exist, so absence is an ordinary outcome.
std::optional<u64> min_power2_exponent(u64 p, u64 max_l);

// Requires 2p+1 prime; then phi(2^k (2p+1)) = 2^k p, witness 2^k (2p+1).
FamilyVerdict classify_2k_p(u64 p, u64 k);

struct Pow2Preimage {
    u64 k;
    u64 odd_count;                   // O(2^k), always 0 or 1
    std::optional<u64> odd_witness;  // product of F_i over the set bits of k
    Rational bound;                  // A(2^k) via the Fermat product formula
};

// Writes k in binary; the unique odd preimage candidate of 2^k is the product
// of F_i over set bits i, and it exists iff every such F_i is prime. Throws
// unknown_status_error if a needed Fermat status is undecided.
Pow2Preimage pow2_preimage(u64 k);

// n! = 2^alpha * prod p_i^{alpha_i} (p_i - 1) over odd primes p_i <= n,
// with every alpha_i >= 1.
struct FactorialDecomposition {
    u64 n;
    u64 alpha;
    std::vector<PrimePower> odd_terms;  // (p_i, alpha_i)
};

struct FactorialVerdict {
    FamilyVerdict verdict;  // witness 2^(alpha+1) * prod p_i^(alpha_i+1)
    FactorialDecomposition decomposition;
};

FactorialVerdict factorial_witness(u64 n);

struct NonimageFamily {
    u64 p;                              // odd prime
    std::vector<u64> members;           // primes q = (p-1)/2 (mod p), q > (p-1)/2
    std::vector<u64> doubles;           // 2q, none in the image
    std::vector<bool> congruence_check; // 2q = -1 (mod p), per member
};

// S(p) up to bound: every member q has 2q+1 = p(1+2k) composite, so 2q is
// not in the image.
NonimageFamily s_set(u64 p, u64 bound);

// Odd s with 2s in the image, one for each prime p <= bound, p = 3 (mod 4):
// s = (p-1)/2 and phi(p) = 2s.
std::vector<u64> odd_doubles_in_image(u64 bound);

// Korselt: composite, square-free, and q-1 | n-1 for every prime q | n.
bool is_carmichael(u64 n);

// True iff no 2p+1 with prime p <= bound is a Carmichael number.
bool no_carmichael_2p1(u64 bound);

}  // namespace invphi
