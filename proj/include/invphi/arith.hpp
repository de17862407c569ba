#pragma once

// Exact integer arithmetic services: primality, factorization, divisor and
// prime enumeration, Fermat numbers, exact rationals.
//
// All public integers are unsigned 64-bit. Any operation whose result would
// exceed the width throws std::overflow_error instead of wrapping.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace invphi {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Thrown when a Fermat primality status is needed but not known
// (no F_n with n >= 13 has a decided status here).
struct unknown_status_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

u64 checked_add(u64 a, u64 b);
u64 checked_mul(u64 a, u64 b);
u64 checked_pow(u64 base, u64 exp);

u64 gcd(u64 a, u64 b);

// Deterministic for the full 64-bit range (fixed Miller-Rabin witness set).
bool is_prime(u64 n);

// (base^exp) mod m, m >= 1
u64 pow_mod(u64 base, u64 exp, u64 m);

struct PrimePower {
    u64 prime;
    u64 exponent;  // >= 1
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// n = p_1^a_1 ... p_s^a_s with p_1 < p_2 < ...; value 1 has no factors.
struct Factorization {
    u64 value = 1;
    std::vector<PrimePower> factors;
};

// Trial division by sieved small primes, then Pollard-Brent rho for larger
// cofactors. Exact for all 64-bit n.
Factorization factorize(u64 n);

// All divisors of f.value in increasing order.
std::vector<u64> divisors(const Factorization& f);
std::vector<u64> divisors(u64 n);

// All primes <= limit, increasing.
std::vector<u64> primes_up_to(u64 limit);

// All primes p <= bound with p = a (mod n), increasing.
// Throws std::domain_error unless gcd(a, n) = 1.
std::vector<u64> primes_in_ap(u64 a, u64 n, u64 bound);

enum class Primality { prime, composite, unknown };

// F_n = 2^(2^n) + 1
struct FermatStatus {
    u64 index;
    u64 value;
    Primality primality;
};

// Status without the value: computed where F_n fits the machine word,
// table data for indices 5..12 (all composite), unknown above.
Primality fermat_status(u64 index);

// Throws std::overflow_error when F_index does not fit in 64 bits (index >= 6).
FermatStatus fermat_number(u64 index);

// Exact reduced fraction, num >= 0, den >= 1. The reduced numerator and
// denominator of A(m) outgrow 64 bits already at m = 840 even though the
// value stays small, so the representation is arbitrary precision; the
// 64-bit boundary is enforced only where an integer leaves the type.
class Rational {
  public:
    using bigint = boost::multiprecision::cpp_int;

    Rational() = default;
    Rational(u64 num, u64 den);  // reduces; den = 0 is a domain error

    static Rational pow2(u64 exponent);

    bigint numerator() const;
    bigint denominator() const;
    // 64-bit views; throw std::overflow_error when the part does not fit
    u64 num() const;
    u64 den() const;

    bool integral() const;
    u64 floor() const;  // throws std::overflow_error when above 64 bits

    Rational times(u64 n, u64 d) const;
    Rational times(const Rational& r) const;

    // "455/8", or "15" when integral
    std::string str() const;

    friend bool operator==(const Rational&, const Rational&) = default;

    // exact comparisons against an integer
    bool less_equal(u64 x) const;
    bool greater(u64 x) const { return !less_equal(x); }

  private:
    boost::multiprecision::cpp_rational value_{0u};
};

}  // namespace invphi
