#include "invphi/gupta.hpp"

#include <algorithm>

namespace invphi {

std::vector<u64> admissible_primes(u64 m) {
    if (m == 0) throw std::domain_error("admissible_primes: m must be positive");
    std::vector<u64> out;
    for (u64 d : divisors(m))
        if (is_prime(d + 1)) out.push_back(d + 1);
    std::sort(out.begin(), out.end());
    return out;
}

GuptaBound gupta_bound(u64 m) {
    if (m != 1 && m % 2 != 0)
        throw std::domain_error("gupta_bound: A(m) is defined for m = 1 and even m only");
    GuptaBound b;
    b.m = m;
    b.admissible_primes = admissible_primes(m);
    Rational a(m, 1);
    for (u64 p : b.admissible_primes) a = a.times(p, p - 1);
    b.value = a;
    b.floor_value = a.floor();
    return b;
}

namespace {

constexpr u64 kSegment = u64(1) << 20;

}  // namespace

std::vector<u64> scan_preimage(u64 m) {
    if (m == 0) throw std::domain_error("scan_preimage: m must be positive");
    if (m == 1) return {1, 2};
    if (m % 2 != 0) return {};  // the image is 1 and even numbers

    const GuptaBound bound = gupta_bound(m);
    std::vector<u64> hits;

    // Windowed sieve over (m, floor A(m)]: divide out admissible primes,
    // accumulating phi; any n with a leftover factor has an inadmissible
    // prime and is skipped.
    std::vector<u64> rem, ph;
    for (u64 lo = m + 1; lo <= bound.floor_value; ) {
        const u64 hi = std::min(bound.floor_value, lo + kSegment - 1);
        const u64 width = hi - lo + 1;
        rem.assign(width, 0);
        ph.assign(width, 1);
        for (u64 i = 0; i < width; ++i) rem[i] = lo + i;
        for (u64 p : bound.admissible_primes) {
            for (u64 j = (lo + p - 1) / p * p; j <= hi; j += p) {
                u64& r = rem[j - lo];
                u64 pe = 1;
                while (r % p == 0) {
                    r /= p;
                    pe *= p;
                }
                ph[j - lo] *= pe / p * (p - 1);
            }
        }
        for (u64 i = 0; i < width; ++i)
            if (rem[i] == 1 && ph[i] == m) hits.push_back(lo + i);
        lo = hi + 1;
    }
    return hits;
}

}  // namespace invphi
