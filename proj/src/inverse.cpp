#include "invphi/inverse.hpp"

#include <algorithm>
#include <set>

#include "invphi/totient.hpp"

namespace invphi {

namespace {

// Primes in decreasing order; each inclusion divides the quotient by
// phi(p^a) >= 1 and moves past p, so the recursion terminates.
void assemble(u64 quotient, std::size_t idx, u64 product,
              const std::vector<u64>& primes_desc, std::set<u64>& found) {
    if (quotient == 1) found.insert(product);
    for (std::size_t i = idx; i < primes_desc.size(); ++i) {
        const u64 p = primes_desc[i];
        if (p - 1 > quotient) continue;
        u64 tot = p - 1;  // phi(p^a), a = 1, 2, ...
        u64 power = p;
        while (tot <= quotient) {
            if (quotient % tot == 0)
                assemble(quotient / tot, i + 1, checked_mul(product, power), primes_desc, found);
            if (tot > quotient / p) break;
            tot *= p;
            power = checked_mul(power, p);
        }
    }
}

}  // namespace

std::vector<u64> inverse_phi(u64 m) {
    if (m == 0) throw std::domain_error("inverse_phi: m must be positive");
    if (m > 1 && m % 2 != 0) return {};
    std::vector<u64> primes = admissible_primes(m);
    std::reverse(primes.begin(), primes.end());
    std::set<u64> found;
    assemble(m, 0, 1, primes, found);
    return {found.begin(), found.end()};
}

PreimageReport preimage_report(u64 m) { return preimage_report(m, inverse_phi(m)); }

PreimageReport preimage_report(u64 m, std::vector<u64> elements) {
    PreimageReport r;
    r.m = m;
    r.elements = std::move(elements);
    r.in_image = !r.elements.empty();
    r.odd_count = r.even_count = 0;
    for (u64 n : r.elements) (n % 2 ? r.odd_count : r.even_count)++;
    if (m == 1 || m % 2 == 0) r.bound = gupta_bound(m);
    for (u64 n : r.elements) {
        r.residue_classes[n % m].push_back(n);
        if (n % m == 1 % m) r.lehmer_candidates.push_back(n);
    }
    return r;
}

std::vector<u64> lehmer_search(u64 bound) {
    if (bound < 2) throw std::domain_error("lehmer_search: bound must be at least 2");
    std::vector<u64> hits;
    constexpr u64 kSegment = u64(1) << 18;
    for (u64 lo = 2; lo <= bound; ) {
        const u64 hi = std::min(bound, lo + kSegment - 1);
        const std::vector<u64> ph = phi_window(lo, hi);
        for (u64 n = lo; n <= hi; ++n) {
            const u64 t = ph[n - lo];
            // phi(n) = n-1 exactly when n is prime; Lehmer asks for composites
            if (t != n - 1 && (n - 1) % t == 0) hits.push_back(n);
        }
        lo = hi + 1;
    }
    return hits;
}

}  // namespace invphi
