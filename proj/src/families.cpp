#include "invphi/families.hpp"

#include <algorithm>

#include "invphi/totient.hpp"

namespace invphi {

std::string family_name(Family f) {
    switch (f) {
        case Family::two_p: return "two_p";
        case Family::two_k_p: return "two_k_p";
        case Family::two_p_pow_k: return "two_p_pow_k";
        case Family::pow2: return "pow2";
        case Family::factorial: return "factorial";
    }
    return "?";
}

FamilyVerdict classify_2p(u64 p) {
    if (!is_prime(p)) throw std::domain_error("classify_2p: p must be prime");
    const u64 q = checked_add(checked_mul(2, p), 1);
    FamilyVerdict v;
    v.m = q - 1;
    v.family = Family::two_p;
    v.in_image = is_prime(q);
    if (v.in_image) {
        v.witness = q;
        v.reason = "2p+1 = " + std::to_string(q) + " prime";
    } else {
        v.reason = "2p+1 = " + std::to_string(q) + " composite";
    }
    return v;
}

SophieScan sophie_scan(u64 bound) {
    if (bound < 2) throw std::domain_error("sophie_scan: bound must be at least 2");
    SophieScan s;
    for (u64 p : primes_up_to(bound)) {
        const u64 q = 2 * p + 1;
        if (is_prime(q)) {
            s.sophie_germain.push_back(p);
            s.safe_primes.push_back(q);
            s.image_members.push_back(2 * p);
        } else {
            s.nonimage_members.push_back(2 * p);
        }
    }
    return s;
}

bool safe_prime_residue_check(u64 q) {
    if (q < 5 || q % 2 == 0 || !is_prime(q) || !is_prime((q - 1) / 2))
        throw std::domain_error("safe_prime_residue_check: q is not a safe prime");
    return q == 5 || q % 4 == 3;
}

FamilyVerdict classify_2pk(u64 p, u64 k) {
    if (p == 2 || p == 3 || !is_prime(p))
        throw std::domain_error("classify_2pk: p must be an odd prime other than 3");
    if (k == 0) throw std::domain_error("classify_2pk: k must be at least 1");
    const u64 m = checked_mul(2, checked_pow(p, k));
    const u64 t = checked_add(m, 1);
    FamilyVerdict v;
    v.m = m;
    v.family = Family::two_p_pow_k;
    v.in_image = is_prime(t);
    if (v.in_image) {
        // forced consequences of primality here
        if (t % 4 != 3 || k % 2 != 1)
            throw std::logic_error("classify_2pk: 2p^k+1 prime but residue/parity conditions fail");
        v.witness = t;
        v.reason = "2p^k+1 = " + std::to_string(t) + " prime, = 3 (mod 4), k odd";
    } else {
        v.reason = "2p^k+1 = " + std::to_string(t) + " composite";
    }
    return v;
}

FamilyVerdict classify_2_3k(u64 k) {
    const u64 witness = checked_pow(3, k + 1);
    FamilyVerdict v;
    v.m = checked_mul(2, checked_pow(3, k));
    v.family = Family::two_p_pow_k;
    v.in_image = true;
    v.witness = witness;
    v.reason = "phi(3^(k+1)) = 2*3^k";
    return v;
}

std::optional<u64> min_power2_exponent(u64 p, u64 max_l) {
    if (!is_prime(p) || p == 2)
        throw std::domain_error("min_power2_exponent: p must be an odd prime");
    for (u64 l = 1; l <= max_l; ++l) {
        const u64 t = checked_add(checked_mul(checked_pow(2, l), p), 1);
        if (is_prime(t)) return l;
    }
    return std::nullopt;
}

FamilyVerdict classify_2k_p(u64 p, u64 k) {
    if (!is_prime(p)) throw std::domain_error("classify_2k_p: p must be prime");
    if (k == 0) throw std::domain_error("classify_2k_p: k must be at least 1");
    const u64 q = 2 * p + 1;
    if (!is_prime(q))
        throw std::domain_error("classify_2k_p: requires 2p+1 prime, but " +
                                std::to_string(q) + " is composite");
    FamilyVerdict v;
    v.m = checked_mul(checked_pow(2, k), p);
    v.family = Family::two_k_p;
    v.in_image = true;
    v.witness = checked_mul(checked_pow(2, k), q);
    v.reason = "phi(2^k (2p+1)) = 2^k p";
    return v;
}

Pow2Preimage pow2_preimage(u64 k) {
    if (k == 0) throw std::domain_error("pow2_preimage: k must be at least 1");
    Pow2Preimage r;
    r.k = k;

    // Odd preimage candidate: product of F_i over set bits of k. It is the
    // unique candidate, and exists iff every needed F_i is prime.
    bool any_composite = false, any_unknown = false;
    for (u64 i = 0; (k >> i) != 0; ++i) {
        if (((k >> i) & 1) == 0) continue;
        switch (fermat_status(i)) {
            case Primality::composite: any_composite = true; break;
            case Primality::unknown: any_unknown = true; break;
            case Primality::prime: break;
        }
    }
    if (any_composite) {
        r.odd_count = 0;
    } else if (any_unknown) {
        throw unknown_status_error("pow2_preimage: a required Fermat primality status is unknown");
    } else {
        u64 witness = 1;
        for (u64 i = 0; (k >> i) != 0; ++i)
            if ((k >> i) & 1) witness = checked_mul(witness, fermat_number(i).value);
        r.odd_count = 1;
        r.odd_witness = witness;
    }

    // A(2^k) = 2^(k+1) * prod F_n/(F_n - 1) over prime Fermat numbers with
    // F_n - 1 | 2^k, i.e. 2^n <= k.
    std::vector<u64> prime_fermat;
    for (u64 n = 0; n < 64 && (u64(1) << n) <= k; ++n) {
        switch (fermat_status(n)) {
            case Primality::prime:
                prime_fermat.push_back(fermat_number(n).value);
                break;
            case Primality::composite:
                break;
            case Primality::unknown:
                throw unknown_status_error(
                    "pow2_preimage: a Fermat status needed for A(2^k) is unknown");
        }
    }
    Rational bound = Rational::pow2(k + 1);
    for (u64 f : prime_fermat) bound = bound.times(f, f - 1);
    r.bound = bound;
    return r;
}

namespace {

// exponent of p in n!
u64 legendre_exponent(u64 n, u64 p) {
    u64 e = 0;
    for (u64 q = p; q <= n; q *= p) {
        e += n / q;
        if (q > n / p) break;
    }
    return e;
}

}  // namespace

FactorialVerdict factorial_witness(u64 n) {
    if (n > 20) throw std::overflow_error("factorial_witness: n! exceeds 64 bits for n > 20");
    u64 target = 1;
    for (u64 i = 2; i <= n; ++i) target *= i;

    const std::vector<u64> odd_primes = n >= 3 ? primes_in_ap(1, 2, n) : std::vector<u64>{};
    u64 alpha = legendre_exponent(n, 2);
    std::vector<PrimePower> terms;
    for (u64 p : odd_primes) terms.push_back({p, legendre_exponent(n, p)});

    // subtract the exponents contributed by prod (p_i - 1)
    for (u64 p : odd_primes) {
        for (const auto& [q, e] : factorize(p - 1).factors) {
            if (q == 2) {
                alpha -= e;
            } else {
                auto it = std::find_if(terms.begin(), terms.end(),
                                       [q](const PrimePower& t) { return t.prime == q; });
                it->exponent -= e;  // q < p <= n, so q is among the terms
            }
        }
    }
    for (const auto& [p, e] : terms)
        if (e < 1)
            throw std::logic_error("factorial_witness: decomposition exponent below 1 for p = " +
                                   std::to_string(p));

    u64 witness = checked_pow(2, alpha + 1);
    for (const auto& [p, e] : terms) witness = checked_mul(witness, checked_pow(p, e + 1));
    if (phi(witness) != target)
        throw std::logic_error("factorial_witness: phi(witness) != n!");

    FactorialVerdict fv;
    fv.verdict = {target, Family::factorial, true, witness,
                  "n! = phi(2^(alpha+1) * prod p_i^(alpha_i+1))"};
    fv.decomposition = {n, alpha, std::move(terms)};
    return fv;
}

NonimageFamily s_set(u64 p, u64 bound) {
    if (p == 2 || !is_prime(p)) throw std::domain_error("s_set: p must be an odd prime");
    NonimageFamily fam;
    fam.p = p;
    const u64 r = (p - 1) / 2;
    for (u64 q : primes_up_to(bound)) {
        if (q % p != r || q <= r) continue;  // q = r itself gives 2q+1 = p, prime
        fam.members.push_back(q);
        fam.doubles.push_back(2 * q);
        fam.congruence_check.push_back((2 * q) % p == p - 1);
    }
    return fam;
}

std::vector<u64> odd_doubles_in_image(u64 bound) {
    std::vector<u64> out;
    for (u64 p : primes_up_to(bound))
        if (p % 4 == 3) out.push_back((p - 1) / 2);
    return out;
}

bool is_carmichael(u64 n) {
    if (n < 2) throw std::domain_error("is_carmichael: n must be at least 2");
    const Factorization f = factorize(n);
    if (f.factors.size() < 2) return false;  // primes and prime powers are out
    for (const auto& [q, e] : f.factors) {
        if (e > 1) return false;  // not square-free
        if ((n - 1) % (q - 1) != 0) return false;
    }
    return true;
}

bool no_carmichael_2p1(u64 bound) {
    for (u64 p : primes_up_to(bound))
        if (is_carmichael(2 * p + 1)) return false;
    return true;
}

}  // namespace invphi
