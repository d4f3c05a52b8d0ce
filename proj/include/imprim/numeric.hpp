#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace imprim {

struct PrimePower {
    long prime;
    int exponent;
    long value;  // prime^exponent
};

/// Prime factorization of n >= 1, primes ascending.
std::vector<PrimePower> factorize(long n);

bool is_prime(long n);

/// (base^exp) mod m, for m < 2^31.
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Multiplicative inverse mod m (m prime or gcd(a, m) = 1).
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m);

/// Euler phi.
long euler_phi(long n);

/// Some generator of the multiplicative group of F_q, q prime.
long primitive_root(long q);

}  // namespace imprim
