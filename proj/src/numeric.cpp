#include "imprim/numeric.hpp"

#include <stdexcept>

namespace imprim {

std::vector<PrimePower> factorize(long n) {
    std::vector<PrimePower> out;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            PrimePower pp{p, 0, 1};
            while (n % p == 0) {
                n /= p;
                ++pp.exponent;
                pp.value *= p;
            }
            out.push_back(pp);
        }
    }
    if (n > 1) out.push_back(PrimePower{n, 1, n});
    return out;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = r * base % m;
        base = base * base % m;
        exp >>= 1;
    }
    return r;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
    // extended Euclid
    long long t = 0, nt = 1;
    long long r = static_cast<long long>(m), nr = static_cast<long long>(a % m);
    while (nr != 0) {
        long long q = r / nr;
        long long tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw std::invalid_argument("mod_inverse: not invertible");
    if (t < 0) t += static_cast<long long>(m);
    return static_cast<std::uint64_t>(t);
}

long euler_phi(long n) {
    long r = 1;
    for (const auto& pp : factorize(n)) r *= pp.value / pp.prime * (pp.prime - 1);
    return r;
}

long primitive_root(long q) {
    if (q == 2) return 1;
    auto facs = factorize(q - 1);
    for (long g = 2; g < q; ++g) {
        bool ok = true;
        for (const auto& pp : facs) {
            if (mod_pow(g, (q - 1) / pp.prime, q) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw std::logic_error("primitive_root: none found");
}

}  // namespace imprim
