#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace imprim {

/// Exact element of the cyclotomic field Q(zeta_n).
///
/// Values are kept in a canonical form at all times:
///   * the conductor is minimal (rationals have conductor 1, and the
///     conductor is never congruent to 2 mod 4),
///   * coefficients are stored on the standard CAS integral basis of
///     Q(zeta_n), so equality is plain (conductor, coefficient) equality.
///
/// The basis is the usual one: for a prime power p^v the basis exponents are
/// the interval [0, 2^(v-1)) when p = 2 and
/// [(p^(v-1)+1)/2, (p^(v-1)+1)/2 + phi(p^v)) when p is odd; for composite n
/// the per-prime exponents combine through CRT with weights n / p^v.  Any
/// power of zeta_n reduces into the basis with a single application of
/// 1 + zeta_p + ... + zeta_p^(p-1) = 0 per offending prime.
class Cyclotomic {
  public:
    /// Zero.
    Cyclotomic() : conductor_(1) {}
    /// Rational value.
    Cyclotomic(const mpq_class& r);
    Cyclotomic(long v) : Cyclotomic(mpq_class(v)) {}
    Cyclotomic(int v) : Cyclotomic(mpq_class(v)) {}

    /// c * zeta_n^k.
    static Cyclotomic root_of_unity(long n, long k, const mpq_class& c = 1);

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    bool operator==(const Cyclotomic& o) const {
        return conductor_ == o.conductor_ && coeff_ == o.coeff_;
    }
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    long conductor() const { return conductor_; }
    bool is_zero() const { return coeff_.empty(); }
    bool is_rational() const { return conductor_ == 1; }
    /// Requires is_rational().
    mpq_class rational_value() const;

    /// Complex conjugation (zeta -> zeta^-1).
    Cyclotomic conjugate() const;
    /// Galois map zeta_n -> zeta_n^k; requires gcd(k, conductor) = 1.
    Cyclotomic galois(long k) const;
    Cyclotomic pow(unsigned long k) const;

    /// Least k >= 1 with value^k = 1, or nullopt if not a root of unity.
    std::optional<long> root_order() const;

    /// Floating approximation (re, im); display/export only.
    std::pair<double, double> to_complex() const;

    /// Canonical rendering, e.g. "0", "-1/2", "2*E(4)", "E(8)-E(8)^3".
    std::string to_string() const;

    /// Basis coefficients (exponent -> coefficient) over E(conductor).
    const std::map<long, mpq_class>& coefficients() const { return coeff_; }

    /// Build from raw (conductor, exponent -> coefficient) data; reduces to
    /// canonical form.  Exponents are taken mod n.
    static Cyclotomic from_terms(long n, const std::map<long, mpq_class>& terms);

    /// True if every coefficient is an integer (value lies in Z[zeta_n]).
    bool is_integral() const;

  private:
    long conductor_;
    std::map<long, mpq_class> coeff_;

    void normalize(long n, std::map<long, mpq_class> raw);

    friend struct CyclotomicTestAccess;
};

/// Total order for deterministic containers; compares canonical renderings.
bool render_less(const Cyclotomic& a, const Cyclotomic& b);

}  // namespace imprim
