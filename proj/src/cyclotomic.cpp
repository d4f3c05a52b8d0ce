#include "imprim/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "imprim/errors.hpp"
#include "imprim/numeric.hpp"

namespace imprim {

namespace {

long mod(long a, long n) {
    long r = a % n;
    return r < 0 ? r + n : r;
}

// Basis membership of the CRT component j mod p^v.
bool component_in_basis(long comp, long p, long pv) {
    if (p == 2) return comp < pv / 2;
    long pv1 = pv / p;                 // p^(v-1)
    long start = (pv1 + 1) / 2;
    long len = pv - pv1;               // phi(p^v)
    return comp >= start && comp < start + len;
}

void drop_zeros(std::map<long, mpq_class>& m) {
    for (auto it = m.begin(); it != m.end();) {
        if (it->second == 0)
            it = m.erase(it);
        else
            ++it;
    }
}

// Rewrite every monomial whose CRT component at some prime of n lies outside
// the basis, using 1 + zeta_p + ... + zeta_p^(p-1) = 0.  One pass per prime
// suffices: the replacement leaves other components untouched.
void reduce_to_basis(long n, std::map<long, mpq_class>& m) {
    if (n == 1) return;
    for (const auto& pp : factorize(n)) {
        long shift = n / pp.prime;
        std::vector<long> bad;
        for (const auto& [j, c] : m) {
            if (!component_in_basis(j % pp.value, pp.prime, pp.value)) bad.push_back(j);
        }
        for (long j : bad) {
            mpq_class c = m[j];
            m.erase(j);
            for (long t = 1; t < pp.prime; ++t) m[mod(j + t * shift, n)] -= c;
        }
    }
    drop_zeros(m);
}

}  // namespace

Cyclotomic::Cyclotomic(const mpq_class& r) : conductor_(1) {
    if (r != 0) coeff_[0] = r;
}

Cyclotomic Cyclotomic::root_of_unity(long n, long k, const mpq_class& c) {
    if (n < 1) throw Error("root_of_unity: order must be positive");
    return from_terms(n, {{mod(k, n), c}});
}

Cyclotomic Cyclotomic::from_terms(long n, const std::map<long, mpq_class>& terms) {
    Cyclotomic out;
    std::map<long, mpq_class> raw;
    for (const auto& [j, c] : terms)
        if (c != 0) raw[mod(j, n)] += c;
    out.normalize(n, std::move(raw));
    return out;
}

void Cyclotomic::normalize(long n, std::map<long, mpq_class> raw) {
    drop_zeros(raw);

    // conductors congruent to 2 mod 4 collapse: zeta_2m = -zeta_m^((m+1)/2)
    while (n % 4 == 2) {
        long m = n / 2;
        std::map<long, mpq_class> next;
        for (const auto& [j, c] : raw) {
            long e = mod(j * ((m + 1) / 2), m);
            if (j % 2 != 0)
                next[e] -= c;
            else
                next[e] += c;
        }
        drop_zeros(next);
        raw = std::move(next);
        n = m;
    }

    reduce_to_basis(n, raw);

    // conductor minimization
    bool changed = true;
    while (changed && n > 1 && !raw.empty()) {
        changed = false;
        for (const auto& pp : factorize(n)) {
            long p = pp.prime, pv = pp.value;
            if (p == 2 && pp.exponent == 2) {
                // drop the factor 4 entirely (n/2 would be 2 mod 4)
                bool ok = true;
                for (const auto& [j, c] : raw)
                    if (j % 4 != 0) { ok = false; break; }
                if (!ok) continue;
                std::map<long, mpq_class> next;
                for (const auto& [j, c] : raw) next[j / 4] += c;
                raw = std::move(next);
                n /= 4;
            } else if (pp.exponent >= 2) {
                bool ok = true;
                for (const auto& [j, c] : raw)
                    if (j % p != 0) { ok = false; break; }
                if (!ok) continue;
                std::map<long, mpq_class> next;
                for (const auto& [j, c] : raw) next[j / p] += c;
                raw = std::move(next);
                n /= p;
            } else {
                // odd prime, multiplicity 1: all p-1 basis slots of each
                // CRT group must carry equal coefficients
                long np = n / p;
                std::map<long, std::vector<std::pair<long, mpq_class>>> groups;
                bool ok = true;
                for (const auto& [j, c] : raw) groups[j % np].push_back({j, c});
                for (const auto& [r, v] : groups)
                    if (static_cast<long>(v.size()) != p - 1) { ok = false; break; }
                if (ok) {
                    for (const auto& [r, v] : groups) {
                        for (size_t i = 1; ok && i < v.size(); ++i)
                            if (v[i].second != v[0].second) ok = false;
                        if (!ok) break;
                    }
                }
                if (!ok) continue;
                long pinv = static_cast<long>(mod_inverse(mod(p, np) == 0 ? 1 : mod(p, np), np));
                std::map<long, mpq_class> next;
                for (const auto& [r, v] : groups) next[mod(r * pinv, np)] -= v[0].second;
                drop_zeros(next);
                raw = std::move(next);
                n = np;
            }
            reduce_to_basis(n, raw);
            changed = true;
            break;
        }
    }

    if (raw.empty()) n = 1;
    conductor_ = n;
    coeff_ = std::move(raw);
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    long n = std::lcm(conductor_, o.conductor_);
    std::map<long, mpq_class> raw;
    long s1 = n / conductor_, s2 = n / o.conductor_;
    for (const auto& [j, c] : coeff_) raw[j * s1] += c;
    for (const auto& [j, c] : o.coeff_) raw[j * s2] += c;
    Cyclotomic out;
    out.normalize(n, std::move(raw));
    return out;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out(*this);
    for (auto& [j, c] : out.coeff_) c = -c;
    return out;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    if (is_zero() || o.is_zero()) return Cyclotomic();
    long n = std::lcm(conductor_, o.conductor_);
    long s1 = n / conductor_, s2 = n / o.conductor_;
    std::map<long, mpq_class> raw;
    for (const auto& [j1, c1] : coeff_)
        for (const auto& [j2, c2] : o.coeff_) raw[mod(j1 * s1 + j2 * s2, n)] += c1 * c2;
    Cyclotomic out;
    out.normalize(n, std::move(raw));
    return out;
}

mpq_class Cyclotomic::rational_value() const {
    if (!is_rational()) throw Error("rational_value: conductor > 1");
    if (coeff_.empty()) return 0;
    return coeff_.begin()->second;
}

Cyclotomic Cyclotomic::conjugate() const {
    if (conductor_ == 1) return *this;
    return galois(conductor_ - 1);
}

Cyclotomic Cyclotomic::galois(long k) const {
    k = mod(k, conductor_);
    if (conductor_ == 1) return *this;
    if (std::gcd(k, conductor_) != 1) throw Error("galois: exponent not coprime to conductor");
    std::map<long, mpq_class> raw;
    for (const auto& [j, c] : coeff_) raw[mod(j * k, conductor_)] += c;
    Cyclotomic out;
    out.normalize(conductor_, std::move(raw));
    return out;
}

Cyclotomic Cyclotomic::pow(unsigned long k) const {
    Cyclotomic r(1), base(*this);
    while (k) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

bool Cyclotomic::is_integral() const {
    for (const auto& [j, c] : coeff_)
        if (c.get_den() != 1) return false;
    return true;
}

std::optional<long> Cyclotomic::root_order() const {
    static const Cyclotomic one(1);
    if (is_zero()) return std::nullopt;
    if (is_rational()) {
        mpq_class v = rational_value();
        if (v == 1) return 1;
        if (v == -1) return 2;
        return std::nullopt;
    }
    if (!is_integral()) return std::nullopt;
    if (*this * conjugate() != one) return std::nullopt;
    // order divides 2 * conductor
    Cyclotomic acc(*this);
    for (long k = 1; k <= 2 * conductor_; ++k) {
        if (acc == one) return k;
        acc = acc * *this;
    }
    return std::nullopt;
}

std::pair<double, double> Cyclotomic::to_complex() const {
    long double re = 0, im = 0;
    constexpr long double kTwoPi = 6.283185307179586476925286766559L;
    for (const auto& [j, c] : coeff_) {
        long double w = mpq_class(c).get_d();
        long double ang = kTwoPi * j / conductor_;
        re += w * std::cos(ang);
        im += w * std::sin(ang);
    }
    return {static_cast<double>(re), static_cast<double>(im)};
}

std::string Cyclotomic::to_string() const {
    if (coeff_.empty()) return "0";
    if (conductor_ == 1) return coeff_.begin()->second.get_str();
    std::ostringstream os;
    bool first = true;
    for (const auto& [j, c] : coeff_) {
        mpq_class a = c;
        if (a < 0) {
            os << "-";
            a = -a;
        } else if (!first) {
            os << "+";
        }
        if (a != 1) os << a.get_str() << "*";
        os << "E(" << conductor_ << ")";
        if (j != 1) os << "^" << j;
        first = false;
    }
    return os.str();
}

bool render_less(const Cyclotomic& a, const Cyclotomic& b) {
    return a.to_string() < b.to_string();
}

}  // namespace imprim
