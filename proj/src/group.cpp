#include "imprim/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "imprim/errors.hpp"
#include "imprim/numeric.hpp"

namespace imprim {

std::size_t Group::ImageHash::operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;  // FNV-1a
    for (int x : v) {
        h ^= static_cast<std::size_t>(x) + 1;
        h *= 1099511628211ull;
    }
    return h;
}

Group Group::generate(int degree, const std::vector<Permutation>& generators, long prime,
                      std::size_t cap) {
    if (!is_prime(prime)) throw NotAPGroup("prime parameter must be prime");
    for (const auto& g : generators)
        if (g.degree() != degree) throw SemanticError("generators act on different degrees");

    Group out;
    out.degree_ = degree;
    out.prime_ = prime;

    Permutation id = Permutation::identity(degree);
    out.elements_.push_back(id);
    out.index_.emplace(id.images(), 0);

    // breadth-first closure, deterministic in generator order
    for (std::size_t i = 0; i < out.elements_.size(); ++i) {
        for (const auto& g : generators) {
            Permutation prod = out.elements_[i].compose(g);
            auto [it, inserted] = out.index_.emplace(prod.images(), static_cast<int>(out.elements_.size()));
            if (inserted) {
                if (out.elements_.size() >= cap)
                    throw ClosureExceedsCap("group closure exceeds cap of " + std::to_string(cap));
                out.elements_.push_back(std::move(prod));
            }
        }
    }

    long n = static_cast<long>(out.elements_.size());
    long m = n;
    while (m % prime == 0) m /= prime;
    if (m != 1)
        throw NotAPGroup("group order " + std::to_string(n) + " is not a power of " +
                         std::to_string(prime));

    out.inverse_.resize(n);
    out.element_order_.resize(n);
    out.exponent_ = 1;
    for (long i = 0; i < n; ++i) {
        out.inverse_[i] = out.index_.at(out.elements_[i].inverse().images());
        out.element_order_[i] = out.elements_[i].order();
        out.exponent_ = std::lcm(out.exponent_, out.element_order_[i]);
    }
    for (const auto& g : generators) out.generator_indices_.push_back(out.index_.at(g.images()));
    return out;
}

int Group::multiply(int a, int b) const {
    return index_.at(elements_[a].compose(elements_[b]).images());
}

int Group::power(int a, long k) const {
    if (k < 0) {
        a = inverse_[a];
        k = -k;
    }
    int r = 0;
    int base = a;
    while (k) {
        if (k & 1) r = multiply(r, base);
        base = multiply(base, base);
        k >>= 1;
    }
    return r;
}

int Group::conjugate(int x, int g) const { return multiply(multiply(g, x), inverse_[g]); }

int Group::index_of(const Permutation& p) const {
    auto it = index_.find(p.images());
    return it == index_.end() ? -1 : it->second;
}

std::vector<ConjugacyClass> conjugacy_classes(const Group& g) {
    long n = g.order();
    std::vector<char> seen(n, 0);
    std::vector<ConjugacyClass> classes;
    for (long s = 0; s < n; ++s) {
        if (seen[s]) continue;
        // orbit under conjugation by generators
        std::vector<int> stack{static_cast<int>(s)};
        std::set<int> orbit{static_cast<int>(s)};
        seen[s] = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int gi : g.generator_indices()) {
                int y = g.conjugate(x, gi);
                if (orbit.insert(y).second) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
            }
        }
        ConjugacyClass cl;
        cl.members.assign(orbit.begin(), orbit.end());
        cl.representative = cl.members.front();
        cl.size = static_cast<long>(cl.members.size());
        cl.element_order = g.element_order(cl.representative);
        classes.push_back(std::move(cl));
    }
    std::sort(classes.begin(), classes.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
        bool ia = a.representative == 0, ib = b.representative == 0;
        if (ia != ib) return ia;
        if (a.element_order != b.element_order) return a.element_order < b.element_order;
        if (a.size != b.size) return a.size < b.size;
        return a.representative < b.representative;
    });
    return classes;
}

PowerMap power_map(const Group& g, const std::vector<ConjugacyClass>& classes) {
    int k = static_cast<int>(classes.size());
    std::vector<int> class_of(g.order());
    for (int c = 0; c < k; ++c)
        for (int x : classes[c].members) class_of[x] = c;

    PowerMap pm;
    pm.class_orders.reserve(k);
    pm.table.resize(k);
    for (int c = 0; c < k; ++c) {
        long m = classes[c].element_order;
        pm.class_orders.push_back(m);
        pm.table[c].resize(m);
        int rep = classes[c].representative;
        int acc = 0;  // rep^0
        for (long s = 0; s < m; ++s) {
            pm.table[c][s] = class_of[acc];
            acc = g.multiply(acc, rep);
        }
    }
    for (const auto& pp : factorize(g.exponent())) pm.primes.push_back(pp.prime);
    pm.prime_rows.resize(pm.primes.size());
    for (std::size_t pi = 0; pi < pm.primes.size(); ++pi) {
        pm.prime_rows[pi].resize(k);
        for (int c = 0; c < k; ++c) pm.prime_rows[pi][c] = pm.apply(c, pm.primes[pi]);
    }
    return pm;
}

bool Subgroup::contains(int x) const {
    return std::binary_search(members.begin(), members.end(), x);
}

Subgroup subgroup_closure(const Group& g, const std::vector<int>& generator_elements) {
    std::set<int> members{0};
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int h : generator_elements) {
            int y = g.multiply(x, h);
            if (members.insert(y).second) stack.push_back(y);
        }
    }
    Subgroup out;
    out.members.assign(members.begin(), members.end());
    // normality check
    out.normal = true;
    for (int gi : g.generator_indices()) {
        for (int x : out.members) {
            if (!out.contains(g.conjugate(x, gi))) {
                out.normal = false;
                break;
            }
        }
        if (!out.normal) break;
    }
    return out;
}

Subgroup derived_subgroup(const Group& g) {
    long n = g.order();
    std::set<int> comms;
    for (long x = 0; x < n; ++x)
        for (long y = 0; y < n; ++y) {
            int xy = g.multiply(static_cast<int>(x), static_cast<int>(y));
            int yx = g.multiply(static_cast<int>(y), static_cast<int>(x));
            comms.insert(g.multiply(xy, g.inverse(yx)));
        }
    Subgroup out = subgroup_closure(g, std::vector<int>(comms.begin(), comms.end()));
    out.normal = true;
    return out;
}

Subgroup frattini_subgroup(const Group& g) {
    long n = g.order();
    std::set<int> gens;
    for (long x = 0; x < n; ++x)
        for (long y = 0; y < n; ++y) {
            int xy = g.multiply(static_cast<int>(x), static_cast<int>(y));
            int yx = g.multiply(static_cast<int>(y), static_cast<int>(x));
            gens.insert(g.multiply(xy, g.inverse(yx)));
        }
    for (long x = 0; x < n; ++x) gens.insert(g.power(static_cast<int>(x), g.prime()));
    Subgroup out = subgroup_closure(g, std::vector<int>(gens.begin(), gens.end()));
    out.normal = true;
    return out;
}

long rank(const Group& g) {
    if (g.order() == 1) throw TrivialGroupError("rank is undefined for the trivial group");
    long quotient = g.order() / frattini_subgroup(g).order();
    long r = 0;
    while (quotient > 1) {
        quotient /= g.prime();
        ++r;
    }
    return r;
}

std::vector<int> primitive_classes_oracle(const Group& g,
                                          const std::vector<ConjugacyClass>& classes) {
    Subgroup phi = frattini_subgroup(g);
    std::vector<int> out;
    for (std::size_t c = 0; c < classes.size(); ++c) {
        bool outside = !phi.contains(classes[c].representative);
        for (int x : classes[c].members) {
            if (!phi.contains(x) != outside)
                throw InconsistencyDetected("Frattini membership is not class-constant");
        }
        if (outside) out.push_back(static_cast<int>(c));
    }
    return out;
}

long nilpotency_class(const Group& g) {
    long n = g.order();
    std::vector<int> current(n);
    std::iota(current.begin(), current.end(), 0);
    long steps = 0;
    while (current.size() > 1) {
        // [G, current]
        std::set<int> gens;
        for (int x : current)
            for (long y = 0; y < n; ++y) {
                int yx = g.multiply(static_cast<int>(y), x);
                int xy = g.multiply(x, static_cast<int>(y));
                gens.insert(g.multiply(yx, g.inverse(xy)));
            }
        Subgroup next = subgroup_closure(g, std::vector<int>(gens.begin(), gens.end()));
        if (next.order() == static_cast<long>(current.size()))
            throw Error("lower central series does not terminate (group not nilpotent)");
        current = next.members;
        ++steps;
    }
    return steps;
}

std::vector<long> abelian_invariants(const Group& g, const Subgroup& h) {
    for (int x : h.members)
        for (int y : h.members)
            if (g.multiply(x, y) != g.multiply(y, x))
                throw Error("abelian_invariants: subgroup is not abelian");
    if (h.order() == 1) return {};
    long p = g.prime();
    // lambda_j from counts of elements with x^(p^i) = 1
    std::vector<long> log_counts;  // log_p #{x : ord(x) | p^i}
    for (long pi = 1;; pi *= p) {
        long count = 0;
        for (int x : h.members)
            if (g.element_order(x) <= pi && pi % g.element_order(x) == 0) ++count;
        long lg = 0;
        for (long c = count; c > 1; c /= p) ++lg;
        log_counts.push_back(lg);
        if (count == h.order()) break;
    }
    std::vector<long> d;  // d_i = #{j : lambda_j >= i}
    long prev = 0;
    for (long s : log_counts) {
        d.push_back(s - prev);
        prev = s;
    }
    std::vector<long> invariants;
    for (long j = 1; j <= d.front(); ++j) {
        long lambda = 0;
        for (long di : d)
            if (di >= j) ++lambda;
        long f = 1;
        for (long i = 0; i < lambda; ++i) f *= p;
        invariants.push_back(f);
    }
    return invariants;  // descending since d is non-increasing
}

}  // namespace imprim
