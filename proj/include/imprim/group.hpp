#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "imprim/perm.hpp"

namespace imprim {

/// Fully enumerated finite p-group of permutations.  Element 0 is the
/// identity; the element list is closed under composition and inverse.
/// Immutable after construction.
class Group {
  public:
    static constexpr std::size_t kDefaultElementCap = 10000;

    /// Enumerates the closure of `generators` acting on `degree` points.
    /// Throws ClosureExceedsCap if the closure exceeds `cap` elements and
    /// NotAPGroup if the resulting order is not a power of `prime`.
    static Group generate(int degree, const std::vector<Permutation>& generators, long prime,
                          std::size_t cap = kDefaultElementCap);

    int degree() const { return degree_; }
    long prime() const { return prime_; }
    long order() const { return static_cast<long>(elements_.size()); }
    const std::vector<Permutation>& elements() const { return elements_; }
    const Permutation& element(int i) const { return elements_[i]; }
    /// Indices of the defining generators, in input order.
    const std::vector<int>& generator_indices() const { return generator_indices_; }

    /// Index of elements[a] . elements[b] (apply b, then a).
    int multiply(int a, int b) const;
    int inverse(int a) const { return inverse_[a]; }
    int power(int a, long k) const;
    /// g x g^-1.
    int conjugate(int x, int g) const;
    long element_order(int a) const { return element_order_[a]; }
    long exponent() const { return exponent_; }

    /// Index of p in the element list, or -1.
    int index_of(const Permutation& p) const;

  private:
    Group() = default;

    struct ImageHash {
        std::size_t operator()(const std::vector<int>& v) const;
    };

    int degree_ = 0;
    long prime_ = 2;
    long exponent_ = 1;
    std::vector<Permutation> elements_;
    std::vector<int> generator_indices_;
    std::vector<int> inverse_;
    std::vector<long> element_order_;
    std::unordered_map<std::vector<int>, int, ImageHash> index_;
};

/// Conjugacy class; members sorted ascending, representative = members[0].
struct ConjugacyClass {
    int representative = 0;
    std::vector<int> members;
    long size = 0;
    long element_order = 1;
};

/// Partition of the group into conjugacy classes.  Identity class first,
/// then ascending (element order, size, smallest member index).
std::vector<ConjugacyClass> conjugacy_classes(const Group& g);

/// Class-level power map f : C(G) x Z -> C(G).
struct PowerMap {
    std::vector<long> class_orders;
    std::vector<long> primes;                   // primes dividing the exponent
    std::vector<std::vector<int>> prime_rows;   // prime_rows[i][c], aligned with primes
    std::vector<std::vector<int>> table;        // table[c][s] = class of rep^s, 0 <= s < ord

    /// Class of rep(cls)^k for any integer k.
    int apply(int cls, long k) const {
        long m = class_orders[cls];
        long s = ((k % m) + m) % m;
        return table[cls][static_cast<std::size_t>(s)];
    }
    int num_classes() const { return static_cast<int>(class_orders.size()); }
};

PowerMap power_map(const Group& g, const std::vector<ConjugacyClass>& classes);

/// Subgroup as a sorted set of element indices.
struct Subgroup {
    std::vector<int> members;  // sorted
    bool normal = false;
    long order() const { return static_cast<long>(members.size()); }
    bool contains(int x) const;
};

/// Closure of the given element indices.
Subgroup subgroup_closure(const Group& g, const std::vector<int>& generator_elements);

/// Subgroup generated by all commutators; normal.
Subgroup derived_subgroup(const Group& g);

/// Frattini subgroup, computed as [G,G] G^p.
Subgroup frattini_subgroup(const Group& g);

/// log_p(|G| / |Phi(G)|); throws TrivialGroupError for |G| = 1.
long rank(const Group& g);

/// Indices of conjugacy classes lying outside the Frattini subgroup.
std::vector<int> primitive_classes_oracle(const Group& g,
                                          const std::vector<ConjugacyClass>& classes);

/// Length of the lower central series until it reaches the trivial subgroup.
long nilpotency_class(const Group& g);

/// Invariant factors (descending prime powers) of an abelian subgroup of a
/// p-group, derived from element-order counts.
std::vector<long> abelian_invariants(const Group& g, const Subgroup& h);

}  // namespace imprim
