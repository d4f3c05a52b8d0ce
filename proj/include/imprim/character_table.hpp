#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "imprim/class_algebra.hpp"
#include "imprim/cyclotomic.hpp"
#include "imprim/group.hpp"

namespace imprim {

inline constexpr std::uint64_t kDefaultSeed = 1;

/// Exact irreducible character table of a finite p-group, with class
/// metadata and the class-level power map.
///
/// Invariants (enforced by validate()):
///   * class 0 is the identity class; row 0 is the trivial character,
///   * row and column orthogonality hold exactly,
///   * sum of squared degrees equals the group order,
///   * degrees are powers of the prime and match column 0,
///   * degree-1 rows are closed under pointwise products.
struct CharacterTable {
    std::string name;
    long order = 1;
    long prime = 2;
    long conductor = 1;  // group exponent
    std::vector<long> class_sizes;
    std::vector<long> class_orders;
    PowerMap power_map;
    std::vector<long> degrees;
    std::vector<std::vector<Cyclotomic>> values;  // rows x classes
    std::uint64_t seed = kDefaultSeed;

    int num_classes() const { return static_cast<int>(class_sizes.size()); }
    int num_rows() const { return static_cast<int>(values.size()); }
    std::vector<int> linear_rows() const;

    /// Checks all invariants; throws MalformedTable.  Orthogonality is
    /// verified on every pair when the class count is at most
    /// `full_check_limit`, on random pairs otherwise.
    void validate(int full_check_limit = 64) const;
};

/// Dixon's method: simultaneous eigenvectors of the class-sum matrices over
/// F_q (q = least prime with q = 1 mod exponent and q > 2 sqrt |G|), lifted
/// to exact cyclotomic values through the power map.
CharacterTable compute_character_table(const Group& g,
                                       const std::vector<ConjugacyClass>& classes,
                                       std::uint64_t seed = kDefaultSeed);

/// Completes a power map that carries only rows for the primes dividing the
/// conductor: unit exponents are resolved by matching Galois-conjugated
/// columns of the table (columns are pairwise distinct by orthogonality).
/// Throws MalformedTable if no consistent completion exists.
void complete_power_map_from_values(CharacterTable& table);

/// Certified equivalence of two tables: a row bijection and a class
/// bijection under which values agree exactly and class metadata (sizes,
/// element orders, power maps) is preserved.  Row i of `a` corresponds to
/// row row_map[i] of `b`, and likewise for class_map.
struct TableBijection {
    std::vector<int> row_map;
    std::vector<int> class_map;
};

std::optional<TableBijection> certify_table_bijection(const CharacterTable& a,
                                                      const CharacterTable& b);

}  // namespace imprim
