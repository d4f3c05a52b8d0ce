#pragma once

#include <cstddef>

#include "imprim/group.hpp"
#include "imprim/word.hpp"

namespace imprim {

inline constexpr std::size_t kDefaultMaxCosets = 100000;

/// Todd-Coxeter coset enumeration over the trivial subgroup (HLT strategy
/// with immediate coincidence processing).  Returns the regular permutation
/// representation as a Group; the i-th group generator realizes the i-th
/// presentation generator.  The result is verified: the group order equals
/// the final coset count and every relator evaluates to the identity.
///
/// Throws TableOverflow if more than `max_cosets` cosets are needed,
/// InvalidWord for malformed relators, NotAPGroup if the enumerated order is
/// not a power of `prime`.
Group enumerate_presentation(const Presentation& pres, long prime,
                             std::size_t max_cosets = kDefaultMaxCosets);

}  // namespace imprim
