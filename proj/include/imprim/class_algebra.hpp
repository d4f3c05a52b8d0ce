#pragma once

#include <vector>

#include "imprim/group.hpp"

namespace imprim {

/// Structure constants of the center of the group algebra.
/// constants[i][j][m] counts, for a fixed z in class m, the pairs
/// (x, y) in class i x class j with x*y = z.
struct ClassAlgebra {
    int num_classes = 0;
    std::vector<long> sizes;
    std::vector<long> orders;
    std::vector<int> inverse_class;  // class of rep^-1
    std::vector<std::vector<std::vector<long>>> constants;
};

ClassAlgebra class_algebra(const Group& g, const std::vector<ConjugacyClass>& classes);

}  // namespace imprim
