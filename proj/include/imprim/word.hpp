#pragma once

#include <string>
#include <vector>

#include "imprim/group.hpp"

namespace imprim {

/// Freely reduced word over abstract generators: (generator index, exponent)
/// pairs with nonzero exponents and distinct adjacent generators.
struct Word {
    std::vector<std::pair<int, long>> factors;

    bool empty() const { return factors.empty(); }
    /// Appends g^e, merging with the last factor and dropping zeros.
    void append(int generator, long exponent);
    void append(const Word& w);
    Word inverse() const;
    Word pow(long e) const;
    /// Commutator u v u^-1 v^-1.
    static Word commutator(const Word& u, const Word& v);

    bool operator==(const Word& o) const { return factors == o.factors; }
};

struct Presentation {
    std::vector<std::string> generator_names;
    std::vector<Word> relators;

    int num_generators() const { return static_cast<int>(generator_names.size()); }
};

/// Product of assigned images; assignment[i] = element index for generator i.
/// Throws UnboundGenerator if the word uses a generator outside the
/// assignment, InvalidWord on malformed factors.
int evaluate_word(const Group& g, const Word& w, const std::vector<int>& assignment);

}  // namespace imprim
