#include "imprim/word.hpp"

#include "imprim/errors.hpp"

namespace imprim {

void Word::append(int generator, long exponent) {
    if (exponent == 0) return;
    if (!factors.empty() && factors.back().first == generator) {
        factors.back().second += exponent;
        if (factors.back().second == 0) factors.pop_back();
        return;
    }
    factors.push_back({generator, exponent});
}

void Word::append(const Word& w) {
    for (const auto& [g, e] : w.factors) append(g, e);
}

Word Word::inverse() const {
    Word out;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) out.append(it->first, -it->second);
    return out;
}

Word Word::pow(long e) const {
    Word base = e < 0 ? inverse() : *this;
    if (e < 0) e = -e;
    Word out;
    for (long i = 0; i < e; ++i) out.append(base);
    return out;
}

Word Word::commutator(const Word& u, const Word& v) {
    Word out;
    out.append(u);
    out.append(v);
    out.append(u.inverse());
    out.append(v.inverse());
    return out;
}

int evaluate_word(const Group& g, const Word& w, const std::vector<int>& assignment) {
    int result = 0;
    for (const auto& [gen, exp] : w.factors) {
        if (exp == 0) throw InvalidWord("zero exponent in word");
        if (gen < 0 || gen >= static_cast<int>(assignment.size()))
            throw UnboundGenerator("word uses generator " + std::to_string(gen) +
                                   " outside the assignment");
        result = g.multiply(result, g.power(assignment[gen], exp));
    }
    return result;
}

}  // namespace imprim
