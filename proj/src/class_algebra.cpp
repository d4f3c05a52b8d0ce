#include "imprim/class_algebra.hpp"

namespace imprim {

ClassAlgebra class_algebra(const Group& g, const std::vector<ConjugacyClass>& classes) {
    const int k = static_cast<int>(classes.size());
    std::vector<int> class_of(g.order());
    for (int c = 0; c < k; ++c)
        for (int x : classes[c].members) class_of[x] = c;

    ClassAlgebra out;
    out.num_classes = k;
    for (const auto& cl : classes) {
        out.sizes.push_back(cl.size);
        out.orders.push_back(cl.element_order);
    }
    for (int c = 0; c < k; ++c) out.inverse_class.push_back(class_of[g.inverse(classes[c].representative)]);

    out.constants.assign(k, std::vector<std::vector<long>>(k, std::vector<long>(k, 0)));
    // a_ijm = #{x in class i : x^-1 z in class j}, z a fixed member of class m
    for (int m = 0; m < k; ++m) {
        int z = classes[m].representative;
        for (int i = 0; i < k; ++i) {
            for (int x : classes[i].members) {
                int j = class_of[g.multiply(g.inverse(x), z)];
                ++out.constants[i][j][m];
            }
        }
    }
    return out;
}

}  // namespace imprim
