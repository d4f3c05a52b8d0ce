#include "imprim/perm.hpp"

#include <numeric>

#include "imprim/errors.hpp"

namespace imprim {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int v : images_) {
        if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
            throw SemanticError("image array is not a bijection");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int degree) {
    std::vector<int> im(degree);
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
}

Permutation Permutation::compose(const Permutation& other) const {
    std::vector<int> im(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) im[i] = images_[other.images_[i]];
    Permutation out;
    out.images_ = std::move(im);
    return out;
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) im[images_[i]] = static_cast<int>(i);
    Permutation out;
    out.images_ = std::move(im);
    return out;
}

long Permutation::order() const {
    std::vector<char> seen(images_.size(), 0);
    long ord = 1;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i]) continue;
        long len = 0;
        std::size_t j = i;
        while (!seen[j]) {
            seen[j] = 1;
            j = static_cast<std::size_t>(images_[j]);
            ++len;
        }
        ord = std::lcm(ord, len);
    }
    return ord;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != static_cast<int>(i)) return false;
    return true;
}

}  // namespace imprim
