#pragma once

#include <cstddef>
#include <vector>

namespace imprim {

/// Permutation of {0, ..., degree-1}, stored as an image array.
class Permutation {
  public:
    /// Validates that `images` is a bijection.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int degree);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i]; }
    const std::vector<int>& images() const { return images_; }

    /// (a.compose(b))(i) = a(b(i)).
    Permutation compose(const Permutation& other) const;
    Permutation inverse() const;

    /// lcm of cycle lengths.
    long order() const;
    bool is_identity() const;

    bool operator==(const Permutation& o) const { return images_ == o.images_; }
    bool operator!=(const Permutation& o) const { return images_ != o.images_; }

  private:
    Permutation() = default;
    std::vector<int> images_;
};

}  // namespace imprim
