#include "imprim/coset_enum.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "imprim/errors.hpp"

namespace imprim {

namespace {

// Column layout: 2g for generator g, 2g+1 for its inverse.
class CosetTable {
  public:
    CosetTable(int ngens, std::size_t max_cosets)
        : ncols_(2 * ngens), max_cosets_(max_cosets) {
        rows_.push_back(std::vector<int>(ncols_, -1));
        parent_.push_back(0);
    }

    int find(int a) {
        while (parent_[a] != a) {
            parent_[a] = parent_[parent_[a]];
            a = parent_[a];
        }
        return a;
    }

    int define(int a, int col) {
        if (rows_.size() >= max_cosets_)
            throw TableOverflow("coset table exceeds " + std::to_string(max_cosets_) + " rows");
        int b = static_cast<int>(rows_.size());
        rows_.push_back(std::vector<int>(ncols_, -1));
        parent_.push_back(b);
        rows_[a][col] = b;
        rows_[b][col ^ 1] = a;
        return b;
    }

    void merge(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b);
        parent_[b] = a;
        queue_.push_back(b);
    }

    void process_coincidences() {
        while (!queue_.empty()) {
            int dead = queue_.back();
            queue_.pop_back();
            for (int col = 0; col < ncols_; ++col) {
                int d = rows_[dead][col];
                if (d < 0) continue;
                rows_[dead][col] = -1;
                d = find(d);
                int a = find(dead);
                int e = rows_[a][col];
                if (e >= 0) {
                    merge(find(e), d);
                } else {
                    rows_[a][col] = d;
                    int e2 = rows_[d][col ^ 1];
                    if (e2 >= 0) {
                        merge(find(e2), a);
                    } else {
                        rows_[d][col ^ 1] = a;
                    }
                }
            }
        }
    }

    // Scan relator (as column letters) from coset a, defining cosets to fill
    // gaps; processes coincidences immediately.
    void scan_and_fill(int a, const std::vector<int>& letters) {
        const int n = static_cast<int>(letters.size());
        while (true) {
            a = find(a);
            int f = a, i = 0;
            while (i < n) {
                int next = rows_[f][letters[i]];
                if (next < 0) break;
                f = find(next);
                ++i;
            }
            if (i == n) {
                if (f != a) {
                    merge(f, a);
                    process_coincidences();
                }
                return;
            }
            int b = a, j = n - 1;
            while (j >= i) {
                int next = rows_[b][letters[j] ^ 1];
                if (next < 0) break;
                b = find(next);
                --j;
            }
            if (j < i) {
                merge(f, b);
                process_coincidences();
                continue;  // rescan from the representative
            }
            if (j == i) {
                // deduction closes the relator
                rows_[f][letters[i]] = b;
                rows_[b][letters[i] ^ 1] = f;
                return;
            }
            define(f, letters[i]);
        }
    }

    bool alive(int a) { return find(a) == a; }
    std::size_t size() const { return rows_.size(); }
    int entry(int a, int col) const { return rows_[a][col]; }
    int ncols() const { return ncols_; }

  private:
    int ncols_;
    std::size_t max_cosets_;
    std::vector<std::vector<int>> rows_;
    std::vector<int> parent_;
    std::vector<int> queue_;
};

std::vector<int> relator_letters(const Word& w, int ngens) {
    std::vector<int> letters;
    for (const auto& [g, e] : w.factors) {
        if (g < 0 || g >= ngens) throw InvalidWord("relator uses undeclared generator");
        if (e == 0) throw InvalidWord("zero exponent in relator");
        int col = e > 0 ? 2 * g : 2 * g + 1;
        for (long t = 0; t < std::labs(e); ++t) letters.push_back(col);
    }
    return letters;
}

}  // namespace

Group enumerate_presentation(const Presentation& pres, long prime, std::size_t max_cosets) {
    const int ngens = pres.num_generators();
    std::vector<std::vector<int>> relators;
    relators.reserve(pres.relators.size());
    for (const Word& w : pres.relators) relators.push_back(relator_letters(w, ngens));

    CosetTable table(ngens, max_cosets);
    for (int alpha = 0; alpha < static_cast<int>(table.size()); ++alpha) {
        if (!table.alive(alpha)) continue;
        for (const auto& rel : relators) {
            table.scan_and_fill(alpha, rel);
            if (!table.alive(alpha)) break;
        }
        if (!table.alive(alpha)) continue;
        for (int col = 0; col < table.ncols(); ++col)
            if (table.entry(alpha, col) < 0) table.define(alpha, col);
    }

    // compact live cosets, discovery order
    std::vector<int> live;
    for (int v = 0; v < static_cast<int>(table.size()); ++v)
        if (table.alive(v)) live.push_back(v);
    std::vector<int> remap(table.size(), -1);
    for (std::size_t i = 0; i < live.size(); ++i) remap[live[i]] = static_cast<int>(i);

    int degree = static_cast<int>(live.size());
    std::vector<Permutation> gens;
    for (int g = 0; g < ngens; ++g) {
        std::vector<int> images(degree);
        for (int i = 0; i < degree; ++i) {
            int target = table.entry(live[i], 2 * g);
            if (target < 0) throw Error("coset table incomplete after enumeration");
            images[i] = remap[table.find(target)];
        }
        gens.push_back(Permutation(std::move(images)));
    }

    Group group = Group::generate(degree, gens, prime,
                                  std::max<std::size_t>(Group::kDefaultElementCap,
                                                        static_cast<std::size_t>(degree) + 1));
    if (group.order() != degree)
        throw Error("enumerated action is not regular: order " + std::to_string(group.order()) +
                    " vs " + std::to_string(degree) + " cosets");
    // every relator must evaluate to the identity
    std::vector<int> assignment = group.generator_indices();
    for (const Word& w : pres.relators) {
        if (evaluate_word(group, w, assignment) != 0)
            throw Error("relator does not evaluate to the identity in the enumerated group");
    }
    return group;
}

}  // namespace imprim
