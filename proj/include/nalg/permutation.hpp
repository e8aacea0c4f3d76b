#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace nalg {

// An element of the symmetric group on {1,2,3} in one-line notation:
// images[i-1] is the image of i. The library fixes a canonical basis order
// for the six elements:
//   0: id      (1,2,3)
//   1: t12     (2,1,3)
//   2: t13     (3,2,1)
//   3: t23     (1,3,2)
//   4: c1      (2,3,1)   the 3-cycle 1->2->3->1
//   5: c2      (3,1,2)   its square
// Composition convention: (p*q)(i) = p(q(i)).
struct Permutation {
    std::array<int, 3> images;

    int operator()(int i) const { return images[static_cast<std::size_t>(i - 1)]; }

    friend bool operator==(const Permutation& a, const Permutation& b) = default;
};

inline constexpr std::size_t kGroupOrder = 6;

inline const std::array<Permutation, kGroupOrder>& all_permutations() {
    static const std::array<Permutation, kGroupOrder> table = {{
        {{1, 2, 3}},
        {{2, 1, 3}},
        {{3, 2, 1}},
        {{1, 3, 2}},
        {{2, 3, 1}},
        {{3, 1, 2}},
    }};
    return table;
}

inline const Permutation& perm_id() { return all_permutations()[0]; }
inline const Permutation& perm_t12() { return all_permutations()[1]; }
inline const Permutation& perm_t13() { return all_permutations()[2]; }
inline const Permutation& perm_t23() { return all_permutations()[3]; }
inline const Permutation& perm_c1() { return all_permutations()[4]; }
inline const Permutation& perm_c2() { return all_permutations()[5]; }

inline std::size_t perm_index(const Permutation& p) {
    const auto& all = all_permutations();
    for (std::size_t i = 0; i < kGroupOrder; ++i)
        if (all[i] == p) return i;
    throw std::logic_error("images are not a bijection of {1,2,3}");
}

inline Permutation compose(const Permutation& p, const Permutation& q) {
    return Permutation{{p(q(1)), p(q(2)), p(q(3))}};
}

inline Permutation inverse(const Permutation& p) {
    Permutation r{};
    for (int i = 1; i <= 3; ++i) r.images[static_cast<std::size_t>(p(i) - 1)] = i;
    return r;
}

inline int sign(const Permutation& p) {
    int s = 1;
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j)
            if (p(i) > p(j)) s = -s;
    return s;
}

inline std::string perm_name(const Permutation& p) {
    static const std::array<std::string, kGroupOrder> names = {
        "id", "t12", "t13", "t23", "c1", "c2"};
    return names[perm_index(p)];
}

}  // namespace nalg
