#pragma once

#include <array>
#include <string>
#include <vector>

#include "nalg/permutation.hpp"
#include "nalg/rational.hpp"

namespace nalg {

// An element of the rational group algebra of the symmetric group on three
// letters: six exact-rational coefficients over the canonical basis order
// (id, t12, t13, t23, c1, c2).
using GroupAlgebraElement = std::array<Rational, kGroupOrder>;

inline GroupAlgebraElement zero_element() { return {}; }

inline GroupAlgebraElement delta(const Permutation& p) {
    GroupAlgebraElement e{};
    e[perm_index(p)] = 1;
    return e;
}

// The sign-line generator: coefficients sign(sigma).
inline GroupAlgebraElement vector_V() {
    GroupAlgebraElement e{};
    for (std::size_t i = 0; i < kGroupOrder; ++i) e[i] = sign(all_permutations()[i]);
    return e;
}

// The trivial-line generator: all coefficients 1.
inline GroupAlgebraElement vector_W() {
    GroupAlgebraElement e{};
    e.fill(Rational(1));
    return e;
}

inline bool is_zero(const GroupAlgebraElement& v) {
    for (const auto& c : v)
        if (c != 0) return false;
    return true;
}

inline GroupAlgebraElement add(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    GroupAlgebraElement r{};
    for (std::size_t i = 0; i < kGroupOrder; ++i) r[i] = a[i] + b[i];
    return r;
}

inline GroupAlgebraElement sub(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    GroupAlgebraElement r{};
    for (std::size_t i = 0; i < kGroupOrder; ++i) r[i] = a[i] - b[i];
    return r;
}

inline GroupAlgebraElement scale(const Rational& c, const GroupAlgebraElement& v) {
    GroupAlgebraElement r{};
    for (std::size_t i = 0; i < kGroupOrder; ++i) r[i] = c * v[i];
    return r;
}

// The group action on the group algebra: act(p, v) = sum_i a_i (p^{-1} o s_i),
// re-expressed in the canonical basis. With the composition convention
// (p*q)(i) = p(q(i)) this satisfies act(s, act(t, v)) = act(t*s, v).
inline GroupAlgebraElement act(const Permutation& p, const GroupAlgebraElement& v) {
    GroupAlgebraElement r{};
    const Permutation pinv = inverse(p);
    for (std::size_t i = 0; i < kGroupOrder; ++i)
        r[perm_index(compose(pinv, all_permutations()[i]))] += v[i];
    return r;
}

// Bilinear extension of group composition:
// multiply(x, y) = sum_{i,j} x_i y_j (s_i o s_j).
inline GroupAlgebraElement multiply(const GroupAlgebraElement& x, const GroupAlgebraElement& y) {
    GroupAlgebraElement r{};
    for (std::size_t i = 0; i < kGroupOrder; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < kGroupOrder; ++j) {
            if (y[j] == 0) continue;
            r[perm_index(compose(all_permutations()[i], all_permutations()[j]))] += x[i] * y[j];
        }
    }
    return r;
}

// Right translate v |-> v * s (coefficient of q moves to q o s). Together with
// act this gives both module structures on the group algebra.
inline GroupAlgebraElement right_translate(const GroupAlgebraElement& v, const Permutation& s) {
    GroupAlgebraElement r{};
    for (std::size_t i = 0; i < kGroupOrder; ++i)
        r[perm_index(compose(all_permutations()[i], s))] += v[i];
    return r;
}

// Support inversion x |-> sum x_i s_i^{-1}; an anti-automorphism.
inline GroupAlgebraElement invert_support(const GroupAlgebraElement& v) {
    GroupAlgebraElement r{};
    for (std::size_t i = 0; i < kGroupOrder; ++i)
        r[perm_index(inverse(all_permutations()[i]))] += v[i];
    return r;
}

// Applies v = sum v_i s_i as an operator: v(x) = sum v_i act(s_i, x).
inline GroupAlgebraElement apply_element(const GroupAlgebraElement& v, const GroupAlgebraElement& x) {
    GroupAlgebraElement r{};
    for (std::size_t i = 0; i < kGroupOrder; ++i) {
        if (v[i] == 0) continue;
        GroupAlgebraElement t = act(all_permutations()[i], x);
        for (std::size_t j = 0; j < kGroupOrder; ++j) r[j] += v[i] * t[j];
    }
    return r;
}

inline Rational coefficient_sum(const GroupAlgebraElement& v) {
    Rational s = 0;
    for (const auto& c : v) s += c;
    return s;
}

inline Rational signed_coefficient_sum(const GroupAlgebraElement& v) {
    Rational s = 0;
    for (std::size_t i = 0; i < kGroupOrder; ++i) s += Rational(sign(all_permutations()[i])) * v[i];
    return s;
}

// The six elements act(s, v), deduplicated, in basis order of s.
inline std::vector<GroupAlgebraElement> orbit(const GroupAlgebraElement& v) {
    std::vector<GroupAlgebraElement> out;
    for (const auto& s : all_permutations()) {
        GroupAlgebraElement w = act(s, v);
        bool seen = false;
        for (const auto& u : out)
            if (u == w) {
                seen = true;
                break;
            }
        if (!seen) out.push_back(w);
    }
    return out;
}

inline std::vector<std::string> to_strings(const GroupAlgebraElement& v) {
    std::vector<std::string> out;
    out.reserve(kGroupOrder);
    for (const auto& c : v) out.push_back(format_rational(c));
    return out;
}

}  // namespace nalg
