#include "nalg/analysis.hpp"

#include "nalg/rng.hpp"

namespace nalg {
namespace {

std::vector<Rational> basis_vector(std::size_t n, std::size_t i) {
    std::vector<Rational> e(n, Rational(0));
    e[i] = 1;
    return e;
}

bool all_zero(const std::vector<Rational>& v) {
    for (const auto& c : v)
        if (c != 0) return false;
    return true;
}

std::vector<Rational> associate(const StructureConstants& sc, const std::vector<Rational>& x,
                                const std::vector<Rational>& y, const std::vector<Rational>& z) {
    std::vector<Rational> left = sc.product(sc.product(x, y), z);
    const std::vector<Rational> right = sc.product(x, sc.product(y, z));
    for (std::size_t l = 0; l < left.size(); ++l) left[l] -= right[l];
    return left;
}

}  // namespace

bool jacobi_check(const StructureConstants& sc) {
    const std::size_t n = sc.dim();
    auto bracket = [&](const std::vector<Rational>& x, const std::vector<Rational>& y) {
        std::vector<Rational> b = sc.product(x, y);
        const std::vector<Rational> yx = sc.product(y, x);
        for (std::size_t l = 0; l < n; ++l) b[l] -= yx[l];
        return b;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const auto ei = basis_vector(n, i), ej = basis_vector(n, j), ek = basis_vector(n, k);
                std::vector<Rational> s = bracket(bracket(ei, ej), ek);
                const auto t1 = bracket(bracket(ej, ek), ei);
                const auto t2 = bracket(bracket(ek, ei), ej);
                for (std::size_t l = 0; l < n; ++l) s[l] += t1[l] + t2[l];
                if (!all_zero(s)) return false;
            }
    return true;
}

bool power_assoc_check(const StructureConstants& sc) {
    const std::size_t n = sc.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = j; k < n; ++k) {
                const std::size_t idx[3] = {i, j, k};
                std::vector<Rational> acc(n, Rational(0));
                for (const auto& p : all_permutations()) {
                    const auto x = basis_vector(n, idx[p(1) - 1]);
                    const auto y = basis_vector(n, idx[p(2) - 1]);
                    const auto z = basis_vector(n, idx[p(3) - 1]);
                    const auto a = associate(sc, x, y, z);
                    for (std::size_t l = 0; l < n; ++l) acc[l] += a[l];
                }
                if (!all_zero(acc)) return false;
            }
    return true;
}

bool alternative_check(const StructureConstants& sc) {
    const std::size_t n = sc.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const auto ei = basis_vector(n, i), ej = basis_vector(n, j), ek = basis_vector(n, k);
                const auto a = associate(sc, ei, ej, ek);
                auto left = associate(sc, ej, ei, ek);
                auto right = associate(sc, ei, ek, ej);
                for (std::size_t l = 0; l < n; ++l) {
                    left[l] += a[l];
                    right[l] += a[l];
                }
                if (!all_zero(left) || !all_zero(right)) return false;
            }
    return true;
}

std::optional<GroupAlgebraElement> cyclic_generator(const Subspace& s) {
    if (s.width() != kGroupOrder || s.dim() == 0) return std::nullopt;
    std::vector<GroupAlgebraElement> candidates;
    const auto& rows = s.basis();
    for (const auto& r : rows) candidates.push_back(from_vector(r));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i + 1; j < rows.size(); ++j)
            candidates.push_back(add(from_vector(rows[i]), from_vector(rows[j])));
    GroupAlgebraElement total{};
    for (const auto& r : rows) total = add(total, from_vector(r));
    candidates.push_back(total);
    SplitMix64 rng(0x6e616c67);
    for (int trial = 0; trial < 40; ++trial) {
        GroupAlgebraElement g{};
        for (const auto& r : rows) {
            const Rational c(rng.range(1, 7));
            g = add(g, scale(c, from_vector(r)));
        }
        candidates.push_back(g);
    }
    for (const auto& g : candidates) {
        if (is_zero(g)) continue;
        if (span_of_orbit(g) == s) return g;
    }
    return std::nullopt;
}

AlgebraAnalysis analyze(const StructureConstants& sc) {
    AlgebraAnalysis out;
    out.dim = sc.dim();
    out.ann = annihilator(sc);
    out.ann_invariant = is_invariant(out.ann);
    if (out.ann_invariant) out.parts = decompose(out.ann);
    out.jacobi = jacobi_check(sc);
    out.power_assoc = power_assoc_check(sc);
    out.alternative = alternative_check(sc);
    if (out.ann_invariant && out.ann.dim() > 0) {
        if (const auto g = cyclic_generator(out.ann)) {
            ClassificationResult la = classify_lie_admissible(*g);
            out.type = la.classified ? la : classify_power_associative(*g);
        }
    }
    return out;
}

}  // namespace nalg
