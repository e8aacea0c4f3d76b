#include "nalg/kernels.hpp"

#include <array>
#include <atomic>

namespace nalg {
namespace {

// Row of the associator tensor at the ordered triple (a, b, c):
// out[l] = sum_m (c[a][b][m] c[m][c][l] - c[b][c][m] c[a][m][l]).
std::vector<Rational> associator_row(const StructureConstants& sc, std::size_t a, std::size_t b,
                                     std::size_t c) {
    const std::size_t n = sc.dim();
    std::vector<Rational> out(n, Rational(0));
    for (std::size_t m = 0; m < n; ++m) {
        const Rational& ab = sc.at(a, b, m);
        if (ab != 0)
            for (std::size_t l = 0; l < n; ++l) {
                const Rational& mc = sc.at(m, c, l);
                if (mc != 0) out[l] += ab * mc;
            }
        const Rational& bc = sc.at(b, c, m);
        if (bc != 0)
            for (std::size_t l = 0; l < n; ++l) {
                const Rational& am = sc.at(a, m, l);
                if (am != 0) out[l] -= bc * am;
            }
    }
    return out;
}

using IndexTriple = std::array<std::size_t, 3>;

// Defect equations for one index multiset i <= j <= k. Each equation is the
// 6-vector of coefficients (over the group basis) of one (base triple, output
// coordinate) pair; the callback returns false to abort the whole sweep.
template <typename Callback>
bool emit_equations(const StructureConstants& sc, std::size_t i, std::size_t j, std::size_t k,
                    Callback&& cb) {
    const std::size_t n = sc.dim();
    std::vector<IndexTriple> arrangements;
    for (const auto& p : all_permutations()) {
        const IndexTriple base = {i, j, k};
        IndexTriple t;
        for (int m = 1; m <= 3; ++m)
            t[static_cast<std::size_t>(m - 1)] = base[static_cast<std::size_t>(p(m) - 1)];
        bool seen = false;
        for (const auto& u : arrangements)
            if (u == t) {
                seen = true;
                break;
            }
        if (!seen) arrangements.push_back(t);
    }
    std::vector<std::vector<Rational>> rows;
    rows.reserve(arrangements.size());
    for (const auto& t : arrangements) rows.push_back(associator_row(sc, t[0], t[1], t[2]));

    for (const auto& base : arrangements) {
        // Coefficient of v_sigma in the equation for this base triple is the
        // associator row at (base[s^{-1}(1)-1], base[s^{-1}(2)-1], base[s^{-1}(3)-1]).
        std::array<std::size_t, kGroupOrder> row_of_sigma{};
        for (std::size_t si = 0; si < kGroupOrder; ++si) {
            const Permutation sinv = inverse(all_permutations()[si]);
            IndexTriple t;
            for (int m = 1; m <= 3; ++m)
                t[static_cast<std::size_t>(m - 1)] = base[static_cast<std::size_t>(sinv(m) - 1)];
            for (std::size_t r = 0; r < arrangements.size(); ++r)
                if (arrangements[r] == t) {
                    row_of_sigma[si] = r;
                    break;
                }
        }
        for (std::size_t l = 0; l < n; ++l) {
            std::array<const Rational*, kGroupOrder> eq;
            for (std::size_t si = 0; si < kGroupOrder; ++si) eq[si] = &rows[row_of_sigma[si]][l];
            if (!cb(eq)) return false;
        }
    }
    return true;
}

std::vector<IndexTriple> canonical_multisets(std::size_t n) {
    std::vector<IndexTriple> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = j; k < n; ++k) out.push_back({i, j, k});
    return out;
}

// Incrementally intersects the running kernel with each equation's kernel.
class KernelAccumulator {
  public:
    KernelAccumulator() {
        for (std::size_t i = 0; i < kGroupOrder; ++i) {
            std::array<Rational, kGroupOrder> unit{};
            unit[i] = 1;
            basis_.push_back(unit);
        }
    }

    bool empty() const { return basis_.empty(); }

    void constrain(const std::array<const Rational*, kGroupOrder>& eq) {
        if (basis_.empty()) return;
        std::vector<Rational> dots(basis_.size(), Rational(0));
        std::size_t pivot = basis_.size();
        for (std::size_t b = 0; b < basis_.size(); ++b) {
            for (std::size_t i = 0; i < kGroupOrder; ++i)
                if (basis_[b][i] != 0 && *eq[i] != 0) dots[b] += basis_[b][i] * *eq[i];
            if (pivot == basis_.size() && dots[b] != 0) pivot = b;
        }
        if (pivot == basis_.size()) return;
        for (std::size_t b = 0; b < basis_.size(); ++b) {
            if (b == pivot || dots[b] == 0) continue;
            const Rational f = dots[b] / dots[pivot];
            for (std::size_t i = 0; i < kGroupOrder; ++i) basis_[b][i] -= f * basis_[pivot][i];
        }
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(pivot));
    }

    Subspace to_subspace() const {
        std::vector<std::vector<Rational>> rows;
        for (const auto& b : basis_) rows.emplace_back(b.begin(), b.end());
        return Subspace::span(kGroupOrder, rows);
    }

  private:
    std::vector<std::array<Rational, kGroupOrder>> basis_;
};

bool satisfies_impl(const StructureConstants& sc, const GroupAlgebraElement& v, bool parallel) {
    const auto groups = canonical_multisets(sc.dim());
    std::atomic<bool> violated{false};
    const long long count = static_cast<long long>(groups.size());
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
    for (long long g = 0; g < count; ++g) {
        if (violated.load(std::memory_order_relaxed)) continue;
        const auto& t = groups[static_cast<std::size_t>(g)];
        emit_equations(sc, t[0], t[1], t[2],
                       [&](const std::array<const Rational*, kGroupOrder>& eq) {
                           Rational s = 0;
                           for (std::size_t i = 0; i < kGroupOrder; ++i)
                               if (v[i] != 0 && *eq[i] != 0) s += v[i] * *eq[i];
                           if (s != 0) {
                               violated.store(true, std::memory_order_relaxed);
                               return false;
                           }
                           return true;
                       });
    }
    return !violated.load();
}

Subspace annihilator_impl(const StructureConstants& sc, bool parallel) {
    const auto groups = canonical_multisets(sc.dim());
    std::atomic<bool> exhausted{false};
    std::vector<Subspace> partials;
    const long long count = static_cast<long long>(groups.size());
#pragma omp parallel if (parallel)
    {
        KernelAccumulator local;
#pragma omp for schedule(dynamic, 8) nowait
        for (long long g = 0; g < count; ++g) {
            if (exhausted.load(std::memory_order_relaxed) || local.empty()) continue;
            const auto& t = groups[static_cast<std::size_t>(g)];
            emit_equations(sc, t[0], t[1], t[2],
                           [&](const std::array<const Rational*, kGroupOrder>& eq) {
                               local.constrain(eq);
                               return !local.empty();
                           });
            if (local.empty()) exhausted.store(true, std::memory_order_relaxed);
        }
#pragma omp critical
        partials.push_back(local.to_subspace());
    }
    if (exhausted.load()) return Subspace(kGroupOrder);
    Subspace result = partials.front();
    for (std::size_t i = 1; i < partials.size(); ++i) result = result.intersect(partials[i]);
    return result;
}

}  // namespace

AssociatorTensor associator(const StructureConstants& sc) {
    const std::size_t n = sc.dim();
    AssociatorTensor t(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const std::vector<Rational> row = associator_row(sc, i, j, k);
                for (std::size_t l = 0; l < n; ++l) t.at(i, j, k, l) = row[l];
            }
    return t;
}

namespace kernels {
namespace serial {
bool satisfies(const StructureConstants& sc, const GroupAlgebraElement& v) {
    return satisfies_impl(sc, v, false);
}
Subspace annihilator(const StructureConstants& sc) { return annihilator_impl(sc, false); }
}  // namespace serial
namespace par {
bool satisfies(const StructureConstants& sc, const GroupAlgebraElement& v) {
    return satisfies_impl(sc, v, true);
}
Subspace annihilator(const StructureConstants& sc) { return annihilator_impl(sc, true); }
}  // namespace par
}  // namespace kernels

bool satisfies(const StructureConstants& sc, const GroupAlgebraElement& v) {
#ifdef _OPENMP
    return kernels::par::satisfies(sc, v);
#else
    return kernels::serial::satisfies(sc, v);
#endif
}

Subspace annihilator(const StructureConstants& sc) {
#ifdef _OPENMP
    return kernels::par::annihilator(sc);
#else
    return kernels::serial::annihilator(sc);
#endif
}

}  // namespace nalg
