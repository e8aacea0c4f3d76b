#pragma once

#include <cstddef>
#include <vector>

#include "nalg/group_algebra.hpp"
#include "nalg/structure_constants.hpp"
#include "nalg/subspace.hpp"

namespace nalg {

// Dense associator tensor A(e_i, e_j, e_k) = sum_l at(i,j,k,l) e_l. Fine for
// small dimensions; the streaming kernels below avoid materializing it.
struct AssociatorTensor {
    explicit AssociatorTensor(std::size_t dim_in)
        : dim(dim_in), a(dim_in * dim_in * dim_in * dim_in, Rational(0)) {}
    std::size_t dim;
    std::vector<Rational> a;
    Rational& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
        return a[((i * dim + j) * dim + k) * dim + l];
    }
    const Rational& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
        return a[((i * dim + j) * dim + k) * dim + l];
    }
    bool is_zero() const {
        for (const auto& x : a)
            if (x != 0) return false;
        return true;
    }
};

AssociatorTensor associator(const StructureConstants& sc);

// satisfies and annihilator stream the defect equations grouped by index
// multiset, so each associator row is computed once and nothing of size n^4
// is ever stored. serial is the reference; par partitions the equation groups
// across OpenMP threads and merges deterministically (kernel intersection is
// order-independent and the result is canonical).
namespace kernels {
namespace serial {
bool satisfies(const StructureConstants& sc, const GroupAlgebraElement& v);
Subspace annihilator(const StructureConstants& sc);
}  // namespace serial
namespace par {
bool satisfies(const StructureConstants& sc, const GroupAlgebraElement& v);
Subspace annihilator(const StructureConstants& sc);
}  // namespace par
}  // namespace kernels

// Default entry points; parallel when built with OpenMP.
bool satisfies(const StructureConstants& sc, const GroupAlgebraElement& v);
Subspace annihilator(const StructureConstants& sc);

}  // namespace nalg
