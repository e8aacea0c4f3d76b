#pragma once

#include <optional>

#include "nalg/classification.hpp"
#include "nalg/kernels.hpp"
#include "nalg/structure_constants.hpp"
#include "nalg/subspace.hpp"

namespace nalg {

// Brute-force identity checks computed directly from products, independent of
// the group-algebra machinery. Each is equivalent to a membership statement
// about the annihilator; the equivalences are property-tested, not assumed.

// Jacobi identity for the commutator [x, y] = xy - yx on all basis triples.
bool jacobi_check(const StructureConstants& sc);

// Vanishing of the fully symmetrized associator on all basis triples.
bool power_assoc_check(const StructureConstants& sc);

// Polarized alternative identities: A(x,y,z) + A(y,x,z) = 0 and
// A(x,y,z) + A(x,z,y) = 0 on all basis triples.
bool alternative_check(const StructureConstants& sc);

// A single element whose orbit spans the invariant subspace, if one is found
// among basis rows, simple sums, and a handful of seeded combinations.
std::optional<GroupAlgebraElement> cyclic_generator(const Subspace& s);

struct AlgebraAnalysis {
    std::size_t dim = 0;
    Subspace ann{kGroupOrder};
    // The defect equations are closed under relabeling the base triple, which
    // makes every annihilator right-translation stable; stability under the
    // full action can fail for lopsided products, so it is recorded, and
    // parts/type are only meaningful when it holds.
    bool ann_invariant = false;
    IrrepMultiplicities parts;
    bool jacobi = false;
    bool power_assoc = false;
    bool alternative = false;
    ClassificationResult type;
};

// Full report: annihilator, its decomposition, the three checks, and the
// family label recovered from a generator of the annihilator.
AlgebraAnalysis analyze(const StructureConstants& sc);

}  // namespace nalg
