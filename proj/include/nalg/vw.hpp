#pragma once

#include <optional>
#include <string>
#include <utility>

#include "nalg/group_algebra.hpp"
#include "nalg/kernels.hpp"
#include "nalg/structure_constants.hpp"

namespace nalg {

// The two halves of the associator: left(i,j,k,l) holds (e_i e_j) e_k and
// right(i,j,k,l) holds e_i (e_j e_k); their difference is the associator.
struct LeftRightAssociators {
    explicit LeftRightAssociators(std::size_t dim_in)
        : dim(dim_in),
          left(dim_in * dim_in * dim_in * dim_in, Rational(0)),
          right(left) {}
    std::size_t dim;
    std::vector<Rational> left;
    std::vector<Rational> right;
    std::size_t index(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
        return ((i * dim + j) * dim + k) * dim + l;
    }
};

LeftRightAssociators left_right_associators(const StructureConstants& sc);

// The component conditions: left half annihilated by v, right half by w.
std::pair<bool, bool> satisfies_star(const StructureConstants& sc, const GroupAlgebraElement& v,
                                     const GroupAlgebraElement& w);

// The combined condition: the v-image of the left half minus the w-image of
// the right half vanishes on all basis triples.
bool satisfies_starstar(const StructureConstants& sc, const GroupAlgebraElement& v,
                        const GroupAlgebraElement& w);

struct WitnessResult {
    std::optional<GroupAlgebraElement> witness;
    std::string reason;
    // Intermediates, present when the preconditions hold: coefficients a with
    // sign-vector = sum_i a_i act(s_i, v), and u' = sum_i a_i act(s_i, w - v).
    std::optional<GroupAlgebraElement> coefficients;
    std::optional<GroupAlgebraElement> u_prime;
};

// Searches for chi with chi(u') = 0 and chi(sign-vector) != 0, which forces
// the commutator Jacobi identity for every algebra satisfying the combined
// condition for (v, w). Requires the sign vector in both orbit spans.
WitnessResult lie_admissible_witness(const GroupAlgebraElement& v, const GroupAlgebraElement& w);

// (x1 x2) x3 - x2 (x1 x3) = 0 on all basis triples.
bool monoidal_identity_check(const StructureConstants& sc);

}  // namespace nalg
