#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nalg/group_algebra.hpp"
#include "nalg/subspace.hpp"

namespace nalg {

struct ZeroVector : std::invalid_argument {
    ZeroVector() : std::invalid_argument("the zero vector does not select a module") {}
};

struct ConstraintViolated : std::invalid_argument {
    explicit ConstraintViolated(const std::string& what) : std::invalid_argument(what) {}
};

struct ClassificationResult {
    bool classified = false;
    std::string family = "unclassified";  // "I", "II", "III_1", ..., "V'", "unclassified"
    std::optional<Rational> parameter;    // set for the one-parameter families
    std::size_t module_dim = 0;
    IrrepMultiplicities parts;

    std::string label() const;  // e.g. "III_1(t=-1)" or "unclassified"
};

struct CanonicalGenerator {
    std::string family;
    std::optional<Rational> parameter;
    GroupAlgebraElement generator;
};

// One representative generator per family; the one-parameter families are
// instantiated at t = 2, which is in the valid range for all three.
const std::vector<CanonicalGenerator>& canonical_generators();

// The pinned generator of a family, with t supplied for parametric families.
GroupAlgebraElement family_generator(const std::string& family,
                                     const std::optional<Rational>& parameter = std::nullopt);

// Identifies the module generated by v among the families whose member
// algebras have sign-symmetric defect (the sign line lies in the module).
ClassificationResult classify_lie_admissible(const GroupAlgebraElement& v);

// Same, for the families whose modules contain the trivial line.
ClassificationResult classify_power_associative(const GroupAlgebraElement& v);

// Characteristic vector of the i-th subgroup in the fixed enumeration
// (i = 1..6): the sum of the basis vectors of its elements.
GroupAlgebraElement gi_vector(int i);

// Defect vector of the two-dimensional algebra pinned down by the pair
// (lambda1, lambda3); throws ZeroVector when both parameters vanish.
GroupAlgebraElement two_dim_canonical(const Rational& lambda1, const Rational& lambda3);

// Defect vector of the (alpha, beta) family; requires the exact relation
// alpha^2 = 1 + beta + beta^2 and throws ConstraintViolated otherwise.
GroupAlgebraElement alpha_beta_family(const Rational& a1, const Rational& a2,
                                      const Rational& alpha, const Rational& beta);

}  // namespace nalg
