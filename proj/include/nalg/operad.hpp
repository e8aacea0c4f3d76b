#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nalg/classification.hpp"
#include "nalg/group_algebra.hpp"
#include "nalg/subspace.hpp"

namespace nalg {

// Degree-3 elements of the free binary operad. Coordinates 0..5 are the
// left-parenthesized monomials (x_a.x_b).x_c, coordinates 6..11 the
// right-parenthesized x_a.(x_b.x_c); slot p (in the group basis order) holds
// the monomial whose label sequence is (p^{-1}(1), p^{-1}(2), p^{-1}(3)).
inline constexpr std::size_t kOperadDim = 12;
using OperadElement = std::array<Rational, kOperadDim>;

// Slot index of the flat word x_i.x_j.x_k (left half; add kGroupOrder for the
// right-parenthesized twin).
std::size_t word_slot(int i, int j, int k);

std::string monomial_name(std::size_t slot);

// Applies sigma^{-1} to the variable labels of every monomial, preserving
// parenthesization: slot p moves to slot p o sigma.
OperadElement relabel(const Permutation& sigma, const OperadElement& e);

// v |-> sum_sigma v_sigma (left monomial of sigma - right monomial of sigma);
// embeds defect vectors as degree-3 relation candidates.
OperadElement embed_associator(const GroupAlgebraElement& v);

// The signed diagonal pairing: a left slot pairs with itself to -sign(p), a
// right slot to +sign(p), and distinct slots pair to zero.
Rational inner_product(const OperadElement& e, const OperadElement& f);

// Span of the relabel closure of the generators.
Subspace operad_submodule(const std::vector<OperadElement>& generators);

// The relation module of the family with the given pinned generator: the
// relabel closure of its embedded defect vector.
Subspace relation_module(const GroupAlgebraElement& generator);

Subspace associativity_module();

Subspace orthogonal_complement(const Subspace& r);

std::vector<Rational> operad_to_vector(const OperadElement& e);
OperadElement operad_from_vector(const std::vector<Rational>& v);

struct UnknownType : std::invalid_argument {
    explicit UnknownType(const std::string& label)
        : std::invalid_argument("no dual-relation table for type: " + label) {}
};

// The published dual-relation generators of a family: the associativity
// vector followed by the family's printed left-parenthesized relation(s).
// Parametric families need t. Throws UnknownType for unknown labels.
std::vector<OperadElement> dual_relations(const std::string& family,
                                          const std::optional<Rational>& parameter = std::nullopt);

struct DualCheck {
    std::string family = "unclassified";
    std::optional<Rational> parameter;
    std::vector<OperadElement> relations;
    std::size_t r_dim = 0;
    std::size_t r_perp_dim = 0;
    bool generator_contract_ok = false;  // each relation pairs to 0 with the embedded generator
    bool module_orthogonal_ok = false;   // each relation pairs to 0 with all of R
    bool equals_complement_ok = false;   // closure of the relations equals the complement
    bool matches_paper_table = false;    // orthogonal and equal
    bool mirror_module_match = false;    // failing table verifies against the
                                         // support-inverted generator's module
    Subspace r{kOperadDim};
    Subspace r_perp{kOperadDim};
    std::vector<std::string> discrepancies;
};

// Verifies a family's published dual relations against the computed
// complement; printed relations that fail are flagged, never corrected.
DualCheck verify_dual(const std::string& family,
                      const std::optional<Rational>& parameter = std::nullopt);

struct DualDecomposition {
    Subspace r{kOperadDim};
    Subspace r_perp{kOperadDim};
    bool contains_associativity = false;
    // Complement of the associativity module inside r_perp: the purely
    // left-parenthesized part, with its flat 6-coordinate image.
    Subspace u{kOperadDim};
    Subspace u_flat{kGroupOrder};
    bool direct_sum_ok = false;
    IrrepMultiplicities u_parts;  // of the support-inverted flat module
    bool sign_flat_line_in_u = false;
    bool trivial_flat_line_in_u = false;
};

// r_perp = associativity module (+) U for the relation module of v, with U
// identified as a module of flat words.
DualDecomposition decompose_dual(const GroupAlgebraElement& v);

}  // namespace nalg
