#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "nalg/group_algebra.hpp"
#include "nalg/rational.hpp"

namespace nalg {

struct NotInvariant : std::runtime_error {
    NotInvariant() : std::runtime_error("subspace is not stable under the group action") {}
};

struct OddStandardDimension : std::runtime_error {
    OddStandardDimension()
        : std::runtime_error("leftover dimension after the one-dimensional parts is odd") {}
};

// Multiplicities of the three irreducible module types inside an invariant
// subspace: the trivial line, the sign line, and the two-dimensional module.
struct IrrepMultiplicities {
    int trivial = 0;
    int sign = 0;
    int standard = 0;
    friend bool operator==(const IrrepMultiplicities&, const IrrepMultiplicities&) = default;
};

// A linear subspace of Q^width held in canonical reduced row echelon form
// (leading ones, sorted pivots), so equal subspaces have identical bases.
class Subspace {
  public:
    explicit Subspace(std::size_t width) : width_(width) {}
    static Subspace span(std::size_t width, const std::vector<std::vector<Rational>>& vectors);

    std::size_t width() const { return width_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<std::vector<Rational>>& basis() const { return rows_; }

    bool contains(const std::vector<Rational>& v) const;
    bool contains(const Subspace& other) const;
    // Residual of v after elimination against the basis; zero iff contained.
    std::vector<Rational> reduce(const std::vector<Rational>& v) const;

    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;
    friend bool operator==(const Subspace& a, const Subspace& b) = default;

  private:
    std::size_t width_;
    std::vector<std::vector<Rational>> rows_;  // canonical RREF, no zero rows
};

// Nullspace of an m x n matrix, as a Subspace of Q^n.
Subspace nullspace(std::size_t columns, const std::vector<std::vector<Rational>>& matrix);

// Coefficients x with sum_i x_i * columns[i] = target, canonical in the sense
// that non-pivot coordinates are zero; nullopt when target is outside the span.
std::optional<std::vector<Rational>> solve_in_span(
    const std::vector<std::vector<Rational>>& columns, const std::vector<Rational>& target);

std::vector<Rational> to_vector(const GroupAlgebraElement& v);
GroupAlgebraElement from_vector(const std::vector<Rational>& v);

// Smallest invariant subspace containing v: the span of its orbit.
Subspace span_of_orbit(const GroupAlgebraElement& v);

bool is_invariant(const Subspace& s);

// Splits an invariant subspace of the group algebra into irreducible
// multiplicities. Throws NotInvariant / OddStandardDimension.
IrrepMultiplicities decompose(const Subspace& s);

}  // namespace nalg
