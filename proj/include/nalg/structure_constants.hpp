#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "nalg/rational.hpp"

namespace nalg {

struct UnknownName : std::invalid_argument {
    explicit UnknownName(const std::string& name)
        : std::invalid_argument("unknown builtin algebra: " + name) {}
};

// A finite-dimensional bilinear product over Q: product(e_i, e_j) is the
// vector with coordinates at(i, j, k). Indices are 0-based in code; the JSON
// wire format is 1-based.
class StructureConstants {
  public:
    StructureConstants(std::size_t dim, std::string name)
        : dim_(dim), name_(std::move(name)), c_(dim * dim * dim, Rational(0)) {
        if (dim == 0) throw std::invalid_argument("dimension must be positive");
    }

    std::size_t dim() const { return dim_; }
    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    Rational& at(std::size_t i, std::size_t j, std::size_t k) {
        return c_[(i * dim_ + j) * dim_ + k];
    }
    const Rational& at(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[(i * dim_ + j) * dim_ + k];
    }

    std::vector<Rational> product(const std::vector<Rational>& x,
                                  const std::vector<Rational>& y) const;

    friend bool operator==(const StructureConstants& a, const StructureConstants& b) {
        return a.dim_ == b.dim_ && a.c_ == b.c_;
    }

  private:
    std::size_t dim_;
    std::string name_;
    std::vector<Rational> c_;
};

// Componentwise product on the basis e_i (x) f_j, flattened to index
// i * dim(b) + j.
StructureConstants tensor(const StructureConstants& a, const StructureConstants& b);

// Cayley-Dickson doubling (a,b)(c,d) = (ac - conj(d) b, da + b conj(c)) with
// conjugation fixing e_1 and negating every other basis vector. Requires e_1
// to be a two-sided identity of the input.
StructureConstants cayley_dickson_from(const StructureConstants& base);

// Named example algebras: octonions, quaternions, sl2_commutator, mat2,
// dual_numbers, zero, heisenberg_commutator. Also accepts the spelling
// cayley_dickson_from(<name>). Throws UnknownName otherwise.
StructureConstants builtin(const std::string& name);

const std::vector<std::string>& builtin_names();

}  // namespace nalg
