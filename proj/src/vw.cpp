#include "nalg/vw.hpp"

#include "nalg/subspace.hpp"

namespace nalg {
namespace {

// Evaluates sum_sigma v_sigma * half[(t(1), t(2), t(3), l)] with
// t(m) = triple[sigma^{-1}(m) - 1] over all base triples and outputs; true
// iff every value is zero. combine subtracts the second term when given.
bool annihilated(const LeftRightAssociators& lr, const std::vector<Rational>& half,
                 const GroupAlgebraElement& v, const std::vector<Rational>* other_half,
                 const GroupAlgebraElement* w) {
    const std::size_t n = lr.dim;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const std::size_t base[3] = {i, j, k};
                for (std::size_t l = 0; l < n; ++l) {
                    Rational s = 0;
                    for (std::size_t si = 0; si < kGroupOrder; ++si) {
                        const Permutation sinv = inverse(all_permutations()[si]);
                        const std::size_t a = base[static_cast<std::size_t>(sinv(1) - 1)];
                        const std::size_t b = base[static_cast<std::size_t>(sinv(2) - 1)];
                        const std::size_t c = base[static_cast<std::size_t>(sinv(3) - 1)];
                        if (v[si] != 0) s += v[si] * half[lr.index(a, b, c, l)];
                        if (w && (*w)[si] != 0) s -= (*w)[si] * (*other_half)[lr.index(a, b, c, l)];
                    }
                    if (s != 0) return false;
                }
            }
    return true;
}

}  // namespace

LeftRightAssociators left_right_associators(const StructureConstants& sc) {
    const std::size_t n = sc.dim();
    LeftRightAssociators lr(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t m = 0; m < n; ++m) {
                const Rational& cij = sc.at(i, j, m);
                if (cij == 0) continue;
                for (std::size_t k = 0; k < n; ++k)
                    for (std::size_t l = 0; l < n; ++l) {
                        // (e_i e_j) e_k through e_m.
                        const Rational& cmk = sc.at(m, k, l);
                        if (cmk != 0) lr.left[lr.index(i, j, k, l)] += cij * cmk;
                        // e_k (e_i e_j) through e_m: right(k, i, j, l).
                        const Rational& ckm = sc.at(k, m, l);
                        if (ckm != 0) lr.right[lr.index(k, i, j, l)] += cij * ckm;
                    }
            }
    return lr;
}

std::pair<bool, bool> satisfies_star(const StructureConstants& sc, const GroupAlgebraElement& v,
                                     const GroupAlgebraElement& w) {
    const LeftRightAssociators lr = left_right_associators(sc);
    return {annihilated(lr, lr.left, v, nullptr, nullptr),
            annihilated(lr, lr.right, w, nullptr, nullptr)};
}

bool satisfies_starstar(const StructureConstants& sc, const GroupAlgebraElement& v,
                        const GroupAlgebraElement& w) {
    const LeftRightAssociators lr = left_right_associators(sc);
    return annihilated(lr, lr.left, v, &lr.right, &w);
}

WitnessResult lie_admissible_witness(const GroupAlgebraElement& v, const GroupAlgebraElement& w) {
    WitnessResult out;
    const std::vector<Rational> sign_vec = to_vector(vector_V());
    if (!span_of_orbit(v).contains(sign_vec)) {
        out.reason = "sign vector is not in the module generated by the first element";
        return out;
    }
    if (!span_of_orbit(w).contains(sign_vec)) {
        out.reason = "sign vector is not in the module generated by the second element";
        return out;
    }
    std::vector<std::vector<Rational>> columns;
    for (const auto& s : all_permutations()) columns.push_back(to_vector(act(s, v)));
    const auto solved = solve_in_span(columns, sign_vec);
    if (!solved) {
        out.reason = "internal: span test and solve disagree";
        return out;
    }
    const GroupAlgebraElement a = from_vector(*solved);
    out.coefficients = a;
    const GroupAlgebraElement u_prime = apply_element(a, sub(w, v));
    out.u_prime = u_prime;
    if (is_zero(u_prime)) {
        out.witness = delta(perm_id());
        out.reason = "both images coincide; the identity element certifies";
        return out;
    }
    // chi(u') = 0 is linear in chi: kernel of the matrix whose columns are
    // act(s_i, u'); chi(V) scales the sign vector by the signed coefficient
    // sum, so any kernel element with nonzero signed sum certifies.
    std::vector<std::vector<Rational>> rows(kGroupOrder,
                                            std::vector<Rational>(kGroupOrder, Rational(0)));
    for (std::size_t i = 0; i < kGroupOrder; ++i) {
        const GroupAlgebraElement col = act(all_permutations()[i], u_prime);
        for (std::size_t r = 0; r < kGroupOrder; ++r) rows[r][i] = col[r];
    }
    const Subspace kernel = nullspace(kGroupOrder, rows);
    for (const auto& row : kernel.basis()) {
        const GroupAlgebraElement chi = from_vector(row);
        if (signed_coefficient_sum(chi) != 0) {
            out.witness = chi;
            out.reason = "kernel element with nonzero signed sum";
            return out;
        }
    }
    out.reason = "every element annihilating u' pairs the sign vector to zero";
    return out;
}

bool monoidal_identity_check(const StructureConstants& sc) {
    const std::size_t n = sc.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    Rational s = 0;
                    for (std::size_t m = 0; m < n; ++m) {
                        const Rational& cij = sc.at(i, j, m);
                        if (cij != 0) s += cij * sc.at(m, k, l);
                        const Rational& cik = sc.at(i, k, m);
                        if (cik != 0) s -= sc.at(j, m, l) * cik;
                    }
                    if (s != 0) return false;
                }
    return true;
}

}  // namespace nalg
