// Acceptance gate: one terse pass/fail line per criterion, exit status is the
// number of failures. Everything is exact rational arithmetic; there are no
// tolerances anywhere.
#include <chrono>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "nalg/analysis.hpp"
#include "nalg/classification.hpp"
#include "nalg/group_algebra.hpp"
#include "nalg/kernels.hpp"
#include "nalg/operad.hpp"
#include "nalg/rng.hpp"
#include "nalg/structure_constants.hpp"
#include "nalg/subspace.hpp"
#include "nalg/vw.hpp"

using namespace nalg;

namespace {

int failures = 0;

void verdict(int n, const std::string& text, bool ok) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << text << "\n";
    if (!ok) ++failures;
}

void note(const std::string& text) { std::cout << "  note: " << text << "\n"; }

GroupAlgebraElement elem(long a, long b, long c, long d, long e, long f) {
    return {rat(a), rat(b), rat(c), rat(d), rat(e), rat(f)};
}

GroupAlgebraElement random_element(SplitMix64& rng) {
    GroupAlgebraElement v = zero_element();
    for (auto& x : v) x = rat(rng.range(-5, 5));
    return v;
}

StructureConstants random_algebra(SplitMix64& rng, std::size_t dim) {
    StructureConstants sc(dim, "seeded");
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k)
                if (rng.next() % 10 < 3) sc.at(i, j, k) = rat(rng.range(-2, 2));
    return sc;
}

StructureConstants right_symmetric_example() {
    StructureConstants sc(2, "rsym");
    sc.at(0, 0, 1) = rat(1);
    sc.at(0, 1, 0) = rat(1);
    sc.at(1, 1, 1) = rat(2);
    return sc;
}

bool criterion1() {
    bool ok = span_of_orbit(vector_V()).dim() == 1 && span_of_orbit(vector_W()).dim() == 1;
    for (const auto& s : all_permutations()) {
        ok = ok && act(s, vector_V()) == scale(rat(sign(s)), vector_V());
        ok = ok && act(s, vector_W()) == vector_W();
    }
    return ok;
}

bool criterion2() {
    return span_of_orbit(elem(1, 0, 0, 0, 0, -1)).dim() == 4 &&
           span_of_orbit(elem(2, -1, -1, -1, 1, 0)).dim() == 5 &&
           span_of_orbit(elem(1, 0, 0, 0, 0, 0)).dim() == 6;
}

bool criterion3() {
    bool ok = true;
    for (const auto& g : canonical_generators()) {
        bool matched = false;
        for (const auto& r :
             {classify_lie_admissible(g.generator), classify_power_associative(g.generator)}) {
            if (r.classified && r.family == g.family && r.parameter == g.parameter)
                matched = true;
        }
        ok = ok && matched;
    }

    SplitMix64 rng(0xacc3);
    for (int trial = 0; trial < 300 && ok; ++trial) {
        GroupAlgebraElement v = random_element(rng);
        if (is_zero(v)) continue;
        std::string base_la = classify_lie_admissible(v).label();
        std::string base_pa = classify_power_associative(v).label();
        for (const auto& s : all_permutations()) {
            GroupAlgebraElement w = act(s, v);
            ok = ok && classify_lie_admissible(w).label() == base_la &&
                 classify_power_associative(w).label() == base_pa;
        }
        for (const auto& c : {rat(2), rat(-3), rat(1, 2)}) {
            GroupAlgebraElement w = scale(c, v);
            ok = ok && classify_lie_admissible(w).label() == base_la &&
                 classify_power_associative(w).label() == base_pa;
        }
    }

    SplitMix64 rng2(0xacc3b);
    std::vector<Rational> sign_line = to_vector(vector_V());
    for (int trial = 0; trial < 1000 && ok; ++trial) {
        GroupAlgebraElement v = random_element(rng2);
        if (is_zero(v)) continue;
        bool member = span_of_orbit(v).contains(sign_line);
        ok = ok && classify_lie_admissible(v).classified == member;
    }
    return ok;
}

bool criterion4() {
    auto t0 = std::chrono::steady_clock::now();
    StructureConstants oct = builtin("octonions");
    Subspace ann = annihilator(oct);
    bool alt = alternative_check(oct);
    bool pow = power_assoc_check(oct);
    bool jac = jacobi_check(oct);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = ann.dim() == 5 && ann == span_of_orbit(elem(2, 1, 1, 1, 1, 0)) && alt && pow &&
              !jac && secs < 5.0;
    std::ostringstream msg;
    msg << "octonion annihilator pass took " << secs << " s";
    note(msg.str());
    return ok;
}

bool criterion5() {
    Subspace alt_module = span_of_orbit(elem(2, 1, 1, 1, 1, 0));
    std::vector<Rational> sign_line = to_vector(vector_V());
    std::vector<Rational> trivial_line = to_vector(vector_W());
    auto agree = [&](const StructureConstants& sc) {
        Subspace ann = annihilator(sc);
        return ann.contains(sign_line) == jacobi_check(sc) &&
               ann.contains(trivial_line) == power_assoc_check(sc) &&
               ann.contains(alt_module) == alternative_check(sc);
    };
    bool ok = true;
    for (const auto& name : builtin_names()) ok = ok && agree(builtin(name));
    SplitMix64 rng(0xacc5);
    for (int trial = 0; trial < 200 && ok; ++trial) {
        ok = ok && agree(random_algebra(rng, 2 + trial % 2));
    }
    return ok;
}

bool criterion6() {
    StructureConstants x = right_symmetric_example();
    bool ok = satisfies(x, elem(1, 0, 0, -1, 0, 0)) && !associator(x).is_zero();
    ok = ok && annihilator(tensor(x, x)).dim() == 0;
    StructureConstants d = builtin("dual_numbers");
    StructureConstants q = builtin("quaternions");
    ok = ok && annihilator(tensor(d, d)).dim() == kGroupOrder;
    ok = ok && annihilator(tensor(q, builtin("mat2"))).dim() == kGroupOrder;
    return ok;
}

bool criterion7() {
    WitnessResult ex1 = lie_admissible_witness(elem(1, 0, 0, -1, 0, 0), elem(1, -1, 0, 0, 0, 0));
    bool ok = ex1.witness.has_value() && ex1.u_prime.has_value();
    if (ok) {
        ok = is_zero(apply_element(*ex1.witness, *ex1.u_prime)) &&
             signed_coefficient_sum(*ex1.witness) != 0;
        GroupAlgebraElement chi = elem(1, 1, 1, 0, 0, 0);
        ok = ok && is_zero(apply_element(chi, *ex1.u_prime));
    }

    WitnessResult ex2 = lie_admissible_witness(elem(2, -1, -1, -1, 1, 0), elem(1, 0, 0, 0, 1, 1));
    ok = ok && !ex2.witness.has_value() && ex2.u_prime.has_value();
    if (ok) {
        std::vector<std::vector<Rational>> cols;
        for (const auto& s : all_permutations()) cols.push_back(to_vector(act(s, *ex2.u_prime)));
        std::vector<std::vector<Rational>> matrix;
        for (std::size_t coord = 0; coord < kGroupOrder; ++coord) {
            std::vector<Rational> row(kGroupOrder);
            for (std::size_t i = 0; i < kGroupOrder; ++i) row[i] = cols[i][coord];
            matrix.push_back(std::move(row));
        }
        Subspace kernel = nullspace(kGroupOrder, matrix);
        ok = kernel.dim() > 0;
        for (const auto& chi : kernel.basis()) {
            ok = ok && signed_coefficient_sum(from_vector(chi)) == 0;
        }
    }
    return ok;
}

// All commutative two-dimensional tables over {-1,0,1} with zero associator;
// commutativity plus associativity forces the interchange identity.
std::vector<StructureConstants> interchange_pool() {
    std::vector<StructureConstants> pool;
    std::array<long, 6> e{};
    for (long mask = 0; mask < 729; ++mask) {
        long m = mask;
        for (int i = 0; i < 6; ++i) {
            e[i] = m % 3 - 1;
            m /= 3;
        }
        StructureConstants sc(2, "pool");
        sc.at(0, 0, 0) = rat(e[0]);
        sc.at(0, 0, 1) = rat(e[1]);
        sc.at(0, 1, 0) = rat(e[2]);
        sc.at(0, 1, 1) = rat(e[3]);
        sc.at(1, 0, 0) = rat(e[2]);
        sc.at(1, 0, 1) = rat(e[3]);
        sc.at(1, 1, 0) = rat(e[4]);
        sc.at(1, 1, 1) = rat(e[5]);
        if (associator(sc).is_zero()) pool.push_back(std::move(sc));
    }
    return pool;
}

bool criterion8() {
    std::vector<StructureConstants> pool = interchange_pool();
    bool ok = pool.size() >= 20;
    for (const auto& sc : pool) ok = ok && monoidal_identity_check(sc);
    SplitMix64 rng(0xacc8);
    for (int trial = 0; trial < 50 && ok; ++trial) {
        const StructureConstants& a = pool[static_cast<std::size_t>(rng.range(0, 1000)) % pool.size()];
        const StructureConstants& b = pool[static_cast<std::size_t>(rng.range(0, 1000)) % pool.size()];
        ok = ok && monoidal_identity_check(tensor(a, b));
    }
    return ok;
}

bool criterion9() {
    const std::vector<std::pair<std::string, std::optional<Rational>>> labels = {
        {"I", std::nullopt},      {"II", std::nullopt},     {"III_1", rat(2)},
        {"III_2", std::nullopt},  {"III_3", std::nullopt},  {"IV_1", rat(2)},
        {"IV_2", std::nullopt},   {"IV_3", std::nullopt},   {"V", std::nullopt},
        {"VI", std::nullopt},     {"I'", std::nullopt},     {"III'_1", rat(2)},
        {"III'_2", std::nullopt}, {"V'", std::nullopt}};
    const std::set<std::string> expected_verified = {"I",  "II", "III_1", "IV_2",
                                                     "V",  "VI", "I'",    "V'"};
    bool ok = true;
    std::string flagged;
    for (const auto& [family, t] : labels) {
        DualCheck dc = verify_dual(family, t);
        ok = ok && dc.r_dim + dc.r_perp_dim == kOperadDim;
        ok = ok && dc.generator_contract_ok;
        if (expected_verified.count(family)) {
            ok = ok && dc.matches_paper_table && dc.discrepancies.empty();
        } else {
            ok = ok && !dc.matches_paper_table && !dc.discrepancies.empty();
            ok = ok && dc.r_perp.dim() == kOperadDim - dc.r_dim;
            if (!flagged.empty()) flagged += ", ";
            flagged += family;
        }
    }
    Subspace ass = associativity_module();
    ok = ok && orthogonal_complement(ass) == ass;
    note("flagged printed tables (computed complement reported instead): " + flagged);
    return ok;
}

bool criterion10() {
    DualDecomposition d1 = decompose_dual(family_generator("IV_1", rat(2)));
    bool ok = d1.contains_associativity && d1.direct_sum_ok && d1.u.dim() == 2 &&
              d1.u_parts == IrrepMultiplicities{0, 0, 1};

    DualDecomposition d2 = decompose_dual(elem(1, -1, 0, 0, 0, 0));
    ok = ok && d2.contains_associativity && d2.direct_sum_ok && d2.u.dim() == 3 &&
         d2.u_parts == IrrepMultiplicities{0, 1, 1} && d2.sign_flat_line_in_u;
    return ok;
}

bool criterion11() {
    StructureConstants oct = builtin("octonions");
    bool ok = satisfies(oct, vector_W());

    DualCheck dual_of_trivial = verify_dual("I'");
    const Subspace& relations = dual_of_trivial.r_perp;
    ok = ok && relations.dim() == kOperadDim - 1;

    auto satisfies_row = [](const StructureConstants& sc, const std::vector<Rational>& row) {
        GroupAlgebraElement a = zero_element();
        GroupAlgebraElement b = zero_element();
        for (std::size_t i = 0; i < kGroupOrder; ++i) {
            a[i] = row[i];
            b[i] = -row[kGroupOrder + i];
        }
        return satisfies_starstar(sc, a, b);
    };
    auto is_instance = [&](const StructureConstants& sc) {
        for (const auto& row : relations.basis())
            if (!satisfies_row(sc, row)) return false;
        return true;
    };
    auto zero_triples = [](const StructureConstants& sc) {
        LeftRightAssociators lr = left_right_associators(sc);
        for (const auto& x : lr.left)
            if (x != 0) return false;
        for (const auto& x : lr.right)
            if (x != 0) return false;
        return true;
    };

    long instances = 0;
    long nontrivial = 0;
    std::optional<StructureConstants> pick;
    // Exhaustive scan: every 2-dim table with entries in {-1,0,1}.
    for (long mask = 0; mask < 6561; ++mask) {
        long m = mask;
        StructureConstants sc(2, "scan2");
        bool nonzero = false;
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                for (std::size_t k = 0; k < 2; ++k) {
                    long digit = m % 3 - 1;
                    m /= 3;
                    if (digit != 0) {
                        sc.at(i, j, k) = rat(digit);
                        nonzero = true;
                    }
                }
        if (!nonzero || !is_instance(sc)) continue;
        ++instances;
        bool triv = zero_triples(sc);
        if (!triv) ++nontrivial;
        if (!pick || !triv) pick = sc;
    }
    // Graded 3-dim family: products of the first two basis vectors landing on
    // the third, entries in {-1,0,1}.
    for (long mask = 0; mask < 81; ++mask) {
        long m = mask;
        StructureConstants sc(3, "scan3");
        bool nonzero = false;
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                long digit = m % 3 - 1;
                m /= 3;
                if (digit != 0) {
                    sc.at(i, j, 2) = rat(digit);
                    nonzero = true;
                }
            }
        if (!nonzero || !is_instance(sc)) continue;
        ++instances;
        if (!zero_triples(sc)) {
            ++nontrivial;
            pick = sc;
        }
    }

    ok = ok && instances > 0 && pick.has_value();
    if (pick) {
        Subspace ann = annihilator(tensor(oct, *pick));
        ok = ok && ann.contains(to_vector(vector_V()));
    }
    std::ostringstream msg;
    msg << "searched 6561 two-dim and 81 graded three-dim tables; " << instances
        << " instances satisfy the dual relations";
    if (nontrivial == 0) {
        msg << ", all with identically zero triple products, so the pairing "
               "statement holds vacuously; the tensor check ran on a degenerate "
               "instance";
    } else {
        msg << ", " << nontrivial << " with nonzero triple products";
    }
    note(msg.str());
    return ok;
}

}  // namespace

int main() {
    auto t0 = std::chrono::steady_clock::now();
    verdict(1, "sign and trivial lines are one-dimensional eigenmodules", criterion1());
    verdict(2, "orbit span dimension anchors 4, 5, 6", criterion2());
    verdict(3, "canonical generators round-trip; labels invariant; membership lemma",
            criterion3());
    verdict(4, "octonion annihilator is the five-dimensional alternative module",
            criterion4());
    verdict(5, "identity checks coincide with kernel membership on builtins and seeds",
            criterion5());
    verdict(6, "tensor annihilator trivial for the recorded pair, full for associative pairs",
            criterion6());
    verdict(7, "first certificate example admits a witness, second provably does not",
            criterion7());
    verdict(8, "interchange identity closes under tensor on 50 seeded pairs", criterion8());
    verdict(9, "published dual tables verify or are flagged with computed complements",
            criterion9());
    verdict(10, "dual complements split as associativity module plus identified summand",
            criterion10());
    verdict(11, "dual-pairing tensor check against an exhaustively found instance",
            criterion11());
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (failures == 0 ? "ALL CRITERIA PASS" : "FAILURES PRESENT") << " ("
              << failures << " failing) in " << secs << " s\n";
    return failures;
}
