#include "nalg/classification.hpp"

#include <initializer_list>

namespace nalg {
namespace {

GroupAlgebraElement make(std::initializer_list<long> coeffs) {
    GroupAlgebraElement e{};
    std::size_t i = 0;
    for (long c : coeffs) e[i++] = c;
    return e;
}

// g(t) = base + t * direction.
struct FamilyLine {
    GroupAlgebraElement base;
    GroupAlgebraElement direction;
    GroupAlgebraElement at(const Rational& t) const {
        return add(base, scale(t, direction));
    }
};

const FamilyLine& line_iii_1() {
    static const FamilyLine line{make({1, 0, 0, -1, 0, 0}), make({0, 1, 0, 0, 0, -1})};
    return line;
}

const FamilyLine& line_iv_1() {
    static const FamilyLine line{make({2, 1, 1, 0, 1, 1}), make({0, 1, 0, 0, 0, -1})};
    return line;
}

const FamilyLine& line_iii_1_prime() {
    static const FamilyLine line{make({0, -2, 0, -1, -1, -2}), make({0, 0, 1, -1, 1, -1})};
    return line;
}

struct ParameterSolution {
    enum Kind { kNone, kUnique, kAmbiguous } kind = kNone;
    Rational value;
};

// Solves base + t * direction in F componentwise from the elimination
// residuals. kAmbiguous means both residuals vanish (every t works so far).
ParameterSolution recover_parameter(const Subspace& module, const FamilyLine& line) {
    const std::vector<Rational> r0 = module.reduce(to_vector(line.base));
    const std::vector<Rational> r1 = module.reduce(to_vector(line.direction));
    ParameterSolution sol;
    for (std::size_t j = 0; j < r0.size(); ++j) {
        if (r1[j] != 0) {
            const Rational candidate = -r0[j] / r1[j];
            if (sol.kind == ParameterSolution::kUnique && sol.value != candidate)
                return {ParameterSolution::kNone, Rational(0)};
            sol = {ParameterSolution::kUnique, candidate};
        } else if (r0[j] != 0) {
            return {ParameterSolution::kNone, Rational(0)};
        }
    }
    if (sol.kind != ParameterSolution::kUnique) sol.kind = ParameterSolution::kAmbiguous;
    return sol;
}

bool generates(const GroupAlgebraElement& g, const Subspace& module) {
    return span_of_orbit(g) == module;
}

bool try_parametric(const Subspace& module, const FamilyLine& line, bool exclude_one,
                    Rational& parameter_out) {
    const ParameterSolution sol = recover_parameter(module, line);
    std::vector<Rational> candidates;
    if (sol.kind == ParameterSolution::kUnique) {
        candidates.push_back(sol.value);
    } else if (sol.kind == ParameterSolution::kAmbiguous) {
        // The whole line lies in the module; the module can still equal the
        // orbit span at isolated parameters, so probe a few.
        candidates = {Rational(0), Rational(2), Rational(-1)};
    }
    for (const Rational& t : candidates) {
        if (exclude_one && t == 1) continue;
        if (generates(line.at(t), module)) {
            parameter_out = t;
            return true;
        }
    }
    return false;
}

ClassificationResult classify_impl(const GroupAlgebraElement& v, bool sign_side) {
    if (is_zero(v)) throw ZeroVector();
    ClassificationResult res;
    const Subspace module = span_of_orbit(v);
    res.module_dim = module.dim();
    res.parts = decompose(module);
    const bool has_required_line = sign_side ? res.parts.sign == 1 : res.parts.trivial == 1;
    if (!has_required_line) return res;

    auto settle = [&](const std::string& family,
                      const std::optional<Rational>& t = std::nullopt) {
        res.classified = true;
        res.family = family;
        res.parameter = t;
    };

    Rational t;
    switch (module.dim()) {
        case 1:
            settle(sign_side ? "I" : "I'");
            break;
        case 2:
            // A two-dimensional invariant subspace with a one-dimensional part
            // is forced to be the sum of both lines.
            settle("II");
            break;
        case 3:
            if (sign_side) {
                if (try_parametric(module, line_iii_1(), /*exclude_one=*/true, t))
                    settle("III_1", t);
                else if (generates(make({0, -1, 0, 0, 0, 1}), module))
                    settle("III_2");
                else if (generates(make({1, -1, 0, -2, 2, 0}), module))
                    settle("III_3");
            } else {
                if (try_parametric(module, line_iii_1_prime(), /*exclude_one=*/false, t))
                    settle("III'_1", t);
                else if (generates(make({1, 1, 1, 0, 1, 0}), module))
                    settle("III'_2");
            }
            break;
        case 4:
            if (try_parametric(module, line_iv_1(), /*exclude_one=*/false, t))
                settle("IV_1", t);
            else if (generates(make({2, 1, 0, 1, 1, 1}), module))
                settle("IV_2");
            else if (generates(make({2, 0, 1, -1, 3, 1}), module))
                settle("IV_3");
            break;
        case 5:
            if (sign_side) {
                if (generates(make({2, -1, -1, -1, 1, 0}), module)) settle("V");
            } else {
                if (generates(make({2, 1, 1, 1, 1, 0}), module)) settle("V'");
            }
            break;
        case 6:
            settle("VI");
            break;
        default:
            break;
    }
    return res;
}

}  // namespace

std::string ClassificationResult::label() const {
    if (!classified) return "unclassified";
    if (parameter) return family + "(t=" + format_rational(*parameter) + ")";
    return family;
}

const std::vector<CanonicalGenerator>& canonical_generators() {
    static const std::vector<CanonicalGenerator> table = [] {
        std::vector<CanonicalGenerator> g;
        const Rational two(2);
        g.push_back({"I", std::nullopt, vector_V()});
        g.push_back({"II", std::nullopt, make({1, 0, 0, 0, 1, 1})});
        g.push_back({"III_1", two, line_iii_1().at(two)});
        g.push_back({"III_2", std::nullopt, make({0, -1, 0, 0, 0, 1})});
        g.push_back({"III_3", std::nullopt, make({1, -1, 0, -2, 2, 0})});
        g.push_back({"IV_1", two, line_iv_1().at(two)});
        g.push_back({"IV_2", std::nullopt, make({2, 1, 0, 1, 1, 1})});
        g.push_back({"IV_3", std::nullopt, make({2, 0, 1, -1, 3, 1})});
        g.push_back({"V", std::nullopt, make({2, -1, -1, -1, 1, 0})});
        g.push_back({"VI", std::nullopt, delta(perm_id())});
        g.push_back({"I'", std::nullopt, vector_W()});
        g.push_back({"III'_1", two, line_iii_1_prime().at(two)});
        g.push_back({"III'_2", std::nullopt, make({1, 1, 1, 0, 1, 0})});
        g.push_back({"V'", std::nullopt, make({2, 1, 1, 1, 1, 0})});
        return g;
    }();
    return table;
}

GroupAlgebraElement family_generator(const std::string& family,
                                     const std::optional<Rational>& parameter) {
    const bool parametric = family == "III_1" || family == "IV_1" || family == "III'_1";
    if (parametric) {
        if (!parameter) throw std::invalid_argument("family " + family + " needs a parameter");
        if (family == "III_1") {
            if (*parameter == 1) throw ConstraintViolated("t = 1 is outside the III_1 family");
            return line_iii_1().at(*parameter);
        }
        if (family == "IV_1") return line_iv_1().at(*parameter);
        return line_iii_1_prime().at(*parameter);
    }
    if (parameter) throw std::invalid_argument("family " + family + " takes no parameter");
    for (const auto& entry : canonical_generators())
        if (entry.family == family && !entry.parameter) return entry.generator;
    throw std::invalid_argument("unknown family: " + family);
}

ClassificationResult classify_lie_admissible(const GroupAlgebraElement& v) {
    return classify_impl(v, /*sign_side=*/true);
}

ClassificationResult classify_power_associative(const GroupAlgebraElement& v) {
    return classify_impl(v, /*sign_side=*/false);
}

GroupAlgebraElement gi_vector(int i) {
    switch (i) {
        case 1: return make({1, 0, 0, 0, 0, 0});
        case 2: return make({1, 1, 0, 0, 0, 0});
        case 3: return make({1, 0, 0, 1, 0, 0});
        case 4: return make({1, 0, 1, 0, 0, 0});
        case 5: return make({1, 0, 0, 0, 1, 1});
        case 6: return vector_W();
        default: throw std::invalid_argument("subgroup index must be 1..6");
    }
}

GroupAlgebraElement two_dim_canonical(const Rational& lambda1, const Rational& lambda3) {
    if (lambda1 == 0 && lambda3 == 0) throw ZeroVector();
    GroupAlgebraElement e{};
    e[0] = lambda1;
    e[1] = -lambda1;
    e[2] = lambda1 + lambda3;
    e[3] = -lambda3;
    e[4] = lambda3;
    e[5] = -lambda1 - lambda3;
    return e;
}

GroupAlgebraElement alpha_beta_family(const Rational& a1, const Rational& a2,
                                      const Rational& alpha, const Rational& beta) {
    if (alpha * alpha != 1 + beta + beta * beta)
        throw ConstraintViolated("alpha^2 = 1 + beta + beta^2 must hold exactly");
    GroupAlgebraElement e{};
    e[0] = a1;
    e[1] = a2;
    e[2] = alpha * a1 + beta * a2;
    e[3] = -alpha * a1 - (1 + beta) * a2;
    e[4] = beta * a1 + alpha * a2;
    e[5] = -(1 + beta) * a1 - alpha * a2;
    return e;
}

}  // namespace nalg
