#include "nalg/structure_constants.hpp"

namespace nalg {

std::vector<Rational> StructureConstants::product(const std::vector<Rational>& x,
                                                  const std::vector<Rational>& y) const {
    if (x.size() != dim_ || y.size() != dim_)
        throw std::invalid_argument("coordinate width mismatch");
    std::vector<Rational> out(dim_, Rational(0));
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j] == 0) continue;
            const Rational f = x[i] * y[j];
            for (std::size_t k = 0; k < dim_; ++k) {
                const Rational& c = at(i, j, k);
                if (c != 0) out[k] += f * c;
            }
        }
    }
    return out;
}

StructureConstants tensor(const StructureConstants& a, const StructureConstants& b) {
    const std::size_t n = a.dim(), m = b.dim();
    StructureConstants t(n * m, a.name() + "(x)" + b.name());
    for (std::size_t i1 = 0; i1 < n; ++i1)
        for (std::size_t j1 = 0; j1 < n; ++j1)
            for (std::size_t k1 = 0; k1 < n; ++k1) {
                const Rational& ca = a.at(i1, j1, k1);
                if (ca == 0) continue;
                for (std::size_t i2 = 0; i2 < m; ++i2)
                    for (std::size_t j2 = 0; j2 < m; ++j2)
                        for (std::size_t k2 = 0; k2 < m; ++k2) {
                            const Rational& cb = b.at(i2, j2, k2);
                            if (cb == 0) continue;
                            t.at(i1 * m + i2, j1 * m + j2, k1 * m + k2) = ca * cb;
                        }
            }
    return t;
}

StructureConstants cayley_dickson_from(const StructureConstants& base) {
    const std::size_t n = base.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Rational expected = (i == k) ? 1 : 0;
            if (base.at(0, i, k) != expected || base.at(i, 0, k) != expected)
                throw std::invalid_argument("doubling needs e_1 as a two-sided identity");
        }
    auto conj_sign = [](std::size_t i) { return i == 0 ? Rational(1) : Rational(-1); };
    StructureConstants d(2 * n, "double(" + base.name() + ")");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Rational& c = base.at(i, j, k);
                if (c == 0) continue;
                // (e_i,0)(e_j,0) = (e_i e_j, 0)
                d.at(i, j, k) = c;
                // (e_j,0)(0,e_i) = (0, e_i e_j): second components multiply as
                // d*a with d = e_i, a = e_j.
                d.at(j, n + i, n + k) = c;
                // (0,e_i)(e_j,0) = (0, e_i conj(e_j))
                d.at(n + i, j, n + k) = conj_sign(j) * c;
                // (0,e_j)(0,e_i) = (-conj(e_i) e_j, 0)
                d.at(n + j, n + i, k) = -conj_sign(i) * c;
            }
    return d;
}

namespace {

StructureConstants make_reals() {
    StructureConstants r(1, "reals");
    r.at(0, 0, 0) = 1;
    return r;
}

StructureConstants make_quaternions() {
    StructureConstants q = cayley_dickson_from(cayley_dickson_from(make_reals()));
    q.set_name("quaternions");
    return q;
}

StructureConstants make_octonions() {
    StructureConstants o = cayley_dickson_from(make_quaternions());
    o.set_name("octonions");
    return o;
}

StructureConstants make_mat2() {
    // Basis order E11, E12, E21, E22; E_ij E_kl = [j == k] E_il.
    StructureConstants m(4, "mat2");
    auto idx = [](std::size_t r, std::size_t c) { return 2 * r + c; };
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l)
                    if (j == k) m.at(idx(i, j), idx(k, l), idx(i, l)) = 1;
    return m;
}

StructureConstants make_dual_numbers() {
    StructureConstants d(2, "dual_numbers");
    d.at(0, 0, 0) = 1;
    d.at(0, 1, 1) = 1;
    d.at(1, 0, 1) = 1;
    return d;
}

StructureConstants make_sl2() {
    // Basis e, f, h with [e,f] = h, [h,e] = 2e, [h,f] = -2f.
    StructureConstants s(3, "sl2_commutator");
    s.at(0, 1, 2) = 1;
    s.at(1, 0, 2) = -1;
    s.at(2, 0, 0) = 2;
    s.at(0, 2, 0) = -2;
    s.at(2, 1, 1) = -2;
    s.at(1, 2, 1) = 2;
    return s;
}

StructureConstants make_heisenberg() {
    StructureConstants h(3, "heisenberg_commutator");
    h.at(0, 1, 2) = 1;
    h.at(1, 0, 2) = -1;
    return h;
}

}  // namespace

StructureConstants builtin(const std::string& name) {
    if (name == "octonions") return make_octonions();
    if (name == "quaternions") return make_quaternions();
    if (name == "sl2_commutator") return make_sl2();
    if (name == "mat2") return make_mat2();
    if (name == "dual_numbers") return make_dual_numbers();
    if (name == "zero") return StructureConstants(2, "zero");
    if (name == "heisenberg_commutator") return make_heisenberg();
    const std::string prefix = "cayley_dickson_from(";
    if (name.size() > prefix.size() + 1 && name.rfind(prefix, 0) == 0 && name.back() == ')')
        return cayley_dickson_from(builtin(name.substr(prefix.size(), name.size() - prefix.size() - 1)));
    throw UnknownName(name);
}

const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names = {
        "octonions", "quaternions", "sl2_commutator", "mat2",
        "dual_numbers", "zero", "heisenberg_commutator",
    };
    return names;
}

}  // namespace nalg
