#include "nalg/subspace.hpp"

#include <algorithm>

namespace nalg {
namespace {

// In-place reduction to canonical RREF: leading ones, zeros above and below
// each pivot, rows ordered by pivot column, zero rows dropped.
void canonicalize_rows(std::size_t width, std::vector<std::vector<Rational>>& rows) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        const Rational inv = 1 / rows[rank][col];
        for (std::size_t j = col; j < width; ++j) rows[rank][j] *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            const Rational f = rows[r][col];
            for (std::size_t j = col; j < width; ++j) rows[r][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    rows.resize(rank);
}

}  // namespace

Subspace Subspace::span(std::size_t width, const std::vector<std::vector<Rational>>& vectors) {
    for (const auto& v : vectors)
        if (v.size() != width) throw std::invalid_argument("vector width mismatch");
    Subspace s(width);
    s.rows_ = vectors;
    canonicalize_rows(width, s.rows_);
    return s;
}

std::vector<Rational> Subspace::reduce(const std::vector<Rational>& v) const {
    if (v.size() != width_) throw std::invalid_argument("vector width mismatch");
    std::vector<Rational> r = v;
    for (const auto& row : rows_) {
        std::size_t pivot = 0;
        while (pivot < width_ && row[pivot] == 0) ++pivot;
        if (pivot == width_ || r[pivot] == 0) continue;
        const Rational f = r[pivot];
        for (std::size_t j = pivot; j < width_; ++j) r[j] -= f * row[j];
    }
    return r;
}

bool Subspace::contains(const std::vector<Rational>& v) const {
    for (const auto& c : reduce(v))
        if (c != 0) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    if (other.width_ != width_) return false;
    for (const auto& row : other.rows_)
        if (!contains(row)) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    if (other.width_ != width_) throw std::invalid_argument("ambient width mismatch");
    std::vector<std::vector<Rational>> rows = rows_;
    rows.insert(rows.end(), other.rows_.begin(), other.rows_.end());
    return span(width_, rows);
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (other.width_ != width_) throw std::invalid_argument("ambient width mismatch");
    // Zassenhaus: row reduce [A|A; B|0]; rows with zero left half carry the
    // intersection in their right half.
    const std::size_t w = width_;
    std::vector<std::vector<Rational>> block;
    for (const auto& row : rows_) {
        std::vector<Rational> r(2 * w, Rational(0));
        for (std::size_t j = 0; j < w; ++j) {
            r[j] = row[j];
            r[w + j] = row[j];
        }
        block.push_back(std::move(r));
    }
    for (const auto& row : other.rows_) {
        std::vector<Rational> r(2 * w, Rational(0));
        for (std::size_t j = 0; j < w; ++j) r[j] = row[j];
        block.push_back(std::move(r));
    }
    canonicalize_rows(2 * w, block);
    std::vector<std::vector<Rational>> meet;
    for (const auto& row : block) {
        bool left_zero = true;
        for (std::size_t j = 0; j < w; ++j)
            if (row[j] != 0) {
                left_zero = false;
                break;
            }
        if (left_zero) meet.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(w), row.end());
    }
    return span(w, meet);
}

Subspace nullspace(std::size_t columns, const std::vector<std::vector<Rational>>& matrix) {
    std::vector<std::vector<Rational>> rows = matrix;
    for (const auto& r : rows)
        if (r.size() != columns) throw std::invalid_argument("matrix width mismatch");
    canonicalize_rows(columns, rows);
    std::vector<std::size_t> pivots;
    for (const auto& row : rows) {
        std::size_t p = 0;
        while (p < columns && row[p] == 0) ++p;
        pivots.push_back(p);
    }
    std::vector<std::vector<Rational>> kernel;
    for (std::size_t col = 0; col < columns; ++col) {
        if (std::find(pivots.begin(), pivots.end(), col) != pivots.end()) continue;
        std::vector<Rational> v(columns, Rational(0));
        v[col] = 1;
        for (std::size_t r = 0; r < rows.size(); ++r) v[pivots[r]] = -rows[r][col];
        kernel.push_back(std::move(v));
    }
    return Subspace::span(columns, kernel);
}

std::optional<std::vector<Rational>> solve_in_span(
    const std::vector<std::vector<Rational>>& columns, const std::vector<Rational>& target) {
    const std::size_t k = columns.size();
    const std::size_t height = target.size();
    for (const auto& c : columns)
        if (c.size() != height) throw std::invalid_argument("column height mismatch");
    std::vector<std::vector<Rational>> rows(height, std::vector<Rational>(k + 1, Rational(0)));
    for (std::size_t r = 0; r < height; ++r) {
        for (std::size_t c = 0; c < k; ++c) rows[r][c] = columns[c][r];
        rows[r][k] = target[r];
    }
    canonicalize_rows(k + 1, rows);
    std::vector<Rational> x(k, Rational(0));
    for (const auto& row : rows) {
        std::size_t p = 0;
        while (p <= k && row[p] == 0) ++p;
        if (p == k) return std::nullopt;  // pivot in the target column
        if (p < k) x[p] = row[k];
    }
    return x;
}

std::vector<Rational> to_vector(const GroupAlgebraElement& v) {
    return std::vector<Rational>(v.begin(), v.end());
}

GroupAlgebraElement from_vector(const std::vector<Rational>& v) {
    if (v.size() != kGroupOrder) throw std::invalid_argument("expected six coordinates");
    GroupAlgebraElement e{};
    std::copy(v.begin(), v.end(), e.begin());
    return e;
}

Subspace span_of_orbit(const GroupAlgebraElement& v) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& w : orbit(v)) rows.push_back(to_vector(w));
    return Subspace::span(kGroupOrder, rows);
}

bool is_invariant(const Subspace& s) {
    if (s.width() != kGroupOrder) return false;
    for (const auto& row : s.basis())
        for (const auto& p : all_permutations())
            if (!s.contains(to_vector(act(p, from_vector(row))))) return false;
    return true;
}

IrrepMultiplicities decompose(const Subspace& s) {
    if (!is_invariant(s)) throw NotInvariant();
    IrrepMultiplicities m;
    if (s.contains(to_vector(vector_W()))) m.trivial = 1;
    if (s.contains(to_vector(vector_V()))) m.sign = 1;
    const int leftover = static_cast<int>(s.dim()) - m.trivial - m.sign;
    if (leftover % 2 != 0) throw OddStandardDimension();
    m.standard = leftover / 2;
    return m;
}

}  // namespace nalg
