#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace nalg {

// Exact arbitrary-precision rational. All arithmetic in the library is exact;
// there are no tolerance parameters anywhere.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p", "-p", "p/q" with optional sign. Rejects anything else, in
// particular decimal points and exponents.
inline std::optional<Rational> try_parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::size_t i = 0;
    auto scan_int = [&](bool allow_sign) -> bool {
        if (allow_sign && i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
        std::size_t start = i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
        return i > start;
    };
    if (!scan_int(true)) return std::nullopt;
    if (i < text.size()) {
        if (text[i] != '/') return std::nullopt;
        ++i;
        if (!scan_int(false)) return std::nullopt;
        if (i != text.size()) return std::nullopt;
    }
    Rational r;
    // mpq_class string construction does not canonicalize; do it explicitly.
    if (r.set_str(text, 10) != 0) return std::nullopt;
    if (r.get_den() == 0) return std::nullopt;
    r.canonicalize();
    return r;
}

inline Rational parse_rational(const std::string& text) {
    auto r = try_parse_rational(text);
    if (!r) throw std::invalid_argument("not a rational: '" + text + "'");
    return *r;
}

// Canonical form: lowest terms, positive denominator, "p" or "p/q".
inline std::string format_rational(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    return c.get_str();
}

}  // namespace nalg
