#ifndef TWISTCALC_RATIONAL_HPP
#define TWISTCALC_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <string>

#include "twistcalc/errors.hpp"

namespace twistcalc {

using i64 = std::int64_t;

namespace checked {

inline i64 add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw arithmetic_overflow("int64 overflow in add");
    return r;
}

inline i64 sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r)) throw arithmetic_overflow("int64 overflow in sub");
    return r;
}

inline i64 mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw arithmetic_overflow("int64 overflow in mul");
    return r;
}

inline i64 neg(i64 a) { return sub(0, a); }

}  // namespace checked

/// Canonical fraction: gcd(|p|,|q|) = 1, q >= 1, sign carried by p,
/// (0,1) the unique zero.  The degenerate pair (1,0) represents the
/// value "1/0" produced by coefficient lists whose matrix product has a
/// vanishing (2,1) entry; it never comes from user input.
struct Rational {
    i64 p = 0;
    i64 q = 1;

    bool is_infinite() const { return q == 0; }
    bool operator==(const Rational&) const = default;
};

/// Reduce an arbitrary integer pair to the canonical representative.
inline Rational make_rational(i64 p, i64 q) {
    if (q == 0) {
        if (p == 0) throw domain_error("0/0 is not a rational");
        return Rational{1, 0};
    }
    i64 g = std::gcd(p < 0 ? -p : p, q < 0 ? -q : q);
    if (g == 0) g = 1;
    p /= g;
    q /= g;
    if (q < 0) {
        p = -p;
        q = -q;
    }
    return Rational{p, q};
}

/// Parse "p/q" or "p" (sign allowed on p only); rejects q = 0.
inline Rational parse_rational(const std::string& s) {
    std::size_t slash = s.find('/');
    try {
        std::size_t used = 0;
        i64 p = std::stoll(s.substr(0, slash), &used);
        if (used != (slash == std::string::npos ? s.size() : slash))
            throw parse_error("trailing characters in rational: " + s);
        i64 q = 1;
        if (slash != std::string::npos) {
            std::string den = s.substr(slash + 1);
            q = std::stoll(den, &used);
            if (used != den.size()) throw parse_error("trailing characters in rational: " + s);
        }
        if (q <= 0) throw parse_error("denominator must be positive: " + s);
        return make_rational(p, q);
    } catch (const std::invalid_argument&) {
        throw parse_error("not a rational: " + s);
    } catch (const std::out_of_range&) {
        throw parse_error("rational out of range: " + s);
    }
}

inline std::string to_string(const Rational& r) {
    return std::to_string(r.p) + "/" + std::to_string(r.q);
}

}  // namespace twistcalc

#endif
