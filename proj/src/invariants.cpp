#include "twistcalc/invariants.hpp"

#include <algorithm>
#include <utility>

namespace twistcalc {

LaurentPoly2 torus_link_alexander(i64 n) {
    if (n <= 0) throw domain_error("torus-link family is indexed by n >= 1");
    LaurentPoly2 p;
    for (i64 j = 0; j < n; ++j) {
        i64 e = n - 1 - 2 * j;
        p.add_term(1, e, e);
    }
    return p;
}

BasicClassSet basic_classes(i64 n) {
    if (n <= 0) throw domain_error("basic classes are indexed by n >= 1");
    BasicClassSet out;
    for (i64 i = -n + 1; i <= n - 1; i += 2) out.push_back(i);
    return out;
}

BraidWord braid_Bpq(const NormalForm& nf) {
    BraidWord w;
    for (std::size_t i = 0; i < nf.coeffs.size(); ++i) {
        if (i % 2 == 0)
            w.append(BraidGen::sigma1, nf.coeffs[i]);
        else
            w.append(BraidGen::sigma2, checked::neg(nf.coeffs[i]));
    }
    return w;
}

namespace {

LaurentPoly1 cyclotomic3() {
    LaurentPoly1 p = LaurentPoly1::one();
    p.add_term(1, 1);
    p.add_term(1, 2);
    return p;
}

}  // namespace

ClosurePoly alexander_closure(const BraidWord& w) {
    bool has_sigma2 = false;
    for (const auto& syl : w.letters)
        if (syl.gen == BraidGen::sigma2) has_sigma2 = true;
    if (!has_sigma2) {
        // closure lives in B2: ((-t)^e - 1) / (1 + t)
        i64 e = 0;
        for (const auto& syl : w.letters) e = checked::add(e, syl.exp);
        if (e == 0) return {LaurentPoly1::zero(), true};
        LaurentPoly1 num = LaurentPoly1::monomial((e % 2 == 0) ? 1 : -1, e) - LaurentPoly1::one();
        LaurentPoly1 den = LaurentPoly1::one();
        den.add_term(1, 1);
        return {num.divide_exact(den).normalized_symmetric(), false};
    }
    BurauMatrix m = burau(w);
    BurauMatrix id = BurauMatrix::identity();
    LaurentPoly1 det = (m.a - id.a) * (m.d - id.d) - m.b * m.c;
    if (det.is_zero()) return {LaurentPoly1::zero(), true};
    return {det.divide_exact(cyclotomic3()).normalized_symmetric(), false};
}

namespace {

/// Odd representative of x modulo 2p, in (0, 2p).
i64 odd_rep(i64 x, i64 p) {
    i64 m = ((x % (2 * p)) + 2 * p) % (2 * p);
    if (m % 2 == 0) m = (m + p) % (2 * p);
    return m == 0 ? p : m;  // m = 0 impossible for coprime input; defensive
}

i64 mod_inverse(i64 a, i64 m) {  // m >= 1, gcd(a, m) = 1
    i64 t = 0, newt = 1, r = m, newr = ((a % m) + m) % m;
    while (newr != 0) {
        i64 quot = r / newr;
        t = std::exchange(newt, t - quot * newt);
        r = std::exchange(newr, r - quot * newr);
    }
    return ((t % m) + m) % m;
}

LaurentPoly1 partial_sum_poly(i64 p, i64 q) {  // p >= 1, q odd, 0 < q < 2p
    LaurentPoly1 poly;
    i64 s = 0;
    for (i64 i = 0; i < p; ++i) {
        if (i > 0) {
            i64 prod = checked::mul(i, q);
            i64 fl = prod / p;  // i, q, p > 0: truncation = floor
            s = checked::add(s, fl % 2 == 0 ? 1 : -1);
        }
        poly.add_term(i % 2 == 0 ? 1 : -1, s);
    }
    return poly;
}

}  // namespace

LaurentPoly1 alexander_two_bridge(const Rational& r) {
    if (r.is_infinite()) throw domain_error("infinite value has no 2-bridge interpretation");
    if (r.p == 0) throw zero_input("p = 0 is the 2-component unlink; polynomial identically zero");
    i64 p = r.p < 0 ? -r.p : r.p;
    if (p == 1) return LaurentPoly1::one();  // unknot
    i64 q = ((r.q % (2 * p)) + 2 * p) % (2 * p);
    i64 qi = mod_inverse(r.q % p, p);
    i64 s1 = odd_rep(q, p);
    i64 s2 = odd_rep(qi, p);
    i64 qstar = std::min(s1, s2);
    return partial_sum_poly(p, qstar).normalized_symmetric();
}

i64 torus_knot_genus(i64 a, i64 b) {
    if (a <= 0 || b <= 0) throw domain_error("torus knot parameters must be positive");
    i64 x = a, y = b;
    while (y != 0) x = std::exchange(y, x % y);
    if (x != 1) throw not_coprime("torus knot parameters must be coprime");
    return checked::mul(a - 1, b - 1) / 2;
}

}  // namespace twistcalc
