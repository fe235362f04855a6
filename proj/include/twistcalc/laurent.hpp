#ifndef TWISTCALC_LAURENT_HPP
#define TWISTCALC_LAURENT_HPP

#include <map>
#include <utility>
#include <vector>

#include "twistcalc/rational.hpp"

namespace twistcalc {

/// Sparse integer Laurent polynomial in one variable t.
/// No zero coefficients are stored.
class LaurentPoly1 {
public:
    LaurentPoly1() = default;

    static LaurentPoly1 zero() { return LaurentPoly1(); }
    static LaurentPoly1 one() { return monomial(1, 0); }

    static LaurentPoly1 monomial(i64 coeff, i64 exp) {
        LaurentPoly1 p;
        if (coeff != 0) p.terms_[exp] = coeff;
        return p;
    }

    const std::map<i64, i64>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    i64 coeff(i64 exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? 0 : it->second;
    }

    i64 min_exp() const { return terms_.begin()->first; }
    i64 max_exp() const { return terms_.rbegin()->first; }

    void add_term(i64 coeff, i64 exp) {
        if (coeff == 0) return;
        i64 c = checked::add(terms_[exp], coeff);
        if (c == 0)
            terms_.erase(exp);
        else
            terms_[exp] = c;
    }

    LaurentPoly1 operator+(const LaurentPoly1& o) const {
        LaurentPoly1 r = *this;
        for (auto& [e, c] : o.terms_) r.add_term(c, e);
        return r;
    }

    LaurentPoly1 operator-(const LaurentPoly1& o) const {
        LaurentPoly1 r = *this;
        for (auto& [e, c] : o.terms_) r.add_term(checked::neg(c), e);
        return r;
    }

    LaurentPoly1 operator*(const LaurentPoly1& o) const {
        LaurentPoly1 r;
        for (auto& [e1, c1] : terms_)
            for (auto& [e2, c2] : o.terms_)
                r.add_term(checked::mul(c1, c2), checked::add(e1, e2));
        return r;
    }

    LaurentPoly1 operator-() const {
        LaurentPoly1 r;
        for (auto& [e, c] : terms_) r.terms_[e] = checked::neg(c);
        return r;
    }

    bool operator==(const LaurentPoly1&) const = default;

    /// Substitute t = v (v = +-1 is the intended use).
    i64 eval(i64 v) const {
        i64 s = 0;
        for (auto& [e, c] : terms_) {
            i64 pw = 1;
            i64 n = e < 0 ? -e : e;
            for (i64 i = 0; i < n; ++i) pw = checked::mul(pw, v);
            if (e < 0) {
                if (pw != 1 && pw != -1) throw domain_error("negative exponent at non-unit");
                // pw in {1,-1}: inverse equals itself
            }
            s = checked::add(s, checked::mul(c, pw));
        }
        return s;
    }

    /// t -> 1/t.
    LaurentPoly1 mirror() const {
        LaurentPoly1 r;
        for (auto& [e, c] : terms_) r.terms_[checked::neg(e)] = c;
        return r;
    }

    /// Canonical representative up to units +-t^k: shift so the exponent
    /// span is centered at 0 (odd span widths center at 1/2, i.e. lowest
    /// exponent = -floor(width/2)), then fix sign so the top coefficient
    /// is positive.  Zero stays zero.
    LaurentPoly1 normalized_symmetric() const {
        if (terms_.empty()) return *this;
        i64 lo = min_exp(), hi = max_exp();
        i64 shift = -(lo + hi - (((lo + hi) % 2 + 2) % 2)) / 2;  // floor((lo+hi)/2) negated
        LaurentPoly1 r;
        for (auto& [e, c] : terms_) r.terms_[checked::add(e, shift)] = c;
        if (r.terms_.rbegin()->second < 0) return -r;
        return r;
    }

    /// Exact quotient by a divisor with nonzero lowest term; throws
    /// domain_error if the division leaves a remainder.
    LaurentPoly1 divide_exact(const LaurentPoly1& div) const {
        if (div.is_zero()) throw domain_error("division by zero polynomial");
        if (is_zero()) return zero();
        LaurentPoly1 rem = *this;
        LaurentPoly1 quot;
        i64 dlo = div.min_exp();
        i64 dc = div.terms().begin()->second;
        // an exact quotient's monomial shifts never exceed this bound
        i64 max_shift = checked::sub(max_exp(), div.max_exp());
        while (!rem.is_zero()) {
            i64 rlo = rem.min_exp();
            i64 rc = rem.terms().begin()->second;
            if (rc % dc != 0) throw domain_error("non-exact polynomial division");
            i64 f = rc / dc;
            i64 sh = checked::sub(rlo, dlo);
            if (sh > max_shift) throw domain_error("non-exact polynomial division");
            LaurentPoly1 piece = monomial(f, sh);
            quot = quot + piece;
            rem = rem - piece * div;
        }
        return quot;
    }

private:
    std::map<i64, i64> terms_;
};

/// Sparse integer Laurent polynomial in two variables t1, t2.
class LaurentPoly2 {
public:
    LaurentPoly2() = default;

    static LaurentPoly2 monomial(i64 coeff, i64 e1, i64 e2) {
        LaurentPoly2 p;
        if (coeff != 0) p.terms_[{e1, e2}] = coeff;
        return p;
    }

    const std::map<std::pair<i64, i64>, i64>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(i64 coeff, i64 e1, i64 e2) {
        if (coeff == 0) return;
        auto key = std::make_pair(e1, e2);
        i64 c = checked::add(terms_[key], coeff);
        if (c == 0)
            terms_.erase(key);
        else
            terms_[key] = c;
    }

    LaurentPoly2 operator+(const LaurentPoly2& o) const {
        LaurentPoly2 r = *this;
        for (auto& [e, c] : o.terms_) r.add_term(c, e.first, e.second);
        return r;
    }

    bool operator==(const LaurentPoly2&) const = default;

    /// (t1,t2) -> (1/t1, 1/t2).
    LaurentPoly2 invert_variables() const {
        LaurentPoly2 r;
        for (auto& [e, c] : terms_)
            r.terms_[{checked::neg(e.first), checked::neg(e.second)}] = c;
        return r;
    }

    i64 eval_ones() const {
        i64 s = 0;
        for (auto& [e, c] : terms_) s = checked::add(s, c);
        return s;
    }

private:
    std::map<std::pair<i64, i64>, i64> terms_;
};

}  // namespace twistcalc

#endif
