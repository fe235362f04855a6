#ifndef TWISTCALC_INVARIANTS_HPP
#define TWISTCALC_INVARIANTS_HPP

#include <vector>

#include "twistcalc/braid.hpp"
#include "twistcalc/laurent.hpp"

namespace twistcalc {

/// Coefficients i of the classes i*(t1+t2); negation-symmetric
/// arithmetic progression of step 2.
using BasicClassSet = std::vector<i64>;

/// (t1 t2)^{n-1} + (t1 t2)^{n-3} + ... + (t1 t2)^{-n+1}: n terms, all
/// coefficients 1.  Throws domain_error for n <= 0.
LaurentPoly2 torus_link_alexander(i64 n);

/// {-n+1, -n+3, ..., n-1}.  Throws domain_error for n <= 0.
BasicClassSet basic_classes(i64 n);

/// Alternating 3-braid word: odd-index coefficients map to sigma1
/// syllables (positive sign), even-index ones to sigma2 syllables
/// (negative sign).
BraidWord braid_Bpq(const NormalForm& nf);

/// Alexander polynomial of a braid closure plus a degeneracy flag for
/// split closures where the determinant formula vanishes.
struct ClosurePoly {
    LaurentPoly1 poly;
    bool degenerate = false;
    bool operator==(const ClosurePoly&) const = default;
};

/// Alexander polynomial of the closure of w, from the reduced Burau
/// image: det(burau(w) - I) divided exactly by 1 + t + t^2, normalized
/// to the symmetric representative with positive top coefficient.
/// Words without sigma2 letters close inside B2 and use the two-strand
/// formula ((-t)^e - 1)/(1 + t).  A vanishing determinant reports
/// degenerate = true with the zero polynomial.
ClosurePoly alexander_closure(const BraidWord& w);

/// Alexander polynomial of the 2-bridge knot/link of p/q via the
/// partial-sum closed form sum_i (-1)^i t^{s_i} with
/// s_i = sum_{j<=i} (-1)^{floor(jq/p)}, evaluated on the canonical odd
/// representative of q modulo 2p (the orientation is picked canonically
/// among q and its inverse so the result depends only on the
/// equivalence class; knots are insensitive to the choice).  Satisfies
/// |value at t=-1| = p, hence never zero.  Throws zero_input for p = 0.
LaurentPoly1 alexander_two_bridge(const Rational& r);

/// (a-1)(b-1)/2 for coprime positive a, b.  Throws not_coprime, and
/// domain_error for non-positive arguments.
i64 torus_knot_genus(i64 a, i64 b);

}  // namespace twistcalc

#endif
