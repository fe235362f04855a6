#ifndef TWISTCALC_CONTFRAC_HPP
#define TWISTCALC_CONTFRAC_HPP

#include <string>
#include <utility>
#include <vector>

#include "twistcalc/rational.hpp"

namespace twistcalc {

/// Coefficient list [b_1..b_N] of the negative continued fraction
/// b_1 - 1/(b_2 - 1/(...)).
using ContinuedFraction = std::vector<i64>;

/// Value as the raw (1,1) and (2,1) entries of the product of the
/// matrices [[b_i, -1], [1, 0]], left to right.  Not reduced.
std::pair<i64, i64> cf_evaluate_raw(const ContinuedFraction& coeffs);

/// Raw pair reduced to the canonical Rational (gcd out, sign on p);
/// a vanishing (2,1) entry canonicalizes to the infinite value 1/0.
Rational cf_evaluate(const ContinuedFraction& coeffs);

/// Canonical ceiling-division expansion: b_i = ceil(num/den) at each
/// step, remainders in [0, den).  All coefficients from position 2 on
/// are >= 2; the first coefficient is ceil(p/q) (so [0] for 0/1 and a
/// non-positive lead for p < 0).  cf_evaluate inverts it exactly.
ContinuedFraction cf_expand(const Rational& r);

enum class MoveVariant {
    interior_insert,  ///< site i in [1, n-1]: (a_i, a_{i+1}) -> (a_i+s, s, a_{i+1}+s)
    interior_delete,  ///< site k in [2, n-1], a_k == s: inverse of the above
    append_insert,    ///< (..., a_n) -> (..., a_n+s, s); site must be n
    append_delete,    ///< n >= 2, a_n == s: (..., a_{n-1}, s) -> (..., a_{n-1}-s); site n
    prepend_insert,   ///< (a_1, ...) -> (s, a_1+s, ...); site must be 1.  NOTE:
                      ///< changes the value (s=+1 sends p/q to p/(p+q), s=-1 to
                      ///< the class of (-p, p-q)); the knot/link class is
                      ///< preserved but the fraction is not.
    prepend_delete,   ///< n >= 2, a_1 == s: (s, a_2, ...) -> (a_2-s, ...); site 1.
                      ///< Inverse of prepend_insert; same caveat.
};

struct Move {
    MoveVariant variant;
    int site;  ///< 1-indexed, see variant comments
    int sign;  ///< +1 or -1
    bool operator==(const Move&) const = default;
};

/// Apply one coefficient deformation.  All variants except the prepend
/// pair leave cf_evaluate unchanged.  Throws illegal_site when the
/// variant cannot apply at the index.
ContinuedFraction cf_apply_move(const ContinuedFraction& coeffs, const Move& move);

/// Inverse move (insert <-> delete at the corresponding site).
Move invert_move(const Move& move);

enum class FormKind { knot_form, link_form };

/// Odd-length list with b_3, b_5, ..., b_N even; knot_form has b_1 odd
/// (p odd), link_form has b_1 even too (p even).  `witness` is a move
/// sequence from cf_expand(value) to coeffs, every step value-preserving.
struct NormalForm {
    ContinuedFraction coeffs;
    FormKind kind = FormKind::knot_form;
    Rational value;
    std::vector<Move> witness;
};

/// Normalize p/q into the odd-length even-tail form.
///
/// Exists if and only if q is odd: mod 2 the defining matrices reduce to
/// S = [[0,1],[1,0]] (even coefficient) and T = [[1,1],[1,0]] (odd), and
/// any admissible pattern forces the (2,1) entry odd.  Throws zero_input
/// for p = 0 and no_normal_form for even q.
///
/// The coefficients are produced by a parity-constrained remainder chain
/// (position 1: nearest integer of p's parity to num/den; even positions:
/// nearest integer; odd positions >= 3: nearest even integer; ties take
/// the larger candidate), which strictly decreases |den| and terminates
/// only at odd length.  The witness is constructed by reducing the result
/// to the ceiling expansion via blow-downs and reversing.
NormalForm cf_normalize(const Rational& r);

/// (-1)^((N-1)/2) * (b_1 + b_3 + ... + b_N) mod 4, as a residue in
/// {0,1,2,3}; equals p mod 4 for link forms.  Throws wrong_kind on a
/// knot form.
int mod4_signed_odd_sum(const NormalForm& nf);

/// Deterministic move sequence rewriting `coeffs` to cf_expand of its
/// value (the unique list with all entries >= 2 from position 2 of the
/// same value).  Building block of the normalize witness; exposed for
/// auditability.  Requires a finite value (nonvanishing (2,1) entry).
std::vector<Move> cf_reduction_to_expansion(const ContinuedFraction& coeffs);

std::string to_string(MoveVariant v);
std::string to_string(FormKind k);

}  // namespace twistcalc

#endif
