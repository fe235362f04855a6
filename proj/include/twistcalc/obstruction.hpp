#ifndef TWISTCALC_OBSTRUCTION_HPP
#define TWISTCALC_OBSTRUCTION_HPP

#include <string>
#include <vector>

#include "twistcalc/qform.hpp"

namespace twistcalc {

/// Data of the obstruction surface: genus m(m-1), self-intersection
/// -2m^2 - m - 1, and the 3x3 pairing matrix on [T1, T2, S_m].
struct SurfaceData {
    i64 m = 0;
    i64 genus = 0;
    i64 self_int = 0;
    IntMat gram;
    std::vector<std::string> basis_labels;
};

SurfaceData surface_data(i64 m);

/// Coefficients of the surface class in the target basis [T1', T2', S_n].
struct CoeffVector {
    i64 c_t1 = 0;
    i64 c_t2 = 0;
    i64 c_sn = 0;
    bool operator==(const CoeffVector&) const = default;
};

/// Even case (m, n even >= 0; eps in {-1,+1}):
///   c_T1 = -(a+b)(m^2+m/2) - a
///   c_T2 = (e2-e3)(m^2+m/2)(n^2+n/2) + (n^2+n/2) e2 - (m^2+m/2) e3
///   c_Sn = (e2-e3)(m^2+m/2) + e2          (always odd)
CoeffVector sm_coeffs_even(i64 m, i64 n, int eps2, int eps3, i64 a, i64 b);

enum class OddVariant { diagonal, swap };

/// Odd case (m, n odd).  Diagonal:
///   c_T1 = b - a(m^2+(m+1)/2), c_T2 = -e2 (m-n)(m+n+1/2), c_Sn = e2
/// Swap:
///   c_T1 = b - a(m^2+(m+1)/2),
///   c_T2 = e2 (1 - (m^2+(m+1)/2)(n^2+(n+1)/2)),
///   c_Sn = -e2 (m^2+(m+1)/2)               (never zero)
/// All half-integer products expand to integers; a failed expansion
/// throws non_integer_coefficient.
CoeffVector sm_coeffs_odd(i64 m, i64 n, OddVariant variant, int eps2, i64 a, i64 b);

/// Identifies which defect formula applies.
struct DefectCase {
    FormParity parity = FormParity::even;
    int eta = 0;                               ///< even case: (1 - e2 e3)/2, in {0,1}
    OddVariant variant = OddVariant::diagonal; ///< odd case
};

/// Even case: 3m - n + 4 - (n-1)(2m^2+m) eta.
/// Odd diagonal: 3m + 4 - n.  Odd swap: 3m + 3 - (n-1)(m^2+(m+1)/2).
i64 adjunction_defect(i64 m, i64 n, const DefectCase& c);

/// All pairwise differences of the basic classes have square zero under
/// the pairing in which the torus classes pair to zero.
bool basic_class_pairing_check(i64 n);

enum class Conclusion { certified, inconclusive };

/// One row of the certificate's exhaustive case table.
struct CaseRow {
    std::string label;    ///< sign assignment / variant
    i64 defect = 0;
    i64 c_sn = 0;
    bool c_sn_odd = false;
    i64 k_coeff = 0;      ///< coefficient of the adjunction class k
    bool k_positive = false;
};

struct ObstructionCertificate {
    i64 m = 0;
    i64 n = 0;
    FormParity parity = FormParity::even;
    i64 threshold = 0;  ///< 3m + 4
    std::vector<CaseRow> cases;
    Conclusion conclusion = Conclusion::inconclusive;
    std::string reason;
};

/// Enumerates every sign assignment (and both odd-case variants); when
/// 3m + 4 < n, checks that each case has an even negative defect and a
/// nonzero (even case: odd) S_n coefficient.  Requires 0 <= m < n with
/// matching parity (parity_mismatch otherwise).
ObstructionCertificate nondiffeo_certificate(i64 m, i64 n);

std::string to_string(Conclusion c);
std::string to_string(OddVariant v);

}  // namespace twistcalc

#endif
