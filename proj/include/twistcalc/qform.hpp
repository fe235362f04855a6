#ifndef TWISTCALC_QFORM_HPP
#define TWISTCALC_QFORM_HPP

#include <array>
#include <string>
#include <vector>

#include "twistcalc/contfrac.hpp"
#include "twistcalc/rational.hpp"

namespace twistcalc {

/// Small square integer matrix, rank 1..4.
struct IntMat {
    int n = 0;
    std::array<std::array<i64, 4>, 4> a{};

    static IntMat identity(int n);
    static IntMat diag(const std::vector<i64>& d);
    i64 det() const;
    IntMat transpose() const;
    IntMat operator*(const IntMat& o) const;
    bool operator==(const IntMat&) const = default;
    bool operator<(const IntMat& o) const;  ///< lexicographic on entries
};

/// Symmetric Gram matrix with labeled basis.
struct GramForm {
    IntMat gram;
    std::vector<std::string> basis_labels;

    int rank() const { return gram.n; }
};

enum class StdFormName {
    zero1,      ///< <0>
    diag_plus,  ///< <1>
    diag_minus, ///< <-1>
    hyperbolic, ///< H = [[0,1],[1,0]]
    y_even,     ///< <0> + <1> + <-1>
    y_odd,      ///< <0> + H
    z_even,     ///< 2<1> + 2<-1>
    z_odd,      ///< H + H
};

GramForm standard_form(StdFormName name);

/// Twisted-double form of p/q with a length-N normal form:
/// two copies of [[0,1],[1,d]] with d = (-1)^((N+1)/2) * p/2.
/// Requires p even nonzero and N odd positive.
GramForm double_form(i64 p, i64 n_len);

/// Parse CLI names: "Zero1", "Diag+1", "Diag-1", "H", "Y_even",
/// "Y_odd", "Z_even", "Z_odd", "Double:p:N".  Throws bad_name.
GramForm parse_form_name(const std::string& name);

/// An integer matrix M with M^T Q M = Q and |det M| = 1.
using FormIsometry = IntMat;

/// M^T Q M = Q and |det M| = 1; throws dimension_mismatch.
bool preserves_form(const IntMat& m, const GramForm& q);

/// All isometries with off-diagonal entries in [-bound, bound] and
/// diagonal entries in [-max(bound,1), max(bound,1)] (so bound 0 yields
/// exactly the sign-diagonal isometries), sorted lexicographically.
/// Guards: rank <= 4 (dimension_mismatch), 0 <= bound <= 6
/// (bound_too_large).
std::vector<FormIsometry> enumerate_isometries(const GramForm& q, int bound);

enum class LemmaShape {
    triangular,  ///< [[e1,a,b],[0,e2,0],[0,0,e3]] — the <0>+<-1>+<1> pattern
    h_block,     ///< [[e1,a,b],[0,e2,0],[0,0,e2]] or [[e1,a,b],[0,0,e2],[0,e2,0]]
};

/// Does a rank-3 matrix match the stated automorphism pattern?
bool matches_lemma_shape(const IntMat& m, LemmaShape which);

enum class TwistKind { plug, g_cork };
enum class FormParity { even, odd };

struct TwistClassification {
    TwistKind kind;
    int p_mod4 = 0;
    GramForm dbl;                ///< the twisted-double Gram form
    std::string standardized_as; ///< "2<1>+2<-1>" or "H+H"
    IntMat change_of_basis;      ///< certificate: C^T * dbl * C = standard
};

/// Plug when p = 2 mod 4 (odd double form, isometric to 2<1>+2<-1>),
/// g-cork when p = 0 mod 4 (even, isometric to H+H).  Requires p even
/// nonzero; classification depends only on p mod 4.
TwistClassification classify_twist(const Rational& r);

/// Same classification from an explicit link form (used to check
/// independence of the chosen normal form); reads p from nf.value.
TwistClassification classify_twist_from(const NormalForm& nf);

/// Even iff all diagonal Gram entries are even (then every square is).
FormParity form_parity(const GramForm& q);

/// Bounded search for C with C^T A C = B, |det C| = 1; empty if none
/// found within the entry bound.
std::vector<IntMat> find_isometry_between(const GramForm& a, const GramForm& b, int bound,
                                          std::size_t max_results = 1);

std::string to_string(TwistKind k);
std::string to_string(FormParity p);

}  // namespace twistcalc

#endif
