#ifndef TWISTCALC_BRAID_HPP
#define TWISTCALC_BRAID_HPP

#include <string>
#include <vector>

#include "twistcalc/contfrac.hpp"
#include "twistcalc/laurent.hpp"

namespace twistcalc {

enum class TwistGen { psi, phi };
enum class BraidGen { sigma1, sigma2 };

template <typename Gen>
struct Syllable {
    Gen gen;
    i64 exp;  ///< nonzero
    bool operator==(const Syllable&) const = default;
};

/// Word over {psi, phi} in run-length form; adjacent syllables always
/// carry distinct generators and zero exponents are dropped.
struct TwistWord {
    std::vector<Syllable<TwistGen>> letters;

    void append(TwistGen g, i64 e);
    bool empty() const { return letters.empty(); }
    bool operator==(const TwistWord&) const = default;
};

/// Word over {sigma1, sigma2}, same free-reduction invariant.
struct BraidWord {
    std::vector<Syllable<BraidGen>> letters;

    void append(BraidGen g, i64 e);
    bool empty() const { return letters.empty(); }
    bool operator==(const BraidWord&) const = default;
};

/// 2x2 matrix over integer Laurent polynomials in t.
struct BurauMatrix {
    LaurentPoly1 a, b, c, d;  // [[a, b], [c, d]]

    static BurauMatrix identity();
    BurauMatrix operator*(const BurauMatrix& o) const;
    LaurentPoly1 det() const;
    bool is_identity() const;
    bool operator==(const BurauMatrix&) const = default;
};

/// phi^{b_N/2} psi^{b_{N-1}} ... psi^{b_2} phi^{b_1/2} built from the
/// normal form of p/q (link form: odd-index coefficients even, so the
/// halves are exact).  Requires p even and nonzero.
TwistWord twist_word(const Rational& r);

/// Same word built from an explicit link-form coefficient list (the
/// even-p guard expressed structurally); throws wrong_kind on a knot form.
TwistWord twist_word_from(const NormalForm& nf);

/// psi -> sigma1, phi -> sigma2^2, then free reduction.
BraidWord to_braid(const TwistWord& w);

/// Reduced Burau image, convention sigma1 -> [[-t, 1], [0, 1]],
/// sigma2 -> [[1, 0], [t, -t]]; homomorphism on concatenation.
BurauMatrix burau(const BraidWord& w);

/// True iff burau(w) is the identity (the representation is faithful on
/// three strands, so this decides the word problem).
bool is_trivial(const BraidWord& w);

/// Exponent sum of the psi syllables (the half-twist count between the
/// first two strings; phi contributes zero).
i64 f2_exponent(const TwistWord& w);

/// Evidence record for the nontriviality of the twist word of p/q.
struct NontrivialityReport {
    TwistWord word;
    BraidWord braid;
    i64 f2 = 0;
    bool trivial = false;
    std::string evidence;  ///< which witness decided it
};

/// For p != 0 the report always carries evidence of nontriviality:
/// the f2 exponent when it is nonzero, otherwise the non-identity
/// Burau matrix.  Requires p even.
NontrivialityReport word_nontriviality_report(const Rational& r);

/// Same report from an explicit link form (allows probing lists that
/// evaluate to 0, where triviality is permitted).
NontrivialityReport word_nontriviality_report(const NormalForm& nf);

/// Parse "s1 s2^-1 s1^3" style words (whitespace-separated syllables).
BraidWord parse_braid_word(const std::string& text);

std::string to_string(const TwistWord& w);
std::string to_string(const BraidWord& w);

}  // namespace twistcalc

#endif
