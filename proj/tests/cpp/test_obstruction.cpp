#include <doctest.h>

#include <string>
#include <vector>

#include "twistcalc/invariants.hpp"
#include "twistcalc/obstruction.hpp"

using namespace twistcalc;

namespace {

/// Evaluates c^T G c for a coefficient vector against a 3x3 pairing matrix.
i64 self_pairing(const CoeffVector& c, const IntMat& gram) {
    i64 v[3] = {c.c_t1, c.c_t2, c.c_sn};
    i64 total = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) total += v[i] * gram.a[i][j] * v[j];
    return total;
}

}  // namespace

TEST_CASE("surface_data: genus, self-intersection, pairing matrix") {
    SurfaceData s0 = surface_data(0);
    CHECK(s0.genus == 0);
    CHECK(s0.self_int == -1);

    SurfaceData s1 = surface_data(1);
    CHECK(s1.genus == 0);
    CHECK(s1.self_int == -4);

    SurfaceData s2 = surface_data(2);
    CHECK(s2.genus == 2);
    CHECK(s2.self_int == -11);

    SurfaceData s3 = surface_data(3);
    CHECK(s3.genus == 6);
    CHECK(s3.self_int == -22);

    for (i64 m = 0; m <= 12; ++m) {
        SurfaceData s = surface_data(m);
        CHECK(s.m == m);
        CHECK(s.genus == m * (m - 1));
        CHECK(s.self_int == -2 * m * m - m - 1);
        // the surface realizes the genus of the (m, 2m+1) torus knot
        if (m >= 1) CHECK(s.genus == torus_knot_genus(m, 2 * m + 1));
        // pairing matrix: torus classes square to zero, T2 . S = 1
        CHECK(s.gram.n == 3);
        CHECK(s.gram.a[0][0] == 0);
        CHECK(s.gram.a[0][1] == 0);
        CHECK(s.gram.a[0][2] == 0);
        CHECK(s.gram.a[1][0] == 0);
        CHECK(s.gram.a[1][1] == 0);
        CHECK(s.gram.a[1][2] == 1);
        CHECK(s.gram.a[2][0] == 0);
        CHECK(s.gram.a[2][1] == 1);
        CHECK(s.gram.a[2][2] == s.self_int);
        REQUIRE(s.basis_labels.size() == 3);
        CHECK(s.basis_labels[0] == "T1");
        CHECK(s.basis_labels[1] == "T2");
        CHECK(s.basis_labels[2] == "S_" + std::to_string(m));
    }

    CHECK_THROWS_AS(surface_data(-1), domain_error);
}

TEST_CASE("sm_coeffs_even: anchored values and structure") {
    // equal signs kill the (e2 - e3) cross terms
    CoeffVector c = sm_coeffs_even(2, 4, 1, 1, 0, 0);
    CHECK(c.c_t1 == 0);
    CHECK(c.c_t2 == 18 - 5);  // (n^2+n/2) - (m^2+m/2)
    CHECK(c.c_sn == 1);

    // opposite signs: c_sn picks up 2(m^2+m/2)
    c = sm_coeffs_even(2, 4, 1, -1, 0, 0);
    CHECK(c.c_t1 == 0);
    CHECK(c.c_t2 == 2 * 5 * 18 + 18 + 5);
    CHECK(c.c_sn == 11);

    // m = 0 collapses every m-dependent term
    for (int e2 : {1, -1})
        for (int e3 : {1, -1}) {
            CoeffVector z = sm_coeffs_even(0, 6, e2, e3, 0, 0);
            CHECK(z.c_t1 == 0);
            CHECK(z.c_t2 == 39 * e2);  // 6^2 + 3
            CHECK(z.c_sn == e2);
        }

    // torus ambiguity parameters only move c_T1 = -(a+b)(m^2+m/2) - a
    for (i64 a = -3; a <= 3; ++a)
        for (i64 b = -3; b <= 3; ++b) {
            CoeffVector w = sm_coeffs_even(4, 6, -1, 1, a, b);
            CHECK(w.c_t1 == -(a + b) * 18 - a);
            CHECK(w.c_t2 == sm_coeffs_even(4, 6, -1, 1, 0, 0).c_t2);
            CHECK(w.c_sn == sm_coeffs_even(4, 6, -1, 1, 0, 0).c_sn);
        }
}

TEST_CASE("sm_coeffs_even: S_n coefficient is always odd") {
    for (i64 m = 0; m <= 10; m += 2)
        for (i64 n = 0; n <= 10; n += 2)
            for (int e2 : {1, -1})
                for (int e3 : {1, -1})
                    for (i64 a = -2; a <= 2; ++a)
                        for (i64 b = -2; b <= 2; ++b) {
                            CoeffVector c = sm_coeffs_even(m, n, e2, e3, a, b);
                            CHECK(((c.c_sn % 2) + 2) % 2 == 1);
                        }
}

TEST_CASE("sm_coeffs_even: guards") {
    CHECK_THROWS_AS(sm_coeffs_even(1, 4, 1, 1, 0, 0), parity_error);
    CHECK_THROWS_AS(sm_coeffs_even(2, 3, 1, 1, 0, 0), parity_error);
    CHECK_THROWS_AS(sm_coeffs_even(-2, 4, 1, 1, 0, 0), domain_error);
    CHECK_THROWS_AS(sm_coeffs_even(2, -4, 1, 1, 0, 0), domain_error);
    CHECK_THROWS_AS(sm_coeffs_even(2, 4, 0, 1, 0, 0), domain_error);
    CHECK_THROWS_AS(sm_coeffs_even(2, 4, 1, 2, 0, 0), domain_error);
}

TEST_CASE("sm_coeffs_odd: anchored values and structure") {
    // diagonal variant: S_n coefficient is just the sign
    CoeffVector c = sm_coeffs_odd(1, 3, OddVariant::diagonal, 1, 0, 0);
    CHECK(c.c_t1 == 0);
    CHECK(c.c_t2 == 9);  // -((1-3)/2)(2(1+3)+1)
    CHECK(c.c_sn == 1);

    c = sm_coeffs_odd(1, 3, OddVariant::diagonal, -1, 0, 0);
    CHECK(c.c_t2 == -9);
    CHECK(c.c_sn == -1);

    // swap variant: S_n coefficient is -e2 (m^2 + (m+1)/2)
    c = sm_coeffs_odd(1, 3, OddVariant::swap, 1, 0, 0);
    CHECK(c.c_t1 == 0);
    CHECK(c.c_t2 == 1 - 2 * 11);
    CHECK(c.c_sn == -2);

    c = sm_coeffs_odd(1, 3, OddVariant::swap, -1, 0, 0);
    CHECK(c.c_t2 == 2 * 11 - 1);
    CHECK(c.c_sn == 2);

    // torus ambiguity parameters only move c_T1 = b - a(m^2+(m+1)/2)
    for (i64 a = -3; a <= 3; ++a)
        for (i64 b = -3; b <= 3; ++b) {
            for (OddVariant v : {OddVariant::diagonal, OddVariant::swap}) {
                CoeffVector w = sm_coeffs_odd(3, 5, v, 1, a, b);
                CHECK(w.c_t1 == b - a * 11);
                CHECK(w.c_t2 == sm_coeffs_odd(3, 5, v, 1, 0, 0).c_t2);
                CHECK(w.c_sn == sm_coeffs_odd(3, 5, v, 1, 0, 0).c_sn);
            }
        }

    // swap-variant S_n coefficient never vanishes
    for (i64 m = 1; m <= 11; m += 2)
        for (i64 n = 1; n <= 11; n += 2)
            for (int e2 : {1, -1}) {
                CHECK(sm_coeffs_odd(m, n, OddVariant::swap, e2, 0, 0).c_sn != 0);
                CHECK(sm_coeffs_odd(m, n, OddVariant::diagonal, e2, 0, 0).c_sn == e2);
            }
}

TEST_CASE("sm_coeffs_odd: guards") {
    CHECK_THROWS_AS(sm_coeffs_odd(2, 3, OddVariant::diagonal, 1, 0, 0), parity_error);
    CHECK_THROWS_AS(sm_coeffs_odd(1, 4, OddVariant::diagonal, 1, 0, 0), parity_error);
    CHECK_THROWS_AS(sm_coeffs_odd(-1, 3, OddVariant::swap, 1, 0, 0), domain_error);
    CHECK_THROWS_AS(sm_coeffs_odd(1, 3, OddVariant::swap, 0, 0, 0), domain_error);
}

TEST_CASE("coefficient vectors reproduce the surface self-intersection") {
    // Expressing the m-surface class in the n-surface basis must preserve
    // its self-pairing: c^T . gram_n . c == self_int(m).  The torus
    // parameters a, b pair to zero, so the identity holds for every choice.
    for (i64 m = 0; m <= 8; m += 2)
        for (i64 n = 0; n <= 8; n += 2) {
            IntMat gram = surface_data(n).gram;
            i64 expected = surface_data(m).self_int;
            for (int e2 : {1, -1})
                for (int e3 : {1, -1})
                    for (i64 a : {-2L, 0L, 3L})
                        for (i64 b : {-1L, 0L, 2L}) {
                            CoeffVector c = sm_coeffs_even(m, n, e2, e3, a, b);
                            CHECK(self_pairing(c, gram) == expected);
                        }
        }

    for (i64 m = 1; m <= 9; m += 2)
        for (i64 n = 1; n <= 9; n += 2) {
            IntMat gram = surface_data(n).gram;
            i64 expected = surface_data(m).self_int;
            for (OddVariant v : {OddVariant::diagonal, OddVariant::swap})
                for (int e2 : {1, -1})
                    for (i64 a : {-2L, 0L, 3L})
                        for (i64 b : {-1L, 0L, 2L}) {
                            CoeffVector c = sm_coeffs_odd(m, n, v, e2, a, b);
                            CHECK(self_pairing(c, gram) == expected);
                        }
        }
}

TEST_CASE("adjunction_defect: anchored values") {
    DefectCase even0{FormParity::even, 0, OddVariant::diagonal};
    DefectCase even1{FormParity::even, 1, OddVariant::diagonal};
    DefectCase diag{FormParity::odd, 0, OddVariant::diagonal};
    DefectCase swap_case{FormParity::odd, 0, OddVariant::swap};

    CHECK(adjunction_defect(2, 12, even0) == -2);
    CHECK(adjunction_defect(2, 10, even0) == 0);
    CHECK(adjunction_defect(2, 12, even1) == -2 - 11 * 10);
    CHECK(adjunction_defect(0, 6, even0) == -2);
    CHECK(adjunction_defect(0, 6, even1) == -2);  // m = 0 kills the eta term

    CHECK(adjunction_defect(1, 9, diag) == -2);
    CHECK(adjunction_defect(1, 9, swap_case) == 6 - 8 * 2);
    CHECK(adjunction_defect(3, 15, diag) == -2);
    CHECK(adjunction_defect(3, 15, swap_case) == 12 - 14 * 11);
}

TEST_CASE("adjunction_defect: always even on matching parities") {
    DefectCase dc;
    for (i64 m = 0; m <= 10; m += 2)
        for (i64 n = 0; n <= 30; n += 2)
            for (int eta : {0, 1}) {
                dc = DefectCase{FormParity::even, eta, OddVariant::diagonal};
                CHECK(adjunction_defect(m, n, dc) % 2 == 0);
            }
    for (i64 m = 1; m <= 11; m += 2)
        for (i64 n = 1; n <= 31; n += 2)
            for (OddVariant v : {OddVariant::diagonal, OddVariant::swap}) {
                dc = DefectCase{FormParity::odd, 0, v};
                CHECK(adjunction_defect(m, n, dc) % 2 == 0);
            }
}

TEST_CASE("adjunction_defect: guards") {
    DefectCase even_case{FormParity::even, 0, OddVariant::diagonal};
    DefectCase odd_case{FormParity::odd, 0, OddVariant::diagonal};
    CHECK_THROWS_AS(adjunction_defect(1, 4, even_case), parity_error);
    CHECK_THROWS_AS(adjunction_defect(2, 5, even_case), parity_error);
    CHECK_THROWS_AS(adjunction_defect(2, 4, odd_case), parity_error);
    CHECK_THROWS_AS(adjunction_defect(-2, 4, even_case), domain_error);
    DefectCase bad_eta{FormParity::even, 2, OddVariant::diagonal};
    CHECK_THROWS_AS(adjunction_defect(2, 4, bad_eta), domain_error);
}

TEST_CASE("basic_class_pairing_check") {
    CHECK(basic_class_pairing_check(1));
    CHECK(basic_class_pairing_check(2));
    CHECK(basic_class_pairing_check(5));
    CHECK(basic_class_pairing_check(12));
}

TEST_CASE("nondiffeo_certificate: even pair (0, 6) is certified") {
    ObstructionCertificate cert = nondiffeo_certificate(0, 6);
    CHECK(cert.m == 0);
    CHECK(cert.n == 6);
    CHECK(cert.parity == FormParity::even);
    CHECK(cert.threshold == 4);
    CHECK(cert.conclusion == Conclusion::certified);
    CHECK(to_string(cert.conclusion) == "certified");
    REQUIRE(cert.cases.size() == 4);
    for (const CaseRow& row : cert.cases) {
        CHECK(row.defect == -2);
        CHECK((row.c_sn == 1 || row.c_sn == -1));
        CHECK(row.c_sn_odd);
        CHECK(row.k_coeff == 5);
        CHECK(row.k_positive);
    }
    CHECK(cert.cases[0].label == "e2=1,e3=1");
    CHECK(cert.cases[1].label == "e2=1,e3=-1");
    CHECK(cert.cases[2].label == "e2=-1,e3=1");
    CHECK(cert.cases[3].label == "e2=-1,e3=-1");
}

TEST_CASE("nondiffeo_certificate: threshold failure is inconclusive") {
    ObstructionCertificate cert = nondiffeo_certificate(2, 6);
    CHECK(cert.conclusion == Conclusion::inconclusive);
    CHECK(cert.threshold == 10);
    CHECK(cert.reason.find("10 >= 6") != std::string::npos);
    // the case table is still populated for inspection
    CHECK(cert.cases.size() == 4);

    // boundary: n == 3m + 4 exactly is still out of range
    cert = nondiffeo_certificate(0, 4);
    CHECK(cert.conclusion == Conclusion::inconclusive);
    CHECK(cert.reason.find("4 >= 4") != std::string::npos);
}

TEST_CASE("nondiffeo_certificate: odd pair (1, 9) is certified") {
    ObstructionCertificate cert = nondiffeo_certificate(1, 9);
    CHECK(cert.parity == FormParity::odd);
    CHECK(cert.threshold == 7);
    CHECK(cert.conclusion == Conclusion::certified);
    REQUIRE(cert.cases.size() == 4);

    CHECK(cert.cases[0].label == "diagonal,e2=1");
    CHECK(cert.cases[0].defect == -2);
    CHECK(cert.cases[0].c_sn == 1);
    CHECK(cert.cases[0].k_coeff == 8);

    CHECK(cert.cases[1].label == "diagonal,e2=-1");
    CHECK(cert.cases[1].c_sn == -1);

    CHECK(cert.cases[2].label == "swap,e2=1");
    CHECK(cert.cases[2].defect == -10);
    CHECK(cert.cases[2].c_sn == -2);
    CHECK(cert.cases[2].k_coeff == 16);

    CHECK(cert.cases[3].label == "swap,e2=-1");
    CHECK(cert.cases[3].c_sn == 2);

    for (const CaseRow& row : cert.cases) {
        CHECK(row.defect < 0);
        CHECK(row.defect % 2 == 0);
        CHECK(row.c_sn != 0);
        CHECK(row.k_positive);
    }
}

TEST_CASE("nondiffeo_certificate: guards") {
    CHECK_THROWS_AS(nondiffeo_certificate(1, 6), parity_mismatch);
    CHECK_THROWS_AS(nondiffeo_certificate(2, 7), parity_mismatch);
    CHECK_THROWS_AS(nondiffeo_certificate(3, 3), domain_error);
    CHECK_THROWS_AS(nondiffeo_certificate(5, 3), domain_error);
    CHECK_THROWS_AS(nondiffeo_certificate(-1, 5), domain_error);
}

TEST_CASE("nondiffeo_certificate: certified across the whole admissible family") {
    // Whenever n > 3m + 4 with matching parity, every sign case passes:
    // the construction distinguishes infinitely many pairs at once.
    for (i64 m = 0; m <= 8; m += 2)
        for (i64 n = 3 * m + 6; n <= 3 * m + 24; n += 2) {
            ObstructionCertificate cert = nondiffeo_certificate(m, n);
            CHECK(cert.conclusion == Conclusion::certified);
            CHECK(cert.cases.size() == 4);
            for (const CaseRow& row : cert.cases) {
                CHECK(row.defect < 0);
                CHECK(row.defect % 2 == 0);
                CHECK(row.c_sn_odd);
                CHECK(row.k_positive);
                // table rows agree with the standalone defect function
                int eta = row.label.find("e3=1") != std::string::npos
                              ? (row.label.find("e2=1") != std::string::npos ? 0 : 1)
                              : (row.label.find("e2=1") != std::string::npos ? 1 : 0);
                DefectCase dc{FormParity::even, eta, OddVariant::diagonal};
                CHECK(row.defect == adjunction_defect(m, n, dc));
            }
        }

    for (i64 m = 1; m <= 9; m += 2)
        for (i64 n = 3 * m + 6; n <= 3 * m + 24; n += 2) {
            ObstructionCertificate cert = nondiffeo_certificate(m, n);
            CHECK(cert.conclusion == Conclusion::certified);
            for (const CaseRow& row : cert.cases) {
                CHECK(row.defect < 0);
                CHECK(row.defect % 2 == 0);
                CHECK(row.c_sn != 0);
                CHECK(row.k_positive);
                OddVariant v = row.label.rfind("diagonal", 0) == 0 ? OddVariant::diagonal
                                                                   : OddVariant::swap;
                DefectCase dc{FormParity::odd, 0, v};
                CHECK(row.defect == adjunction_defect(m, n, dc));
            }
        }
}
