#include "twistcalc/obstruction.hpp"

#include "twistcalc/invariants.hpp"

namespace twistcalc {

namespace {

bool is_even(i64 x) { return ((x % 2) + 2) % 2 == 0; }

void require_sign(int e) {
    if (e != 1 && e != -1) throw domain_error("sign parameters must be +1 or -1");
}

/// m^2 + m/2 for even m.
i64 half_even(i64 m) {
    if (!is_even(m)) throw parity_error("formula requires an even argument");
    return checked::add(checked::mul(m, m), m / 2);
}

/// m^2 + (m+1)/2 for odd m.
i64 half_odd(i64 m) {
    if (is_even(m)) throw parity_error("formula requires an odd argument");
    if (!is_even(m + 1)) throw non_integer_coefficient("(m+1)/2 failed integrality");
    return checked::add(checked::mul(m, m), (m + 1) / 2);
}

}  // namespace

SurfaceData surface_data(i64 m) {
    if (m < 0) throw domain_error("surface index must be nonnegative");
    SurfaceData s;
    s.m = m;
    s.genus = checked::mul(m, m - 1);
    s.self_int = checked::sub(checked::neg(checked::mul(2, checked::mul(m, m))),
                              checked::add(m, 1));
    s.gram.n = 3;
    s.gram.a[1][2] = s.gram.a[2][1] = 1;
    s.gram.a[2][2] = s.self_int;
    s.basis_labels = {"T1", "T2", "S_" + std::to_string(m)};
    return s;
}

CoeffVector sm_coeffs_even(i64 m, i64 n, int eps2, int eps3, i64 a, i64 b) {
    require_sign(eps2);
    require_sign(eps3);
    if (m < 0 || n < 0) throw domain_error("indices must be nonnegative");
    if (!is_even(m) || !is_even(n)) throw parity_error("even-case formula requires even m, n");
    i64 mm = half_even(m), nn = half_even(n);
    i64 de = eps2 - eps3;  // in {-2, 0, 2}
    CoeffVector c;
    c.c_t1 = checked::sub(checked::neg(checked::mul(checked::add(a, b), mm)), a);
    c.c_t2 = checked::add(checked::mul(de, checked::mul(mm, nn)),
                          checked::sub(checked::mul(nn, eps2), checked::mul(mm, eps3)));
    c.c_sn = checked::add(checked::mul(de, mm), eps2);
    return c;
}

CoeffVector sm_coeffs_odd(i64 m, i64 n, OddVariant variant, int eps2, i64 a, i64 b) {
    require_sign(eps2);
    if (m < 0 || n < 0) throw domain_error("indices must be nonnegative");
    if (is_even(m) || is_even(n)) throw parity_error("odd-case formula requires odd m, n");
    i64 mm = half_odd(m), nn = half_odd(n);
    CoeffVector c;
    c.c_t1 = checked::sub(b, checked::mul(a, mm));
    if (variant == OddVariant::diagonal) {
        // -e2 (m-n)(m+n+1/2) = -e2 ((m-n)/2) (2(m+n)+1); m-n is even
        if (!is_even(m - n)) throw non_integer_coefficient("(m-n)/2 failed integrality");
        i64 halfdiff = (m - n) / 2;
        i64 oddsum = checked::add(checked::mul(2, checked::add(m, n)), 1);
        c.c_t2 = checked::neg(checked::mul(eps2, checked::mul(halfdiff, oddsum)));
        c.c_sn = eps2;
    } else {
        c.c_t2 = checked::mul(eps2, checked::sub(1, checked::mul(mm, nn)));
        c.c_sn = checked::neg(checked::mul(eps2, mm));
    }
    return c;
}

i64 adjunction_defect(i64 m, i64 n, const DefectCase& c) {
    if (m < 0 || n < 0) throw domain_error("indices must be nonnegative");
    if (c.parity == FormParity::even) {
        if (!is_even(m) || !is_even(n)) throw parity_error("even defect requires even m, n");
        if (c.eta != 0 && c.eta != 1) throw domain_error("eta must be 0 or 1");
        i64 base = checked::add(checked::sub(checked::mul(3, m), n), 4);
        i64 corr = checked::mul(n - 1, checked::mul(checked::add(checked::mul(2, checked::mul(m, m)), m), c.eta));
        return checked::sub(base, corr);
    }
    if (is_even(m) || is_even(n)) throw parity_error("odd defect requires odd m, n");
    if (c.variant == OddVariant::diagonal) return checked::sub(checked::add(checked::mul(3, m), 4), n);
    return checked::sub(checked::add(checked::mul(3, m), 3), checked::mul(n - 1, half_odd(m)));
}

bool basic_class_pairing_check(i64 n) {
    BasicClassSet cls = basic_classes(n);
    // differences expand in the torus classes T1, T2 whose Gram is zero:
    // ((i-j)(T1+T2))^2 = (i-j)^2 (T1+T2)^2 = 0
    IntMat zero_gram;
    zero_gram.n = 2;
    for (std::size_t x = 0; x < cls.size(); ++x)
        for (std::size_t y = 0; y < cls.size(); ++y) {
            i64 d = checked::sub(cls[x], cls[y]);
            i64 v[2] = {d, d};  // coefficients on (T1, T2)
            i64 sq = 0;
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    sq = checked::add(sq, checked::mul(v[i], checked::mul(zero_gram.a[i][j], v[j])));
            if (sq != 0) return false;
        }
    return true;
}

namespace {

CaseRow even_case_row(i64 m, i64 n, int e2, int e3) {
    CaseRow row;
    row.label = "e2=" + std::to_string(e2) + ",e3=" + std::to_string(e3);
    int eta = (1 - e2 * e3) / 2;
    DefectCase dc{FormParity::even, eta, OddVariant::diagonal};
    row.defect = adjunction_defect(m, n, dc);
    row.c_sn = sm_coeffs_even(m, n, e2, e3, 0, 0).c_sn;
    row.c_sn_odd = !is_even(row.c_sn);
    // k = e2 (n-1)(T1'+T2') pairs with S_n to (n-1)((2m^2+m) eta + 1)
    row.k_coeff = checked::mul(n - 1, checked::add(checked::mul(checked::add(checked::mul(2, checked::mul(m, m)), m), eta), 1));
    row.k_positive = row.k_coeff > 0;
    return row;
}

CaseRow odd_case_row(i64 m, i64 n, OddVariant v, int e2) {
    CaseRow row;
    row.label = std::string(v == OddVariant::diagonal ? "diagonal" : "swap") +
                ",e2=" + std::to_string(e2);
    DefectCase dc{FormParity::odd, 0, v};
    row.defect = adjunction_defect(m, n, dc);
    row.c_sn = sm_coeffs_odd(m, n, v, e2, 0, 0).c_sn;
    row.c_sn_odd = !is_even(row.c_sn);
    row.k_coeff = checked::mul(n - 1, v == OddVariant::diagonal ? 1 : half_odd(m));
    row.k_positive = row.k_coeff > 0;
    return row;
}

}  // namespace

ObstructionCertificate nondiffeo_certificate(i64 m, i64 n) {
    if (m < 0) throw domain_error("m must be nonnegative");
    if (m >= n) throw domain_error("certificate requires m < n");
    if (is_even(m) != is_even(n))
        throw parity_mismatch("m and n lie in different homeomorphism families");
    ObstructionCertificate cert;
    cert.m = m;
    cert.n = n;
    cert.parity = is_even(m) ? FormParity::even : FormParity::odd;
    cert.threshold = checked::add(checked::mul(3, m), 4);
    if (cert.parity == FormParity::even) {
        for (int e2 : {1, -1})
            for (int e3 : {1, -1}) cert.cases.push_back(even_case_row(m, n, e2, e3));
    } else {
        for (OddVariant v : {OddVariant::diagonal, OddVariant::swap})
            for (int e2 : {1, -1}) cert.cases.push_back(odd_case_row(m, n, v, e2));
    }
    if (cert.threshold >= n) {
        cert.conclusion = Conclusion::inconclusive;
        cert.reason = "criterion 3m+4 < n fails (" + std::to_string(cert.threshold) +
                      " >= " + std::to_string(n) + ")";
        return cert;
    }
    for (const auto& row : cert.cases) {
        bool ok = row.defect < 0 && is_even(row.defect) && row.c_sn != 0;
        if (cert.parity == FormParity::even) ok = ok && row.c_sn_odd;
        if (!ok) {
            cert.conclusion = Conclusion::inconclusive;
            cert.reason = "case " + row.label + " fails the defect/coefficient conditions";
            return cert;
        }
    }
    cert.conclusion = Conclusion::certified;
    cert.reason = "3m+4 < n and every case has an even negative defect with admissible "
                  "S_n coefficient";
    return cert;
}

std::string to_string(Conclusion c) {
    return c == Conclusion::certified ? "certified" : "inconclusive";
}

std::string to_string(OddVariant v) { return v == OddVariant::diagonal ? "diagonal" : "swap"; }

}  // namespace twistcalc
