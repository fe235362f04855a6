#include "twistcalc/qform.hpp"

#include <algorithm>
#include <functional>

namespace twistcalc {

IntMat IntMat::identity(int n) {
    IntMat m;
    m.n = n;
    for (int i = 0; i < n; ++i) m.a[i][i] = 1;
    return m;
}

IntMat IntMat::diag(const std::vector<i64>& d) {
    IntMat m;
    m.n = static_cast<int>(d.size());
    for (int i = 0; i < m.n; ++i) m.a[i][i] = d[i];
    return m;
}

i64 IntMat::det() const {
    if (n == 1) return a[0][0];
    if (n == 2) return checked::sub(checked::mul(a[0][0], a[1][1]), checked::mul(a[0][1], a[1][0]));
    // cofactor expansion along the first row (n <= 4)
    i64 d = 0;
    for (int j = 0; j < n; ++j) {
        if (a[0][j] == 0) continue;
        IntMat sub;
        sub.n = n - 1;
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                sub.a[r - 1][cc++] = a[r][c];
            }
        }
        i64 term = checked::mul(a[0][j], sub.det());
        d = (j % 2 == 0) ? checked::add(d, term) : checked::sub(d, term);
    }
    return d;
}

IntMat IntMat::transpose() const {
    IntMat m;
    m.n = n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.a[i][j] = a[j][i];
    return m;
}

IntMat IntMat::operator*(const IntMat& o) const {
    IntMat m;
    m.n = n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            i64 s = 0;
            for (int k = 0; k < n; ++k) s = checked::add(s, checked::mul(a[i][k], o.a[k][j]));
            m.a[i][j] = s;
        }
    return m;
}

bool IntMat::operator<(const IntMat& o) const {
    if (n != o.n) return n < o.n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (a[i][j] != o.a[i][j]) return a[i][j] < o.a[i][j];
    return false;
}

namespace {

GramForm make_form(IntMat g, std::vector<std::string> labels) {
    return GramForm{g, std::move(labels)};
}

IntMat block2(i64 d) {  // [[0,1],[1,d]]
    IntMat m;
    m.n = 2;
    m.a[0][1] = m.a[1][0] = 1;
    m.a[1][1] = d;
    return m;
}

IntMat direct_sum(const IntMat& x, const IntMat& y) {
    IntMat m;
    m.n = x.n + y.n;
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.n; ++j) m.a[i][j] = x.a[i][j];
    for (int i = 0; i < y.n; ++i)
        for (int j = 0; j < y.n; ++j) m.a[x.n + i][x.n + j] = y.a[i][j];
    return m;
}

}  // namespace

GramForm standard_form(StdFormName name) {
    switch (name) {
        case StdFormName::zero1:
            return make_form(IntMat::diag({0}), {"e1"});
        case StdFormName::diag_plus:
            return make_form(IntMat::diag({1}), {"e1"});
        case StdFormName::diag_minus:
            return make_form(IntMat::diag({-1}), {"e1"});
        case StdFormName::hyperbolic:
            return make_form(block2(0), {"e1", "e2"});
        case StdFormName::y_even:
            return make_form(IntMat::diag({0, 1, -1}), {"e1", "e2", "e3"});
        case StdFormName::y_odd:
            return make_form(direct_sum(IntMat::diag({0}), block2(0)), {"e1", "e2", "e3"});
        case StdFormName::z_even:
            return make_form(IntMat::diag({1, 1, -1, -1}), {"e1", "e2", "e3", "e4"});
        case StdFormName::z_odd:
            return make_form(direct_sum(block2(0), block2(0)), {"e1", "e2", "e3", "e4"});
    }
    throw bad_name("unknown standard form");
}

GramForm double_form(i64 p, i64 n_len) {
    if (p == 0) throw zero_input("double form requires p != 0");
    if (((p % 2) + 2) % 2 != 0) throw odd_p("double form requires even p");
    if (n_len <= 0 || n_len % 2 == 0)
        throw parity_error("double form requires odd positive normal-form length");
    i64 sign = (((n_len + 1) / 2) % 2 == 0) ? 1 : -1;
    i64 d = checked::mul(sign, p / 2);
    return make_form(direct_sum(block2(d), block2(d)), {"a1", "b1", "a2", "b2"});
}

GramForm parse_form_name(const std::string& name) {
    if (name == "Zero1") return standard_form(StdFormName::zero1);
    if (name == "Diag+1") return standard_form(StdFormName::diag_plus);
    if (name == "Diag-1") return standard_form(StdFormName::diag_minus);
    if (name == "H") return standard_form(StdFormName::hyperbolic);
    if (name == "Y_even") return standard_form(StdFormName::y_even);
    if (name == "Y_odd") return standard_form(StdFormName::y_odd);
    if (name == "Z_even") return standard_form(StdFormName::z_even);
    if (name == "Z_odd") return standard_form(StdFormName::z_odd);
    if (name.rfind("Double:", 0) == 0) {
        std::string rest = name.substr(7);
        std::size_t colon = rest.find(':');
        if (colon == std::string::npos) throw bad_name("expected Double:p:N");
        try {
            std::size_t u1 = 0, u2 = 0;
            std::string ps = rest.substr(0, colon), ns = rest.substr(colon + 1);
            i64 p = std::stoll(ps, &u1);
            i64 nl = std::stoll(ns, &u2);
            if (u1 != ps.size() || u2 != ns.size()) throw bad_name("expected Double:p:N");
            return double_form(p, nl);
        } catch (const std::invalid_argument&) {
            throw bad_name("expected integers in Double:p:N");
        } catch (const std::out_of_range&) {
            throw bad_name("Double:p:N arguments out of range");
        }
    }
    throw bad_name("unknown form name: " + name);
}

bool preserves_form(const IntMat& m, const GramForm& q) {
    if (m.n != q.gram.n) throw dimension_mismatch("matrix rank differs from form rank");
    i64 d = m.det();
    if (d != 1 && d != -1) return false;
    return m.transpose() * q.gram * m == q.gram;
}

namespace {

/// Column-by-column backtracking for C with C^T A C = B, |det C| = 1.
void isometry_search(const IntMat& a, const IntMat& b, int bound, std::size_t max_results,
                     std::vector<IntMat>& out) {
    const int n = a.n;
    IntMat cur;
    cur.n = n;
    // columns[j][i] = entry (i, j)
    std::function<void(int)> rec = [&](int col) {
        if (out.size() >= max_results) return;
        if (col == n) {
            i64 d = cur.det();
            if (d == 1 || d == -1) out.push_back(cur);
            return;
        }
        std::array<i64, 4> v{};
        std::function<void(int)> fill = [&](int row) {
            if (out.size() >= max_results) return;
            if (row == n) {
                // quadric: v^T A v == B[col][col]
                i64 s = 0;
                for (int i = 0; i < n; ++i)
                    for (int j2 = 0; j2 < n; ++j2)
                        s = checked::add(s, checked::mul(v[i], checked::mul(a.a[i][j2], v[j2])));
                if (s != b.a[col][col]) return;
                // cross terms with earlier columns
                for (int prev = 0; prev < col; ++prev) {
                    i64 t = 0;
                    for (int i = 0; i < n; ++i)
                        for (int j2 = 0; j2 < n; ++j2)
                            t = checked::add(
                                t, checked::mul(cur.a[i][prev], checked::mul(a.a[i][j2], v[j2])));
                    if (t != b.a[prev][col]) return;
                }
                for (int i = 0; i < n; ++i) cur.a[i][col] = v[i];
                rec(col + 1);
                return;
            }
            // diagonal entries always range over at least [-1, 1], so a
            // zero bound means "no off-diagonal entries" rather than "no
            // isometries at all"
            i64 lim = (row == col) ? std::max(bound, 1) : bound;
            for (i64 x = -lim; x <= lim; ++x) {
                v[row] = x;
                fill(row + 1);
            }
        };
        fill(0);
    };
    rec(0);
}

}  // namespace

std::vector<FormIsometry> enumerate_isometries(const GramForm& q, int bound) {
    if (bound < 0) throw domain_error("bound must be nonnegative");
    if (bound > 6) throw bound_too_large("enumeration bound capped at 6");
    if (q.gram.n > 4) throw dimension_mismatch("rank must be <= 4");
    std::vector<IntMat> out;
    isometry_search(q.gram, q.gram, bound, static_cast<std::size_t>(-1), out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IntMat> find_isometry_between(const GramForm& a, const GramForm& b, int bound,
                                          std::size_t max_results) {
    if (a.gram.n != b.gram.n) throw dimension_mismatch("form ranks differ");
    if (bound < 0) throw domain_error("bound must be nonnegative");
    if (bound > 6) throw bound_too_large("search bound capped at 6");
    std::vector<IntMat> out;
    isometry_search(a.gram, b.gram, bound, max_results, out);
    return out;
}

bool matches_lemma_shape(const IntMat& m, LemmaShape which) {
    if (m.n != 3) throw dimension_mismatch("lemma patterns are rank 3");
    auto unit = [](i64 x) { return x == 1 || x == -1; };
    bool first_col = unit(m.a[0][0]) && m.a[1][0] == 0 && m.a[2][0] == 0;
    if (!first_col) return false;
    if (which == LemmaShape::triangular)
        return unit(m.a[1][1]) && m.a[1][2] == 0 && m.a[2][1] == 0 && unit(m.a[2][2]);
    bool diag_pattern =
        unit(m.a[1][1]) && m.a[1][2] == 0 && m.a[2][1] == 0 && m.a[2][2] == m.a[1][1];
    bool swap_pattern =
        m.a[1][1] == 0 && unit(m.a[1][2]) && m.a[2][1] == m.a[1][2] && m.a[2][2] == 0;
    return diag_pattern || swap_pattern;
}

namespace {

/// Change of basis sending [[0,1],[1,d]] to H (d even) or <1>+<-1> (d odd).
IntMat block_standardization(i64 d) {
    IntMat c;
    c.n = 2;
    if (d % 2 == 0) {
        // f1 = e1, f2 = e2 - (d/2) e1
        c.a[0][0] = 1;
        c.a[0][1] = -d / 2;
        c.a[1][1] = 1;
    } else {
        // f1 = ((1-d)/2) e1 + e2  (square 1), f2 = ((-1-d)/2) e1 + e2 (square -1)
        c.a[0][0] = (1 - d) / 2;
        c.a[0][1] = (-1 - d) / 2;
        c.a[1][0] = 1;
        c.a[1][1] = 1;
    }
    return c;
}

}  // namespace

TwistClassification classify_twist_from(const NormalForm& nf) {
    const Rational& r = nf.value;
    if (r.p == 0) throw zero_input("classification requires p != 0");
    if (((r.p % 2) + 2) % 2 != 0) throw odd_p("classification requires even p");
    TwistClassification tc;
    tc.p_mod4 = static_cast<int>(((r.p % 4) + 4) % 4);
    tc.kind = tc.p_mod4 == 2 ? TwistKind::plug : TwistKind::g_cork;
    tc.dbl = double_form(r.p, static_cast<i64>(nf.coeffs.size()));
    i64 d = tc.dbl.gram.a[1][1];
    IntMat blk = block_standardization(d);
    IntMat c = direct_sum(blk, blk);
    if (d % 2 != 0) {
        // interleave the columns so the target Gram is diag(1,1,-1,-1)
        IntMat perm;
        perm.n = 4;
        perm.a[0][0] = 1;  // new col1 = old col1 (square +1, block 1)
        perm.a[2][1] = 1;  // new col2 = old col3 (square +1, block 2)
        perm.a[1][2] = 1;  // new col3 = old col2 (square -1, block 1)
        perm.a[3][3] = 1;  // new col4 = old col4 (square -1, block 2)
        c = c * perm;
        tc.standardized_as = "2<1>+2<-1>";
    } else {
        tc.standardized_as = "H+H";
    }
    tc.change_of_basis = c;
    return tc;
}

TwistClassification classify_twist(const Rational& r) {
    if (r.p == 0) throw zero_input("classification requires p != 0");
    if (((r.p % 2) + 2) % 2 != 0) throw odd_p("classification requires even p");
    return classify_twist_from(cf_normalize(r));
}

FormParity form_parity(const GramForm& q) {
    for (int i = 0; i < q.gram.n; ++i)
        if (((q.gram.a[i][i] % 2) + 2) % 2 != 0) return FormParity::odd;
    return FormParity::even;
}

std::string to_string(TwistKind k) { return k == TwistKind::plug ? "plug" : "g-cork"; }

std::string to_string(FormParity p) { return p == FormParity::even ? "even" : "odd"; }

}  // namespace twistcalc
