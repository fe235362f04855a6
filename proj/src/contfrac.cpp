#include "twistcalc/contfrac.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>

namespace twistcalc {

std::pair<i64, i64> cf_evaluate_raw(const ContinuedFraction& coeffs) {
    if (coeffs.empty()) throw domain_error("empty coefficient list");
    // product of [[b, -1], [1, 0]], tracked as full 2x2 (a c / d e)
    i64 a = 1, c = 0, d = 0, e = 1;
    for (i64 b : coeffs) {
        i64 na = checked::add(checked::mul(a, b), c);
        i64 nc = checked::neg(a);
        i64 nd = checked::add(checked::mul(d, b), e);
        i64 ne = checked::neg(d);
        a = na;
        c = nc;
        d = nd;
        e = ne;
    }
    return {a, d};
}

Rational cf_evaluate(const ContinuedFraction& coeffs) {
    auto [p, q] = cf_evaluate_raw(coeffs);
    return make_rational(p, q);
}

ContinuedFraction cf_expand(const Rational& r) {
    if (r.is_infinite()) throw domain_error("cannot expand the infinite value");
    ContinuedFraction out;
    i64 num = r.p, den = r.q;
    for (;;) {
        // ceiling division, den > 0
        i64 b = num / den;
        if (num % den != 0 && num > 0) ++b;
        out.push_back(b);
        i64 rem = checked::sub(checked::mul(b, den), num);  // in [0, den)
        if (rem == 0) return out;
        num = den;
        den = rem;
    }
}

ContinuedFraction cf_apply_move(const ContinuedFraction& coeffs, const Move& move) {
    const int n = static_cast<int>(coeffs.size());
    const int i = move.site;
    const i64 s = move.sign;
    if (s != 1 && s != -1) throw illegal_site("move sign must be +1 or -1");
    if (n == 0) throw illegal_site("empty coefficient list");
    ContinuedFraction out;
    switch (move.variant) {
        case MoveVariant::interior_insert: {
            if (i < 1 || i > n - 1) throw illegal_site("interior insert needs site in [1, n-1]");
            out.assign(coeffs.begin(), coeffs.begin() + (i - 1));
            out.push_back(checked::add(coeffs[i - 1], s));
            out.push_back(s);
            out.push_back(checked::add(coeffs[i], s));
            out.insert(out.end(), coeffs.begin() + (i + 1), coeffs.end());
            return out;
        }
        case MoveVariant::interior_delete: {
            if (i < 2 || i > n - 1) throw illegal_site("interior delete needs site in [2, n-1]");
            if (coeffs[i - 1] != s) throw illegal_site("deleted entry must equal the move sign");
            out.assign(coeffs.begin(), coeffs.begin() + (i - 2));
            out.push_back(checked::sub(coeffs[i - 2], s));
            out.push_back(checked::sub(coeffs[i], s));
            out.insert(out.end(), coeffs.begin() + (i + 1), coeffs.end());
            return out;
        }
        case MoveVariant::append_insert: {
            if (i != n) throw illegal_site("append insert site must be n");
            out = coeffs;
            out.back() = checked::add(out.back(), s);
            out.push_back(s);
            return out;
        }
        case MoveVariant::append_delete: {
            if (n < 2) throw illegal_site("append delete needs length >= 2");
            if (i != n) throw illegal_site("append delete site must be n");
            if (coeffs.back() != s) throw illegal_site("deleted entry must equal the move sign");
            out.assign(coeffs.begin(), coeffs.end() - 2);
            out.push_back(checked::sub(coeffs[n - 2], s));
            return out;
        }
        case MoveVariant::prepend_insert: {
            if (i != 1) throw illegal_site("prepend insert site must be 1");
            out.push_back(s);
            out.push_back(checked::add(coeffs[0], s));
            out.insert(out.end(), coeffs.begin() + 1, coeffs.end());
            return out;
        }
        case MoveVariant::prepend_delete: {
            if (n < 2) throw illegal_site("prepend delete needs length >= 2");
            if (i != 1) throw illegal_site("prepend delete site must be 1");
            if (coeffs[0] != s) throw illegal_site("deleted entry must equal the move sign");
            out.push_back(checked::sub(coeffs[1], s));
            out.insert(out.end(), coeffs.begin() + 2, coeffs.end());
            return out;
        }
    }
    throw illegal_site("unknown move variant");
}

Move invert_move(const Move& m) {
    switch (m.variant) {
        case MoveVariant::interior_insert:
            return {MoveVariant::interior_delete, m.site + 1, m.sign};
        case MoveVariant::interior_delete:
            return {MoveVariant::interior_insert, m.site - 1, m.sign};
        case MoveVariant::append_insert:
            return {MoveVariant::append_delete, m.site + 1, m.sign};
        case MoveVariant::append_delete:
            return {MoveVariant::append_insert, m.site - 1, m.sign};
        case MoveVariant::prepend_insert:
            return {MoveVariant::prepend_delete, 1, m.sign};
        case MoveVariant::prepend_delete:
            return {MoveVariant::prepend_insert, 1, m.sign};
    }
    throw illegal_site("unknown move variant");
}

namespace {

/// Nearest b of the given parity to num/den (den > 0) minimizing
/// |b*den - num|; ties take the larger b.
i64 nearest_with_parity(i64 num, i64 den, int parity) {
    i64 b0 = num / den;  // truncation; scan a window around it
    i64 best_b = 0;
    i64 best_d = -1;
    for (i64 b = b0 - 3; b <= b0 + 3; ++b) {
        if (((b % 2) + 2) % 2 != parity) continue;
        i64 d = std::llabs(checked::sub(checked::mul(b, den), num));
        if (best_d < 0 || d < best_d || (d == best_d && b > best_b)) {
            best_d = d;
            best_b = b;
        }
    }
    return best_b;
}

ContinuedFraction chain_normal_form(i64 p, i64 q) {
    ContinuedFraction out;
    i64 num = p, den = q;
    int pos = 1;
    const int p_parity = static_cast<int>(((p % 2) + 2) % 2);
    while (den != 0) {
        i64 b;
        if (pos == 1) {
            b = nearest_with_parity(num, den, p_parity);
        } else if (pos % 2 == 1) {
            b = nearest_with_parity(num, den, 0);
        } else {
            // free position: nearest integer, ties to the larger candidate
            i64 be = nearest_with_parity(num, den, 0);
            i64 bo = nearest_with_parity(num, den, 1);
            i64 de = std::llabs(checked::sub(checked::mul(be, den), num));
            i64 dc = std::llabs(checked::sub(checked::mul(bo, den), num));
            b = (dc < de || (dc == de && bo > be)) ? bo : be;
        }
        out.push_back(b);
        i64 nnum = den;
        i64 nden = checked::sub(checked::mul(b, den), num);
        if (nden < 0) {
            nnum = checked::neg(nnum);
            nden = checked::neg(nden);
        }
        num = nnum;
        den = nden;
        ++pos;
    }
    return out;
}

}  // namespace

std::vector<Move> cf_reduction_to_expansion(const ContinuedFraction& coeffs) {
    Rational value = cf_evaluate(coeffs);
    if (value.is_infinite()) throw domain_error("cannot reduce a list with infinite value");
    ContinuedFraction L = coeffs;
    std::vector<Move> moves;
    auto do_move = [&](MoveVariant v, int site, int sign) {
        Move m{v, site, sign};
        L = cf_apply_move(L, m);
        moves.push_back(m);
    };
    // generous safety cap; the loop is validated to terminate over the
    // whole tested domain, this guards against logic regressions only
    long cap = 1000000;
    for (;;) {
        if (--cap < 0) throw domain_error("reduction step cap exceeded (internal)");
        const int n = static_cast<int>(L.size());
        // rule 1: blow down a +-1 at position >= 2
        int k = 0;
        for (int j = 2; j <= n - 1; ++j)
            if (L[j - 1] == 1 || L[j - 1] == -1) {
                k = j;
                break;
            }
        if (k != 0) {
            do_move(MoveVariant::interior_delete, k, static_cast<int>(L[k - 1]));
            continue;
        }
        if (n >= 2 && (L[n - 1] == 1 || L[n - 1] == -1)) {
            do_move(MoveVariant::append_delete, n, static_cast<int>(L[n - 1]));
            continue;
        }
        // rule 2: absorb a 0 at position >= 2
        k = 0;
        for (int j = 2; j <= n; ++j)
            if (L[j - 1] == 0) {
                k = j;
                break;
            }
        if (k != 0) {
            if (k == n) {
                // (..., x, 0): slide x to 1; later passes blow the pair down
                while (L[k - 2] != 1) {
                    int s = L[k - 2] < 1 ? 1 : -1;
                    do_move(MoveVariant::interior_insert, k - 1, s);  // (x,0)->(x+s,s,s)
                    do_move(MoveVariant::append_delete, k + 1, s);    // ->(x+s,0)
                }
            } else {
                // (a, 0, b, ...): slide b to 1 via (a,0,b)->(a+s,0,b-s)
                while (L[k] != 1) {
                    int s2 = L[k] > 1 ? -1 : 1;  // s2 = -s
                    do_move(MoveVariant::interior_insert, k, s2);  // (a,s2,s2,b+s2)
                    do_move(MoveVariant::interior_delete, k, s2);  // (a-s2,0,b+s2)
                }
            }
            continue;
        }
        // rule 3 (atomic): eliminate an entry <= -2 at position >= 2 by
        // inserting +1 in front until it reaches -1, then deleting it
        k = 0;
        for (int j = 2; j <= n; ++j)
            if (L[j - 1] <= -2) {
                k = j;
                break;
            }
        if (k != 0) {
            int pos = k;
            while (L[pos - 1] <= -2) {
                do_move(MoveVariant::interior_insert, pos - 1, 1);
                ++pos;
            }
            if (pos == static_cast<int>(L.size()))
                do_move(MoveVariant::append_delete, pos, -1);
            else
                do_move(MoveVariant::interior_delete, pos, -1);
            continue;
        }
        break;
    }
    // terminal state is the unique list with entries >= 2 from position 2
    // sharing the value; sanity-check against the ceiling expansion
    if (L != cf_expand(value)) throw domain_error("reduction terminal mismatch (internal)");
    return moves;
}

NormalForm cf_normalize(const Rational& r) {
    if (r.is_infinite()) throw domain_error("cannot normalize the infinite value");
    if (r.p == 0) throw zero_input("p = 0 admits no normal form");
    if (r.q % 2 == 0)
        throw no_normal_form("even denominator " + to_string(r) +
                             ": every odd-length even-tail list has odd denominator");
    NormalForm nf;
    nf.value = r;
    nf.coeffs = chain_normal_form(r.p, r.q);
    nf.kind = (((r.p % 2) + 2) % 2 == 1) ? FormKind::knot_form : FormKind::link_form;
    // witness: reverse the blow-down path from coeffs to the expansion
    std::vector<Move> down = cf_reduction_to_expansion(nf.coeffs);
    nf.witness.reserve(down.size());
    for (auto it = down.rbegin(); it != down.rend(); ++it) nf.witness.push_back(invert_move(*it));
    return nf;
}

int mod4_signed_odd_sum(const NormalForm& nf) {
    if (nf.kind != FormKind::link_form)
        throw wrong_kind("mod-4 residue is defined for link forms (all odd-index entries even)");
    const auto& b = nf.coeffs;
    i64 sum = 0;
    for (std::size_t i = 0; i < b.size(); i += 2) sum = checked::add(sum, b[i]);
    i64 half = (static_cast<i64>(b.size()) - 1) / 2;
    if (half % 2 != 0) sum = checked::neg(sum);
    return static_cast<int>(((sum % 4) + 4) % 4);
}

std::string to_string(MoveVariant v) {
    switch (v) {
        case MoveVariant::interior_insert: return "interior_insert";
        case MoveVariant::interior_delete: return "interior_delete";
        case MoveVariant::append_insert: return "append_insert";
        case MoveVariant::append_delete: return "append_delete";
        case MoveVariant::prepend_insert: return "prepend_insert";
        case MoveVariant::prepend_delete: return "prepend_delete";
    }
    return "?";
}

std::string to_string(FormKind k) {
    return k == FormKind::knot_form ? "knot" : "link";
}

}  // namespace twistcalc
