#include "twistcalc/braid.hpp"

#include <sstream>

namespace twistcalc {

void TwistWord::append(TwistGen g, i64 e) {
    if (e == 0) return;
    if (!letters.empty() && letters.back().gen == g) {
        letters.back().exp = checked::add(letters.back().exp, e);
        if (letters.back().exp == 0) letters.pop_back();
        return;
    }
    letters.push_back({g, e});
}

void BraidWord::append(BraidGen g, i64 e) {
    if (e == 0) return;
    if (!letters.empty() && letters.back().gen == g) {
        letters.back().exp = checked::add(letters.back().exp, e);
        if (letters.back().exp == 0) letters.pop_back();
        return;
    }
    letters.push_back({g, e});
}

BurauMatrix BurauMatrix::identity() {
    return {LaurentPoly1::one(), LaurentPoly1::zero(), LaurentPoly1::zero(),
            LaurentPoly1::one()};
}

BurauMatrix BurauMatrix::operator*(const BurauMatrix& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

LaurentPoly1 BurauMatrix::det() const { return a * d - b * c; }

bool BurauMatrix::is_identity() const { return *this == identity(); }

TwistWord twist_word_from(const NormalForm& nf) {
    if (nf.kind != FormKind::link_form)
        throw wrong_kind("twist words require a link form (all odd-index coefficients even)");
    TwistWord w;
    const auto& b = nf.coeffs;
    for (int i = static_cast<int>(b.size()); i >= 1; --i) {
        if (i % 2 == 1)
            w.append(TwistGen::phi, b[i - 1] / 2);
        else
            w.append(TwistGen::psi, b[i - 1]);
    }
    return w;
}

TwistWord twist_word(const Rational& r) {
    if (r.p == 0) throw zero_input("twist word undefined for p = 0");
    if (((r.p % 2) + 2) % 2 != 0) throw odd_p("twist word requires even p");
    return twist_word_from(cf_normalize(r));
}

BraidWord to_braid(const TwistWord& w) {
    BraidWord out;
    for (const auto& syl : w.letters) {
        if (syl.gen == TwistGen::psi)
            out.append(BraidGen::sigma1, syl.exp);
        else
            out.append(BraidGen::sigma2, checked::mul(syl.exp, 2));
    }
    return out;
}

namespace {

BurauMatrix gen_matrix(BraidGen g, bool inverse) {
    using P = LaurentPoly1;
    if (g == BraidGen::sigma1) {
        if (!inverse)  // [[-t, 1], [0, 1]]
            return {P::monomial(-1, 1), P::one(), P::zero(), P::one()};
        // [[-1/t, 1/t], [0, 1]]
        return {P::monomial(-1, -1), P::monomial(1, -1), P::zero(), P::one()};
    }
    if (!inverse)  // [[1, 0], [t, -t]]
        return {P::one(), P::zero(), P::monomial(1, 1), P::monomial(-1, 1)};
    // [[1, 0], [1, -1/t]]
    return {P::one(), P::zero(), P::one(), P::monomial(-1, -1)};
}

BurauMatrix mat_pow(BurauMatrix base, i64 e) {
    BurauMatrix acc = BurauMatrix::identity();
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

}  // namespace

BurauMatrix burau(const BraidWord& w) {
    BurauMatrix m = BurauMatrix::identity();
    for (const auto& syl : w.letters) {
        BurauMatrix g = gen_matrix(syl.gen, syl.exp < 0);
        m = m * mat_pow(g, syl.exp < 0 ? -syl.exp : syl.exp);
    }
    return m;
}

bool is_trivial(const BraidWord& w) { return burau(w).is_identity(); }

i64 f2_exponent(const TwistWord& w) {
    i64 s = 0;
    for (const auto& syl : w.letters)
        if (syl.gen == TwistGen::psi) s = checked::add(s, syl.exp);
    return s;
}

NontrivialityReport word_nontriviality_report(const NormalForm& nf) {
    NontrivialityReport rep;
    rep.word = twist_word_from(nf);
    rep.braid = to_braid(rep.word);
    rep.f2 = f2_exponent(rep.word);
    rep.trivial = is_trivial(rep.braid);
    if (rep.f2 != 0)
        rep.evidence = "nonzero half-twist count between the first two strings";
    else if (!rep.trivial)
        rep.evidence = "Burau image differs from the identity";
    else
        rep.evidence = "word reduces to the identity";
    return rep;
}

NontrivialityReport word_nontriviality_report(const Rational& r) {
    if (r.p == 0) throw zero_input("report undefined for p = 0; probe a normal form directly");
    if (((r.p % 2) + 2) % 2 != 0) throw odd_p("report requires even p");
    return word_nontriviality_report(cf_normalize(r));
}

BraidWord parse_braid_word(const std::string& text) {
    BraidWord w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        std::string gen = tok;
        i64 e = 1;
        std::size_t caret = tok.find('^');
        if (caret != std::string::npos) {
            gen = tok.substr(0, caret);
            std::string es = tok.substr(caret + 1);
            try {
                std::size_t used = 0;
                e = std::stoll(es, &used);
                if (used != es.size()) throw parse_error("bad exponent in " + tok);
            } catch (const std::invalid_argument&) {
                throw parse_error("bad exponent in " + tok);
            } catch (const std::out_of_range&) {
                throw parse_error("exponent out of range in " + tok);
            }
        }
        if (gen == "s1")
            w.append(BraidGen::sigma1, e);
        else if (gen == "s2")
            w.append(BraidGen::sigma2, e);
        else
            throw parse_error("unknown braid generator: " + gen);
    }
    return w;
}

namespace {

template <typename Word, typename NameFn>
std::string word_to_string(const Word& w, NameFn name) {
    if (w.letters.empty()) return "1";
    std::string out;
    for (const auto& syl : w.letters) {
        if (!out.empty()) out += " ";
        out += name(syl.gen);
        if (syl.exp != 1) out += "^" + std::to_string(syl.exp);
    }
    return out;
}

}  // namespace

std::string to_string(const TwistWord& w) {
    return word_to_string(w, [](TwistGen g) { return g == TwistGen::psi ? "psi" : "phi"; });
}

std::string to_string(const BraidWord& w) {
    return word_to_string(w, [](BraidGen g) { return g == BraidGen::sigma1 ? "s1" : "s2"; });
}

}  // namespace twistcalc
