#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cyclotomic.hpp"
#include "errors.hpp"

namespace macjack {

// The parameter alphabet is global and ordered: kappa > q > t > u under the
// canonical (lexicographic) monomial order.  A computation context simply
// leaves unused symbols at exponent zero.
enum Param : int { P_KAPPA = 0, P_Q = 1, P_T = 2, P_U = 3 };
constexpr int kNumParams = 4;

inline const char* param_name(int i) {
    static const char* names[kNumParams] = {"k", "q", "t", "u"};
    return names[i];
}

// Exponent vector packed into 16-bit lanes; integer comparison of the packed
// word is the lexicographic order kappa > q > t > u.
using PExp = std::uint64_t;

inline PExp pexp(int k = 0, int q = 0, int t = 0, int u = 0) {
    return (static_cast<PExp>(k) << 48) | (static_cast<PExp>(q) << 32) |
           (static_cast<PExp>(t) << 16) | static_cast<PExp>(u);
}

inline int pexp_get(PExp e, int sym) { return static_cast<int>((e >> (48 - 16 * sym)) & 0xffff); }

inline PExp pexp_set(PExp e, int sym, int v) {
    int shift = 48 - 16 * sym;
    e &= ~(static_cast<PExp>(0xffff) << shift);
    return e | (static_cast<PExp>(v) << shift);
}

inline PExp pexp_mul(PExp a, PExp b) {
    for (int s = 0; s < kNumParams; ++s) {
        if (pexp_get(a, s) + pexp_get(b, s) > 0xffff)
            throw MacjackError("parameter exponent overflow");
    }
    return a + b;
}

inline bool pexp_divides(PExp a, PExp b) {  // a | b
    for (int s = 0; s < kNumParams; ++s)
        if (pexp_get(a, s) > pexp_get(b, s)) return false;
    return true;
}

inline PExp pexp_div(PExp b, PExp a) { return b - a; }

inline PExp pexp_gcd(PExp a, PExp b) {
    PExp out = 0;
    for (int s = 0; s < kNumParams; ++s)
        out = pexp_set(out, s, std::min(pexp_get(a, s), pexp_get(b, s)));
    return out;
}

// Sparse polynomial in the parameter symbols over the cyclotomic field.
// Terms are kept sorted descending by packed exponent; no zero coefficients.
class PPoly {
public:
    std::vector<std::pair<PExp, CycNum>> terms;  // descending by PExp

    PPoly() = default;

    static PPoly zero() { return PPoly(); }
    static PPoly constant(const CycNum& c) {
        PPoly p;
        if (!c.is_zero()) p.terms.emplace_back(0, c);
        return p;
    }
    static PPoly one() { return constant(CycNum(1)); }
    static PPoly monomial(PExp e, const CycNum& c) {
        PPoly p;
        if (!c.is_zero()) p.terms.emplace_back(e, c);
        return p;
    }
    static PPoly symbol(Param s, int e = 1) { return monomial(pexp_set(0, s, e), CycNum(1)); }

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const { return terms.empty() || (terms.size() == 1 && terms[0].first == 0); }
    bool is_monomial() const { return terms.size() == 1; }
    bool is_one() const { return terms.size() == 1 && terms[0].first == 0 && terms[0].second.is_one(); }

    const std::pair<PExp, CycNum>& leading() const {
        if (terms.empty()) throw ZeroPolynomial("leading term of zero parameter polynomial");
        return terms.front();
    }

    int degree_in(int sym) const {
        int d = 0;
        for (auto& [e, c] : terms) d = std::max(d, pexp_get(e, sym));
        return d;
    }
    int min_degree_in(int sym) const {
        if (terms.empty()) return 0;
        int d = 1 << 20;
        for (auto& [e, c] : terms) d = std::min(d, pexp_get(e, sym));
        return d;
    }
    bool uses(int sym) const { return degree_in(sym) > 0; }

    friend PPoly operator+(const PPoly& a, const PPoly& b) {
        PPoly out;
        out.terms.reserve(a.terms.size() + b.terms.size());
        size_t i = 0, j = 0;
        while (i < a.terms.size() || j < b.terms.size()) {
            if (j == b.terms.size() || (i < a.terms.size() && a.terms[i].first > b.terms[j].first)) {
                out.terms.push_back(a.terms[i++]);
            } else if (i == a.terms.size() || b.terms[j].first > a.terms[i].first) {
                out.terms.push_back(b.terms[j++]);
            } else {
                CycNum c = a.terms[i].second + b.terms[j].second;
                if (!c.is_zero()) out.terms.emplace_back(a.terms[i].first, std::move(c));
                ++i;
                ++j;
            }
        }
        return out;
    }
    friend PPoly operator-(const PPoly& a, const PPoly& b) { return a + (-b); }
    PPoly operator-() const {
        PPoly out = *this;
        for (auto& [e, c] : out.terms) c = -c;
        return out;
    }
    friend PPoly operator*(const PPoly& a, const PPoly& b) {
        if (a.is_zero() || b.is_zero()) return PPoly();
        if (b.is_monomial()) return a.mul_term(b.terms[0].first, b.terms[0].second);
        if (a.is_monomial()) return b.mul_term(a.terms[0].first, a.terms[0].second);
        std::map<PExp, CycNum, std::greater<PExp>> acc;
        for (auto& [ea, ca] : a.terms)
            for (auto& [eb, cb] : b.terms) {
                PExp e = pexp_mul(ea, eb);
                auto it = acc.find(e);
                if (it == acc.end())
                    acc.emplace(e, ca * cb);
                else
                    it->second = it->second + ca * cb;
            }
        PPoly out;
        out.terms.reserve(acc.size());
        for (auto& [e, c] : acc)
            if (!c.is_zero()) out.terms.emplace_back(e, c);
        return out;
    }

    PPoly mul_term(PExp e, const CycNum& c) const {
        PPoly out;
        if (c.is_zero()) return out;
        out.terms.reserve(terms.size());
        for (auto& [te, tc] : terms) {
            CycNum pc = tc * c;
            if (!pc.is_zero()) out.terms.emplace_back(pexp_mul(te, e), pc);
        }
        return out;
    }
    PPoly scaled(const CycNum& c) const { return mul_term(0, c); }

    friend bool operator==(const PPoly& a, const PPoly& b) {
        if (a.terms.size() != b.terms.size()) return false;
        for (size_t i = 0; i < a.terms.size(); ++i)
            if (a.terms[i].first != b.terms[i].first || a.terms[i].second != b.terms[i].second)
                return false;
        return true;
    }
    friend bool operator!=(const PPoly& a, const PPoly& b) { return !(a == b); }

    // Exponent gcd of all terms (the largest monomial dividing the polynomial).
    PExp monomial_content() const {
        if (terms.empty()) return 0;
        PExp g = terms[0].first;
        for (auto& [e, c] : terms) g = pexp_gcd(g, e);
        return g;
    }
};

// Exact division; throws NotDivisible if the remainder is nonzero.
inline PPoly ppoly_divexact(const PPoly& a, const PPoly& b) {
    if (b.is_zero()) throw DivisionByZero("parameter polynomial division by zero");
    PPoly rem = a, quot;
    CycNum lc_inv = b.leading().second.inverse();
    while (!rem.is_zero()) {
        auto& lead = rem.leading();
        if (!pexp_divides(b.leading().first, lead.first))
            throw NotDivisible("parameter polynomial division left a remainder");
        PExp e = pexp_div(lead.first, b.leading().first);
        CycNum c = lead.second * lc_inv;
        quot = quot + PPoly::monomial(e, c);
        rem = rem - b.mul_term(e, c);
    }
    return quot;
}

namespace detail {

// Substitute a rational value for one symbol (used by the trivial-gcd
// certificate below).
inline PPoly eval_sym(const PPoly& p, int sym, const Rat& value) {
    PPoly out;
    std::map<PExp, CycNum, std::greater<PExp>> acc;
    for (auto& [e, c] : p.terms) {
        int d = pexp_get(e, sym);
        Rat scale(1);
        for (int k = 0; k < d; ++k) scale *= value;
        CycNum v = c * CycNum(scale);
        if (v.is_zero()) continue;
        PExp e0 = pexp_set(e, sym, 0);
        auto it = acc.find(e0);
        if (it == acc.end())
            acc.emplace(e0, v);
        else
            it->second = it->second + v;
    }
    for (auto& [e, c] : acc)
        if (!c.is_zero()) out.terms.emplace_back(e, c);
    return out;
}

// View of p as a univariate polynomial in `sym`, coefficients in the rest.
inline std::vector<PPoly> coeffs_in(const PPoly& p, int sym) {
    std::vector<PPoly> out(static_cast<size_t>(p.degree_in(sym)) + 1);
    for (auto& [e, c] : p.terms) {
        int d = pexp_get(e, sym);
        out[d].terms.emplace_back(pexp_set(e, sym, 0), c);
    }
    for (auto& q : out)
        std::sort(q.terms.begin(), q.terms.end(),
                  [](auto& a, auto& b) { return a.first > b.first; });
    return out;
}

inline PPoly from_coeffs(const std::vector<PPoly>& cs, int sym) {
    PPoly out;
    for (size_t d = 0; d < cs.size(); ++d)
        out = out + cs[d] * PPoly::symbol(static_cast<Param>(sym), static_cast<int>(d));
    return out;
}

inline int top_symbol(const PPoly& a, const PPoly& b) {
    for (int s = 0; s < kNumParams; ++s)
        if (a.uses(s) || b.uses(s)) return s;
    return -1;
}

inline PPoly ppoly_gcd_impl(PPoly a, PPoly b);

inline PPoly content_of(const std::vector<PPoly>& cs) {
    PPoly g;
    for (auto& c : cs) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c : ppoly_gcd_impl(g, c);
        if (g.is_constant() && !g.is_zero()) return PPoly::one();
    }
    return g.is_zero() ? PPoly::zero() : g;
}

inline std::vector<int> symbols_used(const PPoly& a, const PPoly& b) {
    std::vector<int> out;
    for (int s = 0; s < kNumParams; ++s)
        if (a.uses(s) || b.uses(s)) out.push_back(s);
    return out;
}

// Fast monic Euclid for polynomials in a single symbol (field coefficients).
inline PPoly univariate_gcd(const PPoly& a, const PPoly& b, int sym) {
    auto dense = [&](const PPoly& p) {
        std::vector<CycNum> v(static_cast<size_t>(p.degree_in(sym)) + 1, CycNum(0));
        for (auto& [e, c] : p.terms) v[static_cast<size_t>(pexp_get(e, sym))] = c;
        return v;
    };
    auto trim = [](std::vector<CycNum>& v) {
        while (!v.empty() && v.back().is_zero()) v.pop_back();
    };
    std::vector<CycNum> r0 = dense(a), r1 = dense(b);
    trim(r0);
    trim(r1);
    while (!r1.empty()) {
        // r0 mod r1 with monic reduction
        CycNum inv = r1.back().inverse();
        while (r0.size() >= r1.size()) {
            CycNum f = r0.back() * inv;
            size_t off = r0.size() - r1.size();
            for (size_t j = 0; j < r1.size(); ++j) {
                r0[off + j] = r0[off + j] - f * r1[j];
            }
            r0.pop_back();
            trim(r0);
            if (r0.empty()) break;
        }
        std::swap(r0, r1);
    }
    PPoly out;
    if (r0.empty()) return out;
    CycNum inv = r0.back().inverse();
    for (size_t d = r0.size(); d-- > 0;) {
        CycNum c = r0[d] * inv;
        if (!c.is_zero()) out.terms.emplace_back(pexp_set(0, sym, static_cast<int>(d)), c);
    }
    return out;
}

// Primitive PRS gcd with fast paths: shared monomial factors are split off,
// single-symbol inputs use monic Euclid, and two-symbol inputs first try an
// evaluation certificate that proves the gcd trivial.
inline PPoly ppoly_gcd_impl(PPoly a, PPoly b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a == b) return a;

    // split off the monomial content
    PExp ma = a.monomial_content(), mb = b.monomial_content();
    PExp shared = pexp_gcd(ma, mb);
    if (ma != 0) a = a.mul_term(0, CycNum(1)), a = [&] { PPoly t; t.terms.reserve(a.terms.size());
        for (auto& [e, c] : a.terms) t.terms.emplace_back(pexp_div(e, ma), c); return t; }();
    if (mb != 0) b = [&] { PPoly t; t.terms.reserve(b.terms.size());
        for (auto& [e, c] : b.terms) t.terms.emplace_back(pexp_div(e, mb), c); return t; }();
    PPoly mono = PPoly::monomial(shared, CycNum(1));

    if (a.is_constant() || b.is_constant()) return mono;
    if (a.is_monomial() || b.is_monomial()) return mono;  // monomial parts already removed

    std::vector<int> syms = symbols_used(a, b);
    if (syms.empty()) return mono;
    if (syms.size() == 1) return mono * univariate_gcd(a, b, syms[0]);

    int sym = syms[0];
    if (!a.uses(sym) || !b.uses(sym)) {
        auto& with = a.uses(sym) ? a : b;
        auto& without = a.uses(sym) ? b : a;
        PPoly cont = content_of(coeffs_in(with, sym));
        return mono * ppoly_gcd_impl(cont, without);
    }

    auto ca = coeffs_in(a, sym);
    auto cb = coeffs_in(b, sym);
    PPoly cont_a = content_of(ca);
    PPoly cont_b = content_of(cb);
    PPoly cont = ppoly_gcd_impl(cont_a, cont_b);
    PPoly pa = cont_a.is_one() ? a : ppoly_divexact(a, cont_a);
    PPoly pb = cont_b.is_one() ? b : ppoly_divexact(b, cont_b);

    // Evaluation certificate: substitute small rationals for all symbols but
    // `sym`; if the image gcd is constant and no leading coefficient dies, the
    // primitive parts are coprime.
    {
        for (Rat point : {Rat(2), Rat(3), Rat(5, 2)}) {
            PPoly ia = pa, ib = pb;
            for (size_t k = 1; k < syms.size(); ++k) {
                ia = eval_sym(ia, syms[k], point);
                ib = eval_sym(ib, syms[k], point);
            }
            if (ia.degree_in(sym) != pa.degree_in(sym)) continue;  // unlucky point
            if (ib.degree_in(sym) != pb.degree_in(sym)) continue;
            PPoly g1 = univariate_gcd(ia, ib, sym);
            if (g1.is_constant()) return mono * cont;
            break;  // nontrivial image: fall through to the PRS
        }
    }

    // Euclid with pseudo-remainders on the primitive parts.
    while (true) {
        int da = pa.degree_in(sym), db = pb.degree_in(sym);
        if (da < db) {
            std::swap(pa, pb);
            std::swap(da, db);
        }
        if (pb.is_zero()) break;
        if (db == 0) return mono * cont;  // primitive parts are coprime
        // pseudo-remainder of pa by pb in sym
        auto va = coeffs_in(pa, sym);
        auto vb = coeffs_in(pb, sym);
        PPoly lcb = vb.back();
        for (int step = da - db; step >= 0; --step) {
            // va <- lcb * va - lead(va) * x^step * vb, if deg matches
            if (static_cast<int>(va.size()) - 1 != step + db) continue;
            PPoly lc = va.back();
            for (auto& c : va) c = c * lcb;
            for (int j = 0; j <= db; ++j)
                va[static_cast<size_t>(step + j)] = va[static_cast<size_t>(step + j)] - lc * vb[static_cast<size_t>(j)];
            while (!va.empty() && va.back().is_zero()) va.pop_back();
            if (va.empty()) break;
        }
        PPoly rem;
        if (!va.empty()) {
            rem = from_coeffs(va, sym);
            PExp rmono = rem.monomial_content();
            if (rmono != 0) {
                PPoly t;
                t.terms.reserve(rem.terms.size());
                for (auto& [e, c] : rem.terms) t.terms.emplace_back(pexp_div(e, rmono), c);
                rem = std::move(t);
            }
            PPoly rc = content_of(coeffs_in(rem, sym));
            if (!rc.is_one()) rem = ppoly_divexact(rem, rc);
        }
        pa = std::move(pb);
        pb = std::move(rem);
    }
    return mono * cont * pa;
}

}  // namespace detail

// Gcd, normalized so that the leading coefficient (canonical monomial order)
// is 1.  gcd(0, 0) = 0.
inline PPoly ppoly_gcd(const PPoly& a, const PPoly& b) {
    PPoly g = detail::ppoly_gcd_impl(a, b);
    if (g.is_zero()) return g;
    return g.scaled(g.leading().second.inverse());
}

}  // namespace macjack
