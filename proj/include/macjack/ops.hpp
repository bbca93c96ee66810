#pragma once

#include "rep.hpp"
#include "xpoly.hpp"

namespace macjack {

// Parameter values driving the operator families.  Generic contexts keep the
// symbols themselves; specialized contexts substitute their images, so the
// same operator code serves both regimes.
struct OpContext {
    int N = 0;
    ParamRat kappa = ParamRat::kappa();
    ParamRat q = ParamRat::q();
    ParamRat t = ParamRat::t();

    static OpContext generic(int N) {
        OpContext c;
        c.N = N;
        return c;
    }
    static OpContext specialized(int N, const SpecMap& m) {
        OpContext c;
        c.N = N;
        c.kappa = m.image_of(P_KAPPA);
        c.q = m.image_of(P_Q);
        c.t = m.image_of(P_T);
        return c;
    }
};

// --- symmetric group -------------------------------------------------------

inline XPoly act_si_x(const XPoly& p, int i) { return p.swap_x(i, i + 1); }

inline XPoly act_omega_x(const XPoly& p) {
    // omega = s_1 s_2 ... s_{N-1}, applied left to right
    XPoly out = p;
    for (int i = 1; i < p.ring().nx; ++i) out = out.swap_x(i, i + 1);
    return out;
}

// --- Hecke action on polynomials -------------------------------------------

// p T_i = (1-t) x_{i+1} (p - p s_i)/(x_i - x_{i+1}) + t p(x s_i)
inline XPoly apply_T(const XPoly& p, int i, const OpContext& ctx, bool inverse = false) {
    const XRing& R = p.ring();
    XPoly ps = p.swap_x(i, i + 1);
    XPoly dd = p.divided_difference(i, i + 1);
    XPoly out = XPoly::x(R, i + 1) * dd * (ParamRat(1) - ctx.t) + ps * ctx.t;
    if (!inverse) return out;
    // T^{-1} = (T - (t-1))/t
    return (out - p * (ctx.t - ParamRat(1))).scaled(ctx.t.inverse());
}

inline XPoly apply_T_inverse(const XPoly& p, int i, const OpContext& ctx) {
    XPoly tp = apply_T(p, i, ctx);
    return (tp - p * (ctx.t - ParamRat(1))).scaled(ctx.t.inverse());
}

// --- Dunkl and Cherednik operators (group, parameter kappa) -----------------

// p D_i = dp/dx_i + kappa sum_{j != i} (p - p s_{ij})/(x_i - x_j)
inline XPoly dunkl_group(const XPoly& p, int i, const OpContext& ctx) {
    XPoly out = p.derivative_x(i);
    XPoly sum(p.ring());
    for (int j = 1; j <= ctx.N; ++j) {
        if (j == i) continue;
        sum = sum + p.divided_difference(i, j);
    }
    return out + sum * ctx.kappa;
}

// p U_i = (p D_i) x_i + p + kappa sum_{j > i} p s_{ij}.
// The operator string D_i x_i reads left to right: Dunkl first, then
// multiplication; this is the reading consistent with g U_i = g + kappa g w_i
// for singular g and with sigma_{(0,...,0)}(i) = 1 + kappa (N - i).
inline XPoly cherednik_group(const XPoly& p, int i, const OpContext& ctx) {
    XPoly out = dunkl_group(p, i, ctx) * XPoly::x(p.ring(), i) + p;
    XPoly sum(p.ring());
    for (int j = i + 1; j <= ctx.N; ++j) sum = sum + p.swap_x(i, j);
    return out + sum * ctx.kappa;
}

// --- q,t operators -----------------------------------------------------------

// f omega^q = f(q x_N, x_1, ..., x_{N-1}): x_1 -> q x_N, x_k -> x_{k-1}.
inline XPoly omega_q(const XPoly& p, const OpContext& ctx) {
    const XRing& R = p.ring();
    std::vector<XPoly> point;
    point.push_back(XPoly::x(R, ctx.N) * ctx.q);
    for (int k = 2; k <= ctx.N; ++k) point.push_back(XPoly::x(R, k - 1));
    return p.substitute_x(point);
}

// xi_i = t^{i-1} T_{i-1}^{-1} ... T_1^{-1} omega^q T_{N-1} ... T_i
inline XPoly xi(const XPoly& p, int i, const OpContext& ctx) {
    XPoly out = p;
    for (int j = i - 1; j >= 1; --j) out = apply_T_inverse(out, j, ctx);
    out = omega_q(out, ctx);
    for (int j = ctx.N - 1; j >= i; --j) out = apply_T(out, j, ctx);
    return out.scaled(ctx.t.pow(i - 1));
}

// D_N^{q,t} = (1 - xi_N) x_N^{-1}; D_i^{q,t} = (1/t) T_i D_{i+1}^{q,t} T_i.
// The base-case division by x_N is exact whenever the defining theory holds;
// a NotDivisible escape is a theorem-violation diagnostic.
inline XPoly dunkl_qt(const XPoly& p, int i, const OpContext& ctx) {
    if (i == ctx.N) {
        XPoly num = p - xi(p, ctx.N, ctx);
        if (num.is_zero()) return num;
        return num.exact_divide(XPoly::x(p.ring(), ctx.N));
    }
    XPoly out = apply_T(p, i, ctx);
    out = dunkl_qt(out, i + 1, ctx);
    out = apply_T(out, i, ctx);
    return out.scaled(ctx.t.inverse());
}

// Startup self-test for the right-action composition convention.  The
// alternative reading of U_i ("x_i first") fails both identities below.
inline void convention_selftest() {
    OpContext ctx = OpContext::generic(3);
    XRing R{3, 0, 0};
    XPoly one(R, ParamRat(1));
    for (int i = 1; i <= 3; ++i) {
        XPoly ui = cherednik_group(one, i, ctx);
        XPoly expected = one * (ParamRat(1) + ctx.kappa * ParamRat(Rat(3 - i)));
        if (ui != expected) throw MacjackError("convention self-test failed: 1 U_i != (1 + kappa (N-i)) 1");
    }
    // p (x_i d_i) = p + p (d_i x_i) as right operators
    XPoly p = XPoly::x(R, 1, 2) * XPoly::x(R, 2) + XPoly::x(R, 3);
    XPoly lhs = (p * XPoly::x(R, 1)).derivative_x(1);
    XPoly rhs = p + p.derivative_x(1) * XPoly::x(R, 1);
    if (lhs != rhs) throw MacjackError("convention self-test failed: x_i d_i != 1 + d_i x_i");
}

}  // namespace macjack
