#pragma once

#include "ops.hpp"
#include "rep.hpp"

namespace macjack {

// Vector-valued polynomial sum_S f_S (x) Sigma S, stored componentwise on the
// RSYT basis of a fixed shape.
struct VPoly {
    const ShapeCtx* sctx = nullptr;
    XRing ring;
    std::map<int, XPoly> comps;  // tableau index -> component; zero omitted

    VPoly() = default;
    VPoly(const ShapeCtx& c, XRing r) : sctx(&c), ring(r) {}

    static VPoly wedge(const ShapeCtx& c, const XPoly& f, int tab_index) {
        VPoly v(c, f.ring());
        if (!f.is_zero()) v.comps[tab_index] = f;
        return v;
    }

    bool is_zero() const { return comps.empty(); }

    XPoly component(int idx) const {
        auto it = comps.find(idx);
        return it == comps.end() ? XPoly(ring) : it->second;
    }

    void add(int idx, const XPoly& f) {
        if (f.is_zero()) return;
        auto it = comps.find(idx);
        if (it == comps.end()) {
            comps.emplace(idx, f);
        } else {
            it->second = it->second + f;
            if (it->second.is_zero()) comps.erase(it);
        }
    }

    friend VPoly operator+(const VPoly& a, const VPoly& b) {
        VPoly out = a;
        if (!out.sctx) { out.sctx = b.sctx; out.ring = b.ring; }
        for (auto& [i, f] : b.comps) out.add(i, f);
        return out;
    }
    friend VPoly operator-(const VPoly& a, const VPoly& b) {
        VPoly out = a;
        if (!out.sctx) { out.sctx = b.sctx; out.ring = b.ring; }
        for (auto& [i, f] : b.comps) out.add(i, -f);
        return out;
    }
    VPoly scaled(const ParamRat& c) const {
        VPoly out(*sctx, ring);
        if (c.is_zero()) return out;
        for (auto& [i, f] : comps) {
            XPoly g = f.scaled(c);
            if (!g.is_zero()) out.comps[i] = g;
        }
        return out;
    }
    friend bool operator==(const VPoly& a, const VPoly& b) { return a.comps == b.comps; }
    friend bool operator!=(const VPoly& a, const VPoly& b) { return !(a == b); }
};

namespace detail {

// Apply a pure tableau-side operator (module map) componentwise.
template <typename F>
VPoly tableau_side(const VPoly& v, F&& act) {
    VPoly out(*v.sctx, v.ring);
    for (auto& [idx, f] : v.comps) {
        ModuleVector mv = act(ModuleVector::basis(*v.sctx, idx));
        for (auto& [jdx, c] : mv.coords) out.add(jdx, f.scaled(c));
    }
    return out;
}

}  // namespace detail

// t_sigma for sigma = s_{kl}: s_{kl} (x) tau(s_{kl})
inline VPoly vt_transposition(const VPoly& v, int k, int l) {
    VPoly out(*v.sctx, v.ring);
    for (auto& [idx, f] : v.comps) {
        XPoly fs = f.swap_x(k, l);
        ModuleVector mv = act_transposition(ModuleVector::basis(*v.sctx, idx), k, l);
        for (auto& [jdx, c] : mv.coords) out.add(jdx, fs.scaled(c));
    }
    return out;
}

inline VPoly vt_si(const VPoly& v, int i) { return vt_transposition(v, i, i + 1); }

// bold w = omega (x) tau(s_1 s_2 ... s_{N-1})
inline VPoly vw(const VPoly& v, const OpContext& ctx) {
    VPoly out = v;
    for (int i = 1; i < ctx.N; ++i) out = vt_si(out, i);
    return out;
}

// bold D_i = d/dx_i (x) 1 + kappa sum_{j != i} partial_{ij} (x) tau(s_{ij})
inline VPoly vD(const VPoly& v, int i, const OpContext& ctx) {
    VPoly out(*v.sctx, v.ring);
    for (auto& [idx, f] : v.comps) {
        out.add(idx, f.derivative_x(i));
        for (int j = 1; j <= ctx.N; ++j) {
            if (j == i) continue;
            XPoly dd = f.divided_difference(i, j).scaled(ctx.kappa);
            if (dd.is_zero()) continue;
            ModuleVector mv = act_transposition(ModuleVector::basis(*v.sctx, idx), i, j);
            for (auto& [jdx, c] : mv.coords) out.add(jdx, dd.scaled(c));
        }
    }
    return out;
}

// bold w_i = sum_{j>i} t_{s_{ij}}
inline VPoly vw_i(const VPoly& v, int i, const OpContext& ctx) {
    VPoly out(*v.sctx, v.ring);
    for (int j = i + 1; j <= ctx.N; ++j) out = out + vt_transposition(v, i, j);
    return out;
}

// bold U_i = bold D_i x_i + 1 (x) 1 + kappa bold w_i
inline VPoly vU(const VPoly& v, int i, const OpContext& ctx) {
    VPoly out = vD(v, i, ctx);
    for (auto& [idx, f] : out.comps) f = f * XPoly::x(v.ring, i);
    out = out + v + vw_i(v, i, ctx).scaled(ctx.kappa);
    return out;
}

// bold T_i = (1-t) partial_i x_{i+1} (x) 1 + s_i (x) tau(T_i), where
// partial_i is the divided difference for (i, i+1)
inline VPoly vT(const VPoly& v, int i, const OpContext& ctx, bool inverse = false) {
    VPoly out(*v.sctx, v.ring);
    for (auto& [idx, f] : v.comps) {
        XPoly first = f.divided_difference(i, i + 1) * XPoly::x(v.ring, i + 1) * (ParamRat(1) - ctx.t);
        out.add(idx, first);
        XPoly fs = f.swap_x(i, i + 1);
        ModuleVector mv = act_Ti(ModuleVector::basis(*v.sctx, idx), i);
        for (auto& [jdx, c] : mv.coords) out.add(jdx, fs.scaled(c));
    }
    if (!inverse) return out;
    return (out - v.scaled(ctx.t - ParamRat(1))).scaled(ctx.t.inverse());
}

// bold w^q = t^{1-N} omega^q (x) tau(T_1 T_2 ... T_{N-1})
inline VPoly vwq(const VPoly& v, const OpContext& ctx) {
    VPoly out(*v.sctx, v.ring);
    for (auto& [idx, f] : v.comps) {
        XPoly fq = omega_q(f, ctx);
        ModuleVector mv = ModuleVector::basis(*v.sctx, idx);
        for (int j = 1; j < ctx.N; ++j) mv = act_Ti(mv, j);
        for (auto& [jdx, c] : mv.coords) out.add(jdx, fq.scaled(c));
    }
    return out.scaled(ctx.t.pow(1 - ctx.N));
}

// bold E_i = t^{i-1} T_{i-1}^{-1} ... T_1^{-1} w^q T_{N-1} ... T_i (all bold)
inline VPoly vE(const VPoly& v, int i, const OpContext& ctx) {
    VPoly out = v;
    for (int j = i - 1; j >= 1; --j) out = vT(out, j, ctx, true);
    out = vwq(out, ctx);
    for (int j = ctx.N - 1; j >= i; --j) out = vT(out, j, ctx);
    return out.scaled(ctx.t.pow(i - 1));
}

// bold D_N^{q,t} = (1 - bold E_N) x_N^{-1} (x) 1;
// bold D_i^{q,t} = (1/t) bold T_i bold D_{i+1}^{q,t} bold T_i
inline VPoly vDqt(const VPoly& v, int i, const OpContext& ctx) {
    if (i == ctx.N) {
        VPoly num = v - vE(v, ctx.N, ctx);
        VPoly out(*v.sctx, v.ring);
        XPoly xn = XPoly::x(v.ring, ctx.N);
        for (auto& [idx, f] : num.comps) out.add(idx, f.exact_divide(xn));
        return out;
    }
    VPoly out = vT(v, i, ctx);
    out = vDqt(out, i + 1, ctx);
    out = vT(out, i, ctx);
    return out.scaled(ctx.t.inverse());
}

// Projection rho: sum_S f_S (x) S -> sum_S f_S g_S for a supplied isotype basis.
inline XPoly project_rho(const VPoly& v, const IsotypeBasis& basis) {
    if (basis.ctx->tau != v.sctx->tau) throw ShapeMismatch("project_rho: shape mismatch");
    XPoly out(v.ring);
    for (auto& [idx, f] : v.comps) out = out + f * basis.at(idx);
    return out;
}

}  // namespace macjack
