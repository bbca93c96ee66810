#pragma once

#include <map>

#include "combin.hpp"
#include "param_rat.hpp"
#include "xpoly.hpp"

namespace macjack {

// Element of the irreducible module V_tau: finitely supported coordinates on
// the RSYT basis of a fixed shape.
struct ModuleVector {
    const ShapeCtx* ctx = nullptr;
    std::map<int, ParamRat> coords;

    ModuleVector() = default;
    explicit ModuleVector(const ShapeCtx& c) : ctx(&c) {}
    static ModuleVector basis(const ShapeCtx& c, int tab_index) {
        ModuleVector v(c);
        v.coords[tab_index] = ParamRat(1);
        return v;
    }

    bool is_zero() const { return coords.empty(); }

    void add(int idx, const ParamRat& c) {
        if (c.is_zero()) return;
        auto it = coords.find(idx);
        if (it == coords.end()) {
            coords.emplace(idx, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) coords.erase(it);
        }
    }

    friend ModuleVector operator+(const ModuleVector& a, const ModuleVector& b) {
        ModuleVector out = a;
        if (!out.ctx) out.ctx = b.ctx;
        for (auto& [i, c] : b.coords) out.add(i, c);
        return out;
    }
    friend ModuleVector operator-(const ModuleVector& a, const ModuleVector& b) {
        ModuleVector out = a;
        if (!out.ctx) out.ctx = b.ctx;
        for (auto& [i, c] : b.coords) out.add(i, -c);
        return out;
    }
    ModuleVector scaled(const ParamRat& s) const {
        ModuleVector out(*ctx);
        if (s.is_zero()) return out;
        for (auto& [i, c] : coords) out.coords[i] = c * s;
        return out;
    }
    friend bool operator==(const ModuleVector& a, const ModuleVector& b) {
        return a.coords == b.coords;
    }
};

namespace detail {

// The four mutually exclusive cases of the action formulas; asserted
// exhaustive for every (S, i).
enum class ActionCase { SameRow, SameCol, Up, Down };

inline ActionCase action_case(const Tableau& S, int i) {
    int ri = S.row_of(i), rj = S.row_of(i + 1);
    int ci = S.col_of(i), cj = S.col_of(i + 1);
    if (ri == rj) return ActionCase::SameRow;
    if (ci == cj) return ActionCase::SameCol;
    int b = S.content(i) - S.content(i + 1);
    if (ri < rj && ci > cj) {
        if (b < 2) throw MacjackError("action case (III) with content gap < 2: formulas not exhaustive");
        return ActionCase::Up;
    }
    if (b > -2) throw MacjackError("action case (IV) with content gap > -2: formulas not exhaustive");
    return ActionCase::Down;
}

}  // namespace detail

// Right action of tau(s_i) by the group action formulas.
inline ModuleVector act_si(const ModuleVector& v, int i) {
    const ShapeCtx& ctx = *v.ctx;
    ModuleVector out(ctx);
    for (auto& [idx, c] : v.coords) {
        const Tableau& S = ctx.tab(idx);
        switch (detail::action_case(S, i)) {
            case detail::ActionCase::SameRow: out.add(idx, c); break;
            case detail::ActionCase::SameCol: out.add(idx, -c); break;
            case detail::ActionCase::Up: {
                int b = S.content(i) - S.content(i + 1);
                out.add(ctx.index_of(S.exchanged(i)), c);
                out.add(idx, c * ParamRat(Rat(1, b)));
                break;
            }
            case detail::ActionCase::Down: {
                int b = S.content(i) - S.content(i + 1);  // b <= -2
                Rat inv_b(1, b);
                inv_b.canonicalize();
                out.add(ctx.index_of(S.exchanged(i)), c * ParamRat(Rat(1) - inv_b * inv_b));
                out.add(idx, c * ParamRat(inv_b));
                break;
            }
        }
    }
    return out;
}

inline ModuleVector act_Ti_inverse(const ModuleVector& v, int i);

// Right action of tau(T_i) by the Hecke action formulas (parameter t symbolic).
inline ModuleVector act_Ti(const ModuleVector& v, int i, bool inverse = false) {
    if (inverse) return act_Ti_inverse(v, i);
    const ShapeCtx& ctx = *v.ctx;
    ParamRat t = ParamRat::t();
    ModuleVector out(ctx);
    for (auto& [idx, c] : v.coords) {
        const Tableau& S = ctx.tab(idx);
        switch (detail::action_case(S, i)) {
            case detail::ActionCase::SameRow: out.add(idx, c * t); break;
            case detail::ActionCase::SameCol: out.add(idx, -c); break;
            case detail::ActionCase::Up: {
                int b = S.content(i) - S.content(i + 1);  // b >= 2
                out.add(ctx.index_of(S.exchanged(i)), c);
                out.add(idx, c * (t - ParamRat(1)) / (ParamRat(1) - t.pow(-b)));
                break;
            }
            case detail::ActionCase::Down: {
                int b = S.content(i) - S.content(i + 1);  // b <= -2
                ParamRat tb = t.pow(b);
                ParamRat coeff_exch = t * (t.pow(b + 1) - ParamRat(1)) * (t.pow(b - 1) - ParamRat(1)) /
                                      ((tb - ParamRat(1)) * (tb - ParamRat(1)));
                ParamRat coeff_same = tb * (t - ParamRat(1)) / (tb - ParamRat(1));
                out.add(ctx.index_of(S.exchanged(i)), c * coeff_exch);
                out.add(idx, c * coeff_same);
                break;
            }
        }
    }
    return out;
}

// T_i^{-1} = (T_i - (t-1)) / t; a library-level identity with its own test,
// derived from the quadratic relation.
inline ModuleVector act_Ti_inverse(const ModuleVector& v, int i) {
    ParamRat t = ParamRat::t();
    ModuleVector out = act_Ti(v, i) - v.scaled(t - ParamRat(1));
    return out.scaled(t.inverse());
}

// Right action of an arbitrary transposition tau(s_{kl}) via the palindromic
// word in adjacent reflections.
inline ModuleVector act_transposition(const ModuleVector& v, int k, int l) {
    if (k == l) throw InvalidParams("transposition indices must differ");
    if (k > l) std::swap(k, l);
    ModuleVector out = v;
    for (int i = k; i < l; ++i) out = act_si(out, i);
    for (int i = l - 2; i >= k; --i) out = act_si(out, i);
    return out;
}

enum class AlgebraKind { Group, Hecke };

// Jucys-Murphy action: omega_i = sum_{j>i} s_{ij} (group) acts by c_S(i);
// phi_N = 1, phi_i = (1/t) T_i phi_{i+1} T_i (Hecke) acts by t^{c_S(i)}.
inline ModuleVector act_jm(const ModuleVector& v, int i, AlgebraKind kind) {
    const ShapeCtx& ctx = *v.ctx;
    int N = ctx.tau.size();
    if (kind == AlgebraKind::Group) {
        ModuleVector out(ctx);
        for (int j = i + 1; j <= N; ++j) out = out + act_transposition(v, i, j);
        return out;
    }
    // phi_i = t^{i-N} T_i T_{i+1} ... T_{N-2} T_{N-1}^2 T_{N-2} ... T_i
    ModuleVector out = v;
    for (int j = i; j <= N - 1; ++j) out = act_Ti(out, j);
    for (int j = N - 1; j >= i; --j) out = act_Ti(out, j);
    return out.scaled(ParamRat::t().pow(i - N));
}

// Eigenvalue check for the Jucys-Murphy elements on a basis tableau; returns
// the full eigenvalue list or throws NotEigenvector with a witness.
inline std::vector<ParamRat> jucys_murphy_eigencheck(const ShapeCtx& ctx, const Tableau& S,
                                                     AlgebraKind kind) {
    int N = ctx.tau.size();
    ModuleVector v = ModuleVector::basis(ctx, ctx.index_of(S));
    std::vector<ParamRat> eigen;
    for (int i = 1; i <= N; ++i) {
        ParamRat expected = kind == AlgebraKind::Group
                                ? ParamRat(Rat(S.content(i)))
                                : ParamRat::t().pow(S.content(i));
        ModuleVector image = act_jm(v, i, kind);
        if (!(image - v.scaled(expected)).is_zero())
            throw NotEigenvector("Jucys-Murphy element " + std::to_string(i) +
                                 " does not act diagonally on the given tableau");
        eigen.push_back(expected);
    }
    return eigen;
}

// gamma(S; t): product over pairs i < j with c_S(j) - c_S(i) >= 2.
inline ParamRat gamma_t(const Tableau& S) {
    ParamRat t = ParamRat::t();
    ParamRat out(1);
    for (int i = 1; i <= S.N; ++i)
        for (int j = i + 1; j <= S.N; ++j) {
            int g = S.content(j) - S.content(i);
            if (g >= 2) {
                out = out * (ParamRat(1) - t.pow(g - 1)) * (ParamRat(1) - t.pow(g + 1)) /
                      ((ParamRat(1) - t.pow(g)) * (ParamRat(1) - t.pow(g)));
            }
        }
    return out;
}

// <S,S>_1, computed from its own closed product (the displayed t->1 limit),
// never by substituting t = 1 into gamma.
inline Rat group_norm(const Tableau& S) {
    Rat out(1);
    for (int i = 1; i <= S.N; ++i)
        for (int j = i + 1; j <= S.N; ++j) {
            if (S.content(i) <= S.content(j) - 2) {
                int d = S.content(i) - S.content(j);
                out *= Rat(1) - Rat(1, d * d);
            }
        }
    out.canonicalize();
    return out;
}

enum class InnerMode { HeckeT, Limit1 };

inline ParamRat inner_product(const Tableau& S, const Tableau& S2, InnerMode mode) {
    if (S.content_vector() != S2.content_vector()) return ParamRat();
    return mode == InnerMode::HeckeT ? gamma_t(S) : ParamRat(group_norm(S));
}

// A family of polynomials indexed by Tab_tau claimed to transform under the
// action formulas for one of the algebras.
enum class IsotypeAlgebra { Group, HeckeT, HeckeInvT };

struct IsotypeBasis {
    const ShapeCtx* ctx = nullptr;
    std::vector<XPoly> polys;  // indexed like ctx->tabs
    IsotypeAlgebra algebra = IsotypeAlgebra::HeckeT;

    const XPoly& of(const Tableau& S) const { return polys[static_cast<size_t>(ctx->index_of(S))]; }
    const XPoly& at(int idx) const { return polys[static_cast<size_t>(idx)]; }
};

}  // namespace macjack
