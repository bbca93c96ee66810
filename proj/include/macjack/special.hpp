#pragma once

#include "combin.hpp"
#include "xpoly.hpp"

namespace macjack {

// Special points send the x variables to t-power multiples of a smaller set
// of free variables y_i, z_j.  They live in the same extended ring as the
// polynomials they evaluate; substitution leaves y/z untouched.

enum class SpecialPointKind { Group, Hecke, DoubleBar };

struct SpecialPoint {
    SpecialPointKind kind;
    std::vector<XPoly> assignments;  // length N, entries in y/z variables
    std::string label;
};

// Ring large enough for shape tau: y_1..y_{l-1}, z_1..z_{tau_l}.
inline XRing ring_for_shape(const Partition& tau) {
    int l = tau.num_entries();
    return XRing{tau.size(), l - 1, tau.part(l)};
}

// Hecke special point at Y in RST_tau:
//   xbar(Y)_k = t^{1-col_Y[k]} y_{row_Y[k]}   for row_Y[k] < l,
//   xbar(Y)_k = z_{tau_l + 1 - col_Y[k]}      for row_Y[k] = l.
inline SpecialPoint special_point_hecke(const Tableau& Y, const XRing& ring) {
    if (!Y.is_rst()) throw InvalidParams("special point requires a reverse row-ordered tableau");
    int l = Y.shape.num_entries();
    int tau_l = Y.shape.part(l);
    SpecialPoint sp;
    sp.kind = SpecialPointKind::Hecke;
    sp.label = "xbar(Y)";
    for (int k = 1; k <= Y.N; ++k) {
        int r = Y.row_of(k), c = Y.col_of(k);
        if (r < l) {
            sp.assignments.push_back(XPoly::y(ring, r) * ParamRat::t().pow(1 - c));
        } else {
            sp.assignments.push_back(XPoly::z(ring, tau_l + 1 - c));
        }
    }
    return sp;
}

// Group special point: the t -> 1 limit of xbar(S_1); rows 1..l-1 of tau read
// as constant y_j blocks, top row free z's.
inline SpecialPoint special_point_group(const Partition& tau, const XRing& ring) {
    Tableau S1 = tableau_s1(tau);
    int l = tau.num_entries();
    int tau_l = tau.part(l);
    SpecialPoint sp;
    sp.kind = SpecialPointKind::Group;
    sp.label = "xbar";
    for (int k = 1; k <= S1.N; ++k) {
        int r = S1.row_of(k), c = S1.col_of(k);
        if (r < l)
            sp.assignments.push_back(XPoly::y(ring, r));
        else
            sp.assignments.push_back(XPoly::z(ring, tau_l + 1 - c));
    }
    return sp;
}

// Parameters of the Section 6.2.2 factorization family:
//   mu  = qs(m, n-1, dm, K, dn-1, nu_K),
//   tau = (dn-1, (n-1)^{K-1}, nu_K),
//   varpi = (q, t) = (w u^{-n/g}, u^{m/g}), g = gcd(m, n), w^{m/g} a primitive
//   g-th root of unity.
struct FactorizationParams {
    int m, n, K, nu_K, d;

    FactorizationParams(int m_, int n_, int K_, int nuK_, int d_)
        : m(m_), n(n_), K(K_), nu_K(nuK_), d(d_) {
        if (n < 2) throw InvalidParams("factorization family: n >= 2 required");
        if (nu_K < 1 || nu_K > n - 1) throw InvalidParams("factorization family: 1 <= nu_K <= n-1 required");
        if (K < 1 || d < 1 || m < 1) throw InvalidParams("factorization family: positive parameters required");
    }

    int N() const { return d * n - 1 + (n - 1) * (K - 1) + nu_K; }
    Partition mu() const { return quasistaircase({m, n - 1, d * m, K, d * n - 1, nu_K}).padded(N()); }
    Partition tau() const {
        std::vector<int> p{d * n - 1};
        for (int i = 0; i < K - 1; ++i) p.push_back(n - 1);
        p.push_back(nu_K);
        return Partition(std::move(p));
    }
    // lambda = ((K-1)^{nu_K}, (K-2)^{n-1}, ..., 1^{n-1}, 0^{dn-1})
    Partition lambda() const {
        std::vector<int> p;
        for (int c = 0; c < nu_K; ++c) p.push_back(K - 1);
        for (int step = K - 2; step >= 1; --step)
            for (int c = 0; c < n - 1; ++c) p.push_back(step);
        for (int c = 0; c < d * n - 1; ++c) p.push_back(0);
        return Partition(std::move(p)).padded(N());
    }
    // nu_{i+1} = N - (dn - 1) - i (n - 1), 0 <= i < K; nu_0 = N
    std::vector<int> nu_blocks() const {
        std::vector<int> nu{N()};
        for (int i = 0; i < K; ++i) nu.push_back(N() - (d * n - 1) - i * (n - 1));
        return nu;
    }
    SpecMap varpi() const {
        int g = std::gcd(m, n);
        SpecMap sm;
        sm.conductor = g;
        sm.description = "q=w*u^-" + std::to_string(n / g) + ", t=u^" + std::to_string(m / g) +
                         ", w^(m/g) a primitive " + std::to_string(g) + "-th root of unity";
        // w with w^{m/g} primitive g-th: take w = zeta_g^a with a (m/g) == 1 mod g
        CycNum w = CycNum(1);
        if (g > 1) {
            int mg = (m / g) % g;
            int a = 1;
            for (int cand = 1; cand < 2 * g + 1; ++cand) {
                if ((cand * mg) % g == 1 % g && std::gcd(cand, g) == 1) {
                    a = cand;
                    break;
                }
            }
            w = CycNum::zeta(g).pow(a);
        }
        sm.assign[P_Q] = ParamRat(w) * ParamRat::symbol(P_U, -(n / g));
        sm.assign[P_T] = ParamRat::symbol(P_U, m / g);
        return sm;
    }
};

// Ring for the double-bar point: y_1..y_K, z_1..z_{nu_K}.
inline XRing ring_for_factorization(const FactorizationParams& fp) {
    return XRing{fp.N(), fp.K, fp.nu_K};
}

// Double-bar special point: xbarbar_j = t^{j - nu_{i+1} - 1} y_{K-i} on the
// nu-blocks, z_j otherwise.
inline SpecialPoint special_point_doublebar(const FactorizationParams& fp, const XRing& ring) {
    auto nu = fp.nu_blocks();
    int N = fp.N();
    SpecialPoint sp;
    sp.kind = SpecialPointKind::DoubleBar;
    sp.label = "xbarbar";
    sp.assignments.assign(static_cast<size_t>(N), XPoly(ring));
    for (int i = 0; i < fp.K; ++i) {
        int lo = nu[static_cast<size_t>(i + 1)], hi = nu[static_cast<size_t>(i)];
        for (int j = lo + 1; j <= hi; ++j)
            sp.assignments[static_cast<size_t>(j - 1)] =
                XPoly::y(ring, fp.K - i) * ParamRat::t().pow(j - lo - 1);
    }
    int zcount = nu[static_cast<size_t>(fp.K)];
    if (zcount != fp.nu_K) throw InvalidParams("double-bar point: block arithmetic is inconsistent");
    for (int j = 1; j <= zcount; ++j)
        sp.assignments[static_cast<size_t>(j - 1)] = XPoly::z(ring, j);
    return sp;
}

inline XPoly evaluate_at(const XPoly& p, const SpecialPoint& sp) {
    return p.substitute_x(sp.assignments);
}

}  // namespace macjack
