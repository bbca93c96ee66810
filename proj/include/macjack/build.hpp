#pragma once

#include <functional>
#include <optional>

#include "ops.hpp"
#include "vops.hpp"

namespace macjack {

enum class Family { Jack, Macdonald };

// --- spectral vectors --------------------------------------------------------

inline std::vector<ParamRat> spectral_jack(const Composition& alpha, const OpContext& ctx) {
    std::vector<ParamRat> out;
    for (int i = 1; i <= ctx.N; ++i)
        out.push_back(ParamRat(Rat(alpha[static_cast<size_t>(i - 1)] + 1)) +
                      ctx.kappa * ParamRat(Rat(ctx.N - rank(alpha, i))));
    return out;
}

inline std::vector<ParamRat> spectral_macdonald(const Composition& alpha, const OpContext& ctx) {
    std::vector<ParamRat> out;
    for (int i = 1; i <= ctx.N; ++i)
        out.push_back(ctx.q.pow(alpha[static_cast<size_t>(i - 1)]) * ctx.t.pow(ctx.N - rank(alpha, i)));
    return out;
}

inline std::vector<ParamRat> spectral_jack_vv(const Composition& alpha, const Tableau& S,
                                              const OpContext& ctx) {
    std::vector<ParamRat> out;
    for (int i = 1; i <= ctx.N; ++i)
        out.push_back(ParamRat(Rat(alpha[static_cast<size_t>(i - 1)] + 1)) +
                      ctx.kappa * ParamRat(Rat(S.content(rank(alpha, i)))));
    return out;
}

inline std::vector<ParamRat> spectral_macdonald_vv(const Composition& alpha, const Tableau& S,
                                                   const OpContext& ctx) {
    std::vector<ParamRat> out;
    for (int i = 1; i <= ctx.N; ++i)
        out.push_back(ctx.q.pow(alpha[static_cast<size_t>(i - 1)]) *
                      ctx.t.pow(S.content(rank(alpha, i))));
    return out;
}

// --- slice bases ---------------------------------------------------------------

// All compositions beta with |beta| = |alpha|, beta+ dominated by alpha+, and
// beta at or below alpha in the rhd-refined total order; sorted descending.
inline std::vector<Composition> slice_basis(const Composition& alpha) {
    int n = comp_size(alpha);
    int N = static_cast<int>(alpha.size());
    Partition lam = sorted_desc(alpha);
    std::vector<Composition> out;
    for (const Partition& nu : partitions_of(n, N)) {
        if (!dominates_weak(lam.parts, nu.padded(N).parts)) continue;
        for (Composition& c : rearrangements(nu, N))
            if (comp_cmp_total(c, alpha) <= 0) out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(),
              [](const Composition& a, const Composition& b) { return comp_cmp_total(a, b) > 0; });
    if (out.empty() || out.front() != alpha)
        throw MacjackError("slice basis must start at the target composition");
    return out;
}

// Partitions nu of n with at most N parts, dominated by lambda; descending.
inline std::vector<Partition> dominated_partitions(const Partition& lambda, int N) {
    std::vector<Partition> out;
    for (const Partition& nu : partitions_of(lambda.size(), N))
        if (dominates_weak(lambda.padded(N).parts, nu.padded(N).parts)) out.push_back(nu.padded(N));
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        return comp_cmp_total(a.parts, b.parts) > 0;
    });
    return out;
}

// --- the triangular back-substitution solver -----------------------------------

namespace detail {

struct ScalarSolveProblem {
    std::vector<Composition> basis;                       // descending; basis[0] = target
    std::function<XPoly(const XPoly&, int)> op;           // op_i applied to a polynomial
    std::function<ParamRat(const Composition&, int)> diag;  // spectral value
    int N;
    const XRing* ring;
};

// Solve for the monic simultaneous eigenfunction with leading term x^alpha.
// `weights(i)` combines the family operators into one triangular operator.
inline XPoly triangular_solve(const ScalarSolveProblem& pr, const std::vector<long>& weights) {
    const auto& basis = pr.basis;
    size_t dim = basis.size();
    std::map<Composition, size_t> index;
    for (size_t k = 0; k < dim; ++k) index[basis[k]] = k;

    auto lambda_of = [&](const Composition& beta) {
        ParamRat v;
        for (int i = 1; i <= pr.N; ++i)
            v = v + ParamRat(Rat(weights[static_cast<size_t>(i - 1)])) * pr.diag(beta, i);
        return v;
    };

    ParamRat lam_top = lambda_of(basis[0]);
    std::vector<ParamRat> v(dim), acc(dim);
    v[0] = ParamRat(1);

    for (size_t k = 0; k < dim; ++k) {
        if (k > 0) {
            ParamRat gap = lam_top - lambda_of(basis[k]);
            if (gap.is_zero())
                throw NonUniqueEigenfunction("diagonal collision between " +
                                             composition_to_string(basis[0]) + " and " +
                                             composition_to_string(basis[k]));
            v[k] = acc[k] / gap;
            if (v[k].is_zero()) continue;
        }
        // scatter row k of the combined operator
        XPoly mono = XPoly::x_monomial(*pr.ring, basis[k]);
        XPoly image(*pr.ring);
        for (int i = 1; i <= pr.N; ++i) {
            if (weights[static_cast<size_t>(i - 1)] == 0) continue;
            image = image + pr.op(mono, i) * ParamRat(Rat(weights[static_cast<size_t>(i - 1)]));
        }
        for (auto& [m, c] : image.terms()) {
            Composition beta(m.begin(), m.begin() + pr.ring->nx);
            auto it = index.find(beta);
            if (it == index.end())
                throw MacjackError("triangularity violated: image of " +
                                   composition_to_string(basis[k]) + " leaves the slice at " +
                                   composition_to_string(beta));
            size_t j = it->second;
            if (j < k)
                throw MacjackError("triangularity violated: image of " +
                                   composition_to_string(basis[k]) + " moves up to " +
                                   composition_to_string(beta));
            if (j == k) continue;  // diagonal consumed by lambda_of
            acc[j] = acc[j] + v[k] * c;
        }
    }

    XPoly out(*pr.ring);
    for (size_t k = 0; k < dim; ++k)
        if (!v[k].is_zero()) out = out + XPoly::x_monomial(*pr.ring, basis[k], v[k]);
    return out;
}

}  // namespace detail

// --- nonsymmetric Jack / Macdonald ------------------------------------------

// Build the monic simultaneous eigenfunction with rhd-leading term x^alpha at
// generic parameters; asserts every individual eigen-equation before return.
inline XPoly build_nonsym(Family family, const Composition& alpha, const XRing& ring,
                          const OpContext& ctx, size_t max_dim = 5000) {
    if (static_cast<int>(alpha.size()) != ctx.N)
        throw InvalidParams("build_nonsym: composition length must equal N");
    detail::ScalarSolveProblem pr;
    pr.basis = slice_basis(alpha);
    if (pr.basis.size() > max_dim)
        throw CostGateExceeded("slice dimension " + std::to_string(pr.basis.size()) +
                               " exceeds the budget " + std::to_string(max_dim));
    pr.N = ctx.N;
    pr.ring = &ring;
    if (family == Family::Jack) {
        pr.op = [&ctx](const XPoly& p, int i) { return cherednik_group(p, i, ctx); };
        pr.diag = [&ctx](const Composition& beta, int i) {
            return ParamRat(Rat(beta[static_cast<size_t>(i - 1)] + 1)) +
                   ctx.kappa * ParamRat(Rat(ctx.N - rank(beta, i)));
        };
    } else {
        pr.op = [&ctx](const XPoly& p, int i) { return xi(p, i, ctx); };
        pr.diag = [&ctx](const Composition& beta, int i) {
            return ctx.q.pow(beta[static_cast<size_t>(i - 1)]) * ctx.t.pow(ctx.N - rank(beta, i));
        };
    }

    std::vector<long> w1(static_cast<size_t>(ctx.N)), w2(static_cast<size_t>(ctx.N));
    for (int i = 1; i <= ctx.N; ++i) {
        w1[static_cast<size_t>(i - 1)] = i;
        w2[static_cast<size_t>(i - 1)] = static_cast<long>(i) * i;
    }
    XPoly p;
    try {
        p = detail::triangular_solve(pr, w1);
    } catch (const NonUniqueEigenfunction&) {
        p = detail::triangular_solve(pr, w2);  // deterministic retry
    }

    auto expected = family == Family::Jack ? spectral_jack(alpha, ctx) : spectral_macdonald(alpha, ctx);
    for (int i = 1; i <= ctx.N; ++i) {
        XPoly residual = pr.op(p, i) - p * expected[static_cast<size_t>(i - 1)];
        if (!residual.is_zero())
            throw NotEigenvector("build_nonsym: eigen-equation " + std::to_string(i) +
                                 " fails for " + composition_to_string(alpha));
    }
    return p;
}

// --- vector-valued versions -----------------------------------------------------

inline VPoly build_nonsym_vv(Family family, const Composition& alpha, const Tableau& S,
                             const ShapeCtx& sctx, const XRing& ring, const OpContext& ctx,
                             size_t max_dim = 5000) {
    if (static_cast<int>(alpha.size()) != ctx.N)
        throw InvalidParams("build_nonsym_vv: composition length must equal N");
    if (sctx.tau.size() != ctx.N) throw InvalidParams("build_nonsym_vv: shape must be a partition of N");

    std::vector<Composition> comps = slice_basis(alpha);
    int ntabs = sctx.size();
    size_t dim = comps.size() * static_cast<size_t>(ntabs);
    if (dim > max_dim)
        throw CostGateExceeded("vv slice dimension " + std::to_string(dim) + " exceeds the budget");

    int target_tab = sctx.index_of(S);
    auto op = [&](const VPoly& v, int i) { return family == Family::Jack ? vU(v, i, ctx) : vE(v, i, ctx); };
    auto diag = [&](const Composition& beta, int tab, int i) {
        const Tableau& T = sctx.tab(tab);
        if (family == Family::Jack)
            return ParamRat(Rat(beta[static_cast<size_t>(i - 1)] + 1)) +
                   ctx.kappa * ParamRat(Rat(T.content(rank(beta, i))));
        return ctx.q.pow(beta[static_cast<size_t>(i - 1)]) * ctx.t.pow(T.content(rank(beta, i)));
    };

    std::vector<long> weights(static_cast<size_t>(ctx.N));
    for (int i = 1; i <= ctx.N; ++i) weights[static_cast<size_t>(i - 1)] = i;

    auto solve = [&](const std::vector<long>& w) {
        auto lambda_of = [&](size_t ci, int tab) {
            ParamRat v;
            for (int i = 1; i <= ctx.N; ++i)
                v = v + ParamRat(Rat(w[static_cast<size_t>(i - 1)])) * diag(comps[ci], tab, i);
            return v;
        };
        std::map<Composition, size_t> cindex;
        for (size_t k = 0; k < comps.size(); ++k) cindex[comps[k]] = k;
        auto pair_index = [&](size_t ci, int tab) { return ci * static_cast<size_t>(ntabs) + static_cast<size_t>(tab); };

        ParamRat lam_top = lambda_of(0, target_tab);
        std::vector<ParamRat> v(dim), acc(dim);
        v[pair_index(0, target_tab)] = ParamRat(1);

        for (size_t ci = 0; ci < comps.size(); ++ci) {
            for (int tab = 0; tab < ntabs; ++tab) {
                size_t k = pair_index(ci, tab);
                bool is_target = ci == 0 && tab == target_tab;
                if (!is_target) {
                    if (acc[k].is_zero() && ci == 0) continue;  // other top-block tableaux stay zero
                    ParamRat gap = lam_top - lambda_of(ci, tab);
                    if (gap.is_zero())
                        throw NonUniqueEigenfunction("vv diagonal collision at " +
                                                     composition_to_string(comps[ci]));
                    v[k] = acc[k] / gap;
                    if (v[k].is_zero()) continue;
                }
                VPoly mono = VPoly::wedge(sctx, XPoly::x_monomial(ring, comps[ci]), tab);
                VPoly image(sctx, ring);
                for (int i = 1; i <= ctx.N; ++i) {
                    if (w[static_cast<size_t>(i - 1)] == 0) continue;
                    image = image + op(mono, i).scaled(ParamRat(Rat(w[static_cast<size_t>(i - 1)])));
                }
                for (auto& [jtab, f] : image.comps) {
                    for (auto& [m, c] : f.terms()) {
                        Composition beta(m.begin(), m.begin() + ring.nx);
                        auto it = cindex.find(beta);
                        if (it == cindex.end())
                            throw MacjackError("vv triangularity violated: slice escape at " +
                                               composition_to_string(beta));
                        size_t cj = it->second;
                        size_t j = pair_index(cj, jtab);
                        if (cj < ci)
                            throw MacjackError("vv triangularity violated: composition moves up");
                        if (cj == ci) {
                            if (jtab != tab)
                                throw MacjackError("vv triangularity violated: same-block tableau mixing");
                            continue;  // diagonal
                        }
                        acc[j] = acc[j] + v[k] * c;
                    }
                }
            }
        }
        VPoly out(sctx, ring);
        for (size_t ci = 0; ci < comps.size(); ++ci)
            for (int tab = 0; tab < ntabs; ++tab) {
                size_t k = pair_index(ci, tab);
                if (!v[k].is_zero())
                    out.add(tab, XPoly::x_monomial(ring, comps[ci], v[k]));
            }
        return out;
    };

    VPoly p;
    try {
        p = solve(weights);
    } catch (const NonUniqueEigenfunction&) {
        for (int i = 1; i <= ctx.N; ++i) weights[static_cast<size_t>(i - 1)] = static_cast<long>(i) * i;
        p = solve(weights);
    }

    auto expected = family == Family::Jack ? spectral_jack_vv(alpha, S, ctx)
                                           : spectral_macdonald_vv(alpha, S, ctx);
    for (int i = 1; i <= ctx.N; ++i) {
        VPoly residual = op(p, i) - p.scaled(expected[static_cast<size_t>(i - 1)]);
        if (!residual.is_zero())
            throw NotEigenvector("build_nonsym_vv: eigen-equation " + std::to_string(i) + " fails");
    }
    return p;
}

// --- symmetric Jack / Macdonald ---------------------------------------------

// Monomial symmetric polynomial m_nu.
inline XPoly monomial_symmetric(const XRing& ring, const Partition& nu, int N) {
    XPoly out(ring);
    for (const Composition& c : rearrangements(nu, N)) out = out + XPoly::x_monomial(ring, c);
    return out;
}

namespace detail {

// Decompose a symmetric polynomial in the m_nu basis; throws if not symmetric.
inline std::map<Partition, ParamRat> m_decompose(const XPoly& p, int N,
                                                 const std::vector<Partition>& basis) {
    std::map<Partition, ParamRat> out;
    XPoly rem = p;
    for (const Partition& nu : basis) {
        ParamRat c = rem.coeff_x(nu.padded(N).parts);
        if (c.is_zero()) continue;
        out[nu] = c;
        rem = rem - monomial_symmetric(p.ring(), nu, N) * c;
    }
    if (!rem.is_zero()) throw MacjackError("m-basis decomposition: polynomial is not in the span");
    return out;
}

}  // namespace detail

// Symmetric Jack (eigenfunction of the power sums of U_i) or symmetric
// Macdonald (eigenfunction of sum_i xi_i), monic with leading monomial x^lambda.
inline XPoly build_symmetric(Family family, const Partition& lambda_in, const XRing& ring,
                             const OpContext& ctx, size_t max_dim = 5000) {
    Partition lambda = lambda_in.padded(ctx.N);
    if (lambda.num_entries() != ctx.N) throw InvalidParams("build_symmetric: lambda has more than N parts");
    std::vector<Partition> basis = dominated_partitions(lambda, ctx.N);
    if (basis.size() > max_dim) throw CostGateExceeded("symmetric slice exceeds the budget");
    if (basis.empty() || basis[0] != lambda)
        throw MacjackError("symmetric basis must start at lambda");
    size_t dim = basis.size();

    // spectral values sigma_nu(i) resp. zeta_nu(i) for partitions (rank is trivial)
    auto spec_value = [&](const Partition& nu, int i) {
        if (family == Family::Jack)
            return ParamRat(Rat(nu.part(i) + 1)) + ctx.kappa * ParamRat(Rat(ctx.N - i));
        return ctx.q.pow(nu.part(i)) * ctx.t.pow(ctx.N - i);
    };
    auto power_sum = [&](const Partition& nu, int k) {
        ParamRat v;
        for (int i = 1; i <= ctx.N; ++i) v = v + spec_value(nu, i).pow(k);
        return v;
    };

    // operator rows, assembled lazily per power k
    std::map<int, std::vector<std::map<Partition, ParamRat>>> rows_by_power;
    auto rows_for = [&](int k) -> std::vector<std::map<Partition, ParamRat>>& {
        auto it = rows_by_power.find(k);
        if (it != rows_by_power.end()) return it->second;
        std::vector<std::map<Partition, ParamRat>> rows(dim);
        for (size_t r = 0; r < dim; ++r) {
            XPoly image(ring);
            XPoly mnu = monomial_symmetric(ring, basis[r], ctx.N);
            for (int i = 1; i <= ctx.N; ++i) {
                XPoly term = mnu;
                for (int rep = 0; rep < k; ++rep)
                    term = family == Family::Jack ? cherednik_group(term, i, ctx) : xi(term, i, ctx);
                image = image + term;
            }
            rows[r] = detail::m_decompose(image, ctx.N, basis);
            ParamRat d = rows[r].count(basis[r]) ? rows[r][basis[r]] : ParamRat();
            if (d != power_sum(basis[r], k))
                throw MacjackError("symmetric operator diagonal disagrees with the spectral value");
        }
        return rows_by_power.emplace(k, std::move(rows)).first->second;
    };

    // per-row power choice: smallest k >= 1 separating lambda from nu
    const int max_power = ctx.N;
    std::vector<ParamRat> v(dim), acc_zero;
    v[0] = ParamRat(1);
    std::map<Partition, size_t> index;
    for (size_t r = 0; r < dim; ++r) index[basis[r]] = r;

    // accumulate contributions per power as we walk down
    std::map<int, std::vector<ParamRat>> acc;
    auto acc_for = [&](int k) -> std::vector<ParamRat>& {
        auto it = acc.find(k);
        if (it == acc.end()) it = acc.emplace(k, std::vector<ParamRat>(dim)).first;
        return it->second;
    };

    std::vector<int> chosen_power(dim, 0);
    for (size_t r = 1; r < dim; ++r) {
        for (int k = 1; k <= max_power; ++k) {
            if (power_sum(lambda, k) != power_sum(basis[r], k)) {
                chosen_power[r] = k;
                break;
            }
        }
        if (chosen_power[r] == 0)
            throw NonUniqueEigenfunction("power sums fail to separate " +
                                         partition_to_string(basis[r]));
    }
    std::vector<bool> need_power(static_cast<size_t>(max_power) + 1, false);
    for (size_t r = 1; r < dim; ++r) need_power[static_cast<size_t>(chosen_power[r])] = true;

    for (size_t r = 0; r < dim; ++r) {
        if (r > 0) {
            int k = chosen_power[r];
            v[r] = acc_for(k)[r] / (power_sum(lambda, k) - power_sum(basis[r], k));
            if (v[r].is_zero()) continue;
        }
        for (int k = 1; k <= max_power; ++k) {
            if (!need_power[static_cast<size_t>(k)]) continue;
            auto& rows = rows_for(k);
            auto& a = acc_for(k);
            for (auto& [nu, c] : rows[r]) {
                size_t j = index.at(nu);
                if (j < r) throw MacjackError("symmetric triangularity violated");
                if (j == r) continue;
                a[j] = a[j] + v[r] * c;
            }
        }
    }

    XPoly out(ring);
    for (size_t r = 0; r < dim; ++r)
        if (!v[r].is_zero()) out = out + monomial_symmetric(ring, basis[r], ctx.N) * v[r];

    // final assertions: invariance and the stated eigenvalue of the m=1 sum
    for (int i = 1; i < ctx.N; ++i) {
        if (family == Family::Jack) {
            if (act_si_x(out, i) != out) throw NotEigenvector("symmetric Jack is not s_i-invariant");
        } else {
            if (apply_T(out, i, ctx) != out * ctx.t)
                throw NotEigenvector("symmetric Macdonald fails p T_i = t p");
        }
    }
    XPoly sum_image(ring);
    for (int i = 1; i <= ctx.N; ++i)
        sum_image = sum_image + (family == Family::Jack ? cherednik_group(out, i, ctx) : xi(out, i, ctx));
    if (sum_image != out * power_sum(lambda, 1))
        throw NotEigenvector("symmetric eigen-equation for the m=1 sum fails");
    return out;
}

// --- minimal isotype bases h_S, f_S, a_S -------------------------------------

// h_{S_0} = prod over same-column pairs i < j of (t x_i - x_j); group case is t = 1.
inline XPoly build_h_s0(const Partition& tau, const XRing& ring, const ParamRat& t) {
    Tableau S0 = tableau_s0(tau);
    XPoly out(ring, ParamRat(1));
    for (int i = 1; i <= S0.N; ++i)
        for (int j = i + 1; j <= S0.N; ++j)
            if (S0.col_of(i) == S0.col_of(j))
                out = out * (XPoly::x(ring, i) * t - XPoly::x(ring, j));
    return out;
}

// The whole family {h_S}: h_{S^{(i)}} = h_S T_i - (t-1)/(1-t^{-b}) h_S along
// adjacent pairs, starting from S_0; every revisit must agree.
inline IsotypeBasis build_h_basis(const Partition& tau, IsotypeAlgebra algebra, const XRing& ring) {
    const ShapeCtx* ctx = &shape_ctx(tau);
    IsotypeBasis basis;
    basis.ctx = ctx;
    basis.algebra = algebra;
    basis.polys.assign(static_cast<size_t>(ctx->size()), XPoly(ring));

    bool group = algebra == IsotypeAlgebra::Group;
    OpContext octx = OpContext::generic(tau.size());
    ParamRat tval = group ? ParamRat(1) : ParamRat::t();

    std::vector<bool> known(static_cast<size_t>(ctx->size()), false);
    int s0 = ctx->s0_index();
    basis.polys[static_cast<size_t>(s0)] = build_h_s0(tau, ring, tval);
    known[static_cast<size_t>(s0)] = true;

    // breadth-first over adjacent pairs, decreasing inv
    std::vector<int> frontier{s0};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int idx : frontier) {
            const Tableau& S = ctx->tab(idx);
            for (int i = 1; i < S.N; ++i) {
                if (!(S.row_of(i) < S.row_of(i + 1) && S.col_of(i) > S.col_of(i + 1))) continue;
                int b = S.content(i) - S.content(i + 1);
                XPoly hs = basis.polys[static_cast<size_t>(idx)];
                XPoly hnew;
                if (group) {
                    hnew = act_si_x(hs, i) - hs * ParamRat(Rat(1, b));
                } else {
                    ParamRat coeff = (ParamRat::t() - ParamRat(1)) /
                                     (ParamRat(1) - ParamRat::t().pow(-b));
                    hnew = apply_T(hs, i, octx) - hs * coeff;
                }
                int jdx = ctx->index_of(S.exchanged(i));
                if (known[static_cast<size_t>(jdx)]) {
                    if (basis.polys[static_cast<size_t>(jdx)] != hnew)
                        throw PathInconsistency("h basis: two adjacent-pair paths disagree at a tableau");
                } else {
                    basis.polys[static_cast<size_t>(jdx)] = hnew;
                    known[static_cast<size_t>(jdx)] = true;
                    next.push_back(jdx);
                }
            }
        }
        frontier = std::move(next);
    }
    for (bool k : known)
        if (!k) throw MacjackError("h basis: some tableau unreachable from S_0");
    return basis;
}

// hat h basis for H_N(1/t): substitute t -> 1/t in the h basis and clear by
// the common unit monomial t^{#same-column pairs}.
inline IsotypeBasis build_h_hat_basis(const Partition& tau, const XRing& ring) {
    IsotypeBasis h = build_h_basis(tau, IsotypeAlgebra::HeckeT, ring);
    SpecMap inv_t;
    inv_t.description = "t -> 1/t";
    inv_t.assign[P_T] = ParamRat::t().inverse();
    Tableau S0 = tableau_s0(tau);
    int pairs = 0;
    for (int i = 1; i <= S0.N; ++i)
        for (int j = i + 1; j <= S0.N; ++j)
            if (S0.col_of(i) == S0.col_of(j)) ++pairs;
    ParamRat unit = ParamRat::t().pow(pairs);
    IsotypeBasis out;
    out.ctx = h.ctx;
    out.algebra = IsotypeAlgebra::HeckeInvT;
    for (auto& p : h.polys) out.polys.push_back(p.specialize(inv_t) * unit);
    return out;
}

// Modified alternating polynomial f_S and its t -> 1 limit a_S.
inline int exponent_R(const Tableau& S, int i, int j) {
    int count = 0;
    for (int k = i + 1; k <= S.N; ++k)
        if (S.row_of(k) == S.row_of(j) && S.col_of(k) >= S.col_of(i)) ++count;
    return count;
}

inline XPoly build_f(const Tableau& S, const XRing& ring) {
    XPoly out(ring, ParamRat(1));
    for (int i = 1; i <= S.N; ++i)
        for (int j = i + 1; j <= S.N; ++j)
            if (S.col_of(i) == S.col_of(j))
                out = out * (XPoly::x(ring, i) * ParamRat::t().pow(exponent_R(S, i, j)) - XPoly::x(ring, j));
    return out;
}

// a_S from its own product over columns; equals f_S at t = 1.
inline XPoly build_a(const Tableau& S, const XRing& ring) {
    XPoly out(ring, ParamRat(1));
    Partition conj = S.shape.conjugate();
    for (int j = 1; j <= conj.num_entries(); ++j) {
        int height = conj.part(j);
        for (int i = 1; i < height; ++i)
            for (int k = i + 1; k <= height; ++k)
                out = out * (XPoly::x(ring, S.entry_at(k, j)) - XPoly::x(ring, S.entry_at(i, j)));
    }
    return out;
}

// --- the minimal symmetric vector-valued polynomial F_tau ----------------------

inline VPoly build_F_tau(const Partition& tau, AlgebraKind algebra, const XRing& ring) {
    if (algebra == AlgebraKind::Group) {
        IsotypeBasis h = build_h_basis(tau, IsotypeAlgebra::Group, ring);
        VPoly out(*h.ctx, ring);
        for (int s = 0; s < h.ctx->size(); ++s)
            out.add(s, h.at(s) * ParamRat(group_norm(h.ctx->tab(s))).inverse());
        return out;
    }
    IsotypeBasis hhat = build_h_hat_basis(tau, ring);
    VPoly out(*hhat.ctx, ring);
    for (int s = 0; s < hhat.ctx->size(); ++s)
        out.add(s, hhat.at(s) * gamma_t(hhat.ctx->tab(s)).inverse());
    return out;
}

}  // namespace macjack
