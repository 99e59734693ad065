#ifndef GSO_ORTH_HPP
#define GSO_ORTH_HPP

/*
 * e-Galois self-orthogonality verdicts and hull dimensions.
 *
 * The direct test computes the k x k Gram matrix gram[i][j] = <g_i, g_j>_e
 * of a generator; the code is self-orthogonal iff the Gram vanishes and
 * dim Hull_e = k - rank(gram). For GRS-backed codes the Gram entry (i, j)
 * equals the power sum S(i + p^e j) with S(t) = sum_l a_l^t v_l^{p^e+1}
 * (plus 1 at (k-1, k-1) for extended codes), so the whole matrix follows
 * from one sweep of power sums; exponents at or beyond q-1 wrap through the
 * multiplicative group, with the zero locator contributing only at t = 0.
 *
 * The lambda criteria: with u the interpolation vector,
 *   GRS:  self-orthogonal <= exists lambda != 0, deg <= n-(k-1)(p^e+1)-2,
 *         lambda(a_i) u_i = v_i^{p^e+1} in H,
 *   EGRS: self-orthogonal <= exists monic lambda, deg = n-(k-1)(p^e+1)-1,
 *         -lambda(a_i) u_i = v_i^{p^e+1} in H,
 * and both are "iff" when p^e <= k lies in the necessity bracket.
 */

#include <variant>

#include "codes.hpp"

namespace gso {

// -- polynomials over F_q (ascending coefficients) --------------------------

using PolyFq = std::vector<Fe>;

inline void poly_trim(const FieldCtx& F, PolyFq& f) {
    while (!f.empty() && F.is_zero(f.back())) f.pop_back();
}

inline long long poly_degree(const FieldCtx& F, PolyFq f) {
    poly_trim(F, f);
    return (long long)f.size() - 1;
}

inline Fe poly_eval(const FieldCtx& F, const PolyFq& f, Fe x) {
    Fe acc{0};
    for (std::size_t i = f.size(); i-- > 0;) acc = F.add(F.mul(acc, x), f[i]);
    return acc;
}

inline PolyFq poly_mul(const FieldCtx& F, const PolyFq& a, const PolyFq& b) {
    if (a.empty() || b.empty()) return {};
    PolyFq c(a.size() + b.size() - 1, Fe{0});
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
    return c;
}

inline PolyFq poly_pow(const FieldCtx& F, PolyFq base, u64 e) {
    PolyFq r{F.one()};
    while (e) {
        if (e & 1) r = poly_mul(F, r, base);
        base = poly_mul(F, base, base);
        e >>= 1;
    }
    return r;
}

inline PolyFq poly_scale(const FieldCtx& F, PolyFq f, Fe c) {
    for (auto& x : f) x = F.mul(x, c);
    return f;
}

// -- power sums --------------------------------------------------------------

/// Sums S(t) = sum_l a_l^t x_l for arbitrary exponents t.
class PowerSums {
   public:
    PowerSums(const FieldCtx& F, const FVector& a, const FVector& x, u64 max_exp) : F_(&F) {
        std::size_t n = a.size();
        bool wrap = max_exp >= F.q() - 1;
        u64 top = wrap ? F.q() - 2 : max_exp;
        s_.assign(top + 1, Fe{0});
        wrap_ = wrap;
        Fe s0_all{0};
        for (std::size_t l = 0; l < n; ++l) s0_all = F.add(s0_all, x[l]);
        std::vector<Fe> pw, xs;
        pw.reserve(n);
        xs.reserve(n);
        for (std::size_t l = 0; l < n; ++l) {
            if (F.is_zero(a[l])) {
                zero_term_ = F.add(zero_term_, x[l]);
                continue;
            }
            pw.push_back(a[l]);
            xs.push_back(x[l]);
        }
        s_[0] = wrap ? F.sub(s0_all, zero_term_) : s0_all;
        std::vector<Fe> cur(pw.size(), F.one());
        for (u64 t = 1; t <= top; ++t) {
            Fe acc{0};
            for (std::size_t l = 0; l < pw.size(); ++l) {
                cur[l] = F.mul(cur[l], pw[l]);
                acc = F.add(acc, F.mul(cur[l], xs[l]));
            }
            s_[t] = acc;
        }
    }

    Fe at(u64 t) const {
        const FieldCtx& F = *F_;
        if (!wrap_) return s_[t];
        if (t == 0) return F.add(s_[0], zero_term_);
        return s_[t % (F.q() - 1)];
    }

   private:
    const FieldCtx* F_;
    std::vector<Fe> s_;
    Fe zero_term_{0};
    bool wrap_ = false;
};

// -- Gram reports ------------------------------------------------------------

struct GramReport {
    u64 e = 0;
    FMatrix gram;
    bool is_zero = false;
    std::size_t hull_dim = 0;  ///< k - rank(gram) = dim Hull_e
};

namespace detail {
inline GramReport finish_report(const FieldCtx& F, u64 e, FMatrix gram) {
    GramReport rep;
    rep.e = e;
    rep.is_zero = true;
    for (Fe x : gram.a)
        if (!F.is_zero(x)) {
            rep.is_zero = false;
            break;
        }
    std::size_t rank = rep.is_zero ? 0 : rank_of(gram);
    rep.hull_dim = gram.rows - rank;
    rep.gram = std::move(gram);
    return rep;
}
}  // namespace detail

/// Gram matrix of a GRS spec via power sums.
inline GramReport gram_report(const GrsSpec& spec, u64 e) {
    const FieldCtx& F = *spec.ctx;
    u64 pe = detail::pow_u64(F.p(), e % F.m());
    FVector x{spec.ctx, std::vector<Fe>(spec.nloc())};
    for (std::size_t i = 0; i < spec.nloc(); ++i) x.e[i] = F.pow(spec.v[i], pe + 1);
    u64 max_exp = (u64)(spec.k - 1) * (pe + 1);
    PowerSums S(F, spec.a, x, max_exp);
    FMatrix gram(F, spec.k, spec.k);
    for (std::size_t i = 0; i < spec.k; ++i)
        for (std::size_t j = 0; j < spec.k; ++j) gram.at(i, j) = S.at(i + pe * j);
    if (spec.extended) {
        std::size_t kk = spec.k - 1;
        gram.at(kk, kk) = F.add(gram.at(kk, kk), F.one());
    }
    return detail::finish_report(F, e, std::move(gram));
}

/// Direct Gram test for any linear code; GRS-backed codes take the
/// power-sum path, which computes the identical matrix.
inline GramReport is_galois_so_direct(const LinearCode& C, u64 e) {
    if (C.origin) return gram_report(*C.origin, e);
    const FieldCtx& F = *C.ctx;
    FMatrix gram(F, C.dim(), C.dim());
    for (std::size_t i = 0; i < C.dim(); ++i) {
        FVector gi = C.G.row(i);
        for (std::size_t j = 0; j < C.dim(); ++j) gram.at(i, j) = galois_inner(gi, C.G.row(j), e);
    }
    return detail::finish_report(F, e, std::move(gram));
}

/// Self-orthogonality verdicts agree between e and m-e.
inline bool duality_symmetry_check(const LinearCode& C, u64 e) {
    u64 m = C.ctx->m();
    return is_galois_so_direct(C, e % m).is_zero == is_galois_so_direct(C, (m - e % m) % m).is_zero;
}

// -- the linear systems of the criteria --------------------------------------

struct SoSystem {
    FMatrix A;        ///< k^2 x n, rows a^{p^e i + j}
    FVector rhs_a;    ///< 0 or (0, ..., 0, -1)
    std::optional<FMatrix> B;    ///< collapsed rows a^0 .. a^{(k-1)(p^e+1)} when p^e <= k
    std::optional<FVector> rhs_b;
    std::optional<FMatrix> reduced;  ///< rows a^0 .. a^{2k-2} when sigma^e(a) = s a + t
    std::optional<FVector> rhs_r;
    std::optional<std::pair<Fe, Fe>> affine;  ///< the detected (s, t)
};

/// Detects s, t with sigma^e(a_i) = s a_i + t for all i.
inline std::optional<std::pair<Fe, Fe>> detect_affine_frobenius(const FVector& a, u64 e) {
    const FieldCtx& F = *a.ctx;
    if (a.size() == 0) return std::nullopt;
    Fe s, t;
    if (a.size() == 1) {
        s = F.one();
        t = F.sub(F.frobenius_pow(a[0], e), a[0]);
    } else {
        Fe da = F.sub(a[0], a[1]);
        Fe ds = F.sub(F.frobenius_pow(a[0], e), F.frobenius_pow(a[1], e));
        s = F.div(ds, da);
        if (F.is_zero(s)) return std::nullopt;
        t = F.sub(F.frobenius_pow(a[0], e), F.mul(s, a[0]));
    }
    for (Fe x : a.e)
        if (F.frobenius_pow(x, e) != F.add(F.mul(s, x), t)) return std::nullopt;
    return std::make_pair(s, t);
}

namespace detail {
inline FMatrix power_rows(const FieldCtx& F, const FVector& a, const std::vector<u64>& exps) {
    FMatrix M(F, exps.size(), a.size());
    for (std::size_t r = 0; r < exps.size(); ++r)
        for (std::size_t c = 0; c < a.size(); ++c) M.at(r, c) = F.pow(a[c], exps[r]);
    return M;
}
}  // namespace detail

inline SoSystem so_system(const GrsSpec& spec, u64 e) {
    const FieldCtx& F = *spec.ctx;
    u64 pe = detail::pow_u64(F.p(), e % F.m());
    std::size_t k = spec.k, n = spec.nloc();
    SoSystem sys;
    std::vector<u64> exps;
    exps.reserve(k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) exps.push_back(pe * i + j);
    sys.A = detail::power_rows(F, spec.a, exps);
    sys.rhs_a = FVector{spec.ctx, std::vector<Fe>(k * k, Fe{0})};
    if (spec.extended) sys.rhs_a.e[k * k - 1] = F.neg_one();
    if (pe <= k) {
        u64 top = (u64)(k - 1) * (pe + 1);
        std::vector<u64> be(top + 1);
        for (u64 t = 0; t <= top; ++t) be[t] = t;
        sys.B = detail::power_rows(F, spec.a, be);
        sys.rhs_b = FVector{spec.ctx, std::vector<Fe>(top + 1, Fe{0})};
        if (spec.extended) sys.rhs_b->e[top] = F.neg_one();
    }
    if (auto st = detect_affine_frobenius(spec.a, e)) {
        sys.affine = st;
        std::vector<u64> re(2 * k - 1);
        for (u64 t = 0; t < 2 * k - 1; ++t) re[t] = t;
        sys.reduced = detail::power_rows(F, spec.a, re);
        sys.rhs_r = FVector{spec.ctx, std::vector<Fe>(2 * k - 1, Fe{0})};
        if (spec.extended) sys.rhs_r->e[2 * k - 2] = F.neg_one();
    }
    (void)n;
    return sys;
}

// -- lambda witnesses ---------------------------------------------------------

enum class LambdaKind { NonzeroForGRS, MonicForEGRS };

struct LambdaWitness {
    PolyFq lam;
    LambdaKind kind = LambdaKind::NonzeroForGRS;

    long long degree(const FieldCtx& F) const { return poly_degree(F, lam); }
};

enum class LambdaFailReason { NotInH, Zero };

struct LambdaFail {
    std::size_t index = 0;
    LambdaFailReason reason = LambdaFailReason::NotInH;
};

/// Evaluates w_i = +-lambda(a_i) u_i and, when every w_i lies in H, returns
/// the canonical multipliers v_i = galois_root(w_i, e).
inline std::variant<FVector, LambdaFail> lambda_to_multipliers(const FVector& a, const LambdaWitness& lam,
                                                               u64 e, const FVector* u_hint = nullptr) {
    const FieldCtx& F = *a.ctx;
    FVector u = u_hint ? *u_hint : u_vector(a);
    SubgroupH H = F.h_subgroup(e);
    FVector v{a.ctx, std::vector<Fe>(a.size())};
    bool flip = lam.kind == LambdaKind::MonicForEGRS;
    for (std::size_t i = 0; i < a.size(); ++i) {
        Fe w = F.mul(poly_eval(F, lam.lam, a[i]), u[i]);
        if (flip) w = F.neg(w);
        if (F.is_zero(w)) return LambdaFail{i, LambdaFailReason::Zero};
        if (!F.h_contains(H, w)) return LambdaFail{i, LambdaFailReason::NotInH};
        v.e[i] = F.galois_root(w, e);
    }
    return v;
}

/// Necessity bracket for the lambda criterion at exponent e.
inline std::size_t lambda_bracket_max_k(const FieldCtx& F, std::size_t n, u64 e, bool extended) {
    u64 pe = detail::pow_u64(F.p(), e % F.m());
    return (std::size_t)((n + pe - (extended ? 0 : 1)) / (pe + 1));
}

/// Interpolates the witness of a self-orthogonal spec inside the necessity
/// bracket (p^e <= k <= bracket, 2e <= m) by solving in the basis
/// {a^l * u}; returns nullopt when the spec is not self-orthogonal.
inline std::optional<LambdaWitness> multipliers_to_lambda(const GrsSpec& spec, u64 e) {
    const FieldCtx& F = *spec.ctx;
    require(2 * (e % F.m()) <= F.m(), errc::precondition_violated, "requires 2e <= m");
    u64 pe = detail::pow_u64(F.p(), e % F.m());
    std::size_t n = spec.nloc(), k = spec.k;
    require(pe <= k && k <= lambda_bracket_max_k(F, n, e, spec.extended), errc::precondition_violated,
            "k outside the necessity bracket");
    long long topl = (long long)n - (long long)(k - 1) * (long long)(pe + 1) - (spec.extended ? 1 : 2);
    if (topl < 0) return std::nullopt;
    FVector u = u_vector(spec.a);
    FVector x{spec.ctx, std::vector<Fe>(n)};
    for (std::size_t i = 0; i < n; ++i) x.e[i] = F.pow(spec.v[i], pe + 1);
    // columns a^l * u for l = 0..topl
    FMatrix M(F, n, (std::size_t)topl + 1);
    for (std::size_t i = 0; i < n; ++i) {
        Fe pw = F.one();
        for (long long l = 0; l <= topl; ++l) {
            M.at(i, (std::size_t)l) = F.mul(pw, u[i]);
            pw = F.mul(pw, spec.a[i]);
        }
    }
    auto mu = solve_affine(M, x);
    if (!mu) return std::nullopt;
    LambdaWitness w;
    if (!spec.extended) {
        w.kind = LambdaKind::NonzeroForGRS;
        w.lam = mu->e;
        poly_trim(F, w.lam);
        if (w.lam.empty()) return std::nullopt;
        return w;
    }
    // extended: the top coefficient is forced to -1; the monic witness is
    // lambda = x^L - sum_{l<L} mu_l x^l
    if ((*mu)[(std::size_t)topl] != F.neg_one()) return std::nullopt;
    w.kind = LambdaKind::MonicForEGRS;
    w.lam.assign((std::size_t)topl + 1, Fe{0});
    for (long long l = 0; l < topl; ++l) w.lam[(std::size_t)l] = F.neg((*mu)[(std::size_t)l]);
    w.lam[(std::size_t)topl] = F.one();
    return w;
}

}  // namespace gso

#endif
