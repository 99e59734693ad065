#ifndef GSO_CONSTRUCT_HPP
#define GSO_CONSTRUCT_HPP

/*
 * Constructions of e-Galois self-orthogonal MDS codes:
 *
 *  - affine:    locators drawn from a set with sigma^e(a_i) = s a_i + t
 *               (in particular subfields F_{p^s}), lengths up to p^s + 1;
 *  - coset:     block locators inside disjoint cosets F_{p^s} + b ζ,
 *               lengths p^s + 2 .. p^{2s};
 *  - lambda1:   any locator set with the constant witness (only when H is
 *               the full multiplicative group), lengths up to q;
 *  - hermitian: re-interpreting self-orthogonal codes over F_{p^{2s}}
 *               inside F_q, lengths up to p^{2s} + 1;
 *  - theta:     block locators w^l theta^nu with theta of order p^e - 1,
 *               lengths r (p^e - 1) + 1;
 *  - qplus1:    extended codes of full length q + 1 built from root-free
 *               polynomials;
 *  - transfer:  moving a witness between exponents e' and e with
 *               gcd(e, m) = gcd(e', m);
 *  - subcode:   dimension reduction.
 *
 * Every returned code has been re-verified: the construction computes the
 * Gram matrix and refuses to return anything that is not exactly zero.
 */

#include <cmath>
#include <random>
#include <tuple>

#include "orth.hpp"

namespace gso {

enum class Method { AffineFrobenius, SubfieldCosets, Lambda1, HermitianLift, ThetaBlocks, LengthQPlus1, TransferEPrime, Subcode };

inline const char* method_name(Method m) {
    switch (m) {
        case Method::AffineFrobenius: return "affine";
        case Method::SubfieldCosets: return "coset";
        case Method::Lambda1: return "lambda1";
        case Method::HermitianLift: return "hermitian";
        case Method::ThetaBlocks: return "theta";
        case Method::LengthQPlus1: return "qplus1";
        case Method::TransferEPrime: return "transfer";
        case Method::Subcode: return "subcode";
    }
    return "?";
}

/// The three-way case split of gcd(p^e+1, q-1).
struct GaloisCase {
    u64 s = 0;
    int which = 0;  ///< 1: m/s odd, p even; 2: m/s odd, p odd; 3: m/s even
};

inline GaloisCase classify_case(const FieldCtx& F, u64 e) {
    GaloisCase c;
    c.s = std::gcd(e % F.m(), F.m());
    bool ms_odd = ((F.m() / c.s) % 2) == 1;
    c.which = ms_odd ? (F.p() == 2 ? 1 : 2) : 3;
    return c;
}

/// Reduced exponent used for witness math; self-orthogonality at e and at
/// m - e coincide, so constructions work at min(e, m-e).
inline u64 effective_e(const FieldCtx& F, u64 e) {
    u64 em = e % F.m();
    return std::min(em, (F.m() - em) % F.m());
}

struct ConstructionRequest {
    const FieldCtx* ctx = nullptr;
    u64 e = 0;
    std::size_t n = 0;  ///< total length (including the infinity coordinate)
    std::size_t k = 0;
    Method method = Method::LengthQPlus1;
    std::optional<Fe> affine_scale;  ///< the a of sigma^e(x) = a x + b
    std::optional<Fe> affine_shift;
    std::vector<std::size_t> partition;
    std::optional<std::size_t> r;
    std::optional<u64> eprime;
    u64 seed = 0;
};

inline CertifiedCode construct(const ConstructionRequest& req);

/// Gram-verifies a spec at e and wraps it. Throws VerificationFailed if the
/// Gram is not exactly zero: construction bugs must not produce output.
inline CertifiedCode certify(GrsSpec spec, u64 e) {
    spec.validate();
    GramReport rep = gram_report(spec, e);
    if (!rep.is_zero) fail(errc::verification_failed, "constructed code is not self-orthogonal");
    CertifiedCode out;
    out.spec = std::move(spec);
    out.e = e % out.spec.ctx->m();
    out.hull_dim = out.spec.k;
    out.gram_zero = true;
    out.mds = MdsStructural{};
    return out;
}

// -- root-free polynomials ----------------------------------------------------

namespace detail {

/// Least monic polynomial of the given degree with coefficients drawn from
/// `pool` (ordered) and no roots in `root_set`; nullopt when none exists.
inline std::optional<PolyFq> least_rootfree(const FieldCtx& F, std::size_t deg, const std::vector<Fe>& pool,
                                            const std::vector<Fe>& root_set) {
    std::vector<std::size_t> idx(deg, 0);  // coefficient indices, c_{deg-1} most significant
    for (;;) {
        PolyFq f(deg + 1, Fe{0});
        f[deg] = F.one();
        for (std::size_t i = 0; i < deg; ++i) f[i] = pool[idx[deg - 1 - i]];
        bool ok = true;
        for (Fe r : root_set)
            if (F.is_zero(poly_eval(F, f, r))) {
                ok = false;
                break;
            }
        if (ok) return f;
        std::size_t d = deg;
        while (d-- > 0) {
            if (++idx[d] < pool.size()) break;
            idx[d] = 0;
            if (d == 0) return std::nullopt;
        }
        if (deg == 0) return std::nullopt;
    }
}

}  // namespace detail

/// Deterministic monic degree-l polynomial without roots in F_q (l >= 2):
/// g2^i g3^j with 2i + 3j = l and j minimal, where g2 and g3 are the least
/// monic root-free quadratic and cubic.
inline PolyFq noroot_poly(const FieldCtx& F, std::size_t l) {
    require(l >= 2, errc::precondition_violated, "no root-free polynomial of degree < 2 exists");
    std::vector<Fe> pool, all;
    pool.reserve(F.q());
    for (u64 v = 0; v < F.q(); ++v) pool.push_back(Fe{(u32)v});
    all = pool;
    auto g2 = detail::least_rootfree(F, 2, pool, all);
    require(g2.has_value(), errc::verification_failed, "no root-free quadratic found");
    std::size_t j = l % 2 == 0 ? 0 : 1;
    std::size_t i = (l - 3 * j) / 2;
    PolyFq out = poly_pow(F, *g2, i);
    if (j) {
        auto g3 = detail::least_rootfree(F, 3, pool, all);
        require(g3.has_value(), errc::verification_failed, "no root-free cubic found");
        out = poly_mul(F, out, *g3);
    }
    return out;
}

/// Root-free polynomial with coefficients and exclusion set restricted to a
/// subset (typically a subfield); same g2/g3 combination rule.
inline std::optional<PolyFq> noroot_poly_over(const FieldCtx& F, std::size_t l, const std::vector<Fe>& pool,
                                              const std::vector<Fe>& root_set) {
    if (l < 2) return std::nullopt;
    auto g2 = detail::least_rootfree(F, 2, pool, root_set);
    if (!g2) return std::nullopt;
    std::size_t j = l % 2 == 0 ? 0 : 1;
    std::size_t i = (l - 3 * j) / 2;
    PolyFq out = poly_pow(F, *g2, i);
    if (j) {
        auto g3 = detail::least_rootfree(F, 3, pool, root_set);
        if (!g3) return std::nullopt;
        out = poly_mul(F, out, *g3);
    }
    return out;
}

// -- witness search -----------------------------------------------------------

namespace detail {

struct WitnessResult {
    LambdaWitness lam;
    FVector v;
};

inline std::optional<WitnessResult> try_lambda(const FVector& locs, const FVector& u, PolyFq lam,
                                               LambdaKind kind, u64 e) {
    const FieldCtx& F = *locs.ctx;
    poly_trim(F, lam);
    if (lam.empty()) return std::nullopt;
    LambdaWitness w{std::move(lam), kind};
    auto res = lambda_to_multipliers(locs, w, e, &u);
    if (auto* v = std::get_if<FVector>(&res)) return WitnessResult{std::move(w), std::move(*v)};
    return std::nullopt;
}

/// Ordered search for a nonzero witness of degree <= max_deg over the given
/// locators. `pool` is the candidate coefficient set (subfield elements when
/// the locators sit in one) and `complement` the unused points of the
/// locators' natural superset.
inline std::optional<WitnessResult> search_witness_grs(const FVector& locs, const FVector& u, u64 e,
                                                       long long max_deg, const std::vector<Fe>& pool,
                                                       const std::vector<Fe>& complement) {
    if (max_deg < 0) return std::nullopt;
    const FieldCtx& F = *locs.ctx;
    // constants
    if (auto r = try_lambda(locs, u, {F.one()}, LambdaKind::NonzeroForGRS, e)) return r;
    if (auto r = try_lambda(locs, u, {F.neg_one()}, LambdaKind::NonzeroForGRS, e)) return r;
    for (Fe c : pool)
        if (auto r = try_lambda(locs, u, {c}, LambdaKind::NonzeroForGRS, e)) return r;
    // complement product, optionally scaled and padded with root-free squares
    if (!complement.empty() && (long long)complement.size() <= max_deg) {
        PolyFq base{F.one()};
        for (Fe z : complement) base = poly_mul(F, base, PolyFq{F.neg(z), F.one()});
        for (Fe c : pool) {
            if (auto r = try_lambda(locs, u, poly_scale(F, base, c), LambdaKind::NonzeroForGRS, e)) return r;
            if (auto r = try_lambda(locs, u, poly_scale(F, base, F.neg(c)), LambdaKind::NonzeroForGRS, e))
                return r;
        }
        long long spare = max_deg - (long long)complement.size();
        if (spare >= 2) {
            if (auto nr = noroot_poly_over(F, (std::size_t)spare, pool, locs.e)) {
                PolyFq cand = poly_mul(F, base, *nr);
                for (Fe c : pool)
                    if (auto r = try_lambda(locs, u, poly_scale(F, cand, c), LambdaKind::NonzeroForGRS, e))
                        return r;
            }
        }
        if (spare >= 4 && spare % 2 == 0) {
            if (auto nr = noroot_poly_over(F, (std::size_t)spare / 2, pool, locs.e)) {
                PolyFq cand = poly_mul(F, base, poly_mul(F, *nr, *nr));
                for (Fe c : pool)
                    if (auto r = try_lambda(locs, u, poly_scale(F, cand, c), LambdaKind::NonzeroForGRS, e))
                        return r;
            }
        }
    }
    // scaled monomials
    bool has_zero = false;
    for (Fe x : locs.e) has_zero |= F.is_zero(x);
    if (!has_zero) {
        for (long long j = 1; j <= max_deg; ++j) {
            PolyFq mono((std::size_t)j + 1, Fe{0});
            mono[(std::size_t)j] = F.one();
            for (Fe c : pool)
                if (auto r = try_lambda(locs, u, poly_scale(F, mono, c), LambdaKind::NonzeroForGRS, e)) return r;
        }
    }
    // small exhaustive sweep over pool coefficients
    double count = 1;
    for (long long i = 0; i <= max_deg; ++i) {
        count *= (double)(pool.size() + 1);
        if (count > 4096) break;
    }
    if (count <= 4096) {
        std::vector<std::size_t> idx((std::size_t)max_deg + 1, 0);  // 0 = zero coefficient
        for (;;) {
            PolyFq f((std::size_t)max_deg + 1, Fe{0});
            for (std::size_t i = 0; i < f.size(); ++i) f[i] = idx[i] == 0 ? Fe{0} : pool[idx[i] - 1];
            if (auto r = try_lambda(locs, u, std::move(f), LambdaKind::NonzeroForGRS, e)) return r;
            std::size_t d = 0;
            for (;; ++d) {
                if (d == idx.size()) return std::nullopt;
                if (++idx[d] <= pool.size()) break;
                idx[d] = 0;
            }
        }
    }
    return std::nullopt;
}

/// Ordered search for a monic witness of exact degree L (extended codes).
inline std::optional<WitnessResult> search_witness_egrs(const FVector& locs, const FVector& u, u64 e,
                                                        std::size_t L, const std::vector<Fe>& pool,
                                                        const std::vector<Fe>& complement) {
    const FieldCtx& F = *locs.ctx;
    GaloisCase gc = classify_case(F, e);
    if (L == 0) return try_lambda(locs, u, {F.one()}, LambdaKind::MonicForEGRS, e);
    std::vector<PolyFq> heads;  // monic building blocks of degree <= L
    heads.push_back({F.one()});
    if (!complement.empty() && complement.size() <= L) {
        PolyFq base{F.one()};
        for (Fe z : complement) base = poly_mul(F, base, PolyFq{F.neg(z), F.one()});
        heads.push_back(std::move(base));
    }
    for (const PolyFq& head : heads) {
        std::size_t d = L - (head.size() - 1);
        if (d == 0) {
            if (auto r = try_lambda(locs, u, head, LambdaKind::MonicForEGRS, e)) return r;
            continue;
        }
        // x^d filler
        {
            PolyFq mono(d + 1, Fe{0});
            mono[d] = F.one();
            if (auto r = try_lambda(locs, u, poly_mul(F, head, mono), LambdaKind::MonicForEGRS, e)) return r;
        }
        // root-free fillers matching the case divisibility
        if (d >= 2) {
            if (auto nr = noroot_poly_over(F, d, pool, locs.e))
                if (auto r = try_lambda(locs, u, poly_mul(F, head, *nr), LambdaKind::MonicForEGRS, e)) return r;
        }
        if (d % 2 == 0 && d >= 4) {
            if (auto nr = noroot_poly_over(F, d / 2, pool, locs.e)) {
                PolyFq sq = poly_mul(F, *nr, *nr);
                if (auto r = try_lambda(locs, u, poly_mul(F, head, sq), LambdaKind::MonicForEGRS, e)) return r;
            }
        }
        u64 ps1 = detail::pow_u64(F.p(), gc.s) + 1;
        if (gc.which == 3 && d % ps1 == 0 && d / ps1 >= 2) {
            if (auto nr = noroot_poly_over(F, d / ps1, pool, locs.e)) {
                PolyFq pw = poly_pow(F, *nr, ps1);
                if (auto r = try_lambda(locs, u, poly_mul(F, head, pw), LambdaKind::MonicForEGRS, e)) return r;
            }
        }
    }
    // degree-1 coset scan: lambda = x + c over the whole field
    if (L == 1) {
        for (u64 c = 0; c < F.q(); ++c)
            if (auto r = try_lambda(locs, u, PolyFq{Fe{(u32)c}, F.one()}, LambdaKind::MonicForEGRS, e)) return r;
    }
    // small exhaustive sweep over monic polynomials with pool coefficients
    double count = 1;
    for (std::size_t i = 0; i < L; ++i) {
        count *= (double)(pool.size() + 1);
        if (count > 4096) break;
    }
    if (count <= 4096) {
        std::vector<std::size_t> idx(L, 0);
        for (;;) {
            PolyFq f(L + 1, Fe{0});
            f[L] = F.one();
            for (std::size_t i = 0; i < L; ++i) f[i] = idx[i] == 0 ? Fe{0} : pool[idx[i] - 1];
            if (auto r = try_lambda(locs, u, std::move(f), LambdaKind::MonicForEGRS, e)) return r;
            std::size_t d = 0;
            for (;; ++d) {
                if (d == idx.size()) return std::nullopt;
                if (++idx[d] <= pool.size()) break;
                idx[d] = 0;
            }
        }
    }
    return std::nullopt;
}

inline std::vector<Fe> nonzero_pool(const FieldCtx& F, const std::vector<Fe>& subset) {
    std::vector<Fe> pool;
    for (Fe x : subset)
        if (!F.is_zero(x)) pool.push_back(x);
    return pool;
}

inline std::vector<Fe> default_pool(const FieldCtx& F) {
    std::vector<Fe> pool;
    u64 cap = std::min<u64>(F.q(), 1025);
    for (u64 v = 1; v < cap; ++v) pool.push_back(Fe{(u32)v});
    return pool;
}

inline std::vector<Fe> set_complement(const std::vector<Fe>& super, const std::vector<Fe>& sub) {
    std::set<Fe> in(sub.begin(), sub.end());
    std::vector<Fe> out;
    for (Fe x : super)
        if (!in.count(x)) out.push_back(x);
    return out;
}

/// Candidate locator subsets of a subfield (given as the sorted element
/// list), in search order: the plain prefix, roots of unity mu_n, the
/// classical {0} plus mu_{n-1}, and the prefix avoiding zero. Roots of unity
/// give the u-vector extra multiplicative structure, which several witness
/// families need.
inline std::vector<std::vector<Fe>> candidate_locator_sets(const FieldCtx& F, const std::vector<Fe>& sub,
                                                           std::size_t n) {
    std::vector<std::vector<Fe>> out;
    if (n > sub.size()) return out;
    out.emplace_back(sub.begin(), sub.begin() + (long)n);
    u64 subq = sub.size();  // p^s
    auto mu = [&](u64 count) {
        // count-th roots of unity inside the subfield
        std::vector<Fe> r;
        u64 step = (F.q() - 1) / count;
        for (u64 j = 0; j < count; ++j) r.push_back(F.exp(j * step));
        std::sort(r.begin(), r.end());
        return r;
    };
    if (n >= 2 && (subq - 1) % n == 0) out.push_back(mu(n));
    if (n >= 3 && (subq - 1) % (n - 1) == 0) {
        std::vector<Fe> r = mu(n - 1);
        r.insert(r.begin(), Fe{0});
        out.push_back(std::move(r));
    }
    if (n + 1 <= sub.size()) {
        std::vector<Fe> r;
        for (Fe x : sub)
            if (!F.is_zero(x) && r.size() < n) r.push_back(x);
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace detail

// -- affine-Frobenius construction (lengths <= p^s + 1) ------------------------

/// Largest dimension the affine construction reaches at total length n.
inline std::size_t affine_max_k(std::size_t n) { return n / 2; }

inline CertifiedCode construct_affine(const ConstructionRequest& req) {
    const FieldCtx& F = *req.ctx;
    u64 e = req.e % F.m();
    u64 ee = effective_e(F, e);
    GaloisCase gc = classify_case(F, ee);
    Fe scale = req.affine_scale.value_or(F.one());
    Fe shift = req.affine_shift.value_or(F.zero());
    std::vector<Fe> S = F.affine_frobenius_set(scale, shift, ee);
    require(req.n >= 2, errc::bad_dimension, "length must be at least 2");
    require(req.n <= S.size() + 1, errc::not_enough_locators,
            "affine set has only " + std::to_string(S.size()) + " elements");
    bool extended = req.n == S.size() + 1;
    std::size_t nloc = extended ? req.n - 1 : req.n;
    require(nloc >= 2, errc::not_enough_locators, "need at least two locators");
    require(req.k >= 1 && req.k <= affine_max_k(req.n), errc::k_out_of_range,
            "affine construction needs k <= floor(n/2)");

    // normalize the affine set: S = x0 + c F_{p^s}, work with subfield points
    // and carry the multipliers back through the equivalence transform
    Fe origin = S[0];
    Fe c = F.sub(S[1], S[0]);
    std::vector<Fe> sub = F.subfield_elements(gc.s);
    std::vector<Fe> pool = detail::nonzero_pool(F, sub);

    std::optional<detail::WitnessResult> wit;
    FVector chosen{req.ctx, {}};
    for (const auto& base_set : detail::candidate_locator_sets(F, sub, nloc)) {
        // shift variants, extended codes prefer zero-free normalized points
        std::vector<Fe> shifts{F.zero()};
        if (extended) {
            bool has_zero = false;
            for (Fe x : base_set) has_zero |= F.is_zero(x);
            if (has_zero) {
                for (Fe b : pool) {
                    bool ok = true;
                    for (Fe x : base_set) ok &= !F.is_zero(F.add(x, b));
                    if (ok) {
                        shifts.push_back(b);
                        break;
                    }
                }
                if (gc.which == 1 && nloc == sub.size()) {
                    // H = F_q^*: any zero-avoiding shift works, even outside
                    // the subfield
                    for (u64 b = 1; b < F.q(); ++b) {
                        bool ok = true;
                        for (Fe x : base_set) ok &= !F.is_zero(F.add(x, Fe{(u32)b}));
                        if (ok) {
                            shifts.push_back(Fe{(u32)b});
                            break;
                        }
                    }
                }
            }
        }
        for (Fe b : shifts) {
            FVector t{req.ctx, base_set};
            for (auto& x : t.e) x = F.add(x, b);
            if (extended) {
                bool has_zero = false;
                for (Fe x : t.e) has_zero |= F.is_zero(x);
                if (has_zero && b != F.zero()) continue;
            }
            FVector u = u_vector(t);
            std::vector<Fe> comp;
            if (b == F.zero()) comp = detail::set_complement(sub, t.e);
            if (!extended) {
                long long max_deg = (long long)nloc - 2 * (long long)req.k;
                if (gc.which != 2)
                    wit = detail::try_lambda(t, u, {F.one()}, LambdaKind::NonzeroForGRS, ee);
                if (!wit) wit = detail::search_witness_grs(t, u, ee, max_deg, pool, comp);
            } else {
                std::size_t L = nloc - 2 * req.k + 1;
                wit = detail::search_witness_egrs(t, u, ee, L, pool, comp);
            }
            if (wit) {
                chosen = t;
                break;
            }
        }
        if (wit) break;
    }
    if (!wit) fail(errc::witness_not_in_h, "no self-orthogonality witness over these locators");

    GrsSpec spec;
    spec.ctx = req.ctx;
    spec.k = req.k;
    spec.extended = extended;
    spec.a = FVector{req.ctx, std::vector<Fe>(nloc)};
    for (std::size_t i = 0; i < nloc; ++i) spec.a.e[i] = F.add(F.mul(c, chosen[i]), origin);
    spec.v = wit->v;
    if (extended) {
        // GRS_k(t, v, inf) = GRS_k(c t + x0, c^{1-k} v, inf)
        Fe lam = F.inv(F.pow(c, req.k - 1));
        for (auto& x : spec.v.e) x = F.mul(lam, x);
    }
    return certify(std::move(spec), e);
}

// -- coset-sum construction (lengths p^s + 2 .. p^{2s}) ------------------------

inline CertifiedCode construct_coset_sum(const ConstructionRequest& req) {
    const FieldCtx& F = *req.ctx;
    u64 e = req.e % F.m();
    u64 ee = effective_e(F, e);
    GaloisCase gc = classify_case(F, ee);
    require(gc.which == 1 || gc.which == 2, errc::case_hypothesis_failed,
            "coset sums need m/s odd");
    u64 ps = detail::pow_u64(F.p(), gc.s);
    const auto& part = req.partition;
    require(part.size() >= 2, errc::bad_partition, "need at least two blocks");
    require(part.size() <= ps, errc::bad_partition, "at most p^s blocks");
    std::size_t total = 0;
    for (std::size_t ni : part) {
        require(ni >= 1 && ni <= ps, errc::bad_partition, "block sizes must be in [1, p^s]");
        total += ni;
    }
    require(total == req.n, errc::bad_partition, "partition does not sum to n");
    std::size_t kcap = ps + 1;
    for (std::size_t ni : part) kcap = std::min(kcap, ni / 2);
    require(req.k >= 1 && req.k <= kcap, errc::k_out_of_range,
            "coset construction needs k <= min floor(n_i/2)");

    std::vector<Fe> sub = F.subfield_elements(gc.s);
    Fe zeta;
    {
        std::set<Fe> in(sub.begin(), sub.end());
        u64 v = 0;
        while (in.count(Fe{(u32)v})) ++v;
        zeta = Fe{(u32)v};
    }
    GrsSpec spec;
    spec.ctx = req.ctx;
    spec.k = req.k;
    spec.extended = false;
    spec.a.ctx = spec.v.ctx = req.ctx;
    std::vector<Fe> pool = detail::nonzero_pool(F, sub);
    for (std::size_t b = 0; b < part.size(); ++b) {
        std::size_t ni = part[b];
        Fe off = F.mul(sub[b], zeta);
        std::optional<detail::WitnessResult> wit;
        FVector chosen{req.ctx, {}};
        long long max_deg = (long long)ni - 2 * (long long)req.k;
        for (const auto& base_set : detail::candidate_locator_sets(F, sub, ni)) {
            FVector t{req.ctx, base_set};
            FVector u = u_vector(t);
            std::vector<Fe> comp = detail::set_complement(sub, t.e);
            if (gc.which == 1) wit = detail::try_lambda(t, u, {F.one()}, LambdaKind::NonzeroForGRS, ee);
            if (!wit) wit = detail::search_witness_grs(t, u, ee, max_deg, pool, comp);
            if (wit) {
                chosen = t;
                break;
            }
        }
        if (!wit) fail(errc::block_witness_missing, "no witness for block " + std::to_string(b));
        for (std::size_t i = 0; i < ni; ++i) {
            spec.a.e.push_back(F.add(chosen[i], off));
            spec.v.e.push_back(wit->v[i]);
        }
    }
    return certify(std::move(spec), e);
}

/// Case-1 fallback for arbitrary locators: with H = F_q^* the constant
/// witness works for every k below the general bracket.
inline CertifiedCode construct_lambda1(const ConstructionRequest& req) {
    const FieldCtx& F = *req.ctx;
    u64 e = req.e % F.m();
    u64 ee = effective_e(F, e);
    GaloisCase gc = classify_case(F, ee);
    require(gc.which == 1, errc::case_hypothesis_failed, "constant witness needs H = F_q^*");
    require(req.n >= 2 && req.n <= F.q(), errc::not_enough_locators, "length must be in [2, q]");
    require(req.k >= 1 && req.k <= lambda_bracket_max_k(F, req.n, ee, false), errc::k_out_of_range,
            "k above the lambda bracket");
    FVector a{req.ctx, {}};
    for (u64 v = 0; v < req.n; ++v) a.e.push_back(Fe{(u32)v});
    FVector u = u_vector(a);
    auto wit = detail::try_lambda(a, u, {F.one()}, LambdaKind::NonzeroForGRS, ee);
    require(wit.has_value(), errc::witness_not_in_h, "constant witness failed");
    GrsSpec spec{req.ctx, a, wit->v, req.k, false};
    return certify(std::move(spec), e);
}

// -- Hermitian lift (m/s even, lengths p^{2s} and p^{2s} + 1) -------------------

/// Finds a self-orthogonal base spec over the given (sub)field by the
/// deterministic lambda search; eBase = 0 gives Euclidean bases, eBase = s
/// Hermitian ones over F_{p^{2s}}.
inline std::optional<GrsSpec> base_witness_search(const FieldCtx& sub, u64 eBase, std::size_t n,
                                                  std::size_t k, bool extended) {
    std::size_t nloc = extended ? n - 1 : n;
    if (nloc < 2 || nloc > sub.q() || k < 1) return std::nullopt;
    u64 pe = detail::pow_u64(sub.p(), eBase % sub.m());
    std::vector<Fe> all;
    for (u64 v = 0; v < sub.q(); ++v) all.push_back(Fe{(u32)v});
    std::vector<Fe> pool = detail::default_pool(sub);

    // candidate locator sets: the smallest subfield that fits (its points are
    // sigma^e-fixed, unlocking the affine degree bound), roots of unity,
    // then plain prefixes
    std::vector<std::vector<Fe>> cands;
    for (u64 s = 1; s <= sub.m(); ++s) {
        if (sub.m() % s) continue;
        std::vector<Fe> sf = sub.subfield_elements(s);
        if (sf.size() >= nloc) {
            for (auto& c : detail::candidate_locator_sets(sub, sf, nloc)) cands.push_back(std::move(c));
            break;
        }
    }
    for (auto& c : detail::candidate_locator_sets(sub, all, nloc)) cands.push_back(std::move(c));

    for (const auto& set : cands) {
        FVector a{&sub, set};
        FVector u = u_vector(a);
        std::vector<Fe> comp = detail::set_complement(all, a.e);
        std::optional<detail::WitnessResult> wit;
        if (!extended) {
            long long max_deg = (long long)nloc - (long long)(k - 1) * (long long)(pe + 1) - 2;
            if (detect_affine_frobenius(a, eBase))
                max_deg = std::max(max_deg, (long long)nloc - 2 * (long long)k);
            wit = detail::search_witness_grs(a, u, eBase, max_deg, pool, comp);
        } else {
            long long L = (long long)nloc - (long long)(k - 1) * (long long)(pe + 1) - 1;
            if (detect_affine_frobenius(a, eBase))
                L = std::max(L, (long long)nloc - 2 * (long long)k + 1);
            if (L < 0) continue;
            wit = detail::search_witness_egrs(a, u, eBase, (std::size_t)L, pool, comp);
        }
        if (wit) {
            GrsSpec out{&sub, a, wit->v, k, extended};
            if (gram_report(out, eBase).is_zero) return out;
        }
    }
    return std::nullopt;
}

/// Embedding of the base field into F_q: the base root maps to the least
/// root of the base modulus inside F_q.
inline Fe subfield_embedding_root(const FieldCtx& F, const FieldCtx& sub) {
    require(F.p() == sub.p() && F.m() % sub.m() == 0, errc::embedding_failure,
            "base field is not a subfield");
    PolyFq f;
    for (u32 c : sub.modulus()) f.push_back(Fe{c % (u32)F.p()});
    for (u64 v = 0; v < F.q(); ++v) {
        Fe x{(u32)v};
        if (F.is_zero(poly_eval(F, f, x))) return x;
    }
    fail(errc::embedding_failure, "base modulus has no root in F_q");
}

inline Fe embed_element(const FieldCtx& F, const FieldCtx& sub, Fe rho, Fe x) {
    std::vector<u32> d = sub.digits(x);
    Fe acc{0}, pw = F.one();
    for (u64 i = 0; i < sub.m(); ++i) {
        acc = F.add(acc, F.mul(Fe{d[i]}, pw));
        pw = F.mul(pw, rho);
    }
    return acc;
}

inline CertifiedCode construct_hermitian_lift(const ConstructionRequest& req, const FieldCtx& sub) {
    const FieldCtx& F = *req.ctx;
    u64 e = req.e % F.m();
    u64 ee = effective_e(F, e);
    GaloisCase gc = classify_case(F, ee);
    require(gc.which == 3, errc::case_hypothesis_failed, "Hermitian lift needs m/s even");
    require(sub.p() == F.p() && sub.m() == 2 * gc.s, errc::embedding_failure,
            "base field must be F_{p^{2s}}");
    u64 Q = sub.q();
    require(req.n >= 2 && req.n <= Q + 1, errc::not_enough_locators, "length must be in [2, p^{2s}+1]");
    bool extended = req.n == Q + 1;
    auto base = base_witness_search(sub, gc.s, req.n, req.k, extended);
    if (!base) fail(errc::no_base_code, "no Hermitian self-orthogonal base of these parameters");
    Fe rho = subfield_embedding_root(F, sub);
    GrsSpec spec;
    spec.ctx = req.ctx;
    spec.k = req.k;
    spec.extended = base->extended;
    spec.a.ctx = spec.v.ctx = req.ctx;
    for (Fe x : base->a.e) spec.a.e.push_back(embed_element(F, sub, rho, x));
    for (Fe x : base->v.e) spec.v.e.push_back(embed_element(F, sub, rho, x));
    return certify(std::move(spec), e);
}

// -- theta-block construction ---------------------------------------------------

namespace detail {

inline std::optional<std::vector<Fe>> all_nonzero_null(const FieldCtx& F, const std::vector<FVector>& basis,
                                                       u64 seed) {
    if (basis.empty()) return std::nullopt;
    std::size_t len = basis[0].size();
    auto all_nonzero = [&](const std::vector<Fe>& x) {
        for (Fe c : x)
            if (F.is_zero(c)) return false;
        return true;
    };
    for (const FVector& b : basis)
        if (all_nonzero(b.e)) return b.e;
    if (basis.size() >= 2) {
        // deterministic pair sweep, then seeded random combinations
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < basis.size(); ++j) {
                if (i == j) continue;
                for (u64 c = 1; c < F.q(); ++c) {
                    std::vector<Fe> x(len);
                    for (std::size_t t = 0; t < len; ++t)
                        x[t] = F.add(basis[i][t], F.mul(Fe{(u32)c}, basis[j][t]));
                    if (all_nonzero(x)) return x;
                }
            }
        std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
        for (int tries = 0; tries < 4096; ++tries) {
            std::vector<Fe> x(len, Fe{0});
            for (const FVector& b : basis) {
                Fe c{(u32)(1 + rng() % (F.q() - 1))};
                for (std::size_t t = 0; t < len; ++t) x[t] = F.add(x[t], F.mul(c, b[t]));
            }
            if (all_nonzero(x)) return x;
        }
    }
    return std::nullopt;
}

}  // namespace detail

inline CertifiedCode construct_theta_blocks(const ConstructionRequest& req) {
    const FieldCtx& F = *req.ctx;
    u64 e = req.e % F.m();
    u64 ee = effective_e(F, e);
    GaloisCase gc = classify_case(F, ee);
    require(F.p() == 2, errc::case_hypothesis_failed, "theta blocks need p even");
    require(gc.s == ee && ee >= 1, errc::case_hypothesis_failed, "theta blocks need s = e >= 1");
    require(gc.which == 1, errc::case_hypothesis_failed, "theta blocks need m/e odd");
    u64 pe = detail::pow_u64(F.p(), ee);
    std::size_t r = req.r.value_or(0);
    require(r >= 1 && r <= pe + 1, errc::precondition_violated, "r must be in [1, p^e+1]");
    std::size_t n = r * (pe - 1) + 1;
    require(req.n == 0 || req.n == n, errc::bad_dimension, "theta length is r(p^e-1)+1");
    std::size_t tcap = (std::size_t)((pe + r - 1) / 2);
    require(req.k >= 1 && req.k <= tcap, errc::k_out_of_range, "k above floor((p^e+r-1)/2)");

    // exact divisibility pattern: which u have u(p^e-1) = p^e i + j for some
    // 0 <= i, j < k
    std::vector<u64> us;
    {
        std::set<u64> uset;
        for (std::size_t i = 0; i < req.k; ++i)
            for (std::size_t j = 0; j < req.k; ++j) {
                u64 T = pe * i + j;
                if (T % (pe - 1) == 0) uset.insert(T / (pe - 1));
            }
        us.assign(uset.begin(), uset.end());
    }
    Fe alpha = F.pow(F.w(), pe - 1);
    FMatrix B(F, us.size(), r + 1);
    for (std::size_t row = 0; row < us.size(); ++row) {
        u64 uu = us[row];
        if (uu == 0) {
            for (std::size_t l = 0; l <= r; ++l) B.at(row, l) = F.one();
        } else {
            B.at(row, 0) = F.zero();
            for (std::size_t l = 1; l <= r; ++l) B.at(row, l) = F.pow(alpha, uu * l);
        }
    }
    RrefResult rr = rref_kernel(B);
    auto x = detail::all_nonzero_null(F, rr.nullspace, req.seed);
    if (!x)
        fail(errc::no_all_nonzero_solution,
             "theta system admits no all-nonzero solution at this (r, k)");

    Fe theta = F.pow(F.w(), (F.q() - 1) / (pe - 1));
    GrsSpec spec;
    spec.ctx = req.ctx;
    spec.k = req.k;
    spec.extended = false;
    spec.a.ctx = spec.v.ctx = req.ctx;
    spec.a.e.push_back(F.zero());
    Fe peminus1 = F.zero();
    for (u64 i = 0; i < pe - 1; ++i) peminus1 = F.add(peminus1, F.one());
    require(F.h_subgroup(ee).gcd_qm1 == 1, errc::case_hypothesis_failed, "theta blocks need H = F_q^*");
    spec.v.e.push_back(F.galois_root(F.mul((*x)[0], peminus1), ee));
    for (std::size_t l = 1; l <= r; ++l) {
        Fe vl = F.galois_root((*x)[l], ee);
        Fe wl = F.pow(F.w(), l);
        for (u64 nu = 0; nu < pe - 1; ++nu) {
            spec.a.e.push_back(F.mul(wl, F.pow(theta, nu)));
            spec.v.e.push_back(vl);
        }
    }
    return certify(std::move(spec), e);
}

/// Largest k the theta construction actually attains at this r.
inline std::size_t theta_max_k(const FieldCtx& F, u64 e, std::size_t r, u64 seed = 0) {
    u64 pe = detail::pow_u64(F.p(), effective_e(F, e));
    for (std::size_t k = (std::size_t)((pe + r - 1) / 2); k >= 1; --k) {
        ConstructionRequest rq;
        rq.ctx = &F;
        rq.e = e;
        rq.k = k;
        rq.r = r;
        rq.seed = seed;
        try {
            (void)construct_theta_blocks(rq);
            return k;
        } catch (const error&) {
            continue;
        }
    }
    return 0;
}

// -- full-length construction (n = q + 1) --------------------------------------

/// Dimension ceiling of the q+1 construction per case; the isolated extra
/// dimension (q-1)/(p^e+1) + 1 exists when s = e.
inline std::size_t qplus1_max_k(const FieldCtx& F, u64 e) {
    u64 ee = effective_e(F, e);
    GaloisCase gc = classify_case(F, ee);
    u64 pe = detail::pow_u64(F.p(), ee);
    u64 q = F.q();
    switch (gc.which) {
        case 1: return (std::size_t)((q + pe - 2) / (pe + 1));
        case 2: return (std::size_t)((q + pe - 4) / (pe + 1));
        default: return (std::size_t)((q + pe - 2 * (detail::pow_u64(F.p(), gc.s) + 1)) / (pe + 1));
    }
}

inline std::optional<std::size_t> qplus1_isolated_k(const FieldCtx& F, u64 e) {
    u64 ee = effective_e(F, e);
    GaloisCase gc = classify_case(F, ee);
    if (gc.which != 3 || gc.s != ee) return std::nullopt;
    u64 pe = detail::pow_u64(F.p(), ee);
    return (std::size_t)((F.q() - 1) / (pe + 1) + 1);
}

inline CertifiedCode construct_q_plus_1(const ConstructionRequest& req) {
    const FieldCtx& F = *req.ctx;
    u64 e = req.e % F.m();
    u64 ee = effective_e(F, e);
    GaloisCase gc = classify_case(F, ee);
    u64 pe = detail::pow_u64(F.p(), ee);
    u64 q = F.q();
    require(req.n == 0 || req.n == q + 1, errc::bad_dimension, "this construction has length q+1");
    std::size_t kmax = qplus1_max_k(F, e);
    auto kiso = qplus1_isolated_k(F, e);
    bool isolated = kiso && req.k == *kiso && req.k > kmax;
    require(req.k >= 1 && (req.k <= kmax || isolated), errc::k_out_of_range,
            "k outside the q+1 dimension range");

    u64 l = q - (u64)(req.k - 1) * (pe + 1) - 1;
    PolyFq lam;
    if (isolated) {
        require(l == 0, errc::verification_failed, "isolated dimension must have degree zero");
        lam = {F.one()};
    } else {
        switch (gc.which) {
            case 1:
                require(l >= 2, errc::k_out_of_range, "degree budget too small");
                lam = noroot_poly(F, l);
                break;
            case 2:
                require(l % 2 == 0 && l >= 4, errc::verification_failed,
                        "case-2 degree must be an even number >= 4");
                lam = poly_pow(F, noroot_poly(F, l / 2), 2);
                break;
            default: {
                u64 ps1 = detail::pow_u64(F.p(), gc.s) + 1;
                require(l % ps1 == 0 && l / ps1 >= 2, errc::verification_failed,
                        "case-3 degree must be a multiple of p^s+1, quotient >= 2");
                lam = poly_pow(F, noroot_poly(F, l / ps1), ps1);
                break;
            }
        }
    }
    GrsSpec spec;
    spec.ctx = req.ctx;
    spec.k = req.k;
    spec.extended = true;
    spec.a.ctx = spec.v.ctx = req.ctx;
    for (u64 v = 0; v < q; ++v) spec.a.e.push_back(Fe{(u32)v});
    spec.v.e.resize(q);
    // u_i = -1 over the full field, so v_i^{p^e+1} = -lambda(a_i) u_i = lambda(a_i)
    for (u64 i = 0; i < q; ++i) spec.v.e[i] = F.galois_root(poly_eval(F, lam, Fe{(u32)i}), ee);
    return certify(std::move(spec), e);
}

// -- exponent transfer ----------------------------------------------------------

inline CertifiedCode transfer_eprime(const CertifiedCode& base, u64 e) {
    const FieldCtx& F = *base.spec.ctx;
    u64 eb = base.e % F.m(), en = e % F.m();
    require(std::gcd(eb, F.m()) == std::gcd(en, F.m()), errc::gcd_mismatch,
            "transfer needs gcd(e, m) = gcd(e', m)");
    require(!base.spec.extended, errc::precondition_violated, "transfer operates on plain GRS codes");
    u64 ee = effective_e(F, eb);
    std::optional<LambdaWitness> lamw;
    try {
        lamw = multipliers_to_lambda(base.spec, ee);
    } catch (const error&) {
        lamw.reset();
    }
    if (!lamw) fail(errc::no_lambda_witness, "base code has no witness in the bracket");
    u64 pe_new = detail::pow_u64(F.p(), effective_e(F, en));
    long long d = lamw->degree(F);
    std::size_t n = base.spec.nloc();
    std::size_t kmax = (std::size_t)(((long long)n + (long long)pe_new - 1 - d) / (long long)(pe_new + 1));
    require(base.spec.k <= n, errc::bad_dimension, "bad base");
    std::size_t k = std::min(base.spec.k, kmax);
    require(k >= 1, errc::k_out_of_range, "transferred dimension bound is empty");
    // same H on both sides: the witness values transfer verbatim
    require(std::gcd(detail::pow_u64(F.p(), ee) + 1, F.q() - 1) ==
                std::gcd(pe_new + 1, F.q() - 1),
            errc::gcd_mismatch, "subgroup mismatch");
    auto res = lambda_to_multipliers(base.spec.a, *lamw, effective_e(F, en));
    auto* v = std::get_if<FVector>(&res);
    if (!v) fail(errc::no_lambda_witness, "witness values left H during transfer");
    GrsSpec spec{base.spec.ctx, base.spec.a, *v, k, false};
    return certify(std::move(spec), en);
}

/// Dimension bound of the transfer rule for a base witness of degree d.
inline std::size_t transfer_max_k(const FieldCtx& F, std::size_t n, u64 e, long long deg_lambda) {
    u64 pe = detail::pow_u64(F.p(), effective_e(F, e));
    long long num = (long long)n + (long long)pe - 1 - deg_lambda;
    return num < 0 ? 0 : (std::size_t)(num / (long long)(pe + 1));
}

// -- subcodes -------------------------------------------------------------------

inline CertifiedCode subcode(const CertifiedCode& base, std::size_t k) {
    const FieldCtx& F = *base.spec.ctx;
    require(k >= 1 && k <= base.spec.k, errc::bad_dimension, "subcode dimension out of range");
    if (k == base.spec.k) return certify(base.spec, base.e);
    if (!base.spec.extended) {
        GrsSpec spec = base.spec;
        spec.k = k;
        return certify(std::move(spec), base.e);
    }
    // extended: GRS_k(a, a^{k'-k} * v, inf) needs nonzero locators
    GrsSpec work = base.spec;
    bool has_zero = false;
    for (Fe x : work.a.e) has_zero |= F.is_zero(x);
    if (has_zero && work.nloc() < F.q()) {
        for (u64 c = 1; c < F.q(); ++c) {
            bool ok = true;
            for (Fe x : work.a.e) ok &= !F.is_zero(F.add(x, Fe{(u32)c}));
            if (ok) {
                work = equiv_transform(work, F.one(), Fe{(u32)c}, std::nullopt);
                break;
            }
        }
        has_zero = false;
        for (Fe x : work.a.e) has_zero |= F.is_zero(x);
    }
    if (!has_zero) {
        GrsSpec spec = work;
        spec.k = k;
        for (std::size_t i = 0; i < spec.nloc(); ++i)
            spec.v.e[i] = F.mul(spec.v.e[i], F.pow(spec.a[i], base.spec.k - k));
        return certify(std::move(spec), base.e);
    }
    // full-length extended code: multiply the witness by a root-free monic
    // factor of the degree gap instead
    u64 ee = effective_e(F, base.e);
    u64 pe = detail::pow_u64(F.p(), ee);
    GaloisCase gc = classify_case(F, ee);
    std::optional<LambdaWitness> lamw;
    try {
        lamw = multipliers_to_lambda(base.spec, ee);
    } catch (const error&) {
        lamw.reset();
    }
    if (!lamw) fail(errc::no_lambda_witness, "full-length subcode needs a recoverable witness");
    u64 gap = (u64)(base.spec.k - k) * (pe + 1);
    PolyFq mu;
    if (gc.which == 1) {
        mu = noroot_poly(F, gap);
    } else if (gc.which == 2) {
        mu = poly_pow(F, noroot_poly(F, gap / 2), 2);
    } else {
        u64 ps1 = detail::pow_u64(F.p(), gc.s) + 1;
        if (gap % ps1 != 0 || gap / ps1 < 2)
            fail(errc::bad_dimension, "no H-preserving factor bridges this dimension gap");
        mu = poly_pow(F, noroot_poly(F, gap / ps1), ps1);
    }
    LambdaWitness lw{poly_mul(F, lamw->lam, mu), LambdaKind::MonicForEGRS};
    auto res = lambda_to_multipliers(base.spec.a, lw, ee);
    auto* v = std::get_if<FVector>(&res);
    if (!v) fail(errc::no_lambda_witness, "witness extension left H");
    GrsSpec spec{base.spec.ctx, base.spec.a, *v, k, true};
    return certify(std::move(spec), base.e);
}

// -- parameter enumeration --------------------------------------------------------

struct ParamRow {
    u64 p = 0, m = 0, e = 0;
    std::size_t n = 0;
    std::size_t k_max = 0;
    std::string method;
    bool verified = false;
};

namespace detail {

/// Constructs the row's k_max code and Gram-checks it; k is walked down from
/// the formula value until a construction succeeds.
inline std::optional<ParamRow> probe_row(const FieldCtx& F, u64 e, Method method, std::size_t n,
                                         std::size_t k_from, const std::vector<std::size_t>& partition,
                                         std::optional<std::size_t> r, const char* label,
                                         bool walk_down = true) {
    for (std::size_t k = k_from; k >= 1; --k) {
        ConstructionRequest rq;
        rq.ctx = &F;
        rq.e = e;
        rq.n = n;
        rq.k = k;
        rq.method = method;
        rq.partition = partition;
        rq.r = r;
        try {
            (void)construct(rq);
            return ParamRow{F.p(), F.m(), e, n, k, label, true};
        } catch (const error&) {
            if (!walk_down) break;
            continue;
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// Best-achievable (n, k_max) rows per construction method at this exponent.
/// Rows with q <= verify_limit are backed by an actual construction plus a
/// Gram check; above the limit the closed-form values are emitted unverified.
inline std::vector<ParamRow> enumerate_params(const FieldCtx& F, u64 e, std::size_t max_n = 0,
                                              u64 verify_limit = u64(1) << 13) {
    if (max_n == 0) max_n = F.q() + 1;
    u64 ee = effective_e(F, e % F.m());
    GaloisCase gc = classify_case(F, ee);
    u64 pe = detail::pow_u64(F.p(), ee);
    u64 ps = detail::pow_u64(F.p(), gc.s);
    bool verify = F.q() <= verify_limit;
    std::vector<ParamRow> rows;
    auto push_formula = [&](Method, std::size_t n, std::size_t k, const char* label) {
        if (k >= 1 && n <= max_n) rows.push_back(ParamRow{F.p(), F.m(), e % F.m(), n, k, label, false});
    };
    auto push = [&](Method method, std::size_t n, std::size_t k_from,
                    const std::vector<std::size_t>& part, std::optional<std::size_t> r, const char* label,
                    bool walk_down = true) {
        if (n > max_n || k_from < 1) return;
        if (!verify) {
            push_formula(method, n, k_from, label);
            return;
        }
        if (auto row = detail::probe_row(F, e % F.m(), method, n, k_from, part, r, label, walk_down))
            rows.push_back(*row);
    };

    // affine rows: lengths up to p^s + 1 (one representative row at e = 0,
    // where the "subfield" is the whole field)
    {
        std::size_t top = (std::size_t)std::min<u64>(ps + 1, F.q());
        std::size_t lo = 2;
        if (ee == 0) lo = top = (std::size_t)std::min<u64>(F.q(), max_n);
        for (std::size_t n = lo; n <= top; ++n)
            push(Method::AffineFrobenius, n, affine_max_k(n), {}, std::nullopt, "affine");
    }
    // coset rows at n = r p^s with balanced blocks
    if ((gc.which == 1 || gc.which == 2) && ee >= 1) {
        for (u64 r = 2; r <= ps; ++r) {
            std::size_t n = (std::size_t)(r * ps);
            std::vector<std::size_t> part(r, (std::size_t)ps);
            push(Method::SubfieldCosets, n, (std::size_t)(ps / 2), part, std::nullopt, "coset");
        }
    }
    // the constant-witness branch at its longest length
    if (gc.which == 1) {
        std::size_t n = (std::size_t)std::min<u64>(F.q(), max_n);
        if (n >= 2) push(Method::Lambda1, n, lambda_bracket_max_k(F, n, ee, false), {}, std::nullopt, "lambda1");
    }
    // Hermitian lift rows at the base-field lengths p^{2s} and p^{2s} + 1
    if (gc.which == 3) {
        u64 Q = ps * ps;
        push(Method::HermitianLift, (std::size_t)Q, (std::size_t)(ps - 1), {}, std::nullopt, "hermitian");
        push(Method::HermitianLift, (std::size_t)(Q + 1), (std::size_t)ps, {}, std::nullopt, "hermitian");
    }
    // theta rows n = r(p^e - 1) + 1
    if (gc.which == 1 && gc.s == ee && ee >= 1) {
        for (std::size_t r = 1; r <= pe + 1; ++r) {
            std::size_t n = r * ((std::size_t)pe - 1) + 1;
            if (n < 2) continue;
            push(Method::ThetaBlocks, n, (std::size_t)((pe + r - 1) / 2), {}, r, "theta");
        }
    }
    // full-length rows
    {
        std::size_t kmax = qplus1_max_k(F, e);
        if (kmax >= 1) push(Method::LengthQPlus1, (std::size_t)F.q() + 1, kmax, {}, std::nullopt, "qplus1");
        if (auto kiso = qplus1_isolated_k(F, e))
            if (*kiso > kmax)
                push(Method::LengthQPlus1, (std::size_t)F.q() + 1, *kiso, {}, std::nullopt, "qplus1iso",
                     false);
    }
    std::sort(rows.begin(), rows.end(), [](const ParamRow& a, const ParamRow& b) {
        return std::tie(a.e, a.n, a.method, a.k_max) < std::tie(b.e, b.n, b.method, b.k_max);
    });
    return rows;
}

// -- request dispatch -----------------------------------------------------------

inline CertifiedCode construct(const ConstructionRequest& req) {
    switch (req.method) {
        case Method::AffineFrobenius: return construct_affine(req);
        case Method::SubfieldCosets:
            return req.partition.empty() ? construct_lambda1(req) : construct_coset_sum(req);
        case Method::Lambda1: return construct_lambda1(req);
        case Method::ThetaBlocks: return construct_theta_blocks(req);
        case Method::LengthQPlus1: return construct_q_plus_1(req);
        case Method::HermitianLift: {
            GaloisCase gc = classify_case(*req.ctx, effective_e(*req.ctx, req.e));
            require(gc.which == 3, errc::case_hypothesis_failed, "Hermitian lift needs m/s even");
            auto sub = FieldCtx::create_ptr(req.ctx->p(), 2 * gc.s);
            return construct_hermitian_lift(req, *sub);
        }
        default: fail(errc::precondition_violated, "transfer/subcode need a base code");
    }
}

}  // namespace gso

#endif

