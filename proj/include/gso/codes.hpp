#ifndef GSO_CODES_HPP
#define GSO_CODES_HPP

/*
 * GRS / extended GRS code objects: generator matrices, the interpolation
 * u-vector, equivalence transforms, the EGRS <-> GRS identity, and exact
 * minimum-distance verification.
 *
 * A GrsSpec with extended = true denotes the length n+1 code whose extra
 * coordinate carries the coefficient of x^{k-1}; the infinity position is
 * structural and never appears among the locators.
 */

#include <optional>
#include <set>
#include <variant>

#include "linalg.hpp"

namespace gso {

struct GrsSpec {
    const FieldCtx* ctx = nullptr;
    FVector a;  ///< distinct locators
    FVector v;  ///< nonzero multipliers, same length as a
    std::size_t k = 0;
    bool extended = false;

    std::size_t nloc() const noexcept { return a.size(); }
    std::size_t length() const noexcept { return a.size() + (extended ? 1 : 0); }

    void validate() const {
        const FieldCtx& F = *ctx;
        require(a.size() == v.size(), errc::length_mismatch, "locator/multiplier length mismatch");
        require(k >= 1 && k <= length(), errc::bad_dimension, "dimension out of range");
        require(length() <= F.q() + 1, errc::bad_dimension, "length exceeds q+1");
        std::set<Fe> seen;
        for (Fe x : a.e)
            require(seen.insert(x).second, errc::duplicate_locator, "locators must be distinct");
        for (Fe x : v.e) require(!F.is_zero(x), errc::zero_multiplier, "multipliers must be nonzero");
    }
};

/// u_i = prod_{j != i} (a_i - a_j)^{-1}. When the locators are all of F_q
/// every u_i is -1, which this takes as a fast path.
inline FVector u_vector(const FVector& a) {
    const FieldCtx& F = *a.ctx;
    std::size_t n = a.size();
    require(n >= 2, errc::precondition_violated, "u-vector needs n >= 2");
    std::set<Fe> seen;
    for (Fe x : a.e) require(seen.insert(x).second, errc::duplicate_locator, "locators must be distinct");
    FVector u{a.ctx, std::vector<Fe>(n)};
    if (n == F.q()) {
        Fe m1 = F.neg_one();
        for (std::size_t i = 0; i < n; ++i) u.e[i] = m1;
        return u;
    }
    for (std::size_t i = 0; i < n; ++i) {
        Fe prod = F.one();
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) prod = F.mul(prod, F.sub(a[i], a[j]));
        u.e[i] = F.inv(prod);
    }
    return u;
}

/// Generator matrix: row i is a^i * v, extended codes append the infinity
/// column (0, ..., 0, 1)^T.
inline FMatrix generator(const GrsSpec& spec) {
    spec.validate();
    const FieldCtx& F = *spec.ctx;
    std::size_t n = spec.nloc();
    FMatrix G(F, spec.k, spec.length());
    FVector row = spec.v;
    for (std::size_t i = 0; i < spec.k; ++i) {
        for (std::size_t j = 0; j < n; ++j) G.at(i, j) = row[j];
        if (spec.extended) G.at(i, n) = (i + 1 == spec.k) ? F.one() : F.zero();
        if (i + 1 < spec.k)
            for (std::size_t j = 0; j < n; ++j) row.e[j] = F.mul(row[j], spec.a[j]);
    }
    return G;
}

struct MdsStructural {};
struct MdsExhaustive {
    std::size_t d = 0;
};
struct MdsUnknown {};
using MdsCertificate = std::variant<MdsStructural, MdsExhaustive, MdsUnknown>;

inline std::string mds_certificate_name(const MdsCertificate& c) {
    if (std::holds_alternative<MdsStructural>(c)) return "structural";
    if (auto* e = std::get_if<MdsExhaustive>(&c)) return "exhaustive(d=" + std::to_string(e->d) + ")";
    return "unknown";
}

/// Generic linear code: a generator matrix plus its GRS origin when known.
struct LinearCode {
    const FieldCtx* ctx = nullptr;
    FMatrix G;
    std::optional<GrsSpec> origin;

    std::size_t length() const noexcept { return G.cols; }
    std::size_t dim() const noexcept { return G.rows; }
};

inline LinearCode code_from_spec(const GrsSpec& spec) { return LinearCode{spec.ctx, generator(spec), spec}; }

/// GRS_k(a, v) = GRS_k(s*a + t, lam*v); extended codes force lam = s^{1-k}.
/// Passing std::nullopt for lam selects that forced multiplier.
inline GrsSpec equiv_transform(const GrsSpec& spec, Fe scale, Fe shift, std::optional<Fe> lam) {
    const FieldCtx& F = *spec.ctx;
    require(!F.is_zero(scale), errc::zero_scale, "locator scale must be nonzero");
    Fe lambda;
    if (spec.extended) {
        // a^{1-k} = inverse of scale^{k-1}
        lambda = F.inv(F.pow(scale, spec.k - 1));
        if (lam) require(*lam == lambda, errc::zero_scale, "extended transform forces lambda = a^{1-k}");
    } else {
        lambda = lam.value_or(F.one());
        require(!F.is_zero(lambda), errc::zero_scale, "multiplier scale must be nonzero");
    }
    GrsSpec out = spec;
    for (auto& x : out.a.e) x = F.add(F.mul(scale, x), shift);
    for (auto& x : out.v.e) x = F.mul(lambda, x);
    return out;
}

/// GRS_k(a, v, inf) = GRS_k((a^{-1}, 0), (v * a^{k-1}, 1)) for nonzero
/// locators: converts an extended spec into a plain one of the same length.
inline GrsSpec egrs_to_grs(const GrsSpec& spec) {
    const FieldCtx& F = *spec.ctx;
    require(spec.extended, errc::precondition_violated, "egrs_to_grs expects an extended spec");
    GrsSpec work = spec;
    bool has_zero = false;
    for (Fe x : spec.a.e) has_zero |= F.is_zero(x);
    if (has_zero) {
        // least shift moving every locator off zero (exists iff n < q)
        require(spec.nloc() < F.q(), errc::zero_locator, "cannot shift a full locator set off zero");
        std::set<Fe> locs(spec.a.e.begin(), spec.a.e.end());
        for (u64 c = 1; c < F.q(); ++c) {
            Fe b{(u32)c};
            bool ok = true;
            for (Fe x : spec.a.e)
                if (F.is_zero(F.add(x, b))) {
                    ok = false;
                    break;
                }
            if (ok) {
                work = equiv_transform(spec, F.one(), b, std::nullopt);
                break;
            }
        }
    }
    GrsSpec out;
    out.ctx = spec.ctx;
    out.k = spec.k;
    out.extended = false;
    out.a.ctx = spec.ctx;
    out.v.ctx = spec.ctx;
    std::size_t n = work.nloc();
    out.a.e.resize(n + 1);
    out.v.e.resize(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        out.a.e[i] = F.inv(work.a[i]);
        out.v.e[i] = F.mul(work.v[i], F.pow(work.a[i], spec.k - 1));
    }
    out.a.e[n] = F.zero();
    out.v.e[n] = F.one();
    return out;
}

/// Phi_v followed by the infinity column: generator [G diag(v) | inf^T].
inline LinearCode extend_phi(const LinearCode& C, const FVector& v) {
    const FieldCtx& F = *C.ctx;
    require(v.size() == C.G.cols, errc::length_mismatch, "extend_phi: multiplier length mismatch");
    for (Fe x : v.e) require(!F.is_zero(x), errc::zero_multiplier, "multipliers must be nonzero");
    FMatrix G(F, C.G.rows, C.G.cols + 1);
    for (std::size_t r = 0; r < C.G.rows; ++r) {
        for (std::size_t c = 0; c < C.G.cols; ++c) G.at(r, c) = F.mul(C.G.at(r, c), v[c]);
        G.at(r, C.G.cols) = (r + 1 == C.G.rows) ? F.one() : F.zero();
    }
    return LinearCode{C.ctx, std::move(G), std::nullopt};
}

/// Exact minimum Hamming weight by scanning one representative per
/// projective message class (scaling preserves weight).
inline std::size_t min_distance_exhaustive(const LinearCode& C, u64 budget = u64(1) << 22) {
    const FieldCtx& F = *C.ctx;
    std::size_t k = C.dim(), n = C.length();
    double words = 1;
    for (std::size_t i = 0; i < k; ++i) {
        words *= (double)F.q();
        if (words > (double)budget) fail(errc::budget_exceeded, "q^k exceeds the distance budget");
    }
    std::size_t best = n + 1;
    std::vector<Fe> cw(n);
    // messages with leading coefficient 1 at position t, free digits below
    for (std::size_t t = 0; t < k && best > 1; ++t) {
        for (std::size_t j = 0; j < n; ++j) cw[j] = C.G.at(t, j);
        std::vector<u32> msg(t, 0);  // digits for positions 0..t-1
        u64 count = 1;
        for (std::size_t i = 0; i < t; ++i) count *= F.q();
        for (u64 it = 0;; ++it) {
            std::size_t wt = 0;
            for (std::size_t j = 0; j < n; ++j) wt += !F.is_zero(cw[j]);
            best = std::min(best, wt);
            if (it + 1 >= count || best == 1) break;
            // odometer step: increment digit 0, carrying upward; update the
            // running codeword by the per-digit generator-row delta
            for (std::size_t d = 0;; ++d) {
                u32 old = msg[d];
                u32 nw = (u32)((old + 1) % F.q());
                msg[d] = nw;
                Fe delta = F.sub(Fe{nw}, Fe{old});
                for (std::size_t j = 0; j < n; ++j)
                    cw[j] = F.add(cw[j], F.mul(delta, C.G.at(d, j)));
                if (nw != 0) break;
            }
        }
    }
    return best;
}

/// Structural when the code carries a GrsSpec origin, otherwise an exhaustive
/// scan within budget, otherwise unknown.
inline MdsCertificate is_mds(const LinearCode& C, u64 budget = u64(1) << 22) {
    if (C.origin) return MdsStructural{};
    double words = 1;
    for (std::size_t i = 0; i < C.dim(); ++i) {
        words *= (double)C.ctx->q();
        if (words > (double)budget) return MdsUnknown{};
    }
    std::size_t d = min_distance_exhaustive(C, budget);
    if (d == C.length() - C.dim() + 1) return MdsExhaustive{d};
    return MdsUnknown{};
}

/// Construction output: the spec, its inner-product exponent, the measured
/// hull dimension and the MDS certificate. gram_zero iff hull_dim == k.
struct CertifiedCode {
    GrsSpec spec;
    u64 e = 0;
    std::size_t hull_dim = 0;
    MdsCertificate mds;
    bool gram_zero = false;
};

}  // namespace gso

#endif
