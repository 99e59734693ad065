#ifndef GSO_TESTS_COMMON_HPP
#define GSO_TESTS_COMMON_HPP

// Shared test utilities: a field cache, independent oracles (hull by
// subspace intersection, solvability over H^n by exhaustive scan, distance
// by definition) and seeded random spec generation. The oracles deliberately
// avoid the library's power-sum and Gram paths.

#include <map>
#include <random>

#include "gso/quantum.hpp"

namespace gsotest {

using namespace gso;

inline const FieldCtx& field(u64 p, u64 m) {
    static std::map<std::pair<u64, u64>, std::unique_ptr<FieldCtx>> cache;
    auto key = std::make_pair(p, m);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, FieldCtx::create_ptr(p, m)).first;
    return *it->second;
}

/// All (p, m) with q = p^m <= limit, ascending q.
inline std::vector<std::pair<u64, u64>> field_params_up_to(u64 limit) {
    std::vector<std::pair<u64, u64>> out;
    for (u64 p = 2; p <= limit; ++p) {
        if (!detail::is_prime_u64(p)) continue;
        u64 q = p;
        for (u64 m = 1; q <= limit; ++m, q *= p) out.emplace_back(p, m);
    }
    std::sort(out.begin(), out.end(), [](auto a, auto b) {
        return detail::pow_u64(a.first, a.second) < detail::pow_u64(b.first, b.second);
    });
    return out;
}

/// dim(C ∩ C^{⊥_e}) via dim U + dim V - dim(U + V); the dual basis comes
/// from the Euclidean null space twisted by sigma^{m-e}.
inline std::size_t hull_dim_oracle(const LinearCode& C, u64 e) {
    const FieldCtx& F = *C.ctx;
    RrefResult rr = rref_kernel(C.G);
    std::size_t k = rr.rank, nd = rr.nullspace.size();
    FMatrix S(F, C.G.rows + nd, C.length());
    for (std::size_t r = 0; r < C.G.rows; ++r)
        for (std::size_t c = 0; c < C.length(); ++c) S.at(r, c) = C.G.at(r, c);
    u64 back = (F.m() - e % F.m()) % F.m();
    for (std::size_t i = 0; i < nd; ++i)
        for (std::size_t c = 0; c < C.length(); ++c)
            S.at(C.G.rows + i, c) = F.frobenius_pow(rr.nullspace[i][c], back);
    return k + nd - rank_of(S);
}

/// Exhaustive search for a solution of M x^T = rhs^T with every x_i in H.
inline std::optional<std::vector<Fe>> solve_over_h(const FMatrix& M, const FVector& rhs,
                                                   const SubgroupH& H) {
    const FieldCtx& F = *M.ctx;
    std::size_t n = M.cols;
    std::vector<Fe> members;
    for (u64 j = 0; j < H.order; ++j) members.push_back(F.exp(j * H.gcd_qm1));
    std::vector<std::size_t> idx(n, 0);
    for (;;) {
        std::vector<Fe> x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = members[idx[i]];
        bool ok = true;
        for (std::size_t r = 0; r < M.rows && ok; ++r) {
            Fe acc{0};
            for (std::size_t c = 0; c < n; ++c) acc = F.add(acc, F.mul(M.at(r, c), x[c]));
            ok = acc == rhs[r];
        }
        if (ok) return x;
        std::size_t d = 0;
        for (;; ++d) {
            if (d == n) return std::nullopt;
            if (++idx[d] < members.size()) break;
            idx[d] = 0;
        }
    }
}

/// Definitionally computed minimum distance (independent of the library's
/// incremental scan): evaluates every message vector directly.
inline std::size_t min_distance_definition(const LinearCode& C) {
    const FieldCtx& F = *C.ctx;
    std::size_t k = C.dim(), n = C.length();
    u64 total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= F.q();
    std::size_t best = n + 1;
    for (u64 msg = 1; msg < total; ++msg) {
        u64 t = msg;
        std::vector<Fe> coeff(k);
        for (std::size_t i = 0; i < k; ++i) {
            coeff[i] = Fe{(u32)(t % F.q())};
            t /= F.q();
        }
        std::size_t wt = 0;
        for (std::size_t c = 0; c < n; ++c) {
            Fe acc{0};
            for (std::size_t i = 0; i < k; ++i) acc = F.add(acc, F.mul(coeff[i], C.G.at(i, c)));
            wt += !F.is_zero(acc);
        }
        best = std::min(best, wt);
    }
    return best;
}

inline GrsSpec random_spec(const FieldCtx& F, std::size_t n, std::size_t k, bool extended, u64 seed) {
    std::mt19937_64 rng(seed);
    std::vector<u32> all(F.q());
    for (u64 v = 0; v < F.q(); ++v) all[v] = (u32)v;
    for (std::size_t j = all.size(); j > 1; --j) std::swap(all[j - 1], all[rng() % j]);
    GrsSpec s;
    s.ctx = &F;
    s.k = k;
    s.extended = extended;
    s.a.ctx = s.v.ctx = &F;
    for (std::size_t i = 0; i < n; ++i) {
        s.a.e.push_back(Fe{all[i]});
        s.v.e.push_back(Fe{(u32)(1 + rng() % (F.q() - 1))});
    }
    return s;
}

/// Random multipliers constrained to H-class representatives v with
/// v^{p^e+1} = x for a random x in H^n.
inline GrsSpec random_spec_in_h(const FieldCtx& F, std::size_t n, std::size_t k, bool extended, u64 e,
                                u64 seed) {
    GrsSpec s = random_spec(F, n, k, extended, seed);
    SubgroupH H = F.h_subgroup(e);
    std::mt19937_64 rng(seed ^ 0x77777777u);
    for (std::size_t i = 0; i < n; ++i) {
        Fe x = F.exp((rng() % H.order) * H.gcd_qm1);
        s.v.e[i] = F.galois_root(x, e);
    }
    return s;
}

}  // namespace gsotest

#endif
