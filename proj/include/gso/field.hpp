#ifndef GSO_FIELD_HPP
#define GSO_FIELD_HPP

/*
 * Exact arithmetic in GF(p^m) with exp/log tables, Frobenius maps, the
 * subgroup H of (p^e+1)-th powers, canonical (p^e+1)-th roots, subfields and
 * affine-Frobenius fixed sets.
 *
 * Elements are encoded as integers in [0, q): the coefficient vector
 * (c_0, ..., c_{m-1}) of an element with respect to the power basis of the
 * modulus root packs into sum c_i * p^i. Encoding 0 is the additive identity
 * and encoding 1 the multiplicative identity. With the default modulus the
 * root itself (encoding p) is the primitive element used for the tables.
 */

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"

namespace gso {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

/// One field element: canonical base-p integer encoding of its coefficient
/// vector. Arithmetic lives on FieldCtx.
struct Fe {
    u32 v = 0;
    friend constexpr bool operator==(Fe a, Fe b) noexcept = default;
    friend constexpr auto operator<=>(Fe a, Fe b) noexcept = default;
};

/// The cyclic group H = <w^{p^e+1}> of (p^e+1)-th powers in F_q^*.
struct SubgroupH {
    u64 e = 0;          ///< Galois exponent
    u64 s = 0;          ///< gcd(e, m)
    u64 gcd_qm1 = 0;    ///< gcd(p^e+1, q-1); H = <w^gcd_qm1>
    u64 order = 0;      ///< (q-1)/gcd_qm1
    Fe generator;       ///< w^{p^e+1}
};

namespace detail {

inline bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline u64 pow_u64(u64 b, u64 e) {
    u64 r = 1;
    while (e--) r *= b;
    return r;
}

inline u64 mod_inverse(u64 a, u64 n) {
    // extended Euclid; requires gcd(a, n) == 1
    long long t = 0, nt = 1, r = (long long)n, nr = (long long)(a % n);
    while (nr != 0) {
        long long qq = r / nr;
        t -= qq * nt;
        std::swap(t, nt);
        r -= qq * nr;
        std::swap(r, nr);
    }
    if (t < 0) t += (long long)n;
    return (u64)t;
}

inline std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> fs;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

// -- dense polynomials over F_p (coefficient vectors, ascending) -----------

using PolyFp = std::vector<u32>;

inline void poly_trim(PolyFp& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline PolyFp poly_mod(PolyFp a, const PolyFp& f, u64 p) {
    // f monic
    poly_trim(a);
    while (a.size() >= f.size()) {
        u64 c = a.back();
        std::size_t shift = a.size() - f.size();
        for (std::size_t i = 0; i < f.size(); ++i) {
            u64 t = a[shift + i] + (p - (c * f[i]) % p);
            a[shift + i] = (u32)(t % p);
        }
        poly_trim(a);
    }
    return a;
}

inline PolyFp poly_mulmod(const PolyFp& a, const PolyFp& b, const PolyFp& f, u64 p) {
    if (a.empty() || b.empty()) return {};
    PolyFp c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (u32)((c[i + j] + (u64)a[i] * b[j]) % p);
    return poly_mod(std::move(c), f, p);
}

inline PolyFp poly_powmod(PolyFp base, u64 e, const PolyFp& f, u64 p) {
    PolyFp r{1};
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

inline PolyFp poly_gcd(PolyFp a, PolyFp b, u64 p) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        // make b monic before reduction
        u64 lead = b.back();
        if (lead != 1) {
            u64 inv = mod_inverse(lead, p);
            for (auto& c : b) c = (u32)(((u64)c * inv) % p);
        }
        a = poly_mod(std::move(a), b, p);
        std::swap(a, b);
    }
    return a;
}

/// Irreducibility over F_p: no roots and no factor of degree <= m/2.
inline bool poly_irreducible(const PolyFp& f, u64 p) {
    u64 m = f.size() - 1;
    if (m == 0) return false;
    for (u64 r = 0; r < p; ++r) {
        u64 acc = 0, pw = 1;
        for (u64 i = 0; i < f.size(); ++i) {
            acc = (acc + (u64)f[i] * pw) % p;
            pw = (pw * r) % p;
        }
        if (acc == 0) return false;
    }
    if (m == 1) return true;
    // x^{p^d} mod f, iterated; gcd with x^{p^d} - x detects degree-d factors
    PolyFp xp{0, 1};
    for (u64 d = 1; 2 * d <= m; ++d) {
        xp = poly_powmod(std::move(xp), p, f, p);
        PolyFp t = xp;
        if (t.size() < 2) t.resize(2, 0);
        t[1] = (u32)((t[1] + p - 1) % p);
        poly_trim(t);
        PolyFp g = poly_gcd(f, std::move(t), p);
        if (g.size() > 1) return false;
    }
    return true;
}

}  // namespace detail

/// Immutable description of F_{p^m}. Safe to share across concurrent tasks
/// once built; every operation is a pure function of its inputs.
class FieldCtx {
   public:
    static constexpr u64 kDefaultTableLimit = u64(1) << 24;

    /// Table budget, overridable through GSO_TABLE_LIMIT.
    static u64 table_limit() {
        if (const char* env = std::getenv("GSO_TABLE_LIMIT")) {
            u64 v = std::strtoull(env, nullptr, 10);
            if (v >= 2) return v;
        }
        return kDefaultTableLimit;
    }

    /// Builds F_{p^m} with the lexicographically least monic irreducible
    /// modulus whose root is primitive (coefficient tuples ordered by their
    /// base-p integer packing, most significant coefficient first).
    static FieldCtx create(u64 p, u64 m) { return FieldCtx(p, m, {}, table_limit()); }

    /// Builds F_{p^m} with an explicit modulus (ascending coefficients,
    /// length m+1, monic). The primitive element is the least-encoding
    /// element of multiplicative order q-1.
    static FieldCtx create(u64 p, u64 m, std::vector<u32> modulus) {
        return FieldCtx(p, m, std::move(modulus), table_limit());
    }

    /// Heap variants for callers that need to own the context.
    static std::unique_ptr<FieldCtx> create_ptr(u64 p, u64 m) {
        return std::unique_ptr<FieldCtx>(new FieldCtx(p, m, {}, table_limit()));
    }
    static std::unique_ptr<FieldCtx> create_ptr(u64 p, u64 m, std::vector<u32> modulus) {
        return std::unique_ptr<FieldCtx>(new FieldCtx(p, m, std::move(modulus), table_limit()));
    }

    FieldCtx(const FieldCtx&) = delete;
    FieldCtx& operator=(const FieldCtx&) = delete;
    FieldCtx(FieldCtx&&) = delete;
    FieldCtx& operator=(FieldCtx&&) = delete;

    u64 p() const noexcept { return p_; }
    u64 m() const noexcept { return m_; }
    u64 q() const noexcept { return q_; }
    const std::vector<u32>& modulus() const noexcept { return modulus_; }
    Fe w() const noexcept { return w_; }

    Fe zero() const noexcept { return Fe{0}; }
    Fe one() const noexcept { return Fe{1}; }
    Fe neg_one() const noexcept { return neg(one()); }
    Fe from_uint(u64 v) const {
        require(v < q_, errc::bad_document, "element encoding out of range");
        return Fe{(u32)v};
    }

    bool is_zero(Fe a) const noexcept { return a.v == 0; }

    /// Addition through Zech logarithms: a + b = a (1 + w^{log b - log a}).
    Fe add(Fe a, Fe b) const noexcept {
        if (p_ == 2) return Fe{a.v ^ b.v};
        if (a.v == 0) return b;
        if (b.v == 0) return a;
        u64 la = log_[a.v], lb = log_[b.v];
        u64 d = lb >= la ? lb - la : lb + (q_ - 1) - la;
        u32 z = zech_[d];
        if (z == kZechNone) return Fe{0};
        u64 s = la + z;
        if (s >= q_ - 1) s -= q_ - 1;
        return Fe{exp_[s]};
    }

    Fe neg(Fe a) const noexcept {
        if (p_ == 2 || a.v == 0) return a;
        u64 s = log_[a.v] + (q_ - 1) / 2;  // -1 = w^{(q-1)/2} in odd characteristic
        if (s >= q_ - 1) s -= q_ - 1;
        return Fe{exp_[s]};
    }

    Fe sub(Fe a, Fe b) const noexcept { return add(a, neg(b)); }

    Fe mul(Fe a, Fe b) const noexcept {
        if (a.v == 0 || b.v == 0) return Fe{0};
        u64 s = (u64)log_[a.v] + log_[b.v];
        if (s >= q_ - 1) s -= q_ - 1;
        return Fe{exp_[s]};
    }

    Fe inv(Fe a) const {
        require(a.v != 0, errc::precondition_violated, "inverse of zero");
        u64 l = log_[a.v];
        return Fe{exp_[l == 0 ? 0 : q_ - 1 - l]};
    }

    Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }

    /// a^n with 0^0 = 1.
    Fe pow(Fe a, u64 n) const noexcept {
        if (n == 0) return Fe{1};
        if (a.v == 0) return Fe{0};
        u64 l = ((u64)log_[a.v] * (n % (q_ - 1))) % (q_ - 1);
        return Fe{exp_[l]};
    }

    /// Discrete log with respect to w; element must be nonzero.
    u64 log(Fe a) const {
        require(a.v != 0, errc::precondition_violated, "discrete log of zero");
        return log_[a.v];
    }

    Fe exp(u64 i) const noexcept { return Fe{exp_[i % (q_ - 1)]}; }

    /// sigma^e: x -> x^{p^{e mod m}}, an additive and multiplicative
    /// homomorphism (the e-th Frobenius power).
    Fe frobenius_pow(Fe x, u64 e) const noexcept { return pow(x, detail::pow_u64(p_, e % m_)); }

    /// p^e + 1 as an exponent (the Galois inner-product twist at e).
    u64 galois_twist(u64 e) const noexcept { return detail::pow_u64(p_, e % m_) + 1; }

    /// The subgroup H = <w^{p^e+1}> together with its case data. The order
    /// always matches the gcd classification:
    ///   gcd(p^e+1, q-1) = 1       if m/s odd, p even,
    ///                     2       if m/s odd, p odd,
    ///                     p^s + 1 if m/s even.
    SubgroupH h_subgroup(u64 e) const {
        u64 pe1 = galois_twist(e);
        u64 s = std::gcd(e % m_, m_);  // gcd(0, m) = m covers e = 0
        u64 g = std::gcd(pe1, q_ - 1);
        SubgroupH h;
        h.e = e % m_;
        h.s = s;
        h.gcd_qm1 = g;
        h.order = (q_ - 1) / g;
        h.generator = pow(w_, pe1);
        return h;
    }

    bool h_contains(const SubgroupH& h, Fe x) const {
        if (x.v == 0) return false;
        return log_[x.v] % h.gcd_qm1 == 0;
    }

    /// Canonical v with v^{p^e+1} = x: the solution of least discrete log of
    /// the congruence (p^e+1) y = log x (mod q-1). Throws NotInH when x is
    /// not a (p^e+1)-th power.
    Fe galois_root(Fe x, u64 e) const {
        require(x.v != 0, errc::precondition_violated, "galois_root of zero");
        u64 pe1 = galois_twist(e);
        u64 g = std::gcd(pe1, q_ - 1);
        u64 lx = log_[x.v];
        if (lx % g != 0) fail(errc::not_in_h, "element is not a (p^e+1)-th power");
        u64 n = (q_ - 1) / g;
        u64 y = ((lx / g) % n) * detail::mod_inverse((pe1 / g) % n, n) % n;
        return Fe{exp_[y]};
    }

    /// All p^s solutions of x^{p^s} = x (the subfield F_{p^s}),
    /// zero first, increasing encoding.
    std::vector<Fe> subfield_elements(u64 s) const {
        require(s >= 1 && m_ % s == 0, errc::not_a_divisor, "s must divide m");
        u64 sub = detail::pow_u64(p_, s);
        std::vector<Fe> out;
        out.reserve(sub);
        out.push_back(Fe{0});
        u64 step = (q_ - 1) / (sub - 1);
        for (u64 j = 0; j < sub - 1; ++j) out.push_back(Fe{exp_[j * step]});
        std::sort(out.begin() + 1, out.end());
        return out;
    }

    /// All x with x^{p^e} = a*x + b; an affine F_p-space when nonempty,
    /// sorted by encoding.
    std::vector<Fe> affine_frobenius_set(Fe a, Fe b, u64 e) const {
        require(a.v != 0, errc::zero_scale, "affine coefficient a must be nonzero");
        // x -> x^{p^e} - a x is F_p-linear; solve L x = b over F_p^m.
        std::vector<std::vector<u32>> col(m_);
        for (u64 j = 0; j < m_; ++j) {
            Fe bj = Fe{(u32)detail::pow_u64(p_, j)};
            Fe img = sub(frobenius_pow(bj, e), mul(a, bj));
            col[j] = digits(img);
        }
        std::vector<u32> rhs = digits(b);
        // Gaussian elimination on the m x m system over F_p.
        std::vector<std::vector<u32>> M(m_, std::vector<u32>(m_ + 1, 0));
        for (u64 r = 0; r < m_; ++r) {
            for (u64 j = 0; j < m_; ++j) M[r][j] = col[j][r];
            M[r][m_] = rhs[r];
        }
        std::vector<long long> pivot_col(m_, -1);
        u64 rank = 0;
        for (u64 c = 0; c < m_ && rank < m_; ++c) {
            u64 sel = rank;
            while (sel < m_ && M[sel][c] == 0) ++sel;
            if (sel == m_) continue;
            std::swap(M[sel], M[rank]);
            u64 invp = detail::mod_inverse(M[rank][c], p_);
            for (u64 j = c; j <= m_; ++j) M[rank][j] = (u32)(((u64)M[rank][j] * invp) % p_);
            for (u64 r = 0; r < m_; ++r) {
                if (r != rank && M[r][c] != 0) {
                    u64 f = M[r][c];
                    for (u64 j = c; j <= m_; ++j) M[r][j] = (u32)((M[r][j] + (p_ - f) * M[rank][j]) % p_);
                }
            }
            pivot_col[rank] = (long long)c;
            ++rank;
        }
        for (u64 r = rank; r < m_; ++r)
            if (M[r][m_] != 0) return {};  // inconsistent: empty set
        std::vector<u32> part(m_, 0);
        for (u64 r = 0; r < rank; ++r) part[(u64)pivot_col[r]] = M[r][m_];
        std::vector<bool> is_pivot(m_, false);
        for (u64 r = 0; r < rank; ++r) is_pivot[(u64)pivot_col[r]] = true;
        std::vector<u64> free_cols;
        for (u64 c = 0; c < m_; ++c)
            if (!is_pivot[c]) free_cols.push_back(c);
        std::vector<std::vector<u32>> kernel;
        for (u64 fc : free_cols) {
            std::vector<u32> v(m_, 0);
            v[fc] = 1;
            for (u64 r = 0; r < rank; ++r) v[(u64)pivot_col[r]] = (u32)((p_ - M[r][fc]) % p_);
            kernel.push_back(std::move(v));
        }
        u64 count = detail::pow_u64(p_, kernel.size());
        std::vector<Fe> out;
        out.reserve(count);
        for (u64 idx = 0; idx < count; ++idx) {
            std::vector<u32> x = part;
            u64 t = idx;
            for (const auto& kv : kernel) {
                u64 cmul = t % p_;
                t /= p_;
                if (cmul)
                    for (u64 i = 0; i < m_; ++i) x[i] = (u32)((x[i] + cmul * kv[i]) % p_);
            }
            out.push_back(undigits(x));
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    std::vector<u32> digits(Fe a) const {
        std::vector<u32> d(m_, 0);
        u32 x = a.v;
        for (u64 i = 0; i < m_; ++i) {
            d[i] = (u32)(x % p_);
            x /= (u32)p_;
        }
        return d;
    }

    Fe undigits(const std::vector<u32>& d) const {
        u64 v = 0, pw = 1;
        for (u64 i = 0; i < m_; ++i) {
            v += d[i] * pw;
            pw *= p_;
        }
        return Fe{(u32)v};
    }

   private:
    FieldCtx(u64 p, u64 m, std::vector<u32> modulus, u64 limit) : p_(p), m_(m) {
        require(detail::is_prime_u64(p), errc::not_prime, "p = " + std::to_string(p) + " is not prime");
        require(m >= 1, errc::degree_too_large, "m must be >= 1");
        u64 q = 1;
        for (u64 i = 0; i < m; ++i) {
            q *= p;
            require(q <= limit, errc::degree_too_large,
                    "p^m exceeds the table limit " + std::to_string(limit));
        }
        q_ = q;
        if (modulus.empty()) {
            search_modulus();
        } else {
            require(modulus.size() == m + 1 && modulus[m] == 1, errc::bad_document,
                    "modulus must be monic of degree m");
            for (u32 c : modulus) require(c < p, errc::bad_document, "modulus coefficient out of range");
            detail::PolyFp f(modulus.begin(), modulus.end());
            require(detail::poly_irreducible(f, p_), errc::bad_document, "modulus is not irreducible");
            modulus_ = std::move(modulus);
            build_tables_explicit();
        }
    }

    // multiply-by-x modulo the current modulus, on encodings
    u32 mulx(u32 a) const {
        u64 hi = a / head_;                  // coefficient of x^{m-1}
        u64 base = (u64)(a % head_) * p_;    // shifted low part
        if (hi == 0) return (u32)base;
        // subtract hi * (modulus - x^m), digit-wise
        u32 r = 0;
        u64 pw = 1, x = base;
        for (u64 i = 0; i < m_; ++i) {
            u64 d = (x % p_ + (p_ - (hi * modulus_[i]) % p_)) % p_;
            r += (u32)(d * pw);
            x /= p_;
            pw *= p_;
        }
        return r;
    }

    void search_modulus() {
        head_ = q_ / p_;
        exp_.assign(q_ - 1, 0);
        // candidates ordered by the packed integer of the non-leading part;
        // order of x in F_p[x]/(f) equals q-1 iff f is irreducible with a
        // primitive root, so one scan settles both.
        for (u64 cand = 1; cand < q_; ++cand) {
            if (cand % p_ == 0) continue;  // f(0) = 0 is always reducible
            modulus_.assign(m_ + 1, 0);
            {
                u64 x = cand;
                for (u64 i = 0; i < m_; ++i) {
                    modulus_[i] = (u32)(x % p_);
                    x /= p_;
                }
                modulus_[m_] = 1;
            }
            if (m_ == 1) {
                // F_p itself: modulus x - c with root c; need c primitive
                u32 root = (u32)((p_ - modulus_[0]) % p_);
                if (root == 0) continue;
                if (!build_tables_from_root(Fe{root})) continue;
                w_ = Fe{root};
                finalize_logs();
                return;
            }
            bool ok = true;
            u32 cur = 1;
            exp_[0] = 1;
            for (u64 i = 1; i < q_ - 1; ++i) {
                cur = mulx(cur);
                if (cur == 1) {
                    ok = false;  // order of x divides i < q-1
                    break;
                }
                exp_[i] = cur;
            }
            if (!ok) continue;
            if (mulx(cur) != 1) continue;  // order does not divide q-1: not a unit of full order
            detail::PolyFp f(modulus_.begin(), modulus_.end());
            require(detail::poly_irreducible(f, p_), errc::verification_failed,
                    "modulus order scan and irreducibility test disagree");
            w_ = Fe{(u32)p_};  // the root x itself
            finalize_logs();
            return;
        }
        fail(errc::verification_failed, "no primitive irreducible modulus found");
    }

    bool build_tables_from_root(Fe g) {
        exp_.assign(q_ - 1, 0);
        u64 cur = 1;
        exp_[0] = 1;
        for (u64 i = 1; i < q_ - 1; ++i) {
            cur = (cur * g.v) % p_;
            if (cur == 1) return false;
            exp_[i] = (u32)cur;
        }
        return (cur * g.v) % p_ == 1;
    }

    void build_tables_explicit() {
        head_ = q_ / p_;
        // find the least-encoding primitive element by order tests
        auto factors = detail::prime_factors(q_ - 1);
        auto pw_enc = [&](u32 base, u64 e) {
            // exponentiation by repeated squaring using mulx-based poly mult
            detail::PolyFp f(modulus_.begin(), modulus_.end());
            detail::PolyFp b;
            {
                u32 x = base;
                for (u64 i = 0; i < m_; ++i) {
                    b.push_back((u32)(x % p_));
                    x /= (u32)p_;
                }
                detail::poly_trim(b);
            }
            detail::PolyFp r = detail::poly_powmod(std::move(b), e, f, p_);
            r.resize(m_, 0);
            return undigits(r).v;
        };
        u32 gen = 0;
        for (u64 cand = 2; cand < q_; ++cand) {
            bool prim = true;
            for (u64 r : factors) {
                if (pw_enc((u32)cand, (q_ - 1) / r) == 1) {
                    prim = false;
                    break;
                }
            }
            if (prim && pw_enc((u32)cand, q_ - 1) == 1) {
                gen = (u32)cand;
                break;
            }
        }
        require(gen != 0, errc::verification_failed, "no primitive element found");
        w_ = Fe{gen};
        exp_.assign(q_ - 1, 0);
        exp_[0] = 1;
        detail::PolyFp f(modulus_.begin(), modulus_.end());
        detail::PolyFp g;
        {
            u32 x = gen;
            for (u64 i = 0; i < m_; ++i) {
                g.push_back((u32)(x % p_));
                x /= (u32)p_;
            }
            detail::poly_trim(g);
        }
        detail::PolyFp cur{1};
        for (u64 i = 1; i < q_ - 1; ++i) {
            cur = detail::poly_mulmod(cur, g, f, p_);
            detail::PolyFp t = cur;
            t.resize(m_, 0);
            exp_[i] = undigits(t).v;
            require(exp_[i] != 1, errc::verification_failed, "primitive element scan inconsistent");
        }
        finalize_logs();
    }

    void finalize_logs() {
        log_.assign(q_, 0);
        for (u64 i = 0; i < q_ - 1; ++i) log_[exp_[i]] = (u32)i;
        if (p_ != 2) {
            zech_.assign(q_ - 1, kZechNone);
            for (u64 j = 0; j < q_ - 1; ++j) {
                u32 s = add_digits(1, exp_[j]);
                if (s != 0) zech_[j] = log_[s];
            }
        }
    }

    u32 add_digits(u32 x, u32 y) const noexcept {
        if (p_ == 2) return x ^ y;
        u32 r = 0, pw = 1;
        for (u64 i = 0; i < m_; ++i) {
            r += (u32)((x % p_ + y % p_) % p_) * pw;
            x /= (u32)p_;
            y /= (u32)p_;
            pw *= (u32)p_;
        }
        return r;
    }

    static constexpr u32 kZechNone = 0xffffffffu;

    u64 p_, m_, q_ = 0;
    u64 head_ = 0;  // p^{m-1}
    std::vector<u32> modulus_;
    Fe w_;
    std::vector<u32> exp_, log_, zech_;
};

}  // namespace gso

#endif
