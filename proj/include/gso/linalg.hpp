#ifndef GSO_LINALG_HPP
#define GSO_LINALG_HPP

/*
 * Dense vectors and matrices over a FieldCtx: Schur products, Galois inner
 * products, reduced echelon form, rank, null spaces and affine solving. All
 * operations are pure; matrices are treated as immutable values.
 */

#include <optional>
#include <utility>
#include <vector>

#include "field.hpp"

namespace gso {

struct FVector {
    const FieldCtx* ctx = nullptr;
    std::vector<Fe> e;

    std::size_t size() const noexcept { return e.size(); }
    Fe& operator[](std::size_t i) noexcept { return e[i]; }
    Fe operator[](std::size_t i) const noexcept { return e[i]; }
    friend bool operator==(const FVector& a, const FVector& b) { return a.e == b.e; }
};

struct FMatrix {
    const FieldCtx* ctx = nullptr;
    std::size_t rows = 0, cols = 0;
    std::vector<Fe> a;  // row-major

    FMatrix() = default;
    FMatrix(const FieldCtx& c, std::size_t r, std::size_t n) : ctx(&c), rows(r), cols(n), a(r * n) {}

    Fe& at(std::size_t r, std::size_t c) noexcept { return a[r * cols + c]; }
    Fe at(std::size_t r, std::size_t c) const noexcept { return a[r * cols + c]; }

    FVector row(std::size_t r) const {
        FVector v{ctx, {}};
        v.e.assign(a.begin() + (long)(r * cols), a.begin() + (long)((r + 1) * cols));
        return v;
    }
    friend bool operator==(const FMatrix& x, const FMatrix& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
};

inline FVector make_vector(const FieldCtx& ctx, std::vector<Fe> e) { return FVector{&ctx, std::move(e)}; }

/// Coordinatewise product.
inline FVector schur(const FVector& x, const FVector& y) {
    require(x.ctx == y.ctx, errc::length_mismatch, "vectors over different fields");
    require(x.size() == y.size(), errc::length_mismatch, "schur: length mismatch");
    const FieldCtx& F = *x.ctx;
    FVector r{x.ctx, {}};
    r.e.resize(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r.e[i] = F.mul(x[i], y[i]);
    return r;
}

/// <x, y>_e = sum_i x_i * y_i^{p^e}.
inline Fe galois_inner(const FVector& x, const FVector& y, u64 e) {
    require(x.size() == y.size(), errc::length_mismatch, "galois_inner: length mismatch");
    const FieldCtx& F = *x.ctx;
    u64 pe = detail::pow_u64(F.p(), e % F.m());
    Fe acc{0};
    for (std::size_t i = 0; i < x.size(); ++i) acc = F.add(acc, F.mul(x[i], F.pow(y[i], pe)));
    return acc;
}

struct RrefResult {
    FMatrix rref;
    std::size_t rank = 0;
    std::vector<FVector> nullspace;  // basis of {x : M x^T = 0}
};

/// Unique reduced row-echelon form, rank and a null-space basis. The basis
/// follows the standard free-column construction, so it is deterministic.
inline RrefResult rref_kernel(const FMatrix& M) {
    const FieldCtx& F = *M.ctx;
    FMatrix R = M;
    std::size_t rank = 0;
    std::vector<long long> pivot_of_col(M.cols, -1);
    for (std::size_t c = 0; c < M.cols && rank < M.rows; ++c) {
        std::size_t sel = rank;
        while (sel < R.rows && F.is_zero(R.at(sel, c))) ++sel;
        if (sel == R.rows) continue;
        for (std::size_t j = 0; j < R.cols; ++j) std::swap(R.at(sel, j), R.at(rank, j));
        Fe inv = F.inv(R.at(rank, c));
        for (std::size_t j = c; j < R.cols; ++j) R.at(rank, j) = F.mul(R.at(rank, j), inv);
        for (std::size_t r = 0; r < R.rows; ++r) {
            if (r == rank) continue;
            Fe f = R.at(r, c);
            if (F.is_zero(f)) continue;
            for (std::size_t j = c; j < R.cols; ++j)
                R.at(r, j) = F.sub(R.at(r, j), F.mul(f, R.at(rank, j)));
        }
        pivot_of_col[c] = (long long)rank;
        ++rank;
    }
    RrefResult out;
    out.rank = rank;
    out.nullspace.reserve(M.cols - rank);
    for (std::size_t c = 0; c < M.cols; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        FVector v{M.ctx, std::vector<Fe>(M.cols, Fe{0})};
        v.e[c] = F.one();
        for (std::size_t cc = 0; cc < c; ++cc)
            if (pivot_of_col[cc] >= 0) v.e[cc] = F.neg(R.at((std::size_t)pivot_of_col[cc], c));
        out.nullspace.push_back(std::move(v));
    }
    out.rref = std::move(R);
    return out;
}

inline std::size_t rank_of(const FMatrix& M) { return rref_kernel(M).rank; }

/// One particular solution of M x^T = b^T (free variables zero in the
/// reduced form; this is the lexicographically canonical choice), or nullopt.
inline std::optional<FVector> solve_affine(const FMatrix& M, const FVector& b) {
    require(b.size() == M.rows, errc::length_mismatch, "solve_affine: rhs length mismatch");
    const FieldCtx& F = *M.ctx;
    FMatrix A(F, M.rows, M.cols + 1);
    for (std::size_t r = 0; r < M.rows; ++r) {
        for (std::size_t c = 0; c < M.cols; ++c) A.at(r, c) = M.at(r, c);
        A.at(r, M.cols) = b[r];
    }
    RrefResult rr = rref_kernel(A);
    // inconsistent iff a pivot lands in the augmented column
    std::vector<long long> pivot_of_col(M.cols, -1);
    std::size_t rank_m = 0;
    for (std::size_t r = 0; r < rr.rank; ++r) {
        std::size_t c = 0;
        while (c < A.cols && F.is_zero(rr.rref.at(r, c))) ++c;
        if (c == M.cols) return std::nullopt;
        pivot_of_col[c] = (long long)r;
        ++rank_m;
    }
    FVector x{M.ctx, std::vector<Fe>(M.cols, Fe{0})};
    for (std::size_t c = 0; c < M.cols; ++c)
        if (pivot_of_col[c] >= 0) x.e[c] = rr.rref.at((std::size_t)pivot_of_col[c], M.cols);
    return x;
}

namespace detail {
inline FMatrix drop_zero_rows(const FMatrix& R, std::size_t rank) {
    FMatrix out(*R.ctx, rank, R.cols);
    for (std::size_t r = 0; r < rank; ++r)
        for (std::size_t c = 0; c < R.cols; ++c) out.at(r, c) = R.at(r, c);
    return out;
}
}  // namespace detail

/// Row spaces coincide iff the reduced forms agree.
inline bool row_space_equal(const FMatrix& G1, const FMatrix& G2) {
    require(G1.cols == G2.cols, errc::cols_mismatch, "row_space_equal: column mismatch");
    require(G1.ctx == G2.ctx, errc::cols_mismatch, "row_space_equal: different fields");
    RrefResult a = rref_kernel(G1), b = rref_kernel(G2);
    if (a.rank != b.rank) return false;
    return detail::drop_zero_rows(a.rref, a.rank) == detail::drop_zero_rows(b.rref, b.rank);
}

/// sigma^e applied coordinatewise.
inline FVector frobenius_vec(const FVector& x, u64 e) {
    const FieldCtx& F = *x.ctx;
    FVector r = x;
    for (auto& c : r.e) c = F.frobenius_pow(c, e);
    return r;
}

/// Powers vector a^i with the a^0 = all-ones convention.
inline FVector vec_pow(const FVector& a, u64 i) {
    const FieldCtx& F = *a.ctx;
    FVector r{a.ctx, std::vector<Fe>(a.size())};
    for (std::size_t j = 0; j < a.size(); ++j) r.e[j] = F.pow(a[j], i);
    return r;
}

}  // namespace gso

#endif
