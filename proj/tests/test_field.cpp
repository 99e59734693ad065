#include <doctest.h>

#include "common.hpp"

using namespace gso;
using gsotest::field;

namespace {

// independent modulus oracle: naive F_2[x] arithmetic, exhaustive scan over
// monic cubics in packed order for irreducibility plus primitive root
bool f2_poly_irreducible_primitive_cubic(u32 packed) {
    auto eval = [&](u32 f, u32 x) {
        // binary polynomial evaluation over F_2 at x in {0,1}
        u32 acc = 0;
        for (int i = 3; i >= 0; --i) acc = (u32)((acc * x + ((f >> i) & 1)) & 1);
        return acc;
    };
    u32 f = packed | 8;  // monic cubic
    if (eval(f, 0) == 0 || eval(f, 1) == 0) return false;  // linear factors
    // no quadratic irreducible divides a cubic unless a linear one does too
    // order of x mod f must be 7
    u32 cur = 2;  // x
    for (int i = 1; i <= 7; ++i) {
        if (cur == 1) return i == 7;
        // multiply by x mod f
        cur <<= 1;
        if (cur & 8) cur ^= f;
    }
    return false;
}

}  // namespace

TEST_CASE("field_create picks the canonical modulus") {
    const FieldCtx& F4 = field(2, 2);
    CHECK(F4.modulus() == std::vector<u32>{1, 1, 1});  // x^2 + x + 1, the unique irreducible quadratic
    CHECK(F4.w().v == 2);
    CHECK(F4.mul(F4.w(), F4.w()).v == 3);  // w^2 = w + 1

    const FieldCtx& F8 = field(2, 3);
    CHECK(F8.modulus() == std::vector<u32>{1, 1, 0, 1});  // x^3 + x + 1
    // oracle: x^3+x+1 is the packed-least monic cubic that is irreducible
    // with primitive root
    for (u32 packed = 0; packed < 3; ++packed) CHECK_FALSE(f2_poly_irreducible_primitive_cubic(packed));
    CHECK(f2_poly_irreducible_primitive_cubic(3));

    CHECK_THROWS_WITH_AS(field(4, 1), doctest::Contains("NotPrime"), error);
}

TEST_CASE("explicit modulus override") {
    FieldCtx F8b = FieldCtx::create(2, 3, {1, 0, 1, 1});  // x^3 + x^2 + 1, also irreducible
    CHECK(F8b.q() == 8);
    Fe w = F8b.w();
    Fe acc = F8b.one();
    for (int i = 0; i < 7; ++i) acc = F8b.mul(acc, w);
    CHECK(acc == F8b.one());  // w has order 7
    CHECK_THROWS_AS(FieldCtx::create(2, 3, {1, 1, 1, 1}), error);  // x^3+x^2+x+1 = (x+1)(x^2+1)
}

TEST_CASE("frobenius powers") {
    const FieldCtx& F4 = field(2, 2);
    Fe w = F4.w();
    CHECK(F4.frobenius_pow(w, 1) == F4.add(w, F4.one()));  // w^2 = w + 1
    for (u64 v = 0; v < 4; ++v) CHECK(F4.frobenius_pow(Fe{(u32)v}, 2) == Fe{(u32)v});  // sigma^m = id

    const FieldCtx& F8 = field(2, 3);
    CHECK(F8.frobenius_pow(F8.w(), 1) == F8.pow(F8.w(), 2));
    CHECK(F8.frobenius_pow(F8.pow(F8.w(), 2), 2) == F8.w());  // w^8 = w
}

TEST_CASE("frobenius is a field homomorphism") {
    std::mt19937_64 rng(7);
    for (auto [p, m] : gsotest::field_params_up_to(256)) {
        const FieldCtx& F = field(p, m);
        for (u64 e = 0; e < m; ++e) {
            for (int t = 0; t < 16; ++t) {
                Fe x{(u32)(rng() % F.q())}, y{(u32)(rng() % F.q())};
                CHECK(F.frobenius_pow(F.add(x, y), e) == F.add(F.frobenius_pow(x, e), F.frobenius_pow(y, e)));
                CHECK(F.frobenius_pow(F.mul(x, y), e) == F.mul(F.frobenius_pow(x, e), F.frobenius_pow(y, e)));
            }
        }
    }
}

TEST_CASE("field arithmetic identities") {
    for (auto [p, m] : gsotest::field_params_up_to(81)) {
        const FieldCtx& F = field(p, m);
        for (u64 a = 0; a < F.q(); ++a) {
            Fe x{(u32)a};
            CHECK(F.add(x, F.neg(x)) == F.zero());
            if (a) CHECK(F.mul(x, F.inv(x)) == F.one());
            CHECK(F.add(x, F.zero()) == x);
            CHECK(F.mul(x, F.one()) == x);
        }
        // exp/log are mutually inverse
        for (u64 i = 0; i < F.q() - 1; ++i) CHECK(F.log(F.exp(i)) == i);
    }
}

TEST_CASE("subgroup H orders match the gcd classification") {
    struct Row {
        u64 p, m, e, expect;
    };
    // the three classification cases
    for (Row r : {Row{2, 7, 1, 127}, Row{3, 5, 1, 121}, Row{3, 8, 2, 656}}) {
        const FieldCtx& F = field(r.p, r.m);
        SubgroupH h = F.h_subgroup(r.e);
        CHECK(h.order == r.expect);
    }
    // brute force: |{x^{p^e+1} : x nonzero}| over every small field
    for (auto [p, m] : gsotest::field_params_up_to(128)) {
        const FieldCtx& F = field(p, m);
        for (u64 e = 0; e < m; ++e) {
            SubgroupH h = F.h_subgroup(e);
            std::set<Fe> img;
            for (u64 v = 1; v < F.q(); ++v) img.insert(F.pow(Fe{(u32)v}, F.galois_twist(e)));
            CHECK(img.size() == h.order);
            for (Fe x : img) CHECK(F.h_contains(h, x));
        }
    }
}

TEST_CASE("galois_root returns the least-log root") {
    const FieldCtx& F8 = field(2, 3);
    Fe v = F8.galois_root(F8.w(), 1);
    CHECK(F8.log(v) == 5);  // (w^5)^3 = w^15 = w
    CHECK(F8.pow(v, 3) == F8.w());

    const FieldCtx& F4 = field(2, 2);
    CHECK(F4.galois_root(F4.one(), 1) == F4.one());  // least root among the cube roots of 1
    CHECK_THROWS_WITH_AS(F4.galois_root(F4.w(), 1), doctest::Contains("NotInH"), error);
    // oracle: exhaustive cube scan over F_4^*
    std::set<Fe> cubes;
    for (u64 v = 1; v < 4; ++v) cubes.insert(F4.pow(Fe{(u32)v}, 3));
    CHECK(cubes == std::set<Fe>{F4.one()});
}

TEST_CASE("galois_root against exhaustive scan") {
    for (auto [p, m] : gsotest::field_params_up_to(81)) {
        const FieldCtx& F = field(p, m);
        for (u64 e = 0; e < m; ++e) {
            SubgroupH h = F.h_subgroup(e);
            u64 twist = F.galois_twist(e);
            for (u64 v = 1; v < F.q(); ++v) {
                Fe x{(u32)v};
                if (F.h_contains(h, x)) {
                    Fe root = F.galois_root(x, e);
                    CHECK(F.pow(root, twist) == x);
                    // least discrete log among all preimages
                    for (u64 y = 1; y < F.q(); ++y)
                        if (F.pow(Fe{(u32)y}, twist) == x) CHECK(F.log(root) <= F.log(Fe{(u32)y}));
                } else {
                    CHECK_THROWS_AS(F.galois_root(x, e), error);
                }
            }
        }
    }
}

TEST_CASE("subfield_elements") {
    const FieldCtx& F4 = field(2, 2);
    CHECK(F4.subfield_elements(1) == std::vector<Fe>{Fe{0}, Fe{1}});
    const FieldCtx& F8 = field(2, 3);
    CHECK(F8.subfield_elements(3).size() == 8);
    const FieldCtx& F64 = field(2, 6);
    auto s = F64.subfield_elements(2);
    CHECK(s.size() == 4);
    for (Fe x : s) CHECK(F64.pow(x, 4) == x);
    CHECK_THROWS_WITH_AS(F64.subfield_elements(4), doctest::Contains("NotADivisor"), error);
}

TEST_CASE("affine_frobenius_set") {
    const FieldCtx& F4 = field(2, 2);
    Fe w = F4.w();
    CHECK(F4.affine_frobenius_set(F4.one(), F4.zero(), 1) == std::vector<Fe>{Fe{0}, Fe{1}});
    CHECK(F4.affine_frobenius_set(w, F4.zero(), 1) == std::vector<Fe>{Fe{0}, w});
    CHECK(F4.affine_frobenius_set(F4.one(), w, 1).empty());

    // oracle: exhaustive scan across several fields and parameters
    std::mt19937_64 rng(11);
    for (auto [p, m] : gsotest::field_params_up_to(64)) {
        const FieldCtx& F = field(p, m);
        for (u64 e = 0; e < m; ++e) {
            for (int t = 0; t < 8; ++t) {
                Fe a{(u32)(1 + rng() % (F.q() - 1))};
                Fe b{(u32)(rng() % F.q())};
                auto got = F.affine_frobenius_set(a, b, e);
                std::vector<Fe> want;
                for (u64 v = 0; v < F.q(); ++v) {
                    Fe x{(u32)v};
                    if (F.frobenius_pow(x, e) == F.add(F.mul(a, x), b)) want.push_back(x);
                }
                CHECK(got == want);
                // size is a power of p
                if (!got.empty()) {
                    std::size_t sz = got.size();
                    while (sz % p == 0) sz /= p;
                    CHECK(sz == 1);
                }
            }
        }
    }
}
