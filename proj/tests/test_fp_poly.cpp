#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "samelson/fp_poly.hpp"
#include "test_util.hpp"

using namespace samelson;
using testutil::random_poly;
using testutil::uniform;

namespace {

GenContextPtr ctx_xy(std::uint64_t p) {
    return GenContext::make(p, {{"x", 1}, {"y", 1}});
}

}  // namespace

TEST_CASE("is_prime agrees with trial division and handles large inputs") {
    auto trial = [](std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    };
    for (std::uint64_t n = 0; n <= 2000; ++n) CHECK(is_prime(n) == trial(n));
    CHECK(is_prime((1ULL << 61) - 1));          // Mersenne prime
    CHECK_FALSE(is_prime((1ULL << 61) + 1));    // 3 * 768614336404564651
    CHECK(is_prime(18446744073709551557ULL));   // largest prime below 2^64
    CHECK_FALSE(is_prime(3215031751ULL));       // strong pseudoprime to bases 2,3,5,7
}

TEST_CASE("Scalar stores least residues and rejects bad moduli") {
    Scalar a(-1, 7);
    CHECK(a.value() == 6);
    CHECK(a.signed_value() == -1);
    CHECK(Scalar(7, 7).is_zero());
    CHECK(Scalar(10, 7).value() == 3);
    CHECK(Scalar(4, 7).signed_value() == -3);
    CHECK(Scalar(3, 7).signed_value() == 3);
    CHECK((Scalar(3, 7) * Scalar(5, 7)).value() == 1);
    CHECK((Scalar(3, 7) - Scalar(5, 7)).value() == 5);
    CHECK((-Scalar(0, 7)).value() == 0);
    CHECK_THROWS_AS(Scalar(1, 2), usage_error);
    CHECK_THROWS_AS(Scalar(1, 9), usage_error);
    CHECK_THROWS_AS(Scalar(1, 0), usage_error);
    CHECK_THROWS_AS(Scalar(1, 3) + Scalar(1, 5), usage_error);
}

TEST_CASE("GenContext validates its generator list") {
    CHECK_THROWS_AS(GenContext::make(4, {{"x", 1}}), usage_error);
    CHECK_THROWS_AS(GenContext::make(5, {{"x", 0}}), usage_error);
    CHECK_THROWS_AS(GenContext::make(5, {{"x", 1}, {"x", 2}}), usage_error);
    CHECK_THROWS_AS(GenContext::make(5, {{"", 1}}), usage_error);
    auto ctx = GenContext::make(5, {{"x", 1}, {"y", 2}});
    CHECK(ctx->index_of("y") == 1);
    CHECK(ctx->index_of("z") == -1);
    CHECK(ctx->gen(1).halfdeg == 2);
    CHECK_THROWS_AS(ctx->gen(2), usage_error);
}

TEST_CASE("commutative ring axioms hold on random triples") {
    for (int trial = 0; trial < 4000; ++trial) {
        std::uint64_t p = testutil::small_prime();
        auto ctx = GenContext::make(p, {{"x", 1}, {"y", 1}, {"z", 2}});
        ModPoly f = random_poly(ctx, 4, 3);
        ModPoly g = random_poly(ctx, 4, 3);
        ModPoly h = random_poly(ctx, 4, 3);
        ModPoly one = ModPoly::constant(ctx, 1);
        ModPoly zero = ModPoly::zero(ctx);
        CHECK((f + g) + h == f + (g + h));
        CHECK(f + g == g + f);
        CHECK(f * g == g * f);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK(f + (-f) == zero);
        CHECK(f * one == f);
        CHECK(f * zero == zero);
        CHECK(f - g == f + (-g));
    }
}

TEST_CASE("terms stay normalized: no zero coefficients survive arithmetic") {
    for (int trial = 0; trial < 500; ++trial) {
        std::uint64_t p = testutil::small_prime();
        auto ctx = ctx_xy(p);
        ModPoly f = random_poly(ctx, 5, 3);
        ModPoly g = random_poly(ctx, 5, 3);
        ModPoly h = f * g + f - g;
        for (const auto& [m, c] : h.terms()) {
            CHECK(c > 0);
            CHECK(c < p);
        }
        CHECK((f - f).is_zero());
        CHECK((f - f).term_count() == 0);
        CHECK(f.times(static_cast<long long>(p)).is_zero());
    }
}

TEST_CASE("rendering follows graded-lex order with explicit coefficients") {
    auto ctx = ctx_xy(5);
    ModPoly f = ModPoly::generator(ctx, 0) + ModPoly::generator(ctx, 1);
    CHECK((f * f).str() == "1*x^2 + 2*x*y + 1*y^2");
    CHECK(ModPoly::zero(ctx).str() == "0");
    CHECK(ModPoly::constant(ctx, 3).str() == "3");
    // Higher halfdeg first, regardless of insertion order.
    auto g3 = GenContext::make(5, {{"p1", 2}, {"p2", 4}, {"e", 3}});
    ModPoly h = ModPoly::monomial(g3, {0, 0, 2}, 1);    // e^2, halfdeg 6
    h += ModPoly::monomial(g3, {3, 0, 0}, 2);           // p1^3, halfdeg 6
    h += ModPoly::monomial(g3, {1, 1, 0}, 4);           // p1*p2, halfdeg 6
    h += ModPoly::monomial(g3, {1, 0, 0}, 3);           // p1, halfdeg 2
    CHECK(h.str() == "2*p1^3 + 4*p1*p2 + 1*e^2 + 3*p1");
    // Symmetric-residue display.
    auto qctx = GenContext::make(7, {{"q1", 2}, {"q2", 4}});
    ModPoly s = ModPoly::monomial(qctx, {3, 0}, 2) + ModPoly::monomial(qctx, {1, 1}, 6);
    CHECK(s.str() == "2*q1^3 + 6*q1*q2");
    CHECK(s.str(true) == "2*q1^3 - 1*q1*q2");
    ModPoly neg = ModPoly::monomial(qctx, {1, 0}, 5);
    CHECK(neg.str(true) == "-2*q1");
}

TEST_CASE("coefficient queries are symmetric and consistent") {
    for (int trial = 0; trial < 500; ++trial) {
        std::uint64_t p = testutil::small_prime();
        auto ctx = GenContext::make(p, {{"x", 1}, {"y", 2}, {"z", 3}});
        ModPoly f = random_poly(ctx, 6, 2);
        std::size_t i = static_cast<std::size_t>(uniform(0, 2));
        std::size_t j = static_cast<std::size_t>(uniform(0, 2));
        CHECK(f.coefficient_of(i, j) == f.coefficient_of(j, i));
        Monomial m(3, 0);
        m[i] += 1;
        m[j] += 1;
        CHECK(f.coefficient_of(i, j) == f.coefficient(m));
    }
    auto ctx = ctx_xy(5);
    CHECK_THROWS_AS(ModPoly::zero(ctx).coefficient_of(0, 2), usage_error);
    CHECK_THROWS_AS(ModPoly::zero(ctx).coefficient({1, 2, 3}), usage_error);
}

TEST_CASE("linear_part extracts exactly the total-degree-one terms") {
    auto ctx = GenContext::make(7, {{"x", 1}, {"y", 2}});
    ModPoly f = ModPoly::monomial(ctx, {1, 0}, 3) + ModPoly::monomial(ctx, {0, 1}, 5) +
                ModPoly::monomial(ctx, {2, 0}, 1) + ModPoly::monomial(ctx, {1, 1}, 6) +
                ModPoly::constant(ctx, 2);
    ModPoly expected = ModPoly::monomial(ctx, {1, 0}, 3) + ModPoly::monomial(ctx, {0, 1}, 5);
    CHECK(f.linear_part() == expected);
}

TEST_CASE("substitute rewrites one generator into a target context") {
    // f = x*y + y^2 with |y| = 2|x|; send y -> z^2.
    auto src = GenContext::make(5, {{"x", 1}, {"y", 2}});
    auto dst = GenContext::make(5, {{"x", 1}, {"z", 1}});
    ModPoly f = ModPoly::monomial(src, {1, 1}, 1) + ModPoly::monomial(src, {0, 2}, 3);
    ModPoly z = ModPoly::generator(dst, 1);
    ModPoly got = f.substitute(1, z * z);
    ModPoly expected = ModPoly::monomial(dst, {1, 2}, 1) + ModPoly::monomial(dst, {0, 4}, 3);
    CHECK(got == expected);

    // Zero substitution kills the terms containing the generator.
    ModPoly killed = f.substitute(1, ModPoly::zero(dst));
    CHECK(killed.is_zero());
    ModPoly g = f + ModPoly::monomial(src, {2, 0}, 2);
    CHECK(g.substitute(1, ModPoly::zero(dst)) == ModPoly::monomial(dst, {2, 0}, 2));

    // Grading violations and missing names are rejected.
    CHECK_THROWS_AS(f.substitute(1, z), usage_error);                          // halfdeg 1 != 2
    CHECK_THROWS_AS(f.substitute(1, z * z + z), usage_error);                  // inhomogeneous
    auto lacking = GenContext::make(5, {{"w", 1}});
    CHECK_THROWS_AS(f.substitute(1, ModPoly::generator(lacking, 0)), usage_error);  // halfdeg clash
    auto wrong_deg = GenContext::make(5, {{"x", 3}, {"z", 1}});
    CHECK_THROWS_AS(f.substitute(1, ModPoly::monomial(wrong_deg, {0, 2}, 1)), usage_error);
    auto other_p = GenContext::make(7, {{"x", 1}, {"z", 1}});
    CHECK_THROWS_AS(f.substitute(1, ModPoly::zero(other_p)), usage_error);
    CHECK_THROWS_AS(f.substitute(5, z * z), usage_error);
}

TEST_CASE("substituting a generator by itself is the identity") {
    for (int trial = 0; trial < 200; ++trial) {
        std::uint64_t p = testutil::small_prime();
        auto ctx = GenContext::make(p, {{"x", 1}, {"y", 2}, {"z", 1}});
        ModPoly f = random_poly(ctx, 5, 3);
        std::size_t i = static_cast<std::size_t>(uniform(0, 2));
        CHECK(f.substitute(i, ModPoly::generator(ctx, i)) == f);
    }
}

TEST_CASE("with_context relabels and reorders the term map") {
    auto src = GenContext::make(5, {{"e1", 1}, {"e2", 2}});
    auto dst = GenContext::make(5, {{"q1", 2}, {"q2", 4}});
    ModPoly f = ModPoly::monomial(src, {1, 0}, 2) + ModPoly::monomial(src, {0, 1}, 3);
    ModPoly g = f.with_context(dst);
    CHECK(g.str() == "3*q2 + 2*q1");
    CHECK(g.coefficient({1, 0}).value() == 2);
    auto three = GenContext::make(5, {{"a", 1}, {"b", 1}, {"c", 1}});
    CHECK_THROWS_AS(f.with_context(three), usage_error);
    auto other_p = GenContext::make(7, {{"q1", 2}, {"q2", 4}});
    CHECK_THROWS_AS(f.with_context(other_p), usage_error);
}

TEST_CASE("homogeneity detection") {
    auto ctx = GenContext::make(5, {{"x", 1}, {"y", 2}});
    ModPoly f = ModPoly::monomial(ctx, {2, 0}, 1) + ModPoly::monomial(ctx, {0, 1}, 4);
    CHECK(f.is_homogeneous());
    CHECK(f.homogeneous_halfdeg() == 2);
    ModPoly g = f + ModPoly::constant(ctx, 1);
    CHECK_FALSE(g.is_homogeneous());
    CHECK_FALSE(g.homogeneous_halfdeg().has_value());
    CHECK(ModPoly::zero(ctx).is_homogeneous());
    CHECK_FALSE(ModPoly::zero(ctx).homogeneous_halfdeg().has_value());
}

TEST_CASE("mixed-context arithmetic is rejected") {
    auto a = ctx_xy(5);
    auto b = GenContext::make(5, {{"x", 1}, {"y", 2}});
    auto c = ctx_xy(7);
    ModPoly f = ModPoly::generator(a, 0);
    CHECK_THROWS_AS(f + ModPoly::generator(b, 0), usage_error);
    CHECK_THROWS_AS(f * ModPoly::generator(c, 0), usage_error);
    CHECK_THROWS_AS(ModPoly::monomial(a, {1}, 1), usage_error);
    CHECK_THROWS_AS(ModPoly::monomial(a, {1, -1}, 1), usage_error);
}
