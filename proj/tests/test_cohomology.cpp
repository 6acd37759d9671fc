#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "samelson/cohomology.hpp"
#include "samelson/symmetric_engine.hpp"
#include "test_util.hpp"

using namespace samelson;

namespace {

// Drop every term lying in the square of the ideal (p_1, ..., p_{n-1}).
ModPoly mod_pontryagin_squares(const ModPoly& f, int n) {
    ModPoly out = ModPoly::zero(f.context());
    for (const auto& [m, c] : f.terms()) {
        int ptotal = 0;
        for (int i = 0; i < n - 1; ++i) ptotal += m[static_cast<std::size_t>(i)];
        if (ptotal <= 1) out += ModPoly::monomial(f.context(), m, static_cast<long long>(c));
    }
    return out;
}

}  // namespace

TEST_CASE("group catalog: types, generators, names") {
    GroupSpec su4 = make_group(Family::SU, 4, 5);
    CHECK(su4.name() == "SU(4)");
    CHECK(su4.type_seq == std::vector<int>{2, 3, 4});
    REQUIRE(su4.generators.size() == 3);
    CHECK(su4.generators[0].name == "c2");
    CHECK(su4.generators[0].halfdeg == 2);
    CHECK(su4.generators[2].name == "c4");

    GroupSpec sp3 = make_group(Family::Sp, 3, 7);
    CHECK(sp3.name() == "Sp(3)");
    CHECK(sp3.type_seq == std::vector<int>{2, 4, 6});
    CHECK(sp3.generators[2].name == "q3");
    CHECK(sp3.generators[2].halfdeg == 6);

    GroupSpec spin7 = make_group(Family::SpinOdd, 3, 7);
    CHECK(spin7.name() == "SO(7)");
    CHECK(spin7.type_seq == std::vector<int>{2, 4, 6});
    CHECK(spin7.generators[1].name == "p2");

    GroupSpec so12 = make_group(Family::SOEven, 6, 11);
    CHECK(so12.name() == "SO(12)");
    CHECK(so12.type_seq == std::vector<int>{2, 4, 6, 6, 8, 10});
    REQUIRE(so12.generators.size() == 6);
    CHECK(so12.generators[4].name == "p5");
    CHECK(so12.generators[5].name == "e");
    CHECK(so12.generators[5].halfdeg == 6);

    GroupSpec so4 = make_group(Family::SOEven, 2, 3);
    CHECK(so4.type_seq == std::vector<int>{2, 2});
    CHECK(so4.generators[0].name == "p1");
    CHECK(so4.generators[1].name == "e");
    CHECK(so4.generators[1].halfdeg == 2);

    CHECK(make_group(Family::G2, 0, 7).type_seq == std::vector<int>{2, 6});
    CHECK(make_group(Family::F4, 0, 13).type_seq == std::vector<int>{2, 6, 8, 12});
    CHECK(make_group(Family::E6, 0, 13).type_seq == std::vector<int>{2, 5, 6, 8, 9, 12});
    CHECK(make_group(Family::E7, 0, 19).type_seq == std::vector<int>{2, 6, 8, 10, 12, 14, 18});
    CHECK(make_group(Family::E8, 0, 31).type_seq == std::vector<int>{2, 8, 12, 14, 18, 20, 24, 30});
    CHECK(make_group(Family::E8, 0, 31).generators.empty());
    CHECK(make_group(Family::G2, 0, 7).name() == "G2");
}

TEST_CASE("p-regularity is p >= largest type entry") {
    CHECK(is_p_regular(make_group(Family::SU, 4, 5)));
    CHECK_FALSE(is_p_regular(make_group(Family::SU, 4, 3)));
    CHECK(is_p_regular(make_group(Family::SOEven, 6, 11)));
    CHECK_FALSE(is_p_regular(make_group(Family::SOEven, 6, 7)));
    CHECK(is_p_regular(make_group(Family::E8, 0, 31)));
    CHECK_FALSE(is_p_regular(make_group(Family::E8, 0, 29)));
    CHECK(is_p_regular(make_group(Family::SOEven, 2, 3)));
}

TEST_CASE("make_group rejects invalid parameters") {
    CHECK_THROWS_AS(make_group(Family::SU, 1, 5), usage_error);
    CHECK_THROWS_AS(make_group(Family::Sp, 0, 5), usage_error);
    CHECK_THROWS_AS(make_group(Family::SpinOdd, 0, 5), usage_error);
    CHECK_THROWS_AS(make_group(Family::SOEven, 1, 5), usage_error);
    CHECK_THROWS_AS(make_group(Family::SU, 4, 2), usage_error);
    CHECK_THROWS_AS(make_group(Family::SU, 4, 9), usage_error);
    CHECK_THROWS_AS(make_group(Family::G2, 0, 4), usage_error);
}

TEST_CASE("P^1 goldens on small groups") {
    GroupSpec su4 = make_group(Family::SU, 4, 3);
    CHECK(steenrod_p1(su4, "c2").str() == "1*c2^2 + 1*c4");
    CHECK(steenrod_p1(su4, "c3").str() == "1*c2*c3");
    CHECK(steenrod_p1(su4, "c4").str() == "1*c2*c4");

    GroupSpec so6 = make_group(Family::SOEven, 3, 5);
    CHECK(steenrod_p1(so6, "p1").str() == "2*p1^3 + 4*p1*p2 + 1*e^2");
    CHECK(steenrod_p1(so6, "e").str() == "1*p1^2*e + 3*p2*e");

    GroupSpec sp2 = make_group(Family::Sp, 2, 5);
    CHECK(steenrod_p1(sp2, "q1").str() == "2*q1^3 + 4*q1*q2");
    CHECK(steenrod_p1(sp2, "q2").str() == "2*q1^2*q2 + 1*q2^2");

    // SU(2) at p = 3: P^1 c2 = c2^p on the degree-2 class... via e-basis.
    GroupSpec su2 = make_group(Family::SU, 2, 3);
    CHECK(steenrod_p1(su2, "c2").str() == "1*c2^2");
}

TEST_CASE("power sum with the first Chern class killed") {
    // s_4 = e1^4 - 4 e1^2 e2 + 2 e2^2 + 4 e1 e3 - 4 e4 over four
    // variables collapses to 2 e2^2 - 4 e4 once e1 = 0.
    GroupSpec su4 = make_group(Family::SU, 4, 11);
    std::vector<std::string> names = {"c1", "c2", "c3", "c4"};
    ElemBasisContext full = make_elem_context(4, 11, 1, names);
    ModPoly s4 = power_sum(4, full).substitute(0, ModPoly::zero(su4.gen_ctx));
    CHECK(s4.str(true) == "2*c2^2 - 4*c4");
}

TEST_CASE("P^1 raises halfdeg by exactly p - 1") {
    for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
        std::vector<GroupSpec> groups;
        for (int n = 2; n <= 5; ++n) groups.push_back(make_group(Family::SU, n, p));
        for (int n = 1; n <= 5; ++n) groups.push_back(make_group(Family::Sp, n, p));
        for (int n = 1; n <= 5; ++n) groups.push_back(make_group(Family::SpinOdd, n, p));
        for (int n = 2; n <= 5; ++n) groups.push_back(make_group(Family::SOEven, n, p));
        for (const auto& g : groups) {
            for (const auto& [desc, poly] : p1_table(g)) {
                CHECK(poly.is_homogeneous());
                if (!poly.is_zero())
                    CHECK(poly.homogeneous_halfdeg() == desc.halfdeg + static_cast<int>(p) - 1);
            }
        }
    }
}

TEST_CASE("Sp(n) and SO(2n+1) have identical P^1 tables under renaming") {
    for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
        for (int n = 1; n <= 5; ++n) {
            GroupSpec sp = make_group(Family::Sp, n, p);
            GroupSpec spin = make_group(Family::SpinOdd, n, p);
            auto ta = p1_table(sp);
            auto tb = p1_table(spin);
            REQUIRE(ta.size() == tb.size());
            for (std::size_t i = 0; i < ta.size(); ++i) {
                CHECK(ta[i].first.halfdeg == tb[i].first.halfdeg);
                CHECK(ta[i].second == tb[i].second.with_context(sp.gen_ctx));
            }
        }
    }
}

TEST_CASE("P^1 of Pontryagin classes only sees even Euler powers") {
    for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
        for (int n = 2; n <= 6; ++n) {
            GroupSpec g = make_group(Family::SOEven, n, p);
            std::size_t e_idx = g.gen_ctx->size() - 1;
            for (const auto& d : g.generators) {
                if (d.name == "e") continue;
                ModPoly row = steenrod_p1(g, d.name);
                for (const auto& [m, c] : row.terms()) CHECK(m[e_idx] % 2 == 0);
            }
        }
    }
}

TEST_CASE("at p = 2n-1 the Euler square leads P^1 p_1") {
    // P^1 p_1 = (-1)^{(p-1)/2} e^2 modulo (p_1, ..., p_{n-1})^2.
    for (int n : {3, 4, 6, 7}) {
        std::uint64_t p = static_cast<std::uint64_t>(2 * n - 1);
        if (!is_prime(p)) continue;
        GroupSpec g = make_group(Family::SOEven, n, p);
        ModPoly reduced = mod_pontryagin_squares(steenrod_p1(g, "p1"), n);
        long long sign = ((p - 1) / 2) % 2 == 0 ? 1 : -1;
        Monomial esq(g.gen_ctx->size(), 0);
        esq[g.gen_ctx->size() - 1] = 2;
        CHECK(reduced == ModPoly::monomial(g.gen_ctx, esq, sign));
    }
}

TEST_CASE("restriction stability: killing the top class recovers the smaller group") {
    for (std::uint64_t p : {3ULL, 5ULL, 7ULL}) {
        for (int n = 2; n <= 5; ++n) {
            GroupSpec big = make_group(Family::SU, n + 1, p);
            GroupSpec small = make_group(Family::SU, n, p);
            std::size_t top = big.gen_ctx->size() - 1;
            for (const auto& d : small.generators) {
                ModPoly restricted = steenrod_p1(big, d.name).substitute(top, ModPoly::zero(small.gen_ctx));
                CHECK(restricted == steenrod_p1(small, d.name));
            }
        }
        for (int n = 1; n <= 4; ++n) {
            GroupSpec big = make_group(Family::Sp, n + 1, p);
            GroupSpec small = make_group(Family::Sp, n, p);
            std::size_t top = big.gen_ctx->size() - 1;
            for (const auto& d : small.generators) {
                ModPoly restricted = steenrod_p1(big, d.name).substitute(top, ModPoly::zero(small.gen_ctx));
                CHECK(restricted == steenrod_p1(small, d.name));
            }
        }
    }
}

TEST_CASE("steenrod_p1 rejects unknown generators and exceptional groups") {
    GroupSpec su4 = make_group(Family::SU, 4, 5);
    CHECK_THROWS_AS(steenrod_p1(su4, "c9"), usage_error);
    CHECK_THROWS_AS(steenrod_p1(su4, "e"), usage_error);
    CHECK_THROWS_AS(steenrod_p1(make_group(Family::G2, 0, 7), "x"), usage_error);
    CHECK_THROWS_WITH_AS(steenrod_p1(make_group(Family::E8, 0, 31), "x"),
                         doctest::Contains("no polynomial generator model"), usage_error);
}
