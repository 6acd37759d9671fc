#pragma once

#include <random>
#include <vector>

#include "samelson/expanded_poly.hpp"
#include "samelson/fp_poly.hpp"

namespace testutil {

using namespace samelson;

// One fixed-seed generator per test binary keeps runs reproducible.
inline std::mt19937_64& rng() {
    static std::mt19937_64 g(0x5eed5eed5eedULL);
    return g;
}

inline int uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng());
}

inline std::uint64_t small_prime() {
    static const std::uint64_t primes[] = {3, 5, 7, 11, 13};
    return primes[uniform(0, 4)];
}

inline Monomial random_monomial(std::size_t k, int max_exp) {
    Monomial m(k, 0);
    for (auto& e : m) e = uniform(0, max_exp);
    return m;
}

inline ModPoly random_poly(const GenContextPtr& ctx, int max_terms, int max_exp) {
    ModPoly f = ModPoly::zero(ctx);
    int terms = uniform(0, max_terms);
    for (int t = 0; t < terms; ++t)
        f += ModPoly::monomial(ctx, random_monomial(ctx->size(), max_exp),
                               uniform(0, static_cast<int>(ctx->prime()) - 1));
    return f;
}

inline ExpandedPoly random_expanded(std::uint64_t p, int nvars, int max_terms, int max_exp) {
    ExpandedPoly f(p, nvars);
    int terms = uniform(0, max_terms);
    for (int t = 0; t < terms; ++t)
        f += ExpandedPoly::monomial(p, nvars,
                                    random_monomial(static_cast<std::size_t>(nvars), max_exp),
                                    uniform(0, static_cast<int>(p) - 1));
    return f;
}

}  // namespace testutil
