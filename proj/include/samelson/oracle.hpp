#pragma once

#include <cstdint>

#include "samelson/cohomology.hpp"
#include "samelson/fp_poly.hpp"

namespace samelson {
namespace oracle {

// Cost guard for the brute-force path; callers may raise the bounds
// explicitly if they accept the blow-up.
struct OracleLimits {
    int max_ell = 6;
    std::uint64_t max_p = 13;
};

// P^1 on a classifying-space generator computed the slow, direct way:
// write the generator as a polynomial in torus variables t_j, apply
// the derivation t -> t^p monomial by monomial, and rewrite the result
// back into the generator basis by greedy symmetrization. No Newton
// recurrence and no closed derivation formula is used, so this is an
// independent check of steenrod_p1.
ModPoly brute_force_p1(const GroupSpec& g, std::string_view generator, const OracleLimits& limits = {});

// nu_p(N!) by Legendre's formula, sum of floor(N / p^i).
int factorial_valuation(long long n, std::uint64_t p);

}  // namespace oracle
}  // namespace samelson
