#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "samelson/expanded_poly.hpp"
#include "samelson/fp_poly.hpp"

namespace samelson {

// The ring F_p[e_1, ..., e_ell] of symmetric functions in ell variables
// y_1, ..., y_ell, written in the elementary basis. weight is the
// halfdeg of a single variable (1 when y_j is a degree-2 class, 2 when
// it is a square of one), so halfdeg(e_i) = i * weight.
struct ElemBasisContext {
    int ell = 0;
    std::uint64_t p = 0;
    int weight = 1;
    GenContextPtr gens;  // exactly ell generators, gen i-1 <-> e_i
};

// Build a context with default names e1, ..., e<ell>, or custom names.
ElemBasisContext make_elem_context(int ell, std::uint64_t p, int weight);
ElemBasisContext make_elem_context(int ell, std::uint64_t p, int weight,
                                   const std::vector<std::string>& names);

// Power sum s_m = y_1^m + ... + y_ell^m in the elementary basis, via
// Newton's identities
//   s_m = sum_{i=1}^{m-1} (-1)^{i-1} e_i s_{m-i} + (-1)^{m-1} m e_m
// with e_i = 0 for i > ell. Results are memoized per (p, ell).
ModPoly power_sum(int m, const ElemBasisContext& ctx);

// sum_j y_j^m e_k(y with y_j omitted), which equals
//   sum_{r=0}^{k} (-1)^r e_{k-r} s_{m+r}
// and needs k <= ell - 1 for the omitted-variable reading to make sense.
ModPoly weighted_relative_sum(int m, int k, const ElemBasisContext& ctx);

// Image of e_i under the derivation D with D(y_j) = lambda * y_j^m:
//   D(e_i) = lambda * sum_j y_j^m e_{i-1}(y with y_j omitted).
ModPoly p1_elementary(int i, int m, const Scalar& lambda, const ElemBasisContext& ctx);

// Substitute e_i -> e_i(y_1, ..., y_ell) and expand fully.
ExpandedPoly expand(const ModPoly& f, const ElemBasisContext& ctx);

// Inverse of expand on symmetric input: rewrite a symmetric polynomial
// in the elementary basis by greedy elimination of lex-leading terms.
// Asymmetric input raises domain_error naming a transposition that
// fails.
ModPoly symmetrize(const ExpandedPoly& f, const ElemBasisContext& ctx);

}  // namespace samelson
