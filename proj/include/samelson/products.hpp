#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "samelson/cohomology.hpp"
#include "samelson/scalar.hpp"

namespace samelson {

// Index of a sphere factor of a p-regular group. For the classical
// families eps_i follows the generator subscripts (c_{i+1} for SU(n),
// q_i or p_i otherwise), so eps_i names the factor S^{2 n_i - 1}; for
// exceptional groups eps_i points at the i-th entry of the type
// sequence. theta is the extra half-degree-n factor of SO(2n), the one
// the Euler class transgresses to.
struct ProductIndex {
    enum class Kind { eps, theta };
    Kind kind = Kind::eps;
    int i = 0;  // 1-based position in the type sequence; unused for theta

    static ProductIndex eps(int i) { return {Kind::eps, i}; }
    static ProductIndex theta() { return {Kind::theta, 0}; }
    bool operator==(const ProductIndex& o) const { return kind == o.kind && i == o.i; }
    std::string label() const;
};

// All sphere-factor indices of the group, in generator catalog order:
// eps_1, eps_2, ..., with theta last for SO(2n).
std::vector<ProductIndex> product_indices(const GroupSpec& g);

// The halfdeg n_a of the sphere S^{2 n_a - 1} behind the index.
int sphere_halfdeg(const GroupSpec& g, const ProductIndex& a);

enum class Verdict { nontrivial, trivial, unsupported };
std::string verdict_str(Verdict v);

// A generator whose P^1 contains x_a * x_b with a nonzero coefficient.
struct Witness {
    std::string generator;
    Scalar coeff;
};

// The P^1 criterion's answer for one pair, with the witnesses found.
struct P1Decision {
    Verdict verdict = Verdict::unsupported;
    std::vector<Witness> witnesses;
};

// Both criteria for one pair. agree is empty when either side is
// unsupported or when the cell is the known disagreement (see edge).
struct SamelsonVerdict {
    ProductIndex a, b;
    Verdict p1 = Verdict::unsupported;
    std::vector<Witness> witnesses;
    Verdict closed_form = Verdict::unsupported;
    std::optional<bool> agree;
    // The SU(n) cell (eps_top, eps_top) at p = n: the closed form says
    // nontrivial but no generator survives the degree window, so the
    // two criteria legitimately differ there.
    bool edge = false;
};

// Decide <eps_a, eps_b> != 0 by scanning P^1 of every generator for
// the product x_a * x_b. Requires a p-regular classical group; returns
// unsupported for exceptional families.
P1Decision decide_p1(const GroupSpec& g, const ProductIndex& a, const ProductIndex& b);

// The closed-form answer (degree arithmetic only); works for every
// family, including exceptional ones.
Verdict decide_closed_form(const GroupSpec& g, const ProductIndex& a, const ProductIndex& b);

// Run both criteria and record agreement.
SamelsonVerdict decide_pair(const GroupSpec& g, const ProductIndex& a, const ProductIndex& b);

// decide_pair over all unordered pairs, in index order.
std::vector<SamelsonVerdict> samelson_table(const GroupSpec& g);

// Whether SO(2n-1) -> SO(2n) sits as a normal subgroup candidate at p:
// normal for odd p > 2n-1, not normal otherwise. For odd p <= 2n-1 the
// obstruction <eps_{(p-1)/2}, theta> is verified on the machine via the
// e * p_{(p-1)/2} coefficient of P^1(e); p = 2 is recorded from the
// classical mod-2 answer.
struct NormalityReport {
    int n = 0;
    std::uint64_t p = 0;
    bool normal = false;
    std::optional<ProductIndex> witness_a, witness_b;
    std::optional<Scalar> coeff;  // coefficient of e * p_{(p-1)/2} in P^1(e)
    std::string note;
};

NormalityReport normality(int n, std::uint64_t p);

// Consistency of the <theta, theta> verdict for SO(2n) against the
// p-divisibility of (2n-1)!: the product generates a cyclic group of
// order (2n-1)! up to a factor prime to p, so it is p-locally nonzero
// exactly when nu_p((2n-1)!) > 0. Requires p odd and p >= 2n-1.
struct MahowaldReport {
    int n = 0;
    std::uint64_t p = 0;
    int valuation = 0;
    bool theta_theta_nontrivial = false;
    bool consistent = false;
};

MahowaldReport mahowald_check(int n, std::uint64_t p);

}  // namespace samelson
