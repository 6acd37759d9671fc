#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "samelson/fp_poly.hpp"

namespace samelson {

// The simple Lie group families handled here. SpinOdd(n) is the
// compact group behind SO(2n+1); SOEven(n) the one behind SO(2n).
enum class Family { SU, Sp, SpinOdd, SOEven, G2, F4, E6, E7, E8 };

bool is_exceptional(Family f);
std::string family_name(Family f);

// A cohomology generator of BG: its name, halfdeg (|x| = 2 * halfdeg),
// and its subscript in the family's naming scheme (c_k, q_k, p_k; 0
// for the Euler class e).
struct GeneratorDescriptor {
    std::string name;
    int halfdeg = 0;
    int subscript = 0;
};

// A group at an odd prime p: rational type n_1 <= ... <= n_ell and,
// for the classical families, the polynomial generators of H*(BG; F_p).
struct GroupSpec {
    Family family = Family::SU;
    int n = 0;  // rank parameter; ignored for exceptional groups
    std::uint64_t p = 0;
    std::vector<int> type_seq;
    std::vector<GeneratorDescriptor> generators;
    GenContextPtr gen_ctx;  // generators in catalog order; empty for exceptional

    bool classical() const { return !is_exceptional(family); }
    std::string name() const;
    int rank() const { return static_cast<int>(type_seq.size()); }
};

// Validates the family/rank/prime combination and fills in the catalog
// data. For exceptional families n is ignored.
GroupSpec make_group(Family family, int n, std::uint64_t p);

// p >= n_ell, i.e. H*(G; F_p) looks like a product of spheres.
bool is_p_regular(const GroupSpec& g);

// The Steenrod power P^1 on the named generator of H*(BG; F_p),
// computed through the elementary-symmetric basis. Classical families
// only.
ModPoly steenrod_p1(const GroupSpec& g, std::string_view generator);

// P^1 of every generator, in catalog order.
std::vector<std::pair<GeneratorDescriptor, ModPoly>> p1_table(const GroupSpec& g);

}  // namespace samelson
