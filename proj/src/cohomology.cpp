#include "samelson/cohomology.hpp"

#include <algorithm>

#include "samelson/symmetric_engine.hpp"

namespace samelson {

bool is_exceptional(Family f) {
    switch (f) {
        case Family::SU:
        case Family::Sp:
        case Family::SpinOdd:
        case Family::SOEven:
            return false;
        default:
            return true;
    }
}

std::string family_name(Family f) {
    switch (f) {
        case Family::SU: return "SU";
        case Family::Sp: return "Sp";
        case Family::SpinOdd: return "SpinOdd";
        case Family::SOEven: return "SOEven";
        case Family::G2: return "G2";
        case Family::F4: return "F4";
        case Family::E6: return "E6";
        case Family::E7: return "E7";
        case Family::E8: return "E8";
    }
    return "?";
}

std::string GroupSpec::name() const {
    switch (family) {
        case Family::SU: return "SU(" + std::to_string(n) + ")";
        case Family::Sp: return "Sp(" + std::to_string(n) + ")";
        case Family::SpinOdd: return "SO(" + std::to_string(2 * n + 1) + ")";
        case Family::SOEven: return "SO(" + std::to_string(2 * n) + ")";
        default: return family_name(family);
    }
}

namespace {

void require_odd_prime(std::uint64_t p, const std::string& who) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw usage_error(who + ": p must be an odd prime, got " + std::to_string(p));
}

std::vector<int> exceptional_type(Family f) {
    switch (f) {
        case Family::G2: return {2, 6};
        case Family::F4: return {2, 6, 8, 12};
        case Family::E6: return {2, 5, 6, 8, 9, 12};
        case Family::E7: return {2, 6, 8, 10, 12, 14, 18};
        case Family::E8: return {2, 8, 12, 14, 18, 20, 24, 30};
        default: throw std::logic_error("exceptional_type: not exceptional");
    }
}

}  // namespace

GroupSpec make_group(Family family, int n, std::uint64_t p) {
    GroupSpec g;
    g.family = family;
    g.n = n;
    g.p = p;
    require_odd_prime(p, "make_group(" + family_name(family) + ")");

    switch (family) {
        case Family::SU: {
            if (n < 2) throw usage_error("make_group: SU(n) needs n >= 2, got n = " + std::to_string(n));
            for (int k = 2; k <= n; ++k) {
                g.type_seq.push_back(k);
                g.generators.push_back({"c" + std::to_string(k), k, k});
            }
            break;
        }
        case Family::Sp:
        case Family::SpinOdd: {
            if (n < 1)
                throw usage_error("make_group: " + family_name(family) + "(n) needs n >= 1, got n = " +
                                  std::to_string(n));
            const char* stem = (family == Family::Sp) ? "q" : "p";
            for (int k = 1; k <= n; ++k) {
                g.type_seq.push_back(2 * k);
                g.generators.push_back({stem + std::to_string(k), 2 * k, k});
            }
            break;
        }
        case Family::SOEven: {
            if (n < 2) throw usage_error("make_group: SO(2n) needs n >= 2, got n = " + std::to_string(n));
            for (int k = 1; k <= n - 1; ++k) g.type_seq.push_back(2 * k);
            g.type_seq.push_back(n);
            std::sort(g.type_seq.begin(), g.type_seq.end());
            for (int k = 1; k <= n - 1; ++k) g.generators.push_back({"p" + std::to_string(k), 2 * k, k});
            g.generators.push_back({"e", n, 0});
            break;
        }
        default: {
            g.type_seq = exceptional_type(family);
            break;
        }
    }

    std::vector<Generator> gens;
    for (const auto& d : g.generators) gens.push_back({d.name, d.halfdeg});
    g.gen_ctx = GenContext::make(p, std::move(gens));
    return g;
}

bool is_p_regular(const GroupSpec& g) {
    return g.p >= static_cast<std::uint64_t>(g.type_seq.back());
}

namespace {

// Working context whose e_i carry the family's generator names, so
// results land directly in the right ring (or one substitution away).
ModPoly p1_su(const GroupSpec& g, int subscript) {
    // c_i is e_i in the Chern roots t_j (halfdeg 1), and P^1 t = t^p.
    std::vector<std::string> names;
    names.push_back("c1");
    for (const auto& d : g.generators) names.push_back(d.name);
    ElemBasisContext full = make_elem_context(g.n, g.p, 1, names);
    ModPoly r = p1_elementary(subscript, static_cast<int>(g.p), Scalar(1, g.p), full);
    // H*(BSU) has no c1: divide it out.
    return r.substitute(0, ModPoly::zero(g.gen_ctx));
}

ModPoly p1_symplectic_like(const GroupSpec& g, int subscript) {
    // q_i (resp. p_i) is e_i in the squares y_j = t_j^2 (halfdeg 2),
    // and P^1 y = 2 y^{(p+1)/2}.
    std::vector<std::string> names;
    for (const auto& d : g.generators) names.push_back(d.name);
    ElemBasisContext ctx{g.n, g.p, 2, g.gen_ctx};
    return p1_elementary(subscript, static_cast<int>((g.p + 1) / 2), Scalar(2, g.p), ctx);
}

ModPoly p1_so_even(const GroupSpec& g, std::string_view generator) {
    // Pontryagin classes behave as for SO(2n+1) in e_1, ..., e_n of the
    // squares, but e_n(y) is the square of the Euler class.
    std::vector<std::string> names;
    for (int k = 1; k <= g.n; ++k) names.push_back("p" + std::to_string(k));
    ElemBasisContext working = make_elem_context(g.n, g.p, 2, names);
    int e_idx = g.gen_ctx->index_of("e");
    ModPoly e = ModPoly::generator(g.gen_ctx, static_cast<std::size_t>(e_idx));
    ModPoly e_sq = e * e;
    if (generator == "e") {
        // P^1(t_1 ... t_n) = (t_1 ... t_n) * sum_j (t_j^2)^{(p-1)/2}.
        ModPoly s = power_sum(static_cast<int>((g.p - 1) / 2), working);
        return e * s.substitute(static_cast<std::size_t>(g.n - 1), e_sq);
    }
    int subscript = 0;
    for (const auto& d : g.generators)
        if (d.name == generator) subscript = d.subscript;
    ModPoly r = p1_elementary(subscript, static_cast<int>((g.p + 1) / 2), Scalar(2, g.p), working);
    return r.substitute(static_cast<std::size_t>(g.n - 1), e_sq);
}

}  // namespace

ModPoly steenrod_p1(const GroupSpec& g, std::string_view generator) {
    if (!g.classical())
        throw usage_error("steenrod_p1: " + g.name() +
                          " has no polynomial generator model here; only SU, Sp, SO are supported");
    int idx = g.gen_ctx->index_of(generator);
    if (idx < 0)
        throw usage_error("steenrod_p1: " + g.name() + " has no generator named '" +
                          std::string(generator) + "'");
    switch (g.family) {
        case Family::SU:
            return p1_su(g, g.generators[static_cast<std::size_t>(idx)].subscript);
        case Family::Sp:
        case Family::SpinOdd:
            return p1_symplectic_like(g, g.generators[static_cast<std::size_t>(idx)].subscript);
        case Family::SOEven:
            return p1_so_even(g, generator);
        default:
            throw std::logic_error("steenrod_p1: unreachable");
    }
}

std::vector<std::pair<GeneratorDescriptor, ModPoly>> p1_table(const GroupSpec& g) {
    std::vector<std::pair<GeneratorDescriptor, ModPoly>> out;
    for (const auto& d : g.generators) out.emplace_back(d, steenrod_p1(g, d.name));
    return out;
}

}  // namespace samelson
