#include "samelson/oracle.hpp"

#include <stdexcept>

#include "samelson/expanded_poly.hpp"
#include "samelson/symmetric_engine.hpp"

namespace samelson {
namespace oracle {

namespace {

void check_limits(const GroupSpec& g, const OracleLimits& limits) {
    if (g.n > limits.max_ell)
        throw domain_error("oracle: rank " + std::to_string(g.n) + " exceeds max_ell = " +
                           std::to_string(limits.max_ell) + " (raise the limit to force it)");
    if (g.p > limits.max_p)
        throw domain_error("oracle: p = " + std::to_string(g.p) + " exceeds max_p = " +
                           std::to_string(limits.max_p) + " (raise the limit to force it)");
}

ExpandedPoly double_exponents(const ExpandedPoly& f) {
    ExpandedPoly out(f.prime(), f.nvars());
    for (const auto& [m, c] : f.terms()) {
        ExpMonomial mm = m;
        for (int& e : mm) e *= 2;
        out += ExpandedPoly::monomial(f.prime(), f.nvars(), std::move(mm), static_cast<long long>(c));
    }
    return out;
}

ExpandedPoly halve_exponents(const ExpandedPoly& f) {
    ExpandedPoly out(f.prime(), f.nvars());
    for (const auto& [m, c] : f.terms()) {
        ExpMonomial mm = m;
        for (int& e : mm) {
            if (e % 2 != 0) throw std::logic_error("oracle: odd exponent where an even one was forced");
            e /= 2;
        }
        out += ExpandedPoly::monomial(f.prime(), f.nvars(), std::move(mm), static_cast<long long>(c));
    }
    return out;
}

// Divide off one copy of every variable (t_1 ... t_n) from each term.
ExpandedPoly strip_diagonal(const ExpandedPoly& f) {
    ExpandedPoly out(f.prime(), f.nvars());
    for (const auto& [m, c] : f.terms()) {
        ExpMonomial mm = m;
        for (int& e : mm) {
            if (e < 1) throw std::logic_error("oracle: term not divisible by the full product");
            e -= 1;
        }
        out += ExpandedPoly::monomial(f.prime(), f.nvars(), std::move(mm), static_cast<long long>(c));
    }
    return out;
}

ModPoly oracle_su(const GroupSpec& g, int subscript) {
    int n = g.n;
    ExpandedPoly f = ExpandedPoly::elementary(g.p, n, subscript);
    ExpandedPoly df = apply_derivation(f, static_cast<int>(g.p), 1);
    std::vector<std::string> names;
    names.push_back("c1");
    for (const auto& d : g.generators) names.push_back(d.name);
    ElemBasisContext full = make_elem_context(n, g.p, 1, names);
    return symmetrize(df, full).substitute(0, ModPoly::zero(g.gen_ctx));
}

// Common core for the families built from squares y_j = t_j^2: start
// from e_i of the squares written in t, derive with t -> t^p, and read
// the (necessarily even) exponents back as y-exponents.
ExpandedPoly derive_in_squares(std::uint64_t p, int n, int subscript) {
    ExpandedPoly f_y = ExpandedPoly::elementary(p, n, subscript);
    ExpandedPoly f_t = double_exponents(f_y);
    ExpandedPoly df_t = apply_derivation(f_t, static_cast<int>(p), 1);
    return halve_exponents(df_t);
}

ModPoly oracle_sp_like(const GroupSpec& g, int subscript) {
    ElemBasisContext ctx{g.n, g.p, 2, g.gen_ctx};
    return symmetrize(derive_in_squares(g.p, g.n, subscript), ctx);
}

ModPoly oracle_so_even(const GroupSpec& g, std::string_view generator) {
    int n = g.n;
    std::vector<std::string> names;
    for (int k = 1; k <= n; ++k) names.push_back("p" + std::to_string(k));
    ElemBasisContext working = make_elem_context(n, g.p, 2, names);
    ModPoly e = ModPoly::generator(g.gen_ctx, static_cast<std::size_t>(g.gen_ctx->index_of("e")));
    ModPoly e_sq = e * e;
    if (generator == "e") {
        // e is t_1 ... t_n on the torus; derive that product directly.
        ExpMonomial diag(static_cast<std::size_t>(n), 1);
        ExpandedPoly prod = ExpandedPoly::monomial(g.p, n, diag, 1);
        ExpandedPoly dprod = apply_derivation(prod, static_cast<int>(g.p), 1);
        ExpandedPoly in_y = halve_exponents(strip_diagonal(dprod));
        ModPoly s = symmetrize(in_y, working);
        return e * s.substitute(static_cast<std::size_t>(n - 1), e_sq);
    }
    int subscript = 0;
    for (const auto& d : g.generators)
        if (d.name == generator) subscript = d.subscript;
    ModPoly r = symmetrize(derive_in_squares(g.p, n, subscript), working);
    return r.substitute(static_cast<std::size_t>(n - 1), e_sq);
}

}  // namespace

ModPoly brute_force_p1(const GroupSpec& g, std::string_view generator, const OracleLimits& limits) {
    if (!g.classical())
        throw usage_error("oracle: " + g.name() + " has no polynomial generator model here");
    int idx = g.gen_ctx->index_of(generator);
    if (idx < 0)
        throw usage_error("oracle: " + g.name() + " has no generator named '" + std::string(generator) + "'");
    check_limits(g, limits);
    switch (g.family) {
        case Family::SU:
            return oracle_su(g, g.generators[static_cast<std::size_t>(idx)].subscript);
        case Family::Sp:
        case Family::SpinOdd:
            return oracle_sp_like(g, g.generators[static_cast<std::size_t>(idx)].subscript);
        case Family::SOEven:
            return oracle_so_even(g, generator);
        default:
            throw std::logic_error("oracle: unreachable");
    }
}

int factorial_valuation(long long n, std::uint64_t p) {
    if (n < 0) throw usage_error("factorial_valuation: need n >= 0");
    if (p < 2 || !is_prime(p)) throw usage_error("factorial_valuation: p must be prime");
    long long total = 0;
    long long q = static_cast<long long>(p);
    while (q <= n) {
        total += n / q;
        if (q > n / static_cast<long long>(p)) break;  // next q would overflow past n anyway
        q *= static_cast<long long>(p);
    }
    return static_cast<int>(total);
}

}  // namespace oracle
}  // namespace samelson
