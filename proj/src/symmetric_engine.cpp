#include "samelson/symmetric_engine.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace samelson {

namespace {

void check_ctx(const ElemBasisContext& ctx, const char* where) {
    if (ctx.ell < 1) throw usage_error(std::string(where) + ": need ell >= 1");
    if (!ctx.gens) throw usage_error(std::string(where) + ": null generator context");
    if (ctx.gens->size() != static_cast<std::size_t>(ctx.ell))
        throw usage_error(std::string(where) + ": generator count does not match ell");
    if (ctx.gens->prime() != ctx.p) throw usage_error(std::string(where) + ": prime mismatch");
}

// Power sums in a canonical weight-1 context, memoized per (p, ell).
// The coefficients of s_m in the e-basis do not depend on the weight,
// so callers relabel into their own context afterwards.
const ModPoly& cached_power_sum(int m, std::uint64_t p, int ell) {
    struct CacheEntry {
        GenContextPtr ctx;
        std::vector<ModPoly> s;  // s[0] unused placeholder, s[m] = power sum
    };
    static std::map<std::pair<std::uint64_t, int>, CacheEntry> cache;
    static std::mutex mu;

    std::lock_guard<std::mutex> lock(mu);
    auto& entry = cache[{p, ell}];
    if (!entry.ctx) {
        std::vector<Generator> gens;
        for (int i = 1; i <= ell; ++i) gens.push_back({"e" + std::to_string(i), i});
        entry.ctx = GenContext::make(p, std::move(gens));
        entry.s.push_back(ModPoly::zero(entry.ctx));
    }
    while (static_cast<int>(entry.s.size()) <= m) {
        int k = static_cast<int>(entry.s.size());
        ModPoly acc = ModPoly::zero(entry.ctx);
        for (int i = 1; i <= k - 1 && i <= ell; ++i) {
            ModPoly t = ModPoly::generator(entry.ctx, static_cast<std::size_t>(i - 1)) * entry.s[static_cast<std::size_t>(k - i)];
            acc += (i % 2 == 1) ? t : -t;
        }
        if (k <= ell) {
            ModPoly t = ModPoly::generator(entry.ctx, static_cast<std::size_t>(k - 1)).times(k);
            acc += (k % 2 == 1) ? t : -t;
        }
        entry.s.push_back(std::move(acc));
    }
    return entry.s[static_cast<std::size_t>(m)];
}

}  // namespace

ElemBasisContext make_elem_context(int ell, std::uint64_t p, int weight) {
    std::vector<std::string> names;
    for (int i = 1; i <= ell; ++i) names.push_back("e" + std::to_string(i));
    return make_elem_context(ell, p, weight, names);
}

ElemBasisContext make_elem_context(int ell, std::uint64_t p, int weight,
                                   const std::vector<std::string>& names) {
    if (ell < 1) throw usage_error("make_elem_context: need ell >= 1");
    if (weight < 1) throw usage_error("make_elem_context: need weight >= 1");
    if (names.size() != static_cast<std::size_t>(ell))
        throw usage_error("make_elem_context: need exactly ell names");
    std::vector<Generator> gens;
    for (int i = 1; i <= ell; ++i) gens.push_back({names[static_cast<std::size_t>(i - 1)], i * weight});
    return ElemBasisContext{ell, p, weight, GenContext::make(p, std::move(gens))};
}

ModPoly power_sum(int m, const ElemBasisContext& ctx) {
    check_ctx(ctx, "power_sum");
    if (m < 1) throw usage_error("power_sum: need m >= 1, got " + std::to_string(m));
    return cached_power_sum(m, ctx.p, ctx.ell).with_context(ctx.gens);
}

ModPoly weighted_relative_sum(int m, int k, const ElemBasisContext& ctx) {
    check_ctx(ctx, "weighted_relative_sum");
    if (m < 1) throw usage_error("weighted_relative_sum: need m >= 1, got " + std::to_string(m));
    if (k < 0 || k > ctx.ell - 1)
        throw usage_error("weighted_relative_sum: need 0 <= k <= ell-1, got k = " + std::to_string(k) +
                          " with ell = " + std::to_string(ctx.ell));
    ModPoly acc = ModPoly::zero(ctx.gens);
    for (int r = 0; r <= k; ++r) {
        ModPoly t = power_sum(m + r, ctx);
        if (k - r > 0) t = ModPoly::generator(ctx.gens, static_cast<std::size_t>(k - r - 1)) * t;
        acc += (r % 2 == 0) ? t : -t;
    }
    return acc;
}

ModPoly p1_elementary(int i, int m, const Scalar& lambda, const ElemBasisContext& ctx) {
    check_ctx(ctx, "p1_elementary");
    if (i < 1 || i > ctx.ell)
        throw usage_error("p1_elementary: need 1 <= i <= ell, got i = " + std::to_string(i));
    if (lambda.modulus() != ctx.p) throw usage_error("p1_elementary: lambda has wrong modulus");
    return weighted_relative_sum(m, i - 1, ctx).times(static_cast<long long>(lambda.value()));
}

ExpandedPoly expand(const ModPoly& f, const ElemBasisContext& ctx) {
    check_ctx(ctx, "expand");
    if (!f.context()->same_as(*ctx.gens)) throw usage_error("expand: polynomial not over the given context");
    ExpandedPoly out(ctx.p, ctx.ell);
    for (const auto& [mono, c] : f.terms()) {
        ExpandedPoly t = ExpandedPoly::monomial(ctx.p, ctx.ell, ExpMonomial(), static_cast<long long>(c));
        for (int i = 0; i < ctx.ell; ++i) {
            if (mono[static_cast<std::size_t>(i)] == 0) continue;
            ExpandedPoly e = ExpandedPoly::elementary(ctx.p, ctx.ell, i + 1);
            for (int rep = 0; rep < mono[static_cast<std::size_t>(i)]; ++rep) t = t * e;
        }
        out += t;
    }
    return out;
}

ModPoly symmetrize(const ExpandedPoly& f, const ElemBasisContext& ctx) {
    check_ctx(ctx, "symmetrize");
    if (f.prime() != ctx.p) throw usage_error("symmetrize: prime mismatch");
    if (f.nvars() != ctx.ell) throw usage_error("symmetrize: variable count does not match ell");
    // Adjacent transpositions generate the symmetric group, so checking
    // them checks full symmetry.
    for (int a = 0; a + 1 < ctx.ell; ++a) {
        if (f.swap_vars(a, a + 1) != f)
            throw domain_error("symmetrize: input is not symmetric (fails under swapping y" +
                               std::to_string(a + 1) + " <-> y" + std::to_string(a + 2) + ")");
    }

    ModPoly out = ModPoly::zero(ctx.gens);
    ExpandedPoly work = f;
    while (!work.is_zero()) {
        const auto& [lead, c] = *work.terms().begin();
        // A symmetric polynomial's lex-leading exponents are weakly
        // decreasing; anything else means the invariant broke.
        for (int j = 0; j + 1 < ctx.ell; ++j)
            if (lead[static_cast<std::size_t>(j)] < lead[static_cast<std::size_t>(j + 1)])
                throw std::logic_error("symmetrize: leading term not weakly decreasing");
        Monomial emono(static_cast<std::size_t>(ctx.ell), 0);
        for (int j = 0; j < ctx.ell; ++j) {
            int next = (j + 1 < ctx.ell) ? lead[static_cast<std::size_t>(j + 1)] : 0;
            emono[static_cast<std::size_t>(j)] = lead[static_cast<std::size_t>(j)] - next;
        }
        ModPoly piece = ModPoly::monomial(ctx.gens, std::move(emono), static_cast<long long>(c));
        out += piece;
        work -= expand(piece, ctx);
    }
    return out;
}

}  // namespace samelson
