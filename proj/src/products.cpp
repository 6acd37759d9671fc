#include "samelson/products.hpp"

#include <stdexcept>

#include "samelson/oracle.hpp"
#include "samelson/symmetric_engine.hpp"

namespace samelson {

std::string ProductIndex::label() const {
    if (kind == Kind::theta) return "theta";
    return "eps_" + std::to_string(i);
}

std::string verdict_str(Verdict v) {
    switch (v) {
        case Verdict::nontrivial: return "nontrivial";
        case Verdict::trivial: return "trivial";
        case Verdict::unsupported: return "unsupported";
    }
    return "?";
}

namespace {

int eps_count(const GroupSpec& g) {
    switch (g.family) {
        case Family::SU: return g.n - 1;
        case Family::Sp:
        case Family::SpinOdd: return g.n;
        case Family::SOEven: return g.n - 1;
        default: return g.rank();
    }
}

void validate_index(const GroupSpec& g, const ProductIndex& a) {
    if (a.kind == ProductIndex::Kind::theta) {
        if (g.family != Family::SOEven)
            throw usage_error("products: theta only exists for SO(2n), not " + g.name());
        return;
    }
    if (a.i < 1 || a.i > eps_count(g))
        throw usage_error("products: " + g.name() + " has sphere factors eps_1 .. eps_" +
                          std::to_string(eps_count(g)) + ", got " + a.label());
}

// Name of the classifying-space generator transgressing to the factor.
std::string generator_name(const GroupSpec& g, const ProductIndex& a) {
    switch (g.family) {
        case Family::SU: return "c" + std::to_string(a.i + 1);
        case Family::Sp: return "q" + std::to_string(a.i);
        case Family::SpinOdd: return "p" + std::to_string(a.i);
        case Family::SOEven:
            return a.kind == ProductIndex::Kind::theta ? "e" : "p" + std::to_string(a.i);
        default:
            throw usage_error("products: exceptional family has no generator model");
    }
}

P1Decision decide_p1_with_table(const GroupSpec& g,
                                const std::vector<std::pair<GeneratorDescriptor, ModPoly>>& table,
                                const ProductIndex& a, const ProductIndex& b) {
    validate_index(g, a);
    validate_index(g, b);
    int na = sphere_halfdeg(g, a);
    int nb = sphere_halfdeg(g, b);
    int ia = g.gen_ctx->index_of(generator_name(g, a));
    int ib = g.gen_ctx->index_of(generator_name(g, b));
    // A monomial x_a * x_b in P^1(x) forces halfdeg(x) = n_a + n_b - (p-1);
    // scan every generator anyway and check the arithmetic on each hit.
    int needed = na + nb - static_cast<int>(g.p - 1);
    P1Decision out;
    for (const auto& [desc, poly] : table) {
        Scalar c = poly.coefficient_of(static_cast<std::size_t>(ia), static_cast<std::size_t>(ib));
        if (c.is_zero()) continue;
        if (desc.halfdeg != needed)
            throw std::logic_error("products: witness " + desc.name + " violates the degree window");
        out.witnesses.push_back({desc.name, c});
    }
    out.verdict = out.witnesses.empty() ? Verdict::trivial : Verdict::nontrivial;
    return out;
}

void require_p_regular(const GroupSpec& g, const char* who) {
    if (!is_p_regular(g))
        throw domain_error(std::string(who) + ": " + g.name() + " is not p-regular at p = " +
                           std::to_string(g.p) + "; requires p >= n_ell = " +
                           std::to_string(g.type_seq.back()) +
                           " (the p1 command still reports raw Steenrod action)");
}

}  // namespace

std::vector<ProductIndex> product_indices(const GroupSpec& g) {
    std::vector<ProductIndex> out;
    for (int i = 1; i <= eps_count(g); ++i) out.push_back(ProductIndex::eps(i));
    if (g.family == Family::SOEven) out.push_back(ProductIndex::theta());
    return out;
}

int sphere_halfdeg(const GroupSpec& g, const ProductIndex& a) {
    validate_index(g, a);
    if (a.kind == ProductIndex::Kind::theta) return g.n;
    switch (g.family) {
        case Family::SU: return a.i + 1;
        case Family::Sp:
        case Family::SpinOdd:
        case Family::SOEven: return 2 * a.i;
        default: return g.type_seq[static_cast<std::size_t>(a.i - 1)];
    }
}

P1Decision decide_p1(const GroupSpec& g, const ProductIndex& a, const ProductIndex& b) {
    if (!g.classical()) return {Verdict::unsupported, {}};
    require_p_regular(g, "decide_p1");
    return decide_p1_with_table(g, p1_table(g), a, b);
}

Verdict decide_closed_form(const GroupSpec& g, const ProductIndex& a, const ProductIndex& b) {
    require_p_regular(g, "decide_closed_form");
    validate_index(g, a);
    validate_index(g, b);
    long long p = static_cast<long long>(g.p);
    if (g.family == Family::SOEven) {
        bool ta = a.kind == ProductIndex::Kind::theta;
        bool tb = b.kind == ProductIndex::Kind::theta;
        if (ta && tb) return p == 2 * g.n - 1 ? Verdict::nontrivial : Verdict::trivial;
        if (ta || tb) {
            int i = ta ? b.i : a.i;
            return (i == g.n - 1 && p == 2 * g.n - 1) ? Verdict::nontrivial : Verdict::trivial;
        }
        return 2 * a.i + 2 * b.i > p ? Verdict::nontrivial : Verdict::trivial;
    }
    int na = sphere_halfdeg(g, a);
    int nb = sphere_halfdeg(g, b);
    if (!is_exceptional(g.family)) return na + nb > p ? Verdict::nontrivial : Verdict::trivial;
    for (int nk : g.type_seq)
        if (na + nb == nk + static_cast<int>(p) - 1) return Verdict::nontrivial;
    return Verdict::trivial;
}

SamelsonVerdict decide_pair(const GroupSpec& g, const ProductIndex& a, const ProductIndex& b) {
    SamelsonVerdict v;
    v.a = a;
    v.b = b;
    v.closed_form = decide_closed_form(g, a, b);
    if (!g.classical()) {
        v.p1 = Verdict::unsupported;
        return v;
    }
    P1Decision d = decide_p1(g, a, b);
    v.p1 = d.verdict;
    v.witnesses = std::move(d.witnesses);
    bool top_pair = a.kind == ProductIndex::Kind::eps && b.kind == ProductIndex::Kind::eps &&
                    a.i == g.n - 1 && b.i == g.n - 1;
    if (g.family == Family::SU && top_pair && g.p == static_cast<std::uint64_t>(g.n)) {
        // Closed form says nontrivial, but the witness would need a
        // generator of halfdeg n + 1, which SU(n) lacks. Known split.
        v.edge = true;
        return v;
    }
    v.agree = (v.p1 == Verdict::nontrivial) == (v.closed_form == Verdict::nontrivial);
    return v;
}

std::vector<SamelsonVerdict> samelson_table(const GroupSpec& g) {
    require_p_regular(g, "samelson_table");
    auto idx = product_indices(g);
    std::vector<std::pair<GeneratorDescriptor, ModPoly>> table;
    if (g.classical()) table = p1_table(g);
    std::vector<SamelsonVerdict> out;
    for (std::size_t x = 0; x < idx.size(); ++x) {
        for (std::size_t y = x; y < idx.size(); ++y) {
            if (!g.classical()) {
                out.push_back(decide_pair(g, idx[x], idx[y]));
                continue;
            }
            SamelsonVerdict v;
            v.a = idx[x];
            v.b = idx[y];
            v.closed_form = decide_closed_form(g, idx[x], idx[y]);
            P1Decision d = decide_p1_with_table(g, table, idx[x], idx[y]);
            v.p1 = d.verdict;
            v.witnesses = std::move(d.witnesses);
            bool top_pair = idx[x].kind == ProductIndex::Kind::eps &&
                            idx[y].kind == ProductIndex::Kind::eps && idx[x].i == g.n - 1 &&
                            idx[y].i == g.n - 1;
            if (g.family == Family::SU && top_pair && g.p == static_cast<std::uint64_t>(g.n))
                v.edge = true;
            else
                v.agree = (v.p1 == Verdict::nontrivial) == (v.closed_form == Verdict::nontrivial);
            out.push_back(std::move(v));
        }
    }
    return out;
}

NormalityReport normality(int n, std::uint64_t p) {
    if (n < 2) throw usage_error("normality: needs n >= 2 (SO(2n) with 2n >= 4)");
    if (!is_prime(p)) throw usage_error("normality: p must be prime, got " + std::to_string(p));
    NormalityReport r;
    r.n = n;
    r.p = p;
    if (p == 2) {
        r.normal = false;
        r.note = "mod-2 case: classical computation, not re-derived here";
        return r;
    }
    if (p > static_cast<std::uint64_t>(2 * n - 1)) {
        r.normal = true;
        return r;
    }
    // Odd p <= 2n-1: P^1(e) contains e * p_{(p-1)/2} with a nonzero
    // coefficient, which obstructs normality. This needs no
    // p-regularity, so compute it directly.
    int k = static_cast<int>((p - 1) / 2);
    GroupSpec g = make_group(Family::SOEven, n, p);
    ModPoly pe = steenrod_p1(g, "e");
    Monomial m(g.gen_ctx->size(), 0);
    m[static_cast<std::size_t>(k - 1)] += 1;               // p_{(p-1)/2}
    m[static_cast<std::size_t>(g.gen_ctx->size() - 1)] += 1;  // e
    Scalar c = pe.coefficient(m);
    if (c.is_zero()) throw std::logic_error("normality: expected obstruction coefficient vanished");
    r.normal = false;
    r.witness_a = ProductIndex::eps(k);
    r.witness_b = ProductIndex::theta();
    r.coeff = c;
    return r;
}

MahowaldReport mahowald_check(int n, std::uint64_t p) {
    if (n < 2) throw usage_error("mahowald_check: needs n >= 2");
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw usage_error("mahowald_check: p must be an odd prime, got " + std::to_string(p));
    if (p < static_cast<std::uint64_t>(2 * n - 1))
        throw domain_error("mahowald_check: needs p >= 2n-1 = " + std::to_string(2 * n - 1) +
                           " (p-regular range), got p = " + std::to_string(p));
    MahowaldReport r;
    r.n = n;
    r.p = p;
    r.valuation = oracle::factorial_valuation(2 * n - 1, p);
    GroupSpec g = make_group(Family::SOEven, n, p);
    P1Decision d = decide_p1(g, ProductIndex::theta(), ProductIndex::theta());
    r.theta_theta_nontrivial = d.verdict == Verdict::nontrivial;
    r.consistent = (r.valuation > 0) == r.theta_theta_nontrivial;
    return r;
}

}  // namespace samelson
