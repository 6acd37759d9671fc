#include "samelson/fp_poly.hpp"

#include <algorithm>
#include <set>

namespace samelson {

GenContextPtr GenContext::make(std::uint64_t p, std::vector<Generator> gens) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw usage_error("GenContext: modulus must be an odd prime, got " + std::to_string(p));
    std::set<std::string> seen;
    for (const auto& g : gens) {
        if (g.name.empty()) throw usage_error("GenContext: empty generator name");
        if (g.halfdeg < 1)
            throw usage_error("GenContext: generator " + g.name + " needs halfdeg >= 1, got " +
                              std::to_string(g.halfdeg));
        if (!seen.insert(g.name).second) throw usage_error("GenContext: duplicate generator name " + g.name);
    }
    return GenContextPtr(new GenContext(p, std::move(gens)));
}

const Generator& GenContext::gen(std::size_t i) const {
    if (i >= gens_.size())
        throw usage_error("GenContext: generator index " + std::to_string(i) + " out of range (size " +
                          std::to_string(gens_.size()) + ")");
    return gens_[i];
}

int GenContext::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return static_cast<int>(i);
    return -1;
}

bool GenContext::same_as(const GenContext& o) const {
    if (this == &o) return true;
    if (p_ != o.p_ || gens_.size() != o.gens_.size()) return false;
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name != o.gens_[i].name || gens_[i].halfdeg != o.gens_[i].halfdeg) return false;
    return true;
}

int monomial_halfdeg(const GenContext& ctx, const Monomial& m) {
    int d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * ctx.gen(i).halfdeg;
    return d;
}

bool TermOrder::operator()(const Monomial& a, const Monomial& b) const {
    int da = monomial_halfdeg(*ctx, a);
    int db = monomial_halfdeg(*ctx, b);
    if (da != db) return da > db;
    return a > b;  // lexicographically larger exponent vector first
}

ModPoly::ModPoly(GenContextPtr ctx) : ctx_(std::move(ctx)), terms_(TermOrder{ctx_}) {
    if (!ctx_) throw usage_error("ModPoly: null context");
}

std::uint64_t ModPoly::prime() const { return ctx_->prime(); }

ModPoly ModPoly::zero(GenContextPtr ctx) { return ModPoly(std::move(ctx)); }

ModPoly ModPoly::constant(GenContextPtr ctx, long long c) {
    return monomial(std::move(ctx), Monomial(), c);
}

ModPoly ModPoly::generator(GenContextPtr ctx, std::size_t i) {
    ctx->gen(i);  // bounds check
    Monomial m(ctx->size(), 0);
    m[i] = 1;
    return monomial(std::move(ctx), std::move(m), 1);
}

ModPoly ModPoly::monomial(GenContextPtr ctx, Monomial m, long long c) {
    ModPoly out(std::move(ctx));
    if (m.empty()) m.assign(out.ctx_->size(), 0);
    if (m.size() != out.ctx_->size())
        throw usage_error("ModPoly: monomial has " + std::to_string(m.size()) + " exponents, context has " +
                          std::to_string(out.ctx_->size()));
    for (int e : m)
        if (e < 0) throw usage_error("ModPoly: negative exponent");
    out.add_term(m, Scalar(c, out.prime()).value());
    return out;
}

void ModPoly::add_term(const Monomial& m, std::uint64_t c) {
    c %= prime();
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second = (it->second + c) % prime();
    if (it->second == 0) terms_.erase(it);
}

void ModPoly::check_same_context(const ModPoly& o, const char* op) const {
    if (!ctx_->same_as(*o.ctx_))
        throw usage_error(std::string("ModPoly: context mismatch in ") + op);
}

ModPoly& ModPoly::operator+=(const ModPoly& o) {
    check_same_context(o, "+");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

ModPoly& ModPoly::operator-=(const ModPoly& o) {
    check_same_context(o, "-");
    for (const auto& [m, c] : o.terms_) add_term(m, prime() - c);
    return *this;
}

ModPoly ModPoly::operator+(const ModPoly& o) const {
    ModPoly r = *this;
    r += o;
    return r;
}

ModPoly ModPoly::operator-(const ModPoly& o) const {
    ModPoly r = *this;
    r -= o;
    return r;
}

ModPoly ModPoly::operator*(const ModPoly& o) const {
    check_same_context(o, "*");
    ModPoly r(ctx_);
    Monomial m(ctx_->size(), 0);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, static_cast<std::uint64_t>((__uint128_t)ca * cb % prime()));
        }
    }
    return r;
}

ModPoly ModPoly::operator-() const {
    ModPoly r(ctx_);
    for (const auto& [m, c] : terms_) r.add_term(m, prime() - c);
    return r;
}

ModPoly ModPoly::times(long long c) const {
    std::uint64_t cc = Scalar(c, prime()).value();
    ModPoly r(ctx_);
    if (cc == 0) return r;
    for (const auto& [m, coeff] : terms_)
        r.add_term(m, static_cast<std::uint64_t>((__uint128_t)coeff * cc % prime()));
    return r;
}

bool ModPoly::operator==(const ModPoly& o) const {
    if (!ctx_->same_as(*o.ctx_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    for (; a != terms_.end(); ++a, ++b)
        if (a->first != b->first || a->second != b->second) return false;
    return true;
}

Scalar ModPoly::coefficient(const Monomial& m) const {
    if (m.size() != ctx_->size()) throw usage_error("ModPoly: coefficient query with wrong exponent count");
    auto it = terms_.find(m);
    return Scalar(it == terms_.end() ? 0 : static_cast<long long>(it->second), prime());
}

Scalar ModPoly::coefficient_of(std::size_t i, std::size_t j) const {
    ctx_->gen(i);
    ctx_->gen(j);
    Monomial m(ctx_->size(), 0);
    m[i] += 1;
    m[j] += 1;
    return coefficient(m);
}

ModPoly ModPoly::linear_part() const {
    ModPoly r(ctx_);
    for (const auto& [m, c] : terms_) {
        int total = 0;
        for (int e : m) total += e;
        if (total == 1) r.add_term(m, c);
    }
    return r;
}

ModPoly ModPoly::substitute(std::size_t i, const ModPoly& g) const {
    ctx_->gen(i);
    const GenContextPtr& target = g.context();
    if (target->prime() != prime()) throw usage_error("ModPoly: substitute across different primes");
    if (!g.is_zero()) {
        auto d = g.homogeneous_halfdeg();
        if (!d || *d != ctx_->gen(i).halfdeg)
            throw usage_error("ModPoly: substitute for " + ctx_->gen(i).name +
                              " must be homogeneous of halfdeg " + std::to_string(ctx_->gen(i).halfdeg));
    }
    // Map every other generator of this context into the target by name.
    std::vector<int> target_index(ctx_->size(), -1);
    for (std::size_t j = 0; j < ctx_->size(); ++j) {
        if (j == i) continue;
        int t = target->index_of(ctx_->gen(j).name);
        target_index[j] = t;
        if (t >= 0 && target->gen(static_cast<std::size_t>(t)).halfdeg != ctx_->gen(j).halfdeg)
            throw usage_error("ModPoly: substitute grading clash on " + ctx_->gen(j).name);
    }

    std::vector<ModPoly> gpow;  // g^0, g^1, ...
    gpow.push_back(constant(target, 1));
    auto g_to = [&](int e) -> const ModPoly& {
        while (static_cast<int>(gpow.size()) <= e) gpow.push_back(gpow.back() * g);
        return gpow[static_cast<std::size_t>(e)];
    };

    ModPoly out(target);
    for (const auto& [m, c] : terms_) {
        Monomial tm(target->size(), 0);
        bool ok = true;
        for (std::size_t j = 0; j < m.size() && ok; ++j) {
            if (j == i || m[j] == 0) continue;
            if (target_index[j] < 0) {
                throw usage_error("ModPoly: substitute target lacks generator " + ctx_->gen(j).name);
            }
            tm[static_cast<std::size_t>(target_index[j])] += m[j];
        }
        ModPoly term = monomial(target, std::move(tm), static_cast<long long>(c));
        out += term * g_to(m[i]);
    }
    return out;
}

ModPoly ModPoly::with_context(GenContextPtr target) const {
    if (!target) throw usage_error("ModPoly: with_context null target");
    if (target->prime() != prime()) throw usage_error("ModPoly: with_context across different primes");
    if (target->size() != ctx_->size())
        throw usage_error("ModPoly: with_context needs equal generator counts");
    ModPoly out(std::move(target));
    for (const auto& [m, c] : terms_) out.add_term(m, c);
    return out;
}

bool ModPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = monomial_halfdeg(*ctx_, terms_.begin()->first);
    for (const auto& [m, c] : terms_)
        if (monomial_halfdeg(*ctx_, m) != d) return false;
    return true;
}

std::optional<int> ModPoly::homogeneous_halfdeg() const {
    if (terms_.empty() || !is_homogeneous()) return std::nullopt;
    return monomial_halfdeg(*ctx_, terms_.begin()->first);
}

std::string ModPoly::str(bool signed_coeffs) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        long long shown = static_cast<long long>(c);
        bool neg = false;
        if (signed_coeffs && c > prime() / 2) {
            shown = static_cast<long long>(prime() - c);
            neg = true;
        }
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        out += std::to_string(shown);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            out += "*";
            out += ctx_->gen(i).name;
            if (m[i] > 1) {
                out += "^";
                out += std::to_string(m[i]);
            }
        }
    }
    return out;
}

}  // namespace samelson
