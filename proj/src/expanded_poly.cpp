#include "samelson/expanded_poly.hpp"

#include <algorithm>

namespace samelson {

ExpandedPoly::ExpandedPoly(std::uint64_t p, int nvars) : p_(p), nvars_(nvars) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw usage_error("ExpandedPoly: modulus must be an odd prime, got " + std::to_string(p));
    if (nvars < 0) throw usage_error("ExpandedPoly: negative variable count");
}

ExpandedPoly ExpandedPoly::monomial(std::uint64_t p, int nvars, ExpMonomial m, long long c) {
    ExpandedPoly out(p, nvars);
    if (m.empty()) m.assign(static_cast<std::size_t>(nvars), 0);
    if (m.size() != static_cast<std::size_t>(nvars))
        throw usage_error("ExpandedPoly: monomial has wrong exponent count");
    for (int e : m)
        if (e < 0) throw usage_error("ExpandedPoly: negative exponent");
    out.add_term(m, Scalar(c, p).value());
    return out;
}

ExpandedPoly ExpandedPoly::variable(std::uint64_t p, int nvars, int j) {
    if (j < 0 || j >= nvars) throw usage_error("ExpandedPoly: variable index out of range");
    ExpMonomial m(static_cast<std::size_t>(nvars), 0);
    m[static_cast<std::size_t>(j)] = 1;
    return monomial(p, nvars, std::move(m), 1);
}

ExpandedPoly ExpandedPoly::elementary(std::uint64_t p, int nvars, int i) {
    if (i < 0 || i > nvars)
        throw usage_error("ExpandedPoly: elementary index " + std::to_string(i) + " out of range for " +
                          std::to_string(nvars) + " variables");
    ExpandedPoly out(p, nvars);
    if (i == 0) return monomial(p, nvars, ExpMonomial(), 1);
    // Enumerate all i-subsets of {0, ..., nvars-1}.
    std::vector<int> idx(static_cast<std::size_t>(i));
    for (int k = 0; k < i; ++k) idx[static_cast<std::size_t>(k)] = k;
    while (true) {
        ExpMonomial m(static_cast<std::size_t>(nvars), 0);
        for (int k : idx) m[static_cast<std::size_t>(k)] = 1;
        out.add_term(m, 1);
        int k = i - 1;
        while (k >= 0 && idx[static_cast<std::size_t>(k)] == nvars - i + k) --k;
        if (k < 0) break;
        ++idx[static_cast<std::size_t>(k)];
        for (int t = k + 1; t < i; ++t) idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
    }
    return out;
}

ExpandedPoly ExpandedPoly::power_sum_direct(std::uint64_t p, int nvars, int m) {
    if (m < 1) throw usage_error("ExpandedPoly: power_sum_direct needs m >= 1");
    ExpandedPoly out(p, nvars);
    for (int j = 0; j < nvars; ++j) {
        ExpMonomial mono(static_cast<std::size_t>(nvars), 0);
        mono[static_cast<std::size_t>(j)] = m;
        out.add_term(mono, 1);
    }
    return out;
}

void ExpandedPoly::add_term(const ExpMonomial& m, std::uint64_t c) {
    c %= p_;
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second = (it->second + c) % p_;
    if (it->second == 0) terms_.erase(it);
}

void ExpandedPoly::check_compatible(const ExpandedPoly& o, const char* op) const {
    if (p_ != o.p_ || nvars_ != o.nvars_)
        throw usage_error(std::string("ExpandedPoly: operand mismatch in ") + op);
}

ExpandedPoly& ExpandedPoly::operator+=(const ExpandedPoly& o) {
    check_compatible(o, "+");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

ExpandedPoly& ExpandedPoly::operator-=(const ExpandedPoly& o) {
    check_compatible(o, "-");
    for (const auto& [m, c] : o.terms_) add_term(m, p_ - c);
    return *this;
}

ExpandedPoly ExpandedPoly::operator+(const ExpandedPoly& o) const {
    ExpandedPoly r = *this;
    r += o;
    return r;
}

ExpandedPoly ExpandedPoly::operator-(const ExpandedPoly& o) const {
    ExpandedPoly r = *this;
    r -= o;
    return r;
}

ExpandedPoly ExpandedPoly::operator*(const ExpandedPoly& o) const {
    check_compatible(o, "*");
    ExpandedPoly r(p_, nvars_);
    ExpMonomial m(static_cast<std::size_t>(nvars_), 0);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, static_cast<std::uint64_t>((__uint128_t)ca * cb % p_));
        }
    }
    return r;
}

ExpandedPoly ExpandedPoly::times(long long c) const {
    std::uint64_t cc = Scalar(c, p_).value();
    ExpandedPoly r(p_, nvars_);
    if (cc == 0) return r;
    for (const auto& [m, coeff] : terms_)
        r.add_term(m, static_cast<std::uint64_t>((__uint128_t)coeff * cc % p_));
    return r;
}

bool ExpandedPoly::operator==(const ExpandedPoly& o) const {
    return p_ == o.p_ && nvars_ == o.nvars_ && terms_ == o.terms_;
}

Scalar ExpandedPoly::coefficient(const ExpMonomial& m) const {
    if (m.size() != static_cast<std::size_t>(nvars_))
        throw usage_error("ExpandedPoly: coefficient query with wrong exponent count");
    auto it = terms_.find(m);
    return Scalar(it == terms_.end() ? 0 : static_cast<long long>(it->second), p_);
}

ExpandedPoly ExpandedPoly::swap_vars(int a, int b) const {
    if (a < 0 || a >= nvars_ || b < 0 || b >= nvars_)
        throw usage_error("ExpandedPoly: swap_vars index out of range");
    ExpandedPoly r(p_, nvars_);
    for (const auto& [m, c] : terms_) {
        ExpMonomial mm = m;
        std::swap(mm[static_cast<std::size_t>(a)], mm[static_cast<std::size_t>(b)]);
        r.add_term(mm, c);
    }
    return r;
}

std::string ExpandedPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        out += std::to_string(c);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            out += "*y";
            out += std::to_string(i + 1);
            if (m[i] > 1) {
                out += "^";
                out += std::to_string(m[i]);
            }
        }
    }
    return out;
}

ExpandedPoly apply_derivation(const ExpandedPoly& f, int m, long long lambda) {
    if (m < 1) throw usage_error("apply_derivation: exponent must be >= 1");
    std::uint64_t p = f.prime();
    std::uint64_t lam = Scalar(lambda, p).value();
    ExpandedPoly out(p, f.nvars());
    if (lam == 0) return out;
    for (const auto& [mono, c] : f.terms()) {
        for (std::size_t j = 0; j < mono.size(); ++j) {
            int a = mono[j];
            if (a == 0) continue;
            // D(y_j^a) = a * lambda * y_j^(a+m-1), then the rest of the
            // monomial rides along untouched.
            ExpMonomial mm = mono;
            mm[j] = a + m - 1;
            std::uint64_t coeff = static_cast<std::uint64_t>((__uint128_t)c * (static_cast<std::uint64_t>(a) % p) % p);
            coeff = static_cast<std::uint64_t>((__uint128_t)coeff * lam % p);
            out += ExpandedPoly::monomial(p, f.nvars(), std::move(mm), static_cast<long long>(coeff));
        }
    }
    return out;
}

}  // namespace samelson
